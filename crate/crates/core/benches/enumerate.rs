use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kinetic_collinear::constructions::{gen_lower_bound, gen_random, gen_tight};
use kinetic_collinear::events::enumerate_events_with;
use kinetic_collinear::kinematics::Scene;
use kinetic_collinear::par::Execution;

fn scenes() -> Vec<(String, Scene)> {
    vec![
        ("tight_8".into(), gen_tight(8, 40).unwrap()),
        ("random_12".into(), gen_random(12, 1, 100).unwrap()),
        ("lower_bound_25_5".into(), gen_lower_bound(25, 5).unwrap()),
    ]
}

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_events");
    group.sample_size(10);
    for (name, scene) in scenes() {
        for (label, mode) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, &name), &scene, |b, s| {
                b.iter(|| enumerate_events_with(s, 3, mode))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumerate);
criterion_main!(benches);
