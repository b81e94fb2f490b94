//! Generators for extremal kinetic point sets.
//!
//! * `tight`, `tight_ellipse`: every triple is collinear at exactly two times.
//!   Points start on the circle of radius 1 about (-1, 1) and head for the
//!   origin along angles `3π/2 + π/(4i)`; coordinates are rounded to dyadic
//!   rationals and the result is checked by [`verify_tight_certificate`].
//! * `no_collinearity`, `no_collinearity_distinct`: trajectories on one ruling
//!   of `x² + y² = 1 + t²` (or its stretch `x²/4 + y² = 1 + t²`), built
//!   exactly from the rational parametrization of the circle.
//! * `lower_bound`: many simultaneous collisions on two vertical lines, or a
//!   few multi-point collisions at time zero.
//! * `random`: seeded rational scenes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::exact::{signum, Rational};
use crate::kinematics::{collinearity_polynomial, KineticPoint, Scene, SceneMeta, Vec2};

pub const DEFAULT_PRECISION_BITS: u32 = 40;
/// f64 trigonometry carries about 52 significant bits.
pub const MAX_PRECISION_BITS: u32 = 52;
pub const DEFAULT_COORD_BOUND: i64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Tight,
    TightEllipse,
    NoCollinearity,
    NoCollinearityDistinct,
    LowerBound,
    Random,
}

impl Construction {
    pub const ALL: [Construction; 6] = [
        Construction::Tight,
        Construction::TightEllipse,
        Construction::NoCollinearity,
        Construction::NoCollinearityDistinct,
        Construction::LowerBound,
        Construction::Random,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Construction::Tight => "tight",
            Construction::TightEllipse => "tight_ellipse",
            Construction::NoCollinearity => "no_collinearity",
            Construction::NoCollinearityDistinct => "no_collinearity_distinct",
            Construction::LowerBound => "lower_bound",
            Construction::Random => "random",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Construction {
    type Err = ConstructionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Construction::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| ConstructionError::Unknown(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("unknown construction `{0}`")]
    Unknown(String),
    #[error("{construction} needs n >= {min}, got {n}")]
    TooFewPoints {
        construction: Construction,
        n: usize,
        min: usize,
    },
    #[error("k must be at least 3, got {0}")]
    KTooSmall(usize),
    #[error("lower_bound needs a k parameter")]
    MissingK,
    #[error("precision_bits must be in 1..={MAX_PRECISION_BITS}, got {0}")]
    Precision(u32),
    #[error("coord_bound must be positive, got {0}")]
    CoordBound(i64),
}

/// Parameters for [`generate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    pub construction: Construction,
    pub n: usize,
    pub k: Option<usize>,
    pub precision_bits: u32,
    pub seed: u64,
    pub coord_bound: i64,
}

impl ConstructionParams {
    pub fn new(construction: Construction, n: usize) -> Self {
        ConstructionParams {
            construction,
            n,
            k: None,
            precision_bits: DEFAULT_PRECISION_BITS,
            seed: 0,
            coord_bound: DEFAULT_COORD_BOUND,
        }
    }
}

pub fn generate(params: &ConstructionParams) -> Result<Scene, ConstructionError> {
    let n = params.n;
    match params.construction {
        Construction::Tight => gen_tight(n, params.precision_bits),
        Construction::TightEllipse => gen_tight_ellipse(n, params.precision_bits),
        Construction::NoCollinearity => gen_no_collinearity(n),
        Construction::NoCollinearityDistinct => gen_no_collinearity_distinct(n),
        Construction::LowerBound => gen_lower_bound(n, params.k.ok_or(ConstructionError::MissingK)?),
        Construction::Random => gen_random(n, params.seed, params.coord_bound),
    }
}

fn meta(construction: Construction, n: usize) -> SceneMeta {
    let mut m = SceneMeta::new();
    m.insert("construction".into(), json!(construction.as_str()));
    m.insert("n".into(), json!(n));
    for key in ["k", "precision_bits", "seed"] {
        m.insert(key.into(), serde_json::Value::Null);
    }
    m.insert("discarded_points".into(), json!(0));
    m
}

fn scene(points: Vec<KineticPoint>, meta: SceneMeta) -> Scene {
    Scene::new(points, meta).expect("generators produce distinct points")
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rounds `x` to the nearest multiple of `2^-bits`.
fn dyadic(x: f64, bits: u32) -> Rational {
    let scale = (1u64 << bits) as f64;
    let num = (x * scale).round() as i64;
    Rational::new(BigInt::from(num), BigInt::one() << bits)
}

fn tight_angle(i: usize) -> f64 {
    use std::f64::consts::PI;
    1.5 * PI + PI / (4.0 * i as f64)
}

fn tight_family(
    construction: Construction,
    n: usize,
    bits: u32,
    speed: impl Fn(f64) -> f64,
) -> Result<Scene, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooFewPoints { construction, n, min: 3 });
    }
    if bits == 0 || bits > MAX_PRECISION_BITS {
        return Err(ConstructionError::Precision(bits));
    }
    let points = (1..=n)
        .map(|i| {
            let theta = tight_angle(i);
            let (sin, cos) = theta.sin_cos();
            // Circle about (-1, 1) meets the ray back from the origin where
            // s² - 2 s (cos θ - sin θ) + 1 = 0; take the nearer intersection.
            let c = cos - sin;
            let s = c - (c * c - 1.0).sqrt();
            let v = speed(theta);
            KineticPoint::new(
                format!("p{i}"),
                Vec2::new(dyadic(-s * cos, bits), dyadic(-s * sin, bits)),
                Vec2::new(dyadic(v * cos, bits), dyadic(v * sin, bits)),
            )
        })
        .collect();
    let mut m = meta(construction, n);
    m.insert("precision_bits".into(), json!(bits));
    // Angles decrease with the index, so ascending angle is descending index.
    let order: Vec<String> = (1..=n).rev().map(|i| format!("p{i}")).collect();
    m.insert("angle_order".into(), json!(order));
    Ok(scene(points, m))
}

/// Unit-speed points whose triples are each collinear twice.
pub fn gen_tight(n: usize, precision_bits: u32) -> Result<Scene, ConstructionError> {
    tight_family(Construction::Tight, n, precision_bits, |_| 1.0)
}

/// [`gen_tight`] with speed `1 / (1 - cos θ / 2)`, so that far from the origin
/// the points spread along an ellipse.
pub fn gen_tight_ellipse(n: usize, precision_bits: u32) -> Result<Scene, ConstructionError> {
    tight_family(Construction::TightEllipse, n, precision_bits, |theta| {
        1.0 / (1.0 - theta.cos() / 2.0)
    })
}

/// Parameter `s_i = 1 + 1/i` of the rational circle point
/// `((1 - s²)/(1 + s²), 2s/(1 + s²))`.
fn ruling_point(i: usize, x_stretch: i64) -> KineticPoint {
    let s = Rational::one() + Rational::new(BigInt::one(), BigInt::from(i));
    let s2 = &s * &s;
    let denom = Rational::one() + &s2;
    let cos = (Rational::one() - &s2) / &denom;
    let sin = (&s * int(2)) / &denom;
    let k = int(x_stretch);
    KineticPoint::new(
        format!("p{i}"),
        Vec2::new(&cos * &k, sin.clone()),
        Vec2::new(&sin * &k, -cos),
    )
}

fn no_collinearity_family(construction: Construction, n: usize, stretch: i64) -> Result<Scene, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::TooFewPoints { construction, n, min: 1 });
    }
    let points = (1..=n).map(|i| ruling_point(i, stretch)).collect();
    let mut m = meta(construction, n);
    m.insert("circle_parameter".into(), json!("s_i = 1 + 1/i"));
    m.insert("x_stretch".into(), json!(stretch));
    Ok(scene(points, m))
}

/// Unit-speed points on one ruling of `x² + y² = 1 + t²`; never three collinear.
pub fn gen_no_collinearity(n: usize) -> Result<Scene, ConstructionError> {
    no_collinearity_family(Construction::NoCollinearity, n, 1)
}

/// [`gen_no_collinearity`] stretched by `(x, y) -> (2x, y)`: pairwise distinct
/// speeds and directions, still never three collinear.
pub fn gen_no_collinearity_distinct(n: usize) -> Result<Scene, ConstructionError> {
    no_collinearity_family(Construction::NoCollinearityDistinct, n, 2)
}

/// Lower-bound construction for k-collinearities.
///
/// For `n >= k²`, `⌊k/2⌋` families on `x = 0` and `⌈k/2⌉` on `x = 1`, each of
/// `m = ⌊n/k⌋` points at heights `1..=m`, with family `i` moving up at speed
/// `i - 1`; leftover points are discarded. For `k <= n < k²`, `⌊n/k⌋` clusters
/// at `(c, c²)` whose members scatter with velocities `(j, j²)`.
pub fn gen_lower_bound(n: usize, k: usize) -> Result<Scene, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::KTooSmall(k));
    }
    if n < k {
        return Err(ConstructionError::TooFewPoints {
            construction: Construction::LowerBound,
            n,
            min: k,
        });
    }
    let mut m = meta(Construction::LowerBound, n);
    m.insert("k".into(), json!(k));
    let mut points = Vec::new();
    if n >= k * k {
        let per_family = n / k;
        let (left, right) = (k / 2, k - k / 2);
        for (side, x, families) in [("a", 0, left), ("b", 1, right)] {
            for i in 1..=families {
                for j in 1..=per_family {
                    points.push(KineticPoint::new(
                        format!("{side}{i}_{j}"),
                        Vec2::new(int(x), int(j as i64)),
                        Vec2::new(int(0), int(i as i64 - 1)),
                    ));
                }
            }
        }
        m.insert("regime".into(), json!("two_lines"));
        m.insert("family_size".into(), json!(per_family));
    } else {
        let clusters = n / k;
        let (base, extra) = (n / clusters, n % clusters);
        let mut sizes = Vec::with_capacity(clusters);
        for c in 0..clusters {
            let size = base + usize::from(c < extra);
            sizes.push(size);
            for j in 1..=size {
                let (c, j) = (c as i64, j as i64);
                points.push(KineticPoint::new(
                    format!("c{c}_{j}"),
                    Vec2::new(int(c), int(c * c)),
                    Vec2::new(int(j), int(j * j)),
                ));
            }
        }
        m.insert("regime".into(), json!("clusters"));
        m.insert("cluster_sizes".into(), json!(sizes));
    }
    m.insert("discarded_points".into(), json!(n - points.len()));
    Ok(scene(points, m))
}

/// Seeded scene with numerators in `[-coord_bound, coord_bound]` and
/// denominators in `1..=4`.
pub fn gen_random(n: usize, seed: u64, coord_bound: i64) -> Result<Scene, ConstructionError> {
    random_scene(n, seed, coord_bound, 4)
}

/// Seeded scene with integer coordinates in `[-coord_bound, coord_bound]`.
/// Small bounds make collisions and always-collinear groups common.
pub fn gen_random_lattice(n: usize, seed: u64, coord_bound: i64) -> Result<Scene, ConstructionError> {
    random_scene(n, seed, coord_bound, 1)
}

fn random_scene(n: usize, seed: u64, coord_bound: i64, max_den: i64) -> Result<Scene, ConstructionError> {
    if coord_bound < 1 {
        return Err(ConstructionError::CoordBound(coord_bound));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        Rational::new(
            BigInt::from(rng.random_range(-coord_bound..=coord_bound)),
            BigInt::from(rng.random_range(1..=max_den)),
        )
    };
    let mut points: Vec<KineticPoint> = Vec::with_capacity(n);
    while points.len() < n {
        let pos = Vec2::new(draw(&mut rng), draw(&mut rng));
        let vel = Vec2::new(draw(&mut rng), draw(&mut rng));
        let candidate = KineticPoint::new(format!("p{}", points.len()), pos, vel);
        if points.iter().all(|p| !p.same_motion(&candidate)) {
            points.push(candidate);
        }
    }
    let mut m = meta(Construction::Random, n);
    m.insert("seed".into(), json!(seed));
    m.insert("coord_bound".into(), json!(coord_bound));
    m.insert("max_denominator".into(), json!(max_den));
    Ok(scene(points, m))
}

/// Default probe time `2^20` for [`verify_tight_certificate`].
pub fn default_certificate_time() -> Rational {
    Rational::from_integer(BigInt::one() << 20)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CertificateReport {
    pub pass: bool,
    pub triples_checked: usize,
    pub failing_triples: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("scene was not produced by a tight construction (construction: {0})")]
    WrongConstruction(String),
}

/// Checks that every triple changes orientation twice: the determinant has a
/// nonzero leading coefficient and its sign at `0` is opposite to its
/// (common) sign at `T` and `-T`.
pub fn verify_tight_certificate(scene: &Scene, probe: &Rational) -> Result<CertificateReport, CertificateError> {
    let construction = scene
        .meta()
        .get("construction")
        .and_then(|v| v.as_str())
        .unwrap_or("<none>");
    if construction != Construction::Tight.as_str() && construction != Construction::TightEllipse.as_str() {
        return Err(CertificateError::WrongConstruction(construction.to_string()));
    }
    let pts = scene.points();
    let n = pts.len();
    let mut failing = Vec::new();
    let mut checked = 0;
    let at = |c: &(Rational, Rational, Rational), t: &Rational| signum(&(&c.0 * t * t + &c.1 * t + &c.2));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                checked += 1;
                let c = collinearity_polynomial(&pts[i], &pts[j], &pts[k]);
                let s0 = signum(&c.2);
                let far = at(&c, probe);
                let ok = !c.0.is_zero() && s0 != 0 && far == at(&c, &-probe) && far == -s0;
                if !ok {
                    failing.push([pts[i].id.clone(), pts[j].id.clone(), pts[k].id.clone()]);
                }
            }
        }
    }
    Ok(CertificateReport {
        pass: failing.is_empty(),
        triples_checked: checked,
        failing_triples: failing,
    })
}

/// All velocity magnitudes differ (compared exactly through squared speeds).
pub fn speeds_pairwise_distinct(scene: &Scene) -> bool {
    let sq: Vec<Rational> = scene.points().iter().map(|p| p.vel.dot(&p.vel)).collect();
    pairwise(&sq, |a, b| a != b)
}

/// No two velocity vectors are parallel.
pub fn directions_pairwise_distinct(scene: &Scene) -> bool {
    let vels: Vec<&Vec2> = scene.points().iter().map(|p| &p.vel).collect();
    pairwise(&vels, |a, b| !a.cross(b).is_zero())
}

fn pairwise<T>(items: &[T], ok: impl Fn(&T, &T) -> bool) -> bool {
    items
        .iter()
        .enumerate()
        .all(|(i, a)| items[i + 1..].iter().all(|b| ok(a, b)))
}
