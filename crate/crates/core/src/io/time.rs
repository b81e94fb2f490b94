use num_bigint::BigInt;

use crate::exact::{parse_rational, AlgebraicTime, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse time `{0}`: expected `p/q`, an integer, a decimal, or `(p + q*sqrt(d))/r`")]
pub struct TimeParseError(pub String);

fn int(s: &str) -> Option<BigInt> {
    s.trim().parse().ok()
}

fn decimal(s: &str) -> Option<Rational> {
    let (whole, frac) = s.split_once('.')?;
    let negative = whole.trim_start().starts_with('-');
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let whole = if whole.is_empty() || whole == "-" { BigInt::from(0) } else { int(whole)? };
    let scale = BigInt::from(10).pow(frac.len() as u32);
    let frac = Rational::new(int(frac)?, scale);
    let whole = Rational::from_integer(whole);
    Some(if negative { whole - frac } else { whole + frac })
}

fn quadratic(s: &str) -> Option<AlgebraicTime> {
    // (p + q*sqrt(d))/r, with `-` allowed in place of `+`.
    let body = s.strip_prefix('(')?;
    let (inner, r) = body.rsplit_once(")/")?;
    let inner = inner.strip_suffix(')')?;
    let (head, d) = inner.rsplit_once("*sqrt(")?;
    let [p, sign, q] = head.split_whitespace().collect::<Vec<_>>()[..] else {
        return None;
    };
    let q = match sign {
        "+" => int(q)?,
        "-" => -int(q)?,
        _ => return None,
    };
    AlgebraicTime::from_parts(int(p)?, q, int(d)?, int(r)?).ok()
}

/// Parses a time given on the command line.
pub fn parse_time(text: &str) -> Result<AlgebraicTime, TimeParseError> {
    let s = text.trim();
    let err = || TimeParseError(text.to_string());
    if s.contains("sqrt") {
        return quadratic(s).ok_or_else(err);
    }
    if s.contains('.') {
        return decimal(s).map(AlgebraicTime::from).ok_or_else(err);
    }
    parse_rational(s).map(AlgebraicTime::from).map_err(|_| err())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn forms() {
        assert_eq!(parse_time("3/6").unwrap(), ratio(1, 2).into());
        assert_eq!(parse_time("-4").unwrap(), rat(-4).into());
        assert_eq!(parse_time("0.25").unwrap(), ratio(1, 4).into());
        assert_eq!(parse_time("-1.5").unwrap(), ratio(-3, 2).into());
        assert_eq!(parse_time("-0.5").unwrap(), ratio(-1, 2).into());
        assert!(parse_time("1.").is_err());
        assert!(parse_time("x").is_err());
    }

    #[test]
    fn quadratic_round_trip() {
        for (p, q, d, r) in [(1, 1, 2, 1), (3, -2, 5, 7), (-4, 1, 3, 2)] {
            let t = AlgebraicTime::from_parts(p.into(), q.into(), d.into(), r.into()).unwrap();
            assert_eq!(parse_time(&t.to_string()).unwrap(), t, "{t}");
        }
        assert!(parse_time("(1 + 1*sqrt(2)").is_err());
    }
}
