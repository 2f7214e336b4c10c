//! Small integer helpers shared by every module.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rational;

/// Greatest common divisor of a slice; `0` for an empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| acc.gcd(&v))
}

/// Least common multiple of a slice; `1` for an empty slice.
pub fn lcm_all(values: &[u64]) -> u64 {
    values.iter().fold(1, |acc, &v| acc.lcm(&v))
}

/// Inverse of `k` modulo `m` in `[0, m)`, or `None` when `gcd(k, m) != 1`.
///
/// For `m = 1` every residue is `0`, which is returned.
pub fn mod_inverse(k: i64, m: i64) -> Option<i64> {
    if m <= 0 {
        return None;
    }
    let ext = k.rem_euclid(m).extended_gcd(&m);
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m))
}

/// Builds the exact rational `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Exact rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Converts an integral rational to `i64`, or `None` if it is fractional or too large.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.to_integer()).ok()
}

/// Formats a rational as `"p/q"` with an explicit denominator, as the JSON schema requires.
pub fn format_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a bare integer `"p"` into a rational.
pub fn parse_pq(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// `true` if the rational equals one.
pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_lcm() {
        assert_eq!(gcd_all(&[12, 18, 30]), 6);
        assert_eq!(gcd_all(&[]), 0);
        assert_eq!(lcm_all(&[4, 6]), 12);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(6, 11), Some(2));
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(-1, 5), Some(4));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    #[test]
    fn pq_round_trip() {
        let q = ratio(-6, 4);
        assert_eq!(format_pq(&q), "-3/2");
        assert_eq!(parse_pq("-3/2"), Some(q));
        assert_eq!(parse_pq("7"), Some(int(7)));
        assert_eq!(parse_pq("1/0"), None);
        assert_eq!(format_pq(&int(5)), "5/1");
    }
}
