//! Exact scalar arithmetic: arbitrary-precision rationals and real algebraic
//! numbers represented by a minimal polynomial plus an isolating interval.

pub mod algebraic;
pub mod interval;
pub mod isolation;
pub mod numberfield;
pub mod unifactor;
pub mod unipoly;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Exact rational scalar. Always stored normalized (gcd 1, positive denominator).
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0, or 1.
pub fn rat_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn rat_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` with an optional leading sign.
pub fn rat_from_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Approximate a rational by the nearest f64 (best effort, for diagnostics
/// and numeric cross-checks only; never used to decide exact questions).
pub fn rat_to_f64(r: &Rational) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // Scale down huge operands to stay inside f64 range.
    let bits = n.bits().max(d.bits());
    if bits <= 52 {
        let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
        let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
        nf / df
    } else {
        let shift = bits - 52;
        let n2 = n >> shift;
        let d2 = d >> shift;
        let nf = n2.to_string().parse::<f64>().unwrap_or(f64::NAN);
        let df = d2.to_string().parse::<f64>().unwrap_or(f64::NAN);
        nf / df
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arith_is_exact_and_normalized() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-1, 3) * rat_int(3), rat_int(-1));
        assert_eq!(rat_to_string(&rat(2, 4)), "1/2");
        assert_eq!(rat_to_string(&rat(-4, 2)), "-2");
    }

    #[test]
    fn rational_division_by_zero_is_caller_checked() {
        let z = rat_int(0);
        assert!(z.is_zero());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5", "-7", "3/4", "-12/5"] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert!(rat_from_str("1/0").is_none());
        assert!(rat_from_str("x").is_none());
    }
}
