//! Closed rational interval arithmetic, used to pin down signs of algebraic
//! expressions before falling back to further isolating-interval refinement.

use super::{rat_sign, Rational};
use num::Zero;

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval::new(lo, hi)
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        self.mul(&Interval::point(k.clone()))
    }

    /// Sign if the interval excludes zero, else None.
    pub fn definite_sign(&self) -> Option<i32> {
        if rat_sign(&self.lo) > 0 {
            Some(1)
        } else if rat_sign(&self.hi) < 0 {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Largest absolute value attained on the interval.
    pub fn abs_bound(&self) -> Rational {
        let a = if rat_sign(&self.lo) < 0 { -self.lo.clone() } else { self.lo.clone() };
        let b = if rat_sign(&self.hi) < 0 { -self.hi.clone() } else { self.hi.clone() };
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn mul_signs() {
        let a = Interval::new(rat(-1, 1), rat(2, 1));
        let b = Interval::new(rat(3, 1), rat(4, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-4, 1));
        assert_eq!(p.hi, rat(8, 1));
        assert_eq!(p.definite_sign(), None);
        let c = Interval::new(rat(1, 2), rat(1, 1));
        assert_eq!(c.definite_sign(), Some(1));
    }
}
