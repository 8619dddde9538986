//! Real algebraic numbers: an irreducible minimal polynomial together with an
//! isolating interval. Comparisons are exact; no floating-point decisions.

use super::isolation::{count_roots, refine_step, sturm_chain};
use super::unifactor::factor_unipoly;
use super::unipoly::UniPoly;
use super::{rat, rat_to_f64, rat_to_string, Rational};
use num::{One, Zero};
use std::cmp::Ordering;

/// Hard cap on minimal-polynomial degree; larger extensions surface as errors
/// so callers can degrade to an Unknown verdict instead of looping.
pub const DEGREE_CAP: usize = 8;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum AlgebraicError {
    #[error("interval does not isolate exactly one real root (found {0})")]
    NotIsolating(usize),
    #[error("extension degree {0} exceeds cap {cap}", cap = DEGREE_CAP)]
    DegreeCapExceeded(usize),
}

/// A real algebraic number.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    /// Monic irreducible minimal polynomial over the rationals.
    minpoly: UniPoly<Rational>,
    /// Open isolating interval; endpoints are not roots.
    interval: (Rational, Rational),
}

impl AlgebraicReal {
    pub fn from_rational(r: Rational) -> Self {
        let minpoly = UniPoly::from_coeffs(vec![-r.clone(), Rational::one()]);
        let interval = (&r - rat(1, 1), &r + rat(1, 1));
        AlgebraicReal { minpoly, interval }
    }

    /// Build from a squarefree polynomial and an interval isolating exactly
    /// one of its real roots. The stored minimal polynomial is the unique
    /// irreducible factor owning that root.
    pub fn from_squarefree(
        p: &UniPoly<Rational>,
        interval: (Rational, Rational),
    ) -> Result<Self, AlgebraicError> {
        let sf = p.squarefree_part();
        // Nudge endpoints off roots so Sturm counts are valid. The inward
        // nudge halves each time, so a strictly interior root survives.
        let (mut lo, mut hi) = interval;
        let mut step = (&hi - &lo) / rat(16, 1);
        while sf.sign_at(&lo) == 0 {
            lo = &lo + &step;
            step = &step / rat(2, 1);
        }
        step = (&hi - &lo) / rat(16, 1);
        while sf.sign_at(&hi) == 0 {
            hi = &hi - &step;
            step = &step / rat(2, 1);
        }
        let interval = (lo, hi);
        let chain = sturm_chain(&sf);
        let n = count_roots(&chain, &interval.0, &interval.1);
        if n != 1 {
            return Err(AlgebraicError::NotIsolating(n));
        }
        let factors = factor_unipoly(p);
        let mut iv = interval;
        loop {
            let mut holders: Vec<&UniPoly<Rational>> = Vec::new();
            for (f, _) in &factors {
                let fc = sturm_chain(f);
                if count_roots(&fc, &iv.0, &iv.1) > 0 {
                    holders.push(f);
                }
            }
            if holders.len() == 1 {
                let f = holders[0].clone();
                if f.degree().unwrap_or(0) > DEGREE_CAP {
                    return Err(AlgebraicError::DegreeCapExceeded(f.degree().unwrap()));
                }
                return Ok(AlgebraicReal { minpoly: f, interval: iv });
            }
            iv = refine_step(&sf, &iv);
        }
    }

    pub fn minpoly(&self) -> &UniPoly<Rational> {
        &self.minpoly
    }

    pub fn interval(&self) -> &(Rational, Rational) {
        &self.interval
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    /// Exact rational value when the degree is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.degree() == 1 {
            Some(-(self.minpoly.coeffs[0].clone() / self.minpoly.coeffs[1].clone()))
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_zero())
    }

    /// Shrink the isolating interval below the requested width.
    pub fn refined(&self, eps: &Rational) -> AlgebraicReal {
        if let Some(r) = self.as_rational() {
            return AlgebraicReal {
                minpoly: self.minpoly.clone(),
                interval: (&r - eps, &r + eps),
            };
        }
        let iv = super::isolation::refine_to_width(&self.minpoly, &self.interval, eps);
        AlgebraicReal { minpoly: self.minpoly.clone(), interval: iv }
    }

    pub fn approx_f64(&self) -> f64 {
        let r = self.refined(&rat(1, 1_000_000_000));
        (rat_to_f64(&r.interval.0) + rat_to_f64(&r.interval.1)) / 2.0
    }

    /// Exact trichotomy against another algebraic real.
    pub fn compare(&self, other: &AlgebraicReal) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(&b);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let same_minpoly = a.minpoly == b.minpoly;
        loop {
            if a.interval.1 <= b.interval.0 {
                // `a`'s root below `b`'s; equality impossible once disjoint,
                // except equal endpoints which are non-roots.
                return Ordering::Less;
            }
            if b.interval.1 <= a.interval.0 {
                return Ordering::Greater;
            }
            if same_minpoly {
                // Overlapping intervals and a shared irreducible minimal
                // polynomial: equal iff the hull still isolates one root.
                let hull_lo = a.interval.0.clone().min(b.interval.0.clone());
                let hull_hi = a.interval.1.clone().max(b.interval.1.clone());
                let chain = sturm_chain(&a.minpoly);
                if count_roots(&chain, &hull_lo, &hull_hi) == 1 {
                    return Ordering::Equal;
                }
            }
            a = AlgebraicReal {
                minpoly: a.minpoly.clone(),
                interval: refine_step(&a.minpoly, &a.interval),
            };
            b = AlgebraicReal {
                minpoly: b.minpoly.clone(),
                interval: refine_step(&b.minpoly, &b.interval),
            };
        }
    }

    /// Sign of the number: -1, 0, or 1.
    pub fn sign(&self) -> i32 {
        self.compare(&AlgebraicReal::from_rational(Rational::zero())) as i32
    }

    /// Canonical text: exact rational, or `root(<minpoly in t>, lo, hi)` with
    /// the interval refined to width <= 1/16 for readability.
    pub fn to_display_string(&self) -> String {
        if let Some(r) = self.as_rational() {
            return rat_to_string(&r);
        }
        let refined = self.refined(&rat(1, 16));
        format!(
            "root({}, {}, {})",
            refined.minpoly.to_string_in("t"),
            rat_to_string(&refined.interval.0),
            rat_to_string(&refined.interval.1)
        )
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat_int;

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn sqrt2() -> AlgebraicReal {
        AlgebraicReal::from_squarefree(&p(&[-2, 0, 1]), (rat_int(1), rat_int(2))).unwrap()
    }

    #[test]
    fn sqrt2_versus_nearby_rationals() {
        // Expected orderings frozen from the bisection oracle below:
        // (3/2)^2 = 9/4 > 2 and (7/5)^2 = 49/25 < 2.
        let a = sqrt2();
        let b = AlgebraicReal::from_rational(rat(3, 2));
        assert_eq!(a.compare(&b), Ordering::Less);
        let c = AlgebraicReal::from_rational(rat(7, 5));
        assert_eq!(a.compare(&c), Ordering::Greater);

        // Independent oracle: bisect [1,2] on x^2-2 with exact signs until the
        // bracket separates from each comparand.
        let f = p(&[-2, 0, 1]);
        let (mut lo, mut hi) = (rat_int(1), rat_int(2));
        for _ in 0..20 {
            let mid = (&lo + &hi) / rat_int(2);
            if f.sign_at(&mid) < 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!(hi < rat(3, 2));
        assert!(lo > rat(7, 5));
    }

    #[test]
    fn identity_is_equal() {
        let a = sqrt2();
        assert_eq!(a.compare(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn same_root_through_different_polynomials() {
        // Root of x^4 - 4 in (1, 2) equals root of x^2 - 2 in (1, 2):
        // gcd(x^2-2, x^4-4) = x^2-2 carries the shared root.
        let a = sqrt2();
        let b = AlgebraicReal::from_squarefree(&p(&[-4, 0, 0, 0, 1]), (rat_int(1), rat_int(2)))
            .unwrap();
        assert_eq!(a.minpoly(), b.minpoly());
        assert_eq!(a.compare(&b), Ordering::Equal);
    }

    #[test]
    fn refinement_preserves_comparisons() {
        let a = sqrt2();
        let b = AlgebraicReal::from_rational(rat(141, 100));
        let before = a.compare(&b);
        let ar = a.refined(&rat(1, 1 << 20));
        assert_eq!(ar.compare(&b), before);
    }

    #[test]
    fn display_forms() {
        assert_eq!(AlgebraicReal::from_rational(rat(-1, 3)).to_display_string(), "-1/3");
        let s = sqrt2().to_display_string();
        assert!(s.starts_with("root(t^2 - 2"), "{s}");
    }

    #[test]
    fn non_isolating_interval_rejected() {
        let err = AlgebraicReal::from_squarefree(&p(&[-2, 0, 1]), (rat_int(-2), rat_int(2)));
        assert!(matches!(err, Err(AlgebraicError::NotIsolating(2))));
    }
}
