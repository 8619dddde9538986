//! Dense univariate polynomials over an exact field, generic enough to serve
//! both rational coefficients and number-field coefficients.

use super::Rational;
use num::{One, Signed, Zero};

/// Minimal exact-field interface. Instance methods so that coefficient types
/// carrying context (number-field elements) fit without global constructors.
pub trait FieldOps: Clone + PartialEq + std::fmt::Debug {
    fn f_zero(&self) -> Self;
    fn f_one(&self) -> Self;
    fn f_add(&self, other: &Self) -> Self;
    fn f_sub(&self, other: &Self) -> Self;
    fn f_mul(&self, other: &Self) -> Self;
    fn f_neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn f_inv(&self) -> Self;
    fn f_is_zero(&self) -> bool;
}

impl FieldOps for Rational {
    fn f_zero(&self) -> Self {
        Rational::zero()
    }
    fn f_one(&self) -> Self {
        Rational::one()
    }
    fn f_add(&self, other: &Self) -> Self {
        self + other
    }
    fn f_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn f_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// `coeffs[i]` is the coefficient of `x^i`; the top coefficient is nonzero.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: FieldOps> {
    pub coeffs: Vec<F>,
}

impl<F: FieldOps> UniPoly<F> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.f_is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.f_is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.f_zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lead(&self) -> &F {
        self.coeffs.last().expect("lead of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.f_add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.f_neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].f_zero();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.f_is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].f_add(&a.f_mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn mul_scalar(&self, s: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.f_mul(s)).collect())
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < div.degree() {
            return (Self::zero(), self.clone());
        }
        let lead_inv = div.lead().f_inv();
        let mut rem = self.coeffs.clone();
        let dd = div.degree().unwrap();
        let mut quot = vec![self.coeffs[0].f_zero(); self.coeffs.len() - dd];
        let mut top = rem.len();
        while top > dd {
            let k = top - 1;
            let c = rem[k].clone();
            if !c.f_is_zero() {
                let q = c.f_mul(&lead_inv);
                for (i, dc) in div.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = rem[idx].f_sub(&q.f_mul(dc));
                }
                quot[k - dd] = q;
            }
            top -= 1;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    /// Monic form. Panics on zero.
    pub fn monic(&self) -> Self {
        let inv = self.lead().f_inv();
        self.mul_scalar(&inv)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut acc = c.f_zero();
            for _ in 0..i {
                acc = acc.f_add(c);
            }
            out.push(acc);
        }
        Self::from_coeffs(out)
    }

    pub fn eval(&self, x: &F) -> F {
        if self.is_zero() {
            return x.f_zero();
        }
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.f_mul(x).f_add(c);
        }
        acc
    }

    /// Squarefree part `p / gcd(p, p')` (characteristic zero).
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    /// Substitute `x -> x + a`.
    pub fn shift(&self, a: &F) -> Self {
        // Horner: p(x+a) built from the top coefficient down.
        let mut acc = Self::zero();
        let shifted = Self::from_coeffs(vec![a.clone(), a.f_one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shifted).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Substitute `x -> c*x`.
    pub fn scale_arg(&self, c: &F) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut pw = c.f_one();
        for a in &self.coeffs {
            out.push(a.f_mul(&pw));
            pw = pw.f_mul(c);
        }
        Self::from_coeffs(out)
    }

    /// Polynomial composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }
}

impl UniPoly<Rational> {
    /// Parallel evaluation on a rational interval; sound but not tight.
    pub fn eval_interval(&self, iv: &super::interval::Interval) -> super::interval::Interval {
        use super::interval::Interval;
        if self.is_zero() {
            return Interval::point(Rational::zero());
        }
        let mut acc = Interval::point(self.coeffs.last().unwrap().clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(iv).add(&Interval::point(c.clone()));
        }
        acc
    }

    /// Exact sign of `p(x)` at a rational point.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        super::rat_sign(&self.eval(x))
    }

    /// Cauchy root bound: all real roots lie in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        if self.is_zero() || self.degree() == Some(0) {
            return Rational::one();
        }
        let lead = self.lead().clone();
        let mut maxabs = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = (c / &lead).abs();
            if a > maxabs {
                maxabs = a;
            }
        }
        maxabs + Rational::one()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        use super::rat_to_string;
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if i == 0 {
                rat_to_string(&mag)
            } else {
                let v = if i == 1 { var.to_string() } else { format!("{}^{}", var, i) };
                if mag.is_one() {
                    v
                } else {
                    format!("{}*{}", rat_to_string(&mag), v)
                }
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{}", body));
                } else {
                    parts.push(body);
                }
            } else if c.is_negative() {
                parts.push(format!(" - {}", body));
            } else {
                parts.push(format!(" + {}", body));
            }
        }
        parts.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn divrem_exact() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd(x^2-2, x^4-4) = x^2-2
        let a = p(&[-2, 0, 1]);
        let b = p(&[-4, 0, 0, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-2, 0, 1]));
    }

    #[test]
    fn derivative_and_eval() {
        let f = p(&[1, -3, 0, 2]); // 2x^3 - 3x + 1
        assert_eq!(f.derivative(), p(&[-3, 0, 6]));
        assert_eq!(f.eval(&rat_int(2)), rat_int(11));
        assert_eq!(f.eval(&rat(1, 2)), rat(-1, 4));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let f = p(&[2, -3, 0, 1]);
        let s = f.squarefree_part();
        // (x-1)(x+2) = x^2 + x - 2
        assert_eq!(s, p(&[-2, 1, 1]));
    }

    #[test]
    fn shift_matches_eval() {
        let f = p(&[1, 2, 3]);
        let g = f.shift(&rat_int(5));
        assert_eq!(g.eval(&rat_int(0)), f.eval(&rat_int(5)));
        assert_eq!(g.eval(&rat_int(-2)), f.eval(&rat_int(3)));
    }
}
