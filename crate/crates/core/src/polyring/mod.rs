//! Multivariate polynomials over exact rationals: named-variable rings,
//! monomial orders, arithmetic, differentiation, substitution, evaluation,
//! and factorization over Q.

pub mod factor;
pub mod parse;

use crate::numeric::{rat_sign, rat_to_string, Rational};
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("binding for `{0}` has a zero denominator")]
    ZeroDenominatorBinding(String),
    #[error("point length {0} does not match variable count {1}")]
    PointLength(usize, usize),
    #[error("factorization degree cap exceeded (substituted degree {0})")]
    FactorDegreeCapExceeded(usize),
    #[error("cannot factor the zero polynomial")]
    FactorZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// An immutable polynomial ring, identified by its ordered variable names.
#[derive(Clone, Debug)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Ring {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        debug_assert!(!vars.is_empty());
        Ring { vars: Arc::new(vars) }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring with extra variables appended.
    pub fn extended<S: Into<String>>(&self, extra: Vec<S>) -> Ring {
        let mut vars = (*self.vars).clone();
        vars.extend(extra.into_iter().map(Into::into));
        Ring { vars: Arc::new(vars) }
    }

    /// Ring with one variable removed.
    pub fn without(&self, name: &str) -> Ring {
        let vars: Vec<String> = self.vars.iter().filter(|v| *v != name).cloned().collect();
        Ring { vars: Arc::new(vars) }
    }
}

/// Exponent vector; length always equals the ring's variable count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, idx: usize) -> Monomial {
        let mut e = vec![0; n];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GradedLex,
}

/// A monomial order: lex or graded lex over a variable priority permutation
/// (`priority[0]` is the most significant variable index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(ring: &Ring) -> MonomialOrder {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..ring.nvars()).collect() }
    }

    pub fn grlex(ring: &Ring) -> MonomialOrder {
        MonomialOrder { kind: OrderKind::GradedLex, priority: (0..ring.nvars()).collect() }
    }

    /// Lex order ranking the named variables first (in the given sequence),
    /// with the remaining variables after them in declaration order.
    pub fn lex_eliminating(ring: &Ring, first: &[&str]) -> MonomialOrder {
        let mut priority: Vec<usize> = Vec::with_capacity(ring.nvars());
        for name in first {
            if let Some(i) = ring.var_index(name) {
                priority.push(i);
            }
        }
        for i in 0..ring.nvars() {
            if !priority.contains(&i) {
                priority.push(i);
            }
        }
        MonomialOrder { kind: OrderKind::Lex, priority }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.kind == OrderKind::GradedLex {
            match a.total_degree().cmp(&b.total_degree()) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for &i in &self.priority {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

/// Sparse multivariate polynomial with exact rational coefficients. Stored
/// order-agnostically; Groebner routines sort term views on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Polynomial, PolyError> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), idx), Rational::one());
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Polynomial {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), ring.nvars());
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: map }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var_idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var_idx]).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
        })
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = terms.entry(m).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_scalar(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial, PolyError> {
        let idx = self
            .ring
            .var_index(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[idx] = e - 1;
            let coeff = c * Rational::from_integer(e.into());
            let entry = terms.entry(nm).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.ring.nvars() {
            return Err(PolyError::PointLength(point.len(), self.ring.nvars()));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitute rational functions for variables; unbound variables map to
    /// themselves. All bindings (and the result) live in `target` ring.
    pub fn substitute(
        &self,
        target: &Ring,
        bindings: &BTreeMap<String, RationalFunction>,
    ) -> Result<RationalFunction, PolyError> {
        // Per-variable numerator/denominator in the target ring.
        let mut nums: Vec<Polynomial> = Vec::with_capacity(self.ring.nvars());
        let mut dens: Vec<Polynomial> = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.vars() {
            if let Some(rf) = bindings.get(name) {
                if rf.den.is_zero() {
                    return Err(PolyError::ZeroDenominatorBinding(name.clone()));
                }
                nums.push(rf.num.clone());
                dens.push(rf.den.clone());
            } else {
                nums.push(Polynomial::var(target, name)?);
                dens.push(Polynomial::one(target));
            }
        }
        let degs: Vec<u32> = (0..self.ring.nvars()).map(|i| self.degree_in(i)).collect();
        // Common denominator: product of den_i^deg_i.
        let mut num_acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&nums[i]);
                }
                for _ in 0..(degs[i] - e) {
                    term = term.mul(&dens[i]);
                }
            }
            num_acc = num_acc.add(&term);
        }
        let mut den_acc = Polynomial::one(target);
        for (i, &d) in degs.iter().enumerate() {
            for _ in 0..d {
                den_acc = den_acc.mul(&dens[i]);
            }
        }
        Ok(RationalFunction { num: num_acc, den: den_acc })
    }

    /// Leading (monomial, coefficient) under the order. None for zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted strictly decreasing under the order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Normalize to an integer-coefficient polynomial with content 1 and a
    /// positive leading coefficient under the given order. Returns the unit
    /// `u` such that `self = u * result`.
    pub fn integer_primitive(&self, order: &MonomialOrder) -> (Rational, Polynomial) {
        use num::bigint::BigInt;
        use num::Integer;
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = &den / den.gcd(c.denom()) * c.denom();
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut unit = Rational::new(num_gcd.clone(), den.clone());
        let scaled = self.mul_scalar(&unit.clone().recip());
        let lt = scaled.leading_term(order).unwrap();
        let result = if rat_sign(lt.1) < 0 {
            unit = -unit;
            scaled.neg()
        } else {
            scaled
        };
        (unit, result)
    }

    /// Map into a super-ring containing all of this ring's variables.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for v in self.ring.vars() {
            map.push(
                target
                    .var_index(v)
                    .ok_or_else(|| PolyError::UnknownVariable(v.clone()))?,
            );
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &p) in m.0.iter().enumerate() {
                e[map[i]] = p;
            }
            terms.insert(Monomial(e), c.clone());
        }
        Ok(Polynomial { ring: target.clone(), terms })
    }

    /// Project onto a sub-ring; fails if a dropped variable occurs.
    pub fn project(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for v in self.ring.vars() {
            map.push(target.var_index(v));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &p) in m.0.iter().enumerate() {
                if p > 0 {
                    match map[i] {
                        Some(j) => e[j] = p,
                        None => {
                            return Err(PolyError::UnknownVariable(
                                self.ring.vars()[i].clone(),
                            ))
                        }
                    }
                }
            }
            terms.insert(Monomial(e), c.clone());
        }
        Ok(Polynomial { ring: target.clone(), terms })
    }

    /// Set one variable to zero (keeping the ring).
    pub fn set_var_zero(&self, var_idx: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[var_idx] == 0 {
                terms.insert(m.clone(), c.clone());
            }
        }
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Canonical text: terms descending under declaration-order lex, explicit
    /// `*` and `^`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let order = MonomialOrder::lex(&self.ring);
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(&order).into_iter().enumerate() {
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(rat_to_string(&mag));
            }
            for (vi, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(self.ring.vars()[vi].clone());
                } else {
                    factors.push(format!("{}^{}", self.ring.vars()[vi], e));
                }
            }
            let body = factors.join("*");
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else if c.is_negative() {
                out.push_str(" - ");
                out.push_str(&body);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A quotient of polynomials; the denominator is nonzero. No gcd
/// normalization is performed.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> RationalFunction {
        assert!(!den.is_zero(), "zero denominator");
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> RationalFunction {
        let one = Polynomial::one(p.ring());
        RationalFunction { num: p, den: one }
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    /// Equality as abstract rational functions (cross multiplication).
    pub fn equivalent(&self, other: &RationalFunction) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Compose with a substitution of the underlying variables.
    pub fn substitute(
        &self,
        target: &Ring,
        bindings: &BTreeMap<String, RationalFunction>,
    ) -> Result<RationalFunction, PolyError> {
        let n = self.num.substitute(target, bindings)?;
        let d = self.den.substitute(target, bindings)?;
        if d.num.is_zero() {
            return Err(PolyError::ZeroDenominatorBinding("<denominator>".into()));
        }
        Ok(RationalFunction { num: n.num.mul(&d.den), den: n.den.mul(&d.num) })
    }

    pub fn to_canonical_string(&self) -> String {
        format!("({}) / ({})", self.num.to_canonical_string(), self.den.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::parse::parse_polynomial;
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn ring3() -> Ring {
        Ring::new(vec!["x", "y", "z"])
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn product_of_sum_and_difference() {
        let r = ring3();
        let a = p(&r, "x + y");
        let b = p(&r, "x - y");
        assert_eq!(a.mul(&b), p(&r, "x^2 - y^2"));
    }

    #[test]
    fn additive_identity() {
        let r = ring3();
        let a = p(&r, "3*x^2*y - z");
        assert_eq!(a.add(&Polynomial::zero(&r)), a);
    }

    #[test]
    fn trinomial_square() {
        let r = ring3();
        let s = p(&r, "x + y + z");
        let sq = s.mul(&s);
        assert_eq!(sq, p(&r, "x^2 + y^2 + z^2 + 2*x*y + 2*x*z + 2*y*z"));
    }

    #[test]
    fn ring_mismatch_reported() {
        let r = ring3();
        let r2 = Ring::new(vec!["x", "u"]);
        let a = p(&r, "x");
        let b = p(&r2, "x");
        assert_eq!(a.arith(&b, ArithOp::Add), Err(PolyError::RingMismatch));
    }

    #[test]
    fn partial_derivatives() {
        let r = ring3();
        assert_eq!(p(&r, "x^2*y*z").partial_derivative("x").unwrap(), p(&r, "2*x*y*z"));
        assert_eq!(
            p(&r, "x^2 + y^2 + z^2").partial_derivative("z").unwrap(),
            p(&r, "2*z")
        );
        assert_eq!(p(&r, "x*z").partial_derivative("y").unwrap(), Polynomial::zero(&r));
        assert!(p(&r, "x").partial_derivative("w").is_err());
    }

    #[test]
    fn evaluation() {
        let r = ring3();
        let g = p(&r, "x^2 + y^2 + z^2");
        assert_eq!(g.evaluate(&[rat_int(0), rat_int(0), rat_int(0)]).unwrap(), rat_int(0));
        let h = p(&r, "y - x + z");
        assert_eq!(
            h.evaluate(&[rat_int(1), rat_int(1), rat_int(1)]).unwrap(),
            rat_int(1)
        );
        let r2 = Ring::new(vec!["x", "u"]);
        let f = p(&r2, "2*x + u");
        assert_eq!(f.evaluate(&[rat_int(1), rat_int(-2)]).unwrap(), rat_int(0));
        assert!(f.evaluate(&[rat_int(1)]).is_err());
    }

    #[test]
    fn substitution_identity_binding() {
        let r = ring3();
        let f = p(&r, "x");
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), RationalFunction::from_poly(p(&r, "x")));
        let out = f.substitute(&r, &b).unwrap();
        assert!(out.equivalent(&RationalFunction::from_poly(p(&r, "x"))));
    }

    #[test]
    fn substitution_collapses_first_worked_quotient() {
        // (y*x - z*y + z*x)/(x^2+y^2+z^2) at y=-x, z=-x gives the constant -1:
        // numerator -3x^2 over denominator 3x^2.
        let r = ring3();
        let q = RationalFunction::new(p(&r, "y*x - z*y + z*x"), p(&r, "x^2 + y^2 + z^2"));
        let mut b = BTreeMap::new();
        b.insert("y".into(), RationalFunction::from_poly(p(&r, "-1*x")));
        b.insert("z".into(), RationalFunction::from_poly(p(&r, "-1*x")));
        let out = q.substitute(&r, &b).unwrap();
        let c = RationalFunction::new(p(&r, "-3*x^2"), p(&r, "3*x^2"));
        assert!(out.equivalent(&c));
    }

    #[test]
    fn substitution_second_worked_quotient() {
        // x^2*y*z/(x^2+y^2+z^2) at y=u/2, z=u/2 equals (x^2*u^2/4)/(x^2+u^2/2).
        let r = ring3();
        let r2 = Ring::new(vec!["x", "u"]);
        let q = RationalFunction::new(p(&r, "x^2*y*z"), p(&r, "x^2 + y^2 + z^2"));
        let half_u = RationalFunction::new(p(&r2, "u"), p(&r2, "2"));
        let mut b = BTreeMap::new();
        b.insert("y".into(), half_u.clone());
        b.insert("z".into(), half_u);
        b.insert("x".into(), RationalFunction::from_poly(p(&r2, "x")));
        let out = q.substitute(&r2, &b).unwrap();
        let expect = RationalFunction::new(
            parse_polynomial(&r2, "1/4*x^2*u^2").unwrap(),
            parse_polynomial(&r2, "x^2 + 1/2*u^2").unwrap(),
        );
        assert!(out.equivalent(&expect));
    }

    #[test]
    fn zero_denominator_binding_rejected() {
        let r = ring3();
        let f = p(&r, "x + y");
        let mut b = BTreeMap::new();
        b.insert(
            "y".to_string(),
            RationalFunction { num: p(&r, "1"), den: Polynomial::zero(&r) },
        );
        assert!(matches!(
            f.substitute(&r, &b),
            Err(PolyError::ZeroDenominatorBinding(_))
        ));
    }

    #[test]
    fn canonical_printing() {
        let r = ring3();
        assert_eq!(p(&r, "y + x^2 - 3*z").to_canonical_string(), "x^2 + y - 3*z");
        assert_eq!(p(&r, "0").to_canonical_string(), "0");
        assert_eq!(
            parse_polynomial(&Ring::new(vec!["x", "u"]), "1/2*u - x")
                .unwrap()
                .to_canonical_string(),
            "-x + 1/2*u"
        );
    }

    #[test]
    fn integer_primitive_normalization() {
        let r = ring3();
        let f = p(&r, "1/2*x - 1/3*y");
        let order = MonomialOrder::lex(&r);
        let (unit, g) = f.integer_primitive(&order);
        assert_eq!(g, p(&r, "3*x - 2*y"));
        assert_eq!(unit, rat(1, 6));
        let back = g.mul_scalar(&unit);
        assert_eq!(back, f);
    }

    #[test]
    fn monomial_order_gradings() {
        let r = ring3();
        let lex = MonomialOrder::lex(&r);
        let grlex = MonomialOrder::grlex(&r);
        let x = Monomial(vec![1, 0, 0]);
        let y2 = Monomial(vec![0, 2, 0]);
        assert_eq!(lex.cmp(&x, &y2), Ordering::Greater);
        assert_eq!(grlex.cmp(&x, &y2), Ordering::Less);
    }
}
