//! Factorization over Q: squarefree reduction, content/primitive recursion,
//! univariate factorization, and Kronecker substitution for factors in two
//! or more variables.

use super::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};
use crate::numeric::unifactor::factor_unipoly;
use crate::numeric::unipoly::UniPoly;
use crate::numeric::Rational;
use num::{One, Zero};
use std::collections::BTreeMap;

/// Cap on the degree of the Kronecker-substituted univariate image.
const KRONECKER_DEGREE_CAP: usize = 400;

/// Exact multivariate division; `Some(q)` iff `b` divides `a`.
pub fn divide_exact(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    assert!(!b.is_zero(), "division by zero polynomial");
    let ring = a.ring().clone();
    let order = MonomialOrder::lex(&ring);
    let (bm, bc) = {
        let lt = b.leading_term(&order).unwrap();
        (lt.0.clone(), lt.1.clone())
    };
    let mut rem = a.clone();
    let mut quot = Polynomial::zero(&ring);
    while !rem.is_zero() {
        let (rm, rc) = {
            let lt = rem.leading_term(&order).unwrap();
            (lt.0.clone(), lt.1.clone())
        };
        if !bm.divides(&rm) {
            return None;
        }
        let m = rm.div(&bm);
        let c = rc / &bc;
        let t = b.mul_monomial(&m, &c);
        rem = rem.sub(&t);
        quot = quot.add(&Polynomial::from_terms(&ring, vec![(m, c)]));
    }
    Some(quot)
}

/// Coefficients of `p` viewed as a polynomial in variable `v` (index), from
/// degree 0 upward; each coefficient has degree 0 in `v`.
fn coeffs_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let ring = p.ring().clone();
    let d = p.degree_in(v) as usize;
    let mut out = vec![Polynomial::zero(&ring); d + 1];
    for (m, c) in p.terms() {
        let e = m.0[v] as usize;
        let mut m2 = m.clone();
        m2.0[v] = 0;
        out[e] = out[e].add(&Polynomial::from_terms(&ring, vec![(m2, c.clone())]));
    }
    out
}

fn assemble(coeffs: &[Polynomial], v: usize, ring: &Ring) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut mv = Monomial::one(ring.nvars());
        mv.0[v] = e as u32;
        acc = acc.add(&c.mul_monomial(&mv, &Rational::one()));
    }
    acc
}

fn normalize_primitive(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let order = MonomialOrder::lex(p.ring());
    p.integer_primitive(&order).1
}

/// Primitive gcd over Q[x1..xn] via primitive pseudo-remainder sequences.
pub fn gcd_mv(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return normalize_primitive(b);
    }
    if b.is_zero() {
        return normalize_primitive(a);
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.ring());
    }
    let sa = a.support_vars();
    let sb = b.support_vars();
    let v = *sa.iter().chain(sb.iter()).min().unwrap();
    if a.degree_in(v) == 0 {
        let cont_b = content_in(b, v);
        return gcd_mv(a, &cont_b);
    }
    if b.degree_in(v) == 0 {
        let cont_a = content_in(a, v);
        return gcd_mv(&cont_a, b);
    }
    let cont_a = content_in(a, v);
    let cont_b = content_in(b, v);
    let pp_a = divide_exact(a, &cont_a).expect("content divides");
    let pp_b = divide_exact(b, &cont_b).expect("content divides");
    let cont_gcd = gcd_mv(&cont_a, &cont_b);

    let (mut r0, mut r1) = if pp_a.degree_in(v) >= pp_b.degree_in(v) {
        (pp_a, pp_b)
    } else {
        (pp_b, pp_a)
    };
    loop {
        if r1.is_zero() {
            break;
        }
        let r = pseudo_rem(&r0, &r1, v);
        r0 = r1;
        r1 = if r.is_zero() {
            r
        } else {
            // Remove content each step to keep coefficients small.
            let c = content_in(&r, v);
            divide_exact(&r, &c).expect("content divides")
        };
    }
    let pp_g = {
        let c = content_in(&r0, v);
        normalize_primitive(&divide_exact(&r0, &c).expect("content divides"))
    };
    normalize_primitive(&pp_g.mul(&cont_gcd))
}

fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let cs = coeffs_in(p, v);
    let mut g = Polynomial::zero(p.ring());
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = gcd_mv(&g, &c);
        if g.is_constant() {
            return Polynomial::one(p.ring());
        }
    }
    if g.is_zero() {
        Polynomial::one(p.ring())
    } else {
        g
    }
}

/// Pseudo-remainder of `a` by `b` in the variable `v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let ring = a.ring().clone();
    let db = b.degree_in(v);
    let bc = coeffs_in(b, v);
    let lb = bc.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let rc = coeffs_in(&r, v);
        let lr = rc.last().unwrap().clone();
        // r := lb*r - lr*x^(dr-db)*b
        let mut shift = Monomial::one(ring.nvars());
        shift.0[v] = dr - db;
        let sub = b.mul_monomial(&shift, &Rational::one()).mul(&lr);
        r = r.mul(&lb).sub(&sub);
    }
    r
}

/// Squarefree part: `p / gcd(p, all partial derivatives)`, primitive with a
/// positive leading coefficient.
pub fn squarefree_part(p: &Polynomial) -> Polynomial {
    if p.is_zero() || p.is_constant() {
        return normalize_primitive(p);
    }
    let mut g = p.clone();
    for v in p.support_vars() {
        let d = p
            .partial_derivative(&p.ring().vars()[v].clone())
            .expect("support variable exists");
        g = gcd_mv(&g, &d);
        if g.is_constant() {
            return normalize_primitive(p);
        }
    }
    normalize_primitive(&divide_exact(p, &g).expect("gcd divides"))
}

fn to_unipoly(p: &Polynomial, v: usize) -> UniPoly<Rational> {
    let d = p.degree_in(v) as usize;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (m, c) in p.terms() {
        coeffs[m.0[v] as usize] = c.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

fn from_unipoly(u: &UniPoly<Rational>, v: usize, ring: &Ring) -> Polynomial {
    let mut terms = Vec::new();
    for (e, c) in u.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut m = Monomial::one(ring.nvars());
        m.0[v] = e as u32;
        terms.push((m, c.clone()));
    }
    Polynomial::from_terms(ring, terms)
}

/// Factor a squarefree primitive polynomial in >= 2 variables by Kronecker
/// substitution plus subset recombination.
fn factor_kronecker(s: &Polynomial) -> Result<Vec<Polynomial>, PolyError> {
    let ring = s.ring().clone();
    let vars = s.support_vars();
    let mut strides: Vec<(usize, u64, u64)> = Vec::new(); // (var, stride, radix)
    let mut stride: u64 = 1;
    for &v in &vars {
        let r = s.degree_in(v) as u64 + 1;
        strides.push((v, stride, r));
        stride = stride
            .checked_mul(r)
            .ok_or(PolyError::FactorDegreeCapExceeded(usize::MAX))?;
    }
    let code = |m: &Monomial| -> u64 {
        strides.iter().map(|&(v, st, _)| m.0[v] as u64 * st).sum()
    };
    let max_code = s.terms().map(|(m, _)| code(m)).max().unwrap();
    if max_code as usize > KRONECKER_DEGREE_CAP {
        return Err(PolyError::FactorDegreeCapExceeded(max_code as usize));
    }
    let mut coeffs = vec![Rational::zero(); max_code as usize + 1];
    for (m, c) in s.terms() {
        coeffs[code(m) as usize] = c.clone();
    }
    let image = UniPoly::from_coeffs(coeffs);
    let image_factors = factor_unipoly(&image);
    // Expanded pool: one entry per factor copy.
    let mut pool: Vec<UniPoly<Rational>> = Vec::new();
    for (f, mult) in image_factors {
        for _ in 0..mult {
            pool.push(f.clone());
        }
    }
    let decode = |u: &UniPoly<Rational>| -> Polynomial {
        let mut terms = Vec::new();
        for (e, c) in u.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut m = Monomial::one(ring.nvars());
            let mut rem = e as u64;
            for &(v, _, r) in &strides {
                m.0[v] = (rem % r) as u32;
                rem /= r;
            }
            terms.push((m, c.clone()));
        }
        Polynomial::from_terms(&ring, terms)
    };

    let mut remaining = s.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= pool.len() {
        let combos = combinations(pool.len(), size);
        for combo in combos {
            let mut prod = UniPoly::from_coeffs(vec![Rational::one()]);
            for &i in &combo {
                prod = prod.mul(&pool[i]);
            }
            let cand = normalize_primitive(&decode(&prod));
            if cand.is_constant() {
                continue;
            }
            if let Some(q) = divide_exact(&remaining, &cand) {
                out.push(cand);
                remaining = normalize_primitive(&q);
                let keep: Vec<UniPoly<Rational>> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, f)| f.clone())
                    .collect();
                pool = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if !remaining.is_constant() {
        out.push(remaining);
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors of a squarefree primitive polynomial.
fn factor_squarefree(s: &Polynomial) -> Result<Vec<Polynomial>, PolyError> {
    let vars = s.support_vars();
    match vars.len() {
        0 => Ok(Vec::new()),
        1 => {
            let v = vars[0];
            let u = to_unipoly(s, v);
            let fs = factor_unipoly(&u);
            Ok(fs
                .into_iter()
                .map(|(f, _)| normalize_primitive(&from_unipoly(&f, v, s.ring())))
                .collect())
        }
        _ => factor_kronecker(s),
    }
}

/// Full factorization over Q: returns `(unit, [(irreducible, multiplicity)])`
/// with each factor integer-primitive with positive leading coefficient, and
/// `p = unit * prod factor^multiplicity`. Deterministic ordering by the
/// lex-leading monomial (then canonical text).
pub fn factor_over_q(p: &Polynomial) -> Result<(Rational, Vec<(Polynomial, usize)>), PolyError> {
    if p.is_zero() {
        return Err(PolyError::FactorZero);
    }
    let ring = p.ring().clone();
    let order = MonomialOrder::lex(&ring);
    let (mut unit, mut body) = p.integer_primitive(&order);
    let mut factors: Vec<(Polynomial, usize)> = Vec::new();
    // Monomial content: minimal exponent of each variable.
    for v in 0..ring.nvars() {
        let minexp = body.terms().map(|(m, _)| m.0[v]).min().unwrap_or(0);
        if minexp > 0 {
            let var_poly = Polynomial::var(&ring, &ring.vars()[v].clone()).unwrap();
            let mut m = Monomial::one(ring.nvars());
            m.0[v] = minexp;
            let shifted: Vec<(Monomial, Rational)> = body
                .terms()
                .map(|(mm, c)| (mm.div(&m), c.clone()))
                .collect();
            body = Polynomial::from_terms(&ring, shifted);
            factors.push((var_poly, minexp as usize));
        }
    }
    if let Some(c) = body.constant_value() {
        unit *= c;
        factors.sort_by(factor_cmp);
        return Ok((unit, factors));
    }
    let sf = squarefree_part(&body);
    let irr = factor_squarefree(&sf)?;
    for f in irr {
        let mut mult = 0usize;
        let mut cur = body.clone();
        while let Some(q) = divide_exact(&cur, &f) {
            mult += 1;
            cur = q;
        }
        debug_assert!(mult >= 1);
        for _ in 0..mult {
            body = divide_exact(&body, &f).expect("factor divides");
        }
        factors.push((f, mult));
    }
    let c = body
        .constant_value()
        .expect("all non-unit factors removed");
    unit *= c;
    factors.sort_by(factor_cmp);
    Ok((unit, factors))
}

fn factor_cmp(a: &(Polynomial, usize), b: &(Polynomial, usize)) -> std::cmp::Ordering {
    let order = MonomialOrder::lex(a.0.ring());
    let la = a.0.leading_term(&order).map(|t| t.0.clone());
    let lb = b.0.leading_term(&order).map(|t| t.0.clone());
    match (la, lb) {
        (Some(x), Some(y)) => order
            .cmp(&x, &y)
            .then_with(|| a.0.to_canonical_string().cmp(&b.0.to_canonical_string())),
        _ => std::cmp::Ordering::Equal,
    }
}

/// Distinct irreducible factors of the squarefree part (multiplicities
/// dropped), for radical-style splitting.
pub fn squarefree_factors(p: &Polynomial) -> Result<Vec<Polynomial>, PolyError> {
    let (_, fs) = factor_over_q(p)?;
    Ok(fs.into_iter().map(|(f, _)| f).collect())
}

/// Evaluate a polynomial with all variables bound by rational values given as
/// a name->value map (missing names default to zero).
pub fn eval_named(p: &Polynomial, point: &BTreeMap<String, Rational>) -> Rational {
    let vals: Vec<Rational> = p
        .ring()
        .vars()
        .iter()
        .map(|v| point.get(v).cloned().unwrap_or_else(Rational::zero))
        .collect();
    p.evaluate(&vals).expect("lengths match")
}
