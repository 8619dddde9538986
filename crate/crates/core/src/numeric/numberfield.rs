//! Real-embedded number fields Q(theta): exact arithmetic on polynomials in
//! theta modulo an irreducible minimal polynomial, with sign determination
//! through isolating-interval refinement. Extensions are flattened to a new
//! primitive element via resultants, keeping every tower a simple extension.

use super::algebraic::{AlgebraicError, AlgebraicReal, DEGREE_CAP};
use super::interval::Interval;
use super::isolation::{count_roots, refine_step, sturm_chain};
use super::unifactor::factor_unipoly;
use super::unipoly::{FieldOps, UniPoly};
use super::{rat, rat_sign, Rational};
use num::{One, Zero};
use std::sync::{Arc, Mutex};

/// The field Q(theta). Degree-one contexts represent Q itself (theta = 0).
#[derive(Debug)]
pub struct NumberField {
    /// Monic irreducible minimal polynomial of theta.
    minpoly: UniPoly<Rational>,
    /// Isolating interval for the chosen real root; refined in place.
    interval: Mutex<(Rational, Rational)>,
}

impl NumberField {
    /// The rational base field.
    pub fn rationals() -> Arc<NumberField> {
        Arc::new(NumberField {
            minpoly: UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()]),
            interval: Mutex::new((rat(-1, 1), rat(1, 1))),
        })
    }

    pub fn new(minpoly: UniPoly<Rational>, interval: (Rational, Rational)) -> Arc<NumberField> {
        Arc::new(NumberField { minpoly, interval: Mutex::new(interval) })
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(1)
    }

    pub fn minpoly(&self) -> &UniPoly<Rational> {
        &self.minpoly
    }

    pub fn current_interval(&self) -> (Rational, Rational) {
        self.interval.lock().unwrap().clone()
    }

    fn refine(&self) {
        let mut iv = self.interval.lock().unwrap();
        *iv = refine_step(&self.minpoly, &iv);
    }
}

/// An element of Q(theta), reduced mod the minimal polynomial.
#[derive(Clone, Debug)]
pub struct NfElem {
    pub field: Arc<NumberField>,
    pub rep: UniPoly<Rational>,
}

impl NfElem {
    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> NfElem {
        NfElem { field: field.clone(), rep: UniPoly::from_coeffs(vec![r]) }
    }

    /// The generator theta of the field.
    pub fn generator(field: &Arc<NumberField>) -> NfElem {
        let rep = UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()]).rem(&field.minpoly);
        NfElem { field: field.clone(), rep }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.rep.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.rep.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Exact sign via interval evaluation with on-demand refinement.
    pub fn sign(&self) -> i32 {
        if self.rep.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return rat_sign(&r);
        }
        loop {
            let iv = self.field.current_interval();
            let value = self.rep.eval_interval(&Interval::new(iv.0, iv.1));
            if let Some(s) = value.definite_sign() {
                return s;
            }
            self.field.refine();
        }
    }

    /// Sound upper bound on |value|.
    pub fn abs_bound(&self) -> Rational {
        let iv = self.field.current_interval();
        self.rep.eval_interval(&Interval::new(iv.0, iv.1)).abs_bound()
    }

    pub fn approx_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return super::rat_to_f64(&r);
        }
        for _ in 0..128 {
            let iv = self.field.current_interval();
            let value = self.rep.eval_interval(&Interval::new(iv.0, iv.1));
            if value.width() < rat(1, 1_000_000_000) {
                return (super::rat_to_f64(&value.lo) + super::rat_to_f64(&value.hi)) / 2.0;
            }
            self.field.refine();
        }
        let iv = self.field.current_interval();
        let value = self.rep.eval_interval(&Interval::new(iv.0, iv.1));
        (super::rat_to_f64(&value.lo) + super::rat_to_f64(&value.hi)) / 2.0
    }

    /// Flatten to a standalone algebraic real with its own minimal polynomial.
    pub fn to_algebraic(&self) -> Result<AlgebraicReal, AlgebraicError> {
        if let Some(r) = self.as_rational() {
            return Ok(AlgebraicReal::from_rational(r));
        }
        // Characteristic polynomial: Res_t(m(t), T - rep(t)).
        let t_poly = BiQ::from_coeffs(vec![self.rep.neg(), inner_one()]);
        let m_only = BiQ::from_coeffs(vec![self.field.minpoly.clone()]);
        let res = resultant_inner(&m_only, &t_poly);
        let sf = res.squarefree_part();
        // Identify the root owning this embedding by interval refinement: the
        // widened value interval shrinks with each refinement until it
        // isolates a single root of the characteristic polynomial.
        loop {
            let iv = self.field.current_interval();
            let value = self.rep.eval_interval(&Interval::new(iv.0.clone(), iv.1.clone()));
            let w = value.width();
            if w > Rational::zero() {
                if let Ok(a) = AlgebraicReal::from_squarefree(
                    &sf,
                    (value.lo.clone() - &w, value.hi.clone() + &w),
                ) {
                    return Ok(a);
                }
            }
            self.field.refine();
        }
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(Arc::ptr_eq(&self.field, &other.field), "field mismatch");
        self.rep == other.rep
    }
}

impl FieldOps for NfElem {
    fn f_zero(&self) -> Self {
        NfElem { field: self.field.clone(), rep: UniPoly::zero() }
    }
    fn f_one(&self) -> Self {
        NfElem::from_rational(&self.field, Rational::one())
    }
    fn f_add(&self, other: &Self) -> Self {
        NfElem { field: self.field.clone(), rep: self.rep.add(&other.rep) }
    }
    fn f_sub(&self, other: &Self) -> Self {
        NfElem { field: self.field.clone(), rep: self.rep.sub(&other.rep) }
    }
    fn f_mul(&self, other: &Self) -> Self {
        NfElem {
            field: self.field.clone(),
            rep: self.rep.mul(&other.rep).rem(&self.field.minpoly),
        }
    }
    fn f_neg(&self) -> Self {
        NfElem { field: self.field.clone(), rep: self.rep.neg() }
    }
    fn f_inv(&self) -> Self {
        assert!(!self.rep.is_zero(), "inverse of zero");
        // Extended Euclid on (rep, minpoly).
        let mut r0 = self.rep.clone();
        let mut r1 = self.field.minpoly.clone();
        let one = UniPoly::from_coeffs(vec![Rational::one()]);
        let mut s0 = one.clone();
        let mut s1 = UniPoly::<Rational>::zero();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let ns = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
        }
        // r0 = gcd is a nonzero constant (minpoly irreducible).
        debug_assert_eq!(r0.degree(), Some(0));
        let inv_c = r0.coeffs[0].f_inv();
        NfElem {
            field: self.field.clone(),
            rep: s0.mul_scalar(&inv_c).rem(&self.field.minpoly),
        }
    }
    fn f_is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

// ---------------------------------------------------------------------------
// Bivariate scaffolding: UniPoly over UniPoly<Rational>, outer variable on
// top, inner variable inside coefficients. Used only for resultants.
// ---------------------------------------------------------------------------

type InnerQ = UniPoly<Rational>;
type BiQ = UniPoly<InnerQ>;

impl FieldOps for InnerQ {
    // Ring operations only; f_inv is restricted to constants (used by Bareiss
    // style elimination through exact division, never on true polynomials).
    fn f_zero(&self) -> Self {
        UniPoly::zero()
    }
    fn f_one(&self) -> Self {
        UniPoly::from_coeffs(vec![Rational::one()])
    }
    fn f_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn f_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn f_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn f_neg(&self) -> Self {
        self.neg()
    }
    fn f_inv(&self) -> Self {
        assert_eq!(self.degree(), Some(0), "inverse of non-constant polynomial");
        UniPoly::from_coeffs(vec![self.coeffs[0].f_inv()])
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
}

fn inner_one() -> InnerQ {
    UniPoly::from_coeffs(vec![Rational::one()])
}

/// Resultant with respect to the inner variable of two polynomials given in
/// the outer variable with inner-polynomial coefficients... here specialized:
/// both arguments are reinterpreted as polynomials in the *inner* variable
/// with outer-variable coefficients via transposition, and the Sylvester
/// determinant is evaluated by fraction-free elimination.
fn resultant_inner(a: &BiQ, b: &BiQ) -> UniPoly<Rational> {
    // Transpose: view as polynomials in t (inner) with coefficients in T.
    let at = transpose(a);
    let bt = transpose(b);
    sylvester_resultant(&at, &bt)
}

/// Swap the roles of inner and outer variables.
fn transpose(p: &BiQ) -> Vec<UniPoly<Rational>> {
    // Result: index = power of t, value = polynomial in T.
    let mut max_t = 0usize;
    for c in &p.coeffs {
        if let Some(d) = c.degree() {
            max_t = max_t.max(d);
        }
    }
    let mut out = vec![UniPoly::<Rational>::zero(); max_t + 1];
    for (t_pow, c) in p.coeffs.iter().enumerate() {
        // c is a polynomial in t; p.coeffs index is the OUTER power.
        for (inner_pow, r) in c.coeffs.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let cur = &out[inner_pow];
            let add = UniPoly::monomial(r.clone(), t_pow);
            out[inner_pow] = cur.add(&add);
        }
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Resultant of two polynomials in one variable whose coefficients are
/// rational polynomials, via Bareiss fraction-free elimination on the
/// Sylvester matrix.
pub fn sylvester_resultant(a: &[UniPoly<Rational>], b: &[UniPoly<Rational>]) -> UniPoly<Rational> {
    let da = a.len().saturating_sub(1);
    let db = b.len().saturating_sub(1);
    if a.is_empty() || b.is_empty() {
        return UniPoly::zero();
    }
    if da == 0 && db == 0 {
        return UniPoly::from_coeffs(vec![Rational::one()]);
    }
    let n = da + db;
    let zero = UniPoly::<Rational>::zero();
    let mut m: Vec<Vec<UniPoly<Rational>>> = vec![vec![zero.clone(); n]; n];
    for row in 0..db {
        for (k, c) in a.iter().enumerate() {
            m[row][row + (da - k)] = c.clone();
        }
    }
    for row in 0..da {
        for (k, c) in b.iter().enumerate() {
            m[db + row][row + (db - k)] = c.clone();
        }
    }
    // Bareiss elimination over the polynomial ring.
    let mut sign = 1i32;
    let mut prev = UniPoly::from_coeffs(vec![Rational::one()]);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                let (q, r) = num.divrem(&prev);
                debug_assert!(r.is_zero(), "Bareiss exact division failed");
                m[i][j] = q;
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

// ---------------------------------------------------------------------------
// Root isolation for polynomials over an embedded number field
// ---------------------------------------------------------------------------

/// Sturm-style isolation of the real roots of a squarefree polynomial with
/// number-field coefficients; intervals are rational.
pub fn isolate_roots_nf(p: &UniPoly<NfElem>) -> Vec<(Rational, Rational)> {
    let deg = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let _ = deg;
    // Sturm chain over the field.
    let mut chain: Vec<UniPoly<NfElem>> = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    let sign_at = |x: &Rational| -> Vec<i32> {
        chain
            .iter()
            .map(|q| {
                let mut acc = match q.coeffs.last() {
                    None => return 0,
                    Some(c) => c.clone(),
                };
                for c in q.coeffs.iter().rev().skip(1) {
                    let xe = NfElem::from_rational(&c.field, x.clone());
                    acc = acc.f_mul(&xe).f_add(c);
                }
                acc.sign()
            })
            .collect()
    };
    let variations = |signs: &[i32]| -> usize {
        let mut count = 0;
        let mut last = 0;
        for &s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    };
    // Cauchy-type bound from interval coefficient bounds.
    let lead = p.lead();
    let mut lead_low;
    loop {
        let iv = lead.field.current_interval();
        let v = lead.rep.eval_interval(&Interval::new(iv.0, iv.1));
        if let Some(_) = v.definite_sign() {
            let a = v.abs_bound();
            let lo_abs = {
                // distance of interval from zero
                if rat_sign(&v.lo) > 0 {
                    v.lo.clone()
                } else {
                    -v.hi.clone()
                }
            };
            if rat_sign(&lo_abs) > 0 {
                lead_low = lo_abs;
                let _ = a;
                break;
            }
        }
        lead.field.refine();
    }
    let mut maxabs = Rational::zero();
    for c in &p.coeffs[..p.coeffs.len() - 1] {
        let b = c.abs_bound();
        if b > maxabs {
            maxabs = b;
        }
    }
    let bound = maxabs / lead_low + Rational::one();
    let mut lo = -bound.clone();
    let mut hi = bound;
    let ev_sign = |x: &Rational| -> i32 {
        let mut acc = p.coeffs.last().unwrap().clone();
        for c in p.coeffs.iter().rev().skip(1) {
            let xe = NfElem::from_rational(&c.field, x.clone());
            acc = acc.f_mul(&xe).f_add(c);
        }
        acc.sign()
    };
    while ev_sign(&lo) == 0 {
        lo = &lo - rat(1, 1);
    }
    while ev_sign(&hi) == 0 {
        hi = &hi + rat(1, 1);
    }
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let va = variations(&sign_at(&a));
        let vb = variations(&sign_at(&b));
        let n = va.saturating_sub(vb);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mut mid = (&a + &b) / rat(2, 1);
        while ev_sign(&mid) == 0 {
            mid = (&a + &mid) / rat(2, 1);
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Halve an isolating interval for a root of `p` (squarefree over the field).
pub fn refine_root_nf(
    p: &UniPoly<NfElem>,
    iv: &(Rational, Rational),
) -> (Rational, Rational) {
    let ev_sign = |x: &Rational| -> i32 {
        let mut acc = p.coeffs.last().unwrap().clone();
        for c in p.coeffs.iter().rev().skip(1) {
            let xe = NfElem::from_rational(&c.field, x.clone());
            acc = acc.f_mul(&xe).f_add(c);
        }
        acc.sign()
    };
    let (lo, hi) = iv;
    let mut mid = (lo + hi) / rat(2, 1);
    if ev_sign(&mid) == 0 {
        let m2 = (lo + &mid) / rat(2, 1);
        let m3 = (&mid + hi) / rat(2, 1);
        return (m2, m3);
    }
    if ev_sign(lo) != ev_sign(&mid) {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

// ---------------------------------------------------------------------------
// Field extension by a root of a polynomial over the field
// ---------------------------------------------------------------------------

/// Result of adjoining a real root `c` of a polynomial over Q(theta): a new
/// simple extension Q(gamma) containing both, with explicit images.
pub struct Extension {
    pub field: Arc<NumberField>,
    /// Image of the old generator theta inside the new field.
    pub old_gen: NfElem,
    /// The adjoined root as an element of the new field.
    pub root: NfElem,
}

/// Rebase an element of the old field into the extension, given the image of
/// the old generator.
pub fn rebase(elem: &NfElem, old_gen_image: &NfElem) -> NfElem {
    let field = &old_gen_image.field;
    let mut acc = NfElem::from_rational(field, Rational::zero());
    for c in elem.rep.coeffs.iter().rev() {
        acc = acc.f_mul(old_gen_image).f_add(&NfElem::from_rational(field, c.clone()));
    }
    acc
}

/// Adjoin the real root of `p` (over Q(theta)) isolated by `root_iv`.
/// `p` need not be irreducible, only squarefree with a single root in the
/// interval.
pub fn extend_by_root(
    base: &Arc<NumberField>,
    p: &UniPoly<NfElem>,
    root_iv: &(Rational, Rational),
) -> Result<Extension, AlgebraicError> {
    // Degree-one polynomial: the root already lives in the base field.
    if p.degree() == Some(1) {
        let root = p.coeffs[0].f_neg().f_mul(&p.coeffs[1].f_inv());
        return Ok(Extension {
            field: base.clone(),
            old_gen: NfElem::generator(base),
            root,
        });
    }
    let m = base.minpoly();
    // Lift p to Q[t][c]: coefficients of c-powers are polynomials in t.
    let p_tc: Vec<InnerQ> = p.coeffs.iter().map(|e| e.rep.clone()).collect();
    for k in 1..=24i64 {
        // gamma = c + k*theta; substitute c = (G - k t) into p, where G is the
        // new outer variable. Result: polynomial in (G, t).
        // Build in the outer variable G with inner t-coefficients.
        // c^i -> (G - k t)^i expanded in G with t-polynomial coefficients.
        let kq = rat(k, 1);
        // (G - k t) as outer-linear polynomial: [ -k t, 1 ].
        let lin = BiQ::from_coeffs(vec![
            UniPoly::monomial(-kq.clone(), 1),
            inner_one(),
        ]);
        let mut subst = BiQ::zero();
        for (i, coeff_t) in p_tc.iter().enumerate().rev() {
            let _ = i;
            subst = subst.mul(&lin).add(&BiQ::constant(coeff_t.clone()));
        }
        let m_outer = BiQ::constant(m.clone());
        let res = resultant_inner(&m_outer, &subst);
        if res.is_zero() {
            continue;
        }
        let res_sf = res.squarefree_part();
        let factors = factor_unipoly(&res_sf);
        // gamma's interval: root_iv + k * theta_iv, refined until exactly one
        // candidate root across all factors.
        let mut c_iv = root_iv.clone();
        let mut guard = 0usize;
        let (gamma_field, gamma_iv) = loop {
            guard += 1;
            if guard > 512 {
                break (None, (Rational::zero(), Rational::zero()));
            }
            let th_iv = base.current_interval();
            let lo = &c_iv.0 + &kq * &th_iv.0.clone().min(th_iv.1.clone());
            let hi = &c_iv.1 + &kq * &th_iv.0.max(th_iv.1);
            let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
            // Count roots of each irreducible factor inside [lo, hi].
            let mut total = 0usize;
            let mut owner: Option<&UniPoly<Rational>> = None;
            let mut ok = true;
            for (f, _) in &factors {
                let chain = sturm_chain(f);
                // Endpoints must avoid roots for the count to be valid.
                if f.sign_at(&lo) == 0 || f.sign_at(&hi) == 0 {
                    ok = false;
                    break;
                }
                let cnt = count_roots(&chain, &lo, &hi);
                if cnt > 0 {
                    total += cnt;
                    owner = Some(f);
                }
            }
            if ok && total == 1 {
                break (owner.cloned(), (lo, hi));
            }
            base.refine();
            c_iv = refine_root_nf(p, &c_iv);
        };
        let Some(gamma_min) = gamma_field else { continue };
        let deg = gamma_min.degree().unwrap_or(1);
        if deg > DEGREE_CAP {
            return Err(AlgebraicError::DegreeCapExceeded(deg));
        }
        let new_field = NumberField::new(gamma_min.clone(), gamma_iv);
        // Express theta in Q(gamma): gcd of m(x) and p-hat(x) where
        // p-hat(x) = p with c := gamma - k x, computed over Q(gamma).
        let gamma = NfElem::generator(&new_field);
        let kq_e = NfElem::from_rational(&new_field, kq.clone());
        // Build m(x) over the new field.
        let mx = UniPoly::from_coeffs(
            m.coeffs.iter().map(|c| NfElem::from_rational(&new_field, c.clone())).collect(),
        );
        // Build p-hat(x): for p = sum_i e_i(t) c^i, substitute t -> x and
        // c -> gamma - k x.
        let x_poly = UniPoly::from_coeffs(vec![
            NfElem::from_rational(&new_field, Rational::zero()),
            NfElem::from_rational(&new_field, Rational::one()),
        ]);
        let c_poly = UniPoly::from_coeffs(vec![gamma.clone()]).sub(&x_poly.mul_scalar(&kq_e));
        let mut phat = UniPoly::<NfElem>::zero();
        for coeff_t in p_tc.iter().rev() {
            // e_i(x) over the new field.
            let e_x = UniPoly::from_coeffs(
                coeff_t
                    .coeffs
                    .iter()
                    .map(|c| NfElem::from_rational(&new_field, c.clone()))
                    .collect(),
            );
            let e_val = e_x; // polynomial in x
            phat = phat.mul(&c_poly).add(&e_val);
        }
        let g = mx.gcd(&phat);
        if g.degree() != Some(1) {
            continue;
        }
        let theta_new = g.coeffs[0].f_neg().f_mul(&g.coeffs[1].f_inv());
        // Sanity: theta satisfies its minimal polynomial.
        let check = {
            let mut acc = NfElem::from_rational(&new_field, Rational::zero());
            for c in m.coeffs.iter().rev() {
                acc = acc.f_mul(&theta_new).f_add(&NfElem::from_rational(&new_field, c.clone()));
            }
            acc
        };
        if !check.f_is_zero() {
            continue;
        }
        let root = gamma.f_sub(&kq_e.f_mul(&theta_new));
        return Ok(Extension { field: new_field, old_gen: theta_new, root });
    }
    // No small multiplier worked; in characteristic zero this is not expected.
    Err(AlgebraicError::DegreeCapExceeded(DEGREE_CAP + 1))
}

/// Real roots of an arbitrary nonzero polynomial over the field: squarefree
/// reduction followed by isolation. Returns the squarefree polynomial used
/// and the isolating intervals.
pub fn real_roots_nf(p: &UniPoly<NfElem>) -> (UniPoly<NfElem>, Vec<(Rational, Rational)>) {
    let d = p.derivative();
    let g = p.gcd(&d);
    let sf = if g.degree().unwrap_or(0) == 0 { p.monic() } else { p.divrem(&g).0.monic() };
    let roots = isolate_roots_nf(&sf);
    (sf, roots)
}

pub use super::isolation::isolate_real_roots as isolate_real_roots_q;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat_int;

    fn qp(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    fn sqrt2_field() -> Arc<NumberField> {
        NumberField::new(qp(&[-2, 0, 1]), (rat_int(1), rat_int(2)))
    }

    #[test]
    fn arithmetic_in_sqrt2() {
        let k = sqrt2_field();
        let th = NfElem::generator(&k);
        let two = NfElem::from_rational(&k, rat_int(2));
        // theta^2 = 2
        assert_eq!(th.f_mul(&th), two);
        // 1/theta = theta/2
        let inv = th.f_inv();
        let expect = th.f_mul(&NfElem::from_rational(&k, rat(1, 2)));
        assert_eq!(inv, expect);
        assert_eq!(th.sign(), 1);
        assert_eq!(th.f_neg().sign(), -1);
    }

    #[test]
    fn to_algebraic_round_trip() {
        let k = sqrt2_field();
        let th = NfElem::generator(&k);
        // 1 + theta has minimal polynomial x^2 - 2x - 1.
        let one = th.f_one();
        let a = th.f_add(&one).to_algebraic().unwrap();
        assert_eq!(a.minpoly(), &qp(&[-1, -2, 1]).monic());
        assert!(a.approx_f64() - (1.0 + 2f64.sqrt()) < 1e-6);
    }

    #[test]
    fn isolates_roots_over_extension() {
        let k = sqrt2_field();
        let th = NfElem::generator(&k);
        // p(c) = c^2 - theta^2/1 = c^2 - 2 over Q(sqrt2): roots +-sqrt2.
        let c2 = UniPoly::from_coeffs(vec![
            th.f_mul(&th).f_neg(),
            NfElem::from_rational(&k, rat_int(0)),
            NfElem::from_rational(&k, rat_int(1)),
        ]);
        let roots = isolate_roots_nf(&c2);
        assert_eq!(roots.len(), 2);
        // p(c) = c - theta: single root.
        let lin = UniPoly::from_coeffs(vec![th.f_neg(), NfElem::from_rational(&k, rat_int(1))]);
        assert_eq!(isolate_roots_nf(&lin).len(), 1);
    }

    #[test]
    fn extend_rationals_by_sqrt2() {
        let q = NumberField::rationals();
        let p = UniPoly::from_coeffs(vec![
            NfElem::from_rational(&q, rat_int(-2)),
            NfElem::from_rational(&q, rat_int(0)),
            NfElem::from_rational(&q, rat_int(1)),
        ]);
        let ext = extend_by_root(&q, &p, &(rat_int(1), rat_int(2))).unwrap();
        assert_eq!(ext.field.degree(), 2);
        assert_eq!(ext.root.sign(), 1);
        let sq = ext.root.f_mul(&ext.root);
        assert_eq!(sq.as_rational(), Some(rat_int(2)));
    }

    #[test]
    fn extend_sqrt2_by_sqrt3() {
        let k = sqrt2_field();
        let p = UniPoly::from_coeffs(vec![
            NfElem::from_rational(&k, rat_int(-3)),
            NfElem::from_rational(&k, rat_int(0)),
            NfElem::from_rational(&k, rat_int(1)),
        ]);
        let ext = extend_by_root(&k, &p, &(rat_int(1), rat_int(2))).unwrap();
        assert_eq!(ext.field.degree(), 4);
        // Old generator still squares to 2, new root squares to 3.
        let t2 = ext.old_gen.f_mul(&ext.old_gen);
        assert_eq!(t2.as_rational(), Some(rat_int(2)));
        let r2 = ext.root.f_mul(&ext.root);
        assert_eq!(r2.as_rational(), Some(rat_int(3)));
        // And sqrt2 * sqrt3 = sqrt6 > 0.
        assert_eq!(ext.old_gen.f_mul(&ext.root).sign(), 1);
    }

    #[test]
    fn extension_degree_cap_enforced() {
        // Repeatedly adjoin square roots: 2, 3, 5 gives degree 8; adjoining
        // another (7) would need 16 and must fail.
        let mut field = NumberField::rationals();
        let mut iv_target = vec![
            (rat_int(-2), rat_int(2), 2i64),
            (rat_int(1), rat_int(2), 3),
            (rat_int(2), rat_int(3), 5),
        ];
        iv_target[0] = (rat_int(1), rat_int(2), 2);
        for (lo, hi, n) in iv_target {
            let p = UniPoly::from_coeffs(vec![
                NfElem::from_rational(&field, rat_int(-n)),
                NfElem::from_rational(&field, rat_int(0)),
                NfElem::from_rational(&field, rat_int(1)),
            ]);
            let ext = extend_by_root(&field, &p, &(lo, hi)).unwrap();
            field = ext.field;
        }
        assert_eq!(field.degree(), 8);
        let p = UniPoly::from_coeffs(vec![
            NfElem::from_rational(&field, rat_int(-7)),
            NfElem::from_rational(&field, rat_int(0)),
            NfElem::from_rational(&field, rat_int(1)),
        ]);
        let r = extend_by_root(&field, &p, &(rat_int(2), rat_int(3)));
        assert!(matches!(r, Err(AlgebraicError::DegreeCapExceeded(_))));
    }
}
