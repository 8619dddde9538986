//! Buchberger's algorithm with normal pair selection and the coprimality and
//! chain criteria, reduced bases, elimination ideals, ring-map kernels, and
//! ideal dimension via independent variable sets of the initial ideal.

use crate::numeric::Rational;
use crate::polyring::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};
use num::One;
use std::sync::{Arc, Mutex};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum GroebnerError {
    #[error("the unit ideal has no height")]
    UnitIdeal,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// An ideal given by generators, with cached reduced Groebner bases.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<Vec<(MonomialOrder, Arc<Vec<Polynomial>>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().unwrap().clone();
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), cache: Mutex::new(cache) }
    }
}

impl Ideal {
    /// The zero ideal is represented by the single generator 0.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Ideal {
        let mut gens = generators;
        if gens.is_empty() {
            gens.push(Polynomial::zero(ring));
        }
        debug_assert!(gens.iter().all(|g| g.ring() == ring));
        Ideal { ring: ring.clone(), generators: gens, cache: Mutex::new(Vec::new()) }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    /// Reduced Groebner basis (monic, sorted by decreasing leading monomial);
    /// cached per order. The zero ideal yields an empty basis.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        {
            let cache = self.cache.lock().unwrap();
            for (o, b) in cache.iter() {
                if o == order {
                    return b.clone();
                }
            }
        }
        let basis = Arc::new(buchberger(&self.ring, &self.generators, order));
        let mut cache = self.cache.lock().unwrap();
        cache.push((order.clone(), basis.clone()));
        basis
    }

    pub fn is_unit_ideal(&self, order: &MonomialOrder) -> bool {
        let b = self.groebner_basis(order);
        b.len() == 1 && b[0].is_constant() && !b[0].is_zero()
    }

    /// Ideal membership via normal form against a reduced basis.
    pub fn contains(&self, p: &Polynomial, order: &MonomialOrder) -> bool {
        let b = self.groebner_basis(order);
        normal_form(p, &b, order).is_zero()
    }

    /// Equality as ideals (mutual generator membership).
    pub fn same_ideal(&self, other: &Ideal, order: &MonomialOrder) -> bool {
        self.generators.iter().all(|g| other.contains(g, order))
            && other.generators.iter().all(|g| self.contains(g, order))
    }

    pub fn contains_ideal(&self, other: &Ideal, order: &MonomialOrder) -> bool {
        other.generators.iter().all(|g| self.contains(g, order))
    }

    /// All generators vanish at the origin.
    pub fn contains_origin(&self) -> bool {
        let zeros = vec![Rational::from_integer(0.into()); self.ring.nvars()];
        self.generators
            .iter()
            .all(|g| g.evaluate(&zeros).map(|v| num::Zero::is_zero(&v)).unwrap_or(false))
    }
}

/// Fully reduced normal form of `p` against `basis` under `order`: no term of
/// the result is divisible by any basis leading monomial.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let ring = p.ring().clone();
    let leads: Vec<(Monomial, Rational, &Polynomial)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let (m, c) = b.leading_term(order).unwrap();
            (m.clone(), c.clone(), b)
        })
        .collect();
    let mut rem = Polynomial::zero(&ring);
    let mut work = p.clone();
    while !work.is_zero() {
        let (wm, wc) = {
            let lt = work.leading_term(order).unwrap();
            (lt.0.clone(), lt.1.clone())
        };
        let mut reduced = false;
        for (lm, lc, b) in &leads {
            if lm.divides(&wm) {
                let m = wm.div(lm);
                let c = &wc / lc;
                work = work.sub(&b.mul_monomial(&m, &c));
                reduced = true;
                break;
            }
        }
        if !reduced {
            // Move the leading term into the remainder and continue below it.
            let t = Polynomial::from_terms(&ring, vec![(wm.clone(), wc.clone())]);
            rem = rem.add(&t);
            work = work.sub(&t);
        }
    }
    rem
}

/// The S-polynomial of two nonzero polynomials.
pub fn spoly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = {
        let lt = f.leading_term(order).unwrap();
        (lt.0.clone(), lt.1.clone())
    };
    let (gm, gc) = {
        let lt = g.leading_term(order).unwrap();
        (lt.0.clone(), lt.1.clone())
    };
    let l = fm.lcm(&gm);
    let a = f.mul_monomial(&l.div(&fm), &(Rational::one() / fc));
    let b = g.mul_monomial(&l.div(&gm), &(Rational::one() / gc));
    a.sub(&b)
}

/// Buchberger's algorithm producing the unique reduced Groebner basis, monic,
/// sorted by strictly decreasing leading monomial. Pair selection: minimal
/// lcm under the order (normal strategy), ties by generator index; the
/// coprimality and chain criteria prune pairs.
pub fn buchberger(ring: &Ring, generators: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let _ = ring;
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        if !g.is_zero() {
            basis.push(g.integer_primitive(order).1);
        }
    }
    if basis.is_empty() {
        return Vec::new();
    }
    let lm = |p: &Polynomial| -> Monomial { p.leading_term(order).unwrap().0.clone() };
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut treated: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // Normal selection: minimal lcm of leading monomials.
        let mut best = 0usize;
        let mut best_lcm = lm(&basis[pairs[0].0]).lcm(&lm(&basis[pairs[0].1]));
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lm(&basis[i]).lcm(&lm(&basis[j]));
            if order.cmp(&l, &best_lcm) == std::cmp::Ordering::Less {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        treated.insert((i, j));
        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);
        let l = lmi.lcm(&lmj);
        // Coprimality criterion.
        if l == lmi.mul(&lmj) {
            continue;
        }
        // Chain criterion: some k with lm(k) | lcm(i,j) and both (i,k) and
        // (j,k) already treated.
        let mut chained = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if lm(&basis[k]).divides(&l) {
                let a = (i.min(k), i.max(k));
                let b = (j.min(k), j.max(k));
                if treated.contains(&a) && treated.contains(&b) {
                    chained = true;
                    break;
                }
            }
        }
        if chained {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.integer_primitive(order).1;
            let new_idx = basis.len();
            basis.push(r);
            for t in 0..new_idx {
                pairs.push((t, new_idx));
            }
        }
    }
    // Interreduce to the unique reduced basis. First minimalize the leading
    // monomial set (dropping redundant elements, keeping one per monomial),
    // then tail-reduce; leading monomials are stable during the second phase.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let li = lm(&basis[i]);
            let lj = lm(&basis[j]);
            if lj.divides(&li) && (lj != li || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, q)| q.clone())
                .collect();
            let r = normal_form(&minimal[i], &others, order).integer_primitive(order).1;
            if r != minimal[i] {
                changed = true;
                minimal[i] = r;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| order.cmp(&lm(b), &lm(a)));
    let basis = minimal;
    // Monic presentation.
    basis
        .iter()
        .map(|p| {
            let c = p.leading_term(order).unwrap().1.clone();
            p.mul_scalar(&(Rational::one() / c))
        })
        .collect()
}

/// Generators of the elimination ideal `I ∩ K[keep]`, computed from a lex
/// basis ranking the eliminated variables above the kept ones. The result
/// lives in the sub-ring spanned by `keep` (declaration order preserved).
pub fn elimination_ideal(ideal: &Ideal, keep: &[&str]) -> Ideal {
    let ring = ideal.ring();
    let eliminated: Vec<&str> = ring
        .vars()
        .iter()
        .filter(|v| !keep.contains(&v.as_str()))
        .map(|v| v.as_str())
        .collect();
    let order = MonomialOrder::lex_eliminating(ring, &eliminated);
    let basis = ideal.groebner_basis(&order);
    let keep_ring = Ring::new(
        ring.vars()
            .iter()
            .filter(|v| keep.contains(&v.as_str()))
            .cloned()
            .collect::<Vec<_>>(),
    );
    let keep_idx: Vec<usize> = ring
        .vars()
        .iter()
        .enumerate()
        .filter(|(_, v)| keep.contains(&v.as_str()))
        .map(|(i, _)| i)
        .collect();
    let mut gens = Vec::new();
    for p in basis.iter() {
        let ok = p
            .terms()
            .all(|(m, _)| m.0.iter().enumerate().all(|(i, &e)| e == 0 || keep_idx.contains(&i)));
        if ok {
            gens.push(p.project(&keep_ring).expect("support inside kept variables"));
        }
    }
    Ideal::new(&keep_ring, gens)
}

/// Kernel of the ring map `source_i -> image_i` into `K[y]/modulo`, computed
/// as `(modulo·T + (image_i - source_i)) ∩ K[source]` in the combined ring.
pub fn ring_map_kernel(
    source_vars: &[&str],
    images: &[Polynomial],
    modulo: &Ideal,
) -> Result<Ideal, GroebnerError> {
    assert_eq!(source_vars.len(), images.len());
    let target_ring = modulo.ring();
    let combined = target_ring.extended(source_vars.to_vec());
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in modulo.generators() {
        if !g.is_zero() {
            gens.push(g.embed(&combined)?);
        }
    }
    for (v, img) in source_vars.iter().zip(images.iter()) {
        let xv = Polynomial::var(&combined, v)?;
        gens.push(img.embed(&combined)?.sub(&xv));
    }
    let ideal = Ideal::new(&combined, gens);
    Ok(elimination_ideal(&ideal, source_vars))
}

/// Krull dimension of `V(I)` via the largest variable subset independent
/// modulo the initial ideal (lex basis). Unit ideal: -1. Zero ideal: n.
pub fn dimension(ideal: &Ideal) -> i64 {
    let ring = ideal.ring();
    let n = ring.nvars();
    let order = MonomialOrder::lex(ring);
    let basis = ideal.groebner_basis(&order);
    if basis.is_empty() {
        return n as i64;
    }
    if basis.len() == 1 && basis[0].is_constant() {
        return -1;
    }
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|p| p.leading_term(&order).unwrap().0.clone())
        .collect();
    let mut best: i64 = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        // U independent iff no leading monomial is supported inside U.
        let independent = lms.iter().all(|m| {
            !m.0.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || mask & (1 << i) != 0)
        });
        if independent {
            best = size;
        }
    }
    best
}

/// Height as codimension; exact for the equidimensional inputs handled here.
pub fn height(ideal: &Ideal) -> Result<u32, GroebnerError> {
    let d = dimension(ideal);
    if d < 0 {
        return Err(GroebnerError::UnitIdeal);
    }
    Ok(ideal.ring().nvars() as u32 - d as u32)
}

/// Radical membership by the Rabinowitsch trick: `p` vanishes on `V(I)` iff
/// `1 ∈ I + (1 - t·p)` in the ring extended by a fresh variable.
pub fn radical_membership(p: &Polynomial, ideal: &Ideal) -> bool {
    if p.is_zero() {
        return true;
    }
    let ring = ideal.ring();
    let mut fresh = "t0".to_string();
    while ring.var_index(&fresh).is_some() {
        fresh.push('0');
    }
    let ext = ring.extended(vec![fresh.clone()]);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.embed(&ext).unwrap())
        .collect();
    let t = Polynomial::var(&ext, &fresh).unwrap();
    let one = Polynomial::one(&ext);
    gens.push(one.sub(&t.mul(&p.embed(&ext).unwrap())));
    let extended = Ideal::new(&ext, gens);
    let order = MonomialOrder::grlex(&ext);
    extended.is_unit_ideal(&order)
}

/// Check that every S-polynomial of the basis reduces to zero (the Buchberger
/// criterion); used by tests and the acceptance suite.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = spoly(&basis[i], &basis[j], order);
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::polyring::parse::parse_polynomial;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(vars.to_vec())
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| p(r, s)).collect())
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["z", "y", "u", "x"]);
        let order = MonomialOrder::lex(&r);
        let basis = vec![p(&r, "x")];
        assert!(normal_form(&p(&r, "x^2"), &basis, &order).is_zero());
        // One division step: y reduces by y+x to -x under lex z>y>u>x.
        let basis = vec![p(&r, "2*x + u"), p(&r, "y + x"), p(&r, "z + x")];
        assert_eq!(normal_form(&p(&r, "y"), &basis, &order), p(&r, "-x"));
        assert_eq!(normal_form(&p(&r, "7"), &basis, &order), p(&r, "7"));
    }

    #[test]
    fn first_projection_basis() {
        let r = ring(&["z", "y", "u", "x"]);
        let i = ideal(&r, &["x + y", "z + x", "u - (y + z)"]);
        let order = MonomialOrder::lex(&r);
        let b = i.groebner_basis(&order);
        let strings: Vec<String> = b.iter().map(|q| q.to_canonical_string()).collect();
        assert_eq!(strings, vec!["z + x", "y + x", "u + 2*x"]);
        assert!(is_groebner_basis(&b, &order));
    }

    #[test]
    fn second_projection_basis() {
        let r = ring(&["z", "y", "u", "x"]);
        let i = ideal(&r, &["z + y", "-2*z^2 + x^2", "u - (y + 2*z)"]);
        let order = MonomialOrder::lex(&r);
        let b = i.groebner_basis(&order);
        let strings: Vec<String> = b.iter().map(|q| q.to_canonical_string()).collect();
        assert_eq!(strings, vec!["z - u", "y + u", "u^2 - 1/2*x^2"]);
        assert!(is_groebner_basis(&b, &order));
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x"]);
        let b = i.groebner_basis(&MonomialOrder::lex(&r));
        assert_eq!(b.len(), 1);
        assert_eq!(b[0], p(&r, "x"));
    }

    #[test]
    fn elimination_first_example() {
        let r = ring(&["z", "y", "u", "x"]);
        let i = ideal(&r, &["x + y", "z + x", "u - (y + z)"]);
        let e = elimination_ideal(&i, &["u", "x"]);
        assert_eq!(e.generators().len(), 1);
        assert_eq!(e.generators()[0].to_canonical_string(), "u + 2*x");
    }

    #[test]
    fn elimination_second_example() {
        let r = ring(&["z", "y", "u", "x"]);
        let i = ideal(&r, &["z + y", "-2*z^2 + x^2", "u - (y + 2*z)"]);
        let e = elimination_ideal(&i, &["u", "x"]);
        assert_eq!(e.generators().len(), 1);
        let g = &e.generators()[0];
        let r2 = g.ring().clone();
        // 2u^2 - x^2 up to a scalar; the monic form is u^2 - x^2/2.
        let expect = parse_polynomial(&r2, "u^2 - 1/2*x^2").unwrap();
        assert_eq!(g, &expect, "got {}", g.to_canonical_string());
    }

    #[test]
    fn elimination_quartic_example() {
        let r = ring(&["z", "y", "u", "x"]);
        let i = ideal(&r, &["-2*z^2 + x^2", "3*z^2 + y^2", "u - (y + z)"]);
        let e = elimination_ideal(&i, &["u", "x"]);
        assert_eq!(e.generators().len(), 1);
        let g = &e.generators()[0];
        let r2 = g.ring().clone();
        let expect = parse_polynomial(&r2, "u^4 + 2*u^2*x^2 + 4*x^4").unwrap();
        assert_eq!(g, &expect, "got {}", g.to_canonical_string());
    }

    #[test]
    fn kernel_of_ring_map() {
        let r = ring(&["x", "y", "z"]);
        let j = ideal(&r, &["x + y", "z + x"]);
        let images = vec![p(&r, "x"), p(&r, "y + z")];
        let k = ring_map_kernel(&["s", "t"], &images, &j).unwrap();
        assert_eq!(k.generators().len(), 1);
        // 2s + t up to monic scaling.
        let g = &k.generators()[0];
        let r2 = g.ring().clone();
        let expect = parse_polynomial(&r2, "s + 1/2*t").unwrap();
        assert_eq!(g, &expect, "got {}", g.to_canonical_string());
    }

    #[test]
    fn kernel_identity_and_quotient() {
        let r1 = ring(&["y"]);
        let zero = Ideal::new(&r1, vec![Polynomial::zero(&r1)]);
        let k = ring_map_kernel(&["s"], &[p(&r1, "y")], &zero).unwrap();
        assert!(k.generators().iter().all(|g| g.is_zero()));
        let jy = ideal(&r1, &["y"]);
        let k2 = ring_map_kernel(&["s"], &[p(&r1, "y")], &jy).unwrap();
        assert_eq!(k2.generators().len(), 1);
        assert_eq!(k2.generators()[0].to_canonical_string(), "s");
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(dimension(&ideal(&r, &["x + y", "z + x"])), 1);
        assert_eq!(dimension(&ideal(&r, &["x", "y", "z"])), 0);
        assert_eq!(dimension(&ideal(&r, &["y - x + z"])), 2);
        assert_eq!(dimension(&ideal(&r, &["1"])), -1);
        assert_eq!(dimension(&Ideal::new(&r, vec![Polynomial::zero(&r)])), 3);
    }

    #[test]
    fn height_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(height(&ideal(&r, &["x"])).unwrap(), 1);
        assert_eq!(height(&ideal(&r, &["x", "y"])).unwrap(), 2);
        // Lagrange ideal of the first worked surface with A=1, B=2, C=1.
        let lagr = ideal(&r, &["-x*y - y*z", "y - x + z"]);
        assert_eq!(dimension(&lagr), 1);
        assert_eq!(height(&lagr).unwrap(), 2);
        assert!(height(&ideal(&r, &["1"])).is_err());
    }

    #[test]
    fn radical_membership_works() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^2"]);
        assert!(radical_membership(&p(&r, "x"), &i));
        assert!(!radical_membership(&p(&r, "y"), &i));
        let sph = ideal(&r, &["x^2 + y^2 + z^2"]);
        assert!(radical_membership(&p(&r, "x^2 + y^2 + z^2"), &sph));
        // The sphere lies inside the zero set of itself scaled.
        assert!(radical_membership(&p(&r, "2*x^2 + 2*y^2 + 2*z^2"), &sph));
    }

    #[test]
    fn s_polynomials_reduce_to_zero_on_every_basis() {
        let r = ring(&["x", "y", "z"]);
        for gens in [
            vec!["x*y - z", "y*z - x", "x*z - y"],
            vec!["x^2 + y", "x*y + z^2", "z^3 - x"],
            vec!["x + y + z", "x*y + y*z + x*z", "x*y*z - 1"],
        ] {
            let i = ideal(&r, &gens);
            for order in [MonomialOrder::lex(&r), MonomialOrder::grlex(&r)] {
                let b = i.groebner_basis(&order);
                assert!(is_groebner_basis(&b, &order), "failed for {gens:?}");
            }
        }
    }

    #[test]
    fn initial_ideal_stability() {
        // I ⊆ J with in(I) = in(J) forces I = J: checked on a fixture pair.
        let r = ring(&["x", "y"]);
        let order = MonomialOrder::lex(&r);
        let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
        let j = Ideal::new(&r, i.groebner_basis(&order).to_vec());
        assert!(i.same_ideal(&j, &order));
    }

    #[test]
    fn elimination_members_lie_in_ideal() {
        let r = ring(&["z", "y", "u", "x"]);
        let i = ideal(&r, &["z + y", "-2*z^2 + x^2", "u - (y + 2*z)"]);
        let e = elimination_ideal(&i, &["u", "x"]);
        let order = MonomialOrder::lex(&r);
        for g in e.generators() {
            let lifted = g.embed(&r).unwrap();
            assert!(i.contains(&lifted, &order));
        }
    }

    #[test]
    fn scaled_bases_compare_equal_up_to_scalar() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["2*x + 4*y"]);
        let b = i.groebner_basis(&MonomialOrder::lex(&r));
        assert_eq!(b[0], p(&r, "x + 2*y"));
        let _ = rat(1, 2);
    }
}
