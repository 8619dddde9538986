//! Splitting an ideal into candidate-irreducible components by recursive
//! factoring of Groebner basis elements, with classification by dimension and
//! relevance filtering (components through the origin).

use crate::groebner::{dimension, normal_form, radical_membership, Ideal};
use crate::polyring::factor::{factor_over_q, squarefree_factors};
use crate::polyring::{MonomialOrder, PolyError, Polynomial};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum DecomposeError {
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// One piece of the splitting: its ideal, dimension, whether it passes
/// through the origin, and whether primality over Q was certified.
#[derive(Debug, Clone)]
pub struct Component {
    pub ideal: Ideal,
    pub dim: i64,
    pub contains_origin: bool,
    pub certified_irreducible: bool,
}

impl Component {
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self
            .ideal
            .generators()
            .iter()
            .map(|g| g.to_canonical_string())
            .collect();
        format!("V({})", gens.join(", "))
    }
}

fn basis_key(basis: &[Polynomial]) -> String {
    let strings: Vec<String> = basis.iter().map(|p| p.to_canonical_string()).collect();
    strings.join(" ; ")
}

/// Distinct irreducible factors, ignoring multiplicity and rational units.
fn element_factors(p: &Polynomial) -> Result<Vec<Polynomial>, PolyError> {
    squarefree_factors(p)
}

/// Certify primality over Q for the shapes the splitting produces: a single
/// irreducible generator, or a triangular basis of variable-solving linear
/// elements plus at most one irreducible element in the remaining variables.
fn certify_irreducible(basis: &[Polynomial]) -> bool {
    if basis.is_empty() {
        return true; // zero ideal: the whole space
    }
    let all_irreducible = basis.iter().all(|p| {
        factor_over_q(p)
            .map(|(_, fs)| fs.len() == 1 && fs[0].1 == 1)
            .unwrap_or(false)
    });
    if !all_irreducible {
        return false;
    }
    if basis.len() == 1 {
        return true;
    }
    // Triangular shape: each linear element solves its own variable; at most
    // one non-linear element, supported away from the solved variables.
    let ring = basis[0].ring();
    let mut solved: Vec<usize> = Vec::new();
    let mut nonlinear: Vec<&Polynomial> = Vec::new();
    for p in basis {
        if p.total_degree() == 1 {
            // Leading variable under lex.
            let order = MonomialOrder::lex(ring);
            let lt = p.leading_term(&order).unwrap().0.clone();
            let v = lt.0.iter().position(|&e| e == 1).unwrap();
            if solved.contains(&v) {
                return false;
            }
            solved.push(v);
        } else {
            nonlinear.push(p);
        }
    }
    if nonlinear.len() > 1 {
        return false;
    }
    if let Some(q) = nonlinear.first() {
        if q.support_vars().iter().any(|v| solved.contains(v)) {
            return false;
        }
    }
    true
}

/// Recursive factor-splitting decomposition. A reduced lex basis is computed
/// at each node; the first basis element with at least two distinct
/// irreducible factors splits the node into one child per factor. Elements
/// that are proper powers are replaced by their squarefree part. Unit
/// components are pruned and duplicates merged; containment between distinct
/// components is kept, matching the classical CAS output for these inputs.
pub fn decompose_ideal(ideal: &Ideal) -> Result<Vec<Component>, DecomposeError> {
    let ring = ideal.ring().clone();
    let order = MonomialOrder::lex(&ring);
    let mut results: Vec<Vec<Polynomial>> = Vec::new();
    let mut seen: std::collections::BTreeSet<String> = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<Polynomial>> = vec![ideal.generators().to_vec()];
    let mut guard = 0usize;
    while let Some(gens) = queue.pop() {
        guard += 1;
        assert!(guard < 100_000, "splitting did not terminate");
        let node = Ideal::new(&ring, gens);
        let basis = node.groebner_basis(&order);
        if basis.is_empty() {
            // Zero ideal: one component covering everything.
            if seen.insert(String::new()) {
                results.push(Vec::new());
            }
            continue;
        }
        if basis.len() == 1 && basis[0].is_constant() {
            continue; // unit ideal
        }
        // First element with a genuine factorization splits the node.
        let mut split: Option<Vec<Polynomial>> = None;
        for b in basis.iter() {
            let fs = element_factors(b)?;
            if fs.len() > 1 {
                split = Some(fs);
                break;
            }
        }
        if let Some(factors) = split {
            for f in factors {
                let mut child: Vec<Polynomial> = basis.to_vec();
                child.push(f);
                queue.push(child);
            }
            continue;
        }
        // Replace proper powers by their squarefree parts.
        let mut replaced = false;
        let mut next: Vec<Polynomial> = Vec::new();
        for b in basis.iter() {
            let fs = element_factors(b)?;
            if fs.len() == 1 && fs[0].total_degree() < b.total_degree() {
                next.push(fs[0].clone());
                replaced = true;
            } else {
                next.push(b.clone());
            }
        }
        if replaced {
            queue.push(next);
            continue;
        }
        let key = basis_key(&basis);
        if seen.insert(key) {
            results.push(basis.to_vec());
        }
    }

    let mut components: Vec<Component> = results
        .into_iter()
        .map(|basis| {
            let certified = certify_irreducible(&basis);
            let comp_ideal = Ideal::new(&ring, basis);
            let dim = dimension(&comp_ideal);
            let contains_origin = comp_ideal.contains_origin();
            Component { ideal: comp_ideal, dim, contains_origin, certified_irreducible: certified }
        })
        .collect();
    components.sort_by(|a, b| {
        b.dim
            .cmp(&a.dim)
            .then_with(|| basis_key(a.ideal.generators()).cmp(&basis_key(b.ideal.generators())))
    });
    Ok(components)
}

/// Keep components through the origin of dimension at least one.
pub fn relevant_components(components: &[Component]) -> Vec<Component> {
    components
        .iter()
        .filter(|c| c.contains_origin && c.dim >= 1)
        .cloned()
        .collect()
}

/// A polynomial vanishes on the whole variety of the ideal (radical
/// membership); re-exported here for union-soundness checks.
pub fn vanishes_on(p: &Polynomial, ideal: &Ideal) -> bool {
    radical_membership(p, ideal)
}

/// Membership of a polynomial in a component's ideal.
pub fn member(p: &Polynomial, ideal: &Ideal) -> bool {
    let order = MonomialOrder::lex(ideal.ring());
    let basis = ideal.groebner_basis(&order);
    normal_form(p, &basis, &order).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse::parse_polynomial;
    use crate::polyring::Ring;

    fn ring3() -> Ring {
        Ring::new(vec!["x", "y", "z"])
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect())
    }

    fn names(cs: &[Component]) -> Vec<String> {
        cs.iter().map(|c| c.describe()).collect()
    }

    #[test]
    fn splits_difference_of_squares() {
        let r = ring3();
        let cs = decompose_ideal(&ideal(&r, &["x^2 - y^2"])).unwrap();
        assert_eq!(names(&cs), vec!["V(x + y)", "V(x - y)"]);
        assert!(cs.iter().all(|c| c.certified_irreducible));
        assert!(cs.iter().all(|c| c.dim == 2));
    }

    #[test]
    fn lagrange_ideal_splits_into_two_lines() {
        let r = ring3();
        let cs = decompose_ideal(&ideal(&r, &["-x*y - y*z", "y - x + z"])).unwrap();
        assert_eq!(cs.len(), 2);
        let order = MonomialOrder::lex(&r);
        let want1 = ideal(&r, &["y", "-x + z"]);
        let want2 = ideal(&r, &["2*x - y", "y + 2*z"]);
        assert!(cs.iter().any(|c| c.ideal.same_ideal(&want1, &order)));
        assert!(cs.iter().any(|c| c.ideal.same_ideal(&want2, &order)));
        assert!(cs.iter().all(|c| c.dim == 1 && c.contains_origin));
    }

    #[test]
    fn first_discriminant_reproduces_five_components() {
        let r = ring3();
        // Generators of the discriminant ideal of (xy - yz + zx)/(x^2+y^2+z^2).
        let gens = &[
            "(x + y)*(x - y - z)*(x^2 + y^2 + z^2)",
            "(x + z)*(x - y - z)*(x^2 + y^2 + z^2)",
            "(y - z)*(x - y - z)*(x^2 + y^2 + z^2)",
        ];
        let cs = decompose_ideal(&ideal(&r, gens)).unwrap();
        assert_eq!(cs.len(), 5);
        let order = MonomialOrder::lex(&r);
        let expected = [
            ideal(&r, &["y - x + z"]),
            ideal(&r, &["x^2 + y^2 + z^2"]),
            ideal(&r, &["x + y", "z - 2*x"]),
            ideal(&r, &["x + y", "z + x"]),
            ideal(&r, &["x + y", "z^2 + 2*x^2"]),
        ];
        for want in &expected {
            assert!(
                cs.iter().any(|c| c.ideal.same_ideal(want, &order)),
                "missing component {:?}",
                want.generators().iter().map(|g| g.to_canonical_string()).collect::<Vec<_>>()
            );
        }
        let dims: Vec<i64> = cs.iter().map(|c| c.dim).collect();
        assert_eq!(dims.iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 3);
        assert!(cs.iter().all(|c| c.contains_origin));
    }

    #[test]
    fn relevance_filter() {
        let r = ring3();
        // A point off the origin, a dim-0 ideal at the origin, and a line.
        let cs = vec![
            decompose_ideal(&ideal(&r, &["x - 1", "y", "z"])).unwrap(),
            decompose_ideal(&ideal(&r, &["x", "y", "z"])).unwrap(),
            decompose_ideal(&ideal(&r, &["x", "y"])).unwrap(),
        ]
        .concat();
        let rel = relevant_components(&cs);
        assert_eq!(rel.len(), 1);
        assert_eq!(rel[0].describe(), "V(x, y)");
    }

    #[test]
    fn idempotence_on_returned_components() {
        let r = ring3();
        let cs = decompose_ideal(&ideal(&r, &["-x*y - y*z", "y - x + z"])).unwrap();
        let order = MonomialOrder::lex(&r);
        for c in &cs {
            let again = decompose_ideal(&c.ideal).unwrap();
            assert_eq!(again.len(), 1);
            assert!(again[0].ideal.same_ideal(&c.ideal, &order));
        }
    }

    #[test]
    fn union_soundness_by_radical_membership() {
        let r = ring3();
        let i = ideal(&r, &["x^2 - y^2"]);
        let cs = decompose_ideal(&i).unwrap();
        // A polynomial vanishes on V(I) iff it vanishes on every component.
        for probe in ["(x + y)*(x - y)", "x + y", "x^2 - y^2", "z"] {
            let p = parse_polynomial(&r, probe).unwrap();
            let on_all = cs.iter().all(|c| vanishes_on(&p, &c.ideal));
            let on_union = vanishes_on(&p, &i);
            assert_eq!(on_all, on_union, "probe {probe}");
        }
    }

    #[test]
    fn zero_ideal_is_the_whole_space() {
        let r = ring3();
        let z = Ideal::new(&r, vec![Polynomial::zero(&r)]);
        let cs = decompose_ideal(&z).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].dim, 3);
        assert!(cs[0].contains_origin);
    }

    #[test]
    fn unit_ideal_has_no_components() {
        let r = ring3();
        let cs = decompose_ideal(&ideal(&r, &["x", "x - 1"])).unwrap();
        assert!(cs.is_empty());
    }
}
