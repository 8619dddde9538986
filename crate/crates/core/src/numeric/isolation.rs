//! Certified real-root isolation for rational univariate polynomials via
//! Sturm chains and exact-sign bisection.

use super::unipoly::UniPoly;
use super::{rat, Rational};

/// Sturm chain of a squarefree polynomial.
pub fn sturm_chain(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(p.clone());
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sign variation count of the chain at a point.
pub fn variations_at(chain: &[UniPoly<Rational>], x: &Rational) -> usize {
    sign_changes(chain.iter().map(|p| p.sign_at(x)))
}

/// Number of distinct real roots of the chain's polynomial in `(lo, hi]`,
/// assuming neither endpoint is a root of the leading chain element.
pub fn count_roots(chain: &[UniPoly<Rational>], lo: &Rational, hi: &Rational) -> usize {
    variations_at(chain, lo).saturating_sub(variations_at(chain, hi))
}

/// Isolating intervals for all real roots of a squarefree polynomial.
/// Each returned `(lo, hi)` has `lo < hi`, non-root endpoints, and exactly
/// one real root inside.
pub fn isolate_real_roots(p: &UniPoly<Rational>) -> Vec<(Rational, Rational)> {
    let deg = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    if deg == 1 {
        let root = -(p.coeffs[0].clone() / p.coeffs[1].clone());
        return vec![(&root - rat(1, 1), &root + rat(1, 1))];
    }
    let chain = sturm_chain(p);
    let bound = p.root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    // Nudge endpoints off roots (the Cauchy bound is strict, but stay safe).
    while p.sign_at(&lo) == 0 {
        lo = &lo - rat(1, 1);
    }
    while p.sign_at(&hi) == 0 {
        hi = &hi + rat(1, 1);
    }
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = count_roots(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mut mid = (&a + &b) / rat(2, 1);
        // Keep endpoints off roots.
        if p.sign_at(&mid) == 0 {
            mid = (&a + &mid) / rat(2, 1);
            while p.sign_at(&mid) == 0 {
                mid = (&a + &mid) / rat(2, 1);
            }
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Halve an isolating interval of `p` (squarefree), keeping exactly one root
/// inside and non-root endpoints.
pub fn refine_step(p: &UniPoly<Rational>, iv: &(Rational, Rational)) -> (Rational, Rational) {
    let (lo, hi) = iv;
    let mut mid = (lo + hi) / rat(2, 1);
    if p.sign_at(&mid) == 0 {
        // The midpoint is the root itself; shrink around it asymmetrically.
        let m2 = (lo + &mid) / rat(2, 1);
        let m3 = (&mid + hi) / rat(2, 1);
        return (m2, m3);
    }
    // One half contains the root: detect by sign change against lo.
    let slo = p.sign_at(lo);
    let smid = p.sign_at(&mid);
    if slo != smid {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

/// Refine until the interval width drops below `eps`.
pub fn refine_to_width(
    p: &UniPoly<Rational>,
    iv: &(Rational, Rational),
    eps: &Rational,
) -> (Rational, Rational) {
    let mut cur = iv.clone();
    while &cur.1 - &cur.0 >= *eps {
        cur = refine_step(p, &cur);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat_int;

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn isolates_sqrt2() {
        let f = p(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        // Refine the positive root below width 1/100 and bracket sqrt(2).
        let pos = roots.iter().find(|(lo, _)| lo >= &rat_int(0) || {
            // the interval containing the positive root has hi > 1
            false
        });
        let (lo, hi) = refine_to_width(&f, pos.unwrap_or(&roots[1]), &rat(1, 100));
        assert!(lo < hi);
        assert!(f.sign_at(&lo) != f.sign_at(&hi));
    }

    #[test]
    fn no_real_roots() {
        let f = p(&[1, 0, 1]); // x^2 + 1
        assert!(isolate_real_roots(&f).is_empty());
    }

    #[test]
    fn counts_three_roots() {
        // x(x-1)(x+1) = x^3 - x
        let f = p(&[0, -1, 0, 1]);
        assert_eq!(isolate_real_roots(&f).len(), 3);
    }
}
