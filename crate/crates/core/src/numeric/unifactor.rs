//! Univariate factorization over the rationals: Berlekamp factorization
//! modulo a small prime, Hensel lifting, and subset recombination.

use super::unipoly::UniPoly;
use super::Rational;
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

// ---------------------------------------------------------------------------
// Integer polynomial helpers (Vec<BigInt>, index = power, top nonzero)
// ---------------------------------------------------------------------------

type ZPoly = Vec<BigInt>;

fn zp_trim(mut p: ZPoly) -> ZPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn zp_deg(p: &ZPoly) -> isize {
    p.len() as isize - 1
}

fn zp_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(out)
}

fn zp_content(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn zp_primitive(p: &ZPoly) -> ZPoly {
    let c = zp_content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Exact division test over Z; returns the quotient when it divides.
fn zp_exact_div(num: &ZPoly, den: &ZPoly) -> Option<ZPoly> {
    if den.is_empty() {
        return None;
    }
    if num.is_empty() {
        return Some(Vec::new());
    }
    if zp_deg(num) < zp_deg(den) {
        return None;
    }
    let mut rem = num.clone();
    let dd = den.len() - 1;
    let dl = den.last().unwrap().clone();
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        let (q, r) = c.div_rem(&dl);
        if !r.is_zero() {
            return None;
        }
        for (i, dc) in den.iter().enumerate() {
            rem[k - dd + i] -= &q * dc;
        }
        quot[k - dd] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(zp_trim(quot))
}

// ---------------------------------------------------------------------------
// Arithmetic mod a BigInt modulus
// ---------------------------------------------------------------------------

fn md(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    r
}

fn mp_reduce(p: &ZPoly, m: &BigInt) -> ZPoly {
    zp_trim(p.iter().map(|c| md(c, m)).collect())
}

fn mp_mul(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    mp_reduce(&zp_mul(a, b), m)
}

fn mp_add(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let mut v = BigInt::zero();
        if let Some(x) = a.get(i) {
            v += x;
        }
        if let Some(y) = b.get(i) {
            v += y;
        }
        out[i] = md(&v, m);
    }
    zp_trim(out)
}

fn mp_sub(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let mut v = BigInt::zero();
        if let Some(x) = a.get(i) {
            v += x;
        }
        if let Some(y) = b.get(i) {
            v -= y;
        }
        out[i] = md(&v, m);
    }
    zp_trim(out)
}

fn mod_inv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(md(&e.x, m))
    } else {
        None
    }
}

/// Division by a polynomial whose leading coefficient is invertible mod m.
fn mp_divrem(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let b = mp_reduce(b, m);
    assert!(!b.is_empty());
    let linv = mod_inv(b.last().unwrap(), m).expect("non-invertible leading coefficient");
    let mut rem = mp_reduce(a, m);
    if zp_deg(&rem) < zp_deg(&b) {
        return (Vec::new(), rem);
    }
    let dd = b.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        if k >= rem.len() {
            continue;
        }
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        let q = md(&(&c * &linv), m);
        for (i, bc) in b.iter().enumerate() {
            let idx = k - dd + i;
            let v = &rem[idx] - &q * bc;
            rem[idx] = md(&v, m);
        }
        quot[k - dd] = q;
    }
    (zp_trim(quot), zp_trim(rem))
}

fn mp_monic(p: &ZPoly, m: &BigInt) -> ZPoly {
    let p = mp_reduce(p, m);
    if p.is_empty() {
        return p;
    }
    let inv = mod_inv(p.last().unwrap(), m).expect("non-invertible lead");
    mp_reduce(&p.iter().map(|c| c * &inv).collect::<Vec<_>>(), m)
}

fn mp_gcd(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let mut x = mp_reduce(a, m);
    let mut y = mp_reduce(b, m);
    while !y.is_empty() {
        let r = mp_divrem(&x, &y, m).1;
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        mp_monic(&x, m)
    }
}

/// Extended gcd mod a prime: returns (g, s, t) with s*a + t*b = g, g monic.
fn mp_ext_gcd(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly, ZPoly) {
    let mut r0 = mp_reduce(a, m);
    let mut r1 = mp_reduce(b, m);
    let mut s0: ZPoly = vec![BigInt::one()];
    let mut s1: ZPoly = Vec::new();
    let mut t0: ZPoly = Vec::new();
    let mut t1: ZPoly = vec![BigInt::one()];
    while !r1.is_empty() {
        let (q, r) = mp_divrem(&r0, &r1, m);
        let ns = mp_sub(&s0, &mp_mul(&q, &s1, m), m);
        let nt = mp_sub(&t0, &mp_mul(&q, &t1, m), m);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let inv = mod_inv(r0.last().unwrap(), m).unwrap();
    let scale = |p: &ZPoly| mp_reduce(&p.iter().map(|c| c * &inv).collect::<Vec<_>>(), m);
    (scale(&r0), scale(&s0), scale(&t0))
}

fn mp_derivative(p: &ZPoly, m: &BigInt) -> ZPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(md(&(c * BigInt::from(i)), m));
    }
    zp_trim(out)
}

/// x^e mod (f, m) by square and multiply.
fn mp_powmod_x(e: &BigInt, f: &ZPoly, m: &BigInt) -> ZPoly {
    let mut result: ZPoly = vec![BigInt::one()];
    let mut base: ZPoly = vec![BigInt::zero(), BigInt::one()];
    base = mp_divrem(&base, f, m).1;
    let mut exp = e.clone();
    while exp > BigInt::zero() {
        if exp.is_odd() {
            result = mp_divrem(&mp_mul(&result, &base, m), f, m).1;
        }
        base = mp_divrem(&mp_mul(&base, &base, m), f, m).1;
        exp >>= 1;
    }
    result
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a squarefree monic polynomial mod p
// ---------------------------------------------------------------------------

fn berlekamp(f: &ZPoly, p: &BigInt) -> Vec<ZPoly> {
    let n = zp_deg(f) as usize;
    if n <= 1 {
        return vec![f.clone()];
    }
    // Q matrix: row i = coefficients of x^{i*p} mod f.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let e = BigInt::from(i) * p;
        let r = mp_powmod_x(&e, f, p);
        let mut row = vec![BigInt::zero(); n];
        for (j, c) in r.iter().enumerate() {
            row[j] = c.clone();
        }
        rows.push(row);
    }
    // B = Q^T - I acting on column vectors; we solve v Q = v, i.e. (Q - I)^T v = 0.
    // Work directly with M[i][j] = Q[j][i] - delta.
    let mut mat = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut v = rows[j][i].clone();
            if i == j {
                v -= BigInt::one();
            }
            mat[i][j] = md(&v, p);
        }
    }
    // Gaussian elimination to find the nullspace basis.
    let mut pivot_col_of_row: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0;
    for col in 0..n {
        let mut piv = None;
        for r in rank..n {
            if !mat[r][col].is_zero() {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        mat.swap(rank, piv);
        let inv = mod_inv(&mat[rank][col], p).unwrap();
        for c in 0..n {
            mat[rank][c] = md(&(&mat[rank][c] * &inv), p);
        }
        for r in 0..n {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..n {
                    let v = &mat[r][c] - &factor * &mat[rank][c];
                    mat[r][c] = md(&v, p);
                }
            }
        }
        pivot_col_of_row[rank] = Some(col);
        rank += 1;
    }
    let mut basis: Vec<ZPoly> = Vec::new();
    let pivot_cols: Vec<usize> = pivot_col_of_row.iter().flatten().copied().collect();
    for col in 0..n {
        if pivot_cols.contains(&col) {
            continue;
        }
        let mut v = vec![BigInt::zero(); n];
        v[col] = BigInt::one();
        for (r, pc) in pivot_cols.iter().enumerate() {
            let coeff = mat[r][col].clone();
            if !coeff.is_zero() {
                v[*pc] = md(&-coeff, p);
            }
        }
        basis.push(zp_trim(v));
    }
    let r = basis.len();
    if r <= 1 {
        return vec![f.clone()];
    }
    // Split using gcd(u, v - s) for each basis vector and each residue s.
    let mut factors = vec![f.clone()];
    'outer: for v in &basis {
        if zp_deg(v) < 1 {
            continue; // constant vector corresponds to the trivial subspace
        }
        let mut s = BigInt::zero();
        while &s < p {
            let mut next = Vec::new();
            let shifted = mp_sub(v, &vec![s.clone()], p);
            for u in &factors {
                if zp_deg(u) <= 1 {
                    next.push(u.clone());
                    continue;
                }
                let g = mp_gcd(u, &shifted, p);
                if zp_deg(&g) > 0 && zp_deg(&g) < zp_deg(u) {
                    let q = mp_divrem(u, &g, p).0;
                    next.push(g);
                    next.push(q);
                } else {
                    next.push(u.clone());
                }
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
            s += BigInt::one();
        }
    }
    factors.iter().map(|u| mp_monic(u, p)).collect()
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// One quadratic Hensel step: from f = g*h (mod m) with s*g + t*h = 1 (mod m)
/// to the same congruences mod m^2. `f`, `g`, `h` monic.
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = mp_sub(f, &mp_mul(g, h, &m2), &m2);
    let (q, r) = mp_divrem(&mp_mul(s, &e, &m2), h, &m2);
    let g1 = mp_add(g, &mp_add(&mp_mul(t, &e, &m2), &mp_mul(&q, g, &m2), &m2), &m2);
    let h1 = mp_add(h, &r, &m2);
    let b = mp_sub(&mp_add(&mp_mul(s, &g1, &m2), &mp_mul(t, &h1, &m2), &m2), &vec![BigInt::one()], &m2);
    let (c, d) = mp_divrem(&mp_mul(s, &b, &m2), &h1, &m2);
    let s1 = mp_sub(s, &d, &m2);
    let t1 = mp_sub(t, &mp_add(&mp_mul(t, &b, &m2), &mp_mul(&c, &g1, &m2), &m2), &m2);
    (g1, h1, s1, t1)
}

/// Lift the factorization of a monic polynomial (given mod `m_final`) from
/// its monic factorization mod p up to mod `m_final` (a power `p^(2^k)`).
fn hensel_lift_monic(
    fstar: &ZPoly,
    factors: &[ZPoly],
    p: &BigInt,
    m_final: &BigInt,
) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![mp_reduce(fstar, m_final)];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let mut g = vec![BigInt::one()];
    for u in left {
        g = mp_mul(&g, u, p);
    }
    let mut h = vec![BigInt::one()];
    for u in right {
        h = mp_mul(&h, u, p);
    }
    let (one, s, t) = mp_ext_gcd(&g, &h, p);
    debug_assert_eq!(zp_deg(&one), 0);
    let mut m = p.clone();
    let mut gg = g;
    let mut hh = h;
    let mut ss = s;
    let mut tt = t;
    while &m < m_final {
        let m2 = &m * &m;
        let (g1, h1, s1, t1) = hensel_step(&mp_reduce(fstar, &m2), &gg, &hh, &ss, &tt, &m);
        gg = g1;
        hh = h1;
        ss = s1;
        tt = t1;
        m = m2;
    }
    let mut out = hensel_lift_monic(&gg, left, p, m_final);
    out.extend(hensel_lift_monic(&hh, right, p, m_final));
    out
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination
// ---------------------------------------------------------------------------

fn sym_rep(p: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / BigInt::from(2);
    zp_trim(
        p.iter()
            .map(|c| {
                let r = md(c, m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // next combination
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

/// Factor a primitive squarefree integer polynomial with positive leading
/// coefficient into irreducible primitive integer polynomials.
fn factor_squarefree_z(f: &ZPoly) -> Vec<ZPoly> {
    let n = zp_deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    const PRIMES: [i64; 20] =
        [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73];
    let mut chosen = None;
    for &pi in PRIMES.iter() {
        let p = BigInt::from(pi);
        if (f.last().unwrap() % &p).is_zero() {
            continue;
        }
        let fp = mp_monic(f, &p);
        let dfp = mp_derivative(&fp, &p);
        if dfp.is_empty() {
            continue;
        }
        let g = mp_gcd(&fp, &dfp, &p);
        if zp_deg(&g) == 0 {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.expect("no suitable prime for squarefree reduction");
    let fp = mp_monic(f, &p);
    let modular = berlekamp(&fp, &p);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Coefficient bound (generous Mignotte-style): 2^n * height(f) * |lc|.
    let height: BigInt = f.iter().map(|c| c.abs()).max().unwrap();
    let lc = f.last().unwrap().clone();
    let bound: BigInt = (BigInt::one() << (n as usize + 2)) * &height * lc.abs() * BigInt::from(2);
    let mut modulus = p.clone();
    while modulus < bound {
        modulus = &modulus * &modulus;
    }
    let fstar = mp_monic(f, &modulus);
    let lifted = hensel_lift_monic(&fstar, &modular, &p, &modulus);

    let mut remaining = f.clone();
    let mut avail: Vec<ZPoly> = lifted;
    let mut out: Vec<ZPoly> = Vec::new();
    let mut size = 1;
    'search: while 2 * size <= avail.len() {
        for combo in subsets_of_size(avail.len(), size) {
            let lc_rem = remaining.last().unwrap().clone();
            let mut prod: ZPoly = vec![lc_rem.clone()];
            for &i in &combo {
                prod = mp_mul(&prod, &avail[i], &modulus);
            }
            let cand = zp_primitive(&sym_rep(&prod, &modulus));
            if cand.is_empty() {
                continue;
            }
            if let Some(q) = zp_exact_div(&remaining, &cand) {
                out.push(cand);
                remaining = zp_primitive(&q);
                let keep: Vec<ZPoly> = avail
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                avail = keep;
                continue 'search;
            }
        }
        size += 1;
    }
    if zp_deg(&remaining) > 0 {
        out.push(remaining);
    }
    out
}

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

fn to_integer_primitive(p: &UniPoly<Rational>) -> ZPoly {
    let mut den = BigInt::one();
    for c in &p.coeffs {
        let g = den.gcd(c.denom());
        den = den / g * c.denom();
    }
    let ints: ZPoly = p.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut prim = zp_primitive(&zp_trim(ints));
    if prim.last().map_or(false, |c| c.is_negative()) {
        prim = prim.iter().map(|c| -c).collect();
    }
    prim
}

fn from_integer(p: &ZPoly) -> UniPoly<Rational> {
    UniPoly::from_coeffs(p.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Monic irreducible factors of a nonzero rational polynomial, with
/// multiplicities. The rational unit making the product equal the input is
/// implied. Deterministic ordering: by degree, then by coefficient sequence.
pub fn factor_unipoly(p: &UniPoly<Rational>) -> Vec<(UniPoly<Rational>, usize)> {
    if p.is_zero() || p.degree() == Some(0) {
        return Vec::new();
    }
    let sf = p.squarefree_part();
    let zpoly = to_integer_primitive(&sf);
    let irr = factor_squarefree_z(&zpoly);
    let mut out: Vec<(UniPoly<Rational>, usize)> = Vec::new();
    for f in irr {
        let fq = from_integer(&f).monic();
        // Multiplicity by repeated exact division.
        let mut m = 0usize;
        let mut cur = p.clone();
        loop {
            let (q, r) = cur.divrem(&fq);
            if r.is_zero() {
                m += 1;
                cur = q;
            } else {
                break;
            }
        }
        debug_assert!(m >= 1);
        out.push((fq, m));
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| cmp_coeffs(&a.0, &b.0))
    });
    out
}

fn cmp_coeffs(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> std::cmp::Ordering {
    for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
        let c = x.cmp(y);
        if c != std::cmp::Ordering::Equal {
            return c;
        }
    }
    a.coeffs.len().cmp(&b.coeffs.len())
}

/// True when the polynomial is irreducible over the rationals.
pub fn is_irreducible(p: &UniPoly<Rational>) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => {
            let fs = factor_unipoly(p);
            fs.len() == 1 && fs[0].1 == 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat_int;

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn factors_difference_of_squares() {
        let f = p(&[-4, 0, 1]); // x^2 - 4
        let fs = factor_unipoly(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        assert_eq!(fs[0].0, p(&[-2, 1]));
        assert_eq!(fs[1].0, p(&[2, 1]));
    }

    #[test]
    fn x2_minus_2_is_irreducible() {
        assert!(is_irreducible(&p(&[-2, 0, 1])));
    }

    #[test]
    fn quartic_with_no_rational_roots_factors() {
        // x^4 - 4 = (x^2-2)(x^2+2)
        let fs = factor_unipoly(&p(&[-4, 0, 0, 0, 1]));
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, p(&[-2, 0, 1]));
        assert_eq!(fs[1].0, p(&[2, 0, 1]));
    }

    #[test]
    fn irreducible_quartic_stays_whole() {
        // c^4 + 2c^2 + 4 (no real roots, irreducible over Q)
        let fs = factor_unipoly(&p(&[4, 0, 2, 0, 1]));
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
        assert_eq!(fs[0].0.degree(), Some(4));
    }

    #[test]
    fn multiplicities_counted() {
        // (x-1)^2 (x+3)
        let f = p(&[3, -5, 1, 1]);
        let fs = factor_unipoly(&f);
        assert_eq!(fs.len(), 2);
        let sq: Vec<_> = fs.iter().filter(|(_, m)| *m == 2).collect();
        assert_eq!(sq.len(), 1);
        assert_eq!(sq[0].0, p(&[-1, 1]));
    }

    #[test]
    fn cyclotomic_like_degree6() {
        // (x^2+x+1)(x^3-2) stays as two factors
        let a = p(&[1, 1, 1]);
        let b = p(&[-2, 0, 0, 1]);
        let f = a.mul(&b);
        let fs = factor_unipoly(&f);
        assert_eq!(fs.len(), 2);
    }
}
