//! The discriminant ideal of a rational function: polynomial clearings of the
//! 2x2 minors of the matrix pairing the position vector with the gradient.

use crate::groebner::Ideal;
use crate::polyring::{PolyError, Polynomial, RationalFunction};

/// `f_{vi,vj} = vi*(g*df/dvj - f*dg/dvj) - vj*(g*df/dvi - f*dg/dvi)`.
fn minor_clearing(
    q: &RationalFunction,
    vi: &str,
    vj: &str,
) -> Result<Polynomial, PolyError> {
    let f = &q.num;
    let g = &q.den;
    let ring = f.ring();
    let xi = Polynomial::var(ring, vi)?;
    let xj = Polynomial::var(ring, vj)?;
    let dfi = f.partial_derivative(vi)?;
    let dfj = f.partial_derivative(vj)?;
    let dgi = g.partial_derivative(vi)?;
    let dgj = g.partial_derivative(vj)?;
    let aj = g.mul(&dfj).sub(&f.mul(&dgj));
    let ai = g.mul(&dfi).sub(&f.mul(&dgi));
    Ok(xi.mul(&aj).sub(&xj.mul(&ai)))
}

/// Discriminant ideal of a three-variable quotient: the ideal generated by
/// the three cleared minors, emitted raw (no reduction or factoring).
pub fn discriminant_ideal3(q: &RationalFunction) -> Result<Ideal, PolyError> {
    let ring = q.ring().clone();
    assert_eq!(ring.nvars(), 3, "expected a three-variable ring");
    let vars: Vec<String> = ring.vars().to_vec();
    let (v0, v1, v2) = (vars[0].as_str(), vars[1].as_str(), vars[2].as_str());
    let f01 = minor_clearing(q, v0, v1)?;
    let f02 = minor_clearing(q, v0, v2)?;
    let f12 = minor_clearing(q, v1, v2)?;
    Ok(Ideal::new(&ring, vec![f01, f02, f12]))
}

/// Two-variable analogue: the principal ideal of the single cleared minor.
pub fn discriminant_ideal2(q: &RationalFunction) -> Result<Ideal, PolyError> {
    let ring = q.ring().clone();
    assert_eq!(ring.nvars(), 2, "expected a two-variable ring");
    let vars: Vec<String> = ring.vars().to_vec();
    let gen = minor_clearing(q, vars[0].as_str(), vars[1].as_str())?;
    Ok(Ideal::new(&ring, vec![gen]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse::parse_polynomial;
    use crate::polyring::Ring;

    fn rf(r: &Ring, num: &str, den: &str) -> RationalFunction {
        RationalFunction::new(
            parse_polynomial(r, num).unwrap(),
            parse_polynomial(r, den).unwrap(),
        )
    }

    #[test]
    fn linear_over_one() {
        // q = x/1: minors are -y, -z, 0 (the x-axis).
        let r = Ring::new(vec!["x", "y", "z"]);
        let i = discriminant_ideal3(&rf(&r, "x", "1")).unwrap();
        let strings: Vec<String> =
            i.generators().iter().map(|g| g.to_canonical_string()).collect();
        assert_eq!(strings, vec!["-y", "-z", "0"]);
    }

    #[test]
    fn first_worked_quotient_generators_factor() {
        let r = Ring::new(vec!["x", "y", "z"]);
        let q = rf(&r, "y*x - z*y + z*x", "x^2 + y^2 + z^2");
        let i = discriminant_ideal3(&q).unwrap();
        // Frozen from an independent symbolic expansion:
        // each generator is (linear)*(x - y - z)*(x^2+y^2+z^2).
        let expect = [
            "(x + y)*(x - y - z)*(x^2 + y^2 + z^2)",
            "(x + z)*(x - y - z)*(x^2 + y^2 + z^2)",
            "(y - z)*(x - y - z)*(x^2 + y^2 + z^2)",
        ];
        for (g, e) in i.generators().iter().zip(expect.iter()) {
            let ep = parse_polynomial(&r, e).unwrap();
            assert_eq!(g, &ep, "generator {}", g.to_canonical_string());
        }
    }

    #[test]
    fn antisymmetry_of_minor() {
        let r = Ring::new(vec!["x", "y", "z"]);
        let q = rf(&r, "x^2*y*z", "x^2 + y^2 + z^2");
        let f_xy = minor_clearing(&q, "x", "y").unwrap();
        let f_yx = minor_clearing(&q, "y", "x").unwrap();
        assert_eq!(f_xy, f_yx.neg());
    }

    #[test]
    fn generator_equals_g_squared_times_minor() {
        // g^2*(xi dq/dxj - xj dq/dxi) == f_{xi,xj} as polynomials.
        let r = Ring::new(vec!["x", "y", "z"]);
        for (num, den) in [
            ("x*y + z^2", "x^2 + y^2 + z^2"),
            ("x^2 - y*z", "1 + x^2"),
            ("x + y + z", "x^2 + 1"),
        ] {
            let q = rf(&r, num, den);
            let f = &q.num;
            let g = &q.den;
            let xi = parse_polynomial(&r, "x").unwrap();
            let xj = parse_polynomial(&r, "y").unwrap();
            // g^2 * (xi*dq/dy - xj*dq/dx) where dq/dv = (g f_v - f g_v)/g^2.
            let lhs = xi
                .mul(&g.mul(&f.partial_derivative("y").unwrap()).sub(&f.mul(&g.partial_derivative("y").unwrap())))
                .sub(&xj.mul(&g.mul(&f.partial_derivative("x").unwrap()).sub(&f.mul(&g.partial_derivative("x").unwrap()))));
            let rhs = minor_clearing(&q, "x", "y").unwrap();
            assert_eq!(lhs, rhs, "mismatch on {num}/{den}");
        }
    }

    #[test]
    fn scaling_multiplies_generators_by_square() {
        let r = Ring::new(vec!["x", "y", "z"]);
        let q = rf(&r, "x*y - y*z + z*x", "x^2 + y^2 + z^2");
        let q3 = rf(&r, "3*x*y - 3*y*z + 3*z*x", "3*x^2 + 3*y^2 + 3*z^2");
        let i1 = discriminant_ideal3(&q).unwrap();
        let i2 = discriminant_ideal3(&q3).unwrap();
        let nine = crate::numeric::rat(9, 1);
        for (a, b) in i1.generators().iter().zip(i2.generators().iter()) {
            assert_eq!(&a.mul_scalar(&nine), b);
        }
    }

    #[test]
    fn two_variable_constant_gives_zero_ideal() {
        let r = Ring::new(vec!["x", "u"]);
        let i = discriminant_ideal2(&rf(&r, "5", "1")).unwrap();
        assert!(i.is_zero_ideal());
    }

    #[test]
    fn two_variable_even_odd_split() {
        // (x^2-u^2)/(x^2+u^2): generator is -4xu(x^2+u^2), frozen from an
        // independent symbolic expansion; its zero set contains both axes.
        let r = Ring::new(vec!["x", "u"]);
        let i = discriminant_ideal2(&rf(&r, "x^2 - u^2", "x^2 + u^2")).unwrap();
        let expect = parse_polynomial(&r, "-4*x*u*(x^2 + u^2)").unwrap();
        assert_eq!(i.generators()[0], expect);
    }

    #[test]
    fn two_variable_hyperbola_quotient() {
        // xu/(x^2+u^2): generator (x^2+u^2)(x-u)(x+u), frozen from an
        // independent symbolic expansion.
        let r = Ring::new(vec!["x", "u"]);
        let i = discriminant_ideal2(&rf(&r, "x*u", "x^2 + u^2")).unwrap();
        let expect = parse_polynomial(&r, "(x^2 + u^2)*(x - u)*(x + u)").unwrap();
        assert_eq!(i.generators()[0], expect);
    }
}
