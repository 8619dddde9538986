//! Exact symbolic engine deciding whether the limit of a quotient of
//! trivariate rational polynomials exists at a point, and computing the value
//! when it does. The reduction runs through the discriminant variety of the
//! quotient: decompose it, project its space curves birationally onto plane
//! curves, expand real branches as truncated Puiseux series, and merge the
//! per-component verdicts.

pub mod decompose;
pub mod discriminant;
pub mod groebner;
pub mod numeric;
pub mod pipeline;
pub mod planelimit;
pub mod polyring;
pub mod spacecurve;
pub mod surfacecase;

pub use numeric::algebraic::AlgebraicReal;
pub use numeric::Rational;
pub use polyring::{Monomial, MonomialOrder, OrderKind, Polynomial, RationalFunction, Ring};
