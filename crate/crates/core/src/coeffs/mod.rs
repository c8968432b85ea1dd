//! Exact coefficient arithmetic: rationals, parameter polynomials and rational matrices.

pub mod matrix;
pub mod param;
pub mod poly;
pub mod rational;

pub use matrix::RatMatrix;
pub use param::ParamPoly;
pub use poly::{Coeff, MPoly};
pub use rational::Rational;

use std::collections::BTreeMap;

/// `poly_add`: exact sum, failing on arity mismatch.
pub fn poly_add(a: &ParamPoly, b: &ParamPoly) -> crate::Result<ParamPoly> {
    a.try_add(b)
}

/// `poly_mul`: exact product, failing on arity mismatch.
pub fn poly_mul(a: &ParamPoly, b: &ParamPoly) -> crate::Result<ParamPoly> {
    a.try_mul(b)
}

/// `poly_div_t`: exact quotient by `t`.
pub fn poly_div_t(a: &ParamPoly) -> crate::Result<ParamPoly> {
    a.div_t()
}

/// `poly_specialize`: substitute a partial assignment of variables.
pub fn poly_specialize(a: &ParamPoly, values: &BTreeMap<usize, Rational>) -> ParamPoly {
    a.specialize(values)
}
