//! Exact scalars, polynomials in `c`, action polynomials in `t`, and the
//! binomial coordinate system.

mod action;
mod coef;
mod newton;

pub use action::ActionPoly;
pub use coef::{fmt_scalar, int, rat, CoefPoly, Scalar};
pub use newton::{
    binomial_poly, binomial_value, falling_product, from_newton, integer_content,
    pascal_inverse, pascal_matrix, to_newton,
};

