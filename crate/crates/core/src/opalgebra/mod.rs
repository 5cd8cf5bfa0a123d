//! The Cherednik algebra in graded normal form.

mod basis;
mod dp;
mod modp;
mod operator;

pub use basis::{
    basis_enumerate, basis_labels, combine, decompose_in_basis, delta_basis, delta_denominator,
    delta_numerator, graded_dimension, BasisLabel,
};
pub use dp::{
    dp_certificate, in_dp, operator_divisor, polynomial_obstruction, preserves_polynomials,
    DpRefusal, DpWitness,
};
pub use modp::{is_prime, reduce_mod_p, ModPRow, ModPTable};
pub use operator::{GradedOp, Laurent, Operator};
