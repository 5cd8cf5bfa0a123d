use thiserror::Error;

use crate::opalgebra::DpRefusal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has a non-integral coefficient")]
    NonIntegralInput,
    #[error("value at t = {t} does not lie in the base ring")]
    NonIntegralValues { t: i64 },
    #[error("operators live over different base rings")]
    ModeMismatch,
    #[error("operator does not preserve the polynomial module: {0}")]
    NotPolynomialPreserving(DpRefusal),
    #[error("operator is not in the divided power extension: {0}")]
    NotInDp(DpRefusal),
    #[error("basis coefficient for {label} is not in the base ring")]
    NonIntegralCoefficients { label: String },
    #[error("basis decomposition requires symbolic c")]
    SymbolicModeRequired,
    #[error("mod-p reduction requires a numeric value of c")]
    NumericModeRequired,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("shifted module image leaves the module at index {index} with coefficient {coefficient}")]
    OutOfModule { index: i64, coefficient: String },
    #[error("operator is not homogeneous")]
    NotHomogeneous,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
