//! Base ring selection: ℤ[c] with `c` symbolic, or ℤ with `c` fixed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{int, ActionPoly, CoefPoly, Scalar};

/// Which base ring the engine works over.
///
/// `Numeric` carries the value of `c`. Integer values are the intended use;
/// half-integers are accepted for exploring the exceptional case, with the
/// base ring still taken to be ℤ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DunklMode {
    Symbolic,
    Numeric(Scalar),
}

impl DunklMode {
    pub fn numeric(c: i64) -> Self {
        DunklMode::Numeric(int(c))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, DunklMode::Symbolic)
    }

    /// The parameter as an element of the coefficient ring.
    pub fn c_value(&self) -> CoefPoly {
        match self {
            DunklMode::Symbolic => CoefPoly::c(),
            DunklMode::Numeric(c) => CoefPoly::constant(c.clone()),
        }
    }

    /// Brings a coefficient into this mode's canonical form (substituting `c`
    /// when numeric).
    pub fn normalize(&self, value: &CoefPoly) -> CoefPoly {
        match self {
            DunklMode::Symbolic => value.clone(),
            DunklMode::Numeric(c) => value.specialize(c),
        }
    }

    pub fn normalize_poly(&self, f: &ActionPoly) -> ActionPoly {
        match self {
            DunklMode::Symbolic => f.clone(),
            DunklMode::Numeric(c) => f.specialize(c),
        }
    }

    /// Membership of a (normalized) coefficient in the base ring.
    pub fn in_ring(&self, value: &CoefPoly) -> bool {
        value.is_integral()
    }

    /// `c ∈ ½ + ℤ`.
    pub fn is_half_integer(&self) -> bool {
        match self {
            DunklMode::Symbolic => false,
            DunklMode::Numeric(c) => !c.is_integer() && (c * int(2)).is_integer(),
        }
    }

    /// Integers `n` with `1/n` in the base ring, searched among `1..=bound`
    /// and their negatives.
    pub fn integer_units(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = (1..=bound)
            .flat_map(|n| [-n, n])
            .filter(|&n| {
                let inv = CoefPoly::constant(Scalar::new(BigInt::one(), BigInt::from(n)));
                self.in_ring(&self.normalize(&inv))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for DunklMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DunklMode::Symbolic => write!(f, "symbolic"),
            DunklMode::Numeric(c) => write!(f, "c={}", crate::poly::fmt_scalar(c)),
        }
    }
}

/// The two idempotents `e₊`, `e₋` (and the matching parity classes of
/// monomials: even for `Plus`, odd for `Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// Parity class of the integer exponent `k`.
    pub fn of_exponent(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn offset(self) -> i64 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn integer_units_of_base_rings() {
        // The tensor-product statement for divided powers assumes the base
        // ring meets ℤ only in ±1; both ℤ and ℤ[c] satisfy this.
        assert_eq!(DunklMode::Symbolic.integer_units(50), vec![-1, 1]);
        assert_eq!(DunklMode::numeric(3).integer_units(50), vec![-1, 1]);
    }

    #[test]
    fn half_integer_detection() {
        assert!(DunklMode::Numeric(rat(1, 2)).is_half_integer());
        assert!(DunklMode::Numeric(rat(-3, 2)).is_half_integer());
        assert!(!DunklMode::numeric(2).is_half_integer());
        assert!(!DunklMode::Numeric(rat(1, 3)).is_half_integer());
    }

    #[test]
    fn parity_of_negative_exponents() {
        assert_eq!(Sign::of_exponent(-1), Sign::Minus);
        assert_eq!(Sign::of_exponent(-4), Sign::Plus);
    }
}
