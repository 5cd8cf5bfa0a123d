//! The Weyl algebra ℤ[x, ∂] and its divided powers (Hasse derivatives).
//!
//! A homogeneous element of degree `n` acts by `x^t ↦ f(t)·x^{t+n}`; unlike
//! the Cherednik side there is no parity split.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::intval::divisor_of_values;
use crate::mode::DunklMode;
use crate::opalgebra::{Laurent, Operator};
use crate::poly::{binomial_poly, int, ActionPoly, CoefPoly, Scalar};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylOp {
    pieces: BTreeMap<i64, ActionPoly>,
}

impl WeylOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn homogeneous(degree: i64, f: ActionPoly) -> Self {
        let mut out = Self::zero();
        out.add_piece(degree, f);
        out
    }

    fn add_piece(&mut self, degree: i64, f: ActionPoly) {
        let entry = self.pieces.entry(degree).or_default();
        *entry = &*entry + &f;
        if entry.is_zero() {
            self.pieces.remove(&degree);
        }
    }

    pub fn identity() -> Self {
        Self::homogeneous(0, ActionPoly::one())
    }

    pub fn scalar(a: i64) -> Self {
        Self::homogeneous(0, ActionPoly::constant(CoefPoly::from_int(a)))
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn x_pow(k: i64) -> Self {
        Self::homogeneous(k, ActionPoly::one())
    }

    pub fn partial() -> Self {
        Self::homogeneous(-1, ActionPoly::t())
    }

    /// The Hasse derivative `x^t ↦ C(t,k)·x^{t−k}`.
    pub fn hasse(k: usize) -> Self {
        Self::homogeneous(-(k as i64), binomial_poly(k))
    }

    pub fn pieces(&self) -> impl Iterator<Item = (i64, &ActionPoly)> {
        self.pieces.iter().map(|(&n, f)| (n, f))
    }

    pub fn piece(&self, degree: i64) -> Option<&ActionPoly> {
        self.pieces.get(&degree)
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for (n, f) in self.pieces() {
            out.add_piece(n, f.scale_scalar(s));
        }
        out
    }

    pub fn compose(&self, other: &WeylOp) -> WeylOp {
        let mut out = WeylOp::zero();
        for (m, fb) in other.pieces() {
            for (n, fa) in self.pieces() {
                out.add_piece(n + m, &fa.shift_int(m) * fb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> WeylOp {
        (0..e).fold(WeylOp::identity(), |acc, _| acc.compose(self))
    }

    pub fn act(&self, k: i64) -> Laurent {
        let mut out = Laurent::default();
        for (n, f) in self.pieces() {
            out.add_term(k + n, f.eval_int(k));
        }
        out
    }

    /// Whether the element maps `ℤ[x]` to itself.
    pub fn preserves_polynomials(&self) -> bool {
        self.pieces().all(|(n, f)| {
            let top = (-n).max(0).max(f.degree_or_zero() as i64);
            (0..=top).all(|t| {
                let v = f.eval_int(t);
                if t + n < 0 {
                    v.is_zero()
                } else {
                    v.is_integral()
                }
            })
        })
    }

    /// Largest integer dividing the element in `End(ℤ[x])`; `None` if it
    /// does not preserve `ℤ[x]`.
    pub fn divisor(&self) -> Option<BigInt> {
        if !self.preserves_polynomials() {
            return None;
        }
        let mode = DunklMode::Symbolic;
        let mut g = BigInt::zero();
        for (_, f) in self.pieces() {
            g = g.gcd(&divisor_of_values(f, &mode).ok()?);
        }
        Some(g)
    }
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        let mut out = self.clone();
        for (n, f) in rhs.pieces() {
            out.add_piece(n, f.clone());
        }
        out
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        self.scale_scalar(&int(-1))
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        self + &-rhs
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        self.compose(rhs)
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, p)) in self.pieces().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "degree {n}: x^t -> {p}")?;
        }
        Ok(())
    }
}

/// `x^k·𝒟^l` with `k + l ≤ max_total_degree`, labelled by `(k, l)`.
pub fn weyl_dp_basis(max_total_degree: usize) -> Vec<((usize, usize), WeylOp)> {
    let mut out = Vec::new();
    for total in 0..=max_total_degree {
        for l in 0..=total {
            let k = total - l;
            out.push(((k, l), &WeylOp::x_pow(k as i64) * &WeylOp::hasse(l)));
        }
    }
    out
}

/// Divisors read off the action tables of `a`, `b` and `a ⊗ b` on
/// `x^k ⊗ q^m` for `0 ≤ k, m ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDivisors {
    pub left: BigInt,
    pub right: BigInt,
    pub product: BigInt,
}

fn content(a: &CoefPoly) -> BigInt {
    a.integer_content().expect("integral action values")
}

pub fn tensor_divisors(a: &Operator, b: &WeylOp, bound: i64) -> TensorDivisors {
    let left_values: Vec<CoefPoly> = (0..=bound)
        .flat_map(|k| a.act(k).0.into_values())
        .collect();
    let right_values: Vec<CoefPoly> = (0..=bound)
        .flat_map(|m| b.act(m).0.into_values())
        .collect();
    let gcd_of = |vals: &mut dyn Iterator<Item = BigInt>| vals.fold(BigInt::zero(), |g, v| g.gcd(&v));
    let left = gcd_of(&mut left_values.iter().map(content));
    let right = gcd_of(&mut right_values.iter().map(content));
    let product = gcd_of(
        &mut left_values
            .iter()
            .flat_map(|u| right_values.iter().map(move |v| content(&(u * v)))),
    );
    TensorDivisors {
        left,
        right,
        product,
    }
}

/// Checks that `d | a⊗b` forces `d` to split as a divisor of `a` times a
/// divisor of `b`, i.e. `d | div(a)·div(b)`, on tables up to exponent 20.
pub fn tensor_divisor_check(a: &Operator, b: &WeylOp, d: i64) -> bool {
    let t = tensor_divisors(a, b, 20);
    let d = BigInt::from(d);
    let divides = |x: &BigInt| x.is_zero() || (x % &d).is_zero();
    !divides(&t.product) || divides(&(&t.left * &t.right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::Sign;
    use crate::opalgebra::delta_basis;
    use crate::poly::binomial_value;

    #[test]
    fn hasse_examples() {
        assert_eq!(WeylOp::hasse(0), WeylOp::identity());
        assert_eq!(WeylOp::hasse(2).act(5), Laurent::monomial(3, CoefPoly::from_int(10)));
        assert!(WeylOp::hasse(3).act(2).is_zero());
    }

    #[test]
    fn hasse_composition_is_binomial() {
        for a in 0..=5usize {
            for b in 0..=5usize {
                let lhs = &WeylOp::hasse(a) * &WeylOp::hasse(b);
                let rhs = WeylOp::hasse(a + b)
                    .scale_scalar(&binomial_value((a + b) as i64, a));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn weyl_relation() {
        let x = WeylOp::x();
        let p = WeylOp::partial();
        assert_eq!(&(&p * &x) - &(&x * &p), WeylOp::identity());
        assert_eq!((&x * &p).piece(0), Some(&ActionPoly::t()));
    }

    #[test]
    fn basis_small_cases() {
        assert_eq!(weyl_dp_basis(0).len(), 1);
        let one: Vec<_> = weyl_dp_basis(1).into_iter().map(|(_, b)| b).collect();
        assert_eq!(one, vec![WeylOp::identity(), WeylOp::x(), WeylOp::hasse(1)]);
    }

    #[test]
    fn derivative_powers_have_factorial_divisor() {
        let mut fact = BigInt::from(1);
        for k in 0..=8u32 {
            if k > 0 {
                fact *= k;
            }
            assert_eq!(WeylOp::partial().pow(k).divisor(), Some(fact.clone()));
        }
    }

    #[test]
    fn tensor_examples() {
        let m = DunklMode::Symbolic;
        let de = delta_basis(Sign::Plus, 1, 0, &m).scale_scalar(&int(2));
        let p = WeylOp::partial();
        let t = tensor_divisors(&de, &p, 20);
        assert_eq!((t.left.clone(), t.right.clone(), t.product.clone()), (2.into(), 1.into(), 2.into()));
        assert!(tensor_divisor_check(&de, &p, 2));
        assert!(tensor_divisor_check(&de, &p, 1));
        assert!(tensor_divisor_check(&Operator::e_plus(&m), &WeylOp::identity(), 3));
    }
}
