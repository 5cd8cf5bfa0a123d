//! Binomial (Newton) coordinates.
//!
//! Every polynomial f of degree N is `Σ_{k≤N} α_k·C(t,k)` with
//! `α_k = Δ^k f(0)`. Because the Pascal matrix is unitriangular, f takes values
//! in ℤ[c] on all non-negative integers exactly when every `α_k` lies in ℤ[c].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::action::ActionPoly;
use super::coef::{int, CoefPoly};
use crate::error::{Error, Result};

/// The binomial polynomial `C(t,k) = t(t-1)…(t-k+1)/k!`.
pub fn binomial_poly(k: usize) -> ActionPoly {
    let mut acc = ActionPoly::one();
    for i in 0..k {
        let factor = ActionPoly::from_ints(&[-(i as i64), 1]);
        acc = (&acc * &factor).scale_scalar(&num_rational::BigRational::new(
            BigInt::from(1),
            BigInt::from(i as i64 + 1),
        ));
    }
    acc
}

/// Expanded product of the given factors; the empty product is 1.
pub fn falling_product(factors: &[ActionPoly]) -> ActionPoly {
    factors
        .iter()
        .fold(ActionPoly::one(), |acc, factor| &acc * factor)
}

/// Newton coordinates `(α_0, …, α_N)` with `N = deg f` (the zero polynomial
/// yields an empty list).
pub fn to_newton(f: &ActionPoly) -> Vec<CoefPoly> {
    let Some(n) = f.degree() else {
        return Vec::new();
    };
    let mut diffs: Vec<CoefPoly> = (0..=n as i64).map(|t| f.eval_int(t)).collect();
    let mut out = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        out.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// Inverse of [`to_newton`]: `Σ α_k·C(t,k)`.
pub fn from_newton(coeffs: &[CoefPoly]) -> ActionPoly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .fold(ActionPoly::zero(), |acc, (k, a)| {
            &acc + &binomial_poly(k).scale(a)
        })
}

/// gcd of every integer appearing in every coefficient of `f` (0 for zero).
pub fn integer_content(f: &ActionPoly) -> Result<BigInt> {
    f.coeffs().iter().try_fold(BigInt::zero(), |g, a| {
        a.integer_content()
            .map(|c| g.gcd(&c))
            .ok_or(Error::NonIntegralInput)
    })
}

/// The lower-triangular Pascal matrix `L_{ij} = C(i,j)`, `0 ≤ i,j ≤ n`.
pub fn pascal_matrix(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        rows[i][0] = BigInt::from(1);
        for j in 1..=i {
            rows[i][j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
    }
    rows
}

/// Inverse of the Pascal matrix, `(L^{-1})_{ij} = (-1)^{i-j} C(i,j)`.
pub fn pascal_inverse(n: usize) -> Vec<Vec<BigInt>> {
    let mut inv = pascal_matrix(n);
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            if (i + j) % 2 == 1 {
                *v = -v.clone();
            }
        }
    }
    inv
}

/// Evaluates `C(n,k)` exactly for integer `n` (any sign).
pub fn binomial_value(n: i64, k: usize) -> num_rational::BigRational {
    (0..k).fold(int(1), |acc, i| {
        acc * int(n - i as i64) / int(i as i64 + 1)
    })
}
