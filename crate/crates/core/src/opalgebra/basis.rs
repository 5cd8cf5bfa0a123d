//! The Δ± basis of the divided power extension, decomposition against it,
//! and the graded dimension count.

use std::collections::BTreeMap;
use std::fmt;

use super::dp::dp_certificate;
use super::operator::Operator;
use crate::error::{Error, Result};
use crate::intval::{binomial_order, l_poly, m_delta, pow2_factorial};
use crate::mode::{DunklMode, Sign};
use crate::poly::{int, to_newton, CoefPoly, Scalar};

/// Label of a basis element: `Δ±_{k1,k2}` or `x^power·Δ±_{0,k2}` with
/// `power ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    Delta { sign: Sign, k1: usize, k2: usize },
    XDelta { sign: Sign, power: usize, k2: usize },
}

impl BasisLabel {
    pub fn sign(&self) -> Sign {
        match *self {
            BasisLabel::Delta { sign, .. } | BasisLabel::XDelta { sign, .. } => sign,
        }
    }

    /// Filtration degree: `k1 + 2·k2`, resp. `power + 2·k2`.
    pub fn total_degree(&self) -> usize {
        match *self {
            BasisLabel::Delta { k1, k2, .. } => k1 + 2 * k2,
            BasisLabel::XDelta { power, k2, .. } => power + 2 * k2,
        }
    }

    /// Grading degree of the operator (x ↦ 1, D ↦ −1).
    pub fn grading(&self) -> i64 {
        match *self {
            BasisLabel::Delta { k1, .. } => -(k1 as i64),
            BasisLabel::XDelta { power, .. } => power as i64,
        }
    }

    pub fn operator(&self, mode: &DunklMode) -> Operator {
        match *self {
            BasisLabel::Delta { sign, k1, k2 } => delta_basis(sign, k1, k2, mode),
            BasisLabel::XDelta { sign, power, k2 } => {
                &Operator::x_pow(mode, power as i64) * &delta_basis(sign, 0, k2, mode)
            }
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisLabel::Delta { sign, k1, k2 } => write!(f, "Delta{sign}[{k1},{k2}]"),
            BasisLabel::XDelta { sign, power: 1, k2 } => write!(f, "x*Delta{sign}[0,{k2}]"),
            BasisLabel::XDelta { sign, power, k2 } => write!(f, "x^{power}*Delta{sign}[0,{k2}]"),
        }
    }
}

/// The offset `m` in the Δ± formula: `m₁(k1)` for `+`, `m₀(k1)` for `−`.
fn delta_offset(sign: Sign, k1: usize) -> usize {
    match sign {
        Sign::Plus => m_delta(1, k1),
        Sign::Minus => m_delta(0, k1),
    }
}

/// The un-divided numerator `D^{k1}·∏_{i<k2}(xD − a_i)·e±` of `Δ±_{k1,k2}`,
/// with `a_i = 2(i+m)` for `+` and `a_i = 1 − 2c + 2(i+m)` for `−`.
pub fn delta_numerator(sign: Sign, k1: usize, k2: usize, mode: &DunklMode) -> Operator {
    let m = delta_offset(sign, k1);
    let xd = &Operator::x(mode) * &Operator::dunkl(mode);
    let mut out = Operator::idempotent(mode, sign);
    for i in (0..k2).rev() {
        let shift = CoefPoly::from_int(2 * (i + m) as i64);
        let a = match sign {
            Sign::Plus => shift,
            Sign::Minus => &(&shift + &CoefPoly::one()) - &mode.c_value().scale(&int(2)),
        };
        out = &(&xd - &Operator::scalar(mode, a)) * &out;
    }
    &Operator::dunkl(mode).pow(k1 as u32) * &out
}

/// `2^{m+k2}·(m+k2)!`, the full divisor of the numerator.
pub fn delta_denominator(sign: Sign, k1: usize, k2: usize) -> num_bigint::BigInt {
    let m = delta_offset(sign, k1);
    pow2_factorial(m + k2, m + k2)
}

pub fn delta_basis(sign: Sign, k1: usize, k2: usize, mode: &DunklMode) -> Operator {
    let den = delta_denominator(sign, k1, k2);
    delta_numerator(sign, k1, k2, mode).scale_scalar(&Scalar::new(1.into(), den))
}

/// Labels of total degree at most `max_total_degree` for one sign, ordered by
/// total degree.
pub fn basis_labels(sign: Sign, max_total_degree: usize) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    for deg in 0..=max_total_degree {
        for k2 in 0..=deg / 2 {
            out.push(BasisLabel::Delta {
                sign,
                k1: deg - 2 * k2,
                k2,
            });
        }
        for k2 in 0..=deg.saturating_sub(1) / 2 {
            if deg > 2 * k2 {
                out.push(BasisLabel::XDelta {
                    sign,
                    power: deg - 2 * k2,
                    k2,
                });
            }
        }
    }
    out
}

pub fn basis_enumerate(
    sign: Sign,
    max_total_degree: usize,
    mode: &DunklMode,
) -> Vec<(BasisLabel, Operator)> {
    basis_labels(sign, max_total_degree)
        .into_iter()
        .map(|l| (l, l.operator(mode)))
        .collect()
}

/// Number of basis labels (both signs) of total degree exactly `m`.
pub fn graded_dimension(m: usize) -> usize {
    Sign::BOTH
        .iter()
        .flat_map(|&s| basis_labels(s, m))
        .filter(|l| l.total_degree() == m)
        .count()
}

/// Sums `coeff·basis element` over the given terms.
pub fn combine(terms: &BTreeMap<BasisLabel, CoefPoly>, mode: &DunklMode) -> Operator {
    terms.iter().fold(Operator::zero(mode), |acc, (l, a)| {
        &acc + &l.operator(mode).scale(a)
    })
}

/// Coefficients of `Q` in the Δ± basis (symbolic `c` only).
///
/// Each graded piece is solved independently: in degree `n ≥ 0` the Newton
/// coordinates of the action polynomial are the coefficients of `x^nΔ±_{0,k}`;
/// in degree `−k1` the action polynomial is `L±_{k1}` times a combination of
/// `C(t, m+k)`, whose coordinates give the coefficients of `Δ±_{k1,k}`.
pub fn decompose_in_basis(q: &Operator) -> Result<BTreeMap<BasisLabel, CoefPoly>> {
    if !q.mode().is_symbolic() {
        return Err(Error::SymbolicModeRequired);
    }
    dp_certificate(q).map_err(Error::NotInDp)?;
    let mut out = BTreeMap::new();
    for p in q.pieces() {
        for sign in Sign::BOTH {
            let f = p.action(sign);
            if f.is_zero() {
                continue;
            }
            let (coords, offset) = if p.degree >= 0 {
                (to_newton(f), 0)
            } else {
                let k1 = (-p.degree) as usize;
                let g = f
                    .exact_div(&l_poly(sign, k1))
                    .expect("membership implies divisibility by the Dunkl product");
                (to_newton(&g), binomial_order(sign, k1))
            };
            for (j, a) in coords.into_iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                if j < offset {
                    // C(t, j) with j < m is not in the span; unreachable for members.
                    return Err(Error::NonIntegralCoefficients {
                        label: format!("degree {} below offset", p.degree),
                    });
                }
                let k2 = j - offset;
                let label = match p.degree {
                    n if n < 0 => BasisLabel::Delta {
                        sign,
                        k1: (-n) as usize,
                        k2,
                    },
                    0 => BasisLabel::Delta { sign, k1: 0, k2 },
                    n => BasisLabel::XDelta {
                        sign,
                        power: n as usize,
                        k2,
                    },
                };
                if !a.is_integral() {
                    return Err(Error::NonIntegralCoefficients {
                        label: label.to_string(),
                    });
                }
                out.insert(label, a);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalgebra::in_dp;
    use crate::poly::binomial_poly;

    fn sym() -> DunklMode {
        DunklMode::Symbolic
    }

    #[test]
    fn small_delta_elements() {
        let m = sym();
        let d = Operator::dunkl(&m);
        let half = Scalar::new(1.into(), 2.into());
        assert_eq!(
            delta_basis(Sign::Plus, 1, 0, &m),
            (&d * &Operator::e_plus(&m)).scale_scalar(&half)
        );
        assert_eq!(delta_basis(Sign::Minus, 1, 0, &m), &d * &Operator::e_minus(&m));
        let t = delta_basis(Sign::Plus, 0, 1, &m);
        assert_eq!(t.piece(0).unwrap().plus, binomial_poly(1));
    }

    #[test]
    fn delta_action_is_l_times_binomial() {
        let m = sym();
        for sign in Sign::BOTH {
            for k1 in 0..5 {
                for k2 in 0..3 {
                    let op = delta_basis(sign, k1, k2, &m);
                    let piece = op.piece(-(k1 as i64)).unwrap();
                    let expect = &l_poly(sign, k1) * &binomial_poly(binomial_order(sign, k1) + k2);
                    assert_eq!(piece.action(sign), &expect, "{sign} {k1} {k2}");
                    assert!(piece.action(sign.flip()).is_zero());
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let m = sym();
        let zero: Vec<_> = Sign::BOTH
            .iter()
            .flat_map(|&s| basis_enumerate(s, 0, &m))
            .map(|(_, op)| op)
            .collect();
        assert_eq!(zero, vec![Operator::e_plus(&m), Operator::e_minus(&m)]);
        let one = basis_labels(Sign::Plus, 1);
        assert!(one.contains(&BasisLabel::Delta { sign: Sign::Plus, k1: 1, k2: 0 }));
        assert!(one.contains(&BasisLabel::XDelta { sign: Sign::Plus, power: 1, k2: 0 }));
        for deg in 0..10 {
            let n = basis_labels(Sign::Minus, deg)
                .iter()
                .filter(|l| l.total_degree() == deg)
                .count();
            assert_eq!(n, deg + 1);
        }
    }

    #[test]
    fn graded_dimensions() {
        assert_eq!(graded_dimension(0), 2);
        assert_eq!(graded_dimension(3), 8);
        assert_eq!(graded_dimension(10), 22);
    }

    #[test]
    fn decomposition_examples() {
        let m = sym();
        let d = Operator::dunkl(&m);
        let de = &d * &Operator::e_plus(&m);
        let got = decompose_in_basis(&de).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[&BasisLabel::Delta { sign: Sign::Plus, k1: 1, k2: 0 }], CoefPoly::from_int(2));

        let id = decompose_in_basis(&Operator::identity(&m)).unwrap();
        assert_eq!(id[&BasisLabel::Delta { sign: Sign::Plus, k1: 0, k2: 0 }], CoefPoly::one());
        assert_eq!(id[&BasisLabel::Delta { sign: Sign::Minus, k1: 0, k2: 0 }], CoefPoly::one());

        let xde = &(&Operator::x(&m) * &d) * &Operator::e_plus(&m);
        let got = decompose_in_basis(&xde).unwrap();
        assert_eq!(got[&BasisLabel::Delta { sign: Sign::Plus, k1: 0, k2: 1 }], CoefPoly::from_int(2));
    }

    #[test]
    fn decomposition_requires_symbolic_mode() {
        let m = DunklMode::numeric(0);
        assert_eq!(decompose_in_basis(&Operator::x(&m)), Err(Error::SymbolicModeRequired));
    }

    #[test]
    fn single_index_form_agrees_at_k1_zero() {
        // Δ±_{0,k} = ∏_{i<k}(L − 2i)/(2^k k!) with L⁺ = xD, L⁻ = xD + 2c − 1.
        let m = sym();
        let xd = &Operator::x(&m) * &Operator::dunkl(&m);
        for sign in Sign::BOTH {
            let l = match sign {
                Sign::Plus => xd.clone(),
                Sign::Minus => &xd + &Operator::scalar(&m, CoefPoly::linear(-1, 2)),
            };
            for k in 0..5usize {
                let mut num = Operator::idempotent(&m, sign);
                for i in 0..k {
                    num = &(&l - &Operator::scalar(&m, CoefPoly::from_int(2 * i as i64))) * &num;
                }
                let expect = num.scale_scalar(&Scalar::new(1.into(), pow2_factorial(k, k)));
                assert_eq!(delta_basis(sign, 0, k, &m), expect);
            }
        }
    }

    #[test]
    fn members_and_integrality() {
        let m = sym();
        for sign in Sign::BOTH {
            for (label, op) in basis_enumerate(sign, 6, &m) {
                assert!(in_dp(&op).is_some(), "{label}");
            }
        }
    }
}
