//! Polynomial preservation, operator divisors and divided-power membership.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::operator::Operator;
use crate::error::{Error, Result};
use crate::intval::{divisor_of_values, dunkl_poly, undivided_denominator};
use crate::mode::Sign;
use crate::poly::{fmt_scalar, ActionPoly};

/// Why an operator fails to preserve `R[x]` or to lie in the divided power
/// extension. Exponents refer to the source monomial `x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DpRefusal {
    /// `x^k` is sent to a negative power with nonzero coefficient.
    NonVanishing { exponent: i64, target: i64 },
    /// `x^k` is sent to a non-integral multiple of a monomial.
    NonIntegralValue { exponent: i64 },
    /// A negative-degree piece whose action polynomial is not divisible by
    /// the matching Dunkl product.
    NotDivisible { degree: i64, sign: Sign },
}

impl DpRefusal {
    fn exponent(&self) -> i64 {
        match self {
            DpRefusal::NonVanishing { exponent, .. } | DpRefusal::NonIntegralValue { exponent } => {
                *exponent
            }
            DpRefusal::NotDivisible { .. } => i64::MAX,
        }
    }
}

impl fmt::Display for DpRefusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DpRefusal::NonVanishing { exponent, target } => write!(
                f,
                "x^{exponent} is sent to x^({target}) with nonzero coefficient"
            ),
            DpRefusal::NonIntegralValue { exponent } => {
                write!(f, "non-integral value at exponent {exponent}")
            }
            DpRefusal::NotDivisible { degree, sign } => write!(
                f,
                "degree {degree} piece on the {sign} part is not divisible by the Dunkl product"
            ),
        }
    }
}

/// First obstruction (by source exponent) to `Q` preserving `R[x]`.
///
/// Values on `x^{2t+ε}` with `t ≥ 0` are integral for all `t` exactly when
/// they are integral for `t ≤ deg f`, so the check is finite and exact.
pub fn polynomial_obstruction(q: &Operator) -> Option<DpRefusal> {
    let mode = q.mode();
    let mut worst: Option<DpRefusal> = None;
    let mut note = |r: DpRefusal| {
        if worst.as_ref().is_none_or(|w| r.exponent() < w.exponent()) {
            worst = Some(r);
        }
    };
    for p in q.pieces() {
        for sign in Sign::BOTH {
            let f = p.action(sign);
            if f.is_zero() {
                continue;
            }
            let vanish_below = (-p.degree - sign.offset() + 2).div_euclid(2).max(0);
            let top = vanish_below.max(f.degree_or_zero() as i64);
            for t in 0..=top {
                let k = 2 * t + sign.offset();
                let v = f.eval_int(t);
                if k + p.degree < 0 {
                    if !v.is_zero() {
                        note(DpRefusal::NonVanishing {
                            exponent: k,
                            target: k + p.degree,
                        });
                        break;
                    }
                } else if !mode.in_ring(&v) {
                    note(DpRefusal::NonIntegralValue { exponent: k });
                    break;
                }
            }
        }
    }
    worst
}

pub fn preserves_polynomials(q: &Operator) -> bool {
    polynomial_obstruction(q).is_none()
}

/// Largest integer `d` with `Q/d` still preserving `R[x]`; zero for the zero
/// operator.
pub fn operator_divisor(q: &Operator) -> Result<BigInt> {
    if let Some(r) = polynomial_obstruction(q) {
        return Err(Error::NotPolynomialPreserving(r));
    }
    let mut g = BigInt::zero();
    for p in q.pieces() {
        for sign in Sign::BOTH {
            let f = p.action(sign);
            if !f.is_zero() {
                g = g.gcd(&divisor_of_values(f, q.mode())?);
            }
        }
    }
    Ok(g)
}

/// Certificate of membership in the divided power extension: `Q = numerator/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpWitness {
    pub denominator: BigInt,
    pub numerator: Operator,
}

impl DpWitness {
    pub fn reconstruct(&self) -> Operator {
        self.numerator
            .scale_scalar(&crate::poly::Scalar::new(BigInt::one(), self.denominator.clone()))
    }
}

impl fmt::Display for DpWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "member; denominator {}",
            fmt_scalar(&self.denominator.clone().into())
        )
    }
}

/// Membership test with the reason for refusal.
///
/// Membership means `Q` preserves `R[x]` and each negative-degree piece is
/// divisible by the Dunkl product of its order. The denominator is the least
/// positive integer clearing every piece into the un-divided algebra, i.e.
/// into `R[2t]` after dividing out the Dunkl product.
pub fn dp_certificate(q: &Operator) -> Result<DpWitness, DpRefusal> {
    if let Some(r) = polynomial_obstruction(q) {
        return Err(r);
    }
    let mode = q.mode();
    let mut d = BigInt::one();
    for p in q.pieces() {
        for sign in Sign::BOTH {
            let f = p.action(sign);
            if f.is_zero() {
                continue;
            }
            let factor = if p.degree < 0 {
                mode.normalize_poly(&dunkl_poly(sign, (-p.degree) as usize))
            } else {
                ActionPoly::one()
            };
            let den = undivided_denominator(f, &factor).ok_or(DpRefusal::NotDivisible {
                degree: p.degree,
                sign,
            })?;
            d = d.lcm(&den);
        }
    }
    let numerator = q.scale_scalar(&d.clone().into());
    Ok(DpWitness {
        denominator: d,
        numerator,
    })
}

pub fn in_dp(q: &Operator) -> Option<DpWitness> {
    dp_certificate(q).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::DunklMode;
    use crate::poly::rat;

    fn sym() -> DunklMode {
        DunklMode::Symbolic
    }

    #[test]
    fn preservation_examples() {
        let m = sym();
        assert!(preserves_polynomials(&Operator::dunkl(&m)));
        let down2 = Operator::homogeneous(&m, -2, ActionPoly::one(), ActionPoly::zero());
        assert_eq!(
            polynomial_obstruction(&down2),
            Some(DpRefusal::NonVanishing {
                exponent: 0,
                target: -2
            })
        );
        let half = (&Operator::dunkl(&m) * &Operator::e_minus(&m)).scale_scalar(&rat(1, 2));
        assert_eq!(
            polynomial_obstruction(&half),
            Some(DpRefusal::NonIntegralValue { exponent: 1 })
        );
    }

    #[test]
    fn divisor_examples() {
        let m = sym();
        let d = Operator::dunkl(&m);
        assert_eq!(operator_divisor(&(&d * &Operator::e_plus(&m))).unwrap(), 2.into());
        assert_eq!(operator_divisor(&(&d * &Operator::e_minus(&m))).unwrap(), 1.into());
        assert_eq!(operator_divisor(&Operator::x(&m).scale_scalar(&rat(6, 1))).unwrap(), 6.into());
        assert_eq!(operator_divisor(&Operator::zero(&m)).unwrap(), 0.into());
    }

    #[test]
    fn membership_examples() {
        let m = sym();
        let half_xde = Operator::homogeneous(&m, 0, ActionPoly::t(), ActionPoly::zero());
        let w = in_dp(&half_xde).unwrap();
        assert_eq!(w.denominator, 2.into());
        assert_eq!(w.reconstruct(), half_xde);
        assert_eq!(in_dp(&Operator::x(&m)).unwrap().denominator, 1.into());
        let half = (&Operator::dunkl(&m) * &Operator::e_minus(&m)).scale_scalar(&rat(1, 2));
        assert!(in_dp(&half).is_none());
    }

    #[test]
    fn plain_derivative_is_not_a_member() {
        let m = DunklMode::numeric(1);
        // ∂ preserves polynomials but its odd part is not divisible by 2t+1−2c.
        let p = Operator::partial(&m);
        assert!(preserves_polynomials(&p));
        assert_eq!(
            dp_certificate(&p),
            Err(DpRefusal::NotDivisible {
                degree: -1,
                sign: Sign::Minus
            })
        );
    }

    #[test]
    fn inverse_x_on_odd_part_is_laurent_legal_only() {
        let m = sym();
        let q = &Operator::x_pow(&m, -1) * &Operator::e_minus(&m);
        // x^{2t+1} ↦ x^{2t}: preserves polynomials, but is not in the algebra.
        assert!(preserves_polynomials(&q));
        assert!(in_dp(&q).is_none());
    }
}
