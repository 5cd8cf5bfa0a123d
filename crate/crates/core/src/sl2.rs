//! The sl₂ triple in the spherical subalgebra `e₊He₊` and its divided-power
//! basis.

use crate::error::Result;
use crate::intval::{m_delta, pow2_factorial};
use crate::mode::{DunklMode, Sign};
use crate::opalgebra::{delta_basis, BasisLabel, Operator};
use crate::poly::{int, rat, CoefPoly, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Operator,
    pub h: Operator,
    pub f: Operator,
}

impl Sl2Triple {
    /// `[H,E] − 2E`, `[H,F] + 2F` and `[E,F] − H`, all zero for a triple.
    pub fn defects(&self) -> Result<[Operator; 3]> {
        let two = int(2);
        Ok([
            &self.h.commutator(&self.e)? - &self.e.scale_scalar(&two),
            &self.h.commutator(&self.f)? + &self.f.scale_scalar(&two),
            &self.e.commutator(&self.f)? - &self.h,
        ])
    }
}

/// `(1 − 2c)/2`, the constant in `H = (xD + (1−2c)/2)e₊`.
fn h_shift(mode: &DunklMode) -> CoefPoly {
    (&CoefPoly::one() - &mode.c_value().scale(&int(2))).scale(&rat(1, 2))
}

/// `E = −½x²e₊`, `H = (xD + (1−2c)/2)e₊`, `F = ½D²e₊`.
pub fn build_triple(mode: &DunklMode) -> Sl2Triple {
    let ep = Operator::e_plus(mode);
    let x = Operator::x(mode);
    let d = Operator::dunkl(mode);
    let e = (&x.pow(2) * &ep).scale_scalar(&rat(-1, 2));
    let h = &(&(&x * &d) + &Operator::scalar(mode, h_shift(mode))) * &ep;
    let f = (&d.pow(2) * &ep).scale_scalar(&rat(1, 2));
    Sl2Triple { e, h, f }
}

/// `C = EF + FE + H²/2`.
pub fn casimir(mode: &DunklMode) -> Operator {
    let t = build_triple(mode);
    let h2 = (&t.h * &t.h).scale_scalar(&rat(1, 2));
    &(&(&t.e * &t.f) + &(&t.f * &t.e)) + &h2
}

/// `−(1−2c)(3+2c)/8`, the scalar by which the Casimir acts.
pub fn casimir_scalar(mode: &DunklMode) -> CoefPoly {
    let c = mode.c_value();
    let one_minus = &CoefPoly::one() - &c.scale(&int(2));
    let three_plus = &CoefPoly::from_int(3) + &c.scale(&int(2));
    mode.normalize(&(&one_minus * &three_plus).scale(&rat(-1, 8)))
}

/// `Σ_{a,b,k} = (−2E)^a (2F)^b ∏_{i<k}(H − (1−2c)/2 − 2(i + m₁(2b))) / (2^{m+k}(m+k)!)`
/// with `m = m₁(2b) = b`. The third index is called `k` here; it is unrelated
/// to the parameter `c`.
pub fn sigma(a: usize, b: usize, k: usize, mode: &DunklMode) -> Operator {
    let t = build_triple(mode);
    let m = m_delta(1, 2 * b);
    let ep = Operator::e_plus(mode);
    let minus_two_e = t.e.scale_scalar(&int(-2));
    let two_f = t.f.scale_scalar(&int(2));
    let shifted_h = &t.h - &(&Operator::scalar(mode, h_shift(mode)) * &ep);
    let mut num = &(&minus_two_e.pow(a as u32) * &two_f.pow(b as u32)) * &ep;
    for i in 0..k {
        let shift = Operator::scalar(mode, CoefPoly::from_int(2 * (i + m) as i64));
        num = &num * &(&shifted_h - &(&shift * &ep));
    }
    num.scale_scalar(&Scalar::new(1.into(), pow2_factorial(m + k, m + k)))
}

/// Labels of the spherical basis `{Δ⁺_{2n,k}, x^{2n+2}Δ⁺_{0,k}}` of total
/// degree at most `max_degree`.
pub fn spherical_labels(max_degree: usize) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    for deg in (0..=max_degree).step_by(2) {
        for k in 0..=deg / 2 {
            out.push(BasisLabel::Delta {
                sign: Sign::Plus,
                k1: deg - 2 * k,
                k2: k,
            });
        }
        for k in 0..deg / 2 {
            out.push(BasisLabel::XDelta {
                sign: Sign::Plus,
                power: deg - 2 * k,
                k2: k,
            });
        }
    }
    out
}

pub fn spherical_basis(max_degree: usize, mode: &DunklMode) -> Vec<(BasisLabel, Operator)> {
    spherical_labels(max_degree)
        .into_iter()
        .map(|l| (l, l.operator(mode)))
        .collect()
}

/// The spherical label matching `Σ_{a,b,k}`: `Δ⁺_{2b,k}` when `a = 0`,
/// `x^{2a}Δ⁺_{0,k}` when `b = 0`.
pub fn sigma_label(a: usize, b: usize, k: usize) -> Option<BasisLabel> {
    match (a, b) {
        (0, b) => Some(BasisLabel::Delta {
            sign: Sign::Plus,
            k1: 2 * b,
            k2: k,
        }),
        (a, 0) => Some(BasisLabel::XDelta {
            sign: Sign::Plus,
            power: 2 * a,
            k2: k,
        }),
        _ => None,
    }
}

/// Convenience for the spherical element `Δ⁺_{2n,k}`.
pub fn spherical_delta(n: usize, k: usize, mode: &DunklMode) -> Operator {
    delta_basis(Sign::Plus, 2 * n, k, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalgebra::{in_dp, Laurent};

    fn sym() -> DunklMode {
        DunklMode::Symbolic
    }

    #[test]
    fn bracket_relations_hold_exactly() {
        for mode in [sym(), DunklMode::numeric(3), DunklMode::Numeric(rat(1, 2))] {
            let t = build_triple(&mode);
            for d in t.defects().unwrap() {
                assert!(d.is_zero(), "{d}");
            }
        }
    }

    #[test]
    fn triple_examples() {
        let m = sym();
        let t = build_triple(&m);
        let ef = t.e.commutator(&t.f).unwrap();
        // (4 + (1−2c)/2)·x⁴
        let expect = Laurent::monomial(4, CoefPoly::from_coeffs(vec![rat(9, 2), int(-1)]));
        assert_eq!(ef.act(4), expect);
        assert_eq!(t.h.act(4), expect);
        assert_eq!(t.h.act(0), Laurent::monomial(0, h_shift(&m)));
    }

    #[test]
    fn casimir_is_central_character() {
        for mode in [sym(), DunklMode::numeric(0), DunklMode::Numeric(rat(1, 2))] {
            let lhs = casimir(&mode);
            let rhs = Operator::scalar(&mode, casimir_scalar(&mode)).compose(&Operator::e_plus(&mode)).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_eq!(casimir_scalar(&DunklMode::numeric(0)), CoefPoly::constant(rat(-3, 8)));
        assert!(casimir_scalar(&DunklMode::Numeric(rat(1, 2))).is_zero());
    }

    #[test]
    fn sigma_matches_spherical_basis() {
        let m = sym();
        assert_eq!(sigma(0, 0, 0, &m), Operator::e_plus(&m));
        for n in 0..=4usize {
            for k in 0..=4 - n {
                assert_eq!(sigma(0, n, k, &m), spherical_delta(n, k, &m), "0 {n} {k}");
                let x = Operator::x_pow(&m, 2 * n as i64 + 2);
                assert_eq!(sigma(n + 1, 0, k, &m), &x * &delta_basis(Sign::Plus, 0, k, &m));
            }
        }
    }

    #[test]
    fn spherical_basis_examples() {
        let m = sym();
        assert_eq!(spherical_labels(0), vec![BasisLabel::Delta { sign: Sign::Plus, k1: 0, k2: 0 }]);
        let two = spherical_labels(2);
        for l in [
            BasisLabel::Delta { sign: Sign::Plus, k1: 2, k2: 0 },
            BasisLabel::Delta { sign: Sign::Plus, k1: 0, k2: 1 },
            BasisLabel::XDelta { sign: Sign::Plus, power: 2, k2: 0 },
        ] {
            assert!(two.contains(&l));
        }
        for (_, q) in spherical_basis(6, &m) {
            assert!(in_dp(&q).is_some());
            assert_eq!(q.sandwich(Sign::Plus, Sign::Plus), q);
        }
    }
}
