//! Univariate polynomials in `t` whose coefficients are [`CoefPoly`]s.
//!
//! An `ActionPoly` f(t) records how a homogeneous operator scales a monomial:
//! the monomial indexed by `t` is sent to `f(t)` times the shifted monomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coef::{forward_owned, int, CoefPoly, Scalar};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ActionPoly {
    coeffs: Vec<CoefPoly>,
}

impl ActionPoly {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(CoefPoly::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CoefPoly::one())
    }

    pub fn constant(c: CoefPoly) -> Self {
        Self { coeffs: vec![c] }.normalize()
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![CoefPoly::zero(), CoefPoly::one()])
    }

    /// `a·t + b`.
    pub fn linear(a: CoefPoly, b: CoefPoly) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(coeffs: Vec<CoefPoly>) -> Self {
        Self { coeffs }.normalize()
    }

    /// Builds a polynomial with constant integer coefficients, ascending in `t`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&n| CoefPoly::from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[CoefPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> CoefPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> CoefPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, s: &CoefPoly) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * s).collect())
    }

    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(s)).collect())
    }

    /// Evaluates at `t = value` by Horner's rule.
    pub fn eval(&self, value: &CoefPoly) -> CoefPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(CoefPoly::zero(), |acc, a| &(&acc * value) + a)
    }

    pub fn eval_int(&self, t: i64) -> CoefPoly {
        self.eval(&CoefPoly::from_int(t))
    }

    /// Returns f(t + shift).
    pub fn shift(&self, shift: &CoefPoly) -> Self {
        let lin = Self::linear(CoefPoly::one(), shift.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| &(&acc * &lin) + &Self::constant(a.clone()))
    }

    pub fn shift_int(&self, shift: i64) -> Self {
        if shift == 0 {
            return self.clone();
        }
        self.shift(&CoefPoly::from_int(shift))
    }

    /// Formal derivative d/dt.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.scale(&int(i as i64)))
                .collect(),
        )
    }

    /// Substitutes a numeric value for `c` in every coefficient.
    pub fn specialize(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.specialize(c)).collect())
    }

    /// Division with remainder by a divisor whose leading coefficient does not
    /// involve `c`. Returns `None` for a zero divisor or a leading coefficient
    /// that is a nonconstant polynomial in `c`.
    pub fn div_rem(&self, divisor: &ActionPoly) -> Option<(ActionPoly, ActionPoly)> {
        let lead = divisor.leading().as_constant()?;
        if lead.is_zero() {
            return None;
        }
        let inv = lead.recip();
        let dd = divisor.degree()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![CoefPoly::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = rem[k].scale(&inv);
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = &rem[k - dd + i] - &(&q * d);
            }
            quot[k - dd] = q;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (or the divisor is unsupported, see [`Self::div_rem`]).
    pub fn exact_div(&self, divisor: &ActionPoly) -> Option<ActionPoly> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// True when every coefficient lies in ℤ[c].
    pub fn has_integral_coeffs(&self) -> bool {
        self.coeffs.iter().all(CoefPoly::is_integral)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<'a> Add<&'a ActionPoly> for &ActionPoly {
    type Output = ActionPoly;
    fn add(self, rhs: &'a ActionPoly) -> ActionPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ActionPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a ActionPoly> for &ActionPoly {
    type Output = ActionPoly;
    fn sub(self, rhs: &'a ActionPoly) -> ActionPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ActionPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a ActionPoly> for &ActionPoly {
    type Output = ActionPoly;
    fn mul(self, rhs: &'a ActionPoly) -> ActionPoly {
        if self.is_zero() || rhs.is_zero() {
            return ActionPoly::zero();
        }
        let mut out = vec![CoefPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ActionPoly::from_coeffs(out)
    }
}

impl Neg for &ActionPoly {
    type Output = ActionPoly;
    fn neg(self) -> ActionPoly {
        ActionPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for ActionPoly {
    type Output = ActionPoly;
    fn neg(self) -> ActionPoly {
        -&self
    }
}

forward_owned!(ActionPoly, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for ActionPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let tpow = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let coef = match a.as_constant() {
                Some(q) => {
                    let neg = q < Scalar::zero();
                    if !first {
                        write!(f, " {} ", if neg { '-' } else { '+' })?;
                    } else if neg {
                        write!(f, "-")?;
                    }
                    let mag = if neg { -q } else { q };
                    if mag.is_one() && !tpow.is_empty() {
                        String::new()
                    } else {
                        super::coef::fmt_scalar(&mag)
                    }
                }
                None => {
                    if !first {
                        write!(f, " + ")?;
                    }
                    format!("({a})")
                }
            };
            first = false;
            match (coef.is_empty(), tpow.is_empty()) {
                (true, _) => write!(f, "{tpow}")?,
                (false, true) => write!(f, "{coef}")?,
                (false, false) => write!(f, "{coef}*{tpow}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coef::rat;

    #[test]
    fn shift_and_eval_agree() {
        let f = ActionPoly::from_ints(&[1, -3, 2]);
        let g = f.shift_int(3);
        for t in -4..5 {
            assert_eq!(g.eval_int(t), f.eval_int(t + 3));
        }
    }

    #[test]
    fn division_by_linear_factor() {
        // (2t - 1 - 2c)(t + 5) / (2t - 1 - 2c)
        let lin = ActionPoly::linear(CoefPoly::from_int(2), CoefPoly::linear(-1, -2));
        let other = ActionPoly::from_ints(&[5, 1]);
        let prod = &lin * &other;
        assert_eq!(prod.exact_div(&lin), Some(other.clone()));
        assert_eq!((&prod + &ActionPoly::one()).exact_div(&lin), None);
        // a divisor with a c-dependent leading coefficient is refused
        let bad = ActionPoly::linear(CoefPoly::c(), CoefPoly::one());
        assert!(prod.div_rem(&bad).is_none());
    }

    #[test]
    fn derivative_of_cubic() {
        let f = ActionPoly::from_ints(&[7, 0, 0, 2]);
        assert_eq!(f.derivative(), ActionPoly::from_ints(&[0, 0, 6]));
        let half = ActionPoly::t().scale_scalar(&rat(1, 2));
        assert_eq!(half.derivative(), ActionPoly::constant(CoefPoly::constant(rat(1, 2))));
    }

    #[test]
    fn display_uses_grammar_tokens() {
        let f = ActionPoly::from_coeffs(vec![CoefPoly::linear(1, -2), CoefPoly::from_int(2)]);
        assert_eq!(f.to_string(), "2*t + (-2*c + 1)");
        assert_eq!(ActionPoly::from_ints(&[0, -1, 1]).to_string(), "t^2 - t");
    }
}
