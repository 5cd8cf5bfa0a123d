//! Polynomials in the Cherednik parameter `c` with rational coefficients.
//!
//! `CoefPoly` stores coefficients in ascending powers of `c`. The vector is
//! either empty (the zero polynomial) or ends in a nonzero entry, so derived
//! equality is structural equality of the polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact scalar: an arbitrary-precision rational in lowest terms.
pub type Scalar = BigRational;

/// Builds the scalar `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer scalar `n`.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoefPoly {
    coeffs: Vec<Scalar>,
}

impl CoefPoly {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(value: Scalar) -> Self {
        Self { coeffs: vec![value] }.normalize()
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// The parameter `c` itself.
    pub fn c() -> Self {
        Self::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    /// `a + b·c` for integers `a`, `b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_coeffs(vec![int(a), int(b)])
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Self { coeffs }.normalize()
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&n| int(n)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in `c`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value if the polynomial does not involve `c`.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// True when every coefficient is an integer, i.e. the value lies in ℤ[c].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|q| q.is_integer())
    }

    /// Least common multiple of coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    /// gcd of the integer coefficients; `None` if some coefficient is not an
    /// integer. The zero polynomial has content 0.
    pub fn integer_content(&self) -> Option<BigInt> {
        let mut g = BigInt::zero();
        for q in &self.coeffs {
            if !q.is_integer() {
                return None;
            }
            g = g.gcd(q.numer());
        }
        Some(g)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|q| q * s).collect())
    }

    pub fn eval(&self, c: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, q| acc * c + q)
    }

    /// Substitutes a numeric value for `c`, yielding a constant polynomial.
    pub fn specialize(&self, c: &Scalar) -> Self {
        Self::constant(self.eval(c))
    }

    /// Reduces integer coefficients modulo `p` into `0..p`. Returns `None` if
    /// a coefficient is not an integer.
    pub fn reduce_mod(&self, p: &BigInt) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|q| q.is_integer().then(|| q.numer().mod_floor(p)))
            .collect()
    }
}

impl From<Scalar> for CoefPoly {
    fn from(value: Scalar) -> Self {
        Self::constant(value)
    }
}

impl From<i64> for CoefPoly {
    fn from(value: i64) -> Self {
        Self::from_int(value)
    }
}

impl<'a> Add<&'a CoefPoly> for &CoefPoly {
    type Output = CoefPoly;
    fn add(self, rhs: &'a CoefPoly) -> CoefPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CoefPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a CoefPoly> for &CoefPoly {
    type Output = CoefPoly;
    fn sub(self, rhs: &'a CoefPoly) -> CoefPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CoefPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a CoefPoly> for &CoefPoly {
    type Output = CoefPoly;
    fn mul(self, rhs: &'a CoefPoly) -> CoefPoly {
        if self.is_zero() || rhs.is_zero() {
            return CoefPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CoefPoly::from_coeffs(out)
    }
}

impl Neg for &CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        CoefPoly {
            coeffs: self.coeffs.iter().map(|q| -q).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty { (&self).$m(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(CoefPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        -&self
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_scalar(q: &Scalar) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Writes `Σ coeff·var^i` in descending order using the textual grammar
/// (`*`, `^`, `+`, `-`). `terms` yields (power, coefficient) pairs.
pub(crate) fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    terms: impl DoubleEndedIterator<Item = (usize, Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (i, q) in terms.rev() {
        if q.is_zero() {
            continue;
        }
        let neg = q.is_negative();
        let mag = q.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let body = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if body.is_empty() {
            write!(f, "{}", fmt_scalar(&mag))?;
        } else if mag.is_one() {
            write!(f, "{body}")?;
        } else {
            write!(f, "{}*{body}", fmt_scalar(&mag))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for CoefPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, "c", self.coeffs.iter().cloned().enumerate())
    }
}
