//! Graded normal form for operators on the Laurent module.
//!
//! A homogeneous operator of degree `n` is determined by two action
//! polynomials: `x^{2t} ↦ f⁺(t)·x^{2t+n}` and `x^{2t+1} ↦ f⁻(t)·x^{2t+1+n}`.
//! An [`Operator`] is a finite sum of such pieces with distinct degrees. Two
//! operators are equal as endomorphisms of the Laurent module exactly when
//! their pieces are equal, so derived equality is operator equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mode::{DunklMode, Sign};
use crate::poly::{fmt_scalar, ActionPoly, CoefPoly, Scalar};

/// One homogeneous piece.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedOp {
    pub degree: i64,
    pub plus: ActionPoly,
    pub minus: ActionPoly,
}

impl GradedOp {
    pub fn new(degree: i64, plus: ActionPoly, minus: ActionPoly) -> Self {
        Self { degree, plus, minus }
    }

    /// Action polynomial on monomials of the given parity class.
    pub fn action(&self, sign: Sign) -> &ActionPoly {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    /// Highest t-degree among the two action polynomials.
    pub fn max_t_degree(&self) -> usize {
        self.plus.degree_or_zero().max(self.minus.degree_or_zero())
    }

    /// Coefficient of `x^{k+degree}` in the image of `x^k`.
    pub fn value_at(&self, k: i64) -> CoefPoly {
        self.action(Sign::of_exponent(k)).eval_int(k.div_euclid(2))
    }
}

/// A Laurent polynomial in `x`: exponent ↦ coefficient, zeros omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(pub BTreeMap<i64, CoefPoly>);

impl Laurent {
    pub fn monomial(exp: i64, coeff: CoefPoly) -> Self {
        let mut out = Self::default();
        out.add_term(exp, coeff);
        out
    }

    pub fn add_term(&mut self, exp: i64, coeff: CoefPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(exp).or_default();
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.0.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> CoefPoly {
        self.0.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &CoefPoly)> {
        self.0.iter()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, a)) in self.0.iter().rev().enumerate() {
            let mono = match e {
                0 => None,
                1 => Some("x".to_string()),
                e if *e < 0 => Some(format!("x^({e})")),
                e => Some(format!("x^{e}")),
            };
            let (negative, coeff) = match a.as_constant() {
                Some(v) if v < Scalar::zero() => (true, fmt_scalar(&-v)),
                Some(v) => (false, fmt_scalar(&v)),
                None => (false, format!("({a})")),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match mono {
                None => write!(f, "{coeff}")?,
                Some(m) if coeff == "1" => write!(f, "{m}")?,
                Some(m) => write!(f, "{coeff}*{m}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    mode: DunklMode,
    pieces: BTreeMap<i64, GradedOp>,
}

impl Operator {
    pub fn zero(mode: &DunklMode) -> Self {
        Self {
            mode: mode.clone(),
            pieces: BTreeMap::new(),
        }
    }

    /// Sums the given pieces, normalizing coefficients to the mode.
    pub fn from_pieces(mode: &DunklMode, pieces: impl IntoIterator<Item = GradedOp>) -> Self {
        let mut out = Self::zero(mode);
        for p in pieces {
            out.add_piece(p);
        }
        out
    }

    pub fn homogeneous(mode: &DunklMode, degree: i64, plus: ActionPoly, minus: ActionPoly) -> Self {
        Self::from_pieces(mode, [GradedOp::new(degree, plus, minus)])
    }

    fn add_piece(&mut self, p: GradedOp) {
        let plus = self.mode.normalize_poly(&p.plus);
        let minus = self.mode.normalize_poly(&p.minus);
        let entry = self
            .pieces
            .entry(p.degree)
            .or_insert_with(|| GradedOp::new(p.degree, ActionPoly::zero(), ActionPoly::zero()));
        entry.plus = &entry.plus + &plus;
        entry.minus = &entry.minus + &minus;
        if entry.is_zero() {
            self.pieces.remove(&p.degree);
        }
    }

    pub fn scalar(mode: &DunklMode, value: CoefPoly) -> Self {
        let f = ActionPoly::constant(value);
        Self::homogeneous(mode, 0, f.clone(), f)
    }

    pub fn identity(mode: &DunklMode) -> Self {
        Self::scalar(mode, CoefPoly::one())
    }

    /// Multiplication by the parameter `c`.
    pub fn c(mode: &DunklMode) -> Self {
        Self::scalar(mode, mode.c_value())
    }

    pub fn x(mode: &DunklMode) -> Self {
        Self::x_pow(mode, 1)
    }

    /// Multiplication by `x^n` for any integer `n`.
    pub fn x_pow(mode: &DunklMode, n: i64) -> Self {
        Self::homogeneous(mode, n, ActionPoly::one(), ActionPoly::one())
    }

    /// The Dunkl operator `D = ∂ − (2c/x)·e₋`.
    pub fn dunkl(mode: &DunklMode) -> Self {
        let plus = ActionPoly::from_ints(&[0, 2]);
        let minus = ActionPoly::linear(
            CoefPoly::from_int(2),
            &CoefPoly::one() - &mode.c_value().scale(&crate::poly::int(2)),
        );
        Self::homogeneous(mode, -1, plus, minus)
    }

    /// The plain derivative `∂`, which is not in the algebra for `c ≠ 0` but
    /// lives in the ambient Laurent operators.
    pub fn partial(mode: &DunklMode) -> Self {
        Self::homogeneous(
            mode,
            -1,
            ActionPoly::from_ints(&[0, 2]),
            ActionPoly::from_ints(&[1, 2]),
        )
    }

    pub fn idempotent(mode: &DunklMode, sign: Sign) -> Self {
        match sign {
            Sign::Plus => Self::homogeneous(mode, 0, ActionPoly::one(), ActionPoly::zero()),
            Sign::Minus => Self::homogeneous(mode, 0, ActionPoly::zero(), ActionPoly::one()),
        }
    }

    pub fn e_plus(mode: &DunklMode) -> Self {
        Self::idempotent(mode, Sign::Plus)
    }

    pub fn e_minus(mode: &DunklMode) -> Self {
        Self::idempotent(mode, Sign::Minus)
    }

    /// The reflection `s = e₊ − e₋`.
    pub fn reflection(mode: &DunklMode) -> Self {
        Self::homogeneous(mode, 0, ActionPoly::one(), -ActionPoly::one())
    }

    pub fn mode(&self) -> &DunklMode {
        &self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn pieces(&self) -> impl Iterator<Item = &GradedOp> {
        self.pieces.values()
    }

    pub fn piece(&self, degree: i64) -> Option<&GradedOp> {
        self.pieces.get(&degree)
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.pieces.keys().copied().collect()
    }

    /// The grading decomposition (the stored pieces).
    pub fn grade_decompose(&self) -> BTreeMap<i64, GradedOp> {
        self.pieces.clone()
    }

    pub fn max_t_degree(&self) -> usize {
        self.pieces().map(GradedOp::max_t_degree).max().unwrap_or(0)
    }

    pub fn max_abs_degree(&self) -> i64 {
        self.pieces.keys().map(|n| n.abs()).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &CoefPoly) -> Self {
        let s = self.mode.normalize(s);
        Self::from_pieces(
            &self.mode,
            self.pieces()
                .map(|p| GradedOp::new(p.degree, p.plus.scale(&s), p.minus.scale(&s))),
        )
    }

    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        self.scale(&CoefPoly::constant(s.clone()))
    }

    fn check_mode(&self, other: &Operator) -> Result<()> {
        if self.mode == other.mode {
            Ok(())
        } else {
            Err(Error::ModeMismatch)
        }
    }

    pub fn try_add(&self, other: &Operator) -> Result<Operator> {
        self.check_mode(other)?;
        let mut out = self.clone();
        for p in other.pieces() {
            out.add_piece(p.clone());
        }
        Ok(out)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Operator) -> Result<Operator> {
        self.check_mode(other)?;
        let mut out = Operator::zero(&self.mode);
        for b in other.pieces() {
            let m = b.degree;
            // x^{2t} ↦ x^{2t+m}: parity of m, half-index shifted by ⌊m/2⌋
            let even_shift = m.div_euclid(2);
            // x^{2t+1} ↦ x^{2t+1+m}: parity of m+1, shifted by ⌊(m+1)/2⌋
            let odd_shift = (m + 1).div_euclid(2);
            for a in self.pieces() {
                let plus = if b.plus.is_zero() {
                    ActionPoly::zero()
                } else {
                    &a.action(Sign::of_exponent(m)).shift_int(even_shift) * &b.plus
                };
                let minus = if b.minus.is_zero() {
                    ActionPoly::zero()
                } else {
                    &a.action(Sign::of_exponent(m + 1)).shift_int(odd_shift) * &b.minus
                };
                out.add_piece(GradedOp::new(a.degree + m, plus, minus));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Operator {
        (0..e).fold(Operator::identity(&self.mode), |acc, _| &acc * self)
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &Operator) -> Result<Operator> {
        Ok(&self.compose(other)? - &other.compose(self)?)
    }

    /// `e_left · self · e_right`.
    pub fn sandwich(&self, left: Sign, right: Sign) -> Operator {
        let mut out = Operator::zero(&self.mode);
        for p in self.pieces() {
            // source parity `right`, target parity right + degree
            let target = Sign::of_exponent(right.offset() + p.degree);
            if target != left {
                continue;
            }
            let f = p.action(right).clone();
            let piece = match right {
                Sign::Plus => GradedOp::new(p.degree, f, ActionPoly::zero()),
                Sign::Minus => GradedOp::new(p.degree, ActionPoly::zero(), f),
            };
            out.add_piece(piece);
        }
        out
    }

    /// Image of the monomial `x^k` (any integer `k`).
    pub fn act(&self, k: i64) -> Laurent {
        let mut out = Laurent::default();
        for p in self.pieces() {
            out.add_term(k + p.degree, p.value_at(k));
        }
        out
    }

    /// Applies the operator to a Laurent polynomial.
    pub fn apply(&self, v: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (&k, a) in v.terms() {
            for p in self.pieces() {
                out.add_term(k + p.degree, a * &p.value_at(k));
            }
        }
        out
    }

    /// Reinterprets the operator over another base ring mode, specializing
    /// `c` when the target is numeric.
    pub fn with_mode(&self, mode: &DunklMode) -> Operator {
        assert!(
            self.mode.is_symbolic() || &self.mode == mode,
            "cannot lift a numeric operator to another mode"
        );
        Operator::from_pieces(mode, self.pieces().cloned())
    }
}

impl Add for &Operator {
    type Output = Operator;
    /// Panics on a mode mismatch; see [`Operator::try_add`].
    fn add(self, rhs: &Operator) -> Operator {
        self.try_add(rhs).expect("operator modes must agree")
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        self.try_add(&-rhs).expect("operator modes must agree")
    }
}

impl Mul for &Operator {
    type Output = Operator;
    /// Composition; panics on a mode mismatch, see [`Operator::compose`].
    fn mul(self, rhs: &Operator) -> Operator {
        self.compose(rhs).expect("operator modes must agree")
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scale_scalar(&-Scalar::from_integer(1.into()))
    }
}

impl Add for Operator {
    type Output = Operator;
    fn add(self, rhs: Operator) -> Operator {
        &self + &rhs
    }
}

impl Sub for Operator {
    type Output = Operator;
    fn sub(self, rhs: Operator) -> Operator {
        &self - &rhs
    }
}

impl Mul for Operator {
    type Output = Operator;
    fn mul(self, rhs: Operator) -> Operator {
        &self * &rhs
    }
}

impl Neg for Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        -&self
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, p) in self.pieces().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "degree {}: x^(2t) -> {} ; x^(2t+1) -> {}", p.degree, p.plus, p.minus)?;
        }
        Ok(())
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        for (e, a) in rhs.0 {
            self.add_term(e, a);
        }
        self
    }
}
