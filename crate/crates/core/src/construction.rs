//! Membership in the algebra of operators that fix both `R[x]` and the
//! shifted module `x⁻¹|x|^{1+2c}R[x]`, its four parity components, the
//! action on logarithmic monomials, and equivalence experiments against the
//! divided power extension.
//!
//! The shifted module has basis `μ_j = x^{j−1}|x|^{1+2c}`, `j ≥ 0`. Since
//! `|x|^r` is even and `∂|x|^r = r·x⁻¹|x|^r`, an operator acts on `μ_j` exactly
//! as on `x^{j−1}` except that the half-exponent argument of its action
//! polynomial is shifted by `(1+2c)/2`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mode::{DunklMode, Sign};
use crate::opalgebra::{basis_labels, in_dp, preserves_polynomials, GradedOp, Operator};
use crate::intval::{binomial_order, dunkl_poly};
use crate::poly::{rat, ActionPoly, CoefPoly, Scalar};
use crate::weyl::WeylOp;

/// `coefficient · μ_index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedElement {
    pub index: i64,
    pub coefficient: CoefPoly,
}

impl fmt::Display for ShiftedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*mu_{}", self.coefficient, self.index)
    }
}

/// How coefficients in the shifted module are judged.
///
/// `Vanishing` only asks that no term falls below `μ_0`; coefficients may be
/// rational. `Integral` additionally asks that each coefficient lies in the
/// base ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShiftedConvention {
    #[default]
    Vanishing,
    Integral,
}

fn half_shift(mode: &DunklMode) -> CoefPoly {
    // (1 + 2c)/2
    let c = mode.c_value();
    &CoefPoly::constant(rat(1, 2)) + &c
}

/// Image of `μ_j` for any integer `j`, without range checks.
pub fn shifted_image(q: &Operator, j: i64) -> Vec<ShiftedElement> {
    let mode = q.mode();
    let k = j - 1;
    let sign = Sign::of_exponent(k);
    let arg = &CoefPoly::from_int(k.div_euclid(2)) + &half_shift(mode);
    let mut out: Vec<ShiftedElement> = q
        .pieces()
        .map(|p| ShiftedElement {
            index: j + p.degree,
            coefficient: mode.normalize(&p.action(sign).eval(&arg)),
        })
        .filter(|e| !e.coefficient.is_zero())
        .collect();
    out.sort_by_key(|e| e.index);
    out
}

/// Image of `μ_j` (`j ≥ 0`); a term below `μ_0` is an error.
pub fn act_on_shifted(q: &Operator, j: i64) -> Result<Vec<ShiftedElement>> {
    assert!(j >= 0, "shifted module indices start at 0");
    let image = shifted_image(q, j);
    if let Some(bad) = image.iter().find(|e| e.index < 0) {
        return Err(Error::OutOfModule {
            index: bad.index,
            coefficient: bad.coefficient.to_string(),
        });
    }
    Ok(image)
}

/// Whether `Q` maps the span of `μ_j`, `j ≥ from`, into itself, checked on
/// `from ≤ j ≤ from + bound`.
pub fn fixes_shifted(q: &Operator, from: i64, bound: i64, convention: ShiftedConvention) -> bool {
    (from..=from + bound).all(|j| {
        shifted_image(q, j).iter().all(|e| {
            e.index >= from
                && (convention == ShiftedConvention::Vanishing || q.mode().in_ring(&e.coefficient))
        })
    })
}

/// Number of shifted indices examined for an operator whose action
/// polynomials have degree at most `degree_bound`.
pub fn shifted_range(q: &Operator, degree_bound: usize) -> i64 {
    2 * degree_bound as i64 + 2 * q.max_abs_degree() + 4
}

pub fn in_hc(q: &Operator, degree_bound: usize) -> bool {
    in_hc_with(q, degree_bound, ShiftedConvention::default())
}

pub fn in_hc_with(q: &Operator, degree_bound: usize, convention: ShiftedConvention) -> bool {
    let bound = shifted_range(q, degree_bound.max(q.max_t_degree()));
    preserves_polynomials(q) && fixes_shifted(q, 0, bound, convention)
}

/// One of the four parity blocks `e_left·Q·e_right` with its defining
/// conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub name: &'static str,
    pub operator: Operator,
    pub conditions: Vec<(String, bool)>,
}

impl Component {
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|(_, ok)| *ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourSplit {
    pub b: Component,
    pub b_bar: Component,
    pub a: Component,
    pub a_bar: Component,
}

impl FourSplit {
    pub fn components(&self) -> [&Component; 4] {
        [&self.b, &self.b_bar, &self.a, &self.a_bar]
    }

    pub fn sum(&self) -> Operator {
        let mut it = self.components().into_iter().map(|c| c.operator.clone());
        let first = it.next().expect("four components");
        it.fold(first, |acc, op| &acc + &op)
    }
}

/// Splits `Q` into `e₊Qe₊`, `e₋Qe₋`, `e₋Qe₊`, `e₊Qe₋` and tests each
/// against its membership conditions (with the given shifted-module bound).
pub fn four_component_split(q: &Operator, degree_bound: usize) -> FourSplit {
    let mode = q.mode();
    let x = Operator::x(mode);
    let xinv = Operator::x_pow(mode, -1);
    let bound = shifted_range(q, degree_bound.max(q.max_t_degree())) + 2;
    let fixes_poly = |op: &Operator| preserves_polynomials(op);
    // |x|^{1+2c}R[x] is the span of μ_j with j ≥ 1
    let fixes_abs = |op: &Operator| fixes_shifted(op, 1, bound, ShiftedConvention::default());
    let cond = |label: &str, ok: bool| (label.to_string(), ok);

    let b = q.sandwich(Sign::Plus, Sign::Plus);
    let b_bar = q.sandwich(Sign::Minus, Sign::Minus);
    let a = q.sandwich(Sign::Minus, Sign::Plus);
    let a_bar = q.sandwich(Sign::Plus, Sign::Minus);
    let conj_in = |op: &Operator| &(&xinv * op) * &x;
    let conj_out = |op: &Operator| &(&x * op) * &xinv;
    FourSplit {
        b: Component {
            name: "B",
            conditions: vec![
                cond("Q fixes R[x]", fixes_poly(&b)),
                cond("Q fixes |x|^(1+2c)R[x]", fixes_abs(&b)),
            ],
            operator: b,
        },
        b_bar: Component {
            name: "B-bar",
            conditions: vec![
                cond("x^-1 Q x fixes R[x]", fixes_poly(&conj_in(&b_bar))),
                cond("x Q x^-1 fixes |x|^(1+2c)R[x]", fixes_abs(&conj_out(&b_bar))),
            ],
            operator: b_bar,
        },
        a: Component {
            name: "A",
            conditions: vec![
                cond("Q fixes R[x]", fixes_poly(&a)),
                cond("x Q fixes |x|^(1+2c)R[x]", fixes_abs(&(&x * &a))),
            ],
            operator: a,
        },
        a_bar: Component {
            name: "A-bar",
            conditions: vec![
                cond("Q x fixes R[x]", fixes_poly(&(&a_bar * &x))),
                cond("x Q x^-1 fixes |x|^(1+2c)R[x]", fixes_abs(&conj_out(&a_bar))),
            ],
            operator: a_bar,
        },
    }
}

/// Image of `x^n·log x` under a homogeneous operator of degree `d`:
/// `plain·x^{n+d} + logpart·x^{n+d}·log x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogValue {
    pub plain: CoefPoly,
    pub logpart: CoefPoly,
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plain {}, log {}", self.plain, self.logpart)
    }
}

pub fn log_act_weyl(q: &WeylOp, n: i64) -> Result<LogValue> {
    let mut pieces = q.pieces();
    let (Some((_, f)), None) = (pieces.next(), pieces.next()) else {
        return Err(Error::NotHomogeneous);
    };
    Ok(LogValue {
        plain: f.derivative().eval_int(n),
        logpart: f.eval_int(n),
    })
}

/// Same for a graded piece of the Cherednik algebra, whose action polynomial
/// is written in the half-exponent; in the exponent variable `e` it reads
/// `f^ε((e − ε)/2)`, so its derivative carries a factor ½.
pub fn log_act_piece(p: &GradedOp, n: i64) -> LogValue {
    let f = p.action(Sign::of_exponent(n));
    let t = n.div_euclid(2);
    LogValue {
        plain: f.derivative().eval_int(t).scale(&rat(1, 2)),
        logpart: f.eval_int(t),
    }
}

pub fn log_act(q: &Operator, n: i64) -> Result<LogValue> {
    let mut pieces = q.pieces();
    match (pieces.next(), pieces.next()) {
        (Some(p), None) => Ok(log_act_piece(p, n)),
        (None, _) => Ok(LogValue {
            plain: CoefPoly::zero(),
            logpart: CoefPoly::zero(),
        }),
        _ => Err(Error::NotHomogeneous),
    }
}

/// Order of a Laurent differential operator: the largest t-degree among its
/// action polynomials.
pub fn differential_order(q: &Operator) -> Option<usize> {
    q.pieces()
        .flat_map(|p| [p.plus.degree(), p.minus.degree()])
        .flatten()
        .max()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Basis,
    Member,
    NonMember,
}

impl fmt::Display for SampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SampleKind::Basis => "basis",
            SampleKind::Member => "member",
            SampleKind::NonMember => "non-member",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceRow {
    pub c: Scalar,
    pub kind: SampleKind,
    pub operator: Operator,
    pub in_dp: bool,
    pub in_hc: bool,
}

impl EquivalenceRow {
    pub fn agree(&self) -> bool {
        self.in_dp == self.in_hc
    }
}

/// Rows for every basis element of total degree `≤ degree_bound`, then
/// `sample_count` random members and `sample_count` random non-members, for
/// each value of `c`.
pub fn equivalence_report(
    c_values: &[Scalar],
    degree_bound: usize,
    sample_count: usize,
    seed: u64,
) -> Vec<EquivalenceRow> {
    let mut rows = Vec::new();
    for c in c_values {
        let mode = DunklMode::Numeric(c.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut push = |kind, op: Operator| {
            rows.push(EquivalenceRow {
                c: c.clone(),
                kind,
                in_dp: in_dp(&op).is_some(),
                in_hc: in_hc(&op, degree_bound),
                operator: op,
            });
        };
        for sign in Sign::BOTH {
            for label in basis_labels(sign, degree_bound) {
                push(SampleKind::Basis, label.operator(&mode));
            }
        }
        for _ in 0..sample_count {
            push(SampleKind::Member, random_member(&mode, degree_bound.min(6), &mut rng));
        }
        for _ in 0..sample_count {
            push(SampleKind::NonMember, random_non_member(&mode, degree_bound.min(6), &mut rng));
        }
    }
    rows
}

/// A random integer combination of basis elements.
pub fn random_member(mode: &DunklMode, degree_bound: usize, rng: &mut impl Rng) -> Operator {
    let labels: Vec<_> = Sign::BOTH
        .iter()
        .flat_map(|&s| basis_labels(s, degree_bound))
        .collect();
    let terms = rng.gen_range(1..=4);
    let mut out = Operator::zero(mode);
    for _ in 0..terms {
        let label = labels.choose(rng).expect("nonempty basis");
        let a = rng.gen_range(-5..=5i64);
        out = &out + &label.operator(mode).scale(&CoefPoly::from_int(a));
    }
    out
}

/// A defect that no member can have: either a non-integral multiple of a
/// monomial, or a negative-degree piece that vanishes where polynomials
/// require but misses a root of the Dunkl product.
pub fn random_defect(mode: &DunklMode, rng: &mut impl Rng) -> Operator {
    let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
    if rng.gen_bool(0.4) {
        let p = *[2i64, 3, 5].choose(rng).unwrap();
        let a = rng.gen_range(0..=3);
        return (&Operator::x_pow(mode, a) * &Operator::idempotent(mode, sign))
            .scale_scalar(&rat(1, p));
    }
    loop {
        // k ≥ 2 on the even side: D⁺₁ = 2t has no root away from t = 0
        let k = rng.gen_range(if sign == Sign::Plus { 2 } else { 1 }..=4usize);
        let full = mode.normalize_poly(&dunkl_poly(sign, k));
        // vanishing at the integer points only: ∏_{i<m}(t − i)
        let m = binomial_order(sign, k);
        let falling = (0..m).fold(ActionPoly::one(), |acc, i| {
            &acc * &ActionPoly::from_ints(&[-(i as i64), 1])
        });
        let h = ActionPoly::from_ints(&[rng.gen_range(-3..=3), rng.gen_range(1..=3)]);
        let f = &falling * &h;
        if f.exact_div(&full).is_some() {
            continue;
        }
        let piece = match sign {
            Sign::Plus => GradedOp::new(-(k as i64), f, ActionPoly::zero()),
            Sign::Minus => GradedOp::new(-(k as i64), ActionPoly::zero(), f),
        };
        return Operator::from_pieces(mode, [piece]);
    }
}

/// A random member plus a random defect; never a member since members form
/// a group under addition.
pub fn random_non_member(mode: &DunklMode, degree_bound: usize, rng: &mut impl Rng) -> Operator {
    let defect = random_defect(mode, rng);
    &random_member(mode, degree_bound, rng) + &defect
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalgebra::delta_basis;
    use crate::poly::int;

    #[test]
    fn shifted_examples() {
        let sym = DunklMode::Symbolic;
        for j in 0..5 {
            assert_eq!(
                act_on_shifted(&Operator::x(&sym), j).unwrap(),
                vec![ShiftedElement { index: j + 1, coefficient: CoefPoly::one() }]
            );
        }
        let m = DunklMode::numeric(1);
        assert_eq!(
            act_on_shifted(&Operator::partial(&m), 0),
            Err(Error::OutOfModule { index: -1, coefficient: "2".into() })
        );
        assert_eq!(act_on_shifted(&Operator::dunkl(&sym), 0).unwrap(), vec![]);
    }

    #[test]
    fn derivative_on_shifted_basis() {
        // ∂μ_j = (j + 2c)·μ_{j−1}
        let sym = DunklMode::Symbolic;
        for j in 1..8 {
            assert_eq!(
                act_on_shifted(&Operator::partial(&sym), j).unwrap(),
                vec![ShiftedElement { index: j - 1, coefficient: CoefPoly::linear(j, 2) }]
            );
        }
    }

    #[test]
    fn membership_examples() {
        assert!(in_hc(&Operator::dunkl(&DunklMode::Symbolic), 1));
        assert!(!in_hc(&Operator::partial(&DunklMode::numeric(1)), 1));
        assert!(in_hc(&delta_basis(Sign::Plus, 2, 0, &DunklMode::numeric(0)), 2));
    }

    #[test]
    fn integral_convention_rejects_half_euler_operator() {
        let m = DunklMode::numeric(0);
        let q = delta_basis(Sign::Plus, 0, 1, &m);
        assert!(in_dp(&q).is_some());
        assert!(in_hc_with(&q, 2, ShiftedConvention::Vanishing));
        assert!(!in_hc_with(&q, 2, ShiftedConvention::Integral));
    }

    #[test]
    fn split_examples() {
        let m = DunklMode::Symbolic;
        let d = four_component_split(&Operator::dunkl(&m), 2);
        assert!(d.b.operator.is_zero() && d.b_bar.operator.is_zero());
        assert!(!d.a.operator.is_zero() && !d.a_bar.operator.is_zero());
        assert!(d.components().iter().all(|c| c.holds()));

        let e = four_component_split(&Operator::e_plus(&m), 2);
        assert_eq!(e.b.operator, Operator::e_plus(&m));
        assert!(e.b_bar.operator.is_zero() && e.a.operator.is_zero() && e.a_bar.operator.is_zero());

        let xd = &Operator::x(&m) * &Operator::dunkl(&m);
        let s = four_component_split(&xd, 2);
        assert!(!s.b.operator.is_zero() && !s.b_bar.operator.is_zero());
        assert!(s.a.operator.is_zero() && s.a_bar.operator.is_zero());
        assert_eq!(s.sum(), xd);
    }

    #[test]
    fn log_examples() {
        let v = log_act_weyl(&WeylOp::partial(), 3).unwrap();
        assert_eq!((v.plain, v.logpart), (CoefPoly::one(), CoefPoly::from_int(3)));
        let v = log_act_weyl(&WeylOp::x(), 5).unwrap();
        assert_eq!((v.plain, v.logpart), (CoefPoly::zero(), CoefPoly::one()));
        let xp = &WeylOp::x() * &WeylOp::partial();
        let v = log_act_weyl(&xp, 0).unwrap();
        assert_eq!((v.plain, v.logpart), (CoefPoly::one(), CoefPoly::zero()));
        let sym = DunklMode::Symbolic;
        for n in -8..=8 {
            let v = log_act(&Operator::partial(&sym), n).unwrap();
            assert_eq!((v.plain, v.logpart), (CoefPoly::one(), CoefPoly::from_int(n)));
        }
        assert_eq!(
            log_act(&(&Operator::x(&sym) + &Operator::dunkl(&sym)), 0),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn bracket_with_multiplication_lowers_order() {
        let m = DunklMode::Symbolic;
        let p = Operator::partial(&m);
        let x = Operator::x(&m);
        for word in [p.pow(3), &x * &p.pow(2), &(&p * &x) * &p, &x.pow(2) * &p] {
            let order = differential_order(&word).unwrap();
            let br = word.commutator(&x).unwrap();
            assert!(differential_order(&br).is_none_or(|o| o < order));
        }
    }

    #[test]
    fn report_on_integer_c_has_no_disagreements() {
        let rows = equivalence_report(&[int(0), int(2)], 4, 10, 7);
        assert!(rows.iter().all(EquivalenceRow::agree));
        assert!(rows.iter().filter(|r| r.kind == SampleKind::NonMember).all(|r| !r.in_dp));
    }
}
