//! The invariant suite behind `cherednik verify`.
//!
//! Each check is a named function recording assertions through a [`Ctx`].
//! Checks run in parallel and the report keeps the registration order.
//! Negating a check flips every assertion it makes, which must turn the
//! check (and the whole suite) red.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construction::{
    differential_order, equivalence_report, four_component_split, log_act, log_act_weyl,
    random_member, shifted_image, SampleKind,
};
use crate::expr::{parse, Word};
use crate::intval::{
    compare_numeric_lattice, divisor_of_values, dunkl_poly, int_basis, is_ring_valued, l_poly,
    binomial_order, pow2_factorial, LatticeComparison,
};
use crate::lattice::{contains, hnf, rank, saturate};
use crate::mode::{DunklMode, Sign};
use crate::opalgebra::{
    basis_labels, combine, decompose_in_basis, delta_denominator, delta_numerator,
    graded_dimension, in_dp, operator_divisor, reduce_mod_p, BasisLabel, Operator,
};
use crate::poly::{
    binomial_poly, from_newton, int, pascal_inverse, pascal_matrix, rat, to_newton, ActionPoly,
    CoefPoly, Scalar,
};
use crate::sample;
use crate::sl2::{build_triple, casimir, casimir_scalar, sigma, sigma_label, spherical_labels};
use crate::weyl::{tensor_divisor_check, tensor_divisors, weyl_dp_basis, WeylOp};

/// Assertion recorder for one check.
pub struct Ctx {
    negate: bool,
    assertions: usize,
    failures: Vec<String>,
}

impl Ctx {
    pub fn ensure(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.assertions += 1;
        if cond == self.negate {
            self.failures.push(what());
        }
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }
}

pub struct Check {
    pub name: &'static str,
    pub module: &'static str,
    run: fn(&mut Ctx),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub module: &'static str,
    pub assertions: usize,
    pub failures: usize,
    /// First failure message, if any.
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.assertions > 0
    }
}

macro_rules! checks {
    ($($module:literal : $name:ident),* $(,)?) => {
        vec![$(Check { name: stringify!($name), module: $module, run: $name }),*]
    };
}

pub fn checks() -> Vec<Check> {
    checks![
        "poly": newton_round_trip,
        "poly": pascal_inverse_integral,
        "intval": divisor_matches_oracle,
        "intval": dunkl_factorization,
        "intval": int_basis_is_ring_valued,
        "intval": numeric_lattice_saturation,
        "intval": lattice_saturation,
        "opalgebra": relation_suite,
        "opalgebra": composition_soundness,
        "opalgebra": grading_of_words,
        "opalgebra": divisor_linearity,
        "opalgebra": delta_integrality,
        "opalgebra": delta_maximality,
        "opalgebra": basis_round_trip,
        "opalgebra": hilbert_series,
        "opalgebra": pbw_independence,
        "opalgebra": mod_p_tables,
        "weyl": hasse_pascal_columns,
        "weyl": hasse_composition,
        "weyl": weyl_basis_closure,
        "weyl": derivative_divisor,
        "weyl": tensor_divisibility,
        "weyl": base_ring_units,
        "abstract": abstract_equivalence,
        "abstract": four_component_split_sums,
        "abstract": log_product_rule,
        "abstract": log_derivative,
        "abstract": shifted_specialization,
        "abstract": bracket_descent,
        "sl2": sl2_brackets,
        "sl2": casimir_identity,
        "sl2": sigma_delta_correspondence,
        "sl2": spherical_decomposition,
        "cli": parse_print_round_trip,
    ]
}

pub fn run_check(check: &Check, negate: bool) -> CheckResult {
    let mut ctx = Ctx {
        negate,
        assertions: 0,
        failures: Vec::new(),
    };
    (check.run)(&mut ctx);
    CheckResult {
        name: check.name,
        module: check.module,
        assertions: ctx.assertions,
        failures: ctx.failures.len(),
        detail: ctx.failures.into_iter().next(),
    }
}

/// Runs every check whose name or module matches `filter` (all when `None`),
/// negating the check named `negate`.
pub fn run(filter: Option<&str>, negate: Option<&str>) -> Vec<CheckResult> {
    let selected: Vec<Check> = checks()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.name == f || c.module == f))
        .collect();
    selected
        .par_iter()
        .map(|c| run_check(c, negate == Some(c.name)))
        .collect()
}

fn sym() -> DunklMode {
    DunklMode::Symbolic
}

// poly

fn newton_round_trip(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(1);
    for _ in 0..100 {
        let f = sample::action_poly(&mut rng, 8, 2, 20);
        let back = from_newton(&to_newton(&f));
        ctx.ensure(back == f, || format!("round trip failed for {f}"));
    }
}

fn pascal_inverse_integral(ctx: &mut Ctx) {
    for n in 0..=16 {
        let p = pascal_matrix(n);
        let q = pascal_inverse(n);
        let ok = (0..=n).all(|i| {
            (0..=n).all(|j| {
                let s: BigInt = (0..=n).map(|k| &p[i][k] * &q[k][j]).sum();
                s == BigInt::from((i == j) as i64)
            })
        });
        ctx.ensure(ok, || format!("P·P⁻¹ ≠ I at N = {n}"));
    }
}

// intval

/// gcd of the integer contents of `f(0), …, f(upto)`.
fn brute_divisor(f: &ActionPoly, upto: i64) -> BigInt {
    (0..=upto).fold(BigInt::zero(), |g, t| {
        g.gcd(&f.eval_int(t).integer_content().expect("integral value"))
    })
}

fn divisor_matches_oracle(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(2);
    for i in 0..200 {
        // alternate between integer coefficients and integer Newton coordinates
        let f = if i % 2 == 0 {
            sample::action_poly(&mut rng, 8, 2, 50)
        } else {
            let deg = rng.gen_range(0..=8);
            let scale = rng.gen_range(1..=12);
            let coords: Vec<CoefPoly> = (0..=deg)
                .map(|_| sample::coef_poly(&mut rng, 2, 50).scale(&int(scale)))
                .collect();
            from_newton(&coords)
        };
        let got = divisor_of_values(&f, &sym()).expect("integer valued");
        let expect = brute_divisor(&f, f.degree_or_zero() as i64 + 3);
        ctx.ensure(got == expect, || format!("divisor {got} ≠ oracle {expect} for {f}"));
    }
}

fn dunkl_factorization(ctx: &mut Ctx) {
    for sign in Sign::BOTH {
        for k in 0..=10 {
            let m = binomial_order(sign, k);
            let rhs = (&l_poly(sign, k) * &binomial_poly(m))
                .scale_scalar(&Scalar::from_integer(pow2_factorial(m, m)));
            ctx.ensure(dunkl_poly(sign, k) == rhs, || format!("D{sign}_{k} ≠ 2^m m! L C(t,m)"));
        }
    }
}

fn int_basis_is_ring_valued(ctx: &mut Ctx) {
    for sign in Sign::BOTH {
        for n in -4..=3i64 {
            for mode in [sym(), DunklMode::numeric(1), DunklMode::numeric(-2)] {
                let lat = int_basis(sign, n, &mode, 8);
                let factor = lat.base_factor();
                for (i, g) in lat.generators.iter().enumerate() {
                    ctx.ensure(is_ring_valued(g, &mode, 12), || format!("{sign} {n} {mode}: {g} not ring valued"));
                    ctx.ensure(g.exact_div(&factor).is_some(), || format!("{g} not divisible by the Dunkl product"));
                    ctx.ensure(g.degree() == Some(lat.min_degree() + i), || format!("generator {i} has wrong degree"));
                }
            }
        }
    }
}

fn numeric_lattice_saturation(ctx: &mut Ctx) {
    for c in [0, 1, -2] {
        for n in -4..0 {
            for sign in Sign::BOTH {
                let cmp = compare_numeric_lattice(sign, n, c, 8);
                let ok = matches!(
                    cmp,
                    LatticeComparison::Same | LatticeComparison::Differs { specialized_inside: true, ring_valued: true, primitive: true }
                );
                ctx.ensure(ok, || format!("c={c} n={n} {sign}: {cmp:?}"));
            }
        }
    }
}

fn lattice_saturation(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(3);
    for _ in 0..40 {
        let rows: Vec<Vec<BigInt>> = (0..rng.gen_range(1..=4))
            .map(|_| (0..4).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect())
            .collect();
        let sat = saturate(&rows);
        let h = hnf(&rows);
        ctx.ensure(hnf(&h) == h, || "Hermite form is not idempotent".into());
        ctx.ensure(rows.iter().all(|r| contains(&sat, r)), || "saturation misses a row".into());
        ctx.ensure(rank(&sat) == rank(&rows), || "saturation changed the rank".into());
        let scaled: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|v| v * 6).collect()).collect();
        ctx.ensure(saturate(&scaled) == sat, || "saturation depends on scaling".into());
    }
}

// opalgebra

fn relation_suite(ctx: &mut Ctx) {
    for m in [sym(), DunklMode::numeric(3)] {
        let x = Operator::x(&m);
        let d = Operator::dunkl(&m);
        let s = Operator::reflection(&m);
        let ep = Operator::e_plus(&m);
        let em = Operator::e_minus(&m);
        let one = Operator::identity(&m);
        let two_cs = (&Operator::c(&m) * &s).scale_scalar(&int(2));
        let rel: [(&str, Operator, Operator); 8] = [
            ("s^2 = 1", &s * &s, one.clone()),
            ("e+^2 = e+", &ep * &ep, ep.clone()),
            ("e-^2 = e-", &em * &em, em.clone()),
            ("e+ e- = 0", &ep * &em, Operator::zero(&m)),
            ("e+ + e- = 1", &ep + &em, one.clone()),
            ("s x s = -x", &(&s * &x) * &s, -&x),
            ("[D,x] = 1 - 2cs", d.commutator(&x).unwrap(), &one - &two_cs),
            ("D e+ = e- D", &d * &ep, &em * &d),
        ];
        for (name, lhs, rhs) in rel {
            ctx.ensure(lhs == rhs, || format!("{name} fails in mode {m}"));
            for k in -32..=32 {
                ctx.ensure(lhs.act(k) == rhs.act(k), || format!("{name} differs on x^{k}"));
            }
        }
        ctx.ensure(&d * &em == &ep * &d, || "D e- ≠ e+ D".into());
    }
}

fn composition_soundness(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(4);
    let m = sym();
    for _ in 0..100 {
        let a = sample::monomial_word(&mut rng, 6).to_operator(&m);
        let b = sample::word(&mut rng, 3).to_operator(&m);
        let ab = &a * &b;
        for k in -16..=16 {
            ctx.ensure(ab.act(k) == a.apply(&b.act(k)), || format!("composition fails on x^{k}"));
        }
    }
}

fn grading_of_words(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(5);
    for _ in 0..100 {
        let w = sample::monomial_word(&mut rng, 6);
        let q = w.to_operator(&sym());
        let deg = w.degree().expect("monomials are homogeneous");
        ctx.ensure(q.degrees().iter().all(|&n| n == deg), || format!("{w} has pieces off degree {deg}"));
    }
}

fn divisor_linearity(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(6);
    for i in 0..30 {
        let m = if i % 2 == 0 { sym() } else { DunklMode::numeric(rng.gen_range(-3..=3)) };
        let q = random_member(&m, 5, &mut rng);
        let Ok(d) = operator_divisor(&q) else {
            ctx.ensure(false, || "member does not preserve polynomials".into());
            continue;
        };
        for mult in [2i64, -3, 5] {
            let got = operator_divisor(&q.scale_scalar(&int(mult))).unwrap();
            ctx.ensure(got == &d * mult.abs(), || format!("divisor not linear under ×{mult}"));
        }
        let bound = 2 * q.max_t_degree() as i64 + q.max_abs_degree() + 4;
        let brute = (0..=bound).fold(BigInt::zero(), |g, k| {
            q.act(k).terms().fold(g, |g, (_, a)| g.gcd(&a.integer_content().unwrap()))
        });
        ctx.ensure(brute == d, || format!("divisor {d} ≠ brute force {brute}"));
    }
}

fn all_labels(max: usize) -> Vec<BasisLabel> {
    Sign::BOTH.iter().flat_map(|&s| basis_labels(s, max)).collect()
}

fn delta_integrality(ctx: &mut Ctx) {
    let m = sym();
    for label in all_labels(12) {
        let b = label.operator(&m);
        ctx.ensure(in_dp(&b).is_some(), || format!("{label} is not certified"));
        for k in 0..=40 {
            let ok = b.act(k).terms().all(|(_, a)| a.is_integral());
            ctx.ensure(ok, || format!("{label} on x^{k} is not integral"));
        }
    }
}

fn delta_maximality(ctx: &mut Ctx) {
    let m = sym();
    for sign in Sign::BOTH {
        for k2 in 0..=5 {
            for k1 in 0..=10 - 2 * k2 {
                let num = delta_numerator(sign, k1, k2, &m);
                let d = operator_divisor(&num).ok();
                let expect = delta_denominator(sign, k1, k2);
                ctx.ensure(d.as_ref() == Some(&expect), || {
                    format!("divisor of Δ{sign}[{k1},{k2}] numerator is {d:?}, expected {expect}")
                });
            }
        }
    }
}

fn basis_round_trip(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(7);
    let m = sym();
    for _ in 0..100 {
        let terms = sample::basis_combination(&mut rng, 8, 3, 5);
        let q = combine(&terms, &m);
        let got = decompose_in_basis(&q);
        ctx.ensure(got.as_ref() == Ok(&terms), || format!("decomposition mismatch: {got:?}"));
    }
}

fn hilbert_series(ctx: &mut Ctx) {
    for m in 0..=12 {
        ctx.ensure(graded_dimension(m) == 2 * (m + 1), || format!("dimension at degree {m}"));
    }
}

/// Rows of Newton coordinates at a generic rational `c`, cleared to integers.
fn coordinate_row(q: &Operator, columns: &BTreeMap<(i64, Sign, usize), usize>) -> Vec<BigInt> {
    let c = rat(7, 3);
    let mut row = vec![Scalar::zero(); columns.len()];
    for p in q.pieces() {
        for sign in Sign::BOTH {
            for (k, a) in to_newton(p.action(sign)).iter().enumerate() {
                row[columns[&(p.degree, sign, k)]] = a.eval(&c);
            }
        }
    }
    let den = row.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    row.iter().map(|v| (v * Scalar::from_integer(den.clone())).to_integer()).collect()
}

fn pbw_independence(ctx: &mut Ctx) {
    let m = sym();
    let mut ops = Vec::new();
    for sign in Sign::BOTH {
        for a in 0..=8i64 {
            for b in 0..=(8 - a) as u32 {
                let q = &(&Operator::x_pow(&m, a) * &Operator::dunkl(&m).pow(b)) * &Operator::idempotent(&m, sign);
                ops.push(q);
            }
        }
    }
    let mut columns = BTreeMap::new();
    for q in &ops {
        for p in q.pieces() {
            for sign in Sign::BOTH {
                for k in 0..=p.max_t_degree() {
                    let n = columns.len();
                    columns.entry((p.degree, sign, k)).or_insert(n);
                }
            }
        }
    }
    let rows: Vec<Vec<BigInt>> = ops.iter().map(|q| coordinate_row(q, &columns)).collect();
    let r = rank(&rows);
    ctx.ensure(r == ops.len(), || format!("rank {r} < {}", ops.len()));
}

fn mod_p_tables(ctx: &mut Ctx) {
    let zero = DunklMode::numeric(0);
    let half_d = crate::opalgebra::delta_basis(Sign::Plus, 1, 0, &zero);
    let t = reduce_mod_p(&half_d, 2, 12).unwrap();
    for u in 0..=6 {
        ctx.ensure(t.residue(2 * u, 2 * u - 1) == (u % 2) as u64, || format!("Δ+[1,0] mod 2 at t = {u}"));
    }
    let mut rng = Ctx::rng(8);
    for c in [0, 1] {
        let m = DunklMode::numeric(c);
        for p in [2u64, 3, 5] {
            let q = random_member(&m, 4, &mut rng);
            let table = reduce_mod_p(&q, p, 10).unwrap();
            for k in 0..=10 {
                for (&e, a) in q.act(k).terms() {
                    let v = a.as_constant().unwrap().to_integer().mod_floor(&BigInt::from(p));
                    ctx.ensure(BigInt::from(table.residue(k, e)) == v, || format!("residue of x^{k} ↦ x^{e} mod {p}"));
                }
            }
        }
    }
}

// weyl

fn hasse_pascal_columns(ctx: &mut Ctx) {
    let pascal = pascal_matrix(16);
    for k in 0..=8usize {
        let h = WeylOp::hasse(k);
        for t in 0..=2 * k {
            let v = h.act(t as i64).coeff(t as i64 - k as i64);
            let expect = CoefPoly::constant(Scalar::from_integer(pascal[t][k].clone()));
            ctx.ensure(v == expect || (t < k && v.is_zero()), || format!("𝒟^{k} on x^{t}"));
        }
    }
}

fn hasse_composition(ctx: &mut Ctx) {
    for a in 0..=5usize {
        for b in 0..=5usize {
            let lhs = &WeylOp::hasse(a) * &WeylOp::hasse(b);
            let rhs = WeylOp::hasse(a + b).scale_scalar(&crate::poly::binomial_value((a + b) as i64, a));
            ctx.ensure(lhs == rhs, || format!("𝒟^{a}𝒟^{b} ≠ C({},{a})𝒟^{}", a + b, a + b));
            for t in 0..=12 {
                ctx.ensure(lhs.act(t) == rhs.act(t), || format!("action differs on x^{t}"));
            }
        }
    }
}

/// Coefficients of `W` in the basis `x^k𝒟^l`, if integral.
fn weyl_coordinates(w: &WeylOp) -> Option<BTreeMap<(usize, usize), BigInt>> {
    let mut out = BTreeMap::new();
    for (n, f) in w.pieces() {
        for (l, a) in to_newton(f).into_iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let k = n + l as i64;
            let v = a.as_constant()?;
            if k < 0 || !v.is_integer() {
                return None;
            }
            out.insert((k as usize, l), v.to_integer());
        }
    }
    Some(out)
}

fn weyl_basis_closure(ctx: &mut Ctx) {
    let basis = weyl_dp_basis(4);
    for (la, a) in &basis {
        for (lb, b) in &basis {
            let prod = a * b;
            ctx.ensure(weyl_coordinates(&prod).is_some(), || format!("{la:?}·{lb:?} is not an integral combination"));
        }
    }
}

fn derivative_divisor(ctx: &mut Ctx) {
    let mut fact = BigInt::one();
    for k in 0..=8u32 {
        if k > 0 {
            fact *= k;
        }
        let p = WeylOp::partial().pow(k);
        let f = p.piece(-(k as i64)).cloned().unwrap_or_default();
        let oracle = brute_divisor(&f, k as i64 + 1);
        ctx.ensure(p.divisor() == Some(fact.clone()), || format!("divisor of ∂^{k}"));
        ctx.ensure(oracle == fact, || format!("oracle divisor of ∂^{k} is {oracle}"));
    }
}

fn tensor_divisibility(ctx: &mut Ctx) {
    let m = sym();
    let weyl = weyl_dp_basis(4);
    for label in all_labels(4) {
        let a = label.operator(&m);
        for (lb, b) in &weyl {
            let t = tensor_divisors(&a, b, 20);
            ctx.ensure(t.product == &t.left * &t.right, || format!("div({label}⊗{lb:?}) ≠ div·div"));
            if label.total_degree() > 2 {
                continue;
            }
            let a2 = a.scale_scalar(&int(2));
            let b3 = b.scale_scalar(&int(3));
            for d in [4, 6, 12] {
                ctx.ensure(tensor_divisor_check(&a2, &b3, d), || format!("{d} | 2{label}⊗3{lb:?} does not split"));
            }
        }
    }
}

fn base_ring_units(ctx: &mut Ctx) {
    // The tensor statement for divided powers needs R^× ∩ ℤ = {±1}.
    for m in [sym(), DunklMode::numeric(0), DunklMode::numeric(5)] {
        ctx.ensure(m.integer_units(100) == vec![-1, 1], || format!("units in mode {m}"));
    }
}

// abstract

fn abstract_equivalence(ctx: &mut Ctx) {
    let cs: Vec<Scalar> = [-3, -1, 0, 1, 2].into_iter().map(int).collect();
    let rows = equivalence_report(&cs, 8, 50, 9);
    for r in &rows {
        let expect = r.kind != SampleKind::NonMember;
        ctx.ensure(r.in_dp == expect && r.in_hc == expect, || {
            format!("c = {}: {} sample gives in_dp = {}, in_Hc = {}", r.c, r.kind, r.in_dp, r.in_hc)
        });
    }
}

fn four_component_split_sums(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(10);
    for i in 0..30 {
        let m = DunklMode::numeric(rng.gen_range(-2..=2));
        let q = if i % 2 == 0 {
            sample::word(&mut rng, 3).to_operator(&m)
        } else {
            random_member(&m, 4, &mut rng)
        };
        let split = four_component_split(&q, 4);
        ctx.ensure(split.sum() == q, || "components do not sum to Q".into());
        for comp in split.components() {
            let again = four_component_split(&comp.operator, 4);
            let same = again.components().iter().filter(|c| c.operator == comp.operator).count();
            let zero = again.components().iter().filter(|c| c.operator.is_zero()).count();
            ctx.ensure(comp.operator.is_zero() || (same == 1 && zero == 3), || format!("split of {} is not idempotent", comp.name));
        }
        if i % 2 == 1 {
            ctx.ensure(split.components().iter().all(|c| c.holds()), || "member component fails its conditions".into());
        }
    }
}

fn log_product_rule(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(11);
    for _ in 0..40 {
        let da = rng.gen_range(-3..=3);
        let db = rng.gen_range(-3..=3);
        let fa = sample::action_poly(&mut rng, 3, 0, 5);
        let fb = sample::action_poly(&mut rng, 3, 0, 5);
        let a = WeylOp::homogeneous(da, fa.clone());
        let b = WeylOp::homogeneous(db, fb.clone());
        let ab = &a * &b;
        if ab.is_zero() {
            continue;
        }
        for n in -8..=8 {
            let got = log_act_weyl(&ab, n).unwrap();
            let (ga, dga) = (fa.eval_int(n + db), fa.derivative().eval_int(n + db));
            let (gb, dgb) = (fb.eval_int(n), fb.derivative().eval_int(n));
            let plain = &(&dgb * &ga) + &(&gb * &dga);
            ctx.ensure(got.plain == plain && got.logpart == &gb * &ga, || format!("product rule fails at n = {n}"));
        }
    }
    let m = sym();
    for _ in 0..40 {
        let a = sample::monomial_word(&mut rng, 4).to_operator(&m);
        let b = sample::monomial_word(&mut rng, 4).to_operator(&m);
        let (Some(pa), Some(pb)) = (a.pieces().next(), b.pieces().next()) else {
            continue;
        };
        let ab = &a * &b;
        if ab.is_zero() {
            continue;
        }
        for n in -8..=8i64 {
            let got = log_act(&ab, n).unwrap();
            let va = crate::construction::log_act_piece(pa, n + pb.degree);
            let vb = crate::construction::log_act_piece(pb, n);
            let plain = &(&vb.plain * &va.logpart) + &(&vb.logpart * &va.plain);
            ctx.ensure(got.plain == plain && got.logpart == &vb.logpart * &va.logpart, || {
                format!("graded product rule fails at n = {n}")
            });
        }
    }
}

fn log_derivative(ctx: &mut Ctx) {
    for n in -8..=8 {
        let w = log_act_weyl(&WeylOp::partial(), n).unwrap();
        let o = log_act(&Operator::partial(&sym()), n).unwrap();
        for v in [w, o] {
            ctx.ensure(v.plain == CoefPoly::one() && v.logpart == CoefPoly::from_int(n), || format!("∂ on x^{n} log x"));
        }
    }
}

fn shifted_specialization(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(12);
    for _ in 0..20 {
        let w = sample::word(&mut rng, 3);
        let q = w.to_operator(&sym());
        for c in [0i64, 2, -1] {
            let qc = q.with_mode(&DunklMode::numeric(c));
            for j in 0..=10 {
                let lhs: Vec<_> = shifted_image(&q, j)
                    .into_iter()
                    .map(|e| (e.index, e.coefficient.specialize(&int(c))))
                    .filter(|(_, a)| !a.is_zero())
                    .collect();
                let rhs: Vec<_> = shifted_image(&qc, j).into_iter().map(|e| (e.index, e.coefficient)).collect();
                ctx.ensure(lhs == rhs, || format!("specialization at c = {c} differs on μ_{j}"));
            }
        }
        // at c = r − ½ the shifted module is x^{2r−1}R[x] and μ_j = x^{j−1+2r}
        for r in 0..=2i64 {
            let qc = q.with_mode(&DunklMode::Numeric(Scalar::from_integer(r.into()) - rat(1, 2)));
            for j in 0..=10 {
                let img = shifted_image(&qc, j);
                let table = qc.act(j - 1 + 2 * r);
                let ok = img.len() == table.0.len()
                    && img.iter().all(|e| table.coeff(e.index - 1 + 2 * r) == e.coefficient);
                ctx.ensure(ok, || format!("shifted action at c = {r} - 1/2 differs from x^{}", j - 1 + 2 * r));
            }
        }
    }
}

fn bracket_descent(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(13);
    let m = sym();
    let gens = [Operator::x(&m), Operator::partial(&m), Operator::x_pow(&m, -1)];
    for _ in 0..50 {
        let len = rng.gen_range(1..=5);
        let q = (0..len).fold(Operator::identity(&m), |acc, _| &acc * &gens[rng.gen_range(0..3)]);
        let order = differential_order(&q).unwrap_or(0);
        for a in [Operator::x(&m), Operator::x_pow(&m, 2)] {
            let br = q.commutator(&a).unwrap();
            let lower = differential_order(&br).is_none_or(|o| o < order || (order == 0 && br.is_zero()));
            ctx.ensure(lower, || format!("[Q, a] does not lower the order {order}"));
        }
    }
}

// sl2

fn sl2_brackets(ctx: &mut Ctx) {
    for m in [sym(), DunklMode::numeric(-1), DunklMode::Numeric(rat(1, 2))] {
        let t = build_triple(&m);
        let names = ["[H,E] = 2E", "[H,F] = -2F", "[E,F] = H"];
        for (name, d) in names.iter().zip(t.defects().unwrap()) {
            ctx.ensure(d.is_zero(), || format!("{name} fails in mode {m}"));
        }
        for u in 0..=10 {
            let he = t.h.commutator(&t.e).unwrap();
            ctx.ensure(he.act(2 * u) == t.e.scale_scalar(&int(2)).act(2 * u), || format!("[H,E] on x^{}", 2 * u));
        }
    }
}

fn casimir_identity(ctx: &mut Ctx) {
    for m in [sym(), DunklMode::numeric(0), DunklMode::Numeric(rat(1, 2))] {
        let scalar_e = &Operator::scalar(&m, casimir_scalar(&m)) * &Operator::e_plus(&m);
        let diff = &casimir(&m) - &scalar_e;
        ctx.ensure(diff.is_zero(), || format!("Casimir identity fails in mode {m}"));
    }
    ctx.ensure(casimir_scalar(&DunklMode::numeric(0)) == CoefPoly::constant(rat(-3, 8)), || "C at c = 0".into());
    ctx.ensure(casimir_scalar(&DunklMode::Numeric(rat(1, 2))).is_zero(), || "C at c = 1/2".into());
}

fn sigma_delta_correspondence(ctx: &mut Ctx) {
    let m = sym();
    for a in 0..=5usize {
        for b in 0..=5 - a {
            for k in 0..=5 - a - b {
                let s = sigma(a, b, k, &m);
                match sigma_label(a, b, k) {
                    Some(label) => ctx.ensure(s == label.operator(&m), || format!("Σ[{a},{b},{k}] ≠ {label}")),
                    None => ctx.ensure(
                        s.sandwich(Sign::Plus, Sign::Plus) == s && in_dp(&s).is_some(),
                        || format!("Σ[{a},{b},{k}] is not a spherical member"),
                    ),
                }
            }
        }
    }
}

fn spherical_decomposition(ctx: &mut Ctx) {
    let m = sym();
    let spherical = spherical_labels(8);
    let mut rng = Ctx::rng(14);
    for _ in 0..30 {
        let terms = sample::basis_combination(&mut rng, 8, 2, 5);
        let q = combine(&terms, &m).sandwich(Sign::Plus, Sign::Plus);
        match decompose_in_basis(&q) {
            Ok(coeffs) => ctx.ensure(coeffs.keys().all(|l| spherical.contains(l)), || {
                "spherical element uses a non-spherical label".into()
            }),
            Err(e) => ctx.ensure(false, || format!("decomposition failed: {e}")),
        }
    }
}

// cli

fn parse_print_round_trip(ctx: &mut Ctx) {
    let mut rng = Ctx::rng(15);
    for _ in 0..200 {
        let w: Word = sample::word(&mut rng, 6);
        let printed = w.to_string();
        let back = parse(&printed);
        ctx.ensure(back.as_ref() == Ok(&w), || format!("`{printed}` does not round trip"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_are_unique() {
        let mut names: Vec<_> = checks().iter().map(|c| c.name).collect();
        let n = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn negation_turns_a_check_red() {
        let results = run(Some("hilbert_series"), Some("hilbert_series"));
        assert_eq!(results.len(), 1);
        assert!(!results[0].passed());
        assert!(run(Some("hilbert_series"), None)[0].passed());
    }
}
