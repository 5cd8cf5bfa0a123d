use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cherednik_core::construction::{
    four_component_split, in_hc, log_act_weyl, random_member, random_non_member,
};
use cherednik_core::expr::parse;
use cherednik_core::intval::divisor_of_values;
use cherednik_core::opalgebra::{
    combine, decompose_in_basis, in_dp, operator_divisor, reduce_mod_p, BasisLabel, Operator,
};
use cherednik_core::poly::{from_newton, int, to_newton, ActionPoly, CoefPoly};
use cherednik_core::sample;
use cherednik_core::weyl::WeylOp;
use cherednik_core::{DunklMode, Sign};

fn action_poly() -> impl Strategy<Value = ActionPoly> {
    prop::collection::vec(prop::collection::vec(-50i64..=50, 0..=3), 0..=9).prop_map(|rows| {
        ActionPoly::from_coeffs(rows.iter().map(|r| CoefPoly::from_ints(r)).collect())
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gcd_of_values(f: &ActionPoly, upto: i64) -> BigInt {
    (0..=upto).fold(BigInt::zero(), |g, t| g.gcd(&f.eval_int(t).integer_content().unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn newton_coordinates_round_trip(f in action_poly()) {
        prop_assert_eq!(from_newton(&to_newton(&f)), f);
    }

    #[test]
    fn divisor_is_gcd_of_values(f in action_poly(), scale in 1i64..=30) {
        let g = f.scale_scalar(&int(scale));
        let d = divisor_of_values(&g, &DunklMode::Symbolic).unwrap();
        prop_assert_eq!(d, gcd_of_values(&g, g.degree_or_zero() as i64 + 2));
    }

    #[test]
    fn composition_agrees_with_action(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = DunklMode::Symbolic;
        let a = sample::word(&mut r, 3).to_operator(&m);
        let b = sample::word(&mut r, 3).to_operator(&m);
        let ab = &a * &b;
        for k in -12..=12 {
            prop_assert_eq!(ab.act(k), a.apply(&b.act(k)));
        }
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = DunklMode::numeric(2);
        let [a, b, c] = [0; 3].map(|_| sample::monomial_word(&mut r, 4).to_operator(&m));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn printed_words_parse_back(seed in any::<u64>()) {
        let w = sample::word(&mut rng(seed), 6);
        prop_assert_eq!(parse(&w.to_string()), Ok(w));
    }

    #[test]
    fn basis_decomposition_round_trips(seed in any::<u64>()) {
        let terms: BTreeMap<BasisLabel, CoefPoly> = sample::basis_combination(&mut rng(seed), 8, 3, 6);
        let q = combine(&terms, &DunklMode::Symbolic);
        prop_assert_eq!(decompose_in_basis(&q), Ok(terms));
    }

    #[test]
    fn members_are_certified_and_divisor_is_linear(seed in any::<u64>(), c in -3i64..=3, k in 2i64..=7) {
        let m = DunklMode::numeric(c);
        let q = random_member(&m, 5, &mut rng(seed));
        prop_assert!(in_dp(&q).is_some());
        let d = operator_divisor(&q).unwrap();
        prop_assert_eq!(operator_divisor(&q.scale_scalar(&int(k))).unwrap(), d * k);
    }

    #[test]
    fn dp_membership_matches_shifted_module(seed in any::<u64>(), c in prop::sample::select(vec![-3i64, -1, 0, 1, 2])) {
        let m = DunklMode::numeric(c);
        let mut r = rng(seed);
        let good = random_member(&m, 5, &mut r);
        let bad = random_non_member(&m, 5, &mut r);
        prop_assert!(in_dp(&good).is_some() && in_hc(&good, 5));
        prop_assert!(in_dp(&bad).is_none() && !in_hc(&bad, 5));
    }

    #[test]
    fn four_components_sum_back(seed in any::<u64>()) {
        let q = sample::word(&mut rng(seed), 3).to_operator(&DunklMode::numeric(1));
        prop_assert_eq!(four_component_split(&q, 4).sum(), q);
    }

    #[test]
    fn mod_p_table_matches_reduced_action(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let m = DunklMode::numeric(0);
        let q = random_member(&m, 4, &mut rng(seed));
        let table = reduce_mod_p(&q, p, 8).unwrap();
        for k in 0..=8 {
            for (&e, a) in q.act(k).terms() {
                let v = a.as_constant().unwrap().to_integer().mod_floor(&BigInt::from(p));
                prop_assert_eq!(BigInt::from(table.residue(k, e)), v);
            }
        }
    }

    #[test]
    fn log_action_obeys_product_rule(fa in action_poly(), fb in action_poly(), da in -3i64..=3, db in -3i64..=3, n in -6i64..=6) {
        let a = WeylOp::homogeneous(da, fa.clone());
        let b = WeylOp::homogeneous(db, fb.clone());
        let ab = &a * &b;
        prop_assume!(!ab.is_zero());
        let v = log_act_weyl(&ab, n).unwrap();
        let plain = &(&fb.derivative().eval_int(n) * &fa.eval_int(n + db))
            + &(&fb.eval_int(n) * &fa.derivative().eval_int(n + db));
        prop_assert_eq!(v.plain, plain);
        prop_assert_eq!(v.logpart, &fb.eval_int(n) * &fa.eval_int(n + db));
    }

    #[test]
    fn idempotents_split_every_operator(seed in any::<u64>()) {
        let m = DunklMode::Symbolic;
        let q = sample::word(&mut rng(seed), 3).to_operator(&m);
        let sum = Sign::BOTH
            .iter()
            .flat_map(|&l| Sign::BOTH.map(|r| q.sandwich(l, r)))
            .fold(Operator::zero(&m), |acc, x| &acc + &x);
        prop_assert_eq!(sum, q);
    }
}
