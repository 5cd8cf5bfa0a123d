//! Seeded random generators for words, polynomials and basis combinations.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::expr::Word;
use crate::mode::Sign;
use crate::opalgebra::{basis_labels, BasisLabel};
use crate::poly::{rat, ActionPoly, CoefPoly};

pub fn coef_poly(rng: &mut impl Rng, max_degree: usize, bound: i64) -> CoefPoly {
    let deg = rng.gen_range(0..=max_degree);
    CoefPoly::from_ints(&(0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

pub fn action_poly(rng: &mut impl Rng, max_degree: usize, c_degree: usize, bound: i64) -> ActionPoly {
    let deg = rng.gen_range(0..=max_degree);
    ActionPoly::from_coeffs((0..=deg).map(|_| coef_poly(rng, c_degree, bound)).collect())
}

fn leaf(rng: &mut impl Rng) -> Word {
    match rng.gen_range(0..9) {
        0 => Word::num(rng.gen_range(0..=4)),
        1 => Word::Num(rat(rng.gen_range(0..=3), rng.gen_range(1..=3))),
        2 => Word::C,
        3 | 4 => Word::X,
        5 | 6 => Word::D,
        7 => [Word::EPlus, Word::EMinus].choose(rng).unwrap().clone(),
        _ => Word::S,
    }
}

/// A random syntax tree of depth at most `depth` with small exponents; may
/// contain `x^-1`.
pub fn word(rng: &mut impl Rng, depth: usize) -> Word {
    if depth == 0 || rng.gen_bool(0.3) {
        return leaf(rng);
    }
    let d = depth - 1;
    match rng.gen_range(0..6) {
        0 => Word::add(word(rng, d), word(rng, d)),
        1 => Word::sub(word(rng, d), word(rng, d)),
        2 | 3 => Word::mul(word(rng, d), word(rng, d)),
        4 => Word::neg(word(rng, d)),
        _ => {
            if rng.gen_bool(0.2) {
                Word::pow(Word::X, -rng.gen_range(1..=2))
            } else {
                Word::pow(word(rng, d), rng.gen_range(0..=2))
            }
        }
    }
}

/// A product of at most `len` generators (a monomial word).
pub fn monomial_word(rng: &mut impl Rng, len: usize) -> Word {
    let n = rng.gen_range(1..=len.max(1));
    let mut w = leaf(rng);
    for _ in 1..n {
        w = Word::mul(w, leaf(rng));
    }
    w
}

/// A random combination of basis labels of total degree at most
/// `max_degree` with coefficients in ℤ[c] of degree at most `c_degree`.
pub fn basis_combination(
    rng: &mut impl Rng,
    max_degree: usize,
    c_degree: usize,
    terms: usize,
) -> BTreeMap<BasisLabel, CoefPoly> {
    let labels: Vec<BasisLabel> = Sign::BOTH
        .iter()
        .flat_map(|&s| basis_labels(s, max_degree))
        .collect();
    let mut out = BTreeMap::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let label = *labels.choose(rng).unwrap();
        let a = coef_poly(rng, c_degree, 9);
        if !a.is_zero() {
            out.insert(label, a);
        }
    }
    out
}
