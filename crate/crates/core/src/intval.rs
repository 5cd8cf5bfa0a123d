//! Integer-valued polynomial lattices.
//!
//! A homogeneous piece of degree `n` of the Cherednik algebra acts on even
//! (resp. odd) monomials through a polynomial in the half-exponent `t`. For
//! `n < 0` that polynomial is a multiple of the Dunkl polynomial `D±₋ₙ(t)`.
//! The divided power extension in degree `n` is the lattice of such
//! polynomials (with rational coefficients) that still take values in the base
//! ring at every `t ≥ 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{contains, hnf, saturate, IntMatrix};
use crate::mode::{DunklMode, Sign};
use crate::poly::{binomial_poly, falling_product, from_newton, to_newton, ActionPoly, CoefPoly};

/// `⌊(k + δ)/2⌋`.
pub fn m_delta(delta: u32, k: usize) -> usize {
    (k + delta as usize) / 2
}

fn parity_indicator(i: usize) -> i64 {
    (i % 2) as i64
}

/// `2t + a + b·c` as an action polynomial.
fn affine(a: i64, b: i64) -> ActionPoly {
    ActionPoly::linear(CoefPoly::from_int(2), CoefPoly::linear(a, b))
}

/// The Dunkl action polynomial: `D^k e₊ x^{2t} = D⁺ₖ(t) x^{2t-k}` and
/// `D^k e₋ x^{2t+1} = D⁻ₖ(t) x^{2t+1-k}`, with `c` symbolic.
pub fn dunkl_poly(sign: Sign, k: usize) -> ActionPoly {
    let factors: Vec<ActionPoly> = (0..k)
        .map(|i| match sign {
            Sign::Plus => affine(-(i as i64), -2 * parity_indicator(i)),
            Sign::Minus => affine(1 - i as i64, -2 * parity_indicator(i + 1)),
        })
        .collect();
    falling_product(&factors)
}

/// The primitive cofactor `L±ₖ(t)` of the Dunkl polynomial.
pub fn l_poly(sign: Sign, k: usize) -> ActionPoly {
    let factors: Vec<ActionPoly> = match sign {
        Sign::Plus => (0..m_delta(0, k))
            .map(|i| affine(-2 * i as i64 - 1, -2))
            .collect(),
        Sign::Minus => (0..m_delta(1, k))
            .map(|i| affine(1 - 2 * i as i64, -2))
            .collect(),
    };
    falling_product(&factors)
}

/// The number `m` of "plain" factors `2t - 2j` in `D±ₖ`, so that
/// `D±ₖ = 2^m·m!·L±ₖ·C(t,m)`.
pub fn binomial_order(sign: Sign, k: usize) -> usize {
    match sign {
        Sign::Plus => m_delta(1, k),
        Sign::Minus => m_delta(0, k),
    }
}

/// The largest positive integer dividing every value `f(n)`, `n ≥ 0`, in the
/// base ring (0 for `f = 0`). Computed from the Newton coordinates.
pub fn divisor_of_values(f: &ActionPoly, mode: &DunklMode) -> Result<BigInt> {
    let f = mode.normalize_poly(f);
    let Some(deg) = f.degree() else {
        return Ok(BigInt::zero());
    };
    if let Some(t) = (0..=deg as i64).find(|&t| !mode.in_ring(&f.eval_int(t))) {
        return Err(Error::NonIntegralValues { t });
    }
    let mut g = BigInt::zero();
    for alpha in to_newton(&f) {
        let content = alpha
            .integer_content()
            .expect("integral values force integral Newton coordinates");
        g = g.gcd(&content);
    }
    Ok(g)
}

/// True when `f(n)` lies in the base ring for every `0 ≤ n ≤ upto`.
pub fn is_ring_valued(f: &ActionPoly, mode: &DunklMode, upto: i64) -> bool {
    let f = mode.normalize_poly(f);
    (0..=upto).all(|n| mode.in_ring(&f.eval_int(n)))
}

/// A truncated basis of `Int_R(H±[n])`: generators of t-degree at most
/// `truncation`, one per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    pub sign: Sign,
    pub degree: i64,
    pub mode: DunklMode,
    pub truncation: usize,
    pub generators: Vec<ActionPoly>,
}

impl IntLattice {
    /// The polynomial multiplied out of every element: `D±₋ₙ` for `n < 0`,
    /// else 1 (specialized to the mode).
    pub fn base_factor(&self) -> ActionPoly {
        lattice_factor(self.sign, self.degree, &self.mode)
    }

    /// Smallest t-degree of a generator.
    pub fn min_degree(&self) -> usize {
        (-self.degree).max(0) as usize
    }

    /// Newton coordinates of the generators as integer rows of length
    /// `truncation + 1`. Only available when every coordinate is an integer
    /// (numeric mode).
    pub fn newton_rows(&self) -> Option<IntMatrix> {
        self.generators
            .iter()
            .map(|g| newton_row(g, self.truncation + 1))
            .collect()
    }
}

fn lattice_factor(sign: Sign, n: i64, mode: &DunklMode) -> ActionPoly {
    if n < 0 {
        mode.normalize_poly(&dunkl_poly(sign, (-n) as usize))
    } else {
        ActionPoly::one()
    }
}

/// Integer Newton coordinates padded to `len`, or `None` if some coordinate
/// is not an integer constant.
pub fn newton_row(f: &ActionPoly, len: usize) -> Option<Vec<BigInt>> {
    let mut row = vec![BigInt::zero(); len];
    for (k, alpha) in to_newton(f).into_iter().enumerate() {
        let q = alpha.as_constant()?;
        if !q.is_integer() || k >= len {
            return None;
        }
        row[k] = q.to_integer();
    }
    Some(row)
}

/// Basis of the integer-valued lattice in degree `n`, truncated at t-degree
/// `max_t_degree`.
///
/// With symbolic `c` the closed form is used: binomials `C(t,k)` for `n ≥ 0`,
/// and `L±₋ₙ(t)·C(t, k+m)` for `n < 0`. With numeric `c` the lattice is
/// computed by saturating the Newton coordinates of `D±₋ₙ(t)·(2t)^j`.
pub fn int_basis(sign: Sign, n: i64, mode: &DunklMode, max_t_degree: usize) -> IntLattice {
    let min_deg = (-n).max(0) as usize;
    assert!(
        max_t_degree >= min_deg,
        "truncation {max_t_degree} below the minimal degree {min_deg}"
    );
    let generators = match mode {
        DunklMode::Symbolic => symbolic_generators(sign, n, max_t_degree),
        DunklMode::Numeric(_) => numeric_generators(sign, n, mode, max_t_degree),
    };
    IntLattice {
        sign,
        degree: n,
        mode: mode.clone(),
        truncation: max_t_degree,
        generators,
    }
}

fn symbolic_generators(sign: Sign, n: i64, max_t_degree: usize) -> Vec<ActionPoly> {
    if n >= 0 {
        return (0..=max_t_degree).map(binomial_poly).collect();
    }
    let k = (-n) as usize;
    let l = l_poly(sign, k);
    let m = binomial_order(sign, k);
    (0..=max_t_degree - k)
        .map(|j| &l * &binomial_poly(j + m))
        .collect()
}

fn numeric_generators(sign: Sign, n: i64, mode: &DunklMode, max_t_degree: usize) -> Vec<ActionPoly> {
    let factor = lattice_factor(sign, n, mode);
    let base_deg = factor.degree_or_zero();
    let len = max_t_degree + 1;
    let two_t = ActionPoly::from_ints(&[0, 2]);
    let rows: IntMatrix = (0..=max_t_degree - base_deg)
        .map(|j| {
            let g = &factor * &two_t.pow(j as u32);
            let mut row = newton_row(&g, len).expect("integral generators for integer c");
            row.reverse();
            row
        })
        .collect();
    // Reversed coordinates put each pivot at the top degree; reversing the
    // row order afterwards lists generators by increasing degree.
    let mut sat = saturate(&rows);
    sat.reverse();
    sat.into_iter()
        .map(|mut row| {
            row.reverse();
            let coeffs: Vec<CoefPoly> = row
                .into_iter()
                .map(|v| CoefPoly::constant(num_rational::BigRational::from_integer(v)))
                .collect();
            from_newton(&coeffs)
        })
        .collect()
}

/// Hermite form of the specialized symbolic basis, for comparing against the
/// saturated numeric lattice.
pub fn specialized_symbolic_rows(sign: Sign, n: i64, c: i64, max_t_degree: usize) -> IntMatrix {
    let mode = DunklMode::numeric(c);
    let rows: IntMatrix = symbolic_generators(sign, n, max_t_degree)
        .iter()
        .map(|g| {
            newton_row(&mode.normalize_poly(g), max_t_degree + 1)
                .expect("specialized symbolic generators are integer valued")
        })
        .collect();
    hnf(&rows)
}

/// Outcome of comparing the saturated numeric lattice with the specialized
/// closed-form basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeComparison {
    /// Each generating set lies in the span of the other.
    Same,
    /// The lattices differ; records whether the specialized basis lies inside
    /// the numeric lattice (specialization only added divisibility) and
    /// whether every numeric generator is still ring-valued and primitive (its
    /// values have no common divisor).
    Differs { specialized_inside: bool, ring_valued: bool, primitive: bool },
}

pub fn compare_numeric_lattice(sign: Sign, n: i64, c: i64, max_t_degree: usize) -> LatticeComparison {
    let mode = DunklMode::numeric(c);
    let lat = int_basis(sign, n, &mode, max_t_degree);
    let numeric = lat.newton_rows().expect("integer c gives integral coordinates");
    let symbolic = specialized_symbolic_rows(sign, n, c, max_t_degree);
    let inside = |rows: &IntMatrix, basis: &IntMatrix| rows.iter().all(|r| contains(basis, r));
    let specialized_inside = inside(&symbolic, &numeric);
    if specialized_inside && inside(&numeric, &symbolic) {
        return LatticeComparison::Same;
    }
    let upto = max_t_degree as i64 + 2;
    let ring_valued = lat.generators.iter().all(|g| is_ring_valued(g, &mode, upto));
    let primitive = lat
        .generators
        .iter()
        .all(|g| divisor_of_values(g, &mode).is_ok_and(|d| d.is_one()));
    LatticeComparison::Differs { specialized_inside, ring_valued, primitive }
}

/// The smallest positive integer `d` with `d·f ∈ factor·R[2t]`, or `None` if
/// `factor` does not divide `f`.
pub fn undivided_denominator(f: &ActionPoly, factor: &ActionPoly) -> Option<BigInt> {
    let q = f.exact_div(factor)?;
    let mut d = BigInt::one();
    for (j, a) in q.coeffs().iter().enumerate() {
        // coefficient of (2t)^j is a / 2^j
        let scaled = a.scale(&num_rational::BigRational::new(
            BigInt::one(),
            BigInt::from(2).pow(j as u32),
        ));
        d = d.lcm(&scaled.denominator_lcm());
    }
    Some(d)
}

/// `2^a · b!` as an integer.
pub fn pow2_factorial(a: usize, b: usize) -> BigInt {
    let fact = (1..=b as i64).fold(BigInt::one(), |acc, i| acc * i);
    BigInt::from(2).pow(a as u32) * fact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::same_lattice;
    use crate::poly::rat;

    fn cp(a: i64, b: i64) -> CoefPoly {
        CoefPoly::linear(a, b)
    }

    #[test]
    fn dunkl_poly_examples() {
        let two_t = ActionPoly::from_ints(&[0, 2]);
        assert_eq!(dunkl_poly(Sign::Plus, 2), &two_t * &affine(-1, -2));
        assert_eq!(dunkl_poly(Sign::Minus, 1), affine(1, -2));
        assert_eq!(dunkl_poly(Sign::Plus, 0), ActionPoly::one());
    }

    #[test]
    fn l_poly_examples() {
        assert_eq!(l_poly(Sign::Plus, 2), affine(-1, -2));
        assert_eq!(l_poly(Sign::Plus, 1), ActionPoly::one());
        assert_eq!(l_poly(Sign::Minus, 1), affine(1, -2));
    }

    #[test]
    fn m_delta_examples() {
        assert_eq!(m_delta(1, 3), 2);
        assert_eq!(m_delta(0, 3), 1);
        assert_eq!(m_delta(1, 0), 0);
    }

    #[test]
    fn factorization_identity() {
        for sign in Sign::BOTH {
            for k in 0..=10 {
                let m = binomial_order(sign, k);
                let rhs = (&l_poly(sign, k) * &binomial_poly(m))
                    .scale_scalar(&num_rational::BigRational::from_integer(pow2_factorial(m, m)));
                assert_eq!(dunkl_poly(sign, k), rhs, "sign {sign} k {k}");
            }
        }
    }

    #[test]
    fn divisor_examples() {
        let f = ActionPoly::from_ints(&[0, 1, 1]);
        assert_eq!(divisor_of_values(&f, &DunklMode::Symbolic).unwrap(), BigInt::from(2));
        assert_eq!(divisor_of_values(&f, &DunklMode::numeric(5)).unwrap(), BigInt::from(2));
        let g = ActionPoly::linear(2.into(), cp(0, -2));
        assert_eq!(divisor_of_values(&g, &DunklMode::Symbolic).unwrap(), BigInt::from(2));
        assert_eq!(divisor_of_values(&g, &DunklMode::numeric(1)).unwrap(), BigInt::from(2));
        assert_eq!(
            divisor_of_values(&ActionPoly::zero(), &DunklMode::Symbolic).unwrap(),
            BigInt::zero()
        );
        let half = binomial_poly(2).scale_scalar(&crate::poly::rat(1, 2));
        assert_eq!(
            divisor_of_values(&half, &DunklMode::Symbolic),
            Err(Error::NonIntegralValues { t: 2 })
        );
    }

    #[test]
    fn int_basis_examples() {
        let lat = int_basis(Sign::Plus, -1, &DunklMode::Symbolic, 4);
        assert_eq!(lat.generators, (1..=4).map(binomial_poly).collect::<Vec<_>>());
        let lat = int_basis(Sign::Plus, 0, &DunklMode::Symbolic, 2);
        assert_eq!(lat.generators, (0..=2).map(binomial_poly).collect::<Vec<_>>());
        let num = int_basis(Sign::Plus, -1, &DunklMode::numeric(0), 3);
        let expected = specialized_symbolic_rows(Sign::Plus, -1, 0, 3);
        assert!(same_lattice(&num.newton_rows().unwrap(), &expected));
    }

    #[test]
    fn numeric_lattices_match_or_stay_maximal() {
        for c in [0, 1, -2] {
            for n in -4..0 {
                for sign in Sign::BOTH {
                    match compare_numeric_lattice(sign, n, c, 8) {
                        LatticeComparison::Same => {}
                        other => assert_eq!(
                            other,
                            LatticeComparison::Differs {
                                specialized_inside: true,
                                ring_valued: true,
                                primitive: true
                            }
                        ),
                    }
                }
            }
        }
    }

    #[test]
    fn specialization_adds_divisibility_on_odd_part() {
        // at c = 0 the sum of squares t(t+1)(2t+1)/6 is a multiple of 2t+1 but
        // not a Z-combination of (2t+1)C(t,j)
        let sums = ActionPoly::from_coeffs(vec![
            CoefPoly::zero(),
            CoefPoly::constant(rat(1, 6)),
            CoefPoly::constant(rat(1, 2)),
            CoefPoly::constant(rat(1, 3)),
        ]);
        let row = newton_row(&sums, 9).unwrap();
        let numeric = int_basis(Sign::Minus, -1, &DunklMode::numeric(0), 8).newton_rows().unwrap();
        assert!(contains(&numeric, &row));
        assert!(!contains(&specialized_symbolic_rows(Sign::Minus, -1, 0, 8), &row));
        assert!(matches!(
            compare_numeric_lattice(Sign::Minus, -1, 0, 8),
            LatticeComparison::Differs { specialized_inside: true, .. }
        ));
    }

    #[test]
    fn numeric_generators_are_triangular() {
        for n in -4..3 {
            for sign in Sign::BOTH {
                let lat = int_basis(sign, n, &DunklMode::numeric(1), 7);
                let degrees: Vec<usize> = lat.generators.iter().map(|g| g.degree().unwrap()).collect();
                let expected: Vec<usize> = (lat.min_degree()..=7).collect();
                assert_eq!(degrees, expected);
            }
        }
    }

    #[test]
    fn undivided_denominator_of_binomial() {
        // t = (2t)/2 needs denominator 2; C(t,2) = ((2t)^2 - 2(2t))/8 needs 8
        assert_eq!(undivided_denominator(&binomial_poly(1), &ActionPoly::one()), Some(BigInt::from(2)));
        assert_eq!(undivided_denominator(&binomial_poly(2), &ActionPoly::one()), Some(BigInt::from(8)));
        let d1 = dunkl_poly(Sign::Plus, 1);
        assert_eq!(undivided_denominator(&ActionPoly::one(), &d1), None);
    }
}
