//! Action tables reduced modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::dp::dp_certificate;
use super::operator::Operator;
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Image of one source monomial: `(target exponent, residue)` pairs with
/// nonzero residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPRow {
    pub exponent: i64,
    pub terms: Vec<(i64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPTable {
    pub prime: u64,
    pub rows: Vec<ModPRow>,
}

impl ModPTable {
    /// Residue of the coefficient of `x^target` in the image of `x^exponent`.
    pub fn residue(&self, exponent: i64, target: i64) -> u64 {
        self.rows
            .iter()
            .find(|r| r.exponent == exponent)
            .and_then(|r| r.terms.iter().find(|(e, _)| *e == target))
            .map_or(0, |(_, v)| *v)
    }
}

impl fmt::Display for ModPTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mod {}", self.prime)?;
        for row in &self.rows {
            write!(f, "x^{} ->", row.exponent)?;
            if row.terms.is_empty() {
                write!(f, " 0")?;
            }
            for (i, (e, v)) in row.terms.iter().enumerate() {
                let sep = if i == 0 { " " } else { " + " };
                write!(f, "{sep}{v}*x^{e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The action of a divided-power member on `x^0, …, x^max_exponent` reduced
/// mod `p`. Requires a numeric value of `c`.
pub fn reduce_mod_p(q: &Operator, p: u64, max_exponent: i64) -> Result<ModPTable> {
    if q.mode().is_symbolic() {
        return Err(Error::NumericModeRequired);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    dp_certificate(q).map_err(Error::NotInDp)?;
    let modulus = BigInt::from(p);
    let rows = (0..=max_exponent)
        .map(|k| {
            let terms = q
                .act(k)
                .terms()
                .filter_map(|(&e, a)| {
                    let r = a
                        .reduce_mod(&modulus)
                        .expect("members have integral values")
                        .first()
                        .cloned()
                        .unwrap_or_default();
                    (!r.is_zero()).then(|| (e, r.to_u64().unwrap()))
                })
                .collect();
            ModPRow { exponent: k, terms }
        })
        .collect();
    Ok(ModPTable { prime: p, rows })
}
