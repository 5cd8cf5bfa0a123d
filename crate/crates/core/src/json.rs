//! JSON rendering of engine values.
//!
//! Rationals are strings (`"3"`, `"-1/2"`); a polynomial in `c` is an array of
//! such strings in ascending degree; an action polynomial is an array of
//! polynomials in `c`, ascending in `t`.

use serde_json::{json, Value};

use crate::construction::{EquivalenceRow, LogValue, ShiftedElement};
use crate::intval::IntLattice;
use crate::mode::DunklMode;
use crate::opalgebra::{DpWitness, Laurent, ModPTable, Operator};
use crate::poly::{fmt_scalar, to_newton, ActionPoly, CoefPoly, Scalar};
use crate::weyl::WeylOp;

pub fn scalar(q: &Scalar) -> Value {
    Value::String(fmt_scalar(q))
}

pub fn coef_poly(p: &CoefPoly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar).collect())
}

pub fn action_poly(f: &ActionPoly) -> Value {
    Value::Array(f.coeffs().iter().map(coef_poly).collect())
}

pub fn mode(m: &DunklMode) -> Value {
    match m {
        DunklMode::Symbolic => json!({ "kind": "symbolic" }),
        DunklMode::Numeric(c) => json!({ "kind": "numeric", "c": scalar(c) }),
    }
}

pub fn operator(q: &Operator) -> Value {
    let pieces: Vec<Value> = q
        .pieces()
        .map(|p| {
            json!({
                "degree": p.degree,
                "f_plus": action_poly(&p.plus),
                "f_minus": action_poly(&p.minus),
            })
        })
        .collect();
    json!({ "mode": mode(q.mode()), "pieces": pieces })
}

pub fn weyl(b: &WeylOp) -> Value {
    let pieces: Vec<Value> = b
        .pieces()
        .map(|(n, f)| json!({ "degree": n, "f": action_poly(f) }))
        .collect();
    json!({ "parity": "none", "pieces": pieces })
}

pub fn laurent(v: &Laurent) -> Value {
    Value::Array(
        v.terms()
            .map(|(e, a)| json!({ "exponent": e, "coefficient": coef_poly(a) }))
            .collect(),
    )
}

pub fn lattice(l: &IntLattice) -> Value {
    let generators: Vec<Value> = l
        .generators
        .iter()
        .map(|g| {
            json!({
                "poly": action_poly(g),
                "newton": to_newton(g).iter().map(coef_poly).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "sign": l.sign.to_string(),
        "degree": l.degree,
        "mode": mode(&l.mode),
        "truncation": l.truncation,
        "generators": generators,
    })
}

pub fn witness(w: &DpWitness) -> Value {
    json!({
        "denominator": w.denominator.to_string(),
        "numerator": operator(&w.numerator),
    })
}

pub fn mod_p(t: &ModPTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "exponent": r.exponent,
                "terms": r.terms.iter().map(|(e, v)| json!({ "exponent": e, "residue": v })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "prime": t.prime, "rows": rows })
}

pub fn equivalence_row(r: &EquivalenceRow) -> Value {
    json!({
        "c": scalar(&r.c),
        "kind": r.kind.to_string(),
        "operator": operator(&r.operator),
        "in_dp": r.in_dp,
        "in_Hc": r.in_hc,
        "agree": r.agree(),
    })
}

pub fn shifted(elements: &[ShiftedElement]) -> Value {
    Value::Array(
        elements
            .iter()
            .map(|e| json!({ "index": e.index, "coefficient": coef_poly(&e.coefficient) }))
            .collect(),
    )
}

pub fn log_value(v: &LogValue) -> Value {
    json!({ "plain": coef_poly(&v.plain), "logpart": coef_poly(&v.logpart) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dunkl_operator_shape() {
        let v = operator(&Operator::dunkl(&DunklMode::Symbolic));
        assert_eq!(
            v,
            json!({
                "mode": { "kind": "symbolic" },
                "pieces": [{ "degree": -1, "f_plus": [[], ["2"]], "f_minus": [["1", "-2"], ["2"]] }],
            })
        );
    }

    #[test]
    fn weyl_shape() {
        let v = weyl(&WeylOp::hasse(2));
        assert_eq!(v["parity"], "none");
        assert_eq!(v["pieces"][0]["f"], json!([[], ["-1/2"], ["1/2"]]));
    }
}
