//! Quasi-zeros, balancing and surpassing.

use super::algebra::{Kind, PairAlgebra};
use super::element::Element;
use crate::error::{Error, Result};

/// a° = a + a† for tangible a.
pub fn circ(alg: &PairAlgebra, a: &Element) -> Result<Element> {
    if !alg.is_tangible(a) {
        return Err(Error::NonTangibleInput(alg.format(a)));
    }
    let d = alg
        .dagger(a)
        .ok_or_else(|| Error::MissingDagger(alg.id().to_string()))?;
    Ok(alg.add(a, &d))
}

/// (e, e') with e = 1 + 1† and e' = e + 1.
pub fn e_elements(alg: &PairAlgebra) -> Result<(Element, Element)> {
    let e = circ(alg, &alg.one())?;
    let e_prime = alg.add(&e, &alg.one());
    Ok((e, e_prime))
}

/// b1 ∇ b2.
///
/// First kind: both null, or the sum null. Otherwise some a in T0 must
/// annihilate both; this is searched exhaustively when T is finite, and
/// replaced by b1 (-) b2 ∈ A0 for infinite pairs carrying a negation map.
pub fn balances(alg: &PairAlgebra, b1: &Element, b2: &Element) -> Result<bool> {
    if alg.kind() == Kind::First {
        return Ok((alg.is_null(b1) && alg.is_null(b2)) || alg.is_null(&alg.add(b1, b2)));
    }
    tangibly_balances(alg, b1, b2)
}

/// Some a in T0 with b1 + a and b2 + a both null.
pub fn tangibly_balances(alg: &PairAlgebra, b1: &Element, b2: &Element) -> Result<bool> {
    if let Some(ts) = alg.tangibles_with_zero() {
        return Ok(ts
            .iter()
            .any(|a| alg.is_null(&alg.add(b1, a)) && alg.is_null(&alg.add(b2, a))));
    }
    if let Some(nb2) = alg.negate(b2) {
        return Ok(alg.is_null(&alg.add(b1, &nb2)));
    }
    Err(Error::Undecidable(format!(
        "balancing over {} needs a finite T or a negation map",
        alg.id()
    )))
}

/// b1 ⪯0 b2: some c in A0 with b1 + c = b2.
pub fn surpasses0(alg: &PairAlgebra, b1: &Element, b2: &Element) -> Result<bool> {
    if b1 == b2 {
        return Ok(true);
    }
    if let Some(v) = alg.ops().surpasses_rule(b1, b2) {
        return Ok(v);
    }
    match alg.nulls() {
        Some(nulls) => Ok(nulls.iter().any(|c| alg.add(b1, c) == *b2)),
        None => Err(Error::Undecidable(format!(
            "surpassing over {} has no rule and no finite null layer",
            alg.id()
        ))),
    }
}

/// Componentwise balancing of two vectors.
pub fn balances_vec(alg: &PairAlgebra, v: &[Element], w: &[Element]) -> Result<bool> {
    if v.len() != w.len() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", v.len(), w.len())));
    }
    for (a, b) in v.iter().zip(w) {
        if !balances(alg, a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}
