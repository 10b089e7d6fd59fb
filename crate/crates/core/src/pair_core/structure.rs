//! Characteristic, height and the uniform presentation of elements.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::algebra::{Kind, PairAlgebra};
use super::element::{Element, Layer};
use super::relations::circ;
use crate::error::{Error, Result};

/// Additions tried before declaring characteristic zero.
pub const CHARACTERISTIC_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacteristicProfile {
    /// No repeat among k·1; `capped` is set when the iteration cap was hit.
    Zero { capped: bool },
    Finite { p: usize, q: usize, m: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationForm {
    Tangible,
    QuasiZero,
    Multiple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformPresentation {
    pub base: Element,
    pub multiplicity: usize,
    pub form: PresentationForm,
}

/// Characteristic (p, q): the first repeat k·1 = (k-p)·1 in the sequence
/// 0, 1, 1+1, ...; m is the least multiple of p that is at least max(q, 1).
pub fn characteristic(alg: &PairAlgebra) -> CharacteristicProfile {
    characteristic_with_cap(alg, CHARACTERISTIC_CAP)
}

pub fn characteristic_with_cap(alg: &PairAlgebra, cap: usize) -> CharacteristicProfile {
    let one = alg.one();
    let mut seen: HashMap<Element, usize> = HashMap::new();
    let mut cur = alg.zero();
    for k in 0..=cap {
        if let Some(&i) = seen.get(&cur) {
            let p = k - i;
            let q = i;
            let m = p * q.max(1).div_ceil(p);
            return CharacteristicProfile::Finite { p, q, m };
        }
        seen.insert(cur.clone(), k);
        cur = alg.add(&cur, &one);
    }
    CharacteristicProfile::Zero { capped: true }
}

/// Least number of tangibles summing to c (0 for the zero).
pub fn height(alg: &PairAlgebra, c: &Element) -> Result<usize> {
    if alg.is_zero(c) {
        return Ok(0);
    }
    let Some(ts) = alg.tangibles() else {
        return match c {
            Element::Layered(Layer::Tangible, _) => Ok(1),
            Element::Layered(Layer::Ghost, _) => Ok(2),
            _ => Err(Error::Undecidable(format!("height over infinite {}", alg.id()))),
        };
    };
    let mut level: BTreeSet<Element> = BTreeSet::from([alg.zero()]);
    let mut seen_levels: HashSet<Vec<Element>> = HashSet::new();
    for t in 1.. {
        level = level
            .iter()
            .flat_map(|s| ts.iter().map(move |a| alg.add(s, a)))
            .collect();
        if level.contains(c) {
            return Ok(t);
        }
        if !seen_levels.insert(level.iter().cloned().collect()) || t > 10_000 {
            break;
        }
    }
    Err(Error::Unreachable(alg.format(c)))
}

/// m-fold sum of a.
pub fn multiple(alg: &PairAlgebra, a: &Element, m: usize) -> Element {
    (0..m).fold(alg.zero(), |acc, _| alg.add(&acc, a))
}

/// Weak metatangibility plus Property N, over T or its sample.
pub fn is_metatangible(alg: &PairAlgebra) -> bool {
    let ts: Vec<Element> = match alg.tangibles() {
        Some(ts) => ts.to_vec(),
        None => alg.sample().into_iter().filter(|x| alg.is_tangible(x)).collect(),
    };
    if alg.one_dagger().is_none() {
        return false;
    }
    ts.iter().all(|a| {
        let Ok(ac) = circ(alg, a) else { return false };
        ts.iter().all(|b| {
            let s = alg.add(a, b);
            alg.is_tangible(&s) || (alg.is_null(&s) && s == ac)
        })
    })
}

/// Presentation of a nonzero element of a metatangible pair: the element
/// itself when tangible; else m·c_T (first kind, m the height) or c_T°
/// (second kind).
pub fn uniform_presentation(alg: &PairAlgebra, c: &Element) -> Result<UniformPresentation> {
    if !is_metatangible(alg) {
        return Err(Error::NotMetatangible(alg.id().to_string()));
    }
    if alg.is_zero(c) {
        return Err(Error::NoPresentation(alg.format(c)));
    }
    if alg.is_tangible(c) {
        return Ok(UniformPresentation {
            base: c.clone(),
            multiplicity: 1,
            form: PresentationForm::Tangible,
        });
    }
    let candidates: Vec<Element> = match alg.tangibles() {
        Some(ts) => ts.to_vec(),
        None => match c {
            Element::Layered(Layer::Ghost, v) => vec![Element::layered(Layer::Tangible, *v)],
            _ => Vec::new(),
        },
    };
    match alg.kind() {
        Kind::First => {
            let m = height(alg, c)?;
            candidates
                .into_iter()
                .find(|a| multiple(alg, a, m) == *c)
                .map(|base| UniformPresentation {
                    base,
                    multiplicity: m,
                    form: PresentationForm::Multiple,
                })
                .ok_or_else(|| Error::NoPresentation(alg.format(c)))
        }
        _ => candidates
            .into_iter()
            .find(|a| circ(alg, a).map(|x| x == *c).unwrap_or(false))
            .map(|base| UniformPresentation {
                base,
                multiplicity: 2,
                form: PresentationForm::QuasiZero,
            })
            .ok_or_else(|| Error::NoPresentation(alg.format(c))),
    }
}

/// Rebuild the element a presentation stands for.
pub fn reconstruct(alg: &PairAlgebra, p: &UniformPresentation) -> Result<Element> {
    match p.form {
        PresentationForm::Tangible => Ok(p.base.clone()),
        PresentationForm::Multiple => Ok(multiple(alg, &p.base, p.multiplicity)),
        PresentationForm::QuasiZero => circ(alg, &p.base),
    }
}
