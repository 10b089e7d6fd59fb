use crate::error::{Error, Result};
use crate::matrix_ops::{for_each_track, Matrix};
use crate::pair_core::{Element, ModulusValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantTrack {
    pub perm: Vec<usize>,
    pub odd: bool,
    pub value: Element,
}

/// The tracks of maximal modulus and what they say about singularity.
#[derive(Clone, Debug)]
pub struct DominantStructure {
    pub max_modulus: ModulusValue,
    /// In lexicographic order of the permutation.
    pub dominant: Vec<DominantTrack>,
    pub diagonal_dominant: bool,
    pub unique: bool,
    /// Two dominant tracks of one parity whose sum is null.
    pub two_counterexample: Option<(Vec<usize>, Vec<usize>)>,
    /// All dominant tracks share a parity and their sum is tangible.
    pub strictly_nonsingular: bool,
}

pub fn dominant_structure(a: &Matrix) -> Result<DominantStructure> {
    let alg = a.alg();
    if !alg.has_modulus() {
        return Err(Error::NoModulus(alg.id().to_string()));
    }
    let mu = |x: &Element| alg.modulus(x).expect("modulus declared");
    let mut best = ModulusValue::Bottom;
    let mut dominant: Vec<DominantTrack> = Vec::new();
    for_each_track(a, |t| {
        let m = mu(&t.value);
        if m > best || dominant.is_empty() {
            best = m;
            dominant.clear();
        }
        if m == best {
            dominant.push(DominantTrack { perm: t.perm.to_vec(), odd: t.odd, value: t.value });
        }
    })?;
    let n = a.order()?;
    let diagonal: Vec<usize> = (0..n).collect();
    let diagonal_dominant = dominant.iter().any(|t| t.perm == diagonal);
    let mut two_counterexample = None;
    'outer: for (i, s) in dominant.iter().enumerate() {
        for t in &dominant[i + 1..] {
            if s.odd == t.odd && alg.is_null(&alg.add(&s.value, &t.value)) {
                two_counterexample = Some((s.perm.clone(), t.perm.clone()));
                break 'outer;
            }
        }
    }
    let same_parity = dominant.iter().all(|t| t.odd == dominant[0].odd);
    let total = alg.sum(dominant.iter().map(|t| &t.value));
    let strictly_nonsingular = best != ModulusValue::Bottom && same_parity && alg.is_tangible(&total);
    Ok(DominantStructure {
        max_modulus: best,
        unique: dominant.len() == 1,
        dominant,
        diagonal_dominant,
        two_counterexample,
        strictly_nonsingular,
    })
}
