use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::pair_core::{Element, PairAlgebra};

/// Largest heuristic candidate list.
const HEURISTIC_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// The candidates are all of T: an empty search is a proof.
    Exact,
    /// Products of up to `depth` entries and entry ratios.
    Heuristic(usize),
}

impl fmt::Display for Completeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Completeness::Exact => f.write_str("exact"),
            Completeness::Heuristic(d) => write!(f, "heuristic:{d}"),
        }
    }
}

/// Tangible coefficients tried by the dependence and spanning searches.
#[derive(Clone, Debug)]
pub struct CoefficientDomain {
    pub candidates: Vec<Element>,
    pub completeness: Completeness,
}

impl CoefficientDomain {
    /// All of T. Needs a finite tangible set.
    pub fn exact(alg: &PairAlgebra) -> Result<CoefficientDomain> {
        let ts = alg.tangibles().ok_or_else(|| {
            Error::Undecidable(format!("{} has no finite tangible set for an exact domain", alg.id()))
        })?;
        if ts.is_empty() {
            return Err(Error::DomainEmpty);
        }
        Ok(CoefficientDomain { candidates: ts.to_vec(), completeness: Completeness::Exact })
    }

    /// 1, together with products of up to `depth` generators, where the
    /// generators are the tangible entries of `vectors` and their ratios.
    pub fn heuristic(alg: &PairAlgebra, vectors: &[Vec<Element>], depth: usize) -> CoefficientDomain {
        let entries: BTreeSet<Element> = vectors
            .iter()
            .flatten()
            .filter(|x| alg.is_tangible(x))
            .cloned()
            .collect();
        let mut gens = entries.clone();
        for x in &entries {
            for y in &entries {
                if let Some(yi) = alg.inverse(y) {
                    let r = alg.mul(x, &yi);
                    if alg.is_tangible(&r) {
                        gens.insert(r);
                    }
                }
            }
        }
        let one = alg.one();
        let mut all: BTreeSet<Element> = BTreeSet::new();
        let mut level: BTreeSet<Element> = BTreeSet::from([one.clone()]);
        for _ in 0..depth {
            let next: BTreeSet<Element> = level
                .iter()
                .flat_map(|a| gens.iter().map(move |g| (a, g)))
                .map(|(a, g)| alg.mul(a, g))
                .filter(|x| alg.is_tangible(x))
                .collect();
            all.extend(next.iter().cloned());
            level = next;
            if all.len() > HEURISTIC_CAP {
                break;
            }
        }
        all.remove(&one);
        let mut candidates = vec![one];
        candidates.extend(all.into_iter().take(HEURISTIC_CAP));
        CoefficientDomain { candidates, completeness: Completeness::Heuristic(depth) }
    }

    /// Exact when T is finite, otherwise the depth-2 heuristic.
    pub fn default_for(alg: &PairAlgebra, vectors: &[Vec<Element>]) -> CoefficientDomain {
        Self::exact(alg).unwrap_or_else(|_| Self::heuristic(alg, vectors, 2))
    }

    /// `exact` or `heuristic:<depth>`.
    pub fn from_name(name: &str, alg: &PairAlgebra, vectors: &[Vec<Element>]) -> Result<CoefficientDomain> {
        if name == "exact" {
            return Self::exact(alg);
        }
        let depth = name
            .strip_prefix("heuristic:")
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::Parse(format!("unknown domain `{name}`")))?;
        Ok(Self::heuristic(alg, vectors, depth))
    }

    pub fn is_exact(&self) -> bool {
        self.completeness == Completeness::Exact
    }
}
