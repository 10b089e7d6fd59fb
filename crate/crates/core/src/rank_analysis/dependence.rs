use super::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::matrix_ops::combinations;
use crate::pair_core::{Element, PairAlgebra};

/// Tangible coefficients on a support whose combination is null in every
/// component. Indices are 0-based; display is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceWitness {
    pub support: Vec<usize>,
    pub coefficients: Vec<Element>,
}

impl DependenceWitness {
    pub fn render(&self, alg: &PairAlgebra) -> String {
        let support: Vec<String> = self.support.iter().map(|i| (i + 1).to_string()).collect();
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| alg.format(c)).collect();
        format!("support=[{}] coeffs=[{}]", support.join(","), coeffs.join(","))
    }

    /// Σ a_i v_i over the support.
    pub fn combination(&self, alg: &PairAlgebra, vectors: &[Vec<Element>]) -> Vec<Element> {
        let len = vectors.first().map_or(0, Vec::len);
        let mut acc = vec![alg.zero(); len];
        for (i, a) in self.support.iter().zip(&self.coefficients) {
            for (k, x) in vectors[*i].iter().enumerate() {
                acc[k] = alg.add(&acc[k], &alg.mul(a, x));
            }
        }
        acc
    }

    /// Recheck the defining property.
    pub fn verify(&self, alg: &PairAlgebra, vectors: &[Vec<Element>]) -> bool {
        !self.support.is_empty()
            && self.coefficients.iter().all(|a| alg.is_tangible(a))
            && is_null_vector(alg, &self.combination(alg, vectors))
    }
}

pub fn is_null_vector(alg: &PairAlgebra, v: &[Element]) -> bool {
    v.iter().all(|x| alg.is_null(x))
}

pub(crate) fn check_vectors(vectors: &[Vec<Element>]) -> Result<usize> {
    let len = vectors.first().map_or(0, Vec::len);
    if vectors.iter().any(|v| v.len() != len) {
        return Err(Error::DimensionMismatch("vectors of different lengths".into()));
    }
    Ok(len)
}

/// Whether the first coefficient may be fixed to 1: every candidate is
/// invertible, so any witness can be rescaled to start with 1.
pub(crate) fn can_normalize(alg: &PairAlgebra, domain: &CoefficientDomain) -> bool {
    let one = alg.one();
    domain.candidates.contains(&one) && domain.candidates.iter().all(|c| alg.inverse(c).is_some())
}

/// First witness in order of support size, then support, then coefficient
/// tuple (lexicographic in domain order).
pub fn find_dependence(
    alg: &PairAlgebra,
    vectors: &[Vec<Element>],
    domain: &CoefficientDomain,
) -> Result<Option<DependenceWitness>> {
    if domain.candidates.is_empty() {
        return Err(Error::DomainEmpty);
    }
    let len = check_vectors(vectors)?;
    let normalize = can_normalize(alg, domain);
    for k in 1..=vectors.len() {
        for support in combinations(vectors.len(), k) {
            let mut coeffs = Vec::with_capacity(k);
            let start = vec![alg.zero(); len];
            let found = search(alg, vectors, &support, domain, normalize, &mut coeffs, start, &mut |acc| {
                is_null_vector(alg, acc)
            });
            if found {
                return Ok(Some(DependenceWitness { support, coefficients: coeffs }));
            }
        }
    }
    Ok(None)
}

/// DFS over coefficient tuples for `support`; leaves the accepted tuple in
/// `coeffs`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn search(
    alg: &PairAlgebra,
    vectors: &[Vec<Element>],
    support: &[usize],
    domain: &CoefficientDomain,
    normalize: bool,
    coeffs: &mut Vec<Element>,
    acc: Vec<Element>,
    accept: &mut dyn FnMut(&[Element]) -> bool,
) -> bool {
    let depth = coeffs.len();
    if depth == support.len() {
        return accept(&acc);
    }
    let one = [alg.one()];
    let choices: &[Element] = if normalize && depth == 0 { &one } else { &domain.candidates };
    let v = &vectors[support[depth]];
    for a in choices {
        let next: Vec<Element> = acc.iter().zip(v).map(|(s, x)| alg.add(s, &alg.mul(a, x))).collect();
        coeffs.push(a.clone());
        if search(alg, vectors, support, domain, normalize, coeffs, next, accept) {
            return true;
        }
        coeffs.pop();
    }
    false
}
