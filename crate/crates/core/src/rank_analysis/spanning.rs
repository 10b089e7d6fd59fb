use super::dependence::{check_vectors, search, DependenceWitness};
use super::domain::CoefficientDomain;
use crate::error::{Error, Result};
use crate::matrix_ops::combinations;
use crate::pair_core::{surpasses0, Element, PairAlgebra};

/// Tangible a_i on a support with Σ a_i v_i ⪯0 target componentwise.
#[derive(Clone, Debug)]
pub struct SpanWitness {
    pub support: Vec<usize>,
    pub coefficients: Vec<Element>,
    /// Dependence of (target, v_i...) with coefficients (1, a_i†), indexed
    /// with the target at 0 and v_i at i + 1. Present when the pair has a
    /// Property-N witness and the combination is null.
    pub induced: Option<DependenceWitness>,
}

pub fn preceq_spans(
    alg: &PairAlgebra,
    vectors: &[Vec<Element>],
    target: &[Element],
    domain: &CoefficientDomain,
) -> Result<Option<SpanWitness>> {
    if domain.candidates.is_empty() {
        return Err(Error::DomainEmpty);
    }
    let len = check_vectors(vectors)?;
    if len != target.len() && !vectors.is_empty() {
        return Err(Error::DimensionMismatch("target length differs from the vectors".into()));
    }
    for k in 1..=vectors.len() {
        for support in combinations(vectors.len(), k) {
            let mut coeffs = Vec::with_capacity(k);
            let mut failure: Option<Error> = None;
            let found = search(alg, vectors, &support, domain, false, &mut coeffs, vec![alg.zero(); len], &mut |acc| {
                let mut ok = true;
                for (b1, b2) in acc.iter().zip(target) {
                    match surpasses0(alg, b1, b2) {
                        Ok(true) => {}
                        Ok(false) => {
                            ok = false;
                            break;
                        }
                        Err(e) => {
                            failure = Some(e);
                            ok = false;
                            break;
                        }
                    }
                }
                ok
            });
            if let Some(e) = failure {
                return Err(e);
            }
            if found {
                let induced = induced_dependence(alg, vectors, target, &support, &coeffs);
                return Ok(Some(SpanWitness { support, coefficients: coeffs, induced }));
            }
        }
    }
    Ok(None)
}

fn induced_dependence(
    alg: &PairAlgebra,
    vectors: &[Vec<Element>],
    target: &[Element],
    support: &[usize],
    coeffs: &[Element],
) -> Option<DependenceWitness> {
    let daggers = coeffs.iter().map(|a| alg.dagger(a)).collect::<Option<Vec<_>>>()?;
    let mut all = vec![target.to_vec()];
    all.extend(vectors.iter().cloned());
    let mut w = DependenceWitness { support: vec![0], coefficients: vec![alg.one()] };
    w.support.extend(support.iter().map(|i| i + 1));
    w.coefficients.extend(daggers);
    w.verify(alg, &all).then_some(w)
}
