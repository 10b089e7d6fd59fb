use super::dependence::{find_dependence, DependenceWitness};
use super::domain::CoefficientDomain;
use crate::error::Result;
use crate::matrix_ops::{combinations, det_doubled, Caps, Matrix};
use crate::pair_core::{balances, Element, PairAlgebra};

/// A rank with the dependence witnesses found on the way down.
#[derive(Clone, Debug)]
pub struct RankResult {
    pub rank: usize,
    /// A subset realizing the rank (empty when the rank is 0).
    pub independent: Vec<usize>,
    /// Every subset tested on the way down and shown dependent.
    pub witnesses: Vec<(Vec<usize>, DependenceWitness)>,
}

/// Largest k such that some k-subset of `vectors` has no witness in `domain`.
pub fn vector_rank(
    alg: &PairAlgebra,
    vectors: &[Vec<Element>],
    domain: &CoefficientDomain,
) -> Result<RankResult> {
    let mut witnesses = Vec::new();
    for k in (1..=vectors.len()).rev() {
        for subset in combinations(vectors.len(), k) {
            let sub: Vec<Vec<Element>> = subset.iter().map(|&i| vectors[i].clone()).collect();
            match find_dependence(alg, &sub, domain)? {
                None => return Ok(RankResult { rank: k, independent: subset, witnesses }),
                Some(w) => {
                    let support = w.support.iter().map(|&i| subset[i]).collect();
                    witnesses.push((subset, DependenceWitness { support, coefficients: w.coefficients }));
                }
            }
        }
    }
    Ok(RankResult { rank: 0, independent: Vec::new(), witnesses })
}

pub fn row_rank(a: &Matrix, domain: &CoefficientDomain) -> Result<RankResult> {
    vector_rank(a.alg(), &a.row_vectors(), domain)
}

pub fn col_rank(a: &Matrix, domain: &CoefficientDomain) -> Result<RankResult> {
    vector_rank(a.alg(), &a.col_vectors(), domain)
}

/// Largest nonsingular square submatrix, with its rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmatrixRank {
    pub rank: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub fn submatrix_rank(a: &Matrix) -> Result<SubmatrixRank> {
    let top = a.rows().min(a.cols());
    Caps::check(Caps::current().det, "submatrix rank", top)?;
    for k in (1..=top).rev() {
        for rs in combinations(a.rows(), k) {
            for cs in combinations(a.cols(), k) {
                let d = det_doubled(&a.submatrix(&rs, &cs))?;
                if !balances(a.alg(), &d.plus, &d.minus)? {
                    return Ok(SubmatrixRank { rank: k, rows: rs, cols: cs });
                }
            }
        }
    }
    Ok(SubmatrixRank { rank: 0, rows: Vec::new(), cols: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_instances::make_sign_pair;

    #[test]
    fn identity_and_zero() {
        let s = make_sign_pair();
        let d = CoefficientDomain::exact(&s).unwrap();
        let i3 = Matrix::identity(&s, 3);
        assert_eq!(row_rank(&i3, &d).unwrap().rank, 3);
        assert_eq!(col_rank(&i3, &d).unwrap().rank, 3);
        assert_eq!(submatrix_rank(&i3).unwrap().rank, 3);
        let z = Matrix::zeros(&s, 2, 3);
        assert_eq!(row_rank(&z, &d).unwrap().rank, 0);
        assert_eq!(submatrix_rank(&z).unwrap().rank, 0);
    }

    #[test]
    fn sign_3x4_ranks() {
        let s = make_sign_pair();
        let a = Matrix::parse_rows(
            &s,
            &[&["1", "1", "-1", "1"], &["1", "-1", "1", "1"], &["-1", "1", "1", "1"]],
        )
        .unwrap();
        let d = CoefficientDomain::exact(&s).unwrap();
        assert_eq!(row_rank(&a, &d).unwrap().rank, 3);
        assert_eq!(submatrix_rank(&a).unwrap().rank, 2);
    }
}
