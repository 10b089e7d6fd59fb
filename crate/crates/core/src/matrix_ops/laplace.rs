use super::det::det_unchecked;
use super::matrix::{combinations, Caps, Matrix};
use crate::error::{Error, Result};
use crate::pair_core::Element;
use crate::pair_instances::{make_doubled, switch};

/// Generalized Laplace expansion along the row set `rows`, in the doubled
/// pair: Σ_J (-)^{ΣI+ΣJ} |A[I,J]| |A[I',J']| over column sets J of size |I|.
pub fn laplace_expand(a: &Matrix, rows: &[usize]) -> Result<Element> {
    let n = a.order()?;
    Caps::check(Caps::current().det, "laplace expansion", n)?;
    let mut rs = rows.to_vec();
    rs.sort_unstable();
    rs.dedup();
    if rs.is_empty() || rs.len() >= n || rs.len() != rows.len() || rs[rs.len() - 1] >= n {
        return Err(Error::DimensionMismatch(format!(
            "row set {rows:?} is not a nonempty proper subset of 0..{n}"
        )));
    }
    let k = rs.len();
    let d = make_doubled(a.alg());
    let rest_rows: Vec<usize> = (0..n).filter(|i| !rs.contains(i)).collect();
    let row_sum: usize = rs.iter().sum();
    let mut total = d.zero();
    for cs in combinations(n, k) {
        let rest_cols: Vec<usize> = (0..n).filter(|j| !cs.contains(j)).collect();
        let top = det_unchecked(&a.submatrix(&rs, &cs), k).to_doubled();
        let bottom = det_unchecked(&a.submatrix(&rest_rows, &rest_cols), n - k).to_doubled();
        let mut term = d.mul(&top, &bottom);
        if (row_sum + cs.iter().sum::<usize>()) % 2 == 1 {
            term = switch(&term);
        }
        total = d.add(&total, &term);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix_ops::det_doubled;
    use crate::pair_instances::{make_sign_pair, make_supertropical};

    #[test]
    fn agrees_with_track_expansion() {
        let t = make_supertropical();
        let a = Matrix::parse_rows(
            &t,
            &[&["2", "0", "1/2", "-1"], &["1", "3", "0", "2"], &["4", "1", "1", "0"], &["0", "2", "5", "3"]],
        )
        .unwrap();
        let det = det_doubled(&a).unwrap().to_doubled();
        for rows in [vec![0], vec![2], vec![0, 1], vec![1, 3], vec![0, 1, 3]] {
            assert_eq!(laplace_expand(&a, &rows).unwrap(), det, "{rows:?}");
        }
    }

    #[test]
    fn two_by_two_sign() {
        let s = make_sign_pair();
        let a = Matrix::parse_rows(&s, &[&["1", "-1"], &["1", "1"]]).unwrap();
        let det = det_doubled(&a).unwrap().to_doubled();
        assert_eq!(laplace_expand(&a, &[0]).unwrap(), det);
        assert_eq!(laplace_expand(&a, &[1]).unwrap(), det);
        assert!(laplace_expand(&a, &[]).is_err());
        assert!(laplace_expand(&a, &[0, 1]).is_err());
    }
}
