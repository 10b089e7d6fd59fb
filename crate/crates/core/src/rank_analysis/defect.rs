use crate::matrix_ops::Matrix;

/// Row sets R, maximal under inclusion, whose common zero columns number
/// at least n + 1 - |R|. Each such set forces every full-size minor through
/// those rows to vanish. Returned with the zero columns.
pub fn rank_defect(a: &Matrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (m, n) = (a.rows(), a.cols());
    let alg = a.alg();
    let zero_cols = |mask: u32| -> Vec<usize> {
        (0..n)
            .filter(|&j| (0..m).filter(|i| mask >> i & 1 == 1).all(|i| alg.is_zero(a.get(i, j))))
            .collect()
    };
    if m > 20 {
        return Vec::new();
    }
    let qualifying: Vec<u32> = (1u32..1 << m)
        .filter(|&mask| {
            let k = mask.count_ones() as usize;
            k <= n && zero_cols(mask).len() + k > n
        })
        .collect();
    qualifying
        .iter()
        .filter(|&&s| !qualifying.iter().any(|&t| t != s && t & s == s))
        .map(|&s| ((0..m).filter(|i| s >> i & 1 == 1).collect(), zero_cols(s)))
        .collect()
}
