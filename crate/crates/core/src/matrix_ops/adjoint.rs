use super::det::{det_unchecked, DoubledDet};
use super::matrix::{Caps, Matrix};
use crate::error::{Error, Result};
use crate::pair_core::Element;
use crate::pair_instances::{make_doubled, project_negated, switch};

/// Doubled adjoint: entry (i, j) is the doubled determinant of the (j, i)
/// minor, switched when i + j is odd. Lives in the doubled pair.
pub fn adjoint(a: &Matrix) -> Result<Matrix> {
    let n = a.order()?;
    Caps::check(Caps::current().det, "adjoint", n.saturating_sub(1))?;
    let alg = a.alg();
    let d = make_doubled(alg);
    if n == 1 {
        return Matrix::new(&d, 1, 1, vec![Element::pair(alg.one(), alg.zero())]);
    }
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let DoubledDet { plus, minus } = det_unchecked(&a.minor(j, i), n - 1);
            let e = Element::pair(plus, minus);
            data.push(if (i + j) % 2 == 1 { switch(&e) } else { e });
        }
    }
    Matrix::new(&d, n, n, data)
}

/// The adjoint pulled back to the base pair through its negation map.
pub fn adjoint_projected(a: &Matrix) -> Result<Matrix> {
    let alg = a.alg();
    if !alg.has_negation() {
        return Err(Error::Undecidable(format!("{} has no negation map", alg.id())));
    }
    let adj = adjoint(a)?;
    Ok(adj.map(alg, |e| project_negated(alg, e).expect("negation map present")))
}
