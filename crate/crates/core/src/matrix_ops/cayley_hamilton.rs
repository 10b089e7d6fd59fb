use super::det::det_unchecked;
use super::matrix::{combinations, Caps, Matrix};
use crate::error::Result;
use crate::pair_core::Element;
use crate::pair_instances::{make_doubled, switch};

/// Coefficients c_0..c_n of |λI (-) A| in the doubled pair, c_k multiplying
/// λ^{n-k}: c_k = (-)^k Σ_{|S|=k} |A[S,S]|.
pub fn char_poly_coefficients(a: &Matrix) -> Result<Vec<Element>> {
    let n = a.order()?;
    Caps::check(Caps::current().cayley_hamilton, "cayley-hamilton", n)?;
    let d = make_doubled(a.alg());
    let mut out = vec![d.one()];
    for k in 1..=n {
        let mut c = d.zero();
        for s in combinations(n, k) {
            c = d.add(&c, &det_unchecked(&a.submatrix(&s, &s), k).to_doubled());
        }
        out.push(if k % 2 == 1 { switch(&c) } else { c });
    }
    Ok(out)
}

/// f(A) for f(λ) = |λI (-) A|, evaluated on the doubled embedding of A.
/// True when every entry lies in the null layer of the doubled pair.
pub fn cayley_hamilton_check(a: &Matrix) -> Result<bool> {
    let n = a.order()?;
    let coeffs = char_poly_coefficients(a)?;
    let ah = a.embed_doubled();
    let d = ah.alg().clone();
    // powers[k] = Â^k
    let mut powers = vec![Matrix::identity(&d, n)];
    for k in 1..=n {
        let next = powers[k - 1].mul(&ah)?;
        powers.push(next);
    }
    let mut f = Matrix::zeros(&d, n, n);
    for (k, c) in coeffs.iter().enumerate() {
        f = f.add(&powers[n - k].scale(c))?;
    }
    Ok(f.entries().iter().all(|x| d.is_null(x)))
}
