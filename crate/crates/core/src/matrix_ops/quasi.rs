use super::adjoint::adjoint_projected;
use super::det::det_doubled;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::pair_core::{balances, Element};

/// Diagonal 1, off-diagonal null, and idempotent.
pub fn quasi_identity_check(m: &Matrix) -> bool {
    let Ok(n) = m.order() else { return false };
    let alg = m.alg();
    let shape_ok = (0..n).all(|i| {
        (0..n).all(|j| {
            let x = m.get(i, j);
            if i == j {
                *x == alg.one()
            } else {
                alg.is_null(x)
            }
        })
    });
    shape_ok && m.mul(m).map_or(false, |sq| sq == *m)
}

/// A' = |A|⁻¹ adj(A) together with the quasi-identity checks on A A' and
/// A' A, and Ã = A' A A'.
#[derive(Clone, Debug)]
pub struct QuasiInverse {
    pub det: Element,
    pub inverse: Matrix,
    pub right_product: Matrix,
    pub left_product: Matrix,
    pub right_is_quasi_identity: bool,
    pub left_is_quasi_identity: bool,
    pub tilde: Matrix,
}

pub fn quasi_inverse(a: &Matrix) -> Result<QuasiInverse> {
    let alg = a.alg();
    let d = det_doubled(a)?;
    if balances(alg, &d.plus, &d.minus)? {
        return Err(Error::SingularInput);
    }
    let det = d
        .signed(alg)
        .ok_or_else(|| Error::Undecidable(format!("{} has no negation map", alg.id())))?;
    let inv = alg
        .is_tangible(&det)
        .then(|| alg.inverse(&det))
        .flatten()
        .ok_or_else(|| Error::NonInvertibleDeterminant(alg.format(&det)))?;
    let inverse = adjoint_projected(a)?.scale(&inv);
    let right_product = a.mul(&inverse)?;
    let left_product = inverse.mul(a)?;
    let tilde = left_product.mul(&inverse)?;
    Ok(QuasiInverse {
        det,
        right_is_quasi_identity: quasi_identity_check(&right_product),
        left_is_quasi_identity: quasi_identity_check(&left_product),
        inverse,
        right_product,
        left_product,
        tilde,
    })
}
