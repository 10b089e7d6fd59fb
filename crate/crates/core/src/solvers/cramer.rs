use crate::error::{Error, Result};
use crate::matrix_ops::{adjoint, det_doubled, DoubledDet, Matrix};
use crate::pair_core::{balances, balances_vec, Element};
use crate::pair_instances::{embed, project_negated};

/// w = adj(A) v in the doubled pair, the balance |A| v ∇ A w, and the
/// tangible solution x = |A|⁻¹ w when it exists.
#[derive(Clone, Debug)]
pub struct CramerResult {
    pub det: DoubledDet,
    /// Over the doubled pair.
    pub w: Vec<Element>,
    pub balance_verified: bool,
    pub x: Option<Vec<Element>>,
    /// A x ∇ v, when x exists.
    pub x_verified: Option<bool>,
    /// Whether x is the only solution in T0^n (n <= 2, finite pairs).
    pub unique_in_t0: Option<bool>,
}

pub fn cramer_solve(a: &Matrix, v: &[Element]) -> Result<CramerResult> {
    let n = a.order()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!("{n}x{n} system with rhs of length {}", v.len())));
    }
    let alg = a.alg();
    let det = det_doubled(a)?;
    let adj = adjoint(a)?;
    let d = adj.alg().clone();
    let v_hat: Vec<Element> = v.iter().map(|x| embed(alg, x)).collect();
    let w = adj.mul_vec(&v_hat)?;
    let det_hat = det.to_doubled();
    let lhs: Vec<Element> = v_hat.iter().map(|x| d.mul(&det_hat, x)).collect();
    let rhs = a.embed_doubled().mul_vec(&w)?;
    let balance_verified = balances_vec(&d, &lhs, &rhs)?;

    let x = solution(alg, &det, &w);
    let x_verified = match &x {
        Some(x) => Some(balances_vec(alg, &a.mul_vec(x)?, v)?),
        None => None,
    };
    let unique_in_t0 = match &x {
        Some(x) if n <= 2 => count_solutions(a, v)?.map(|sols| sols.len() == 1 && sols[0] == *x),
        _ => None,
    };
    Ok(CramerResult { det, w, balance_verified, x, x_verified, unique_in_t0 })
}

fn solution(alg: &crate::pair_core::PairAlgebra, det: &DoubledDet, w: &[Element]) -> Option<Vec<Element>> {
    let signed = det.signed(alg)?;
    if !alg.is_tangible(&signed) {
        return None;
    }
    let inv = alg.inverse(&signed)?;
    w.iter()
        .map(|wi| {
            let p = project_negated(alg, wi)?;
            alg.is_tangible_or_zero(&p).then(|| alg.mul(&inv, &p))
        })
        .collect()
}

/// All x in T0^n with A x ∇ v, when T is finite.
fn count_solutions(a: &Matrix, v: &[Element]) -> Result<Option<Vec<Vec<Element>>>> {
    let alg = a.alg();
    let Some(t0) = alg.tangibles_with_zero() else { return Ok(None) };
    let n = v.len();
    let mut out = Vec::new();
    let total = t0.len().pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let x: Vec<Element> = (0..n)
            .map(|_| {
                let e = t0[c % t0.len()].clone();
                c /= t0.len();
                e
            })
            .collect();
        let ax = a.mul_vec(&x)?;
        let mut ok = true;
        for (l, r) in ax.iter().zip(v) {
            if !balances(alg, l, r)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(x);
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_instances::{make_sign_pair, make_supertropical};

    #[test]
    fn supertropical_two_by_two() {
        let t = make_supertropical();
        let a = Matrix::parse_rows(&t, &[&["2", "0"], &["1", "3"]]).unwrap();
        let v = t.parse_vec("4,4").unwrap();
        let r = cramer_solve(&a, &v).unwrap();
        assert!(r.balance_verified);
        assert_eq!(t.format_vec(r.x.as_ref().unwrap()), "[2,1]");
        assert_eq!(r.x_verified, Some(true));
        assert_eq!(a.mul_vec(r.x.as_ref().unwrap()).unwrap(), v);
        assert_eq!(r.unique_in_t0, None);
    }

    #[test]
    fn identity_returns_rhs() {
        let s = make_sign_pair();
        let v = s.parse_vec("1,-1,0").unwrap();
        let r = cramer_solve(&Matrix::identity(&s, 3), &v).unwrap();
        assert!(r.balance_verified);
        assert_eq!(r.x.unwrap(), v);
    }

    #[test]
    fn sign_diagonal() {
        let s = make_sign_pair();
        let a = Matrix::parse_rows(&s, &[&["1", "0"], &["0", "-1"]]).unwrap();
        let v = s.parse_vec("1,1").unwrap();
        let r = cramer_solve(&a, &v).unwrap();
        assert_eq!(s.format_vec(r.x.as_ref().unwrap()), "[1,-1]");
        assert_eq!(r.x_verified, Some(true));
        assert_eq!(r.unique_in_t0, Some(true));
    }

    #[test]
    fn length_mismatch() {
        let s = make_sign_pair();
        assert!(cramer_solve(&Matrix::identity(&s, 2), &[s.one()]).is_err());
    }
}
