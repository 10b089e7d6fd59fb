use super::dominant::dominant_structure;
use crate::error::{Error, Result};
use crate::matrix_ops::{adjoint, det_doubled, Matrix};
use crate::pair_core::{balances_vec, Element, ModulusValue};
use crate::pair_instances::{embed, project};

/// Iterates of x_{k+1} = lift(D⁻¹ (N x_k + v)) from x_0 = 0.
#[derive(Clone, Debug)]
pub struct JacobiState {
    /// Diagonal part of A.
    pub d: Matrix,
    /// Off-diagonal part of A.
    pub n: Matrix,
    /// x_0, x_1, ..., ending with the repeated iterate.
    pub iterates: Vec<Vec<Element>>,
    /// Least k >= 1 with x_{k+1} = x_k.
    pub stabilized_at: Option<usize>,
    /// A x ∇ v for the stable x.
    pub solution_balances: bool,
    /// μ(x) = μ(|A|)⁻¹ μ(adj(A) v) componentwise.
    pub modulus_matches: bool,
}

impl JacobiState {
    pub fn solution(&self) -> &[Element] {
        self.iterates.last().map(Vec::as_slice).unwrap_or(&[])
    }
}

pub fn jacobi_solve(a: &Matrix, v: &[Element], max_iter: Option<usize>) -> Result<JacobiState> {
    let n = a.order()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!("{n}x{n} system with rhs of length {}", v.len())));
    }
    let alg = a.alg();
    let structure = dominant_structure(a)?;
    if !structure.diagonal_dominant {
        return Err(Error::NotDominantDiagonal);
    }
    if !structure.strictly_nonsingular {
        return Err(Error::NotStrictlyNonsingular);
    }
    let mut d_inv = Vec::with_capacity(n);
    for i in 0..n {
        let dii = a.get(i, i);
        let inv = alg
            .is_tangible(dii)
            .then(|| alg.inverse(dii))
            .flatten()
            .ok_or_else(|| Error::NonInvertibleDiagonal(alg.format(dii)))?;
        d_inv.push(inv);
    }
    if alg.lift(&alg.one()).is_none() {
        return Err(Error::NoLift(alg.id().to_string()));
    }
    let mut d = Matrix::zeros(alg, n, n);
    let mut off = a.clone();
    for i in 0..n {
        d.set(i, i, a.get(i, i).clone());
        off.set(i, i, alg.zero());
    }

    let max_iter = max_iter.unwrap_or(2 * n + 4);
    let mut iterates = vec![vec![alg.zero(); n]];
    let mut stabilized_at = None;
    for k in 0..max_iter {
        let nx = off.mul_vec(&iterates[k])?;
        let next: Vec<Element> = (0..n)
            .map(|i| {
                let y = alg.mul(&d_inv[i], &alg.add(&nx[i], &v[i]));
                alg.lift(&y).expect("lift registered")
            })
            .collect();
        let repeated = k >= 1 && next == iterates[k];
        iterates.push(next);
        if repeated {
            stabilized_at = Some(k);
            break;
        }
    }
    if stabilized_at.is_none() {
        return Err(Error::NoConvergence(max_iter));
    }

    let x = iterates.last().expect("nonempty").clone();
    let solution_balances = balances_vec(alg, &a.mul_vec(&x)?, v)?;
    let modulus_matches = modulus_check(a, v, &x)?;
    Ok(JacobiState { d, n: off, iterates, stabilized_at, solution_balances, modulus_matches })
}

fn modulus_check(a: &Matrix, v: &[Element], x: &[Element]) -> Result<bool> {
    let alg = a.alg();
    let mu = |e: &Element| alg.modulus(e).ok_or_else(|| Error::NoModulus(alg.id().to_string()));
    let det = det_doubled(a)?;
    let Some(det_inv) = mu(&det.permanent(alg))?.inv() else { return Ok(false) };
    let v_hat: Vec<Element> = v.iter().map(|e| embed(alg, e)).collect();
    let w = adjoint(a)?.mul_vec(&v_hat)?;
    for (xi, wi) in x.iter().zip(&w) {
        let expected: ModulusValue = det_inv.mul(mu(&project(alg, wi))?);
        if mu(xi)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_instances::make_supertropical;

    #[test]
    fn supertropical_two_by_two() {
        let t = make_supertropical();
        let a = Matrix::parse_rows(&t, &[&["2", "0"], &["1", "3"]]).unwrap();
        let v = t.parse_vec("4,4").unwrap();
        let s = jacobi_solve(&a, &v, None).unwrap();
        assert_eq!(s.stabilized_at, Some(1));
        assert_eq!(t.format_vec(&s.iterates[1]), "[2,1]");
        assert_eq!(t.format_vec(&s.iterates[2]), "[2,1]");
        assert!(s.solution_balances && s.modulus_matches);
    }

    #[test]
    fn diagonal_system() {
        let t = make_supertropical();
        let a = Matrix::parse_rows(&t, &[&["1", "-inf"], &["-inf", "-2"]]).unwrap();
        let v = t.parse_vec("3,3").unwrap();
        let s = jacobi_solve(&a, &v, None).unwrap();
        assert_eq!(s.stabilized_at, Some(1));
        assert_eq!(t.format_vec(s.solution()), "[2,5]");
    }

    #[test]
    fn refuses_bad_inputs() {
        let t = make_supertropical();
        let off = Matrix::parse_rows(&t, &[&["0", "5"], &["5", "0"]]).unwrap();
        let v = t.parse_vec("0,0").unwrap();
        assert_eq!(jacobi_solve(&off, &v, None).unwrap_err(), Error::NotDominantDiagonal);
        let tie = Matrix::parse_rows(&t, &[&["1", "1"], &["1", "1"]]).unwrap();
        assert_eq!(jacobi_solve(&tie, &v, None).unwrap_err(), Error::NotStrictlyNonsingular);
        let s = crate::pair_instances::make_sign_pair();
        let i = Matrix::identity(&s, 2);
        assert!(matches!(jacobi_solve(&i, &[s.one(), s.one()], None), Err(Error::NoModulus(_))));
    }
}
