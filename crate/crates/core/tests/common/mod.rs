//! Reference arithmetic for the integration tests, written directly from
//! the defining rules and sharing no code with the library.

#![allow(dead_code)]

use pairlin::matrix_ops::Matrix;
use pairlin::pair_core::{Element, Layer, Q};

/// Every permutation of 0..n with its parity (true = odd), parity taken
/// from the inversion count.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, inv % 2 == 1)
        })
        .collect()
}

/// Sign pair as a set of signs: bit 0 = +, bit 1 = -. 0 = {}, inf = {+,-}.
pub mod sign {
    pub type S = u8;
    pub const ZERO: S = 0;
    pub const ONE: S = 1;
    pub const NEG: S = 2;
    pub const INF: S = 3;

    pub fn add(a: S, b: S) -> S {
        a | b
    }

    pub fn mul(a: S, b: S) -> S {
        let mut out = 0;
        for x in [1u8, 2] {
            for y in [1u8, 2] {
                if a & x != 0 && b & y != 0 {
                    out |= if x == y { 1 } else { 2 };
                }
            }
        }
        out
    }

    pub fn neg(a: S) -> S {
        (a & 1) << 1 | (a & 2) >> 1
    }

    pub fn is_null(a: S) -> bool {
        a == ZERO || a == INF
    }

    /// Balancing through the negation map: a (-) b is null.
    pub fn balances(a: S, b: S) -> bool {
        is_null(add(a, neg(b)))
    }

    pub fn from_name(s: &str) -> S {
        match s {
            "0" => ZERO,
            "1" => ONE,
            "-1" => NEG,
            "inf" => INF,
            _ => panic!("not a sign literal: {s}"),
        }
    }

    pub fn name(a: S) -> &'static str {
        ["0", "1", "-1", "inf"][a as usize]
    }
}

/// Even-track and odd-track sums of a sign matrix.
pub fn sign_det(a: &[Vec<sign::S>]) -> (sign::S, sign::S) {
    let n = a.len();
    let (mut plus, mut minus) = (sign::ZERO, sign::ZERO);
    for (p, odd) in permutations(n) {
        let t = (0..n).fold(sign::ONE, |acc, j| sign::mul(acc, a[p[j]][j]));
        if odd {
            minus = sign::add(minus, t);
        } else {
            plus = sign::add(plus, t);
        }
    }
    (plus, minus)
}

pub fn sign_rows(m: &Matrix) -> Vec<Vec<sign::S>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| sign::from_name(&m.alg().format(m.get(i, j)))).collect()).collect()
}

/// Some nonzero T0-combination of the rows is null in every column.
pub fn sign_dependent(rows: &[Vec<sign::S>]) -> bool {
    let k = rows.len();
    let choices = [sign::ZERO, sign::ONE, sign::NEG];
    (1..3usize.pow(k as u32)).any(|mut code| {
        let coeffs: Vec<sign::S> = (0..k)
            .map(|_| {
                let c = choices[code % 3];
                code /= 3;
                c
            })
            .collect();
        (0..rows[0].len()).all(|j| {
            sign::is_null((0..k).fold(sign::ZERO, |acc, i| sign::add(acc, sign::mul(coeffs[i], rows[i][j]))))
        })
    })
}

/// Supertropical arithmetic on the max-plus rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum St {
    Zero,
    T(Q),
    G(Q),
}

impl St {
    pub fn value(self) -> Option<Q> {
        match self {
            St::Zero => None,
            St::T(v) | St::G(v) => Some(v),
        }
    }

    pub fn add(self, o: St) -> St {
        match (self.value(), o.value()) {
            (None, _) => o,
            (_, None) => self,
            (Some(a), Some(b)) if a > b => self,
            (Some(a), Some(b)) if a < b => o,
            (Some(a), _) => St::G(a),
        }
    }

    pub fn mul(self, o: St) -> St {
        match (self, o) {
            (St::Zero, _) | (_, St::Zero) => St::Zero,
            (St::T(a), St::T(b)) => St::T(a + b),
            _ => St::G(self.value().unwrap() + o.value().unwrap()),
        }
    }

    /// Ghost or zero.
    pub fn is_null(self) -> bool {
        !matches!(self, St::T(_))
    }

    /// First-kind balancing: both null, or the sum null.
    pub fn balances(self, o: St) -> bool {
        (self.is_null() && o.is_null()) || self.add(o).is_null()
    }

    pub fn from_element(e: &Element) -> St {
        match e {
            Element::Layered(Layer::Zero, _) => St::Zero,
            Element::Layered(Layer::Tangible, v) => St::T(*v),
            Element::Layered(Layer::Ghost, v) => St::G(*v),
            other => panic!("not supertropical: {other:?}"),
        }
    }
}

pub fn st_matrix(m: &Matrix) -> Vec<Vec<St>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| St::from_element(m.get(i, j))).collect()).collect()
}

pub fn st_sum(it: impl IntoIterator<Item = St>) -> St {
    it.into_iter().fold(St::Zero, St::add)
}

/// Even-track and odd-track sums.
pub fn st_det(a: &[Vec<St>]) -> (St, St) {
    let n = a.len();
    let (mut plus, mut minus) = (St::Zero, St::Zero);
    for (p, odd) in permutations(n) {
        let t = (0..n).fold(St::T(Q::from_integer(0)), |acc, j| acc.mul(a[p[j]][j]));
        if odd {
            minus = minus.add(t);
        } else {
            plus = plus.add(t);
        }
    }
    (plus, minus)
}

pub fn st_permanent(a: &[Vec<St>]) -> St {
    let (p, m) = st_det(a);
    p.add(m)
}

pub fn st_minor(a: &[Vec<St>], r: usize, c: usize) -> Vec<Vec<St>> {
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| *x).collect())
        .collect()
}

/// Adjoint by permanents of minors (the sign twist is invisible in the
/// first kind).
pub fn st_adjoint(a: &[Vec<St>]) -> Vec<Vec<St>> {
    let n = a.len();
    if n == 1 {
        return vec![vec![St::T(Q::from_integer(0))]];
    }
    (0..n).map(|i| (0..n).map(|j| st_permanent(&st_minor(a, j, i))).collect()).collect()
}

pub fn st_mat_vec(a: &[Vec<St>], v: &[St]) -> Vec<St> {
    a.iter().map(|row| st_sum(row.iter().zip(v).map(|(x, y)| x.mul(*y)))).collect()
}

pub fn st_mat_mul(a: &[Vec<St>], b: &[Vec<St>]) -> Vec<Vec<St>> {
    let n = b[0].len();
    a.iter().map(|row| (0..n).map(|j| st_sum(row.iter().enumerate().map(|(k, x)| x.mul(b[k][j])))).collect()).collect()
}

/// Doubled Boolean elements (pos, neg) with twisted multiplication.
pub mod dbool {
    pub type D = (bool, bool);
    pub const ZERO: D = (false, false);
    pub const ONE: D = (true, false);
    pub const NEG: D = (false, true);

    pub fn add(a: D, b: D) -> D {
        (a.0 || b.0, a.1 || b.1)
    }

    pub fn mul(a: D, b: D) -> D {
        ((a.0 && b.0) || (a.1 && b.1), (a.0 && b.1) || (a.1 && b.0))
    }

    pub fn switch(a: D) -> D {
        (a.1, a.0)
    }

    /// Null layer of the doubled Boolean pair: the diagonal.
    pub fn is_null(a: D) -> bool {
        a.0 == a.1
    }

    pub fn balances(a: D, b: D) -> bool {
        is_null(add(a, switch(b)))
    }

    pub fn from_name(s: &str) -> D {
        match s {
            "0" | "0|0" => ZERO,
            "1" | "1|0" => ONE,
            "0|1" => NEG,
            "1|1" => (true, true),
            _ => panic!("not a doubled Boolean literal: {s}"),
        }
    }
}

pub fn dbool_rows(m: &Matrix) -> Vec<Vec<dbool::D>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| dbool::from_name(&m.alg().format(m.get(i, j)))).collect()).collect()
}

pub fn dbool_det(a: &[Vec<dbool::D>]) -> (dbool::D, dbool::D) {
    let n = a.len();
    let (mut plus, mut minus) = (dbool::ZERO, dbool::ZERO);
    for (p, odd) in permutations(n) {
        let t = (0..n).fold(dbool::ONE, |acc, j| dbool::mul(acc, a[p[j]][j]));
        if odd {
            minus = dbool::add(minus, t);
        } else {
            plus = dbool::add(plus, t);
        }
    }
    (plus, minus)
}

/// Residues mod p as bit sets, for coset arithmetic.
pub mod modp {
    pub fn coset(p: u64, rep: u64, group: &[u64]) -> Vec<u64> {
        let mut c: Vec<u64> = group.iter().map(|g| rep * g % p).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    pub fn sumset(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut c: Vec<u64> = a.iter().flat_map(|x| b.iter().map(move |y| (x + y) % p)).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    pub fn prodset(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut c: Vec<u64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y % p)).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Coset representatives of the nonzero residues.
    pub fn cosets(p: u64, group: &[u64]) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = Vec::new();
        for r in 1..p {
            let c = coset(p, r, group);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }
}
