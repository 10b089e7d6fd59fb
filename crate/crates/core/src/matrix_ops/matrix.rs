use std::fmt;

use crate::error::{Error, Result};
use crate::pair_core::{Alg, Element};
use crate::pair_instances::{embed, make_doubled};

/// Size limits for the factorial and exponential procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub det: usize,
    pub cayley_hamilton: usize,
    pub krasner: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { det: 8, cayley_hamilton: 5, krasner: 4 }
    }
}

impl Caps {
    /// Defaults, with every cap replaced by `PAIRLIN_CAP_N` when it is set.
    pub fn current() -> Caps {
        match std::env::var("PAIRLIN_CAP_N").ok().and_then(|s| s.trim().parse().ok()) {
            Some(n) => Caps { det: n, cayley_hamilton: n, krasner: n },
            None => Caps::default(),
        }
    }

    pub fn check(cap: usize, what: &'static str, n: usize) -> Result<()> {
        if n > cap {
            Err(Error::CapExceeded { what, n, cap })
        } else {
            Ok(())
        }
    }
}

/// A rectangular grid of elements over one pair, stored row-major.
#[derive(Clone)]
pub struct Matrix {
    alg: Alg,
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}", self.alg.id(), self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|i| self.alg.format_vec(&self.row(i))).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl Matrix {
    pub fn new(alg: &Alg, rows: usize, cols: usize, data: Vec<Element>) -> Result<Matrix> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| !alg.contains(x)) {
            return Err(Error::Parse(format!("{bad:?} is not an element of {}", alg.id())));
        }
        Ok(Matrix { alg: alg.clone(), rows, cols, data })
    }

    pub fn from_rows(alg: &Alg, rows: Vec<Vec<Element>>) -> Result<Matrix> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(alg, m, n, rows.into_iter().flatten().collect())
    }

    /// Build from element literals.
    pub fn parse_rows(alg: &Alg, rows: &[&[&str]]) -> Result<Matrix> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| alg.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(alg, parsed)
    }

    pub fn identity(alg: &Alg, n: usize) -> Matrix {
        let data = (0..n * n)
            .map(|k| if k / n == k % n { alg.one() } else { alg.zero() })
            .collect();
        Matrix { alg: alg.clone(), rows: n, cols: n, data }
    }

    pub fn zeros(alg: &Alg, rows: usize, cols: usize) -> Matrix {
        Matrix { alg: alg.clone(), rows, cols, data: vec![alg.zero(); rows * cols] }
    }

    pub fn alg(&self) -> &Alg {
        &self.alg
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)))
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Element) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Element] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<Element> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Element> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vectors(&self) -> Vec<Vec<Element>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let data = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Matrix { alg: self.alg.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// Rows `rs` and columns `cs`, in the given order.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Matrix {
        let data = rs
            .iter()
            .flat_map(|&i| cs.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Matrix { alg: self.alg.clone(), rows: rs.len(), cols: cs.len(), data }
    }

    /// Delete row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Matrix {
        let rs: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rs, &cs)
    }

    /// Every entry tangible.
    pub fn is_tangible(&self) -> bool {
        self.data.iter().all(|x| self.alg.is_tangible(x))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.alg.check_same(&other.alg)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let a = &self.alg;
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = a.zero();
                for k in 0..self.cols {
                    acc = a.add(&acc, &a.mul(self.get(i, k), other.get(k, j)));
                }
                data.push(acc);
            }
        }
        Ok(Matrix { alg: a.clone(), rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &[Element]) -> Result<Vec<Element>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let a = &self.alg;
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(a.zero(), |acc, k| a.add(&acc, &a.mul(self.get(i, k), &v[k])))
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.alg.check_same(&other.alg)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum of different shapes".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(x, y)| self.alg.add(x, y)).collect();
        Ok(Matrix { alg: self.alg.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Element) -> Matrix {
        self.map(&self.alg, |x| self.alg.mul(c, x))
    }

    /// Apply `f` entrywise, landing in `alg`.
    pub fn map(&self, alg: &Alg, f: impl Fn(&Element) -> Element) -> Matrix {
        Matrix { alg: alg.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise b ↦ (b, 0) into the doubled pair.
    pub fn embed_doubled(&self) -> Matrix {
        let d = make_doubled(&self.alg);
        self.map(&d, |x| embed(&self.alg, x))
    }
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}
