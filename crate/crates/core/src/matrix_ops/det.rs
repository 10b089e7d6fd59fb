use super::matrix::{Caps, Matrix};
use crate::error::{Error, Result};
use crate::pair_core::{balances, Element, PairAlgebra};

/// Even-track and odd-track sums of a square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledDet {
    pub plus: Element,
    pub minus: Element,
}

impl DoubledDet {
    /// As an element (plus, minus) of the doubled pair.
    pub fn to_doubled(&self) -> Element {
        Element::pair(self.plus.clone(), self.minus.clone())
    }

    pub fn permanent(&self, alg: &PairAlgebra) -> Element {
        alg.add(&self.plus, &self.minus)
    }

    /// plus (-) minus, when the pair has a negation map.
    pub fn signed(&self, alg: &PairAlgebra) -> Option<Element> {
        Some(alg.add(&self.plus, &alg.negate(&self.minus)?))
    }
}

/// One track a_{π(0),0} ⋯ a_{π(n-1),n-1}.
#[derive(Clone, Debug)]
pub struct Track<'a> {
    pub perm: &'a [usize],
    pub odd: bool,
    pub value: Element,
}

/// Visit every track in lexicographic order of π, zero tracks included.
pub fn for_each_track(a: &Matrix, mut f: impl FnMut(Track<'_>)) -> Result<()> {
    let n = a.order()?;
    Caps::check(Caps::current().det, "determinant", n)?;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    walk(a, &mut perm, &mut used, false, a.alg().one(), false, &mut |p, odd, v| {
        f(Track { perm: p, odd, value: v })
    });
    Ok(())
}

fn walk(
    a: &Matrix,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    odd: bool,
    acc: Element,
    skip_zero: bool,
    f: &mut dyn FnMut(&[usize], bool, Element),
) {
    let n = used.len();
    let col = perm.len();
    if col == n {
        f(perm, odd, acc);
        return;
    }
    let alg = a.alg();
    for r in 0..n {
        if used[r] {
            continue;
        }
        let v = alg.mul(&acc, a.get(r, col));
        if skip_zero && alg.is_zero(&v) {
            continue;
        }
        // rows already placed above r each add one inversion
        let inv = used[r + 1..].iter().filter(|&&u| u).count();
        used[r] = true;
        perm.push(r);
        walk(a, perm, used, odd ^ (inv % 2 == 1), v, skip_zero, f);
        perm.pop();
        used[r] = false;
    }
}

/// (Σ even tracks, Σ odd tracks), folded in lexicographic order of π.
pub fn det_doubled(a: &Matrix) -> Result<DoubledDet> {
    let n = a.order()?;
    Caps::check(Caps::current().det, "determinant", n)?;
    Ok(det_unchecked(a, n))
}

pub(crate) fn det_unchecked(a: &Matrix, n: usize) -> DoubledDet {
    let alg = a.alg();
    let mut plus = alg.zero();
    let mut minus = alg.zero();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    walk(a, &mut perm, &mut used, false, alg.one(), true, &mut |_, odd, v| {
        if odd {
            minus = alg.add(&minus, &v);
        } else {
            plus = alg.add(&plus, &v);
        }
    });
    DoubledDet { plus, minus }
}

/// Sum of all tracks.
pub fn permanent(a: &Matrix) -> Result<Element> {
    Ok(det_doubled(a)?.permanent(a.alg()))
}

/// |A|+ ∇ |A|-.
pub fn is_singular(a: &Matrix) -> Result<bool> {
    let d = det_doubled(a)?;
    balances(a.alg(), &d.plus, &d.minus)
}

/// |A|+ (-) |A|-, using the pair's negation map. Over a doubled pair this
/// is the switch-negation determinant.
pub fn signed_det(a: &Matrix) -> Result<Element> {
    det_doubled(a)?
        .signed(a.alg())
        .ok_or_else(|| Error::Undecidable(format!("{} has no negation map", a.alg().id())))
}
