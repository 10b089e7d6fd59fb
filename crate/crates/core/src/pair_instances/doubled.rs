//! The doubled pair A x A with twist multiplication and the switch negation.

use std::any::Any;

use crate::error::{Error, Result};
use crate::pair_core::{split_top_level, Alg, Element, PairAlgebra, PairOps};

/// Doubling of a base pair.
///
/// The null layer is {(b1, b2) : b1 + b2 ∈ A0} together with the diagonal
/// {(b, b)}, so that the switch-negation quasi-zeros (a, a) are null over
/// every base, including bases with A0 = {0}.
#[derive(Clone, Debug)]
pub struct Doubled {
    base: Alg,
}

impl Doubled {
    pub fn base(&self) -> &Alg {
        &self.base
    }
}

pub fn make_doubled(base: &Alg) -> Alg {
    PairAlgebra::new(Doubled { base: base.clone() })
}

/// Base of a doubled algebra.
pub fn base_of(alg: &PairAlgebra) -> Option<&Alg> {
    alg.instance::<Doubled>().map(|d| &d.base)
}

/// b ↦ (b, 0).
pub fn embed(base: &PairAlgebra, b: &Element) -> Element {
    Element::pair(b.clone(), base.zero())
}

/// (b1, b2) ↦ (b2, b1).
pub fn switch(e: &Element) -> Element {
    let (p, n) = e.as_pair().expect("doubled element");
    Element::pair(n.clone(), p.clone())
}

/// |(b1, b2)| = b1 + b2.
pub fn project(base: &PairAlgebra, e: &Element) -> Element {
    let (p, n) = e.as_pair().expect("doubled element");
    base.add(p, n)
}

/// (b1, b2) ↦ b1 (-) b2, using the base negation map.
pub fn project_negated(base: &PairAlgebra, e: &Element) -> Option<Element> {
    let (p, n) = e.as_pair().expect("doubled element");
    Some(base.add(p, &base.negate(n)?))
}

fn comps(e: &Element) -> (&Element, &Element) {
    e.as_pair().unwrap_or_else(|| panic!("doubled pair given {e:?}"))
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        &t[1..t.len() - 1]
    } else {
        t
    }
}

impl PairOps for Doubled {
    fn id(&self) -> String {
        format!("doubled:{}", self.base.id())
    }
    fn zero(&self) -> Element {
        Element::pair(self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Element {
        embed(&self.base, &self.base.one())
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        let (a1, a2) = comps(a);
        let (b1, b2) = comps(b);
        Element::pair(self.base.add(a1, b1), self.base.add(a2, b2))
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        let bs = &self.base;
        let (a1, a2) = comps(a);
        let (b1, b2) = comps(b);
        Element::pair(
            bs.add(&bs.mul(a1, b1), &bs.mul(a2, b2)),
            bs.add(&bs.mul(a1, b2), &bs.mul(a2, b1)),
        )
    }
    fn is_tangible(&self, a: &Element) -> bool {
        let (p, n) = comps(a);
        (self.base.is_tangible(p) && self.base.is_zero(n))
            || (self.base.is_zero(p) && self.base.is_tangible(n))
    }
    fn is_null(&self, a: &Element) -> bool {
        let (p, n) = comps(a);
        p == n || self.base.is_null(&self.base.add(p, n))
    }
    fn one_dagger(&self) -> Option<Element> {
        Some(Element::pair(self.base.zero(), self.base.one()))
    }
    fn negate(&self, a: &Element) -> Option<Element> {
        Some(switch(a))
    }
    fn tangibles(&self) -> Option<Vec<Element>> {
        let ts = self.base.tangibles()?;
        let z = self.base.zero();
        let mut out: Vec<Element> = ts.iter().map(|t| Element::pair(t.clone(), z.clone())).collect();
        out.extend(ts.iter().map(|t| Element::pair(z.clone(), t.clone())));
        Some(out)
    }
    fn carrier(&self) -> Option<Vec<Element>> {
        let c = self.base.carrier()?;
        if c.len() > 64 {
            return None;
        }
        Some(
            c.iter()
                .flat_map(|p| c.iter().map(move |n| Element::pair(p.clone(), n.clone())))
                .collect(),
        )
    }
    fn sample(&self) -> Vec<Element> {
        let s = self.base.sample();
        let s = &s[..s.len().min(5)];
        s.iter()
            .flat_map(|p| s.iter().map(move |n| Element::pair(p.clone(), n.clone())))
            .collect()
    }
    fn inverse(&self, a: &Element) -> Option<Element> {
        let (p, n) = comps(a);
        if self.base.is_zero(n) {
            Some(embed(&self.base, &self.base.inverse(p)?))
        } else if self.base.is_zero(p) {
            Some(Element::pair(self.base.zero(), self.base.inverse(n)?))
        } else {
            None
        }
    }
    fn contains(&self, a: &Element) -> bool {
        a.as_pair()
            .is_some_and(|(p, n)| self.base.contains(p) && self.base.contains(n))
    }
    fn parse(&self, s: &str) -> Result<Element> {
        let parts = split_top_level(s, '|');
        match parts.as_slice() {
            [one] => Ok(embed(&self.base, &self.base.parse(strip_parens(one))?)),
            [p, n] => Ok(Element::pair(
                self.base.parse(strip_parens(p))?,
                self.base.parse(strip_parens(n))?,
            )),
            _ => Err(Error::Parse(format!("bad doubled literal `{s}`"))),
        }
    }
    fn format(&self, a: &Element) -> String {
        let (p, n) = comps(a);
        let wrap = |x: &Element| {
            let s = self.base.format(x);
            if s.contains('|') {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}|{}", wrap(p), wrap(n))
    }
    fn as_any(&self) -> &dyn Any {
        self
    }
}
