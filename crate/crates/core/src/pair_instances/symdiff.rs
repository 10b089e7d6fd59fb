//! Subsets of a cyclic group C_n under symmetric difference, with the
//! group-algebra product over F2. The empty set is the only null element.

use std::any::Any;

use super::table::cyclic_name;
use crate::error::{Error, Result};
use crate::pair_core::{split_top_level, Alg, Element, PairAlgebra, PairOps};

/// Largest group order whose full power set is enumerated.
const CARRIER_ORDER_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct Symdiff {
    n: usize,
}

impl Symdiff {
    pub fn new(n: usize) -> Result<Symdiff> {
        if !(1..=63).contains(&n) {
            return Err(Error::BadSpecifier {
                spec: format!("powerset-symdiff:{n}"),
                reason: "group order must lie in 1..=63".into(),
            });
        }
        Ok(Symdiff { n })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn into_alg(self) -> Alg {
        PairAlgebra::new(self)
    }

    fn mask(a: &Element) -> u64 {
        match a {
            Element::Set(m) => *m,
            other => panic!("symdiff pair given {other:?}"),
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn name(&self, i: usize) -> String {
        cyclic_name("x", i)
    }

    fn index(&self, tok: &str) -> Option<usize> {
        (0..self.n)
            .find(|&i| self.name(i) == tok)
            .or_else(|| tok.parse::<usize>().ok().filter(|&i| i < self.n))
    }
}

impl PairOps for Symdiff {
    fn id(&self) -> String {
        format!("powerset-symdiff:{}", self.n)
    }
    fn zero(&self) -> Element {
        Element::Set(0)
    }
    fn one(&self) -> Element {
        Element::Set(1)
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        Element::Set(Self::mask(a) ^ Self::mask(b))
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (s, t) = (Self::mask(a), Self::mask(b));
        let mut out = 0u64;
        for i in (0..self.n).filter(|i| s >> i & 1 == 1) {
            for j in (0..self.n).filter(|j| t >> j & 1 == 1) {
                out ^= 1 << ((i + j) % self.n);
            }
        }
        Element::Set(out)
    }
    fn is_tangible(&self, a: &Element) -> bool {
        Self::mask(a).count_ones() == 1
    }
    fn is_null(&self, a: &Element) -> bool {
        Self::mask(a) == 0
    }
    fn one_dagger(&self) -> Option<Element> {
        Some(self.one())
    }
    fn negate(&self, a: &Element) -> Option<Element> {
        Some(a.clone())
    }
    fn tangibles(&self) -> Option<Vec<Element>> {
        Some((0..self.n).map(|i| Element::Set(1 << i)).collect())
    }
    fn carrier(&self) -> Option<Vec<Element>> {
        (self.n <= CARRIER_ORDER_CAP).then(|| (0..=self.full()).map(Element::Set).collect())
    }
    fn sample(&self) -> Vec<Element> {
        let mut v = vec![Element::Set(0)];
        v.extend((0..self.n.min(6)).map(|i| Element::Set(1 << i)));
        v.push(Element::Set(0b11 & self.full()));
        v
    }
    fn inverse(&self, a: &Element) -> Option<Element> {
        let m = Self::mask(a);
        if m.count_ones() != 1 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        Some(Element::Set(1 << ((self.n - i) % self.n)))
    }
    fn contains(&self, a: &Element) -> bool {
        matches!(a, Element::Set(m) if m & !self.full() == 0)
    }
    fn parse(&self, s: &str) -> Result<Element> {
        let bad = |t: &str| Error::Parse(format!("unknown group element `{t}` for {}", self.id()));
        if s == "0" {
            return Ok(Element::Set(0));
        }
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let mut m = 0u64;
            for tok in split_top_level(inner, ',') {
                if tok.is_empty() {
                    continue;
                }
                m |= 1 << self.index(tok).ok_or_else(|| bad(tok))?;
            }
            return Ok(Element::Set(m));
        }
        let i = (0..self.n).find(|&i| self.name(i) == s).ok_or_else(|| bad(s))?;
        Ok(Element::Set(1 << i))
    }
    fn format(&self, a: &Element) -> String {
        let m = Self::mask(a);
        let names: Vec<String> = (0..self.n).filter(|i| m >> i & 1 == 1).map(|i| self.name(i)).collect();
        match names.len() {
            0 => "0".into(),
            1 => names[0].clone(),
            _ => format!("{{{}}}", names.join(",")),
        }
    }
    fn as_any(&self) -> &dyn Any {
        self
    }
}
