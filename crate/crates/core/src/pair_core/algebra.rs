use std::any::Any;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::element::{Element, ModulusValue};
use crate::error::{Error, Result};

/// Kind of a pair: whether 1+1 lands in the null layer, or a+a never does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    First,
    Second,
    Unknown,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::First => "first",
            Kind::Second => "second",
            Kind::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// Raw operations a concrete pair provides. Wrapped by [`PairAlgebra`],
/// which adds caching and the derived notions.
pub trait PairOps: Send + Sync {
    fn id(&self) -> String;
    fn zero(&self) -> Element;
    fn one(&self) -> Element;
    fn add(&self, a: &Element, b: &Element) -> Element;
    fn mul(&self, a: &Element, b: &Element) -> Element;
    fn is_tangible(&self, a: &Element) -> bool;
    fn is_null(&self, a: &Element) -> bool;
    /// Canonical 1-dagger: a tangible with 1 + 1-dagger null.
    fn one_dagger(&self) -> Option<Element>;
    /// Negation map, when one is registered.
    fn negate(&self, _a: &Element) -> Option<Element> {
        None
    }
    /// Finite enumeration of T, when T is finite.
    fn tangibles(&self) -> Option<Vec<Element>>;
    /// Finite enumeration of the carrier, when available.
    fn carrier(&self) -> Option<Vec<Element>> {
        None
    }
    /// Representative elements used by sampled audits of infinite carriers.
    fn sample(&self) -> Vec<Element> {
        self.carrier().unwrap_or_default()
    }
    fn modulus(&self, _a: &Element) -> Option<ModulusValue> {
        None
    }
    fn declared_kind(&self) -> Kind {
        Kind::Unknown
    }
    /// Multiplicative inverse of a tangible, if it exists.
    fn inverse(&self, a: &Element) -> Option<Element> {
        let one = self.one();
        self.tangibles()?
            .into_iter()
            .find(|b| self.mul(a, b) == one && self.mul(b, a) == one)
    }
    /// Tangible lift used by the Jacobi iteration.
    fn lift(&self, _a: &Element) -> Option<Element> {
        None
    }
    /// Rule-based decision of b1 <=0 b2 for carriers where search is impossible.
    fn surpasses_rule(&self, _b1: &Element, _b2: &Element) -> Option<bool> {
        None
    }
    fn contains(&self, a: &Element) -> bool;
    fn parse(&self, s: &str) -> Result<Element>;
    fn format(&self, a: &Element) -> String;
    fn as_any(&self) -> &dyn Any;
}

/// Shared handle to an algebra descriptor.
pub type Alg = Arc<PairAlgebra>;

/// An immutable pair descriptor: carrier operations plus cached enumerations.
pub struct PairAlgebra {
    id: String,
    ops: Box<dyn PairOps>,
    tangibles: Option<Vec<Element>>,
    carrier: OnceLock<Option<Vec<Element>>>,
    kind: OnceLock<Kind>,
}

impl fmt::Debug for PairAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairAlgebra({})", self.id)
    }
}

impl PairAlgebra {
    pub fn new(ops: impl PairOps + 'static) -> Alg {
        let tangibles = ops.tangibles();
        Arc::new(PairAlgebra {
            id: ops.id(),
            ops: Box::new(ops),
            tangibles,
            carrier: OnceLock::new(),
            kind: OnceLock::new(),
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn ops(&self) -> &dyn PairOps {
        self.ops.as_ref()
    }

    /// Downcast the concrete instance.
    pub fn instance<T: 'static>(&self) -> Option<&T> {
        self.ops.as_any().downcast_ref::<T>()
    }

    pub fn zero(&self) -> Element {
        self.ops.zero()
    }

    pub fn one(&self) -> Element {
        self.ops.one()
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        self.ops.add(a, b)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.ops.mul(a, b)
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Element {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Element {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        *a == self.zero()
    }

    pub fn is_tangible(&self, a: &Element) -> bool {
        self.ops.is_tangible(a)
    }

    /// Tangible or zero.
    pub fn is_tangible_or_zero(&self, a: &Element) -> bool {
        self.is_zero(a) || self.is_tangible(a)
    }

    pub fn is_null(&self, a: &Element) -> bool {
        self.ops.is_null(a)
    }

    pub fn one_dagger(&self) -> Option<Element> {
        self.ops.one_dagger()
    }

    /// a-dagger = a * 1-dagger.
    pub fn dagger(&self, a: &Element) -> Option<Element> {
        self.one_dagger().map(|d| self.mul(a, &d))
    }

    pub fn negate(&self, a: &Element) -> Option<Element> {
        self.ops.negate(a)
    }

    pub fn has_negation(&self) -> bool {
        self.ops.negate(&self.one()).is_some()
    }

    pub fn tangibles(&self) -> Option<&[Element]> {
        self.tangibles.as_deref()
    }

    /// T with the zero prepended.
    pub fn tangibles_with_zero(&self) -> Option<Vec<Element>> {
        self.tangibles.as_ref().map(|ts| {
            let mut v = Vec::with_capacity(ts.len() + 1);
            v.push(self.zero());
            v.extend(ts.iter().cloned());
            v
        })
    }

    pub fn carrier(&self) -> Option<&[Element]> {
        self.carrier.get_or_init(|| self.ops.carrier()).as_deref()
    }

    pub fn is_finite(&self) -> bool {
        self.carrier().is_some()
    }

    /// Null elements of a finite carrier.
    pub fn nulls(&self) -> Option<Vec<Element>> {
        self.carrier()
            .map(|c| c.iter().filter(|x| self.is_null(x)).cloned().collect())
    }

    pub fn sample(&self) -> Vec<Element> {
        match self.carrier() {
            Some(c) => c.to_vec(),
            None => self.ops.sample(),
        }
    }

    pub fn modulus(&self, a: &Element) -> Option<ModulusValue> {
        self.ops.modulus(a)
    }

    pub fn has_modulus(&self) -> bool {
        self.ops.modulus(&self.one()).is_some()
    }

    pub fn inverse(&self, a: &Element) -> Option<Element> {
        self.ops.inverse(a)
    }

    pub fn lift(&self, a: &Element) -> Option<Element> {
        self.ops.lift(a)
    }

    pub fn declared_kind(&self) -> Kind {
        self.ops.declared_kind()
    }

    /// Kind from the arithmetic alone: 1+1 null gives First; a+a never null
    /// over T (or its sample) gives Second.
    pub fn detected_kind(&self) -> Kind {
        let one = self.one();
        if self.is_null(&self.add(&one, &one)) {
            return Kind::First;
        }
        let ts: Vec<Element> = match self.tangibles() {
            Some(ts) => ts.to_vec(),
            None => self
                .sample()
                .into_iter()
                .filter(|x| self.is_tangible(x))
                .collect(),
        };
        if ts.iter().all(|a| !self.is_null(&self.add(a, a))) {
            Kind::Second
        } else {
            Kind::Unknown
        }
    }

    /// Effective kind: the declared kind when present, else detection.
    pub fn kind(&self) -> Kind {
        *self.kind.get_or_init(|| match self.declared_kind() {
            Kind::Unknown => self.detected_kind(),
            k => k,
        })
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.ops.contains(a)
    }

    pub fn parse(&self, s: &str) -> Result<Element> {
        let e = self.ops.parse(s.trim())?;
        if !self.contains(&e) {
            return Err(Error::Parse(format!("`{s}` is not an element of {}", self.id)));
        }
        Ok(e)
    }

    pub fn format(&self, a: &Element) -> String {
        self.ops.format(a)
    }

    pub fn format_vec(&self, v: &[Element]) -> String {
        let parts: Vec<String> = v.iter().map(|x| self.format(x)).collect();
        format!("[{}]", parts.join(","))
    }

    /// Parse a comma-separated vector literal.
    pub fn parse_vec(&self, s: &str) -> Result<Vec<Element>> {
        split_top_level(s, ',')
            .into_iter()
            .map(|t| self.parse(t))
            .collect()
    }

    pub fn same_as(&self, other: &PairAlgebra) -> bool {
        self.id == other.id
    }

    pub fn check_same(&self, other: &PairAlgebra) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(self.id.clone(), other.id.clone()))
        }
    }
}

/// Split on `sep` outside parentheses and braces.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}
