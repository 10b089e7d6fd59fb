//! Finite pairs given by explicit addition and multiplication tables.

use std::any::Any;

use crate::error::{Error, Result};
use crate::pair_core::{Alg, Element, Kind, PairAlgebra, PairOps};

/// A finite pair stored as tables over named atoms.
#[derive(Clone, Debug)]
pub struct TablePair {
    pub id: String,
    pub names: Vec<String>,
    /// Row-major `n x n` tables of atom indices.
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
    pub tangible: Vec<bool>,
    pub null: Vec<bool>,
    pub zero: u16,
    pub one: u16,
    pub one_dagger: Option<u16>,
    pub negation: Option<Vec<u16>>,
    pub declared_kind: Kind,
}

impl TablePair {
    /// Tabulate closures over `names.len()` atoms. Atom 0 is the zero and
    /// atom 1 the unit.
    pub fn tabulate(
        id: impl Into<String>,
        names: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        tangible: impl Fn(usize) -> bool,
        null: impl Fn(usize) -> bool,
    ) -> TablePair {
        let n = names.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            (0..n * n).map(|k| f(k / n, k % n) as u16).collect::<Vec<_>>()
        };
        TablePair {
            id: id.into(),
            add: table(&add),
            mul: table(&mul),
            tangible: (0..n).map(&tangible).collect(),
            null: (0..n).map(&null).collect(),
            names,
            zero: 0,
            one: 1,
            one_dagger: None,
            negation: None,
            declared_kind: Kind::Unknown,
        }
    }

    pub fn with_dagger(mut self, d: Option<usize>) -> Self {
        self.one_dagger = d.map(|x| x as u16);
        self
    }

    pub fn with_negation(mut self, neg: Option<Vec<usize>>) -> Self {
        self.negation = neg.map(|v| v.into_iter().map(|x| x as u16).collect());
        self
    }

    pub fn with_kind(mut self, k: Kind) -> Self {
        self.declared_kind = k;
        self
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn into_alg(self) -> Alg {
        PairAlgebra::new(self)
    }

    fn idx(&self, a: &Element) -> usize {
        match a {
            Element::Atom(i) => *i as usize,
            other => panic!("table pair {} given non-atom {other:?}", self.id),
        }
    }

    /// Index of a named atom.
    pub fn atom(&self, name: &str) -> Option<Element> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Element::Atom(i as u16))
    }
}

impl PairOps for TablePair {
    fn id(&self) -> String {
        self.id.clone()
    }
    fn zero(&self) -> Element {
        Element::Atom(self.zero)
    }
    fn one(&self) -> Element {
        Element::Atom(self.one)
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        Element::Atom(self.add[self.idx(a) * self.size() + self.idx(b)])
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        Element::Atom(self.mul[self.idx(a) * self.size() + self.idx(b)])
    }
    fn is_tangible(&self, a: &Element) -> bool {
        self.tangible[self.idx(a)]
    }
    fn is_null(&self, a: &Element) -> bool {
        self.null[self.idx(a)]
    }
    fn one_dagger(&self) -> Option<Element> {
        self.one_dagger.map(Element::Atom)
    }
    fn negate(&self, a: &Element) -> Option<Element> {
        self.negation
            .as_ref()
            .map(|n| Element::Atom(n[self.idx(a)]))
    }
    fn tangibles(&self) -> Option<Vec<Element>> {
        Some(
            (0..self.size())
                .filter(|&i| self.tangible[i])
                .map(|i| Element::Atom(i as u16))
                .collect(),
        )
    }
    fn carrier(&self) -> Option<Vec<Element>> {
        Some((0..self.size()).map(|i| Element::Atom(i as u16)).collect())
    }
    fn declared_kind(&self) -> Kind {
        self.declared_kind
    }
    fn contains(&self, a: &Element) -> bool {
        matches!(a, Element::Atom(i) if (*i as usize) < self.size())
    }
    fn parse(&self, s: &str) -> Result<Element> {
        self.atom(s)
            .ok_or_else(|| Error::Parse(format!("unknown element `{s}` for {}", self.id)))
    }
    fn format(&self, a: &Element) -> String {
        match a {
            Element::Atom(i) if (*i as usize) < self.size() => self.names[*i as usize].clone(),
            other => format!("{other:?}"),
        }
    }
    fn as_any(&self) -> &dyn Any {
        self
    }
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Sign semiring {0, 1, -1, inf}.
pub fn sign() -> TablePair {
    // 0 -> 0, 1 -> 1, 2 -> -1, 3 -> inf
    let add = |a: usize, b: usize| match (a, b) {
        (0, x) | (x, 0) => x,
        (3, _) | (_, 3) => 3,
        (x, y) if x == y => x,
        _ => 3,
    };
    let mul = |a: usize, b: usize| match (a, b) {
        (0, _) | (_, 0) => 0,
        (3, _) | (_, 3) => 3,
        (x, y) if x == y => 1,
        _ => 2,
    };
    TablePair::tabulate("sign", names(&["0", "1", "-1", "inf"]), add, mul, |i| i == 1 || i == 2, |i| i == 0 || i == 3)
        .with_dagger(Some(2))
        .with_negation(Some(vec![0, 2, 1, 3]))
        .with_kind(Kind::Second)
}

/// Boolean semifield {0, 1} with A0 = {0}.
pub fn boolean() -> TablePair {
    TablePair::tabulate("boolean", names(&["0", "1"]), |a, b| a | b, |a, b| a & b, |i| i == 1, |i| i == 0)
        .with_kind(Kind::Second)
}

/// Super-Boolean {0, 1, e}: 1+1 = e, e additively absorbing.
pub fn superboolean() -> TablePair {
    let add = |a: usize, b: usize| match (a, b) {
        (0, x) | (x, 0) => x,
        _ => 2,
    };
    let mul = |a: usize, b: usize| match (a, b) {
        (0, _) | (_, 0) => 0,
        (1, 1) => 1,
        _ => 2,
    };
    TablePair::tabulate("superboolean", names(&["0", "1", "e"]), add, mul, |i| i == 1, |i| i != 1)
        .with_dagger(Some(1))
        .with_negation(Some(vec![0, 1, 2]))
        .with_kind(Kind::First)
}

/// Counting pair on {0..q}: clipped sum and product, T = {1}, A0 = {0, q}.
pub fn counting(q: usize) -> Result<TablePair> {
    if !(2..=1000).contains(&q) {
        return Err(Error::BadSpecifier {
            spec: format!("counting:{q}"),
            reason: "q must lie in 2..=1000".into(),
        });
    }
    let names = (0..=q).map(|i| i.to_string()).collect();
    let t = TablePair::tabulate(
        format!("counting:{q}"),
        names,
        |a, b| (a + b).min(q),
        |a, b| (a * b).min(q),
        |i| i == 1,
        |i| i == 0 || i == q,
    );
    let dagger = (q == 2).then_some(1);
    Ok(t.with_dagger(dagger).with_negation(dagger.map(|_| (0..=q).collect())))
}

/// ℕ_{p,q}: {0..p+q-1} with (p+q-1)+1 = q.
pub fn npq(p: usize, q: usize) -> Result<TablePair> {
    if p == 0 || p + q < 2 || p + q > 1000 {
        return Err(Error::BadSpecifier {
            spec: format!("npq:{p}:{q}"),
            reason: "need p >= 1 and 2 <= p+q <= 1000".into(),
        });
    }
    let n = p + q;
    let reduce = move |s: usize| if s < n { s } else { q + (s - q) % p };
    let names = (0..n).map(|i| i.to_string()).collect();
    let t = TablePair::tabulate(
        format!("npq:{p}:{q}"),
        names,
        move |a, b| reduce(a + b),
        move |a, b| reduce(a * b),
        |i| i == 1,
        |i| i == 0,
    );
    let dagger = (reduce(2) == 0).then_some(1);
    Ok(t.with_dagger(dagger).with_negation(dagger.map(|_| (0..n).collect())))
}

/// Name of g^i in a cyclic group written multiplicatively.
pub(crate) fn cyclic_name(letter: &str, i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => letter.to_string(),
        k => format!("{letter}{k}"),
    }
}

/// Minimal A0-bipotent pair over T = C_n: A = T ∪ {0, inf},
/// a+b = inf for a != b, a+a = inf (first kind) or a (second kind).
pub fn minimal(first_kind: bool, n: usize) -> Result<TablePair> {
    if !(1..=200).contains(&n) {
        return Err(Error::BadSpecifier {
            spec: format!("minimal:{}:{n}", if first_kind { "first" } else { "second" }),
            reason: "group order must lie in 1..=200".into(),
        });
    }
    let inf = n + 1;
    let mut nm: Vec<String> = vec!["0".into()];
    nm.extend((0..n).map(|i| cyclic_name("g", i)));
    nm.push("inf".into());
    let add = move |a: usize, b: usize| match (a, b) {
        (0, x) | (x, 0) => x,
        (x, y) if x == inf || y == inf => inf,
        (x, y) if x == y => {
            if first_kind {
                inf
            } else {
                x
            }
        }
        _ => inf,
    };
    let mul = move |a: usize, b: usize| match (a, b) {
        (0, _) | (_, 0) => 0,
        (x, y) if x == inf || y == inf => inf,
        (x, y) => 1 + ((x - 1) + (y - 1)) % n,
    };
    let kind_name = if first_kind { "first" } else { "second" };
    let t = TablePair::tabulate(
        format!("minimal:{kind_name}:{n}"),
        nm,
        add,
        mul,
        move |i| i >= 1 && i <= n,
        move |i| i == 0 || i == inf,
    );
    let times = |k: usize| -> Vec<usize> {
        (0..=inf)
            .map(|i| if i == 0 || i == inf { i } else { 1 + ((i - 1) + k) % n })
            .collect()
    };
    Ok(if first_kind {
        t.with_dagger(Some(1))
            .with_negation(Some((0..=inf).collect()))
            .with_kind(Kind::First)
    } else if n == 1 {
        t.with_kind(Kind::Second)
    } else if n % 2 == 0 {
        t.with_dagger(Some(1 + n / 2))
            .with_negation(Some(times(n / 2)))
            .with_kind(Kind::Second)
    } else {
        t.with_dagger(Some(2)).with_kind(Kind::Second)
    })
}
