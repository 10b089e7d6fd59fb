//! Supertropical max-plus pair over exact rationals.

use std::any::Any;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::pair_core::{Element, Kind, Layer, ModulusValue, PairOps, Q};

#[derive(Clone, Copy, Debug, Default)]
pub struct Supertropical;

pub fn zero() -> Element {
    Element::layered(Layer::Zero, Q::from_integer(0))
}

pub fn tangible(v: Q) -> Element {
    Element::layered(Layer::Tangible, v)
}

pub fn ghost(v: Q) -> Element {
    Element::layered(Layer::Ghost, v)
}

pub fn tangible_int(v: i64) -> Element {
    tangible(Q::from_integer(v))
}

pub fn ghost_int(v: i64) -> Element {
    ghost(Q::from_integer(v))
}

fn parts(a: &Element) -> (Layer, Q) {
    match a {
        Element::Layered(l, v) => (*l, *v),
        other => panic!("supertropical given {other:?}"),
    }
}

fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => s.trim().parse::<i64>().map(Q::from_integer).map_err(|_| bad()),
    }
}

impl PairOps for Supertropical {
    fn id(&self) -> String {
        "supertropical".into()
    }
    fn zero(&self) -> Element {
        zero()
    }
    fn one(&self) -> Element {
        tangible_int(0)
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        let (la, va) = parts(a);
        let (lb, vb) = parts(b);
        match (la, lb) {
            (Layer::Zero, _) => b.clone(),
            (_, Layer::Zero) => a.clone(),
            _ => match va.cmp(&vb) {
                Ordering::Greater => a.clone(),
                Ordering::Less => b.clone(),
                Ordering::Equal => ghost(va),
            },
        }
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        let (la, va) = parts(a);
        let (lb, vb) = parts(b);
        match (la, lb) {
            (Layer::Zero, _) | (_, Layer::Zero) => zero(),
            (Layer::Tangible, Layer::Tangible) => tangible(va + vb),
            _ => ghost(va + vb),
        }
    }
    fn is_tangible(&self, a: &Element) -> bool {
        parts(a).0 == Layer::Tangible
    }
    fn is_null(&self, a: &Element) -> bool {
        parts(a).0 != Layer::Tangible
    }
    fn one_dagger(&self) -> Option<Element> {
        Some(self.one())
    }
    fn negate(&self, a: &Element) -> Option<Element> {
        Some(a.clone())
    }
    fn tangibles(&self) -> Option<Vec<Element>> {
        None
    }
    fn sample(&self) -> Vec<Element> {
        let vals = [Q::from_integer(-1), Q::from_integer(0), Q::new(1, 2), Q::from_integer(2)];
        let mut out = vec![zero()];
        for v in vals {
            out.push(tangible(v));
            out.push(ghost(v));
        }
        out
    }
    fn modulus(&self, a: &Element) -> Option<ModulusValue> {
        let (l, v) = parts(a);
        Some(match l {
            Layer::Zero => ModulusValue::Bottom,
            _ => ModulusValue::Value(v),
        })
    }
    fn declared_kind(&self) -> Kind {
        Kind::First
    }
    fn inverse(&self, a: &Element) -> Option<Element> {
        let (l, v) = parts(a);
        (l == Layer::Tangible).then(|| tangible(-v))
    }
    fn lift(&self, a: &Element) -> Option<Element> {
        let (l, v) = parts(a);
        Some(match l {
            Layer::Zero => zero(),
            _ => tangible(v),
        })
    }
    fn surpasses_rule(&self, b1: &Element, b2: &Element) -> Option<bool> {
        if b1 == b2 {
            return Some(true);
        }
        let (l2, v2) = parts(b2);
        let (l1, v1) = parts(b1);
        Some(l2 == Layer::Ghost && (l1 == Layer::Zero || v2 >= v1))
    }
    fn contains(&self, a: &Element) -> bool {
        match a {
            Element::Layered(Layer::Zero, v) => *v == Q::from_integer(0),
            Element::Layered(..) => true,
            _ => false,
        }
    }
    fn parse(&self, s: &str) -> Result<Element> {
        if s == "-inf" {
            return Ok(zero());
        }
        match s.strip_suffix('g') {
            Some(v) => Ok(ghost(parse_rational(v)?)),
            None => Ok(tangible(parse_rational(s)?)),
        }
    }
    fn format(&self, a: &Element) -> String {
        match parts(a) {
            (Layer::Zero, _) => "-inf".into(),
            (Layer::Tangible, v) => format!("{v}"),
            (Layer::Ghost, v) => format!("{v}g"),
        }
    }
    fn as_any(&self) -> &dyn Any {
        self
    }
}
