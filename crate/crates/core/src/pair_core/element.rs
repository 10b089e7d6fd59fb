use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

/// Exact rationals used by the supertropical instance.
pub type Q = Ratio<i64>;

/// Layer tag of a supertropical element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Zero,
    Tangible,
    Ghost,
}

/// A carrier element. The payload shape depends on the owning algebra;
/// arithmetic always goes through that algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Index into a finite table.
    Atom(u16),
    /// Layered max-plus value. The value of a `Layer::Zero` element is always 0.
    Layered(Layer, Q),
    /// Ordered pair of the doubled construction.
    Pair(Box<(Element, Element)>),
    /// Subset of a finite atom set.
    Set(u64),
}

impl Element {
    pub fn pair(pos: Element, neg: Element) -> Element {
        Element::Pair(Box::new((pos, neg)))
    }

    pub fn as_pair(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }

    pub fn layered(layer: Layer, value: Q) -> Element {
        match layer {
            Layer::Zero => Element::Layered(Layer::Zero, Q::from_integer(0)),
            l => Element::Layered(l, value),
        }
    }
}

/// Value of the modulus map: a totally ordered monoid with a bottom.
///
/// The monoid operation is written multiplicatively but, for the
/// supertropical instance, it is addition of rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModulusValue {
    Bottom,
    Value(Q),
}

impl ModulusValue {
    pub fn mul(self, other: ModulusValue) -> ModulusValue {
        match (self, other) {
            (ModulusValue::Value(a), ModulusValue::Value(b)) => ModulusValue::Value(a + b),
            _ => ModulusValue::Bottom,
        }
    }

    pub fn inv(self) -> Option<ModulusValue> {
        match self {
            ModulusValue::Value(a) => Some(ModulusValue::Value(-a)),
            ModulusValue::Bottom => None,
        }
    }
}

impl PartialOrd for ModulusValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ModulusValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ModulusValue::Bottom, ModulusValue::Bottom) => Ordering::Equal,
            (ModulusValue::Bottom, _) => Ordering::Less,
            (_, ModulusValue::Bottom) => Ordering::Greater,
            (ModulusValue::Value(a), ModulusValue::Value(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ModulusValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModulusValue::Bottom => write!(f, "-inf"),
            ModulusValue::Value(q) => write!(f, "{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_order_puts_bottom_first() {
        let a = ModulusValue::Value(Q::from_integer(-5));
        assert!(ModulusValue::Bottom < a);
        assert_eq!(a.mul(ModulusValue::Bottom), ModulusValue::Bottom);
        assert_eq!(a.inv().unwrap(), ModulusValue::Value(Q::from_integer(5)));
    }

    #[test]
    fn zero_layer_is_canonical() {
        let z = Element::layered(Layer::Zero, Q::new(3, 2));
        assert_eq!(z, Element::layered(Layer::Zero, Q::from_integer(0)));
    }
}
