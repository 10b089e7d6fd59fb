//! Hyperpairs: nonempty subsets of a finite hypergroup, with the null layer
//! consisting of the sets that contain the zero atom.

use std::any::Any;
use std::collections::BTreeSet;

use super::table::cyclic_name;
use crate::error::{Error, Result};
use crate::pair_core::{split_top_level, Alg, Element, PairAlgebra, PairOps};

const CARRIER_CAP: usize = 4096;

/// Coset data of a Krasner quotient F_p / G.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub p: u32,
    /// Residues in each atom's class; class 0 is {0}.
    pub classes: Vec<Vec<u32>>,
}

/// A finite hyperfield lifted to its power-set pair.
#[derive(Clone, Debug)]
pub struct HyperPair {
    pub id: String,
    /// Atom 0 is the zero, atom 1 the unit.
    pub names: Vec<String>,
    /// Row-major table of atom hypersums as bitmasks.
    pub hadd: Vec<u64>,
    /// Row-major table of atom products.
    pub amul: Vec<u16>,
    pub aneg: Vec<u16>,
    pub quotient: Option<Quotient>,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

impl HyperPair {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn into_alg(self) -> Alg {
        PairAlgebra::new(self)
    }

    fn mask(a: &Element) -> u64 {
        match a {
            Element::Set(m) => *m,
            other => panic!("hyperpair given {other:?}"),
        }
    }

    pub fn atom_sum(&self, x: usize, y: usize) -> u64 {
        self.hadd[x * self.size() + y]
    }

    fn set_add(&self, s: u64, t: u64) -> u64 {
        let mut out = 0;
        for x in bits(s) {
            for y in bits(t) {
                out |= self.atom_sum(x, y);
            }
        }
        out
    }

    fn set_mul(&self, s: u64, t: u64) -> u64 {
        let mut out = 0;
        for x in bits(s) {
            for y in bits(t) {
                out |= 1 << self.amul[x * self.size() + y];
            }
        }
        out
    }

    /// Associativity of the atom hyperaddition, checked on all triples.
    pub fn is_associative(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.set_add(self.atom_sum(x, y), 1 << z) == self.set_add(1 << x, self.atom_sum(y, z))
                })
            })
        })
    }

    fn atom_index(&self, tok: &str) -> Option<usize> {
        self.names
            .iter()
            .position(|n| n == tok)
            .or_else(|| tok.parse::<usize>().ok().filter(|&i| i < self.size()))
    }
}

impl PairOps for HyperPair {
    fn id(&self) -> String {
        self.id.clone()
    }
    fn zero(&self) -> Element {
        Element::Set(1)
    }
    fn one(&self) -> Element {
        Element::Set(2)
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        Element::Set(self.set_add(Self::mask(a), Self::mask(b)))
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        Element::Set(self.set_mul(Self::mask(a), Self::mask(b)))
    }
    fn is_tangible(&self, a: &Element) -> bool {
        let m = Self::mask(a);
        m.count_ones() == 1 && m & 1 == 0
    }
    fn is_null(&self, a: &Element) -> bool {
        Self::mask(a) & 1 == 1
    }
    fn one_dagger(&self) -> Option<Element> {
        Some(Element::Set(1 << self.aneg[1]))
    }
    fn negate(&self, a: &Element) -> Option<Element> {
        Some(Element::Set(
            bits(Self::mask(a)).fold(0, |acc, x| acc | 1 << self.aneg[x]),
        ))
    }
    fn tangibles(&self) -> Option<Vec<Element>> {
        Some((1..self.size()).map(|i| Element::Set(1 << i)).collect())
    }
    fn carrier(&self) -> Option<Vec<Element>> {
        let mut set: BTreeSet<u64> = (0..self.size()).map(|i| 1u64 << i).collect();
        loop {
            let cur: Vec<u64> = set.iter().copied().collect();
            let mut grew = false;
            for &s in &cur {
                for &t in &cur {
                    for r in [self.set_add(s, t), self.set_mul(s, t)] {
                        if set.insert(r) {
                            grew = true;
                        }
                    }
                }
                if set.len() > CARRIER_CAP {
                    return None;
                }
            }
            if !grew {
                break;
            }
        }
        Some(set.into_iter().map(Element::Set).collect())
    }
    fn sample(&self) -> Vec<Element> {
        let n = self.size().min(8);
        let mut out: BTreeSet<u64> = (0..n).map(|i| 1u64 << i).collect();
        for x in 0..n {
            for y in 0..n {
                out.insert(self.atom_sum(x, y));
            }
        }
        out.into_iter().map(Element::Set).collect()
    }
    fn inverse(&self, a: &Element) -> Option<Element> {
        let m = Self::mask(a);
        if !self.is_tangible(a) {
            return None;
        }
        let x = m.trailing_zeros() as usize;
        (1..self.size())
            .find(|&y| self.amul[x * self.size() + y] == 1)
            .map(|y| Element::Set(1 << y))
    }
    fn contains(&self, a: &Element) -> bool {
        matches!(a, Element::Set(m) if *m != 0 && (self.size() == 64 || *m >> self.size() == 0))
    }
    fn parse(&self, s: &str) -> Result<Element> {
        let bad = |t: &str| Error::Parse(format!("unknown atom `{t}` for {}", self.id));
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let mut m = 0u64;
            for tok in split_top_level(inner, ',') {
                if tok.is_empty() {
                    continue;
                }
                m |= 1 << self.atom_index(tok).ok_or_else(|| bad(tok))?;
            }
            if m == 0 {
                return Err(Error::Parse("hyperpair elements are nonempty".into()));
            }
            return Ok(Element::Set(m));
        }
        let i = self.names.iter().position(|n| n == s).ok_or_else(|| bad(s))?;
        Ok(Element::Set(1 << i))
    }
    fn format(&self, a: &Element) -> String {
        let m = Self::mask(a);
        let names: Vec<&str> = bits(m).map(|i| self.names[i].as_str()).collect();
        if names.len() == 1 {
            names[0].to_string()
        } else {
            format!("{{{}}}", names.join(","))
        }
    }
    fn as_any(&self) -> &dyn Any {
        self
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Krasner quotient F_p / G, G generated by `gens`.
pub fn krasner(p: u32, gens: &[u32]) -> Result<HyperPair> {
    let spec = format!(
        "krasner:{p}:{}",
        gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
    );
    if !is_prime(p) || p > 61 {
        return Err(Error::BadSpecifier { spec, reason: "field order must be a prime <= 61".into() });
    }
    if gens.iter().any(|g| g % p == 0) {
        return Err(Error::NotASubgroup(spec));
    }
    let mut group: BTreeSet<u32> = BTreeSet::from([1]);
    loop {
        let next: BTreeSet<u32> = group
            .iter()
            .flat_map(|a| gens.iter().map(move |g| a * (g % p) % p))
            .collect();
        let before = group.len();
        group.extend(next);
        if group.len() == before {
            break;
        }
    }
    let mut classes: Vec<Vec<u32>> = vec![vec![0]];
    let mut class_of = vec![0usize; p as usize];
    for r in 1..p {
        if r != 1 && class_of[r as usize] != 0 {
            continue;
        }
        let idx = classes.len();
        let mut cls: Vec<u32> = group.iter().map(|g| r * g % p).collect();
        cls.sort_unstable();
        for &c in &cls {
            class_of[c as usize] = idx;
        }
        classes.push(cls);
    }
    let n = classes.len();
    let mut hadd = vec![0u64; n * n];
    let mut amul = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut m = 0u64;
            for a in &classes[x] {
                for b in &classes[y] {
                    m |= 1 << class_of[((a + b) % p) as usize];
                }
            }
            hadd[x * n + y] = m;
            amul[x * n + y] = class_of[(classes[x][0] * classes[y][0] % p) as usize] as u16;
        }
    }
    let aneg = (0..n)
        .map(|x| class_of[((p - classes[x][0]) % p) as usize] as u16)
        .collect();
    let names = classes.iter().map(|c| c[0].to_string()).collect();
    let subgroup: Vec<String> = group.iter().map(|g| g.to_string()).collect();
    Ok(HyperPair {
        id: format!("krasner:{p}:{}", subgroup.join(",")),
        names,
        hadd,
        amul,
        aneg,
        quotient: Some(Quotient { p, classes }),
    })
}

fn cyclic_hyper(
    id: String,
    n: usize,
    sum: impl Fn(usize, usize, usize) -> u64,
) -> HyperPair {
    let size = n + 1;
    let full: u64 = (1u64 << size) - 1;
    let mut hadd = vec![0u64; size * size];
    let mut amul = vec![0u16; size * size];
    for x in 0..size {
        for y in 0..size {
            hadd[x * size + y] = match (x, y) {
                (0, y) => 1 << y,
                (x, 0) => 1 << x,
                (x, y) => sum(x, y, full as usize) & full,
            };
            amul[x * size + y] = if x == 0 || y == 0 { 0 } else { (1 + (x - 1 + y - 1) % n) as u16 };
        }
    }
    let mut names = vec!["0".to_string()];
    names.extend((0..n).map(|i| cyclic_name("g", i)));
    HyperPair { id, names, hadd, amul, aneg: (0..size as u16).collect(), quotient: None }
}

/// hex(i): a ⊞ a = H \ {a}, a1 ⊞ a2 = {a1, a2}.
pub fn hex1(n: usize) -> Result<HyperPair> {
    if !(1..=62).contains(&n) {
        return Err(Error::BadSpecifier { spec: format!("hyper:hex1:{n}"), reason: "group order must lie in 1..=62".into() });
    }
    Ok(cyclic_hyper(format!("hyper:hex1:{n}"), n, |x, y, full| {
        if x == y {
            (full as u64) & !(1 << x)
        } else {
            1 << x | 1 << y
        }
    }))
}

/// hex(ii): a ⊞ a = {0, a}, a1 ⊞ a2 = H \ {a1, a2, 0}.
pub fn hex2(n: usize) -> Result<HyperPair> {
    // below order 4 the hyperaddition is not associative
    if !(4..=62).contains(&n) {
        return Err(Error::BadSpecifier { spec: format!("hyper:hex2:{n}"), reason: "group order must lie in 4..=62".into() });
    }
    Ok(cyclic_hyper(format!("hyper:hex2:{n}"), n, |x, y, full| {
        if x == y {
            1 | 1 << x
        } else {
            (full as u64) & !(1 << x | 1 << y | 1)
        }
    }))
}

/// Weak-sign hyperfield (G x {±1}) ∪ {0} over G = C_n.
pub fn weaksign(n: usize) -> Result<HyperPair> {
    // below order 3 the hyperaddition is not associative
    if !(3..=31).contains(&n) {
        return Err(Error::BadSpecifier { spec: format!("hyper:weaksign:{n}"), reason: "group order must lie in 3..=31".into() });
    }
    let size = 2 * n + 1;
    let full: u64 = (1u64 << size) - 1;
    // atom 1 + 2i + s is (g^i, sign s), s = 0 for + and 1 for -
    let g = |x: usize| (x - 1) / 2;
    let s = |x: usize| (x - 1) % 2;
    let neg = |x: usize| if x == 0 { 0 } else { x + 1 - 2 * s(x) };
    let both = |i: usize| 1u64 << (1 + 2 * i) | 1u64 << (2 + 2 * i);
    let mut hadd = vec![0u64; size * size];
    let mut amul = vec![0u16; size * size];
    for x in 0..size {
        for y in 0..size {
            hadd[x * size + y] = match (x, y) {
                (0, y) => 1 << y,
                (x, 0) => 1 << x,
                (x, y) if g(x) != g(y) => both(g(x)) | both(g(y)),
                (x, y) if x == y => full & !(1 << x | 1 << neg(x) | 1),
                (x, _) => full & !(1 << x | 1 << neg(x)),
            };
            amul[x * size + y] = if x == 0 || y == 0 {
                0
            } else {
                (1 + 2 * ((g(x) + g(y)) % n) + (s(x) ^ s(y))) as u16
            };
        }
    }
    let mut names = vec!["0".to_string()];
    for i in 0..n {
        let base = cyclic_name("g", i);
        names.push(base.clone());
        names.push(format!("-{base}"));
    }
    Ok(HyperPair {
        id: format!("hyper:weaksign:{n}"),
        names,
        hadd,
        amul,
        aneg: (0..size).map(|x| neg(x) as u16).collect(),
        quotient: None,
    })
}
