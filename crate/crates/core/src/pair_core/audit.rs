//! Structural audit of a pair: admissibility plus every named property the
//! rest of the library reasons about. Exhaustive on finite carriers,
//! sample-based otherwise.

use std::collections::BTreeSet;

use super::algebra::{Kind, PairAlgebra};
use super::element::Element;
use super::relations::{balances, circ, e_elements};
use super::structure::{characteristic, CharacteristicProfile};

const MAX_TRIPLE_ELEMENTS: usize = 48;
const MAX_QUAD_TANGIBLES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditCheck {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub pair: String,
    pub sample_only: bool,
    pub declared_kind: Kind,
    pub detected_kind: Kind,
    pub kind: Kind,
    pub kind_warning: Option<String>,
    pub characteristic: CharacteristicProfile,
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.holds)
    }

    /// Admissibility and the semiring laws: the minimum for a usable pair.
    pub fn basic_ok(&self) -> bool {
        self.get("admissibility") == Some(true) && self.get("semiring_laws") == Some(true)
    }
}

struct Ctx<'a> {
    alg: &'a PairAlgebra,
    elems: Vec<Element>,
    tangibles: Vec<Element>,
    nulls: Vec<Element>,
    truncated: bool,
}

impl Ctx<'_> {
    fn f(&self, x: &Element) -> String {
        self.alg.format(x)
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        self.alg.add(a, b)
    }
    fn null(&self, a: &Element) -> bool {
        self.alg.is_null(a)
    }
    fn tan(&self, a: &Element) -> bool {
        self.alg.is_tangible(a)
    }
    fn triple_elems(&self) -> &[Element] {
        &self.elems[..self.elems.len().min(MAX_TRIPLE_ELEMENTS)]
    }
    fn quad_tangibles(&self) -> &[Element] {
        &self.tangibles[..self.tangibles.len().min(MAX_QUAD_TANGIBLES)]
    }
}

fn check(name: &'static str, result: Result<(), String>) -> AuditCheck {
    match result {
        Ok(()) => AuditCheck { name, holds: true, witness: None },
        Err(w) => AuditCheck { name, holds: false, witness: Some(w) },
    }
}

fn first_failure<I, T, F>(items: I, mut f: F) -> Result<(), String>
where
    I: IntoIterator<Item = T>,
    F: FnMut(T) -> Option<String>,
{
    for it in items {
        if let Some(w) = f(it) {
            return Err(w);
        }
    }
    Ok(())
}

fn admissibility(c: &Ctx) -> Result<(), String> {
    let alg = c.alg;
    let z = alg.zero();
    if !c.null(&z) {
        return Err("zero is not null".into());
    }
    if c.tan(&z) {
        return Err("zero is tangible".into());
    }
    if !c.tan(&alg.one()) {
        return Err("one is not tangible".into());
    }
    first_failure(c.elems.iter(), |x| {
        (c.tan(x) && c.null(x)).then(|| format!("{} is tangible and null", c.f(x)))
    })?;
    first_failure(c.tangibles.iter(), |a| {
        c.nulls.iter().find_map(|b| {
            let l = alg.mul(a, b);
            let r = alg.mul(b, a);
            (!c.null(&l) || !c.null(&r)).then(|| format!("{}*{} leaves the null layer", c.f(a), c.f(b)))
        })
    })
}

fn semiring_laws(c: &Ctx) -> Result<(), String> {
    let alg = c.alg;
    let (z, one) = (alg.zero(), alg.one());
    first_failure(c.elems.iter(), |x| {
        if c.add(x, &z) != *x {
            return Some(format!("{}+0 != {}", c.f(x), c.f(x)));
        }
        if alg.mul(x, &one) != *x || alg.mul(&one, x) != *x {
            return Some(format!("1 is not a unit for {}", c.f(x)));
        }
        if alg.mul(x, &z) != z || alg.mul(&z, x) != z {
            return Some(format!("0 does not absorb {}", c.f(x)));
        }
        None
    })?;
    let es = c.triple_elems();
    first_failure(es.iter(), |x| {
        es.iter().find_map(|y| {
            if c.add(x, y) != c.add(y, x) {
                return Some(format!("{}+{} not commutative", c.f(x), c.f(y)));
            }
            es.iter().find_map(|w| {
                if c.add(&c.add(x, y), w) != c.add(x, &c.add(y, w)) {
                    return Some(format!("({}+{})+{} not associative", c.f(x), c.f(y), c.f(w)));
                }
                if alg.mul(&alg.mul(x, y), w) != alg.mul(x, &alg.mul(y, w)) {
                    return Some(format!("({}*{})*{} not associative", c.f(x), c.f(y), c.f(w)));
                }
                None
            })
        })
    })
}

fn distributive(c: &Ctx) -> Result<(), String> {
    let alg = c.alg;
    let es = c.triple_elems();
    first_failure(es.iter(), |x| {
        es.iter().find_map(|y| {
            es.iter().find_map(|w| {
                let yw = c.add(y, w);
                let l = alg.mul(x, &yw);
                let r = c.add(&alg.mul(x, y), &alg.mul(x, w));
                let l2 = alg.mul(&yw, x);
                let r2 = c.add(&alg.mul(y, x), &alg.mul(w, x));
                (l != r || l2 != r2)
                    .then(|| format!("{}*({}+{}) not distributive", c.f(x), c.f(y), c.f(w)))
            })
        })
    })
}

fn weak_property_n(c: &Ctx) -> Result<(), String> {
    let alg = c.alg;
    let Some(d) = alg.one_dagger() else {
        return Err("no 1-dagger registered".into());
    };
    let one = alg.one();
    if !c.tan(&d) {
        return Err(format!("1-dagger {} is not tangible", c.f(&d)));
    }
    if !c.null(&c.add(&one, &d)) || c.add(&one, &d) != c.add(&d, &one) {
        return Err(format!("1+{} is not null", c.f(&d)));
    }
    Ok(())
}

fn property_n(c: &Ctx) -> Result<(), String> {
    weak_property_n(c)?;
    first_failure(c.tangibles.iter(), |a| {
        let ac = circ(c.alg, a).ok()?;
        c.tangibles.iter().find_map(|b| {
            let s = c.add(a, b);
            (c.null(&s) && s != ac)
                .then(|| format!("{}+{} = {} differs from {}°", c.f(a), c.f(b), c.f(&s), c.f(a)))
        })
    })
}

fn unique_dagger(c: &Ctx) -> Result<(), String> {
    let one = c.alg.one();
    let cands: Vec<String> = c
        .tangibles
        .iter()
        .filter(|d| c.null(&c.add(&one, d)))
        .map(|d| c.f(d))
        .collect();
    if cands.len() == 1 {
        Ok(())
    } else {
        Err(format!("candidates [{}]", cands.join(",")))
    }
}

fn negation_map(c: &Ctx) -> Result<(), String> {
    let alg = c.alg;
    if !alg.has_negation() {
        return Err("none registered".into());
    }
    let neg = |x: &Element| alg.negate(x).expect("negation registered");
    let one = alg.one();
    let n1 = neg(&one);
    if !c.tan(&n1) || !c.null(&c.add(&one, &n1)) {
        return Err("(-)1 is not a tangible with 1+(-)1 null".into());
    }
    first_failure(c.elems.iter(), |x| {
        if neg(&neg(x)) != *x {
            return Some(format!("(-)(-){} != {}", c.f(x), c.f(x)));
        }
        c.triple_elems().iter().find_map(|y| {
            (neg(&c.add(x, y)) != c.add(&neg(x), &neg(y)))
                .then(|| format!("(-)({}+{}) not additive", c.f(x), c.f(y)))
        })
    })?;
    first_failure(c.tangibles.iter(), |a| {
        c.elems.iter().find_map(|b| {
            let ab = alg.mul(a, b);
            let ok = alg.mul(&neg(a), b) == neg(&ab) && alg.mul(a, &neg(b)) == neg(&ab);
            (!ok).then(|| format!("(-) does not respect {}*{}", c.f(a), c.f(b)))
        })
    })
}

fn weakly_metatangible(c: &Ctx) -> Result<(), String> {
    first_failure(c.tangibles.iter(), |a| {
        c.tangibles.iter().find_map(|b| {
            let s = c.add(a, b);
            (!c.tan(&s) && !c.null(&s)).then(|| format!("{}+{} = {}", c.f(a), c.f(b), c.f(&s)))
        })
    })
}

fn a0_bipotent(c: &Ctx) -> Result<(), String> {
    first_failure(c.tangibles.iter(), |a| {
        c.tangibles.iter().find_map(|b| {
            let s = c.add(a, b);
            (s != *a && s != *b && !c.null(&s)).then(|| format!("{}+{} = {}", c.f(a), c.f(b), c.f(&s)))
        })
    })
}

fn first_kind(c: &Ctx) -> Result<(), String> {
    let one = c.alg.one();
    let s = c.add(&one, &one);
    if c.null(&s) {
        Ok(())
    } else {
        Err(format!("1+1 = {}", c.f(&s)))
    }
}

fn second_kind(c: &Ctx) -> Result<(), String> {
    first_failure(c.tangibles.iter(), |a| {
        let s = c.add(a, a);
        c.null(&s).then(|| format!("{}+{} = {} is null", c.f(a), c.f(a), c.f(&s)))
    })
}

fn strict_second_kind(c: &Ctx) -> Result<(), String> {
    second_kind(c)?;
    first_failure(c.tangibles.iter(), |a| {
        c.tangibles.iter().find_map(|b| {
            let bal = balances(c.alg, a, b).unwrap_or(false);
            (bal && c.null(&c.add(a, b))).then(|| format!("{} ∇ {} with null sum", c.f(a), c.f(b)))
        })
    })
}

fn e_idempotent(c: &Ctx) -> Result<(), String> {
    let (e, _) = e_elements(c.alg).map_err(|e| e.to_string())?;
    let ee = c.add(&e, &e);
    if ee == e {
        Ok(())
    } else {
        Err(format!("e+e = {}", c.f(&ee)))
    }
}

fn two_final(c: &Ctx) -> Result<(), String> {
    let (e, ep) = e_elements(c.alg).map_err(|e| e.to_string())?;
    if e == ep {
        Ok(())
    } else {
        Err(format!("e' = {} but e = {}", c.f(&ep), c.f(&e)))
    }
}

fn circ_reversible(c: &Ctx) -> Result<(), String> {
    weak_property_n(c)?;
    first_failure(c.tangibles.iter(), |a1| {
        let c1 = circ(c.alg, a1).ok()?;
        c.tangibles.iter().find_map(|a2| {
            let c2 = circ(c.alg, a2).ok()?;
            (c1 == c2 && a1 != a2 && c.add(a1, a2) != c1)
                .then(|| format!("{}° = {}° but {}+{} != {}°", c.f(a1), c.f(a2), c.f(a1), c.f(a2), c.f(a1)))
        })
    })
}

fn almost_regular(c: &Ctx) -> Result<(), String> {
    property_n(c)?;
    let ts = c.quad_tangibles();
    first_failure(ts.iter(), |a1| {
        let d1 = c.alg.dagger(a1)?;
        ts.iter().find_map(|a2| {
            ts.iter().find_map(|a3| {
                let s23 = c.add(a2, a3);
                let hit = c.null(&c.add(a1, &s23)) && c.null(&c.add(&d1, &s23)) && !c.null(&s23);
                hit.then(|| format!("a1={} a2={} a3={}", c.f(a1), c.f(a2), c.f(a3)))
            })
        })
    })
}

fn n_transitive(c: &Ctx) -> Result<(), String> {
    let ts = c.quad_tangibles();
    let k = ts.len();
    let rel: Vec<Vec<bool>> = ts
        .iter()
        .map(|a| ts.iter().map(|b| c.null(&c.add(a, b))).collect())
        .collect();
    for i in 0..k {
        for j in (0..k).filter(|&j| rel[i][j]) {
            for l in (0..k).filter(|&l| rel[j][l]) {
                for m in (0..k).filter(|&m| rel[l][m]) {
                    if !rel[i][m] {
                        return Err(format!(
                            "{},{},{},{}",
                            c.f(&ts[i]),
                            c.f(&ts[j]),
                            c.f(&ts[l]),
                            c.f(&ts[m])
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn uniquely_negated(c: &Ctx) -> Result<(), String> {
    let alg = c.alg;
    if !alg.has_negation() {
        return Err("no negation map".into());
    }
    first_failure(c.tangibles.iter(), |a| {
        let na = alg.negate(a)?;
        c.tangibles.iter().find_map(|b| {
            (c.null(&c.add(a, b)) && *b != na).then(|| format!("{}+{} null but {} != (-){}", c.f(a), c.f(b), c.f(b), c.f(a)))
        })
    })
}

fn tangible_summand(c: &Ctx) -> Result<(), String> {
    let non: Vec<&Element> = c.elems.iter().filter(|x| !c.tan(x)).collect();
    first_failure(non.iter(), |x| {
        non.iter().find_map(|y| {
            let s = c.add(x, y);
            c.tan(&s).then(|| format!("{}+{} = {} is tangible", c.f(x), c.f(y), c.f(&s)))
        })
    })
}

fn lzs(c: &Ctx) -> Result<(), String> {
    let z = c.alg.zero();
    if c.alg.is_finite() {
        let mut reach: BTreeSet<Element> = c.tangibles.iter().cloned().collect();
        loop {
            let next: BTreeSet<Element> = reach
                .iter()
                .flat_map(|s| c.tangibles.iter().map(move |a| c.alg.add(s, a)))
                .collect();
            let before = reach.len();
            reach.extend(next);
            if reach.len() == before {
                break;
            }
        }
        return if reach.contains(&z) {
            Err("zero is a sum of tangibles".into())
        } else {
            Ok(())
        };
    }
    first_failure(c.tangibles.iter(), |a| {
        c.tangibles.iter().find_map(|b| {
            (c.add(a, b) == z).then(|| format!("{}+{} = 0", c.f(a), c.f(b)))
        })
    })
}

fn additively_idempotent(c: &Ctx) -> Result<(), String> {
    first_failure(c.elems.iter(), |x| {
        (c.add(x, x) != *x).then(|| format!("{}+{} != {}", c.f(x), c.f(x), c.f(x)))
    })
}

fn t_plus_a0_covers(c: &Ctx) -> Result<(), String> {
    let mut t0 = vec![c.alg.zero()];
    t0.extend(c.tangibles.iter().cloned());
    let sums: BTreeSet<Element> = t0
        .iter()
        .flat_map(|a| c.nulls.iter().map(move |z| c.alg.add(a, z)))
        .collect();
    first_failure(c.elems.iter(), |x| (!sums.contains(x)).then(|| c.f(x)))
}

fn a0_additively_closed(c: &Ctx) -> Result<(), String> {
    first_failure(c.nulls.iter(), |x| {
        c.nulls.iter().find_map(|y| {
            let s = c.add(x, y);
            (!c.null(&s)).then(|| format!("{}+{} = {}", c.f(x), c.f(y), c.f(&s)))
        })
    })
}

/// Run every check.
pub fn axiom_audit(alg: &PairAlgebra) -> AuditReport {
    let elems = alg.sample();
    let tangibles: Vec<Element> = match alg.tangibles() {
        Some(ts) => ts.to_vec(),
        None => elems.iter().filter(|x| alg.is_tangible(x)).cloned().collect(),
    };
    let nulls = elems.iter().filter(|x| alg.is_null(x)).cloned().collect();
    let truncated = elems.len() > MAX_TRIPLE_ELEMENTS || tangibles.len() > MAX_QUAD_TANGIBLES;
    let c = Ctx { alg, elems, tangibles, nulls, truncated };

    let metatangible = weakly_metatangible(&c).and_then(|_| property_n(&c));
    let bipotent = metatangible.clone().and_then(|_| a0_bipotent(&c));
    let two_f = two_final(&c);
    let rev = circ_reversible(&c);
    let tropical = bipotent.clone().and(two_f.clone()).and(rev.clone());

    let checks = vec![
        check("admissibility", admissibility(&c)),
        check("semiring_laws", semiring_laws(&c)),
        check("distributive", distributive(&c)),
        check("weak_property_n", weak_property_n(&c)),
        check("property_n", property_n(&c)),
        check("unique_dagger", unique_dagger(&c)),
        check("negation_map", negation_map(&c)),
        check("weakly_metatangible", weakly_metatangible(&c)),
        check("metatangible", metatangible),
        check("a0_bipotent", bipotent),
        check("first_kind", first_kind(&c)),
        check("second_kind", second_kind(&c)),
        check("strict_second_kind", strict_second_kind(&c)),
        check("e_idempotent", e_idempotent(&c)),
        check("two_final", two_f),
        check("circ_reversible", rev),
        check("tropical_type", tropical),
        check("almost_regular", almost_regular(&c)),
        check("n_transitive", n_transitive(&c)),
        check("uniquely_negated", uniquely_negated(&c)),
        check("tangible_summand", tangible_summand(&c)),
        check("lzs", lzs(&c)),
        check("additively_idempotent", additively_idempotent(&c)),
        check("t_plus_a0_covers", t_plus_a0_covers(&c)),
        check("a0_additively_closed", a0_additively_closed(&c)),
    ];

    let declared = alg.declared_kind();
    let detected = alg.detected_kind();
    let kind_warning = (declared != Kind::Unknown && declared != detected)
        .then(|| format!("declared {declared} kind but detected {detected}"));
    AuditReport {
        pair: alg.id().to_string(),
        sample_only: !alg.is_finite() || c.truncated,
        declared_kind: declared,
        detected_kind: detected,
        kind: alg.kind(),
        kind_warning,
        characteristic: characteristic(alg),
        checks,
    }
}
