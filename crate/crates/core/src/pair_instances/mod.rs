//! Concrete pairs and the specifier grammar that names them.
//!
//! Specifiers: `sign`, `boolean`, `superboolean`, `supertropical`,
//! `counting:<q>`, `npq:<p>:<q>`, `minimal:<first|second>:<n>`,
//! `doubled:<spec>`, `krasner:<p>:<g1,g2,..>`, `hyper:<hex1|hex2|weaksign>:<n>`,
//! `powerset-symdiff:<n>`.

pub mod doubled;
pub mod hyper;
pub mod supertropical;
pub mod symdiff;
pub mod table;

use crate::error::{Error, Result};
use crate::pair_core::Alg;

pub use doubled::{base_of, embed, make_doubled, project, project_negated, switch, Doubled};
pub use hyper::{HyperPair, Quotient};
pub use supertropical::Supertropical;
pub use symdiff::Symdiff;
pub use table::TablePair;

pub fn make_sign_pair() -> Alg {
    table::sign().into_alg()
}

pub fn make_boolean() -> Alg {
    table::boolean().into_alg()
}

pub fn make_superboolean() -> Alg {
    table::superboolean().into_alg()
}

pub fn make_supertropical() -> Alg {
    crate::pair_core::PairAlgebra::new(Supertropical)
}

/// Table-backed special pairs: super-Boolean, Boolean, minimal, counting, ℕ_{p,q}.
pub fn make_special(spec: &str) -> Result<Alg> {
    match from_spec(spec)? {
        a if a.instance::<TablePair>().is_some() => Ok(a),
        _ => Err(bad(spec, "not a table-backed pair")),
    }
}

/// Hyperpairs and the power-set symmetric-difference pair.
pub fn make_hyperpair(spec: &str) -> Result<Alg> {
    let a = from_spec(spec)?;
    if a.instance::<HyperPair>().is_some() || a.instance::<Symdiff>().is_some() {
        Ok(a)
    } else {
        Err(bad(spec, "not a hyperpair"))
    }
}

fn bad(spec: &str, reason: &str) -> Error {
    Error::BadSpecifier { spec: spec.to_string(), reason: reason.to_string() }
}

fn num<T: std::str::FromStr>(spec: &str, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| bad(spec, &format!("`{s}` is not a number")))
}

/// Build the pair named by a specifier string.
pub fn from_spec(spec: &str) -> Result<Alg> {
    let spec = spec.trim();
    if let Some(inner) = spec.strip_prefix("doubled:") {
        return Ok(make_doubled(&from_spec(inner)?));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let alg = match parts.as_slice() {
        ["sign"] => make_sign_pair(),
        ["boolean"] => make_boolean(),
        ["superboolean"] => make_superboolean(),
        ["supertropical"] => make_supertropical(),
        ["counting", q] => table::counting(num(spec, q)?)?.into_alg(),
        ["npq", p, q] => table::npq(num(spec, p)?, num(spec, q)?)?.into_alg(),
        ["minimal", k, n] => {
            let first = match *k {
                "first" => true,
                "second" => false,
                _ => return Err(bad(spec, "kind must be `first` or `second`")),
            };
            table::minimal(first, num(spec, n)?)?.into_alg()
        }
        ["krasner", p, gens] => {
            let gens = gens
                .split(',')
                .map(|g| num::<u32>(spec, g))
                .collect::<Result<Vec<_>>>()?;
            if gens.is_empty() {
                return Err(bad(spec, "no generators"));
            }
            hyper::krasner(num(spec, p)?, &gens)?.into_alg()
        }
        ["hyper", name, n] => {
            let n = num(spec, n)?;
            match *name {
                "hex1" => hyper::hex1(n)?,
                "hex2" => hyper::hex2(n)?,
                "weaksign" => hyper::weaksign(n)?,
                _ => return Err(bad(spec, "unknown hyperfield table")),
            }
            .into_alg()
        }
        ["powerset-symdiff", n] => Symdiff::new(num(spec, n)?)?.into_alg(),
        _ => return Err(bad(spec, "unrecognized specifier")),
    };
    Ok(alg)
}

/// Registered instances with a one-line description.
pub fn registry() -> Vec<(&'static str, &'static str)> {
    vec![
        ("sign", "sign semiring {0,1,-1,inf}"),
        ("boolean", "Boolean semifield"),
        ("superboolean", "super-Boolean {0,1,e}"),
        ("supertropical", "max-plus supertropical over the rationals"),
        ("counting:5", "counting pair {0..5}, T = {1}"),
        ("npq:2:3", "ℕ_{2,3}"),
        ("minimal:first:3", "minimal A0-bipotent pair of the first kind over C_3"),
        ("minimal:second:3", "minimal A0-bipotent pair of the second kind over C_3"),
        ("doubled:boolean", "doubled Boolean pair"),
        ("doubled:superboolean", "doubled super-Boolean pair"),
        ("doubled:supertropical", "doubled supertropical pair"),
        ("krasner:5:1,4", "Krasner quotient F_5/{1,4}"),
        ("krasner:7:1,2,4", "Krasner quotient F_7/{1,2,4}"),
        ("hyper:hex1:2", "hyperfield with a+a = H minus {a} over C_2"),
        ("hyper:hex1:3", "hyperfield with a+a = H minus {a} over C_3"),
        ("hyper:hex2:4", "hyperfield with a+a = {0,a} over C_4"),
        ("hyper:weaksign:3", "weak-sign hyperfield over C_3"),
        ("powerset-symdiff:2", "subsets of C_2 under symmetric difference"),
    ]
}

/// Registered specifiers whose carrier is finite.
pub fn finite_registry() -> Vec<Alg> {
    registry()
        .into_iter()
        .filter_map(|(s, _)| from_spec(s).ok())
        .filter(|a| a.is_finite())
        .collect()
}
