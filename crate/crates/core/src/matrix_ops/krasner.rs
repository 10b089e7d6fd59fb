use super::det::for_each_track;
use super::matrix::{Caps, Matrix};
use crate::error::{Error, Result};
use crate::pair_core::Element;
use crate::pair_instances::HyperPair;

/// Whether 0 lies in Σ_π (-1)^π a_π g_π for some choice of representatives
/// g_π of the track cosets, computed as a reachable-residue sweep mod p.
pub fn krasner_det_contains_zero(a: &Matrix) -> Result<bool> {
    let alg = a.alg();
    let quotient = alg
        .instance::<HyperPair>()
        .and_then(|h| h.quotient.as_ref())
        .ok_or_else(|| Error::BadSpecifier {
            spec: alg.id().to_string(),
            reason: "not a Krasner quotient".into(),
        })?;
    let n = a.order()?;
    Caps::check(Caps::current().krasner, "krasner determinant", n)?;
    if let Some(bad) = a.entries().iter().find(|x| !alg.is_tangible_or_zero(x)) {
        return Err(Error::NonTangibleInput(alg.format(bad)));
    }
    let p = quotient.p as usize;
    let mut tracks: Vec<(usize, bool)> = Vec::new();
    for_each_track(a, |t| {
        if let Element::Set(m) = t.value {
            let class = m.trailing_zeros() as usize;
            if class != 0 {
                tracks.push((class, t.odd));
            }
        }
    })?;
    let mut reach: u64 = 1;
    for (class, odd) in tracks {
        let mut next = 0u64;
        for r in (0..p).filter(|r| reach >> r & 1 == 1) {
            for &g in &quotient.classes[class] {
                let g = g as usize;
                let s = if odd { (r + p - g) % p } else { (r + g) % p };
                next |= 1 << s;
            }
        }
        reach = next;
    }
    Ok(reach & 1 == 1)
}
