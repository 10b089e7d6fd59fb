//! Named reproductions: each builds a fixture, evaluates a claim and
//! reports the evidence.

use super::report::Report;
use crate::error::{Error, Result};
use crate::matrix_ops::{combinations, det_doubled, is_singular, krasner_det_contains_zero, signed_det, Matrix};
use crate::pair_core::{Element, PairAlgebra};
use crate::pair_instances::{from_spec, make_doubled, make_sign_pair};
use crate::rank_analysis::{find_dependence, rank_report, row_rank, submatrix_rank, CoefficientDomain, Condition};

pub struct NamedExample {
    pub name: &'static str,
    pub description: &'static str,
    pub run: fn(&mut Report) -> Result<bool>,
}

pub fn registry() -> Vec<NamedExample> {
    vec![
        NamedExample {
            name: "sign-a2-counterexample",
            description: "sign pair 3x4 matrix with row rank 3 and submatrix rank 2",
            run: sign_a2,
        },
        NamedExample {
            name: "doubled-boolean-a2",
            description: "doubled Boolean 4x4 matrix with null doubled determinant and independent rows",
            run: doubled_boolean_a2,
        },
        NamedExample {
            name: "truncated-quasiperiodic",
            description: "counting:5 4x4 matrix with null permanent and independent rows",
            run: truncated,
        },
        NamedExample {
            name: "symdiff-a2prime-counterexample",
            description: "three independent vectors of length 2 over the symmetric-difference pair on C_2",
            run: symdiff_a2prime,
        },
        NamedExample {
            name: "sign-minor-determinant",
            description: "3x3 sign minor whose track sum is inf",
            run: sign_minor,
        },
        NamedExample {
            name: "krasner-2x2-a2",
            description: "A2 and the coset determinant over F_5/{1,4}, all tangible 2x2 matrices",
            run: krasner_2x2,
        },
    ]
}

pub fn run_example(name: &str) -> Result<(Report, bool)> {
    let ex = registry()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownExample(name.to_string()))?;
    let mut r = Report::new();
    r.push("example", ex.name);
    r.push("description", ex.description);
    let pass = (ex.run)(&mut r)?;
    r.push("claim", if pass { "PASS" } else { "FAIL" });
    Ok((r, pass))
}

/// Rows (+,+,-,+), (+,-,+,+), (-,+,+,+) over the sign pair.
pub fn sign_a2_matrix() -> Matrix {
    let s = make_sign_pair();
    Matrix::parse_rows(&s, &[&["1", "1", "-1", "1"], &["1", "-1", "1", "1"], &["-1", "1", "1", "1"]])
        .expect("valid literals")
}

/// Doubled Boolean matrix carrying two disjoint even tracks with opposite signs.
pub fn doubled_boolean_matrix() -> Matrix {
    let d = from_spec("doubled:boolean").expect("registered");
    Matrix::parse_rows(
        &d,
        &[&["1", "0", "0", "1"], &["0", "1", "1", "0"], &["1", "0", "1", "0"], &["0", "0|1", "0", "1"]],
    )
    .expect("valid literals")
}

/// 4x4 zero-one matrix over counting:5 with 11 nonzero tracks.
pub fn counting_matrix() -> Matrix {
    let c = from_spec("counting:5").expect("registered");
    Matrix::parse_rows(
        &c,
        &[&["1", "1", "1", "1"], &["1", "1", "0", "1"], &["0", "1", "1", "1"], &["1", "0", "1", "1"]],
    )
    .expect("valid literals")
}

/// (1,1), (1,x), (0,1) over the symmetric-difference pair on C_2.
pub fn symdiff_matrix() -> Matrix {
    let p = from_spec("powerset-symdiff:2").expect("registered");
    Matrix::parse_rows(&p, &[&["1", "1"], &["1", "x"], &["0", "1"]]).expect("valid literals")
}

fn sign_a2(r: &mut Report) -> Result<bool> {
    let a = sign_a2_matrix();
    let s = a.alg().clone();
    let dom = CoefficientDomain::exact(&s)?;
    let rr = row_rank(&a, &dom)?.rank;
    let sr = submatrix_rank(&a)?.rank;
    let mut minors_ok = true;
    for cs in combinations(4, 3) {
        let m = a.submatrix(&[0, 1, 2], &cs);
        let d = det_doubled(&m)?;
        let total = d.permanent(&s);
        minors_ok &= s.format(&total) == "inf" && is_singular(&m)?;
    }
    let a2 = rank_report(&a, Some(&dom))?.verdict(Condition::A2).clone();
    r.push("row_rank", rr);
    r.push("submatrix_rank", sr);
    r.push("all_3x3_minors_singular", minors_ok);
    r.push("a2", &a2);
    Ok(rr == 3 && sr == 2 && minors_ok && a2.fails())
}

fn doubled_boolean_a2(r: &mut Report) -> Result<bool> {
    let a = doubled_boolean_matrix();
    let d = a.alg().clone();
    let dd = make_doubled(&d);
    let det = det_doubled(&a)?.to_doubled();
    let dom = CoefficientDomain::exact(&d)?;
    let dep = find_dependence(&d, &a.row_vectors(), &dom)?;
    let null = dd.is_null(&det);
    r.push("doubled_det", dd.format(&det));
    r.push("doubled_det_null", null);
    r.push("signed_det", d.format(&signed_det(&a)?));
    r.push("singular", is_singular(&a)?);
    r.push("dependence", dep.as_ref().map_or("none".into(), |w| w.render(&d)));
    Ok(null && dep.is_none())
}

fn truncated(r: &mut Report) -> Result<bool> {
    let a = counting_matrix();
    let c = a.alg().clone();
    let perm = det_doubled(&a)?.permanent(&c);
    let dom = CoefficientDomain::exact(&c)?;
    let dep = find_dependence(&c, &a.row_vectors(), &dom)?;
    let sr = submatrix_rank(&a)?.rank;
    r.push("permanent", c.format(&perm));
    r.push("permanent_null", c.is_null(&perm));
    r.push("submatrix_rank", sr);
    r.push("dependence", dep.as_ref().map_or("none".into(), |w| w.render(&c)));
    Ok(c.is_null(&perm) && dep.is_none())
}

fn symdiff_a2prime(r: &mut Report) -> Result<bool> {
    let a = symdiff_matrix();
    let p = a.alg().clone();
    let dom = CoefficientDomain::exact(&p)?;
    let dep = find_dependence(&p, &a.row_vectors(), &dom)?;
    let a2p = rank_report(&a, Some(&dom))?.a2prime;
    r.push("dependence", dep.as_ref().map_or("none".into(), |w| w.render(&p)));
    r.push("a2prime", &a2p);
    Ok(dep.is_none() && a2p.fails())
}

fn sign_minor(r: &mut Report) -> Result<bool> {
    let s = make_sign_pair();
    let a = Matrix::parse_rows(&s, &[&["1", "1", "-1"], &["1", "-1", "1"], &["-1", "1", "1"]])?;
    let d = det_doubled(&a)?;
    let total = d.permanent(&s);
    r.push("det_plus", s.format(&d.plus));
    r.push("det_minus", s.format(&d.minus));
    r.push("sum", s.format(&total));
    let singular = is_singular(&a)?;
    r.push("singular", singular);
    Ok(s.format(&total) == "inf" && singular)
}

fn tangible_matrices(alg: &PairAlgebra, n: usize) -> Vec<Vec<Element>> {
    let ts = alg.tangibles().expect("finite T").to_vec();
    let mut out = vec![Vec::new()];
    for _ in 0..n * n {
        out = out
            .into_iter()
            .flat_map(|v| ts.iter().map(move |t| [v.clone(), vec![t.clone()]].concat()))
            .collect();
    }
    out
}

fn krasner_2x2(r: &mut Report) -> Result<bool> {
    let k = from_spec("krasner:5:1,4")?;
    let dom = CoefficientDomain::exact(&k)?;
    let (mut total, mut singular_count, mut a2_ok, mut agree) = (0, 0, true, true);
    for data in tangible_matrices(&k, 2) {
        let a = Matrix::new(&k, 2, 2, data)?;
        let sing = is_singular(&a)?;
        let zero = krasner_det_contains_zero(&a)?;
        let dependent = find_dependence(&k, &a.row_vectors(), &dom)?.is_some();
        total += 1;
        singular_count += sing as usize;
        agree &= sing == zero;
        a2_ok &= !sing || dependent;
    }
    r.push("matrices", total);
    r.push("singular", singular_count);
    r.push("singular_iff_coset_det_has_zero", agree);
    r.push("a2", if a2_ok { "HOLDS" } else { "FAILS" });
    Ok(agree && a2_ok)
}
