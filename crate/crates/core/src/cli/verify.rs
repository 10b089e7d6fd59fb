//! `verify all`: every named reproduction plus seeded randomized suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::examples;
use super::report::Report;
use crate::error::Result;
use crate::matrix_ops::{
    cayley_hamilton_check, combinations, det_doubled, is_singular, krasner_det_contains_zero, laplace_expand, Matrix,
};
use crate::pair_core::{axiom_audit, characteristic, is_metatangible, reconstruct, uniform_presentation, Alg, CharacteristicProfile, Element};
use crate::pair_instances::{finite_registry, from_spec, make_sign_pair, make_supertropical, supertropical};
use crate::rank_analysis::{find_dependence, CoefficientDomain, DependenceWitness};
use crate::solvers::{cramer_solve, dominant_structure, jacobi_solve};

/// Random draws per randomized suite.
pub const SUITE_DRAWS: usize = 200;

type SuiteFn = fn(&mut ChaCha8Rng, usize) -> Result<(bool, String)>;

pub fn suites() -> Vec<(&'static str, SuiteFn)> {
    vec![
        ("structure", structure_suite),
        ("laplace", laplace_suite),
        ("cayley-hamilton", cayley_hamilton_suite),
        ("cramer-balance", cramer_suite),
        ("jacobi", jacobi_suite),
        ("singular-3x3-dependence", singular_dependence_suite),
        ("dependent-implies-singular", dependent_singular_suite),
        ("krasner-2x2", krasner_suite),
        ("hyperfield-a2prime", hyperfield_a2prime_suite),
    ]
}

pub fn verify_all(seed: u64) -> (Report, bool) {
    let mut r = Report::new();
    r.push("seed", seed);
    let mut all = true;
    for ex in examples::registry() {
        let pass = matches!(examples::run_example(ex.name), Ok((_, true)));
        all &= pass;
        r.push(format!("example.{}", ex.name), if pass { "PASS" } else { "FAIL" });
    }
    for (name, suite) in suites() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (pass, detail) = match suite(&mut rng, SUITE_DRAWS) {
            Ok(x) => x,
            Err(e) => (false, e.to_string()),
        };
        all &= pass;
        r.push(format!("suite.{name}"), format!("{} {detail}", if pass { "PASS" } else { "FAIL" }));
    }
    r.push("overall", if all { "PASS" } else { "FAIL" });
    (r, all)
}

/// Tangible supertropical value: an integer in lo..=hi, halved with
/// probability 1/4.
pub fn random_value(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> crate::pair_core::Q {
    let v = rng.gen_range(lo..=hi);
    if rng.gen_ratio(1, 4) {
        crate::pair_core::Q::new(2 * v + 1, 2)
    } else {
        crate::pair_core::Q::from_integer(v)
    }
}

pub fn random_supertropical(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
    let t = make_supertropical();
    let data = (0..rows * cols).map(|_| supertropical::tangible(random_value(rng, lo, hi))).collect();
    Matrix::new(&t, rows, cols, data).expect("shape")
}

/// Every n x n matrix with entries from `pool`, in odometer order.
pub fn all_matrices(alg: &Alg, n: usize, pool: &[Element]) -> Vec<Matrix> {
    let cells = n * n;
    let total = pool.len().pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let data = (0..cells)
                .map(|_| {
                    let e = pool[code % pool.len()].clone();
                    code /= pool.len();
                    e
                })
                .collect();
            Matrix::new(alg, n, n, data).expect("shape")
        })
        .collect()
}

/// Random supertropical matrix whose diagonal is the unique dominant track.
pub fn random_jacobi_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let a = random_supertropical(rng, n, n, -5, 5);
        let Ok(ds) = dominant_structure(&a) else { continue };
        if !ds.unique {
            continue;
        }
        // move the dominant track onto the diagonal by permuting rows
        let perm = ds.dominant[0].perm.clone();
        let b = a.submatrix(&perm, &(0..n).collect::<Vec<_>>());
        return b;
    }
}

fn structure_suite(_: &mut ChaCha8Rng, _: usize) -> Result<(bool, String)> {
    let mut bad: Vec<String> = Vec::new();
    for alg in finite_registry() {
        let rep = axiom_audit(&alg);
        if !rep.basic_ok() {
            bad.push(format!("{} audit", alg.id()));
        }
        if is_metatangible(&alg) {
            for c in alg.carrier().unwrap_or(&[]).iter().filter(|c| !alg.is_zero(c)) {
                let ok = uniform_presentation(&alg, c)
                    .and_then(|p| reconstruct(&alg, &p))
                    .map_or(false, |back| back == *c);
                if !ok {
                    bad.push(format!("{} presentation of {}", alg.id(), alg.format(c)));
                }
            }
        }
    }
    let expect = |spec: &str, checks: &[&str]| -> Option<String> {
        let rep = axiom_audit(&*from_spec(spec).ok()?);
        checks.iter().find(|c| rep.get(c) != Some(true)).map(|c| format!("{spec} {c}"))
    };
    bad.extend(expect("sign", &["strict_second_kind", "almost_regular", "a0_bipotent"]));
    bad.extend(expect("superboolean", &["first_kind"]));
    bad.extend(expect("supertropical", &["tropical_type", "first_kind"]));
    bad.extend(expect("minimal:first:3", &["a0_bipotent"]));
    bad.extend(expect("minimal:second:3", &["a0_bipotent", "additively_idempotent"]));
    if characteristic(&*from_spec("superboolean")?) != (CharacteristicProfile::Finite { p: 1, q: 2, m: 2 }) {
        bad.push("superboolean characteristic".into());
    }
    if !sign_doubled_boolean_isomorphic() {
        bad.push("sign/doubled-boolean isomorphism".into());
    }
    Ok((bad.is_empty(), bad.join("; ")))
}

/// Table comparison under 0 ↦ (0,0), 1 ↦ (1,0), -1 ↦ (0,1), inf ↦ (1,1).
pub fn sign_doubled_boolean_isomorphic() -> bool {
    let s = make_sign_pair();
    let d = from_spec("doubled:boolean").expect("registered");
    let pairs: Vec<(Element, Element)> = [("0", "0|0"), ("1", "1|0"), ("-1", "0|1"), ("inf", "1|1")]
        .iter()
        .map(|(a, b)| (s.parse(a).expect("sign"), d.parse(b).expect("doubled")))
        .collect();
    let phi = |x: &Element| pairs.iter().find(|(a, _)| a == x).map(|(_, b)| b.clone()).expect("mapped");
    pairs.iter().all(|(x, hx)| {
        d.is_tangible(hx) == s.is_tangible(x)
            && d.is_null(hx) == s.is_null(x)
            && pairs.iter().all(|(y, hy)| phi(&s.add(x, y)) == d.add(hx, hy) && phi(&s.mul(x, y)) == d.mul(hx, hy))
    })
}

fn laplace_agrees(a: &Matrix) -> Result<bool> {
    let n = a.order()?;
    let det = det_doubled(a)?.to_doubled();
    for k in 1..=2.min(n - 1) {
        for rows in combinations(n, k) {
            if laplace_expand(a, &rows)? != det {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn laplace_suite(rng: &mut ChaCha8Rng, draws: usize) -> Result<(bool, String)> {
    let mut bad = 0;
    for _ in 0..draws {
        bad += !laplace_agrees(&random_supertropical(rng, 4, 4, -9, 9))? as usize;
    }
    let s = make_sign_pair();
    let sign_all = all_matrices(&s, 3, s.tangibles().expect("finite"));
    for a in &sign_all {
        bad += !laplace_agrees(a)? as usize;
    }
    Ok((bad == 0, format!("cases={} mismatches={bad}", draws + sign_all.len())))
}

fn cayley_hamilton_suite(rng: &mut ChaCha8Rng, draws: usize) -> Result<(bool, String)> {
    let s = make_sign_pair();
    let mut bad = 0;
    let sign_all = all_matrices(&s, 3, s.tangibles().expect("finite"));
    for a in &sign_all {
        bad += !cayley_hamilton_check(a)? as usize;
    }
    for _ in 0..draws {
        bad += !cayley_hamilton_check(&random_supertropical(rng, 3, 3, -9, 9))? as usize;
    }
    Ok((bad == 0, format!("cases={} failures={bad}", draws + sign_all.len())))
}

fn cramer_suite(rng: &mut ChaCha8Rng, draws: usize) -> Result<(bool, String)> {
    let t = make_supertropical();
    let mut bad = 0;
    let mut with_x = 0;
    let mut check = |a: &Matrix, v: &[Element]| -> Result<()> {
        let r = cramer_solve(a, v)?;
        if !r.balance_verified || r.x_verified == Some(false) {
            bad += 1;
        }
        with_x += r.x.is_some() as usize;
        Ok(())
    };
    for _ in 0..draws {
        let a = random_supertropical(rng, 3, 3, -9, 9);
        let v: Vec<Element> = (0..3).map(|_| supertropical::tangible(random_value(rng, -9, 9))).collect();
        check(&a, &v)?;
    }
    let _ = &t;
    let s = make_sign_pair();
    let t0 = s.tangibles_with_zero().expect("finite");
    let mut count = draws;
    for a in all_matrices(&s, 2, &t0) {
        for v0 in &t0 {
            for v1 in &t0 {
                check(&a, &[v0.clone(), v1.clone()])?;
                count += 1;
            }
        }
    }
    Ok((bad == 0, format!("systems={count} with_tangible_x={with_x} failures={bad}")))
}

fn jacobi_suite(rng: &mut ChaCha8Rng, draws: usize) -> Result<(bool, String)> {
    let mut bad = 0;
    for k in 0..draws {
        let n = 2 + k % 3;
        let a = random_jacobi_matrix(rng, n);
        let v: Vec<Element> = (0..n).map(|_| supertropical::tangible(random_value(rng, -9, 9))).collect();
        let s = jacobi_solve(&a, &v, None)?;
        let within = s.stabilized_at.is_some_and(|k| k <= n);
        if !(within && s.solution_balances && s.modulus_matches) {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("systems={draws} failures={bad}")))
}

fn singular_dependence_suite(rng: &mut ChaCha8Rng, draws: usize) -> Result<(bool, String)> {
    let s = make_sign_pair();
    let dom = CoefficientDomain::exact(&s)?;
    let t0 = s.tangibles_with_zero().expect("finite");
    let mut bad = 0;
    let mut singular = 0;
    for a in all_matrices(&s, 3, &t0) {
        if is_singular(&a)? {
            singular += 1;
            bad += find_dependence(&s, &a.row_vectors(), &dom)?.is_none() as usize;
        }
    }
    let mut heuristic_bad = 0;
    for _ in 0..draws {
        let a = random_singular_supertropical(rng);
        let rows = a.row_vectors();
        let dom = CoefficientDomain::heuristic(a.alg(), &rows, 2);
        heuristic_bad += find_dependence(a.alg(), &rows, &dom)?.is_none() as usize;
    }
    Ok((
        bad == 0 && heuristic_bad == 0,
        format!("sign_singular={singular} sign_missing={bad} supertropical={draws} supertropical_missing={heuristic_bad}"),
    ))
}

/// Tangible 3x3 supertropical matrix with two tracks tied at the top.
pub fn random_singular_supertropical(rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let mut a = random_supertropical(rng, 3, 3, -5, 5);
        let ds = dominant_structure(&a).expect("supertropical");
        let top = ds.dominant[0].perm.clone();
        // another permutation, made to tie with the top track
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0],
        ];
        let other = perms[rng.gen_range(0..6)].clone();
        if other == top {
            continue;
        }
        let col = (0..3).find(|&j| other[j] != top[j]).expect("distinct permutations");
        let mu = |e: &Element| match a.alg().modulus(e) {
            Some(crate::pair_core::ModulusValue::Value(v)) => v,
            _ => unreachable!("tangible entries"),
        };
        let top_val: crate::pair_core::Q = (0..3).map(|j| mu(a.get(top[j], j))).sum();
        let rest: crate::pair_core::Q = (0..3).filter(|&j| j != col).map(|j| mu(a.get(other[j], j))).sum();
        a.set(other[col], col, supertropical::tangible(top_val - rest));
        if is_singular(&a).unwrap_or(false) {
            return a;
        }
    }
}

fn dependent_singular_suite(rng: &mut ChaCha8Rng, draws: usize) -> Result<(bool, String)> {
    let d = from_spec("doubled:boolean")?;
    let t = make_supertropical();
    let mut bad = 0;
    let mut tested = 0;
    for k in 0..draws {
        let n = 1 + k % 3;
        for alg in [&t, &d] {
            let a = random_dependent(rng, alg, n);
            let rows = a.row_vectors();
            let dom = CoefficientDomain::default_for(alg, &rows);
            if find_dependence(alg, &rows, &dom)?.is_some() {
                tested += 1;
                bad += !is_singular(&a)? as usize;
            }
        }
    }
    Ok((bad == 0, format!("dependent={tested} nonsingular={bad}")))
}

/// Square matrix whose last row is chosen to cancel a random tangible
/// combination of the others.
pub fn random_dependent(rng: &mut ChaCha8Rng, alg: &Alg, n: usize) -> Matrix {
    let pool: Vec<Element> = match alg.tangibles_with_zero() {
        Some(t0) => t0,
        None => (0..12).map(|_| supertropical::tangible(random_value(rng, -5, 5))).collect(),
    };
    let tangibles: Vec<Element> = pool.iter().filter(|x| alg.is_tangible(x)).cloned().collect();
    let pick = |rng: &mut ChaCha8Rng, v: &[Element]| v[rng.gen_range(0..v.len())].clone();
    let mut rows: Vec<Vec<Element>> = (0..n - 1).map(|_| (0..n).map(|_| pick(rng, &pool)).collect()).collect();
    let coeffs: Vec<Element> = (0..n).map(|_| pick(rng, &tangibles)).collect();
    let mut sum = vec![alg.zero(); n];
    for (row, c) in rows.iter().zip(&coeffs) {
        for (s, x) in sum.iter_mut().zip(row) {
            *s = alg.add(s, &alg.mul(c, x));
        }
    }
    let last_inv = alg.inverse(&coeffs[n - 1]).expect("invertible tangible");
    let last: Vec<Element> = sum
        .iter()
        .map(|s| {
            if alg.is_tangible(s) {
                alg.mul(&last_inv, &alg.dagger(s).expect("property N"))
            } else if alg.is_null(s) && !alg.is_zero(s) {
                match alg.lift(s) {
                    Some(l) => alg.mul(&last_inv, &l),
                    None => alg.zero(),
                }
            } else {
                alg.zero()
            }
        })
        .collect();
    rows.push(last);
    let witness = DependenceWitness { support: (0..n).collect(), coefficients: coeffs };
    debug_assert!(witness.verify(alg, &rows));
    Matrix::from_rows(alg, rows).expect("shape")
}

fn krasner_suite(_: &mut ChaCha8Rng, _: usize) -> Result<(bool, String)> {
    let mut bad = 0;
    let mut cases = 0;
    for (spec, both_ways) in [("krasner:5:1,4", true), ("krasner:7:1,2,4", false)] {
        let k = from_spec(spec)?;
        let dom = CoefficientDomain::exact(&k)?;
        for a in all_matrices(&k, 2, k.tangibles().expect("finite")) {
            cases += 1;
            let dependent = find_dependence(&k, &a.row_vectors(), &dom)?.is_some();
            let zero = krasner_det_contains_zero(&a)?;
            if (dependent && !zero) || (both_ways && zero && !dependent) {
                bad += 1;
            }
        }
    }
    Ok((bad == 0, format!("matrices={cases} failures={bad}")))
}

fn hyperfield_a2prime_suite(_: &mut ChaCha8Rng, _: usize) -> Result<(bool, String)> {
    let mut bad = 0;
    let mut cases = 0;
    for spec in ["hyper:hex1:2", "hyper:hex1:3"] {
        let h = from_spec(spec)?;
        let dom = CoefficientDomain::exact(&h)?;
        let ts = h.tangibles().expect("finite");
        let total = ts.len().pow(6);
        for mut code in 0..total {
            let data: Vec<Element> = (0..6)
                .map(|_| {
                    let e = ts[code % ts.len()].clone();
                    code /= ts.len();
                    e
                })
                .collect();
            let a = Matrix::new(&h, 3, 2, data)?;
            cases += 1;
            bad += find_dependence(&h, &a.row_vectors(), &dom)?.is_none() as usize;
        }
    }
    Ok((bad == 0, format!("matrices={cases} independent={bad}")))
}
