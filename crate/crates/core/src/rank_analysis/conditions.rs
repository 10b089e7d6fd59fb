use std::fmt;

use super::dependence::{find_dependence, DependenceWitness};
use super::domain::CoefficientDomain;
use super::ranks::{col_rank, row_rank, submatrix_rank, RankResult, SubmatrixRank};
use crate::error::Result;
use crate::matrix_ops::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// submatrix rank <= min(row rank, column rank)
    A1,
    /// submatrix rank >= max(row rank, column rank)
    A2,
    /// more rows than columns forces dependent rows
    A2Prime,
}

impl Condition {
    pub fn parse(s: &str) -> Option<Condition> {
        match s {
            "a1" => Some(Condition::A1),
            "a2" => Some(Condition::A2),
            "a2p" | "a2prime" => Some(Condition::A2Prime),
            _ => None,
        }
    }

    pub fn key(&self) -> &'static str {
        match self {
            Condition::A1 => "a1",
            Condition::A2 => "a2",
            Condition::A2Prime => "a2prime",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
    /// No conclusion: the domain was heuristic.
    Unknown(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails(_) => "FAILS",
            Verdict::Unknown(_) => "UNKNOWN",
        }
    }

    pub fn evidence(&self) -> Option<&str> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(e) | Verdict::Unknown(e) => Some(e),
        }
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Ranks, witnesses and the three verdicts for one matrix.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub row: RankResult,
    pub col: RankResult,
    pub submatrix: SubmatrixRank,
    pub exact: bool,
    pub a1: Verdict,
    pub a2: Verdict,
    pub a2prime: Verdict,
    /// Row dependence found when rows outnumber columns.
    pub a2prime_witness: Option<DependenceWitness>,
}

impl RankReport {
    pub fn verdict(&self, c: Condition) -> &Verdict {
        match c {
            Condition::A1 => &self.a1,
            Condition::A2 => &self.a2,
            Condition::A2Prime => &self.a2prime,
        }
    }
}

fn domains(a: &Matrix, domain: Option<&CoefficientDomain>) -> (CoefficientDomain, CoefficientDomain) {
    match domain {
        Some(d) => (d.clone(), d.clone()),
        None => (
            CoefficientDomain::default_for(a.alg(), &a.row_vectors()),
            CoefficientDomain::default_for(a.alg(), &a.col_vectors()),
        ),
    }
}

/// Computed ranks are upper bounds under a heuristic domain, since a missed
/// witness can only make a subset look independent.
pub fn rank_report(a: &Matrix, domain: Option<&CoefficientDomain>) -> Result<RankReport> {
    let (rd, cd) = domains(a, domain);
    let exact = rd.is_exact() && cd.is_exact();
    let row = row_rank(a, &rd)?;
    let col = col_rank(a, &cd)?;
    let submatrix = submatrix_rank(a)?;
    let (r, c, s) = (row.rank, col.rank, submatrix.rank);
    let ranks = format!("row_rank={r} col_rank={c} submatrix_rank={s}");

    let a1 = if s > r.min(c) {
        Verdict::Fails(ranks.clone())
    } else if exact {
        Verdict::Holds
    } else {
        Verdict::Unknown(ranks.clone())
    };
    let a2 = if s >= r.max(c) {
        Verdict::Holds
    } else if exact {
        Verdict::Fails(ranks.clone())
    } else {
        Verdict::Unknown(ranks.clone())
    };
    let (a2prime, a2prime_witness) = if a.rows() <= a.cols() {
        (Verdict::Holds, None)
    } else {
        match find_dependence(a.alg(), &a.row_vectors(), &rd)? {
            Some(w) => (Verdict::Holds, Some(w)),
            None if rd.is_exact() => (
                Verdict::Fails(format!("{} rows of length {} are independent", a.rows(), a.cols())),
                None,
            ),
            None => (Verdict::Unknown("no witness in the heuristic domain".into()), None),
        }
    };
    Ok(RankReport { row, col, submatrix, exact, a1, a2, a2prime, a2prime_witness })
}

pub fn check_condition(a: &Matrix, which: Condition, domain: Option<&CoefficientDomain>) -> Result<Verdict> {
    Ok(rank_report(a, domain)?.verdict(which).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_instances::{from_spec, make_sign_pair};

    #[test]
    fn sign_counterexample_fails_a2() {
        let s = make_sign_pair();
        let a = Matrix::parse_rows(
            &s,
            &[&["1", "1", "-1", "1"], &["1", "-1", "1", "1"], &["-1", "1", "1", "1"]],
        )
        .unwrap();
        let rep = rank_report(&a, None).unwrap();
        assert!(rep.a2.fails());
        assert_eq!(rep.a1, Verdict::Holds);
        assert_eq!(rep.a2prime, Verdict::Holds);
    }

    #[test]
    fn identity_satisfies_a1_everywhere() {
        for spec in ["sign", "boolean", "superboolean", "doubled:boolean", "krasner:5:1,4", "counting:5"] {
            let alg = from_spec(spec).unwrap();
            let i = Matrix::identity(&alg, 3);
            assert_eq!(check_condition(&i, Condition::A1, None).unwrap(), Verdict::Holds, "{spec}");
        }
    }

    #[test]
    fn symdiff_a2prime_fails() {
        let p = from_spec("powerset-symdiff:2").unwrap();
        let a = Matrix::parse_rows(&p, &[&["1", "1"], &["1", "x"], &["0", "1"]]).unwrap();
        assert!(check_condition(&a, Condition::A2Prime, None).unwrap().fails());
    }

    #[test]
    fn condition_names() {
        assert_eq!(Condition::parse("a2p"), Some(Condition::A2Prime));
        assert_eq!(Condition::parse("a3"), None);
    }
}
