//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a claim or verdict failed, 2 bad input,
//! 3 a cap was exceeded or a question was undecidable.

pub mod examples;
mod report;
pub mod verify;

use std::io::Write;

use clap::{Parser, Subcommand};

pub use report::{Format, Report};

use crate::error::{Error, Result};
use crate::matrix_ops::{
    combinations, det_doubled, krasner_det_contains_zero, parse_matrix, Caps, Matrix,
};
use crate::pair_core::{axiom_audit, balances, CharacteristicProfile};
use crate::pair_instances::{from_spec, make_doubled, registry, HyperPair};
use crate::rank_analysis::{rank_defect, rank_report, CoefficientDomain, Condition, Verdict};
use crate::solvers::{cramer_solve, jacobi_solve};

/// Fixed seed of the randomized suites.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Parser, Debug)]
#[command(name = "pairlin", version, about = "Linear algebra over semiring pairs")]
struct Cli {
    /// Report encoding.
    #[arg(long, value_enum, default_value = "kv", global = true)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Registered pairs.
    Pairs {
        #[command(subcommand)]
        action: PairsAction,
    },
    /// Doubled determinant of a matrix file (every maximal minor if not square).
    Det { file: String },
    /// Row, column and submatrix ranks with condition verdicts.
    Rank {
        file: String,
        /// `exact` or `heuristic:<depth>`.
        #[arg(long)]
        domain: Option<String>,
    },
    /// Verdict for one condition: a1, a2 or a2p.
    Check {
        condition: String,
        file: String,
        #[arg(long)]
        domain: Option<String>,
    },
    /// Solve A x = v up to balancing.
    Solve {
        method: Method,
        file: String,
        /// Comma-separated right-hand side.
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Axiom audit of a pair specifier.
    Audit { spec: String },
    /// Run one named reproduction.
    Example { name: String },
    /// Run every reproduction and randomized suite.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Subcommand, Debug)]
enum PairsAction {
    List,
}

#[derive(Subcommand, Debug)]
enum VerifyAction {
    All,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum Method {
    Cramer,
    Jacobi,
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let format = cli.format;
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match dispatch(cli.command, seed) {
        Ok((report, code)) => {
            report.write(format, out);
            code
        }
        Err(e) => {
            let mut r = Report::new();
            r.push("error", &e);
            r.write(format, out);
            e.exit_code()
        }
    }
}

fn read_matrix(file: &str) -> Result<Matrix> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{file}: {e}")))?;
    parse_matrix(&text)
}

fn domain_for(name: Option<&str>, a: &Matrix) -> Result<Option<CoefficientDomain>> {
    name.map(|n| CoefficientDomain::from_name(n, a.alg(), &a.row_vectors())).transpose()
}

fn dispatch(cmd: Command, seed: u64) -> Result<(Report, i32)> {
    match cmd {
        Command::Pairs { action: PairsAction::List } => {
            let mut r = Report::new();
            for (spec, desc) in registry() {
                r.push(spec, desc);
            }
            Ok((r, 0))
        }
        Command::Det { file } => det_command(&read_matrix(&file)?),
        Command::Rank { file, domain } => {
            let a = read_matrix(&file)?;
            let d = domain_for(domain.as_deref(), &a)?;
            rank_command(&a, d.as_ref())
        }
        Command::Check { condition, file, domain } => {
            let which = Condition::parse(&condition)
                .ok_or_else(|| Error::Parse(format!("unknown condition `{condition}`")))?;
            let a = read_matrix(&file)?;
            let d = domain_for(domain.as_deref(), &a)?;
            let rep = rank_report(&a, d.as_ref())?;
            let v = rep.verdict(which);
            let mut r = Report::new();
            r.push("pair", a.alg().id());
            r.push(which.key(), v);
            if let Some(e) = v.evidence() {
                r.push("evidence", e);
            }
            Ok((r, verdict_code(v)))
        }
        Command::Solve { method, file, rhs, max_iter } => {
            let a = read_matrix(&file)?;
            let v = a.alg().parse_vec(&rhs)?;
            match method {
                Method::Cramer => cramer_command(&a, &v),
                Method::Jacobi => jacobi_command(&a, &v, max_iter),
            }
        }
        Command::Audit { spec } => audit_command(&spec),
        Command::Example { name } => {
            let (r, pass) = examples::run_example(&name)?;
            Ok((r, if pass { 0 } else { 1 }))
        }
        Command::Verify { action: VerifyAction::All } => {
            let (r, pass) = verify::verify_all(seed);
            Ok((r, if pass { 0 } else { 1 }))
        }
    }
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails(_) => 1,
        Verdict::Unknown(_) => 3,
    }
}

fn push_matrix_header(r: &mut Report, a: &Matrix) {
    r.push("pair", a.alg().id());
    r.push("rows", a.rows());
    r.push("cols", a.cols());
}

fn one_based(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("[{}]", s.join(","))
}

fn det_command(a: &Matrix) -> Result<(Report, i32)> {
    let alg = a.alg();
    let mut r = Report::new();
    push_matrix_header(&mut r, a);
    if a.is_square() {
        let d = det_doubled(a)?;
        r.push("det_plus", alg.format(&d.plus));
        r.push("det_minus", alg.format(&d.minus));
        r.push("permanent", alg.format(&d.permanent(alg)));
        if let Some(s) = d.signed(alg) {
            r.push("signed_det", alg.format(&s));
        }
        r.push("doubled_det", make_doubled(alg).format(&d.to_doubled()));
        r.push("singular", balances(alg, &d.plus, &d.minus)?);
        let is_krasner = alg.instance::<HyperPair>().is_some_and(|h| h.quotient.is_some());
        if is_krasner && a.rows() <= Caps::current().krasner && a.entries().iter().all(|x| alg.is_tangible_or_zero(x)) {
            r.push("krasner_det_contains_zero", krasner_det_contains_zero(a)?);
        }
        return Ok((r, 0));
    }
    let k = a.rows().min(a.cols());
    Caps::check(Caps::current().det, "determinant", k)?;
    for rs in combinations(a.rows(), k) {
        for cs in combinations(a.cols(), k) {
            let d = det_doubled(&a.submatrix(&rs, &cs))?;
            let singular = balances(alg, &d.plus, &d.minus)?;
            r.push(
                format!("minor{}x{}", one_based(&rs), one_based(&cs)),
                format!(
                    "det_plus={} det_minus={} permanent={} singular={singular}",
                    alg.format(&d.plus),
                    alg.format(&d.minus),
                    alg.format(&d.permanent(alg))
                ),
            );
        }
    }
    Ok((r, 0))
}

fn rank_command(a: &Matrix, domain: Option<&CoefficientDomain>) -> Result<(Report, i32)> {
    let alg = a.alg();
    let rep = rank_report(a, domain)?;
    let mut r = Report::new();
    push_matrix_header(&mut r, a);
    r.push("domain", if rep.exact { "exact".to_string() } else { domain.map_or("heuristic:2".into(), |d| d.completeness.to_string()) });
    r.push("row_rank", rep.row.rank);
    r.push("col_rank", rep.col.rank);
    r.push("submatrix_rank", rep.submatrix.rank);
    if rep.submatrix.rank > 0 {
        r.push("nonsingular_submatrix", format!("rows={} cols={}", one_based(&rep.submatrix.rows), one_based(&rep.submatrix.cols)));
    }
    for (c, v) in [("a1", &rep.a1), ("a2", &rep.a2), ("a2prime", &rep.a2prime)] {
        r.push(c, v);
    }
    for (rows, w) in &rep.row.witnesses {
        r.push("row_witness", format!("rows={} {}", one_based(rows), w.render(alg)));
    }
    if let Some(w) = &rep.a2prime_witness {
        r.push("a2prime_witness", w.render(alg));
    }
    for (rows, cols) in rank_defect(a) {
        r.push("rank_defect", format!("rows={} zero_cols={}", one_based(&rows), one_based(&cols)));
    }
    Ok((r, 0))
}

fn cramer_command(a: &Matrix, v: &[crate::pair_core::Element]) -> Result<(Report, i32)> {
    let alg = a.alg();
    let d = make_doubled(alg);
    let res = cramer_solve(a, v)?;
    let mut r = Report::new();
    push_matrix_header(&mut r, a);
    r.push("rhs", alg.format_vec(v));
    r.push("det_plus", alg.format(&res.det.plus));
    r.push("det_minus", alg.format(&res.det.minus));
    r.push("w", d.format_vec(&res.w));
    r.push("balance_verified", res.balance_verified);
    match &res.x {
        Some(x) => r.push("x", alg.format_vec(x)),
        None => r.push("x", "none"),
    }
    if let Some(ok) = res.x_verified {
        r.push("x_verified", ok);
    }
    if let Some(u) = res.unique_in_t0 {
        r.push("unique_in_t0", u);
    }
    let pass = res.balance_verified && res.x_verified != Some(false);
    Ok((r, if pass { 0 } else { 1 }))
}

fn jacobi_command(a: &Matrix, v: &[crate::pair_core::Element], max_iter: Option<usize>) -> Result<(Report, i32)> {
    let alg = a.alg();
    let s = jacobi_solve(a, v, max_iter)?;
    let mut r = Report::new();
    push_matrix_header(&mut r, a);
    r.push("rhs", alg.format_vec(v));
    for (k, x) in s.iterates.iter().enumerate().skip(1) {
        r.push(format!("x{k}"), alg.format_vec(x));
    }
    r.push("stabilized_at", s.stabilized_at.map_or("none".into(), |k| k.to_string()));
    r.push("x", alg.format_vec(s.solution()));
    r.push("solution_balances", s.solution_balances);
    r.push("modulus_matches", s.modulus_matches);
    let pass = s.solution_balances && s.modulus_matches;
    Ok((r, if pass { 0 } else { 1 }))
}

fn audit_command(spec: &str) -> Result<(Report, i32)> {
    let alg = from_spec(spec)?;
    let rep = axiom_audit(&alg);
    let mut r = Report::new();
    r.push("pair", &rep.pair);
    r.push("sample-only", rep.sample_only);
    r.push("kind", rep.kind);
    r.push("declared-kind", rep.declared_kind);
    r.push("detected-kind", rep.detected_kind);
    if let Some(w) = &rep.kind_warning {
        r.push("kind-warning", w);
    }
    r.push(
        "characteristic",
        match rep.characteristic {
            CharacteristicProfile::Zero { capped } => format!("zero capped={capped}"),
            CharacteristicProfile::Finite { p, q, m } => format!("p={p} q={q} m={m}"),
        },
    );
    for c in &rep.checks {
        let key = c.name.replace('_', "-");
        r.push(&key, c.holds);
        if let Some(w) = &c.witness {
            r.push(format!("{key}.witness"), w);
        }
    }
    Ok((r, if rep.basic_ok() { 0 } else { 1 }))
}
