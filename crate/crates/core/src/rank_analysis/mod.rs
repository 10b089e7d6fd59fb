//! Dependence search, row/column/submatrix ranks, rank defect, the rank
//! conditions A1, A2, A2′ and ⪯0-spanning.

mod conditions;
mod defect;
mod dependence;
mod domain;
mod ranks;
mod spanning;

pub use conditions::{check_condition, rank_report, Condition, RankReport, Verdict};
pub use defect::rank_defect;
pub use dependence::{find_dependence, is_null_vector, DependenceWitness};
pub use domain::{CoefficientDomain, Completeness};
pub use ranks::{col_rank, row_rank, submatrix_rank, RankResult, SubmatrixRank};
pub use spanning::{preceq_spans, SpanWitness};
