use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::pair_instances::from_spec;

/// Parse the text format: `pair <spec>`, `rows <m>`, `cols <n>`, then m
/// lines of n whitespace-separated literals. `#` starts a comment.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut spec = None;
    let mut rows: Option<usize> = None;
    let mut cols: Option<usize> = None;
    let mut body: Vec<Vec<&str>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        let mut words = line.split_whitespace();
        let head = words.next().unwrap_or("");
        match head {
            "pair" if body.is_empty() => {
                spec = Some(words.next().ok_or_else(|| bad("missing pair specifier"))?);
            }
            "rows" | "cols" if body.is_empty() => {
                let v: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| bad("expected a positive integer"))?;
                if head == "rows" {
                    rows = Some(v);
                } else {
                    cols = Some(v);
                }
            }
            _ => body.push(line.split_whitespace().collect()),
        }
    }
    let spec = spec.ok_or_else(|| Error::Parse("missing `pair` header".into()))?;
    let alg = from_spec(spec)?;
    let m = rows.ok_or_else(|| Error::Parse("missing `rows` header".into()))?;
    let n = cols.ok_or_else(|| Error::Parse("missing `cols` header".into()))?;
    if body.len() != m || body.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("body does not match declared {m}x{n}")));
    }
    let data = body
        .iter()
        .flatten()
        .map(|s| alg.parse(s))
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(&alg, m, n, data)
}

/// Canonical text form, parsed back by [`parse_matrix`].
pub fn format_matrix(a: &Matrix) -> String {
    let alg = a.alg();
    let cells: Vec<Vec<String>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| alg.format(x)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = format!("pair {}\nrows {}\ncols {}\n", alg.id(), a.rows(), a.cols());
    for r in cells {
        let padded: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(padded.join(" ").trim_start());
        out.push('\n');
    }
    out
}
