use std::io::Write;

use semilocal::zeroone::ContourSet;
use semilocal::CriticalPointSet;
use serde::Serialize;
use serde_json::json;

use crate::{CliResult, Format};

fn json_line(out: &mut impl Write, value: &impl Serialize) -> CliResult<()> {
    serde_json::to_writer(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn llcs(out: &mut impl Write, format: Format, p: usize) -> CliResult<()> {
    match format {
        Format::Tsv => writeln!(out, "{p}")?,
        Format::Json => json_line(out, &json!({ "llcs": p }))?,
    }
    Ok(())
}

#[derive(Serialize)]
struct PointsJson {
    m: usize,
    n: usize,
    points: Vec<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dense: Option<Vec<Vec<usize>>>,
}

/// `A(i, j)` rows for `0 <= i <= n`, entries `j = i..=n`.
fn dense_rows(cps: &CriticalPointSet) -> Vec<Vec<usize>> {
    let n = cps.n();
    (0..=n)
        .map(|i| {
            (i..=n)
                .map(|j| cps.score(i, j).expect("valid query"))
                .collect()
        })
        .collect()
}

pub fn points(
    out: &mut impl Write,
    format: Format,
    cps: &CriticalPointSet,
    dense: bool,
) -> CliResult<()> {
    match format {
        Format::Tsv => {
            for (s, e) in cps.points() {
                writeln!(out, "{s}\t{e}")?;
            }
            if dense {
                for (i, row) in dense_rows(cps).iter().enumerate() {
                    for (k, a) in row.iter().enumerate() {
                        writeln!(out, "A\t{i}\t{}\t{a}", i + k)?;
                    }
                }
            }
        }
        Format::Json => json_line(
            out,
            &PointsJson {
                m: cps.m(),
                n: cps.n(),
                points: cps.points().map(|(s, e)| [s.twice(), e.twice()]).collect(),
                dense: dense.then(|| dense_rows(cps)),
            },
        )?,
    }
    Ok(())
}

pub fn windows(
    out: &mut impl Write,
    format: Format,
    width: usize,
    scores: &[usize],
) -> CliResult<()> {
    match format {
        Format::Tsv => {
            for s in scores {
                writeln!(out, "{s}")?;
            }
        }
        Format::Json => json_line(out, &json!({ "width": width, "scores": scores }))?,
    }
    Ok(())
}

pub fn contours(out: &mut impl Write, format: Format, cs: &ContourSet) -> CliResult<()> {
    match format {
        Format::Tsv => {
            for (t, matches) in cs.contours.iter().enumerate() {
                for (i, j) in matches {
                    writeln!(out, "{}\t{i}\t{j}", t + 1)?;
                }
            }
        }
        Format::Json => json_line(out, &json!({ "m": cs.m, "n": cs.n, "ranks": cs.contours }))?,
    }
    Ok(())
}
