use std::io::Read;

use semilocal::{CriticalPointSet, HalfInt};
use serde::Deserialize;

use crate::{CliError, CliResult, InputArgs};

fn sources(a: &InputArgs) -> CliResult<(&str, &str)> {
    match (a.x.as_deref(), a.y.as_deref()) {
        (Some(x), Some(y)) => {
            if !a.literal && x == "-" && y == "-" {
                return Err(CliError::Usage("only one input can come from stdin".into()));
            }
            Ok((x, y))
        }
        _ => Err(CliError::Usage("expected two inputs, X and Y".into())),
    }
}

fn read_raw(source: &str, literal: bool) -> CliResult<Vec<u8>> {
    if literal {
        return Ok(source.as_bytes().to_vec());
    }
    let mut bytes = Vec::new();
    let result = if source == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(source).map(|b| bytes = b)
    };
    result.map_err(|e| CliError::Input(format!("cannot read {source}: {e}")))?;
    Ok(bytes)
}

fn clean(mut bytes: Vec<u8>, a: &InputArgs) -> Vec<u8> {
    if a.fasta {
        bytes = bytes
            .split(|&b| b == b'\n')
            .filter(|line| !line.starts_with(b">"))
            .flat_map(|line| line.strip_suffix(b"\r").unwrap_or(line).iter().copied())
            .collect();
    }
    if a.strip_newlines && !a.literal {
        while matches!(bytes.last(), Some(b'\n' | b'\r')) {
            bytes.pop();
        }
    }
    bytes
}

/// Both inputs as byte strings.
pub fn read_pair(a: &InputArgs) -> CliResult<(Vec<u8>, Vec<u8>)> {
    let (x, y) = sources(a)?;
    Ok((
        clean(read_raw(x, a.literal)?, a),
        clean(read_raw(y, a.literal)?, a),
    ))
}

/// Both inputs as text, for the run-length forms.
pub fn read_pair_text(a: &InputArgs) -> CliResult<(String, String)> {
    let (x, y) = sources(a)?;
    let text = |source: &str| {
        String::from_utf8(read_raw(source, a.literal)?)
            .map_err(|_| CliError::Input(format!("{source}: run-length input is not UTF-8")))
    };
    Ok((text(x)?, text(y)?))
}

#[derive(Deserialize)]
struct PointsFile {
    m: usize,
    n: usize,
    points: Vec<[i64; 2]>,
}

/// Critical points from the JSON form: twice the start and end coordinates.
pub fn read_points(path: &str) -> CliResult<CriticalPointSet> {
    let bytes = read_raw(path, false)?;
    let file: PointsFile =
        serde_json::from_slice(&bytes).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let points = file
        .points
        .iter()
        .map(|&[s, e]| (HalfInt::from_twice(s), HalfInt::from_twice(e)));
    CriticalPointSet::from_points(file.m, file.n, points)
        .map_err(|e| CliError::Input(format!("{path}: {e}")))
}
