//! Command-line front end for the `semilocal` crate.

mod args;
mod input;
mod render;
mod verify;

use std::io::Write;

pub use args::{Algo, Cli, Command, Format, InputArgs};

use semilocal::sparse::sparse_semilocal_with;
use semilocal::zeroone::{dominant_matches, llcs_01};
use semilocal::{
    llcs_banded, llcs_dp, netsim_semilocal, rle_semilocal, seaweed_core, semilocal_contour,
    CriticalPointSet, Execution, RleString,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Output(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn run(cli: &Cli, out: &mut impl Write) -> CliResult<()> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match &cli.command {
        Command::Llcs(a) => {
            let (x, y) = input::read_pair(a)?;
            let algo = a.algo.unwrap_or(Algo::Dp);
            let p = match algo {
                Algo::Dp => llcs_dp(&x, &y),
                Algo::Banded => llcs_banded(&x, &y),
                Algo::Zeroone => llcs_01(&x, &y),
                _ => critical_points(algo, &x, &y, exec)?.llcs(),
            };
            render::llcs(out, a.format, p)
        }
        Command::Semilocal(a) => {
            let (x, y) = input::read_pair(a)?;
            let cps = critical_points(a.algo.unwrap_or(Algo::Seaweed), &x, &y, exec)?;
            render::points(out, a.format, &cps, a.dense)
        }
        Command::Window(w) => {
            let scores = match &w.points {
                Some(path) => {
                    let cps = input::read_points(path)?;
                    window_scores(&cps, w.width, exec)?
                }
                None => {
                    let (x, y) = input::read_pair(&w.input)?;
                    match w.input.algo.unwrap_or(Algo::Seaweed) {
                        Algo::Dp => brute_windows(&x, &y, w.width, llcs_dp)?,
                        Algo::Banded => brute_windows(&x, &y, w.width, llcs_banded)?,
                        algo => {
                            window_scores(&critical_points(algo, &x, &y, exec)?, w.width, exec)?
                        }
                    }
                }
            };
            render::windows(out, w.input.format, w.width, &scores)
        }
        Command::Rle(r) => {
            if let Some(algo) = r.input.algo.filter(|&a| a != Algo::Rle) {
                return Err(CliError::Usage(format!(
                    "rle inputs take --algo rle, not {algo}"
                )));
            }
            let (tx, ty) = input::read_pair_text(&r.input)?;
            let parse = |text: &str, name: &str| {
                RleString::parse(text).map_err(|e| CliError::Input(format!("{name}: {e}")))
            };
            let rx = parse(&tx, r.input.x.as_deref().unwrap_or("X"))?;
            let ry = parse(&ty, r.input.y.as_deref().unwrap_or("Y"))?;
            let cps = rle_semilocal(&rx, &ry);
            match r.width {
                Some(width) => render::windows(
                    out,
                    r.input.format,
                    width,
                    &window_scores(&cps, width, exec)?,
                ),
                None => render::points(out, r.input.format, &cps, r.input.dense),
            }
        }
        Command::Contours(a) => {
            if let Some(algo) = a.algo.filter(|&a| a != Algo::Zeroone) {
                return Err(CliError::Usage(format!(
                    "contours are computed by --algo zeroone, not {algo}"
                )));
            }
            let (x, y) = input::read_pair(a)?;
            render::contours(out, a.format, &dominant_matches(&x, &y))
        }
        Command::Verify(v) => verify::run(out, v, exec),
    }
}

/// Core critical points with the chosen algorithm.
pub fn critical_points(
    algo: Algo,
    x: &[u8],
    y: &[u8],
    exec: Execution,
) -> CliResult<CriticalPointSet> {
    Ok(match algo {
        Algo::Seaweed => seaweed_core(x, y),
        Algo::Sparse => sparse_semilocal_with(x, y, exec),
        Algo::Zeroone => semilocal_contour(x, y),
        Algo::Rle => rle_semilocal(&RleString::encode(x), &RleString::encode(y)),
        Algo::Netsim => netsim_semilocal(x, y),
        Algo::Dp | Algo::Banded => {
            return Err(CliError::Usage(format!(
                "--algo {algo} only computes scores, not critical points"
            )))
        }
    })
}

fn window_scores(cps: &CriticalPointSet, width: usize, exec: Execution) -> CliResult<Vec<usize>> {
    cps.window_scores_with(width, exec)
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn brute_windows(
    x: &[u8],
    y: &[u8],
    width: usize,
    llcs: fn(&[u8], &[u8]) -> usize,
) -> CliResult<Vec<usize>> {
    if width == 0 || width > y.len() {
        return Err(CliError::Usage(format!(
            "window width {width} outside 1..={}",
            y.len()
        )));
    }
    Ok(y.windows(width).map(|w| llcs(x, w)).collect())
}
