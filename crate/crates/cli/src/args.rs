use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Semi-local longest common subsequence scores.
#[derive(Debug, Parser)]
#[command(name = "semilocal", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Run on one thread even when built with parallel support.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length of a longest common subsequence of X and Y.
    Llcs(InputArgs),
    /// Core critical points of X against every substring of Y.
    Semilocal(InputArgs),
    /// LLCS of X against every window of Y of the given width.
    Window(WindowArgs),
    /// Semi-local comparison of run-length encoded inputs.
    Rle(RleArgs),
    /// Dominant matches grouped by rank.
    Contours(InputArgs),
    /// Cross-check every algorithm on random instances.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Dp,
    Seaweed,
    Sparse,
    Zeroone,
    Banded,
    Rle,
    Netsim,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// First string: a file, `-` for stdin, or the text itself with --literal.
    pub x: Option<String>,
    /// Second string, as for X.
    pub y: Option<String>,
    #[arg(long, value_enum)]
    pub algo: Option<Algo>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Take X and Y as the strings themselves.
    #[arg(long)]
    pub literal: bool,
    /// Drop trailing newlines from file contents.
    #[arg(long, default_value_t = true, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
    pub strip_newlines: bool,
    /// Skip `>` header lines and join the remaining lines.
    #[arg(long)]
    pub fasta: bool,
    /// Also print every A(i, j).
    #[arg(long)]
    pub dense: bool,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub width: usize,
    /// Read critical points from JSON written by `semilocal --format json`
    /// instead of comparing X and Y (which are then ignored).
    #[arg(long)]
    pub points: Option<String>,
}

#[derive(Debug, Args)]
pub struct RleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Print window scores of this width instead of critical points.
    #[arg(long)]
    pub width: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of random instances.
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Longest random string.
    #[arg(long, default_value_t = 16)]
    pub max_len: usize,
    /// Alphabet size of the random strings.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=26))]
    pub sigma: u8,
}
