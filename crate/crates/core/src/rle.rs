//! Semi-local comparison of run-length compressed strings.
//!
//! The alignment dag of two run-length encoded strings splits into one
//! rectangle per pair of runs. Rectangles of different symbols are match-free
//! `DIAMOND` networks; rectangles of equal symbols are all matches and carry
//! their inputs straight through. Both are evaluated in time proportional to
//! their perimeter, for `O(m̄n + mn̄)` in total.

use std::fmt;

use crate::critical::CriticalPointSet;
use crate::error::{Error, Result};
use crate::netsim::diamond_route;
use crate::sparse::merge_output_sort;

/// A string as maximal runs of one symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RleString<S> {
    runs: Vec<(S, usize)>,
    len: usize,
}

impl<S: Eq> RleString<S> {
    /// Accepts only canonical runs: positive lengths, neighbours differ.
    pub fn from_runs(runs: Vec<(S, usize)>) -> Result<Self> {
        for (index, run) in runs.iter().enumerate() {
            if run.1 == 0 {
                return Err(Error::ZeroLengthRun { index });
            }
            if index > 0 && runs[index - 1].0 == run.0 {
                return Err(Error::AdjacentEqualRuns { index: index - 1 });
            }
        }
        let len = runs.iter().map(|r| r.1).sum();
        Ok(RleString { runs, len })
    }

    pub fn encode(s: &[S]) -> Self
    where
        S: Clone,
    {
        let mut runs: Vec<(S, usize)> = Vec::new();
        for c in s {
            match runs.last_mut() {
                Some((last, count)) if last == c => *count += 1,
                _ => runs.push((c.clone(), 1)),
            }
        }
        RleString { runs, len: s.len() }
    }

    pub fn decode(&self) -> Vec<S>
    where
        S: Clone,
    {
        let mut out = Vec::with_capacity(self.len);
        for (c, count) in &self.runs {
            out.extend(std::iter::repeat_n(c.clone(), *count));
        }
        out
    }

    pub fn runs(&self) -> &[(S, usize)] {
        &self.runs
    }

    /// Number of runs.
    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    /// Uncompressed length.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

pub fn rle_encode<S: Eq + Clone>(s: &[S]) -> RleString<S> {
    RleString::encode(s)
}

pub fn rle_decode<S: Eq + Clone>(r: &RleString<S>) -> Vec<S> {
    r.decode()
}

/// Compact text form, e.g. `a3b2`.
impl fmt::Display for RleString<u8> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(c, count) in &self.runs {
            write!(f, "{}{}", c as char, count)?;
        }
        Ok(())
    }
}

impl RleString<u8> {
    /// Parses either `symbol,count` lines or the compact `a3b2` form. In the
    /// compact form a missing count means 1 and whitespace between runs is
    /// ignored; digits cannot be symbols there.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.is_empty()).collect();
        let line_form = lines.first().is_some_and(|l| {
            let b = l.as_bytes();
            b.len() >= 3 && b[1] == b',' && b[2..].iter().all(u8::is_ascii_digit)
        });
        let runs = if line_form {
            lines
                .iter()
                .enumerate()
                .map(|(n, line)| {
                    let b = line.as_bytes();
                    let count = (b.len() >= 3 && b[1] == b',')
                        .then(|| line[2..].parse::<usize>().ok())
                        .flatten()
                        .ok_or_else(|| syntax(n + 1, "expected `symbol,count`"))?;
                    Ok((b[0], count))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            parse_compact(text.trim_end_matches(['\n', '\r']))?
        };
        Self::from_runs(runs)
    }
}

fn syntax(position: usize, reason: &str) -> Error {
    Error::RleSyntax {
        position,
        reason: reason.to_string(),
    }
}

fn parse_compact(text: &str) -> Result<Vec<(u8, usize)>> {
    let bytes = text.as_bytes();
    let mut runs = Vec::new();
    let mut p = 0;
    while p < bytes.len() {
        let c = bytes[p];
        if c.is_ascii_whitespace() {
            p += 1;
            continue;
        }
        if c.is_ascii_digit() {
            return Err(syntax(p + 1, "count without a symbol"));
        }
        p += 1;
        let start = p;
        while p < bytes.len() && bytes[p].is_ascii_digit() {
            p += 1;
        }
        let count = if start == p {
            1
        } else {
            text[start..p]
                .parse()
                .map_err(|_| syntax(start + 1, "run length overflows"))?
        };
        runs.push((c, count));
    }
    Ok(runs)
}

/// Core critical points of `decode(x)` against `decode(y)`.
pub fn rle_semilocal<S: Eq>(x: &RleString<S>, y: &RleString<S>) -> CriticalPointSet {
    rle_semilocal_counted(x, y).0
}

/// Also returns the work done: block perimeters plus `DIAMOND` routing steps.
pub fn rle_semilocal_counted<S: Eq>(x: &RleString<S>, y: &RleString<S>) -> (CriticalPointSet, u64) {
    let (m, n) = (x.len(), y.len());
    // h[r]: seaweed travelling right along row r; v[c]: down along column c
    let mut h: Vec<usize> = (0..m).map(|r| m - 1 - r).collect();
    let mut v: Vec<usize> = (m..m + n).collect();
    // per run: offsets of its rows (columns) by decreasing current label
    let mut row_sorts: Vec<Vec<usize>> = x.runs().iter().map(|&(_, a)| (0..a).collect()).collect();
    let mut col_sorts: Vec<Vec<usize>> = y
        .runs()
        .iter()
        .map(|&(_, b)| (0..b).rev().collect())
        .collect();

    let mut work = 0u64;
    let mut inputs = Vec::new();
    let mut sort = Vec::new();
    let mut r0 = 0;
    for ((sx, a), rows) in x.runs().iter().map(|(s, a)| (s, *a)).zip(&mut row_sorts) {
        let mut c0 = 0;
        for ((sy, b), cols) in y.runs().iter().map(|(s, b)| (s, *b)).zip(&mut col_sorts) {
            let w = a + b;
            // local inputs: row lefts bottom-up, then column tops
            inputs.clear();
            inputs.extend((0..a).map(|t| h[r0 + a - 1 - t]));
            inputs.extend_from_slice(&v[c0..c0 + b]);

            sort.clear();
            let (mut p, mut q) = (0, 0);
            let row_local = |t: usize| a - 1 - t;
            while p < a || q < b {
                let take_row =
                    q == b || (p < a && inputs[row_local(rows[p])] > inputs[a + cols[q]]);
                if take_row {
                    sort.push(row_local(rows[p]));
                    p += 1;
                } else {
                    sort.push(a + cols[q]);
                    q += 1;
                }
            }

            let route = if sx == sy {
                (0..w).collect()
            } else {
                let routed = diamond_route(a, &sort);
                work += routed.ops;
                routed.route
            };
            work += w as u64;

            // local outputs: column bottoms, then row rights bottom-up
            for (u, slot) in v[c0..c0 + b].iter_mut().enumerate() {
                *slot = inputs[route[u]];
            }
            for t in 0..a {
                h[r0 + a - 1 - t] = inputs[route[b + t]];
            }
            let out_sort = merge_output_sort(&route, &sort);
            cols.clear();
            rows.clear();
            for o in out_sort {
                if o < b {
                    cols.push(o);
                } else {
                    rows.push(a - 1 - (o - b));
                }
            }
            c0 += b;
        }
        r0 += a;
    }

    let mut end_of = vec![0; m + n];
    for (c, &s) in v.iter().enumerate() {
        end_of[s] = c;
    }
    for (r, &s) in h.iter().enumerate() {
        end_of[s] = m + n - 1 - r;
    }
    (
        CriticalPointSet::from_permutation_unchecked(m, n, end_of),
        work,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seaweed::seaweed_core;

    #[test]
    fn encode_examples() {
        assert_eq!(rle_encode(b"aaabb").runs(), &[(b'a', 3), (b'b', 2)]);
        assert!(rle_encode::<u8>(b"").runs().is_empty());
        let r = RleString::from_runs(vec![(b'a', 1), (b'b', 1), (b'a', 1)]).unwrap();
        assert_eq!(rle_decode(&r), b"aba");
    }

    #[test]
    fn rejects_non_canonical_runs() {
        assert_eq!(
            RleString::from_runs(vec![(b'a', 2), (b'b', 0)]),
            Err(Error::ZeroLengthRun { index: 1 })
        );
        assert_eq!(
            RleString::from_runs(vec![(b'a', 2), (b'a', 1)]),
            Err(Error::AdjacentEqualRuns { index: 0 })
        );
    }

    #[test]
    fn text_forms() {
        let r = RleString::parse("a3b2\n").unwrap();
        assert_eq!(r.decode(), b"aaabb");
        assert_eq!(r.to_string(), "a3b2");
        assert_eq!(RleString::parse("a,3\nb,2\n").unwrap(), r);
        assert_eq!(RleString::parse("ab2").unwrap().decode(), b"abb");
        assert_eq!(RleString::parse("x12").unwrap().len(), 12);
        assert!(RleString::parse("3a").is_err());
        assert!(RleString::parse("a,3\nb2\n").is_err());
        assert!(RleString::parse("a2a1").is_err());
        assert!(RleString::parse("").unwrap().is_empty());
    }

    #[test]
    fn single_run_pairs() {
        let same = rle_semilocal(&rle_encode(b"aaa"), &rle_encode(b"aaaaa"));
        assert_eq!(same.llcs(), 3);
        assert_eq!(same, seaweed_core(b"aaa", b"aaaaa"));
        let diff = rle_semilocal(&rle_encode(b"aaa"), &rle_encode(b"bbbb"));
        assert_eq!(diff.llcs(), 0);
        assert_eq!(diff, seaweed_core(b"aaa", b"bbbb"));
    }

    #[test]
    fn mixed_runs_match_seaweed() {
        for (x, y) in [
            (&b"aabbbacc"[..], &b"bbaaacccab"[..]),
            (b"abab", b"bbbbaa"),
            (b"", b"aab"),
            (b"ccc", b""),
            (b"aaaabbbbcccc", b"ccbbbbbaaaa"),
        ] {
            let got = rle_semilocal(&rle_encode(x), &rle_encode(y));
            assert_eq!(got, seaweed_core(x, y), "{x:?} {y:?}");
        }
    }
}
