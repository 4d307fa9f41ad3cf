//! The `O(mn)` seaweed algorithm, row by row.
//!
//! Seaweeds are labelled by their start coordinate on the top of the extended
//! dag. Left-side seaweed of row `k` starts at `-k + 1/2`, top seaweed of
//! column `j` at `j - 1/2`. In a cell the two seaweeds exchange directions on a
//! match, or when they have crossed before (left label above top label);
//! otherwise they cross.

use crate::critical::CriticalPointSet;
use crate::halfint::HalfInt;

/// Seaweeds leaving the processed prefix `x[..row]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeaweedFront {
    row: usize,
    /// Seaweed crossing the bottom of each column.
    bottom: Vec<HalfInt>,
    /// Seaweed leaving through the right side of each processed row.
    right: Vec<HalfInt>,
}

impl SeaweedFront {
    /// Front above the first row: every top seaweed still in its own column.
    pub fn new(n: usize) -> Self {
        SeaweedFront {
            row: 0,
            bottom: (0..n as i64).map(HalfInt::above).collect(),
            right: Vec::new(),
        }
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn bottom(&self) -> &[HalfInt] {
        &self.bottom
    }

    pub fn right(&self) -> &[HalfInt] {
        &self.right
    }

    /// Core critical points of `x[..row]` against `y`.
    pub fn critical_points(&self) -> CriticalPointSet {
        let (m, n) = (self.row, self.bottom.len());
        let mut end_of = vec![0; m + n];
        let start = |label: HalfInt| (label.floor() + m as i64) as usize;
        for (e, &label) in self.bottom.iter().enumerate() {
            end_of[start(label)] = e;
        }
        for (r, &label) in self.right.iter().enumerate() {
            end_of[start(label)] = m + n - (r + 1);
        }
        CriticalPointSet::from_permutation_unchecked(m, n, end_of)
    }
}

/// Advances the front through one more row of cells, for symbol `x_k`.
pub fn seaweed_row_step<S: Eq>(mut front: SeaweedFront, x_k: &S, y: &[S]) -> SeaweedFront {
    assert_eq!(front.bottom.len(), y.len(), "front width differs from |y|");
    front.row += 1;
    let mut left = HalfInt::above(-(front.row as i64));
    for (top, c) in front.bottom.iter_mut().zip(y) {
        if x_k == c || left > *top {
            std::mem::swap(&mut left, top);
        }
    }
    front.right.push(left);
    front
}

/// Core critical points of `x` against `y`; `O(mn)` time, `O(m + n)` space.
pub fn seaweed_core<S: Eq>(x: &[S], y: &[S]) -> CriticalPointSet {
    x.iter()
        .fold(SeaweedFront::new(y.len()), |front, c| {
            seaweed_row_step(front, c, y)
        })
        .critical_points()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netsim::netsim_semilocal;
    use std::collections::HashSet;

    /// Seaweed algorithm with explicit crossing history per pair.
    fn seaweed_with_history(x: &[u8], y: &[u8]) -> CriticalPointSet {
        let mut bottom: Vec<HalfInt> = (0..y.len() as i64).map(HalfInt::above).collect();
        let mut right = Vec::new();
        let mut crossed = HashSet::new();
        for (k, a) in x.iter().enumerate() {
            let mut left = HalfInt::above(-(k as i64 + 1));
            for (top, b) in bottom.iter_mut().zip(y) {
                let pair = (left.min(*top), left.max(*top));
                if a == b || crossed.contains(&pair) {
                    std::mem::swap(&mut left, top);
                } else {
                    assert!(crossed.insert(pair), "pair crossed twice");
                }
            }
            right.push(left);
        }
        SeaweedFront {
            row: x.len(),
            bottom,
            right,
        }
        .critical_points()
    }

    #[test]
    fn empty_x_drops_every_seaweed_straight_down() {
        let cps = seaweed_core(b"", b"abc");
        assert_eq!(cps.end_of(), &[0, 1, 2]);
        assert_eq!(seaweed_core::<u8>(b"", b"").len(), 0);
        // empty y: left seaweeds leave on the right of their own rows
        assert_eq!(seaweed_core(b"ab", b"").end_of(), &[0, 1]);
    }

    #[test]
    fn single_match_agrees_with_network() {
        assert_eq!(seaweed_core(b"a", b"a"), netsim_semilocal(b"a", b"a"));
        assert_eq!(seaweed_core(b"a", b"b"), netsim_semilocal(b"a", b"b"));
    }

    #[test]
    fn mismatch_row_crosses_everything() {
        let front = seaweed_row_step(SeaweedFront::new(3), &b'z', b"abc");
        assert_eq!(front.bottom(), SeaweedFront::new(3).bottom());
        assert_eq!(front.right(), &[HalfInt::above(-1)]);
    }

    #[test]
    fn all_match_row_shifts_labels() {
        let front = seaweed_row_step(SeaweedFront::new(3), &b'a', b"aaa");
        let labels: Vec<i64> = front.bottom().iter().map(|h| h.twice()).collect();
        assert_eq!(labels, vec![-1, 1, 3]);
        assert_eq!(front.right(), &[HalfInt::above(2)]);
    }

    #[test]
    fn label_rule_equals_pair_history() {
        let words: [&[u8]; 7] = [b"", b"a", b"ab", b"abba", b"baab", b"cabbac", b"aabcab"];
        for x in words {
            for y in words {
                assert_eq!(
                    seaweed_core(x, y),
                    seaweed_with_history(x, y),
                    "{x:?} {y:?}"
                );
                assert_eq!(seaweed_core(x, y), netsim_semilocal(x, y), "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn prefix_fronts_match_direct_runs() {
        let (x, y) = (b"cabbacab", b"abcabca");
        let mut front = SeaweedFront::new(y.len());
        for k in 1..=x.len() {
            front = seaweed_row_step(front, &x[k - 1], y);
            assert_eq!(front.critical_points(), seaweed_core(&x[..k], y));
        }
    }
}
