//! Semi-local LCS touching only the contour cells.
//!
//! Away from the contours every cell passes a one right and a zero down, so
//! the labelled seaweed there just continues straight: left input to the
//! right, top input to the bottom. Only contour cells can change anything,
//! and there are `O((m + n) p)` of them for LLCS `p`.

use crate::critical::CriticalPointSet;
use crate::zeroone::{dominant_matches, trace_contours};

/// Core critical points of `x` against `y` from the contour cells alone.
pub fn semilocal_contour<S: Ord>(x: &[S], y: &[S]) -> CriticalPointSet {
    semilocal_contour_counted(x, y).0
}

/// Also returns the number of cells evaluated.
pub fn semilocal_contour_counted<S: Ord>(x: &[S], y: &[S]) -> (CriticalPointSet, u64) {
    let (m, n) = (x.len(), y.len());
    // segments of all contours, bucketed by row
    let mut rows: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m + 1];
    for contour in trace_contours(&dominant_matches(x, y)) {
        for s in contour.segments {
            rows[s.row].push((s.lo, s.hi));
        }
    }

    // labels are input wire indices: row r's left end is wire m - r,
    // column c's top end is wire m + c - 1 (both 1-based)
    let mut h: Vec<usize> = (0..=m).map(|r| m.wrapping_sub(r)).collect();
    let mut v: Vec<usize> = (0..=n).map(|c| (m + c).wrapping_sub(1)).collect();
    let mut work = 0u64;
    for (i, segments) in rows.iter_mut().enumerate().skip(1) {
        segments.sort_unstable();
        let mut next_col = 1;
        for &(lo, hi) in segments.iter() {
            for j in lo.max(next_col)..=hi {
                let (left, top) = (h[i], v[j]);
                // bottom keeps the left value at a match, else takes the larger
                let (bottom, right) = if x[i - 1] == y[j - 1] || left > top {
                    (left, top)
                } else {
                    (top, left)
                };
                v[j] = bottom;
                h[i] = right;
                work += 1;
            }
            next_col = next_col.max(hi + 1);
        }
    }

    // column c's bottom is output wire c - 1, row r's right end is m + n - r
    let mut end_of = vec![0; m + n];
    for c in 1..=n {
        end_of[v[c]] = c - 1;
    }
    for r in 1..=m {
        end_of[h[r]] = m + n - r;
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
    fn agrees_with_seaweed() {
        for (x, y) in [
            (&b"abcabba"[..], &b"cbabac"[..]),
            (b"aaaa", b"aa"),
            (b"abc", b"xyz"),
            (b"", b"ab"),
            (b"ab", b""),
            (b"baabab", b"ababba"),
        ] {
            assert_eq!(semilocal_contour(x, y), seaweed_core(x, y), "{x:?} {y:?}");
        }
    }

    #[test]
    fn no_matches_costs_nothing() {
        let (_, work) = semilocal_contour_counted(b"aaaa", b"bbbbbb");
        assert_eq!(work, 0);
    }
}
