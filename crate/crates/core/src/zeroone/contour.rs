//! Dominant matches and the contours of the prefix-prefix LCS table.
//!
//! Match `(i, j)` has rank `t` when the longest chain of matches ending in it
//! has length `t`; it is dominant when no other rank-`t` match lies weakly
//! above and to the left of it. The rank-`t` dominant matches are the corners
//! of the region `L >= t`, whose border is contour `t`.

use crate::matches::build_match_lists;

/// Dominant matches grouped by rank. `contours[t - 1]` holds the rank-`t`
/// matches, 1-based `(row, col)`, rows increasing and columns decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContourSet {
    pub m: usize,
    pub n: usize,
    pub contours: Vec<Vec<(usize, usize)>>,
}

impl ContourSet {
    /// Number of contours, equal to the LLCS.
    pub fn len(&self) -> usize {
        self.contours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contours.is_empty()
    }

    pub fn rank(&self, t: usize) -> &[(usize, usize)] {
        &self.contours[t - 1]
    }
}

/// Threshold-array computation of all dominant matches, `O((r + m) log n)`.
///
/// `threshold[t - 1]` is the smallest column of a rank-`t` match in the rows
/// seen so far. Within a row, a match gets rank `1 + #{thresholds < j}`; the
/// leftmost match per rank is dominant iff it beats that rank's threshold.
pub fn dominant_matches<S: Ord>(x: &[S], y: &[S]) -> ContourSet {
    let lists = build_match_lists(x, y);
    let mut threshold: Vec<usize> = Vec::new();
    let mut contours: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut updates = Vec::new();
    for i in 1..=x.len() {
        updates.clear();
        let mut last_rank = 0;
        for &j in lists.row(i) {
            let rank = threshold.partition_point(|&c| c < j) + 1;
            if rank == last_rank {
                continue;
            }
            last_rank = rank;
            if threshold.get(rank - 1).is_none_or(|&c| j < c) {
                updates.push((rank, j));
            }
        }
        for &(rank, j) in &updates {
            if rank > threshold.len() {
                threshold.push(j);
                contours.push(Vec::new());
            } else {
                threshold[rank - 1] = j;
            }
            contours[rank - 1].push((i, j));
        }
    }
    ContourSet {
        m: x.len(),
        n: y.len(),
        contours,
    }
}

/// Cells `(row, lo..=hi)` of one contour within a single row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowSegment {
    pub row: usize,
    pub lo: usize,
    pub hi: usize,
}

/// One contour as a staircase of row segments, top row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contour {
    pub rank: usize,
    pub segments: Vec<RowSegment>,
}

impl Contour {
    pub fn len(&self) -> usize {
        self.segments.iter().map(|s| s.hi - s.lo + 1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.segments
            .iter()
            .flat_map(|s| (s.lo..=s.hi).map(move |c| (s.row, c)))
    }
}

/// Contour `t` runs from the first rank-`t` dominant match to the right
/// border, then down the staircase of dominant matches to the bottom border.
/// In row `i` it covers columns `c(i)..=c(i - 1)`, where `c(i)` is the
/// smallest column of a rank-`t` dominant match in rows `<= i` and the
/// column bound above the first one is `n`.
pub fn trace_contours(cs: &ContourSet) -> Vec<Contour> {
    cs.contours
        .iter()
        .enumerate()
        .map(|(t, dominant)| {
            let mut segments = Vec::new();
            let mut next = dominant.iter().peekable();
            if let Some(&&(first_row, _)) = next.peek() {
                let mut above = cs.n;
                let mut col = cs.n;
                for row in first_row..=cs.m {
                    if let Some(&(_, j)) = next.next_if(|&&(r, _)| r == row) {
                        col = j;
                    }
                    segments.push(RowSegment {
                        row,
                        lo: col,
                        hi: above,
                    });
                    above = col;
                }
            }
            Contour {
                rank: t + 1,
                segments,
            }
        })
        .collect()
}
