//! Match-list preprocessing.
//!
//! For every position `i` of `x`, the increasing list of positions `j` of `y`
//! with `x[i] == y[j]`. Positions are 1-based to line up with the alignment
//! dag; the lists share one backing array so total storage is `O(m + n + r)`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchLists {
    /// `offsets[i]..offsets[i + 1]` indexes the list of row `i` in `positions`.
    offsets: Vec<usize>,
    positions: Vec<usize>,
}

impl MatchLists {
    /// Number of rows (`m`).
    pub fn rows(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Match columns of row `i` (1-based), strictly increasing.
    pub fn row(&self, i: usize) -> &[usize] {
        assert!(i >= 1 && i <= self.rows(), "row {i} out of range");
        &self.positions[self.offsets[i - 1]..self.offsets[i]]
    }

    /// `μ_i(k)`: the `k`-th match in row `i` (1-based `k`), `None` past the end.
    pub fn nth(&self, i: usize, k: usize) -> Option<usize> {
        k.checked_sub(1).and_then(|k| self.row(i).get(k).copied())
    }

    /// Total number of match cells `r`.
    pub fn total(&self) -> usize {
        self.positions.len()
    }
}

/// Builds match lists by sorting `y` once and binary-searching each symbol of `x`.
pub fn build_match_lists<T: Ord>(x: &[T], y: &[T]) -> MatchLists {
    // stable sort keeps positions of equal symbols increasing
    let mut order: Vec<usize> = (0..y.len()).collect();
    order.sort_by(|&a, &b| y[a].cmp(&y[b]));

    let mut offsets = Vec::with_capacity(x.len() + 1);
    let mut positions = Vec::new();
    offsets.push(0);
    for c in x {
        let lo = order.partition_point(|&j| y[j] < *c);
        let hi = order.partition_point(|&j| y[j] <= *c);
        positions.extend(order[lo..hi].iter().map(|&j| j + 1));
        offsets.push(positions.len());
    }
    MatchLists { offsets, positions }
}

/// Counting variant for small alphabets of dense symbol codes `0..sigma`.
pub fn build_match_lists_small(x: &[usize], y: &[usize], sigma: usize) -> MatchLists {
    let mut start = vec![0usize; sigma + 1];
    for &c in y {
        assert!(c < sigma, "symbol {c} outside alphabet of size {sigma}");
        start[c + 1] += 1;
    }
    for c in 0..sigma {
        start[c + 1] += start[c];
    }
    let mut fill = start.clone();
    let mut by_symbol = vec![0usize; y.len()];
    for (j, &c) in y.iter().enumerate() {
        by_symbol[fill[c]] = j + 1;
        fill[c] += 1;
    }

    let mut offsets = Vec::with_capacity(x.len() + 1);
    let mut positions = Vec::new();
    offsets.push(0);
    for &c in x {
        if c < sigma {
            positions.extend_from_slice(&by_symbol[start[c]..start[c + 1]]);
        }
        offsets.push(positions.len());
    }
    MatchLists { offsets, positions }
}
