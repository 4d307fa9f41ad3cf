//! Dense dynamic-programming references.

use std::collections::BTreeSet;

/// LLCS by the classic prefix-prefix table, kept to two rows.
pub fn llcs_dp<T: Eq>(x: &[T], y: &[T]) -> usize {
    let mut prev = vec![0usize; y.len() + 1];
    let mut cur = vec![0usize; y.len() + 1];
    for a in x {
        for (j, b) in y.iter().enumerate() {
            cur[j + 1] = if a == b {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[y.len()]
}

/// Full prefix-prefix table `L(i, j)` for `0 <= i <= m`, `0 <= j <= n`.
pub fn prefix_table<T: Eq>(x: &[T], y: &[T]) -> Vec<Vec<usize>> {
    let mut table = vec![vec![0usize; y.len() + 1]; x.len() + 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            table[i + 1][j + 1] = if a == b {
                table[i][j] + 1
            } else {
                table[i][j + 1].max(table[i + 1][j])
            };
        }
    }
    table
}

/// Cells `(i, j)`, 1-based, lying on a contour of the prefix table: the
/// value at the cell's bottom-right corner exceeds the one above, to the
/// left, or diagonally above-left of it.
pub fn contour_cells(table: &[Vec<usize>]) -> BTreeSet<(usize, usize)> {
    let mut cells = BTreeSet::new();
    for i in 1..table.len() {
        for j in 1..table[i].len() {
            let v = table[i][j];
            if v > table[i - 1][j] || v > table[i][j - 1] || v > table[i - 1][j - 1] {
                cells.insert((i, j));
            }
        }
    }
    cells
}

/// Triangular table of `A(i, j)` for `0 <= i <= j <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseScoreMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl DenseScoreMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for i in 0..=n {
            for j in i..=n {
                entries.push(f(i, j));
            }
        }
        DenseScoreMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(i <= j && j <= self.n, "({i}, {j}) outside the table");
        // rows 0..i hold (n + 1) + n + ... + (n + 2 - i) entries
        let row_start = i * (2 * self.n + 3 - i) / 2;
        self.entries[row_start + (j - i)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..=self.n).flat_map(move |i| (i..=self.n).map(move |j| (i, j, self.get(i, j))))
    }
}

/// `A(i, j) = llcs_dp(x, y[i..j])` for every substring; `O(n^2 m n)`.
pub fn dense_semilocal_oracle<T: Eq>(x: &[T], y: &[T]) -> DenseScoreMatrix {
    DenseScoreMatrix::from_fn(y.len(), |i, j| llcs_dp(x, &y[i..j]))
}
