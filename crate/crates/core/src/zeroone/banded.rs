//! LLCS in `O((m + n)(k + 1))` by following only the 1-0 boundaries of the
//! 0/1 network, where `k` is the LCS distance.
//!
//! A comparator changes its wires only when a one sits directly below a zero,
//! so each stage only has to look at the cells on the current boundaries: one
//! character comparison per boundary. No match lists are needed.

/// 1-0 boundaries after some stage: wire `l` carries a one, wire `l + 1` a zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundarySet {
    pub stage: usize,
    pub boundaries: Vec<usize>,
}

/// Result of [`llcs_banded_traced`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandedTrace {
    pub llcs: usize,
    /// Boundary count entering each stage (index 0 is the initial state).
    pub boundary_counts: Vec<usize>,
    /// Character comparisons performed in each stage.
    pub comparisons: Vec<usize>,
}

impl BandedTrace {
    pub fn max_boundaries(&self) -> usize {
        self.boundary_counts.iter().copied().max().unwrap_or(0)
    }
}

pub fn llcs_banded<S: Eq>(x: &[S], y: &[S]) -> usize {
    llcs_banded_traced(x, y).llcs
}

pub fn llcs_banded_traced<S: Eq>(x: &[S], y: &[S]) -> BandedTrace {
    let (m, n) = (x.len(), y.len());
    let mut trace = BandedTrace {
        llcs: m.min(n),
        boundary_counts: Vec::new(),
        comparisons: Vec::new(),
    };
    if m == 0 || n == 0 {
        trace.llcs = 0;
        trace.boundary_counts.push(0);
        return trace;
    }

    let wires = m + n;
    let mut ones = vec![false; wires];
    ones[..m].fill(true);
    let mut front = BoundarySet {
        stage: 0,
        boundaries: vec![m - 1],
    };
    let mut swapped = Vec::new();
    let mut next = Vec::new();
    trace.boundary_counts.push(1);

    for stage in 1..wires {
        let mut compared = 0;
        swapped.clear();
        for &l in &front.boundaries {
            // cell (row, col) on wires l, l + 1 fires in stage row + col - 1
            let twice_row = stage + m;
            if twice_row < l || (twice_row - l) % 2 != 0 {
                continue;
            }
            let row = (twice_row - l) / 2;
            let col = stage + 1 - row.min(stage + 1);
            if row == 0 || row > m || col == 0 || col > n {
                continue;
            }
            compared += 1;
            if x[row - 1] != y[col - 1] {
                swapped.push(l);
            }
        }
        for &l in &swapped {
            ones[l] = false;
            ones[l + 1] = true;
            if l + 1 == n {
                // a one left the bottom for the right side
                trace.llcs -= 1;
            }
        }

        next.clear();
        let mut s = swapped.iter().peekable();
        for &l in &front.boundaries {
            if s.peek() == Some(&&l) {
                s.next();
                if l > 0 && ones[l - 1] {
                    next.push(l - 1);
                }
                if l + 2 < wires && !ones[l + 2] {
                    next.push(l + 1);
                }
            } else {
                next.push(l);
            }
        }
        next.dedup();
        std::mem::swap(&mut front.boundaries, &mut next);
        front.stage = stage;

        trace.comparisons.push(compared);
        trace.boundary_counts.push(front.boundaries.len());
        if front.boundaries.is_empty() {
            break;
        }
    }
    trace
}
