//! Direct simulation of the transposition network `LCSNET(x, y)`.
//!
//! The network has `m + n` wires, numbered from the bottom-left corner of the
//! alignment dag to the top-right: wires `0..m` enter at the left side (row
//! `m` first), wires `m..m + n` at the top. Cell `(i, j)` (1-based) fires in
//! stage `i + j - 1` on wires `l = m - i + j - 1` and `l + 1`; wire `l` carries
//! its left input and bottom output, wire `l + 1` its top input and right
//! output. Output wires `0..n` leave at the bottom, `n..m + n` at the right
//! (row `m` first).
//!
//! A mismatch cell is a comparator that sends the larger value to the bottom
//! and the smaller one to the right. A match cell passes values straight
//! through (top to right, left to bottom) without comparing them.

mod diamond;

pub use diamond::{
    diamond_by_simulation, diamond_outputs, diamond_route, DiamondInstance, DiamondRoute,
};

use std::cmp::Ordering;

use crate::critical::{check_permutation, CriticalPointSet};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// What a comparator does with equal inputs. Never changes the output values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EqualPolicy {
    #[default]
    SwapEqual,
    HoldEqual,
}

/// Wire values between two stages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkState<T> {
    wires: Vec<T>,
    stage: usize,
}

impl<T> NetworkState<T> {
    pub fn new(wires: Vec<T>) -> Self {
        NetworkState { wires, stage: 0 }
    }

    pub fn wires(&self) -> &[T] {
        &self.wires
    }

    /// Number of stages already evaluated.
    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn into_wires(self) -> Vec<T> {
        self.wires
    }
}

/// One cell of the alignment dag, located in the network.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    /// 1-based row (position in `x`).
    pub row: usize,
    /// 1-based column (position in `y`).
    pub col: usize,
    /// Lower wire of the cell's wire pair.
    pub wire: usize,
    pub is_match: bool,
}

impl Cell {
    pub fn stage(&self) -> usize {
        self.row + self.col - 1
    }
}

/// Values entering and leaving one evaluated cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellEvent<T> {
    pub cell: Cell,
    pub left: T,
    pub top: T,
    pub bottom: T,
    pub right: T,
}

/// The network shape for a pair of strings.
#[derive(Clone, Copy, Debug)]
pub struct LcsNet<'a, S> {
    x: &'a [S],
    y: &'a [S],
}

impl<'a, S: Eq> LcsNet<'a, S> {
    pub fn new(x: &'a [S], y: &'a [S]) -> Self {
        LcsNet { x, y }
    }

    pub fn wire_count(&self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn stage_count(&self) -> usize {
        if self.x.is_empty() || self.y.is_empty() {
            0
        } else {
            self.x.len() + self.y.len() - 1
        }
    }

    /// Cells of `stage` (1-based) in increasing wire order.
    pub fn stage_cells(&self, stage: usize) -> impl Iterator<Item = Cell> + '_ {
        let (m, n) = (self.x.len(), self.y.len());
        let hi = m.min(stage);
        let lo = (stage + 1).saturating_sub(n).max(1);
        (lo..=hi).rev().map(move |row| {
            let col = stage + 1 - row;
            Cell {
                row,
                col,
                wire: m + col - row - 1,
                is_match: self.x[row - 1] == self.y[col - 1],
            }
        })
    }

    /// Evaluates the next stage under an arbitrary value order.
    pub fn step_by<W, C, F>(
        &self,
        state: &mut NetworkState<W>,
        policy: EqualPolicy,
        cmp: C,
        mut on_cell: F,
    ) where
        C: Fn(&W, &W) -> Ordering,
        F: FnMut(Cell, &[W]),
    {
        state.stage += 1;
        for cell in self.stage_cells(state.stage) {
            let l = cell.wire;
            if !cell.is_match {
                let exchange = match cmp(&state.wires[l], &state.wires[l + 1]) {
                    Ordering::Less => true,
                    Ordering::Equal => policy == EqualPolicy::SwapEqual,
                    Ordering::Greater => false,
                };
                if exchange {
                    state.wires.swap(l, l + 1);
                }
            }
            on_cell(cell, &state.wires[l..l + 2]);
        }
    }

    /// Runs every stage, reporting each cell's inputs and outputs.
    pub fn run_observed<T, F>(
        &self,
        inputs: Vec<T>,
        policy: EqualPolicy,
        mut on_cell: F,
    ) -> Result<Vec<T>>
    where
        T: Ord + Clone,
        F: FnMut(CellEvent<T>),
    {
        self.check_len(inputs.len())?;
        let mut state = NetworkState::new(inputs);
        for _ in 0..self.stage_count() {
            let before = state.wires.clone();
            self.step_by(&mut state, policy, T::cmp, |cell, after| {
                on_cell(CellEvent {
                    cell,
                    left: before[cell.wire].clone(),
                    top: before[cell.wire + 1].clone(),
                    bottom: after[0].clone(),
                    right: after[1].clone(),
                })
            });
        }
        Ok(state.wires)
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.wire_count() {
            return Err(Error::WireCount {
                expected: self.wire_count(),
                got,
            });
        }
        Ok(())
    }
}

/// Output vector of `LCSNET(x, y)` on `inputs`, cell by cell.
pub fn simulate_lcsnet<S: Eq, T: Ord>(
    x: &[S],
    y: &[S],
    inputs: Vec<T>,
    policy: EqualPolicy,
) -> Result<Vec<T>> {
    let net = LcsNet::new(x, y);
    net.check_len(inputs.len())?;
    let mut state = NetworkState::new(inputs);
    for _ in 0..net.stage_count() {
        net.step_by(&mut state, policy, T::cmp, |_, _| {});
    }
    Ok(state.wires)
}

/// Like [`simulate_lcsnet`], also returning for each output wire the input
/// wire its value came from.
pub fn simulate_lcsnet_traced<S: Eq, T: Ord + Clone>(
    x: &[S],
    y: &[S],
    inputs: &[T],
    policy: EqualPolicy,
) -> Result<(Vec<T>, Vec<usize>)> {
    let net = LcsNet::new(x, y);
    net.check_len(inputs.len())?;
    let mut state = NetworkState::new((0..inputs.len()).collect::<Vec<usize>>());
    for _ in 0..net.stage_count() {
        net.step_by(
            &mut state,
            policy,
            |&a, &b| inputs[a].cmp(&inputs[b]),
            |_, _| {},
        );
    }
    let route = state.wires;
    Ok((route.iter().map(|&w| inputs[w].clone()).collect(), route))
}

/// Seaweed start labels: input wire `w` carries `w - m + 1/2`.
pub fn seaweed_inputs(m: usize, n: usize) -> Vec<HalfInt> {
    (0..m + n)
        .map(|w| HalfInt::above(w as i64 - m as i64))
        .collect()
}

/// Reads core critical points off a simulated seaweed run: output wire `e`
/// holding start label `î` is the point `(î, e + 1/2)`.
pub fn extract_critical_points(
    inputs: &[HalfInt],
    outputs: &[HalfInt],
) -> Result<CriticalPointSet> {
    let m = inputs.iter().take_while(|v| v.twice() < 0).count();
    let n = inputs.len() - m;
    if inputs != seaweed_inputs(m, n).as_slice() {
        return Err(Error::NotSeaweedInputs);
    }
    if outputs.len() != m + n {
        return Err(Error::WireCount {
            expected: m + n,
            got: outputs.len(),
        });
    }
    let mut end_of = vec![usize::MAX; m + n];
    for (e, label) in outputs.iter().enumerate() {
        let s = (label.twice() - 1).div_euclid(2) + m as i64;
        if !label.is_odd_half() || s < 0 || s as usize >= m + n {
            return Err(Error::NotAPermutation { len: m + n });
        }
        end_of[s as usize] = e;
    }
    check_permutation(&end_of, m + n)?;
    CriticalPointSet::from_permutation(m, n, end_of)
}

/// Core critical points by full network simulation; `O(mn)`.
pub fn netsim_semilocal<S: Eq>(x: &[S], y: &[S]) -> CriticalPointSet {
    let inputs = seaweed_inputs(x.len(), y.len());
    let outputs = simulate_lcsnet(x, y, inputs.clone(), EqualPolicy::SwapEqual)
        .expect("input length matches");
    extract_critical_points(&inputs, &outputs).expect("simulation yields a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::dense_semilocal_oracle;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn seaweed_labels() {
        assert_eq!(seaweed_inputs(1, 1), vec![h(-1), h(1)]);
        assert!(seaweed_inputs(0, 0).is_empty());
        assert_eq!(seaweed_inputs(2, 1), vec![h(-3), h(-1), h(1)]);
    }

    #[test]
    fn match_cell_passes_through() {
        let out = simulate_lcsnet(b"a", b"a", vec![7, 3], EqualPolicy::HoldEqual).unwrap();
        assert_eq!(out, vec![7, 3]);
        let out = simulate_lcsnet(b"a", b"a", vec![3, 7], EqualPolicy::HoldEqual).unwrap();
        assert_eq!(out, vec![3, 7]);
    }

    #[test]
    fn mismatch_seaweeds_cross_once() {
        let inputs = seaweed_inputs(1, 1);
        let out = simulate_lcsnet(b"a", b"b", inputs.clone(), EqualPolicy::SwapEqual).unwrap();
        // the left seaweed leaves on the right, the top one at the bottom
        assert_eq!(out, vec![h(1), h(-1)]);
        let cps = extract_critical_points(&inputs, &out).unwrap();
        assert_eq!(cps.end_of(), &[1, 0]);
        assert_eq!(cps.llcs(), 0);

        let out = simulate_lcsnet(b"a", b"a", inputs.clone(), EqualPolicy::SwapEqual).unwrap();
        let cps = extract_critical_points(&inputs, &out).unwrap();
        assert_eq!(cps.end_of(), &[0, 1]);
        assert_eq!(cps.llcs(), 1);
    }

    #[test]
    fn presorted_inputs_only_follow_geometry() {
        // comparators keep order when the larger value is already below
        let inputs: Vec<i32> = (0..7).rev().collect();
        for (x, y) in [(&b"abca"[..], &b"bca"[..]), (b"aa", b"bbbbb")] {
            let out = simulate_lcsnet(x, y, inputs.clone(), EqualPolicy::HoldEqual).unwrap();
            assert_eq!(out, inputs);
        }
    }

    #[test]
    fn crossed_pair_matches_dense_oracle() {
        let cps = netsim_semilocal(b"ab", b"ba");
        assert_eq!(cps.len(), 4);
        let dense = dense_semilocal_oracle(b"ab", b"ba");
        for (i, j, v) in dense.iter() {
            assert_eq!(cps.score(i, j).unwrap(), v);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(simulate_lcsnet(b"ab", b"a", vec![1, 2], EqualPolicy::SwapEqual).is_err());
        let inputs = seaweed_inputs(1, 1);
        assert!(extract_critical_points(&inputs, &[h(1), h(1)]).is_err());
        assert!(extract_critical_points(&[h(-1), h(3)], &[h(-1), h(3)]).is_err());
    }

    #[test]
    fn stage_cells_cover_grid_once() {
        let net = LcsNet::new(b"abc", b"ab");
        let mut seen = Vec::new();
        for s in 1..=net.stage_count() {
            let cells: Vec<_> = net.stage_cells(s).collect();
            assert!(cells.windows(2).all(|w| w[0].wire + 2 == w[1].wire));
            seen.extend(cells.iter().map(|c| (c.row, c.col)));
        }
        seen.sort();
        assert_eq!(seen.len(), 6);
        seen.dedup();
        assert_eq!(seen.len(), 6);
    }
}
