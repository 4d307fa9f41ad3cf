//! `LCSNET(x, y)` with 0/1 inputs.
//!
//! The left inputs carry ones, the top inputs zeros, and every comparator
//! sends the zero to the bottom: a seaweed traced anonymously, only telling
//! left-born from top-born. A one moving down or a zero moving right is
//! *stray*; stray values run along the contours of the prefix-prefix LCS
//! table.

mod banded;
mod contour;
mod semilocal;

pub use banded::{llcs_banded, llcs_banded_traced, BandedTrace, BoundarySet};
pub use contour::{dominant_matches, trace_contours, Contour, ContourSet, RowSegment};
pub use semilocal::{semilocal_contour, semilocal_contour_counted};

use std::collections::BTreeSet;

use crate::netsim::{simulate_lcsnet, CellEvent, EqualPolicy, LcsNet, NetworkState};

/// A value of the 0/1 network. Ordered `One < Zero` so the simulator's
/// comparators, which put the larger value on the bottom, send zeros down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    One,
    Zero,
}

pub type ZeroOneState = NetworkState<Token>;

/// Ones on the `m` left wires, zeros on the `n` top wires.
pub fn zero_one_inputs(m: usize, n: usize) -> Vec<Token> {
    let mut wires = vec![Token::One; m];
    wires.resize(m + n, Token::Zero);
    wires
}

/// Where the two kinds of value leave the network.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroOneOutcome {
    pub ones_at_bottom: usize,
    pub zeros_at_right: usize,
}

pub fn zero_one_outcome<S: Eq>(x: &[S], y: &[S]) -> ZeroOneOutcome {
    let n = y.len();
    let out = simulate_lcsnet(x, y, zero_one_inputs(x.len(), n), EqualPolicy::SwapEqual)
        .expect("input length matches");
    ZeroOneOutcome {
        ones_at_bottom: out[..n].iter().filter(|&&t| t == Token::One).count(),
        zeros_at_right: out[n..].iter().filter(|&&t| t == Token::Zero).count(),
    }
}

/// LLCS as the number of ones leaving through the bottom.
pub fn llcs_01<S: Eq>(x: &[S], y: &[S]) -> usize {
    zero_one_outcome(x, y).ones_at_bottom
}

/// Number of adjacent wire pairs carrying one then zero.
pub fn count_boundaries(wires: &[Token]) -> usize {
    wires
        .windows(2)
        .filter(|w| w[0] == Token::One && w[1] == Token::Zero)
        .count()
}

/// 1-0 boundary counts before the first stage and after each stage.
pub fn boundary_profile<S: Eq>(x: &[S], y: &[S]) -> Vec<usize> {
    let net = LcsNet::new(x, y);
    let mut state = ZeroOneState::new(zero_one_inputs(x.len(), y.len()));
    let mut profile = vec![count_boundaries(state.wires())];
    for _ in 0..net.stage_count() {
        net.step_by(&mut state, EqualPolicy::SwapEqual, Token::cmp, |_, _| {});
        profile.push(count_boundaries(state.wires()));
    }
    profile
}

/// Stray status of a cell's four ports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StrayPorts {
    pub left: bool,
    pub top: bool,
    pub bottom: bool,
    pub right: bool,
}

impl StrayPorts {
    pub fn any(&self) -> bool {
        self.left || self.top || self.bottom || self.right
    }
}

/// Propagates stray flags through one cell.
fn stray_step(is_match: bool, left: bool, top: bool) -> (bool, bool) {
    match (left, top) {
        // a dominant-style match turns both values stray
        (false, false) => (is_match, is_match),
        // two strays meeting resume their original directions
        (true, true) => (false, false),
        // a lone stray: a match hands the stray status to the other value
        // (which now travels the stray's way), a comparator swaps the equal
        // values and the stray keeps going; either way the output on the
        // stray's side is stray
        (true, false) => (false, true),
        (false, true) => (true, false),
    }
}

/// Cells with a stray value on any port, by explicit flag propagation
/// through the 0/1 network (`O(mn)`). Returns 1-based `(row, col)` pairs.
pub fn stray_cells<S: Eq>(x: &[S], y: &[S]) -> BTreeSet<(usize, usize)> {
    stray_ports(x, y)
        .into_iter()
        .filter(|(_, ports)| ports.any())
        .map(|(cell, _)| cell)
        .collect()
}

/// Stray flags of every cell, alongside the network values that produced them.
pub fn stray_ports<S: Eq>(x: &[S], y: &[S]) -> Vec<((usize, usize), StrayPorts)> {
    let (m, n) = (x.len(), y.len());
    let mut stray = vec![false; m + n];
    let mut cells = Vec::with_capacity(m * n);
    LcsNet::new(x, y)
        .run_observed(
            zero_one_inputs(m, n),
            EqualPolicy::SwapEqual,
            |ev: CellEvent<Token>| {
                let l = ev.cell.wire;
                let (left, top) = (stray[l], stray[l + 1]);
                let (bottom, right) = stray_step(ev.cell.is_match, left, top);
                debug_assert_eq!(left, ev.left == Token::Zero);
                debug_assert_eq!(top, ev.top == Token::One);
                debug_assert_eq!(bottom, ev.bottom == Token::One);
                debug_assert_eq!(right, ev.right == Token::Zero);
                stray[l] = bottom;
                stray[l + 1] = right;
                cells.push((
                    (ev.cell.row, ev.cell.col),
                    StrayPorts {
                        left,
                        top,
                        bottom,
                        right,
                    },
                ));
            },
        )
        .expect("input length matches");
    cells
}
