//! Non-oblivious evaluation of `DIAMOND(m', n')`, the match-free network with
//! all `m' n'` comparators.
//!
//! Inputs are taken in decreasing order; by the 0/1 principle each one flips
//! exactly one output, which then carries it. A top input on wire `j` lands
//! on bottom `j - m'` unless that is already taken, in which case it, like
//! every left input, lands on the leftmost free bottom.

use super::{simulate_lcsnet, EqualPolicy};
use crate::error::{Error, Result};

/// Block inputs together with their sorting permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondInstance<T> {
    m_prime: usize,
    n_prime: usize,
    inputs: Vec<T>,
    /// Input wires by decreasing value.
    sort: Vec<usize>,
}

impl<T: Ord> DiamondInstance<T> {
    /// Sorts the inputs; `O(w log w)`.
    pub fn new(m_prime: usize, n_prime: usize, inputs: Vec<T>) -> Result<Self> {
        let mut sort: Vec<usize> = (0..inputs.len()).collect();
        sort.sort_by(|&a, &b| inputs[b].cmp(&inputs[a]));
        if let Some(w) = sort.windows(2).find(|w| inputs[w[0]] == inputs[w[1]]) {
            return Err(Error::DuplicateInput {
                wire: w[1].max(w[0]),
            });
        }
        Self::with_sort(m_prime, n_prime, inputs, sort)
    }

    /// Uses a known sorting permutation; validated in `O(w)`.
    pub fn with_sort(
        m_prime: usize,
        n_prime: usize,
        inputs: Vec<T>,
        sort: Vec<usize>,
    ) -> Result<Self> {
        let w = m_prime + n_prime;
        if inputs.len() != w {
            return Err(Error::WireCount {
                expected: w,
                got: inputs.len(),
            });
        }
        crate::critical::check_permutation(&sort, w).map_err(|_| Error::MalformedSort)?;
        for pair in sort.windows(2) {
            match inputs[pair[0]].cmp(&inputs[pair[1]]) {
                std::cmp::Ordering::Greater => {}
                std::cmp::Ordering::Equal => return Err(Error::DuplicateInput { wire: pair[1] }),
                std::cmp::Ordering::Less => return Err(Error::MalformedSort),
            }
        }
        Ok(DiamondInstance {
            m_prime,
            n_prime,
            inputs,
            sort,
        })
    }

    pub fn inputs(&self) -> &[T] {
        &self.inputs
    }

    pub fn sort(&self) -> &[usize] {
        &self.sort
    }
}

/// Output slot to input wire, plus the number of elementary steps taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondRoute {
    pub route: Vec<usize>,
    pub ops: u64,
}

/// Routes a `DIAMOND(m', n')` given only its input sorting permutation
/// (input wires by decreasing value). `O(m' + n')`.
///
/// Outputs `0..n'` are the bottoms, `n' + j` is the right end of the row
/// whose left input is wire `j`. While a bottom output is free, the next
/// value lands on the leftmost free bottom it can reach. Once all bottoms are
/// taken, each further value fills the right output of the lowest left wire
/// still held inside the block.
pub fn diamond_route(m_prime: usize, sort: &[usize]) -> DiamondRoute {
    let w = sort.len();
    if m_prime == 0 || m_prime >= w {
        // no comparators at all
        return DiamondRoute {
            route: (0..w).collect(),
            ops: w as u64,
        };
    }
    let n_prime = w - m_prime;
    let mut route = vec![usize::MAX; w];
    let mut bottom_taken = vec![false; n_prime];
    // left wires whose value was absorbed by a bottom output
    let mut held = vec![false; m_prime];
    let mut lowest_held = 0;
    let mut beta = 0;
    let mut ops = 0u64;
    for &wire in sort {
        ops += 1;
        let is_left = wire < m_prime;
        let slot = if !is_left && wire - m_prime >= beta {
            wire - m_prime
        } else if beta < n_prime {
            if is_left {
                held[wire] = true;
            }
            beta
        } else if is_left && wire < lowest_held {
            n_prime + wire
        } else {
            if is_left {
                held[wire] = true;
            }
            while !held[lowest_held] {
                lowest_held += 1;
                ops += 1;
            }
            held[lowest_held] = false;
            n_prime + lowest_held
        };
        debug_assert_eq!(route[slot], usize::MAX, "output {slot} taken twice");
        route[slot] = wire;
        if slot < n_prime {
            bottom_taken[slot] = true;
            while beta < n_prime && bottom_taken[beta] {
                beta += 1;
                ops += 1;
            }
        }
    }
    DiamondRoute { route, ops }
}

/// Outputs of `DIAMOND(m', n')` and the route that produced them.
pub fn diamond_outputs<T: Ord + Clone>(inst: &DiamondInstance<T>) -> (Vec<T>, DiamondRoute) {
    let routed = diamond_route(inst.m_prime, &inst.sort);
    let outputs = routed
        .route
        .iter()
        .map(|&w| inst.inputs[w].clone())
        .collect();
    (outputs, routed)
}

/// Reference: the same block evaluated comparator by comparator.
pub fn diamond_by_simulation<T: Ord>(
    m_prime: usize,
    n_prime: usize,
    inputs: Vec<T>,
) -> Result<Vec<T>> {
    let x = vec![0u8; m_prime];
    let y = vec![1u8; n_prime];
    simulate_lcsnet(&x, &y, inputs, EqualPolicy::HoldEqual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(m: usize, n: usize, inputs: Vec<i32>) -> Vec<i32> {
        diamond_outputs(&DiamondInstance::new(m, n, inputs).unwrap()).0
    }

    #[test]
    fn two_wire_examples() {
        assert_eq!(run(1, 1, vec![1, 5]), vec![5, 1]);
        assert_eq!(run(1, 1, vec![5, 1]), vec![5, 1]);
        assert_eq!(diamond_by_simulation(1, 1, vec![1, 5]).unwrap(), vec![5, 1]);
    }

    #[test]
    fn descending_inputs_stay_put() {
        for (m, n) in [(2, 3), (4, 1), (3, 3)] {
            let inputs: Vec<i32> = (0..(m + n) as i32).rev().collect();
            assert_eq!(run(m, n, inputs.clone()), inputs);
        }
    }

    #[test]
    fn degenerate_blocks() {
        assert_eq!(run(0, 3, vec![1, 3, 2]), vec![1, 3, 2]);
        assert_eq!(run(2, 0, vec![1, 3]), vec![1, 3]);
        assert!(run(0, 0, vec![]).is_empty());
    }

    #[test]
    fn overflow_keeps_left_rows() {
        assert_eq!(run(2, 1, vec![0, 1, 2]), vec![2, 0, 1]);
        assert_eq!(run(3, 4, (0..7).collect()), vec![3, 4, 5, 6, 0, 1, 2]);
    }

    #[test]
    fn agrees_with_simulation_on_all_small_orders() {
        fn permutations(k: usize) -> Vec<Vec<i32>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(k - 1) {
                for at in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(at, (k - 1) as i32);
                    out.push(q);
                }
            }
            out
        }
        for w in 1..=6 {
            for inputs in permutations(w) {
                for m in 0..=w {
                    let want = diamond_by_simulation(m, w - m, inputs.clone()).unwrap();
                    assert_eq!(run(m, w - m, inputs.clone()), want, "m' = {m}, {inputs:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_duplicates_and_bad_sorts() {
        assert!(matches!(
            DiamondInstance::new(1, 1, vec![2, 2]),
            Err(Error::DuplicateInput { .. })
        ));
        assert_eq!(
            DiamondInstance::with_sort(1, 1, vec![1, 5], vec![0, 1]),
            Err(Error::MalformedSort)
        );
        assert_eq!(
            DiamondInstance::with_sort(1, 1, vec![1, 5], vec![1, 1]),
            Err(Error::MalformedSort)
        );
    }
}
