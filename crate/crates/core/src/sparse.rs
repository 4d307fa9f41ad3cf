//! Sparse semi-local comparison by quadtree partitioning of the alignment dag.
//!
//! A block without matches is a `DIAMOND` network and is routed in time linear
//! in its perimeter from the sorting permutation of its inputs. Blocks with
//! matches are split into quadrants until they are match-free or a single
//! match cell. Every block hands its outputs back together with their sorting
//! permutation, so no block ever sorts.
//!
//! Block wires follow the network numbering restricted to the block: inputs
//! are the left sides of its rows (bottom row first) followed by the tops of
//! its columns; outputs are the bottoms of its columns followed by the right
//! sides of its rows (bottom row first).

use std::ops::Range;

use crate::critical::CriticalPointSet;
use crate::exec::{self, Execution};
use crate::netsim::diamond_route;

/// Blocks with a smaller perimeter are never split across threads.
const PARALLEL_PERIMETER: usize = 256;

/// One quadtree node, ready to be evaluated.
#[derive(Clone, Debug)]
pub struct Block<'a, S> {
    x: &'a [S],
    y: &'a [S],
    pub rows: Range<usize>,
    pub cols: Range<usize>,
    /// Seaweed labels on the block's input wires.
    pub inputs: Vec<usize>,
    /// Input wires by decreasing label.
    pub input_sort: Vec<usize>,
    /// Rows of the block ordered by `(x[row], row)`.
    pub row_sort: Vec<usize>,
    /// Columns of the block ordered by `(y[col], col)`.
    pub col_sort: Vec<usize>,
}

impl<S: Ord> Block<'_, S> {
    pub fn perimeter(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    /// Match cells inside the block, by one merge pass over the two symbol
    /// orders.
    pub fn count_matches(&self) -> usize {
        let (rs, cs) = (&self.row_sort, &self.col_sort);
        let (mut p, mut q, mut count) = (0, 0, 0);
        while p < rs.len() && q < cs.len() {
            let c = &self.x[rs[p]];
            match c.cmp(&self.y[cs[q]]) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    let (p0, q0) = (p, q);
                    while p < rs.len() && self.x[rs[p]] == *c {
                        p += 1;
                    }
                    while q < cs.len() && self.y[cs[q]] == *c {
                        q += 1;
                    }
                    count += (p - p0) * (q - q0);
                }
            }
        }
        count
    }
}

pub fn count_block_matches<S: Ord>(block: &Block<'_, S>) -> usize {
    block.count_matches()
}

/// Sorting permutation of a block's outputs from the route it performed
/// (`route[output] = input`) and the sorting permutation of its inputs.
pub fn merge_output_sort(route: &[usize], input_sort: &[usize]) -> Vec<usize> {
    let mut slot_of = vec![0; route.len()];
    for (out, &inp) in route.iter().enumerate() {
        slot_of[inp] = out;
    }
    input_sort.iter().map(|&inp| slot_of[inp]).collect()
}

/// Evaluated block boundary: output labels and their sorting permutation.
struct Evaluated {
    outputs: Vec<usize>,
    sort: Vec<usize>,
    work: u64,
}

struct Quadtree<'a, S> {
    x: &'a [S],
    y: &'a [S],
    exec: Execution,
}

impl<'a, S: Ord + Sync> Quadtree<'a, S> {
    fn block(
        &self,
        rows: Range<usize>,
        cols: Range<usize>,
        inputs: Vec<usize>,
        input_sort: Vec<usize>,
        row_sort: Vec<usize>,
        col_sort: Vec<usize>,
    ) -> Block<'a, S> {
        Block {
            x: self.x,
            y: self.y,
            rows,
            cols,
            inputs,
            input_sort,
            row_sort,
            col_sort,
        }
    }

    fn evaluate(&self, block: Block<'a, S>) -> Evaluated {
        let (a, b) = (block.rows.len(), block.cols.len());
        let w = (a + b) as u64;
        if a == 0 || b == 0 {
            return Evaluated {
                outputs: block.inputs,
                sort: block.input_sort,
                work: w,
            };
        }
        let work = w + w; // match count + boundary bookkeeping
        if block.count_matches() == 0 {
            let routed = diamond_route(a, &block.input_sort);
            let outputs = routed.route.iter().map(|&i| block.inputs[i]).collect();
            let sort = merge_output_sort(&routed.route, &block.input_sort);
            return Evaluated {
                outputs,
                sort,
                work: work + routed.ops,
            };
        }
        if a == 1 && b == 1 {
            // a match cell passes values straight through
            return Evaluated {
                outputs: block.inputs,
                sort: block.input_sort,
                work,
            };
        }
        self.split(block, work)
    }

    fn split(&self, block: Block<'a, S>, work: u64) -> Evaluated {
        let Block {
            rows,
            cols,
            inputs,
            input_sort,
            row_sort,
            col_sort,
            ..
        } = block;
        let (a, b) = (rows.len(), cols.len());
        let row_mid = rows.start + a.div_ceil(2);
        let col_mid = cols.start + b.div_ceil(2);
        let (top, bot) = (rows.start..row_mid, row_mid..rows.end);
        let (left, right) = (cols.start..col_mid, col_mid..cols.end);
        let (tb, bb, lc, rc) = (top.len(), bot.len(), left.len(), right.len());

        let (top_rows, bot_rows): (Vec<_>, Vec<_>) = row_sort.iter().partition(|&&r| r < row_mid);
        let (left_cols, right_cols): (Vec<_>, Vec<_>) =
            col_sort.iter().partition(|&&c| c < col_mid);

        // parent inputs: [bottom lefts | top lefts | left tops | right tops]
        let tl_range = bb..a + lc;
        let tl = self.evaluate(self.block(
            top.clone(),
            left.clone(),
            inputs[tl_range.clone()].to_vec(),
            select(&input_sort, tl_range, 0),
            top_rows.clone(),
            left_cols.clone(),
        ));

        let tr_block = {
            let (vals, sort) = concat_sorted(
                (&tl.outputs[lc..], select(&tl.sort, lc..lc + tb, 0)),
                (&inputs[a + lc..], select(&input_sort, a + lc..a + b, 0)),
            );
            self.block(top, right.clone(), vals, sort, top_rows, right_cols.clone())
        };
        let bl_block = {
            let (vals, sort) = concat_sorted(
                (&inputs[..bb], select(&input_sort, 0..bb, 0)),
                (&tl.outputs[..lc], select(&tl.sort, 0..lc, 0)),
            );
            self.block(bot.clone(), left, vals, sort, bot_rows.clone(), left_cols)
        };

        let exec = if tb + bb + lc + rc >= PARALLEL_PERIMETER {
            self.exec
        } else {
            Execution::Sequential
        };
        let (tr, bl) = exec::join(exec, || self.evaluate(tr_block), || self.evaluate(bl_block));

        let br = {
            let (vals, sort) = concat_sorted(
                (&bl.outputs[lc..], select(&bl.sort, lc..lc + bb, 0)),
                (&tr.outputs[..rc], select(&tr.sort, 0..rc, 0)),
            );
            self.evaluate(self.block(bot, right, vals, sort, bot_rows, right_cols))
        };

        // parent outputs: [left bottoms | right bottoms | bottom rights | top rights]
        let mut outputs = Vec::with_capacity(a + b);
        outputs.extend_from_slice(&bl.outputs[..lc]);
        outputs.extend_from_slice(&br.outputs);
        outputs.extend_from_slice(&tr.outputs[rc..]);
        let merged = merge_desc(
            &outputs,
            &select(&bl.sort, 0..lc, 0),
            &select(&br.sort, 0..rc + bb, lc),
        );
        let sort = merge_desc(
            &outputs,
            &merged,
            &select(&tr.sort, rc..rc + tb, lc + rc + bb),
        );

        Evaluated {
            outputs,
            sort,
            work: work + tl.work + tr.work + bl.work + br.work,
        }
    }
}

/// Entries of `sort` falling in `range`, rebased to start at `offset`.
fn select(sort: &[usize], range: Range<usize>, offset: usize) -> Vec<usize> {
    sort.iter()
        .filter(|k| range.contains(k))
        .map(|&k| k - range.start + offset)
        .collect()
}

/// Merges two index lists, each ordered by decreasing `values[index]`.
fn merge_desc(values: &[usize], a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut p, mut q) = (0, 0);
    while p < a.len() && q < b.len() {
        if values[a[p]] > values[b[q]] {
            out.push(a[p]);
            p += 1;
        } else {
            out.push(b[q]);
            q += 1;
        }
    }
    out.extend_from_slice(&a[p..]);
    out.extend_from_slice(&b[q..]);
    out
}

/// Concatenates two sorted boundary segments into one.
fn concat_sorted(
    first: (&[usize], Vec<usize>),
    second: (&[usize], Vec<usize>),
) -> (Vec<usize>, Vec<usize>) {
    let shift = first.0.len();
    let mut values = first.0.to_vec();
    values.extend_from_slice(second.0);
    let second_sort: Vec<usize> = second.1.iter().map(|&k| k + shift).collect();
    let sort = merge_desc(&values, &first.1, &second_sort);
    (values, sort)
}

/// Core critical points by the sparse quadtree algorithm.
pub fn sparse_semilocal<S: Ord + Sync>(x: &[S], y: &[S]) -> CriticalPointSet {
    sparse_semilocal_counted(x, y, Execution::default()).0
}

pub fn sparse_semilocal_with<S: Ord + Sync>(x: &[S], y: &[S], exec: Execution) -> CriticalPointSet {
    sparse_semilocal_counted(x, y, exec).0
}

/// Also returns the elementary-operation count: block perimeters for match
/// counting and boundary bookkeeping, plus the steps of every `DIAMOND` route.
/// Preprocessing (sorting both strings) is not counted.
pub fn sparse_semilocal_counted<S: Ord + Sync>(
    x: &[S],
    y: &[S],
    exec: Execution,
) -> (CriticalPointSet, u64) {
    let (m, n) = (x.len(), y.len());
    let mut row_sort: Vec<usize> = (0..m).collect();
    row_sort.sort_by(|&a, &b| x[a].cmp(&x[b]));
    let mut col_sort: Vec<usize> = (0..n).collect();
    col_sort.sort_by(|&a, &b| y[a].cmp(&y[b]));

    let tree = Quadtree { x, y, exec };
    // root inputs are the seaweed start indices in increasing order
    let root = tree.block(
        0..m,
        0..n,
        (0..m + n).collect(),
        (0..m + n).rev().collect(),
        row_sort,
        col_sort,
    );
    let evaluated = tree.evaluate(root);
    let mut end_of = vec![0; m + n];
    for (e, &s) in evaluated.outputs.iter().enumerate() {
        end_of[s] = e;
    }
    (
        CriticalPointSet::from_permutation_unchecked(m, n, end_of),
        evaluated.work,
    )
}
