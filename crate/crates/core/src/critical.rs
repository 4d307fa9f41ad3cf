//! Implicit highest-score matrices.
//!
//! The `m + n` core critical points are stored as a permutation: seaweed start
//! index `s` (start coordinate `s - m + 1/2`) maps to end index `e` (end
//! coordinate `e + 1/2`). A score query `A(i, j)` is the LLCS of `x` against
//! the half-open substring `y[i..j]`:
//!
//! ```text
//! A(i, j) = j - i - #{ critical (î, ĵ) : i < î, ĵ < j }
//! ```

use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::halfint::HalfInt;
use crate::oracle::DenseScoreMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriticalPointSet {
    m: usize,
    n: usize,
    end_of: Vec<usize>,
}

impl CriticalPointSet {
    pub fn from_permutation(m: usize, n: usize, end_of: Vec<usize>) -> Result<Self> {
        check_permutation(&end_of, m + n)?;
        Ok(CriticalPointSet { m, n, end_of })
    }

    pub(crate) fn from_permutation_unchecked(m: usize, n: usize, end_of: Vec<usize>) -> Self {
        debug_assert!(check_permutation(&end_of, m + n).is_ok());
        CriticalPointSet { m, n, end_of }
    }

    /// Rebuilds the set from explicit `(start, end)` coordinate pairs.
    pub fn from_points<I>(m: usize, n: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (HalfInt, HalfInt)>,
    {
        let size = m + n;
        let mut end_of = vec![usize::MAX; size];
        let mut count = 0;
        for (start, end) in points {
            let s = start.twice() + 2 * m as i64 - 1;
            let e = end.twice() - 1;
            let in_range = |v: i64| v >= 0 && v % 2 == 0 && ((v / 2) as usize) < size;
            if !in_range(s) || !in_range(e) {
                return Err(Error::PointOutOfRange {
                    start2: start.twice(),
                    end2: end.twice(),
                });
            }
            let slot = &mut end_of[(s / 2) as usize];
            if *slot != usize::MAX {
                return Err(Error::NotAPermutation { len: size });
            }
            *slot = (e / 2) as usize;
            count += 1;
        }
        if count != size {
            return Err(Error::NotAPermutation { len: size });
        }
        Self::from_permutation(m, n, end_of)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Start index to end index.
    pub fn end_of(&self) -> &[usize] {
        &self.end_of
    }

    pub fn len(&self) -> usize {
        self.end_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.end_of.is_empty()
    }

    pub fn start_coord(&self, s: usize) -> HalfInt {
        HalfInt::above(s as i64 - self.m as i64)
    }

    pub fn end_coord(&self, e: usize) -> HalfInt {
        HalfInt::above(e as i64)
    }

    /// Core critical points in start order.
    pub fn points(&self) -> impl Iterator<Item = (HalfInt, HalfInt)> + '_ {
        self.end_of
            .iter()
            .enumerate()
            .map(|(s, &e)| (self.start_coord(s), self.end_coord(e)))
    }

    /// `A(i, j)` by a linear scan over the core points.
    pub fn score(&self, i: usize, j: usize) -> Result<usize> {
        if i > j || j > self.n {
            return Err(Error::QueryOutOfRange { i, j, n: self.n });
        }
        // î > i  <=>  s >= i + m;  ĵ < j  <=>  e < j
        let dominated = self.end_of[i + self.m..].iter().filter(|&&e| e < j).count();
        let off_core = off_core_dominated(self.m, self.n, i as i64, j as i64);
        Ok(j - i - dominated - off_core)
    }

    /// LLCS of `x` and the whole of `y`.
    pub fn llcs(&self) -> usize {
        self.score(0, self.n).expect("full range is always valid")
    }

    /// `A(i, i + width)` for every `i` in `0..=n - width`.
    pub fn window_scores(&self, width: usize) -> Result<Vec<usize>> {
        self.window_scores_with(width, Execution::default())
    }

    pub fn window_scores_with(&self, width: usize, exec: Execution) -> Result<Vec<usize>> {
        if width == 0 || width > self.n {
            return Err(Error::WindowOutOfRange { width, n: self.n });
        }
        let count = self.n - width + 1;
        Ok(exec::map_range(exec, count, |i| {
            self.score(i, i + width).expect("window inside range")
        }))
    }

    /// Expands every `A(i, j)`; quadratic in `n`.
    pub fn to_dense(&self) -> DenseScoreMatrix {
        DenseScoreMatrix::from_fn(self.n, |i, j| self.score(i, j).expect("valid query"))
    }
}

/// Off-core critical points of the extended dag are `(î, î + m)` for
/// `î < -m` and `î > n`. Counts those with `i < î` and `î + m < j`.
fn off_core_dominated(m: usize, n: usize, i: i64, j: i64) -> usize {
    let (m, n) = (m as i64, n as i64);
    // odd half-integers strictly between integers lo and hi
    let between = |lo: i64, hi: i64| (hi - lo).max(0) as usize;
    between(i, (j - m).min(-m)) + between(i.max(n), j - m)
}

pub(crate) fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    if perm.len() != len {
        return Err(Error::NotAPermutation { len });
    }
    let mut seen = vec![false; len];
    for &v in perm {
        if v >= len || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation { len });
        }
    }
    Ok(())
}
