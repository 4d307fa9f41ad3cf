#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semilocal::CriticalPointSet;

pub fn rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ trial as u64)
}

pub fn random_string(rng: &mut impl Rng, len: usize, sigma: u8) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..sigma)).collect()
}

/// Random pair with lengths in `0..=max_len` over an alphabet of `1..=max_sigma`.
pub fn random_pair(rng: &mut impl Rng, max_len: usize, max_sigma: u8) -> (Vec<u8>, Vec<u8>) {
    let sigma = rng.gen_range(1..=max_sigma);
    let m = rng.gen_range(0..=max_len);
    let n = rng.gen_range(0..=max_len);
    (random_string(rng, m, sigma), random_string(rng, n, sigma))
}

/// `x` after `edits` random insertions, deletions or substitutions.
pub fn mutate(rng: &mut impl Rng, x: &[u8], edits: usize, sigma: u8) -> Vec<u8> {
    let mut y = x.to_vec();
    for _ in 0..edits {
        match rng.gen_range(0..3) {
            0 => {
                let at = rng.gen_range(0..=y.len());
                y.insert(at, rng.gen_range(0..sigma));
            }
            1 if !y.is_empty() => {
                let at = rng.gen_range(0..y.len());
                y.remove(at);
            }
            _ if !y.is_empty() => {
                let at = rng.gen_range(0..y.len());
                y[at] = rng.gen_range(0..sigma);
            }
            _ => y.push(rng.gen_range(0..sigma)),
        }
    }
    y
}

pub fn permutation_string(rng: &mut impl Rng, n: usize) -> Vec<u32> {
    let mut p: Vec<u32> = (0..n as u32).collect();
    p.shuffle(rng);
    p
}

/// Runs of random length over alternating symbols.
pub fn runny_string(rng: &mut impl Rng, runs: usize, max_run: usize, sigma: u8) -> Vec<u8> {
    let mut out = Vec::new();
    let mut last = u8::MAX;
    for _ in 0..runs {
        let mut c = rng.gen_range(0..sigma);
        if c == last {
            c = (c + 1) % sigma;
        }
        last = c;
        out.extend(std::iter::repeat_n(c, rng.gen_range(1..=max_run)));
    }
    out
}

/// The set is a permutation of size `m + n`, `A(i, i) = 0`, and scores
/// change by unit steps along rows and columns.
pub fn check_structure(cps: &CriticalPointSet, m: usize, n: usize) -> Result<(), String> {
    if cps.m() != m || cps.n() != n || cps.len() != m + n {
        return Err(format!("size {} for m = {m}, n = {n}", cps.len()));
    }
    let mut seen = vec![false; m + n];
    for &e in cps.end_of() {
        if e >= m + n || std::mem::replace(&mut seen[e], true) {
            return Err(format!("not a permutation: {:?}", cps.end_of()));
        }
    }
    let score = |i, j| cps.score(i, j).map_err(|e| e.to_string());
    for i in 0..=n {
        if score(i, i)? != 0 {
            return Err(format!("A({i}, {i}) != 0"));
        }
        for j in i..=n {
            let a = score(i, j)?;
            if j < n && !matches!(score(i, j + 1)? as i64 - a as i64, 0 | 1) {
                return Err(format!("column step at ({i}, {j})"));
            }
            if i < j && !matches!(a as i64 - score(i + 1, j)? as i64, 0 | 1) {
                return Err(format!("row step at ({i}, {j})"));
            }
        }
    }
    Ok(())
}
