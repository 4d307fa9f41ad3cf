use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semilocal::exec::map_range;
use semilocal::zeroone::llcs_01;
use semilocal::{llcs_banded, llcs_dp, netsim_semilocal, Execution};

use crate::args::VerifyArgs;
use crate::{critical_points, Algo, CliError, CliResult};

const SEMILOCAL: [Algo; 4] = [Algo::Seaweed, Algo::Sparse, Algo::Zeroone, Algo::Rle];

fn instance(seed: u64, t: usize, v: &VerifyArgs) -> (Vec<u8>, Vec<u8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let string = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(0..=v.max_len);
        (0..len)
            .map(|_| b'a' + rng.gen_range(0..v.sigma))
            .collect::<Vec<u8>>()
    };
    let x = string(&mut rng);
    (x, string(&mut rng))
}

/// Mismatches found on instance `t`, each as a readable line.
fn check(t: usize, v: &VerifyArgs, exec: Execution) -> Vec<String> {
    let (x, y) = instance(v.seed, t, v);
    let show = |s: &[u8]| String::from_utf8_lossy(s).into_owned();
    let mut bad = Vec::new();
    let oracle = netsim_semilocal(&x, &y);
    for algo in SEMILOCAL {
        let got = critical_points(algo, &x, &y, exec).expect("semi-local algorithm");
        if got != oracle {
            bad.push(format!(
                "instance {t}: {algo} differs from netsim on {:?} / {:?}",
                show(&x),
                show(&y)
            ));
        }
    }
    let p = llcs_dp(&x, &y);
    for (name, q) in [
        ("netsim", oracle.llcs()),
        ("banded", llcs_banded(&x, &y)),
        ("zeroone", llcs_01(&x, &y)),
    ] {
        if q != p {
            bad.push(format!(
                "instance {t}: {name} llcs {q}, dp {p} on {:?} / {:?}",
                show(&x),
                show(&y)
            ));
        }
    }
    for w in 1..=y.len() {
        let scores = oracle.window_scores(w).expect("width in range");
        if y.windows(w)
            .zip(&scores)
            .any(|(win, &s)| llcs_dp(&x, win) != s)
        {
            bad.push(format!("instance {t}: window {w} differs from dp"));
        }
    }
    bad
}

pub fn run(out: &mut impl Write, v: &VerifyArgs, exec: Execution) -> CliResult<()> {
    let bad: Vec<String> = map_range(exec, v.n, |t| check(t, v, exec))
        .into_iter()
        .flatten()
        .collect();
    if bad.is_empty() {
        writeln!(out, "ok\t{} instances\tseed {}", v.n, v.seed)?;
        return Ok(());
    }
    for line in &bad {
        writeln!(out, "{line}")?;
    }
    Err(CliError::Mismatch(format!(
        "{} mismatches in {} instances",
        bad.len(),
        v.n
    )))
}
