//! Values computed once with an independent prefix-table LCS and frozen here.

use semilocal::{
    llcs_banded, netsim_semilocal, rle_semilocal, seaweed_core, semilocal_contour,
    sparse_semilocal, RleString,
};

const X: &[u8] = b"baabcbca";
const Y: &[u8] = b"baabcabcabaca";

#[test]
fn window_scores() {
    let cps = seaweed_core(X, Y);
    assert_eq!(
        cps.window_scores(3).unwrap(),
        [3, 3, 3, 3, 2, 3, 3, 2, 3, 3, 3]
    );
    assert_eq!(cps.window_scores(5).unwrap(), [5, 5, 4, 4, 4, 4, 4, 3, 4]);
    assert_eq!(cps.window_scores(8).unwrap(), [7, 7, 6, 6, 5, 6]);
}

#[test]
fn prefixes_and_suffixes() {
    let n = Y.len();
    for cps in [
        seaweed_core(X, Y),
        sparse_semilocal(X, Y),
        semilocal_contour(X, Y),
        netsim_semilocal(X, Y),
    ] {
        let prefixes: Vec<_> = (0..=n).map(|j| cps.score(0, j).unwrap()).collect();
        let suffixes: Vec<_> = (0..=n).map(|i| cps.score(i, n).unwrap()).collect();
        assert_eq!(prefixes, [0, 1, 2, 3, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]);
        assert_eq!(suffixes, [8, 7, 7, 7, 6, 6, 5, 4, 4, 4, 3, 2, 1, 0]);
    }
}

#[test]
fn global_llcs() {
    assert_eq!(llcs_banded(b"abcabba", b"cbabac"), 4);
    assert_eq!(seaweed_core(b"abcabba", b"cbabac").llcs(), 4);
    let rx = RleString::parse("b1a2b1c1b1c1a1").unwrap();
    let ry = RleString::parse("b1a2b1c1a1b1c1a1b1a1c1a1").unwrap();
    assert_eq!(rx.decode(), X);
    assert_eq!(ry.decode(), Y);
    assert_eq!(
        rle_semilocal(&rx, &ry).window_scores(5).unwrap(),
        [5, 5, 4, 4, 4, 4, 4, 3, 4]
    );
}
