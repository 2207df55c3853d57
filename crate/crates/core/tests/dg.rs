mod common;

use cmtilt::arith::Field;
use cmtilt::dg::{DgError, DgParams, DgPathAlgebra};

use common::{expected, golden_list};
use cmtilt::golden;

const Q: Field = Field::Rationals;

fn cube() -> DgParams {
    DgParams::from_spec(&golden::cube()).unwrap()
}

#[test]
fn cube_parameters() {
    let params = cube();
    assert_eq!((params.n, params.n_x, params.m), (9, 3, 2));
    assert_eq!(params.a_invariant(), -5);
    let shifts: Vec<usize> = (1..=6).map(|p| params.nu(p, 0)).collect();
    assert_eq!(shifts, vec![2, 6, 8, 3, 5, 0]);
    for p in 1..=12 {
        assert_eq!(params.nu(p + 6, 4), params.nu(p, 4));
        assert_eq!(params.nu(p, 4), (4 + params.weight(p) as usize) % 9);
    }
    assert!(DgParams::new(9, 3, 3).is_err());
    assert!(DgParams::new(5, 3, 3).is_err());
    assert_eq!(DgParams::from_spec(&golden::e7()), Err(DgError::NotPureXPower));
}

#[test]
fn cube_differentials_match_list() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, 16, Q);
    for (p, terms) in golden_list() {
        for i in 0..9 {
            let got = alg.arrow_differential(p, i).signed_terms();
            assert_eq!(got, expected(&params, i, &terms), "d(β_{p},{i})");
        }
    }
    assert_eq!(
        alg.arrow_differential(3, 0).display(&params),
        "β_{2,2}β_{1,0} - β_{1,6}β_{2,0}"
    );
}

#[test]
fn d_squared_vanishes() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, params.default_p_max(12), Q);
    let report = alg.check_d_squared(12).unwrap();
    assert!(report.pass, "{:?}", report.failure);
    assert_eq!(report.arrows_checked, 12 * 9);
    let reduced = alg.remove_vertices(params.a_invariant()).unwrap();
    assert_eq!(reduced.removed_vertices(), vec![0, 1, 2, 3, 4]);
    assert_eq!(reduced.vertices(), vec![5, 6, 7, 8]);
    assert!(reduced.check_d_squared(12).unwrap().pass);
    for (n, m) in [(3, 1), (5, 2), (7, 3), (4, 1)] {
        let p = DgParams::new(n, 2, m).unwrap();
        assert!(DgPathAlgebra::new(p, 10, Q).check_d_squared(10).unwrap().pass, "n = {n}, m = {m}");
    }
    for (n, nx, m) in [(7, 4, 2), (5, 3, 1), (11, 5, 2)] {
        let p = DgParams::new(n, nx, m).unwrap();
        assert!(DgPathAlgebra::new(p, p.default_p_max(10), Q).check_d_squared(10).unwrap().pass);
    }
}

#[test]
fn corrupted_sign_fails_at_four() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, params.default_p_max(12), Q).with_corrupted_sign(2);
    let report = alg.check_d_squared(12).unwrap();
    assert!(!report.pass);
    assert_eq!(report.failure.unwrap().p, 4);
}

#[test]
fn truncation_and_removal_errors() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, 12, Q);
    assert_eq!(alg.check_d_squared(12).unwrap_err(), DgError::TruncationTooSmall { p_max: 12, needed: 14 });
    assert_eq!(alg.remove_vertices(-9).unwrap_err(), DgError::EmptyQuiver(9));
    assert_eq!(alg.remove_vertices(-1).unwrap().removed_vertices(), vec![0]);
    let square = DgParams::new(5, 2, 2).unwrap();
    let a = square.a_invariant();
    let reduced = DgPathAlgebra::new(square, 10, Q).remove_vertices(a).unwrap();
    assert_eq!(reduced.vertices().len() as i64, 5 + a);
}

#[test]
fn weight_and_degree_are_preserved() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, 14, Q);
    for p in 1..=14 {
        for (path, _) in alg.arrow_differential(p, 3).terms() {
            assert_eq!(path.weight(&params), params.weight(p));
            assert_eq!(path.degree(), 2 - p as i64);
            assert_eq!(*path.vertices(&params).last().unwrap(), params.nu(p, 3));
        }
    }
}

#[test]
fn degree_zero_homology_is_nakayama() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, 14, Q);
    let cmp = alg.check_h0_nakayama(3 * 3 * 2 * 9);
    assert!(cmp.pass(), "{:?}", cmp.mismatches);
    assert_eq!(cmp.dimension, 27);
}

#[test]
fn negative_homology_vanishes_in_small_weights() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, 14, Q);
    let report = alg.check_negative_vanishing(2, 40);
    assert!(report.pass(), "{:?}", report.nonzero);
    assert!(report.components > 0);
}

#[test]
fn components_are_translation_invariant() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, 14, Q);
    for w in [6, 12, 18, 24] {
        for e in [0, -1, -2] {
            let dims: Vec<usize> = (0..9).map(|u| alg.homology(u, w, e).dimension()).collect();
            let chains: Vec<usize> = (0..9).map(|u| alg.paths(u, w, e).len()).collect();
            assert!(dims.iter().all(|&d| d == dims[0]) && chains.iter().all(|&c| c == chains[0]));
        }
    }
}

#[test]
fn graded_bound_dominates_homology() {
    let params = cube();
    let alg = DgPathAlgebra::new(params, 14, Q);
    for w in (2..=30).step_by(2) {
        for e in [0, -1, -2, -3] {
            assert!(alg.graded_bound(0, w, e) >= alg.homology(0, w, e).dimension(), "w = {w}, e = {e}");
        }
    }
    let reduced = alg.remove_vertices(params.a_invariant()).unwrap();
    let report = reduced.check_negative_vanishing(2, 30);
    assert!(!report.translation_reduced);
}
