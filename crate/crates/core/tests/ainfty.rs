use cmtilt::ainfty::AInfinityNakayama;
use cmtilt::arith::Field;

const Q: Field = Field::Rationals;

#[test]
fn products_on_basis() {
    let a = AInfinityNakayama::new(9, 3, 2);
    assert_eq!(a.m2((0, 4), (0, 4)), Some((1, 0, 4)));
    assert_eq!(a.m2((2, 0), (1, 6)), Some((1, 3, 0)));
    assert_eq!(a.m2((2, 0), (1, 5)), None);
    assert_eq!(a.m2((1, 0), (1, 2)), None);
    assert_eq!(a.m_top(&[(1, 0), (1, 2), (1, 4)]).unwrap(), Some((1, 2, 0)));
    assert_eq!(a.m_top(&[(1, 0), (2, 2), (1, 8)]).unwrap(), None);
    assert!(a.m_top(&[(1, 0), (1, 2)]).is_err());
    let b = AInfinityNakayama::new(4, 2, 1);
    assert_eq!(b.m2((1, 0), (3, 1)), Some((1, 4, 0)));
    assert_eq!(b.m2((1, 0), (2, 1)), Some((1, 3, 0)));
}

#[test]
fn stasheff_identities_hold() {
    for n in 2..=6 {
        for n_x in 2..=4 {
            let a = AInfinityNakayama::new(n, n_x, 1);
            let report = a.check_stasheff(2 * n_x + 2, 2 * n_x as usize);
            assert!(report.pass, "(n, n_x) = ({n}, {n_x}): {:?}", report.failure);
        }
    }
    assert!(AInfinityNakayama::new(9, 3, 2).check_stasheff(10, 6).pass);
    assert!(AInfinityNakayama::new(4, 2, 1).check_stasheff(10, 5).pass);
}

#[test]
fn corrupted_top_product_fails() {
    let a = AInfinityNakayama::new(9, 3, 2).with_corrupted_top();
    let report = a.check_stasheff(10, 6);
    assert!(!report.pass);
    assert!(!a.compare_with_dg(12, Q).pass());
}

#[test]
fn bar_differential_matches_closed_form() {
    let a = AInfinityNakayama::new(9, 3, 2);
    assert_eq!(a.bar_differential(1, 0, Q).display(&a.params), "0");
    assert_eq!(a.bar_differential(3, 0, Q).display(&a.params), "β_{2,2}β_{1,0} - β_{1,6}β_{2,0}");
    let cmp = a.compare_with_dg(12, Q);
    assert!(cmp.pass(), "{:?}", cmp.mismatches.first());
    for (n, n_x, m) in [(4, 2, 1), (7, 4, 2), (5, 3, 1), (5, 2, 2)] {
        assert!(AInfinityNakayama::new(n, n_x, m).compare_with_dg(10, Q).pass(), "({n}, {n_x}, {m})");
    }
}
