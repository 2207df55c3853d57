use std::collections::BTreeMap;
use std::time::Instant;

use cmtilt::arith::Field;
use cmtilt::gamma::{assemble_gamma, Summand};
use cmtilt::homalg::{global_dimension, minimal_projective_resolution, ResolutionStatus, Start};
use cmtilt::semigroup::{NumericalSemigroup, SemigroupError};

const Q: Field = Field::Rationals;

#[test]
fn frobenius_numbers() {
    assert_eq!(NumericalSemigroup::new(&[15, 21, 35]).unwrap().frobenius, 139);
    assert_eq!(NumericalSemigroup::new(&[2, 3]).unwrap().frobenius, 1);
    for m in 2..=9u64 {
        for n in m + 1..=12 {
            if num_integer::gcd(m, n) == 1 {
                assert_eq!(NumericalSemigroup::new(&[m, n]).unwrap().frobenius, (m * n - m - n) as i64);
            }
        }
    }
    assert_eq!(NumericalSemigroup::new(&[4, 6]).unwrap_err(), SemigroupError::NotCofinite(2));
    assert_eq!(NumericalSemigroup::new(&[1, 5]).unwrap().frobenius, -1);
}

#[test]
fn minimal_generators_drop_redundant_ones() {
    assert_eq!(NumericalSemigroup::new(&[3, 5, 6, 8]).unwrap().minimal_generators(), [3, 5]);
    assert!(matches!(
        NumericalSemigroup::new(&[3, 5, 7]).unwrap().bridge(Q),
        Err(SemigroupError::NotTwoGenerated(3))
    ));
}

#[test]
fn hom_posets_are_partial_orders() {
    for gens in [vec![2, 3], vec![3, 4], vec![3, 5, 7], vec![4, 6, 9], vec![5, 7, 11]] {
        let s = NumericalSemigroup::new(&gens).unwrap();
        let p = s.hom_poset().unwrap();
        assert!(p.is_partial_order(), "{gens:?}");
        assert_eq!(s.gamma(Q).unwrap().dim(), p.comparable_pairs());
    }
    assert_eq!(NumericalSemigroup::new(&[2, 3]).unwrap().gamma(Q).unwrap().vertex_count(), 2);
}

#[test]
fn three_generator_example() {
    let start = Instant::now();
    let s = NumericalSemigroup::new(&[15, 21, 35]).unwrap();
    let p = s.hom_poset().unwrap();
    assert_eq!(p.len(), 140);
    let mut hasse = p.hasse();
    let mut expected = Vec::new();
    for (step, last) in [(15, 124), (21, 118), (35, 104)] {
        expected.extend((1..=last).map(|i| (i - 1, i - 1 + step)));
    }
    expected.extend((0..15).map(|i| (i + 125 - 1, 139)));
    hasse.sort_unstable();
    expected.sort_unstable();
    assert_eq!(hasse, expected);

    let gamma = s.gamma(Q).unwrap();
    let op = gamma.opposite();
    let r = minimal_projective_resolution(&op, Start::Simple(0), 20);
    assert_eq!(r.status, ResolutionStatus::Terminated(4));
    assert_eq!(
        r.display_steps(op.vertex_labels()),
        ["P1", "P16 + P22 + P36", "P37 + P51 + P57 + P106^2", "P72 + P121^2 + P127^2", "P140^2"]
    );
    assert_eq!(global_dimension(&gamma, 20).finite(), Some(4));
    eprintln!("three-generator example: {:?}", start.elapsed());
}

/// Arrow multiplicities of the Gabriel quiver with vertices renamed by `name`.
fn gabriel(alg: &cmtilt::algebra::BasedAlgebra, name: impl Fn(usize) -> i64) -> BTreeMap<(i64, i64), usize> {
    let mut out = BTreeMap::new();
    for (u, v, _) in alg.gabriel_generators() {
        *out.entry((name(u), name(v))).or_default() += 1;
    }
    out
}

#[test]
fn two_generator_semigroups_match_curves() {
    for (m, n) in [(2, 3), (3, 4), (3, 5), (4, 5), (3, 7), (5, 7)] {
        let s = NumericalSemigroup::new(&[m, n]).unwrap();
        let via_poset = s.gamma(Q).unwrap();
        let spec = s.bridge(Q).unwrap();
        let a = spec.a_invariant();
        assert_eq!(a, s.frobenius);
        let g = assemble_gamma(&spec).unwrap();
        assert_eq!(g.dim(), via_poset.dim(), "({m},{n})");
        let curve = gabriel(&g.algebra, |v| match g.summands[v] {
            Summand::Interior(i) => i,
            Summand::F(_) => a + 1,
            other => panic!("unexpected summand {other:?}"),
        });
        let poset = gabriel(&via_poset, |v| v as i64 + 1);
        assert_eq!(curve, poset, "({m},{n})");
    }
}
