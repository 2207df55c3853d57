use cmtilt::arith::Field;
use cmtilt::gamma::assemble_gamma;
use cmtilt::golden;
use cmtilt::homalg::{
    cartan_matrix, coxeter_polynomial, global_dimension, incidence_algebra, minimal_projective_resolution, nakayama, self_injective_dimension,
    Dimension, FDModule, Poset, ResolutionStatus, Side, Start,
};

const Q: Field = Field::Rationals;
const BOUND: usize = 20;

fn chain(n: usize) -> Poset {
    Poset {
        labels: (1..=n).map(|i| i.to_string()).collect(),
        leq: (0..n).map(|u| (0..n).map(|v| u <= v).collect()).collect(),
    }
}

fn antichain(n: usize) -> Poset {
    Poset {
        labels: (1..=n).map(|i| i.to_string()).collect(),
        leq: (0..n).map(|u| (0..n).map(|v| u == v).collect()).collect(),
    }
}

#[test]
fn incidence_algebras_of_small_posets() {
    let a = incidence_algebra(Q, &antichain(3));
    assert_eq!(a.dim(), 3);
    assert_eq!(global_dimension(&a, BOUND), Dimension::Finite(0));
    let c = incidence_algebra(Q, &chain(3));
    assert_eq!(c.dim(), 6);
    assert!(chain(3).is_partial_order());
    assert_eq!(chain(3).hasse(), [(0, 1), (1, 2)]);
    assert!(c.check_associativity(usize::MAX).is_ok());
    assert_eq!(global_dimension(&c, BOUND), Dimension::Finite(1));
    assert_eq!(global_dimension(&c.opposite(), BOUND), Dimension::Finite(1));
    assert_eq!(self_injective_dimension(&c, Side::Left, BOUND), Dimension::Finite(1));
    assert_eq!(self_injective_dimension(&c, Side::Right, BOUND), Dimension::Finite(1));
}

#[test]
fn simple_projective_has_dimension_zero() {
    // In the chain 1 < 2 < 3, e_1 A = span{e_{1,1}} is simple; e_3 A has radical e_{2,3}A.
    let c = incidence_algebra(Q, &chain(3));
    let r = minimal_projective_resolution(&c, Start::Simple(0), BOUND);
    assert_eq!(r.status, ResolutionStatus::Terminated(0));
    assert_eq!(r.steps, vec![vec![(0, 1)]]);
    let r = minimal_projective_resolution(&c, Start::Simple(2), BOUND);
    assert_eq!(r.steps, vec![vec![(2, 1)], vec![(1, 1)]]);
}

#[test]
fn nakayama_is_self_injective_with_periodic_simples() {
    for (n, len) in [(3, 2), (4, 3), (9, 3)] {
        let a = nakayama(Q, n, len);
        assert!(a.check_associativity(usize::MAX).is_ok());
        assert_eq!(self_injective_dimension(&a, Side::Left, BOUND), Dimension::Finite(0));
        assert_eq!(self_injective_dimension(&a, Side::Right, BOUND), Dimension::Finite(0));
        let r = minimal_projective_resolution(&a, Start::Simple(0), BOUND);
        assert!(matches!(r.status, ResolutionStatus::PeriodicityDetected { .. }), "{n} {len}: {:?}", r.status);
    }
}

#[test]
fn dual_modules_are_modules() {
    for alg in [incidence_algebra(Q, &chain(4)), nakayama(Q, 3, 2), assemble_gamma(&golden::e7()).unwrap().algebra] {
        for v in 0..alg.vertex_count() {
            assert!(FDModule::dual_of_left_projective(&alg, v).check_action(&alg));
        }
    }
}

#[test]
fn e7_dimensions() {
    let g = assemble_gamma(&golden::e7()).unwrap();
    assert_eq!(global_dimension(&g.algebra, BOUND), Dimension::Finite(2));
    assert_eq!(global_dimension(&g.algebra.opposite(), BOUND), Dimension::Finite(2));
    for side in [Side::Left, Side::Right] {
        let d = self_injective_dimension(&g.algebra, side, BOUND).finite().unwrap();
        assert!(d <= 2);
    }
}

#[test]
fn non_reduced_has_infinite_global_dimension() {
    for n_y in [2, 3] {
        let g = assemble_gamma(&golden::y_power(n_y)).unwrap();
        assert!(matches!(global_dimension(&g.algebra, BOUND), Dimension::Infinite { .. }), "n_y={n_y}");
        for side in [Side::Left, Side::Right] {
            let d = self_injective_dimension(&g.algebra, side, BOUND).finite().unwrap();
            assert!(d <= 2, "n_y={n_y} {side:?}");
        }
    }
}

#[test]
fn euler_characteristic_of_terminated_resolutions() {
    for spec in golden::nonnegative_suite() {
        let alg = assemble_gamma(&spec).unwrap().algebra;
        for v in 0..alg.vertex_count() {
            let r = minimal_projective_resolution(&alg, Start::Simple(v), BOUND);
            if !matches!(r.status, ResolutionStatus::Terminated(_)) {
                continue;
            }
            let mut chi: i64 = 0;
            for (k, step) in r.steps.iter().enumerate() {
                let d: usize = step.iter().map(|&(w, mult)| mult * alg.elements_into(w).len()).sum();
                chi += if k % 2 == 0 { d as i64 } else { -(d as i64) };
            }
            assert_eq!(chi, alg.top_dim(v) as i64, "{:?} vertex {v}", spec.name);
        }
    }
}

/// Poset whose Hasse diagram is the given forest of covering pairs.
fn from_covers(n: usize, covers: &[(usize, usize)]) -> Poset {
    let mut leq: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u == v).collect()).collect();
    for _ in 0..n {
        for &(u, v) in covers {
            for w in 0..n {
                if leq[w][u] {
                    leq[w][v] = true;
                }
            }
        }
    }
    Poset { labels: (1..=n).map(|i| i.to_string()).collect(), leq }
}

#[test]
fn coxeter_polynomials() {
    let a4 = incidence_algebra(Q, &chain(4));
    assert_eq!(coxeter_polynomial(&a4).unwrap(), [1, 1, 1, 1, 1]);
    assert_eq!(cartan_matrix(&a4)[3], [1, 1, 1, 1]);
    let e7 = incidence_algebra(Q, &from_covers(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 2)]));
    let tree = coxeter_polynomial(&e7).unwrap();
    assert_eq!(tree, [1, 1, 0, -1, -1, 0, 1, 1]);
    let gamma = assemble_gamma(&golden::e7()).unwrap();
    assert_eq!(coxeter_polynomial(&gamma.algebra).unwrap(), tree);
    assert_eq!(coxeter_polynomial(&nakayama(Q, 3, 3)), None);
}
