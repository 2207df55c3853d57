mod common;

use cmtilt::arith::Field;
use cmtilt::gamma::{assemble_gamma, radical_layers, Gamma};
use cmtilt::golden;
use cmtilt::quiver::{
    build_phi, build_quiver, choose_rs, contains_ideal, gabriel_mismatches, kernel_relations, listed_relations, literal_relations,
    quiver_dot, same_ideal, verify_presentation, RelationSet,
};
use cmtilt::ring::{uni, HypersurfaceSpec};

use common::{class_completion, class_generators, consecutive_listed, quartic_common, rel, set, CLASSES};

fn setup(spec: &HypersurfaceSpec) -> (Gamma, usize) {
    let g = assemble_gamma(spec).unwrap();
    let l = radical_layers(&g.algebra).nilpotency;
    (g, l)
}

#[test]
fn choose_rs_validates_overrides() {
    assert_eq!(choose_rs(2, 3, None).unwrap(), (2, -1));
    assert_eq!(choose_rs(2, 3, Some((-1, 1))).unwrap(), (-1, 1));
    assert!(choose_rs(2, 3, Some((1, 1))).is_err());
    assert_eq!(choose_rs(1, 1, None).unwrap(), (0, 1));
    assert_eq!(choose_rs(2, 9, None).unwrap(), (5, -1));
    assert_eq!(choose_rs(1, 4, None).unwrap(), (1, 0));
}

#[test]
fn e7_quiver_matches_diagram() {
    let q = build_quiver(&golden::e7());
    assert_eq!(q.vertices, ["1", "2", "3", "4", "(0,y)", "(1,y)", "(0,1)"]);
    let mut arrows: Vec<String> = q
        .arrows
        .iter()
        .map(|a| format!("{}:{}->{}", a.name, q.vertices[a.source], q.vertices[a.target]))
        .collect();
    arrows.sort();
    assert_eq!(
        arrows,
        [
            "a_{0,1}:3->(0,1)",
            "a_{0,y}:3->(0,y)",
            "a_{1,1}:4->(0,1)",
            "a_{1,y}:4->(1,y)",
            "x_1:1->3",
            "x_2:2->4",
            "y_1:1->4",
        ]
    );
    assert_eq!(quiver_dot(&q), quiver_dot(&build_quiver(&golden::e7())));
}

#[test]
fn e7_relations_for_several_units() {
    let (g, l) = setup(&golden::e7());
    for rs in [(2, -1), (-1, 1), (5, -3), (-4, 3)] {
        let pm = build_phi(&g, rs, 2 * l).unwrap();
        let expected = set(
            &pm,
            vec![
                rel(&pm, &[(1, &["y_1", "a_{1,y}"])]),
                rel(&pm, &[(1, &["x_1", "a_{0,1}"]), (-1, &["y_1", "a_{1,1}"])]),
            ],
        );
        let report = verify_presentation(&pm, &expected, l);
        assert!(report.pass, "{rs:?}: {}", report.reason);
        let kernel = kernel_relations(&pm, l);
        assert_eq!(kernel.relations.len(), 2);
        assert!(same_ideal(&pm, &kernel, &expected, l));
        let literal = literal_relations(&pm, l);
        assert!(same_ideal(&pm, &literal, &expected, l));
    }
}

#[test]
fn e7_listed_relations() {
    let (g, _) = setup(&golden::e7());
    let pm = build_phi(&g, (2, -1), 6).unwrap();
    let listed: Vec<String> = listed_relations(&pm).iter().map(|r| r.display(&pm.quiver)).collect();
    assert_eq!(listed, ["-a_{1,y}*y_1"]);
}

#[test]
fn corrupted_coefficient_fails() {
    let (g, l) = setup(&golden::e7());
    let pm = build_phi(&g, (2, -1), 6).unwrap();
    let bad = set(
        &pm,
        vec![
            rel(&pm, &[(1, &["y_1", "a_{1,y}"])]),
            rel(&pm, &[(1, &["x_1", "a_{0,1}"]), (-2, &["y_1", "a_{1,1}"])]),
        ],
    );
    let report = verify_presentation(&pm, &bad, l);
    assert!(!report.pass);
    assert!(report.bad_generator.is_some());
    let missing = set(&pm, vec![rel(&pm, &[(1, &["y_1", "a_{1,y}"])])]);
    let report = verify_presentation(&pm, &missing, l);
    assert!(!report.pass);
    assert!(report.certificate_length.is_none());
}

#[test]
fn consecutive_family_relations() {
    let mut deficits = Vec::new();
    for m in 2..=5u32 {
        let spec = golden::consecutive(m);
        let mi = m as i64;
        let a = spec.a_invariant();
        assert_eq!(a, mi * mi - mi - 1);
        let (g, l) = setup(&spec);
        for rs in [(-1, 1), (mi, 1 - mi), (2 * mi + 1, 1 - 2 * mi)] {
            let rs = choose_rs(m, m + 1, Some(rs)).unwrap();
            let pm = build_phi(&g, rs, 2 * l).unwrap();
            let listed = consecutive_listed(&pm, m);
            let kernel = kernel_relations(&pm, l);
            assert!(contains_ideal(&pm, &kernel, &listed, l));
            let report = verify_presentation(&pm, &listed, l);
            if m <= 3 {
                assert!(report.pass, "m={m} {rs:?}: {}", report.reason);
                assert!(same_ideal(&pm, &kernel, &listed, l));
                assert_eq!(kernel.relations.len(), listed.relations.len());
                continue;
            }
            // From m = 4 on, the paths x² then a_{m-1,1} and y then a_{0,1} out of
            // m² − 3m − 1 are parallel and agree in Γ, but no listed relation starts there.
            assert!(!report.pass);
            deficits.push((m, report.rows.last().unwrap().quotient - g.dim()));
            let v = mi * mi - 3 * mi - 1;
            let wrap = rel(
                &pm,
                &[
                    (1, &[&format!("x_{v}"), &format!("x_{}", v + mi), &format!("a_{{{},1}}", mi - 1)]),
                    (-1, &[&format!("y_{v}"), "a_{0,1}"]),
                ],
            );
            let mut completed = listed.clone();
            completed.relations.push(wrap);
            assert!(verify_presentation(&pm, &completed, l).pass);
            assert!(same_ideal(&pm, &kernel, &completed, l));
            assert_eq!(kernel.relations.len(), completed.relations.len());
        }
    }
    assert_eq!(deficits, [(4, 1), (4, 1), (4, 1), (5, 3), (5, 3), (5, 3)]);
}

#[test]
fn quartic_unit_classes() {
    let spec = golden::quartic();
    assert_eq!(spec.a_invariant(), 7);
    let (g, l) = setup(&spec);
    for t in [0i64, 1, -1] {
        for (c, base) in CLASSES.iter().enumerate() {
            let rs = (base.0 + 12 * t, base.1 - 8 * t);
            let pm = build_phi(&g, rs, 2 * l).unwrap();
            let kernel = kernel_relations(&pm, l);
            assert!(verify_presentation(&pm, &kernel, l).pass, "{rs:?}");
            let gens = class_generators(&pm);
            let mut listed = quartic_common(&pm);
            listed.push(gens[c].clone());
            assert!(contains_ideal(&pm, &kernel, &set(&pm, listed.clone()), l), "{rs:?}");
            for (k, other) in gens.iter().enumerate() {
                assert_eq!(pm.eval(other).is_zero(), k == c, "{rs:?} class {k}");
            }
            listed.push(class_completion(&pm)[c].clone());
            let completed = set(&pm, listed);
            assert!(verify_presentation(&pm, &completed, l).pass, "{rs:?}");
            assert!(same_ideal(&pm, &kernel, &completed, l), "{rs:?}");
            let literal = literal_relations(&pm, l);
            assert!(same_ideal(&pm, &kernel, &literal, l), "{rs:?}");
            let rows = |r: &RelationSet| verify_presentation(&pm, r, l).rows;
            assert_eq!(rows(&kernel), rows(&literal), "{rs:?}");
        }
    }
}

#[test]
fn quartic_listed_sets_leave_extra_dimensions() {
    let (g, l) = setup(&golden::quartic());
    assert_eq!(g.dim(), 39);
    let mut quotients = Vec::new();
    for (c, rs) in CLASSES.into_iter().enumerate() {
        let pm = build_phi(&g, rs, 2 * l).unwrap();
        let mut listed = quartic_common(&pm);
        listed.push(class_generators(&pm)[c].clone());
        let report = verify_presentation(&pm, &set(&pm, listed), l);
        assert!(!report.pass);
        quotients.push(report.rows.last().unwrap().quotient);
    }
    assert_eq!(quotients, [41, 43, 43, 41]);
}

#[test]
fn y_power_quivers() {
    let q2 = build_quiver(&golden::y_power(2));
    assert_eq!(q2.vertices, ["1", "(0,y)", "(1,y)"]);
    let names2: Vec<&str> = q2.arrows.iter().map(|a| a.name.as_str()).collect();
    assert_eq!(names2, ["a_{1,y}", "b_{0,y}", "b_{1,y}"]);
    let q3 = build_quiver(&golden::y_power(3));
    assert_eq!(q3.vertex_count(), 6);
    let mut arrows: Vec<String> =
        q3.arrows.iter().map(|a| format!("{}->{}", q3.vertices[a.source], q3.vertices[a.target])).collect();
    arrows.sort();
    assert_eq!(
        arrows,
        ["(0,y)->(1,y)", "(1,y)->(0,y)", "1->3", "1->4", "2->4", "3->(0,y)", "4->(1,y)"]
    );
}

#[test]
fn y_power_relations_equal_listed() {
    for n_y in [2, 3] {
        let (g, l) = setup(&golden::y_power(n_y));
        let pm = build_phi(&g, (2, -1), 2 * l + 4).unwrap();
        let listed = set(&pm, listed_relations(&pm));
        let report = verify_presentation(&pm, &listed, l);
        assert!(report.pass, "n_y={n_y}: {}", report.reason);
        let kernel = kernel_relations(&pm, l);
        assert!(same_ideal(&pm, &kernel, &listed, l));
    }
}

#[test]
fn gabriel_quiver_matches() {
    for spec in golden::nonnegative_suite() {
        let g = assemble_gamma(&spec).unwrap();
        let q = build_quiver(&spec);
        assert!(gabriel_mismatches(&g, &q).is_empty(), "{:?}", spec.name);
    }
}

#[test]
fn finite_field_presentation() {
    let f5: Field = "p:7".parse().unwrap();
    let spec = HypersurfaceSpec::new(f5, 2, 3, 0, 0, vec![(uni(f5, &[1, 0, 1]), 1)]).unwrap();
    let (g, l) = setup(&spec);
    let pm = build_phi(&g, (2, -1), 2 * l).unwrap();
    let kernel = kernel_relations(&pm, l);
    assert!(verify_presentation(&pm, &kernel, l).pass);
    let literal = literal_relations(&pm, l);
    assert!(same_ideal(&pm, &kernel, &literal, l));
}
