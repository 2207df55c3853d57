#![allow(dead_code)]

use cmtilt::dg::{DgParams, DgPath};
use cmtilt::quiver::{Path, PathMap, Provenance, Relation, RelationSet};

/// Builds a relation from `(coefficient, arrows in traversal order)`; a single entry
/// `"e:LABEL"` stands for the trivial path at that vertex.
pub fn rel(pm: &PathMap, terms: &[(i64, &[&str])]) -> Relation {
    let q = &pm.quiver;
    let field = pm.gamma.ctx.field();
    let terms = terms
        .iter()
        .map(|(c, names)| {
            let path = match names {
                [single] if single.starts_with("e:") => {
                    let v = q.vertices.iter().position(|l| l == &single[2..]).expect("vertex");
                    Path::trivial(v)
                }
                _ => {
                    let arrows: Vec<usize> = names.iter().map(|n| q.arrow_by_name(n).expect(n)).collect();
                    let start = q.arrows[arrows[0]].source;
                    for w in arrows.windows(2) {
                        assert_eq!(q.arrows[w[0]].target, q.arrows[w[1]].source, "{names:?} is not a path");
                    }
                    Path { start, arrows }
                }
            };
            (field.from_i64(*c), path)
        })
        .collect();
    Relation::new(terms, Provenance::Listed)
}

pub fn set(pm: &PathMap, rels: Vec<Relation>) -> RelationSet {
    RelationSet { relations: rels, rs: pm.rs }
}

/// A term written as composition, leftmost factor first: `(p, vertex offset)` pairs.
pub type Written<'a> = (i64, &'a [(u32, usize)]);

pub fn expected(params: &DgParams, i: usize, terms: &[Written]) -> Vec<(i64, DgPath)> {
    let mut out: Vec<(i64, DgPath)> = terms
        .iter()
        .map(|(c, factors)| {
            let arrows: Vec<u32> = factors.iter().rev().map(|f| f.0).collect();
            let path = DgPath { start: i, arrows };
            let offsets: Vec<usize> = factors.iter().rev().map(|f| (i + f.1) % params.n as usize).collect();
            let verts = path.vertices(params);
            assert_eq!(offsets, verts[..verts.len() - 1].to_vec(), "listed vertices disagree with ν");
            (*c, path)
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

pub fn golden_list() -> Vec<(u32, Vec<Written<'static>>)> {
    vec![
        (1, vec![]),
        (2, vec![(-1, &[(1, 4), (1, 2), (1, 0)])]),
        (3, vec![(1, &[(2, 2), (1, 0)]), (-1, &[(1, 6), (2, 0)])]),
        (
            4,
            vec![
                (1, &[(2, 6), (2, 0)]),
                (-1, &[(3, 4), (1, 2), (1, 0)]),
                (-1, &[(1, 10), (3, 2), (1, 0)]),
                (-1, &[(1, 10), (1, 8), (3, 0)]),
            ],
        ),
        (
            5,
            vec![
                (1, &[(4, 2), (1, 0)]),
                (-1, &[(3, 6), (2, 0)]),
                (1, &[(2, 8), (3, 0)]),
                (-1, &[(1, 12), (4, 0)]),
            ],
        ),
        (
            6,
            vec![
                (1, &[(4, 6), (2, 0)]),
                (1, &[(2, 12), (4, 0)]),
                (-1, &[(5, 4), (1, 2), (1, 0)]),
                (-1, &[(1, 16), (5, 2), (1, 0)]),
                (-1, &[(1, 16), (1, 14), (5, 0)]),
                (-1, &[(3, 10), (3, 2), (1, 0)]),
                (-1, &[(3, 10), (1, 8), (3, 0)]),
                (-1, &[(1, 16), (3, 8), (3, 0)]),
            ],
        ),
    ]
}

/// The listed relations `xy − yx` and `a_{i,1}x − a_{i+1,1}y` for `f = x^{m+1} − y^m`.
pub fn consecutive_listed(pm: &PathMap, m: u32) -> RelationSet {
    let mi = m as i64;
    let a = mi * mi - mi - 1;
    let mut listed = Vec::new();
    for i in 1..=a - 2 * mi - 1 {
        let (xi, yi) = (format!("x_{i}"), format!("y_{i}"));
        let (y2, x2) = (format!("y_{}", i + mi), format!("x_{}", i + mi + 1));
        listed.push(rel(pm, &[(1, &[&xi, &y2]), (-1, &[&yi, &x2])]));
    }
    for i in 0..mi - 1 {
        let ai = format!("a_{{{i},1}}");
        let aj = format!("a_{{{},1}}", i + 1);
        let src = a - 2 * mi + 1 + i;
        if src < 1 {
            continue;
        }
        listed.push(rel(pm, &[(1, &[&format!("x_{src}"), &ai]), (-1, &[&format!("y_{src}"), &aj])]));
    }
    set(pm, listed)
}

/// Relations shared by all unit classes for `x⁶ + y⁴`.
pub fn quartic_common(pm: &PathMap) -> Vec<Relation> {
    vec![
        rel(pm, &[(1, &["x_1", "y_3"]), (-1, &["y_1", "x_4"])]),
        rel(pm, &[(1, &["x_2", "y_4"]), (-1, &["y_2", "x_5"])]),
        rel(pm, &[(1, &["b_{0,1}", "b_{0,1}"]), (1, &["e:(0,1)"])]),
        rel(pm, &[(1, &["y_1", "y_4", "a_{1,1}", "b_{0,1}"]), (-1, &["x_1", "x_3", "x_5", "a_{1,1}"])]),
    ]
}

pub fn class_generators(pm: &PathMap) -> [Relation; 4] {
    [
        rel(pm, &[(1, &["x_4", "a_{0,1}"]), (-1, &["y_4", "a_{1,1}"])]),
        rel(pm, &[(1, &["y_3", "a_{0,1}"]), (-1, &["x_3", "x_5", "a_{1,1}"])]),
        rel(pm, &[(1, &["y_3", "a_{0,1}"]), (1, &["x_3", "x_5", "a_{1,1}"])]),
        rel(pm, &[(1, &["x_4", "a_{0,1}"]), (1, &["y_4", "a_{1,1}"])]),
    ]
}

/// The length-three relation through `b_{0,1}` that each class needs besides its listed
/// generators.
pub fn class_completion(pm: &PathMap) -> [Relation; 4] {
    [
        rel(pm, &[(1, &["y_3", "a_{0,1}", "b_{0,1}"]), (-1, &["x_3", "x_5", "a_{1,1}"])]),
        rel(pm, &[(1, &["x_4", "a_{0,1}", "b_{0,1}"]), (1, &["y_4", "a_{1,1}"])]),
        rel(pm, &[(1, &["x_4", "a_{0,1}", "b_{0,1}"]), (-1, &["y_4", "a_{1,1}"])]),
        rel(pm, &[(1, &["y_3", "a_{0,1}", "b_{0,1}"]), (1, &["x_3", "x_5", "a_{1,1}"])]),
    ]
}

pub const CLASSES: [(i64, i64); 4] = [(-1, 1), (2, -1), (-4, 3), (5, -3)];
