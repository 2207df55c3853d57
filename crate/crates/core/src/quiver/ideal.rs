//! Two-sided ideals of the path algebra, filtered by path length.
//!
//! `W_ℓ` is the span of paths of length `<= ℓ` and, for a generating set `G`,
//! `J_ℓ = span{p·g·q : len p + maxlen g + len q <= ℓ}`. A generating set presents Γ once
//! three things hold: every generator maps to zero; some `ℓ*` has every path of length
//! `ℓ* + 1` congruent modulo `J_{ℓ*+1}` to an element of `W_{ℓ*}`; and
//! `dim W_{ℓ*}/J_{ℓ*} = dim Γ`. Then `kQ = W_{ℓ*} + J`, so `dim kQ/J <= dim Γ`, while the
//! surjection onto Γ gives the reverse inequality.

use std::collections::HashMap;

use serde::Serialize;

use super::{int, Path, PathMap, Provenance, Quiver, Relation, RelationSet};
use crate::arith::{Monomial, Poly};
use crate::gamma::Summand;
use crate::linalg::{Echelon, SparseVec};

const ID_BITS: u32 = 32;

/// All paths up to a length limit, with sort keys placing longer paths first.
struct PathSpace<'q> {
    q: &'q Quiver,
    limit: usize,
    paths: Vec<Path>,
    ids: HashMap<Path, usize>,
    /// `from[v][len]`: ids of paths of length `len` starting at `v`.
    from: Vec<Vec<Vec<usize>>>,
    /// `into[v][len]`: ids of paths of length `len` ending at `v`.
    into: Vec<Vec<Vec<usize>>>,
    ends: Vec<usize>,
}

impl<'q> PathSpace<'q> {
    fn new(q: &'q Quiver, limit: usize) -> PathSpace<'q> {
        let nv = q.vertex_count();
        let mut space = PathSpace {
            q,
            limit,
            paths: Vec::new(),
            ids: HashMap::new(),
            from: vec![vec![Vec::new(); limit + 1]; nv],
            into: vec![vec![Vec::new(); limit + 1]; nv],
            ends: Vec::new(),
        };
        let mut frontier: Vec<Path> = (0..nv).map(Path::trivial).collect();
        for len in 0..=limit {
            let mut next = Vec::new();
            for p in frontier {
                let end = p.end(q);
                let id = space.paths.len();
                space.from[p.start][len].push(id);
                space.into[end][len].push(id);
                space.ends.push(end);
                space.ids.insert(p.clone(), id);
                if len < limit {
                    for k in q.arrows_from(end) {
                        let mut arrows = p.arrows.clone();
                        arrows.push(k);
                        next.push(Path { start: p.start, arrows });
                    }
                }
                space.paths.push(p);
            }
            frontier = next;
        }
        space
    }

    fn key(&self, id: usize) -> usize {
        ((self.limit - self.paths[id].len()) << ID_BITS) | id
    }

    fn id_of_key(key: usize) -> usize {
        key & ((1 << ID_BITS) - 1)
    }

    fn len_of_key(&self, key: usize) -> usize {
        self.limit - (key >> ID_BITS)
    }

    fn pair(&self, id: usize) -> (usize, usize) {
        (self.paths[id].start, self.ends[id])
    }

    fn count_upto(&self, len: usize) -> usize {
        self.from.iter().map(|by_len| by_len[..=len].iter().map(Vec::len).sum::<usize>()).sum()
    }

    fn vector(&self, r: &Relation) -> Option<SparseVec> {
        let mut entries = Vec::new();
        for (c, p) in &r.terms {
            entries.push((self.key(*self.ids.get(p)?), c.clone()));
        }
        Some(SparseVec::from_entries(entries))
    }

    fn relation(&self, v: &SparseVec, provenance: Provenance) -> Relation {
        Relation::new(
            v.iter().map(|(key, c)| (c.clone(), self.paths[PathSpace::id_of_key(key)].clone())).collect(),
            provenance,
        )
    }
}

/// One row of the per-length table: `dim W_ℓ`, `dim J_ℓ` and the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthRow {
    pub length: usize,
    pub paths: usize,
    pub ideal: usize,
    pub quotient: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub pass: bool,
    pub reason: String,
    pub gamma_dim: usize,
    /// The `ℓ*` of the certificate, when found.
    pub certificate_length: Option<usize>,
    pub rows: Vec<LengthRow>,
    /// Display form of the first generator not in the kernel, if any.
    pub bad_generator: Option<String>,
}

/// Incrementally built `J_ℓ` for a growing generating set.
struct Closure<'s, 'q> {
    space: &'s PathSpace<'q>,
    field: crate::arith::Field,
    blocks: HashMap<(usize, usize), Echelon>,
    gens: Vec<(Relation, SparseVec, usize)>,
    rows: Vec<LengthRow>,
}

impl<'s, 'q> Closure<'s, 'q> {
    fn new(space: &'s PathSpace<'q>, field: crate::arith::Field) -> Closure<'s, 'q> {
        Closure { space, field, blocks: HashMap::new(), gens: Vec::new(), rows: Vec::new() }
    }

    fn block(&mut self, pair: (usize, usize)) -> &mut Echelon {
        let field = self.field;
        self.blocks.entry(pair).or_insert_with(|| Echelon::new(field))
    }

    /// Adds a generator; it is inserted into `J` immediately and its multiples are added
    /// as the length grows.
    fn add_generator(&mut self, r: Relation) -> bool {
        let Some(v) = self.space.vector(&r) else { return false };
        if v.is_zero() {
            return false;
        }
        let first = PathSpace::id_of_key(v.first().unwrap().0);
        let pair = self.space.pair(first);
        let len = r.max_len();
        self.block(pair).insert(&v);
        self.gens.push((r, v, len));
        true
    }

    /// Adds all `p·g·q` with total length exactly `ell` and `len p + len q >= 1`.
    fn extend_to(&mut self, ell: usize) {
        let space = self.space;
        let mut pending: Vec<((usize, usize), SparseVec)> = Vec::new();
        for (g, _, glen) in &self.gens {
            if *glen >= ell {
                continue;
            }
            let (gs, ge) = (g.terms[0].1.start, g.terms[0].1.end(space.q));
            let extra = ell - glen;
            for lq in 0..=extra {
                let lp = extra - lq;
                for &qid in &space.into[gs][lq] {
                    for &pid in &space.from[ge][lp] {
                        let (qp, pp) = (&space.paths[qid], &space.paths[pid]);
                        let mut entries = Vec::with_capacity(g.terms.len());
                        for (c, t) in &g.terms {
                            let full = qp.then(t).then(pp);
                            let id = space.ids[&full];
                            entries.push((space.key(id), c.clone()));
                        }
                        pending.push(((qp.start, space.ends[pid]), SparseVec::from_entries(entries)));
                    }
                }
            }
        }
        for (pair, v) in pending {
            self.block(pair).insert(&v);
        }
    }

    fn contains(&self, v: &SparseVec) -> bool {
        let Some((key, _)) = v.first() else { return true };
        let pair = self.space.pair(PathSpace::id_of_key(key));
        match self.blocks.get(&pair) {
            Some(e) => e.contains(v),
            None => false,
        }
    }

    fn ideal_dim(&self) -> usize {
        self.blocks.values().map(Echelon::rank).sum()
    }

    fn record(&mut self, ell: usize) -> LengthRow {
        let paths = self.space.count_upto(ell);
        let ideal = self.ideal_dim();
        let row = LengthRow { length: ell, paths, ideal, quotient: paths - ideal };
        self.rows.push(row.clone());
        row
    }

    /// Whether every path of length `ell` reduces modulo `J_ell` into `W_{ell-1}`.
    fn reduces_below(&self, ell: usize) -> bool {
        let space = self.space;
        for by_len in &space.from {
            for &id in &by_len[ell] {
                let unit = SparseVec::unit(space.key(id), self.field);
                let rem = match self.blocks.get(&space.pair(id)) {
                    Some(e) => e.reduce(&unit),
                    None => unit,
                };
                if rem.iter().any(|(key, _)| space.len_of_key(key) >= ell) {
                    return false;
                }
            }
        }
        true
    }
}

/// Default length limit for the filtration: `2L + 4` for radical nilpotency index `L`.
pub fn length_limit(nilpotency: usize) -> usize {
    2 * nilpotency + 4
}

/// Source of candidate kernel elements: maps a path to a coordinate vector, or `None`
/// when the path's endpoint pair is not subject to the map.
type KernelMap<'a> = dyn Fn(&Path) -> Option<SparseVec> + 'a;

struct Outcome {
    relations: Vec<Relation>,
    rows: Vec<LengthRow>,
    certificate: Option<usize>,
}

/// Runs the filtration loop: at each length, extends `J`, optionally harvests new kernel
/// elements of `map` as generators, and stops at the first certified length.
fn run<'q>(
    space: &PathSpace<'q>,
    pm: &PathMap,
    initial: Vec<Relation>,
    map: Option<&KernelMap>,
    provenance: Provenance,
) -> Outcome {
    let field = pm.gamma.ctx.field();
    let target = pm.gamma.dim();
    let mut closure = Closure::new(space, field);
    let mut initial_by_len: Vec<Vec<Relation>> = vec![Vec::new(); space.limit + 1];
    for r in initial {
        let l = r.max_len().min(space.limit);
        initial_by_len[l].push(r);
    }
    let mut images: HashMap<(usize, usize), (Echelon, Vec<usize>)> = HashMap::new();
    let mut certificate = None;
    for ell in 0..=space.limit {
        closure.extend_to(ell);
        for r in std::mem::take(&mut initial_by_len[ell]) {
            closure.add_generator(r);
        }
        if let Some(map) = map {
            for by_len in &space.from {
                for &id in &by_len[ell] {
                    let p = &space.paths[id];
                    let Some(img) = map(p) else { continue };
                    let (ech, inputs) =
                        images.entry(space.pair(id)).or_insert_with(|| (Echelon::tracked(field), Vec::new()));
                    inputs.push(id);
                    if let Some(combo) = ech.insert_with_combo(&img) {
                        let v = SparseVec::from_entries(combo.iter().map(|(k, c)| (space.key(inputs[k]), c.clone())));
                        if !closure.contains(&v) {
                            let rel = space.relation(&v, provenance);
                            closure.add_generator(rel);
                        }
                    }
                }
            }
        }
        closure.record(ell);
        if ell >= 1 && certificate.is_none() {
            let prev = &closure.rows[ell - 1];
            if prev.quotient == target && closure.reduces_below(ell) {
                certificate = Some(ell - 1);
                break;
            }
        }
    }
    Outcome { relations: closure.gens.into_iter().map(|(r, _, _)| r).collect(), rows: closure.rows, certificate }
}

/// Minimal-by-length generators of `ker φ`.
pub fn kernel_relations(pm: &PathMap, nilpotency: usize) -> RelationSet {
    let space = PathSpace::new(&pm.quiver, length_limit(nilpotency));
    let map = |p: &Path| Some(pm.eval_path(p));
    let out = run(&space, pm, Vec::new(), Some(&map), Provenance::Kernel);
    RelationSet { relations: out.relations, rs: pm.rs }
}

/// The listed generators of `I` followed by generators of each `I^j_{r,s}`, the latter
/// computed from the localized-module description.
pub fn literal_relations(pm: &PathMap, nilpotency: usize) -> RelationSet {
    let space = PathSpace::new(&pm.quiver, length_limit(nilpotency));
    let listed = listed_relations(pm);
    let map = |p: &Path| literal_image(pm, p);
    let out = run(&space, pm, listed, Some(&map), Provenance::Intersection);
    RelationSet { relations: out.relations, rs: pm.rs }
}

/// Checks a relation set against Γ and reports the per-length table.
pub fn verify_presentation(pm: &PathMap, relations: &RelationSet, nilpotency: usize) -> PresentationReport {
    let gamma_dim = pm.gamma.dim();
    let limit = length_limit(nilpotency).max(relations.relations.iter().map(Relation::max_len).max().unwrap_or(0));
    for r in &relations.relations {
        if !pm.eval(r).is_zero() {
            return PresentationReport {
                pass: false,
                reason: "a generator does not lie in the kernel".into(),
                gamma_dim,
                certificate_length: None,
                rows: Vec::new(),
                bad_generator: Some(r.display(&pm.quiver)),
            };
        }
    }
    let space = PathSpace::new(&pm.quiver, limit);
    let out = run(&space, pm, relations.relations.clone(), None, Provenance::Listed);
    let (pass, reason) = match out.certificate {
        Some(l) => (true, format!("certified at length {l}")),
        None => {
            let last = out.rows.last().map(|r| r.quotient).unwrap_or(0);
            (false, format!("no certificate up to length {limit}; last quotient dimension {last} vs {gamma_dim}"))
        }
    };
    PresentationReport { pass, reason, gamma_dim, certificate_length: out.certificate, rows: out.rows, bad_generator: None }
}

/// Whether every relation of `small` lies in the ideal generated by `big`. Exact when
/// `big` presents Γ; otherwise membership is tested in `J_ℓ` up to the length limit only.
pub fn contains_ideal(pm: &PathMap, big: &RelationSet, small: &RelationSet, nilpotency: usize) -> bool {
    let limit = length_limit(nilpotency)
        .max(big.relations.iter().chain(&small.relations).map(Relation::max_len).max().unwrap_or(0));
    let space = PathSpace::new(&pm.quiver, limit);
    let mut closure = Closure::new(&space, pm.gamma.ctx.field());
    let mut pending: Vec<Relation> = big.relations.clone();
    pending.sort_by_key(Relation::max_len);
    let mut it = pending.into_iter().peekable();
    for ell in 0..=limit {
        closure.extend_to(ell);
        while it.peek().is_some_and(|r| r.max_len() <= ell) {
            closure.add_generator(it.next().unwrap());
        }
    }
    small.relations.iter().all(|r| space.vector(r).is_some_and(|v| closure.contains(&v)))
}

/// Whether two relation sets generate the same ideal. Both must present Γ.
pub fn same_ideal(pm: &PathMap, a: &RelationSet, b: &RelationSet, nilpotency: usize) -> bool {
    contains_ideal(pm, a, b, nilpotency) && contains_ideal(pm, b, a, nilpotency)
}

/// The image of a path from an interior vertex to `(0, j)` in `K^j`, computed in the
/// localized free module, where `a_{t,j}` contributes `(x^r y^s)^{m-t}` and each `b_j`
/// contributes `x^n / y^m`, followed by reduction modulo `g_j(z)^{n_j}`.
fn literal_image(pm: &PathMap, p: &Path) -> Option<SparseVec> {
    let q = &pm.quiver;
    let end = p.end(q);
    let Summand::F(j) = q.summand(end) else { return None };
    if !matches!(q.summand(p.start), Summand::Interior(_)) {
        return None;
    }
    let spec = &pm.gamma.ctx.spec;
    let (m, n) = (spec.m(), spec.n());
    let (r, s) = pm.rs;
    let (mut ex, mut ey) = (0i64, 0i64);
    for &k in &p.arrows {
        match q.arrows[k].kind {
            super::ArrowKind::X => ex += 1,
            super::ArrowKind::Y => ey += 1,
            super::ArrowKind::AJ(t, _) => {
                ex += r * (m - t);
                ey += s * (m - t);
            }
            super::ArrowKind::BJ(_) => {
                ex += n;
                ey -= m;
            }
            _ => unreachable!("paths into (0,j) use x, y, a and b arrows only"),
        }
    }
    let field = spec.field;
    let mono = Monomial::new(ex, ey);
    let d = spec.weights.degree(mono);
    let zp = pm.gamma.ctx.to_z_poly(j, &Poly::monomial(field, field.one(), mono), d);
    Some(SparseVec::from_entries(zp.coeffs().iter().cloned().enumerate()))
}

/// Generators of `I` as listed: cycles of `b_x`, `b_y` of length `n_x`, `n_y`;
/// `g_j(b_j)^{n_j}`; commutativity `xy − yx`; and the two mixed families.
///
/// Terms through omitted `b`-arrows are zero. A relation is dropped when one of its
/// nonzero terms leaves the quiver.
pub fn listed_relations(pm: &PathMap) -> Vec<Relation> {
    use super::ArrowKind as K;
    let q = &pm.quiver;
    let spec = &pm.gamma.ctx.spec;
    let field = spec.field;
    let (m, n, a) = (spec.m(), spec.n(), spec.a_invariant());
    let mut out = Vec::new();
    let one = || field.one();
    let neg = || -field.one();

    // Walk from a start vertex along the arrows of the given kinds.
    let walk = |start: Option<usize>, kinds: &[K]| -> Option<Path> {
        let mut p = Path::trivial(start?);
        for &kind in kinds {
            let k = q.find_arrow(kind, p.end(q))?;
            p.arrows.push(k);
        }
        Some(p)
    };

    for (count, fam, len, exists) in [
        (spec.n_x, 'x', n, spec.n_x > 1),
        (spec.n_y, 'y', m, spec.n_y > 1),
    ] {
        if !exists {
            continue;
        }
        for i in 0..len {
            let v = q.vertex(if fam == 'x' { Summand::X(a + 1 + i) } else { Summand::Y(a + 1 + i) });
            let mut p = Path::trivial(v.unwrap());
            for _ in 0..count {
                let end = p.end(q);
                let k = q.arrows_from(end).find(|&k| matches!(q.arrows[k].kind, K::BX(_) | K::BY(_))).unwrap();
                p.arrows.push(k);
            }
            out.push(Relation::new(vec![(one(), p)], Provenance::Listed));
        }
    }

    for (j, fac) in spec.factors.iter().enumerate() {
        let v = q.vertex(Summand::F(j)).unwrap();
        let Some(b) = q.find_arrow(K::BJ(j), v) else { continue };
        let big = fac.power();
        let terms = big
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), Path { start: v, arrows: vec![b; k] }))
            .collect();
        out.push(Relation::new(terms, Provenance::Listed));
    }

    for i in 1..=a - m - n {
        let (Some(xy), Some(yx)) = (walk(q.interior(i), &[K::X, K::Y]), walk(q.interior(i), &[K::Y, K::X])) else {
            continue;
        };
        out.push(Relation::new(vec![(one(), xy), (neg(), yx)], Provenance::Listed));
    }

    // b_{i,x} a_{i,x} y^F − a_{i+m,x} x with F = ⌊(i+m)/n⌋, and the y-analogue.
    if spec.n_x > 0 {
        for i in 0..n {
            let f = (i + m).div_euclid(n);
            let t = (i + m).rem_euclid(n);
            let start = a - n + 1 + i - n * f;
            let mut kinds = vec![K::Y; f as usize];
            kinds.push(K::AX(i));
            let with_b = spec.n_x > 1;
            if with_b {
                kinds.push(K::BX(i));
            }
            let first = walk(q.interior(start), &kinds);
            let second = walk(q.interior(start), &[K::X, K::AX(t)]);
            if let Some(r) = mixed(with_b, first, second, field) {
                out.push(r);
            }
        }
    }
    if spec.n_y > 0 {
        for i in 0..m {
            let f = (i + n).div_euclid(m);
            let t = (i + n).rem_euclid(m);
            let start = a - m + 1 + i - m * f;
            let mut kinds = vec![K::X; f as usize];
            kinds.push(K::AY(i));
            let with_b = spec.n_y > 1;
            if with_b {
                kinds.push(K::BY(i));
            }
            let first = walk(q.interior(start), &kinds);
            let second = walk(q.interior(start), &[K::Y, K::AY(t)]);
            if let Some(r) = mixed(with_b, first, second, field) {
                out.push(r);
            }
        }
    }
    out
}

fn mixed(with_b: bool, first: Option<Path>, second: Option<Path>, field: crate::arith::Field) -> Option<Relation> {
    let mut terms = Vec::new();
    if with_b {
        terms.push((int(field, 1), first?));
    }
    terms.push((int(field, -1), second?));
    Some(Relation::new(terms, Provenance::Listed))
}
