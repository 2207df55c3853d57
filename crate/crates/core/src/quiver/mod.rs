//! The quiver with relations presenting Γ, the surjection from its path algebra, and exact
//! verification of the presentation.

mod ideal;
mod output;

pub use ideal::{
    contains_ideal, kernel_relations, length_limit, listed_relations, literal_relations, same_ideal, verify_presentation, LengthRow,
    PresentationReport,
};
pub use output::{quiver_dot, relations_json};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{Field, Monomial, Poly, Scalar};
use crate::gamma::{summands, Gamma, Summand};
use crate::linalg::SparseVec;
use crate::ring::{canonical_unit, HypersurfaceSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("(r, s) = ({r}, {s}) does not satisfy r·{m} + s·{n} = 1")]
    BadUnit { r: i64, s: i64, m: u32, n: u32 },
    #[error("path algebra map is not surjective: image has dimension {image}, Γ has {dim}")]
    NotSurjective { image: usize, dim: usize },
}

/// `(r, s)` with `rm + sn = 1`: the canonical pair, or a validated override.
pub fn choose_rs(m: u32, n: u32, over: Option<(i64, i64)>) -> Result<(i64, i64), QuiverError> {
    match over {
        None => Ok(canonical_unit(m, n)),
        Some((r, s)) if r * m as i64 + s * n as i64 == 1 => Ok((r, s)),
        Some((r, s)) => Err(QuiverError::BadUnit { r, s, m, n }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ArrowKind {
    X,
    Y,
    /// `a_{i,x}`.
    AX(i64),
    /// `a_{i,y}`.
    AY(i64),
    /// `a_{i,j}`, factor index `j` from 0.
    AJ(i64, usize),
    BX(i64),
    BY(i64),
    BJ(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub kind: ArrowKind,
}

#[derive(Clone, Debug, Serialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(skip)]
    summands: Vec<Summand>,
    #[serde(skip)]
    a: i64,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&k| self.arrows[k].source == v)
    }

    pub fn find_arrow(&self, kind: ArrowKind, source: usize) -> Option<usize> {
        self.arrows.iter().position(|ar| ar.kind == kind && ar.source == source)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|ar| ar.name == name)
    }

    fn vertex(&self, s: Summand) -> Option<usize> {
        self.summands.iter().position(|&t| t == s)
    }

    /// Vertex of the interior summand `i`, if `1 <= i <= a`.
    pub fn interior(&self, i: i64) -> Option<usize> {
        (1..=self.a).contains(&i).then(|| self.vertex(Summand::Interior(i))).flatten()
    }

    pub fn summand(&self, v: usize) -> Summand {
        self.summands[v]
    }

    /// Undirected multigraph degree sequence, sorted.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for ar in &self.arrows {
            deg[ar.source] += 1;
            deg[ar.target] += 1;
        }
        deg.sort_unstable();
        deg
    }
}

/// Builds the quiver for `a >= 0`.
///
/// Arrow families attached to a zero quotient component are absent, and `b`-arrows that
/// are zero or scalar multiples of an idempotent in Γ are omitted: `b_x` when `n_x = 1`,
/// `b_y` when `n_y = 1`, and `b_j` when `n_j = 1` and `deg g_j = 1`.
pub fn build_quiver(spec: &HypersurfaceSpec) -> Quiver {
    let a = spec.a_invariant();
    let (m, n) = (spec.m(), spec.n());
    let sums = summands(spec);
    let vertices = sums.iter().map(|s| s.label(a)).collect();
    let mut q = Quiver { vertices, arrows: Vec::new(), summands: sums, a };
    let add = |q: &mut Quiver, name: String, src: Summand, dst: Summand, kind: ArrowKind| {
        let source = q.vertex(src).expect("source vertex");
        let target = q.vertex(dst).expect("target vertex");
        q.arrows.push(Arrow { name, source, target, kind });
    };
    for i in 1..=a - m {
        add(&mut q, format!("x_{i}"), Summand::Interior(i), Summand::Interior(i + m), ArrowKind::X);
    }
    for i in 1..=a - n {
        add(&mut q, format!("y_{i}"), Summand::Interior(i), Summand::Interior(i + n), ArrowKind::Y);
    }
    if spec.n_x > 0 {
        for i in (n - a).max(0)..n {
            add(&mut q, format!("a_{{{i},x}}"), Summand::Interior(a - n + 1 + i), Summand::X(a + 1 + i), ArrowKind::AX(i));
        }
    }
    if spec.n_y > 0 {
        for i in (m - a).max(0)..m {
            add(&mut q, format!("a_{{{i},y}}"), Summand::Interior(a - m + 1 + i), Summand::Y(a + 1 + i), ArrowKind::AY(i));
        }
    }
    for j in 0..spec.factors.len() {
        for i in (m - a).max(0)..m {
            add(&mut q, format!("a_{{{i},{}}}", j + 1), Summand::Interior(a - m + 1 + i), Summand::F(j), ArrowKind::AJ(i, j));
        }
    }
    if spec.n_x > 1 {
        for i in 0..n {
            let t = (i + m).rem_euclid(n);
            add(&mut q, format!("b_{{{i},x}}"), Summand::X(a + 1 + i), Summand::X(a + 1 + t), ArrowKind::BX(i));
        }
    }
    if spec.n_y > 1 {
        for i in 0..m {
            let t = (i + n).rem_euclid(m);
            add(&mut q, format!("b_{{{i},y}}"), Summand::Y(a + 1 + i), Summand::Y(a + 1 + t), ArrowKind::BY(i));
        }
    }
    for (j, fac) in spec.factors.iter().enumerate() {
        if fac.multiplicity > 1 || fac.deg_g() > 1 {
            add(&mut q, format!("b_{{0,{}}}", j + 1), Summand::F(j), Summand::F(j), ArrowKind::BJ(j));
        }
    }
    q
}

/// A path, stored with its arrows in the order they are traversed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&k| q.arrows[k].target)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Path) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Path { start: self.start, arrows }
    }

    /// Written right to left, like composition of maps.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices[self.start]);
        }
        self.arrows.iter().rev().map(|&k| q.arrows[k].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// Which construction produced a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Listed,
    Intersection,
    Kernel,
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
    pub provenance: Provenance,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>, provenance: Provenance) -> Relation {
        let mut terms: Vec<(Scalar, Path)> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        terms.sort_by(|x, y| y.1.len().cmp(&x.1.len()).then_with(|| x.1.cmp(&y.1)));
        let mut merged: Vec<(Scalar, Path)> = Vec::new();
        for (c, p) in terms {
            match merged.last_mut() {
                Some((c0, p0)) if *p0 == p => *c0 += &c,
                _ => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Relation { terms: merged, provenance }
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }

    /// `(source, target)` of the parallel paths.
    pub fn endpoints(&self, q: &Quiver) -> Option<(usize, usize)> {
        self.terms.first().map(|(_, p)| (p.start, p.end(q)))
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_rational() || c.to_i64() == Some(-1);
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&p.display(q));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Relation {
        Relation::new(self.terms.iter().map(|(a, p)| (a * c, p.clone())).collect(), self.provenance)
    }
}

#[derive(Clone, Debug)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
    pub rs: (i64, i64),
}

impl RelationSet {
    pub fn display(&self, q: &Quiver) -> Vec<String> {
        self.relations.iter().map(|r| r.display(q)).collect()
    }
}

/// The algebra map from `kQ` to Γ, given on arrows by multiplication maps.
#[derive(Clone, Debug)]
pub struct PathMap<'g> {
    pub gamma: &'g Gamma,
    pub quiver: Quiver,
    pub rs: (i64, i64),
    /// Laurent multiplier of each arrow.
    pub arrow_polys: Vec<Poly>,
}

impl<'g> PathMap<'g> {
    /// Image of a path in Γ, as coordinates in Γ's basis.
    pub fn eval_path(&self, p: &Path) -> SparseVec {
        let field = self.gamma.ctx.field();
        let mut poly = Poly::one(field);
        for &k in &p.arrows {
            poly = self.arrow_polys[k].mul(&poly);
        }
        self.gamma.element(p.start, p.end(&self.quiver), &poly)
    }

    pub fn eval(&self, r: &Relation) -> SparseVec {
        let mut acc = SparseVec::new();
        for (c, p) in &r.terms {
            acc = acc.add_scaled(&self.eval_path(p), c);
        }
        acc
    }

    /// Rank of the image of all paths of length `<= max_len`.
    pub fn image_rank(&self, max_len: usize) -> usize {
        let mut e = crate::linalg::Echelon::new(self.gamma.ctx.field());
        let mut frontier: Vec<Path> = (0..self.quiver.vertex_count()).map(Path::trivial).collect();
        for len in 0..=max_len {
            for p in &frontier {
                e.insert(&self.eval_path(p));
            }
            if len == max_len {
                break;
            }
            frontier = frontier
                .iter()
                .flat_map(|p| {
                    let end = p.end(&self.quiver);
                    self.quiver.arrows_from(end).map(move |k| {
                        let mut arrows = p.arrows.clone();
                        arrows.push(k);
                        Path { start: p.start, arrows }
                    })
                })
                .collect();
        }
        e.rank()
    }
}

/// Builds the path-algebra map for the given `(r, s)` and checks surjectivity on paths of
/// length at most `max_len`.
pub fn build_phi(gamma: &Gamma, rs: (i64, i64), max_len: usize) -> Result<PathMap<'_>, QuiverError> {
    let pm = phi_unchecked(gamma, rs);
    let image = pm.image_rank(max_len);
    if image != gamma.dim() {
        return Err(QuiverError::NotSurjective { image, dim: gamma.dim() });
    }
    Ok(pm)
}

/// Builds the path-algebra map without the surjectivity check.
pub fn phi_unchecked(gamma: &Gamma, rs: (i64, i64)) -> PathMap<'_> {
    let spec = &gamma.ctx.spec;
    let field = spec.field;
    let (m, n) = (spec.m(), spec.n());
    let quiver = build_quiver(spec);
    let mono = |x: i64, y: i64| Poly::monomial(field, field.one(), Monomial::new(x, y));
    let arrow_polys = quiver
        .arrows
        .iter()
        .map(|ar| match ar.kind {
            ArrowKind::X | ArrowKind::AY(_) => mono(1, 0),
            ArrowKind::Y | ArrowKind::AX(_) => mono(0, 1),
            ArrowKind::AJ(i, _) => mono(rs.0 * (m - i), rs.1 * (m - i)),
            ArrowKind::BX(i) => mono(1, -(i + m).div_euclid(n)),
            ArrowKind::BY(i) => mono(-(i + n).div_euclid(m), 1),
            ArrowKind::BJ(_) => mono(n, -m),
        })
        .collect();
    PathMap { gamma, quiver, rs, arrow_polys }
}

/// Arrow multiplicities of the Gabriel quiver computed from Γ (`dim e_v (rad/rad²) e_u`)
/// and predicted from `Q`, per ordered vertex pair `(u, v)`; mismatches are returned.
///
/// The prediction counts every arrow except `b_j` loops with `n_j = 1`, weighted by the
/// dimension of the top at the target (non-split tops contribute their degree).
pub fn gabriel_mismatches(gamma: &Gamma, quiver: &Quiver) -> Vec<(usize, usize, usize, usize)> {
    let alg = &gamma.algebra;
    let spec = &gamma.ctx.spec;
    let nv = alg.vertex_count();
    let mut actual = vec![vec![0usize; nv]; nv];
    for (u, v, _) in alg.gabriel_generators() {
        actual[u][v] += 1;
    }
    let mut predicted = vec![vec![0usize; nv]; nv];
    for ar in &quiver.arrows {
        if let ArrowKind::BJ(j) = ar.kind {
            if spec.factors[j].multiplicity == 1 {
                continue;
            }
        }
        predicted[ar.source][ar.target] += alg.top_dim(ar.target);
    }
    let mut out = Vec::new();
    for u in 0..nv {
        for v in 0..nv {
            if actual[u][v] != predicted[u][v] {
                out.push((u, v, actual[u][v], predicted[u][v]));
            }
        }
    }
    out
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(", "))?;
        for ar in &self.arrows {
            writeln!(f, "  {}: {} -> {}", ar.name, self.vertices[ar.source], self.vertices[ar.target])?;
        }
        Ok(())
    }
}

/// `c` as a scalar of `field`.
pub(crate) fn int(field: Field, c: i64) -> Scalar {
    field.from_i64(c)
}
