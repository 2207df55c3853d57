//! Right modules over a [`BasedAlgebra`]: minimal projective resolutions, global and
//! self-injective dimension, and incidence algebras of finite posets.
//!
//! Left modules are handled as right modules over the opposite algebra. A module is a
//! subspace of an ambient module whose coordinates each sit at one vertex: either a free
//! module `⊕ e_v A` or an explicitly given module such as a dual `D(A e_v)`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::{BasedAlgebra, BasisElem};
use crate::arith::{Field, Scalar};
use crate::linalg::{Echelon, SparseVec};

/// A module given by an explicit right action of every basis element.
#[derive(Clone, Debug)]
pub struct FDModule {
    /// Vertex of each basis vector.
    pub vertex: Vec<usize>,
    /// `action[(k, b)] = basis_k · b`; absent pairs act by zero.
    pub action: HashMap<(usize, usize), SparseVec>,
}

impl FDModule {
    pub fn dim(&self) -> usize {
        self.vertex.len()
    }

    /// `D(A e_v)` as a right `A`-module, with basis dual to `{c : source(c) = v}`.
    ///
    /// `(ξ_c · a)(y) = coefficient of c in a * y`; `ξ_c` sits at `target(c)`.
    pub fn dual_of_left_projective(alg: &BasedAlgebra, v: usize) -> FDModule {
        let left: Vec<usize> = alg.elements_from(v).to_vec();
        let index: HashMap<usize, usize> = left.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let vertex = left.iter().map(|&c| alg.elem(c).target).collect();
        let mut acc: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
        for (yk, &y) in left.iter().enumerate() {
            for &a in alg.elements_from(alg.elem(y).target) {
                let Some(prod) = alg.mul_basis(a, y) else { continue };
                for (c, coeff) in prod.iter() {
                    acc.entry((index[&c], a)).or_default().push((yk, coeff.clone()));
                }
            }
        }
        let action = acc.into_iter().map(|(key, e)| (key, SparseVec::from_entries(e))).collect();
        FDModule { vertex, action }
    }

    /// Checks `(m·a)·b = m·(a*b)` on all basis vectors and composable basis pairs.
    pub fn check_action(&self, alg: &BasedAlgebra) -> bool {
        let field = alg.field();
        for k in 0..self.dim() {
            let mk = SparseVec::unit(k, field);
            for &a in alg.elements_into(self.vertex[k]) {
                let ma = self.act_vec(&mk, a);
                for &b in alg.elements_into(alg.elem(a).source) {
                    let left = self.act_vec(&ma, b);
                    let ab = alg.mul_basis(a, b).cloned().unwrap_or_default();
                    let mut right = SparseVec::new();
                    for (c, coeff) in ab.iter() {
                        right = right.add_scaled(&self.act_vec(&mk, c), coeff);
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn act_vec(&self, v: &SparseVec, b: usize) -> SparseVec {
        let mut out = Vec::new();
        for (k, c) in v.iter() {
            if let Some(img) = self.action.get(&(k, b)) {
                out.extend(img.iter().map(|(j, x)| (j, x * c)));
            }
        }
        SparseVec::from_entries(out)
    }
}

/// The space a module lives in.
#[derive(Clone, Debug)]
enum Ambient {
    /// `⊕_i e_{v_i} A`; coordinate `offsets[i] + position of b in e_{v_i} A`.
    Free { summands: Vec<usize>, offsets: Vec<usize> },
    Explicit(FDModule),
}

/// Shared per-algebra lookup tables.
struct Ctx<'a> {
    alg: &'a BasedAlgebra,
    field: Field,
    /// Position of each basis element within `e_{target} A`.
    pos: Vec<usize>,
    rad_into: Vec<Vec<usize>>,
    /// Non-radical elements of `e_v A e_v`.
    division: Vec<Vec<usize>>,
}

impl<'a> Ctx<'a> {
    fn new(alg: &'a BasedAlgebra) -> Ctx<'a> {
        let mut pos = vec![0; alg.dim()];
        let nv = alg.vertex_count();
        for v in 0..nv {
            for (k, &b) in alg.elements_into(v).iter().enumerate() {
                pos[b] = k;
            }
        }
        let rad_into =
            (0..nv).map(|v| alg.elements_into(v).iter().copied().filter(|&b| alg.elem(b).radical).collect()).collect();
        let division =
            (0..nv).map(|v| alg.block(v, v).iter().copied().filter(|&b| !alg.elem(b).radical).collect()).collect();
        Ctx { alg, field: alg.field(), pos, rad_into, division }
    }

    fn free(&self, summands: Vec<usize>) -> Ambient {
        let mut offsets = Vec::with_capacity(summands.len());
        let mut total = 0;
        for &v in &summands {
            offsets.push(total);
            total += self.alg.elements_into(v).len();
        }
        Ambient::Free { summands, offsets }
    }

    fn dim(&self, amb: &Ambient) -> usize {
        match amb {
            Ambient::Free { summands, .. } => summands.iter().map(|&v| self.alg.elements_into(v).len()).sum(),
            Ambient::Explicit(m) => m.dim(),
        }
    }

    /// Summand index and basis element of a free coordinate.
    fn locate(&self, summands: &[usize], offsets: &[usize], coord: usize) -> (usize, usize) {
        let i = offsets.partition_point(|&o| o <= coord) - 1;
        (i, self.alg.elements_into(summands[i])[coord - offsets[i]])
    }

    fn vertex_of(&self, amb: &Ambient, coord: usize) -> usize {
        match amb {
            Ambient::Free { summands, offsets } => self.alg.elem(self.locate(summands, offsets, coord).1).source,
            Ambient::Explicit(m) => m.vertex[coord],
        }
    }

    /// `x · b` for a basis element `b`.
    fn act(&self, amb: &Ambient, x: &SparseVec, b: usize) -> SparseVec {
        let mut out = Vec::new();
        match amb {
            Ambient::Free { summands, offsets } => {
                for (coord, c) in x.iter() {
                    let (i, e) = self.locate(summands, offsets, coord);
                    if let Some(p) = self.alg.mul_basis(e, b) {
                        out.extend(p.iter().map(|(k, v)| (offsets[i] + self.pos[k], v * c)));
                    }
                }
            }
            Ambient::Explicit(m) => {
                for (coord, c) in x.iter() {
                    if let Some(img) = m.action.get(&(coord, b)) {
                        out.extend(img.iter().map(|(k, v)| (k, v * c)));
                    }
                }
            }
        }
        SparseVec::from_entries(out)
    }

    /// `x · e_w`: the coordinates of `x` at vertex `w`.
    fn project(&self, amb: &Ambient, x: &SparseVec, w: usize) -> SparseVec {
        SparseVec::from_entries(x.iter().filter(|(k, _)| self.vertex_of(amb, *k) == w).map(|(k, c)| (k, c.clone())))
    }
}

/// A submodule of an ambient module, stored as a vertex-graded basis.
#[derive(Clone, Debug)]
struct Sub {
    amb: Ambient,
    /// Basis of `M e_w` for each vertex `w`.
    parts: Vec<Vec<SparseVec>>,
}

impl Sub {
    fn dim(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    fn dim_vector(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    fn from_span(ctx: &Ctx, amb: Ambient, span: &[SparseVec]) -> Sub {
        let nv = ctx.alg.vertex_count();
        let mut ech: Vec<Echelon> = (0..nv).map(|_| Echelon::new(ctx.field)).collect();
        let mut parts = vec![Vec::new(); nv];
        for x in span {
            for (w, part) in parts.iter_mut().enumerate() {
                let p = ctx.project(&amb, x, w);
                if !p.is_zero() && ech[w].insert(&p) {
                    part.push(p);
                }
            }
        }
        Sub { amb, parts }
    }

    /// `M · rad`, per vertex.
    fn times_radical(&self, ctx: &Ctx) -> Vec<Echelon> {
        let nv = ctx.alg.vertex_count();
        let mut out: Vec<Echelon> = (0..nv).map(|_| Echelon::new(ctx.field)).collect();
        for (w, part) in self.parts.iter().enumerate() {
            for x in part {
                for &r in &ctx.rad_into[w] {
                    let y = ctx.act(&self.amb, x, r);
                    if !y.is_zero() {
                        out[ctx.alg.elem(r).source].insert(&y);
                    }
                }
            }
        }
        out
    }
}

/// A minimal set of generators of a submodule and the kernel of the cover.
struct CoverStep {
    /// `(vertex, generator)` pairs, in vertex order.
    generators: Vec<(usize, SparseVec)>,
    kernel: Sub,
}

fn cover(ctx: &Ctx, m: &Sub) -> CoverStep {
    let mut rad = m.times_radical(ctx);
    let mut generators = Vec::new();
    for (w, part) in m.parts.iter().enumerate() {
        for x in part {
            if rad[w].contains(x) {
                continue;
            }
            for &d in &ctx.division[w] {
                rad[w].insert(&ctx.act(&m.amb, x, d));
            }
            generators.push((w, x.clone()));
        }
    }
    let summands: Vec<usize> = generators.iter().map(|(w, _)| *w).collect();
    let p = ctx.free(summands.clone());
    let mut ech = Echelon::tracked(ctx.field);
    let mut kernel = Vec::new();
    let mut coord = 0usize;
    for (w, g) in &generators {
        for &b in ctx.alg.elements_into(*w) {
            let img = ctx.act(&m.amb, g, b);
            if let Some(combo) = ech.insert_with_combo(&img) {
                kernel.push(combo);
            }
            coord += 1;
        }
    }
    debug_assert_eq!(coord, ctx.dim(&p));
    CoverStep { generators, kernel: Sub::from_span(ctx, p, &kernel) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ResolutionStatus {
    /// Projective dimension.
    Terminated(usize),
    ExceededBound,
    /// `Ω^{start + period} ≅ Ω^{start}`, so the projective dimension is infinite.
    PeriodicityDetected { start: usize, period: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    /// Step `k` lists `(vertex, multiplicity)` of the `k`-th projective, in vertex order.
    pub steps: Vec<Vec<(usize, usize)>>,
    pub status: ResolutionStatus,
}

impl ResolutionReport {
    pub fn projective_dimension(&self) -> Option<usize> {
        match self.status {
            ResolutionStatus::Terminated(d) => Some(d),
            _ => None,
        }
    }

    /// Steps written like `P1 + P16^2`, using vertex labels.
    pub fn display_steps(&self, labels: &[String]) -> Vec<String> {
        self.steps
            .iter()
            .map(|step| {
                step.iter()
                    .map(|&(v, k)| if k == 1 { format!("P{}", labels[v]) } else { format!("P{}^{k}", labels[v]) })
                    .collect::<Vec<_>>()
                    .join(" + ")
            })
            .collect()
    }
}

fn multiplicities(generators: &[(usize, SparseVec)]) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for (w, _) in generators {
        *counts.entry(*w).or_default() += 1;
    }
    counts.into_iter().collect()
}

/// Which module to resolve.
#[derive(Clone, Debug)]
pub enum Start {
    Simple(usize),
    Explicit(FDModule),
}

/// Minimal projective resolution of a right `A`-module, stopping at zero, after `bound`
/// syzygies, or when a syzygy is isomorphic to an earlier one.
pub fn minimal_projective_resolution(alg: &BasedAlgebra, start: Start, bound: usize) -> ResolutionReport {
    let ctx = Ctx::new(alg);
    let mut steps = Vec::new();
    // `current` is Ω^k; for a simple, begin at k = 1 with `e_v rad ⊂ e_v A`.
    let (mut current, mut k) = match start {
        Start::Simple(v) => {
            steps.push(vec![(v, 1)]);
            let amb = ctx.free(vec![v]);
            let span: Vec<SparseVec> = alg
                .elements_into(v)
                .iter()
                .enumerate()
                .filter(|(_, &b)| alg.elem(b).radical)
                .map(|(i, _)| SparseVec::unit(i, ctx.field))
                .collect();
            (Sub::from_span(&ctx, amb, &span), 1)
        }
        Start::Explicit(m) => {
            let span: Vec<SparseVec> = (0..m.dim()).map(|i| SparseVec::unit(i, ctx.field)).collect();
            (Sub::from_span(&ctx, Ambient::Explicit(m), &span), 0)
        }
    };
    let mut history: Vec<(usize, Sub, Vec<(usize, SparseVec)>, Sub, Signature)> = Vec::new();
    loop {
        if current.dim() == 0 {
            let pd = steps.len().saturating_sub(1);
            return ResolutionReport { steps, status: ResolutionStatus::Terminated(pd) };
        }
        if k > bound {
            return ResolutionReport { steps, status: ResolutionStatus::ExceededBound };
        }
        let step = cover(&ctx, &current);
        steps.push(multiplicities(&step.generators));
        let sig = signature(&ctx, &current, &step.generators);
        if k >= 1 {
            for (j, old, old_gens, old_kernel, old_sig) in &history {
                if *old_sig == sig && isomorphic(&ctx, (old, old_gens, old_kernel), &current) {
                    return ResolutionReport {
                        steps,
                        status: ResolutionStatus::PeriodicityDetected { start: *j, period: k - j },
                    };
                }
            }
        }
        let next = step.kernel.clone();
        if k >= 1 {
            history.push((k, current, step.generators, step.kernel, sig));
        }
        current = next;
        k += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Signature {
    dims: Vec<usize>,
    top: Vec<(usize, usize)>,
}

fn signature(_ctx: &Ctx, m: &Sub, generators: &[(usize, SparseVec)]) -> Signature {
    Signature { dims: m.dim_vector(), top: multiplicities(generators) }
}

/// Searches for an isomorphism from `M1` (given by generators and the kernel of its cover)
/// to `M2`. Homomorphisms are the solutions of a linear system in the images of the
/// generators; a few deterministic combinations of a solution basis are tested for
/// bijectivity.
fn isomorphic(ctx: &Ctx, m1: (&Sub, &[(usize, SparseVec)], &Sub), m2: &Sub) -> bool {
    let (sub1, gens, relations) = m1;
    if sub1.dim_vector() != m2.dim_vector() {
        return false;
    }
    let field = ctx.field;
    let dim2 = ctx.dim(&m2.amb);
    // Unknown (i, t): coefficient of the t-th basis vector of M2 e_{w_i} in φ(g_i).
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    for (i, (w, _)) in gens.iter().enumerate() {
        for t in 0..m2.parts[*w].len() {
            unknowns.push((i, t));
        }
    }
    let Ambient::Free { summands, offsets } = &relations.amb else { unreachable!("kernels live in free modules") };
    let rel_basis: Vec<&SparseVec> = relations.parts.iter().flatten().collect();
    let mut ech = Echelon::tracked(field);
    let mut solutions = Vec::new();
    for &(i, t) in &unknowns {
        let y = &m2.parts[gens[i].0][t];
        let mut column = Vec::new();
        for (r, kappa) in rel_basis.iter().enumerate() {
            for (coord, c) in kappa.iter() {
                let (si, b) = ctx.locate(summands, offsets, coord);
                if si != i {
                    continue;
                }
                let img = ctx.act(&m2.amb, y, b);
                column.extend(img.iter().map(|(k, v)| (r * dim2 + k, v * c)));
            }
        }
        if let Some(combo) = ech.insert_with_combo(&SparseVec::from_entries(column)) {
            solutions.push(combo);
        }
    }
    if solutions.is_empty() {
        return false;
    }
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
    for attempt in 0..6 {
        let mut hom = SparseVec::new();
        for s in &solutions {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = if attempt == 0 { 1 } else { (seed >> 40) as i64 % 97 + 1 };
            hom = hom.add_scaled(s, &field.from_i64(c));
        }
        let mut images = vec![SparseVec::new(); gens.len()];
        for (u, c) in hom.iter() {
            let (i, t) = unknowns[u];
            images[i] = images[i].add_scaled(&m2.parts[gens[i].0][t], c);
        }
        let mut span = Echelon::new(field);
        for (i, (w, _)) in gens.iter().enumerate() {
            for &b in ctx.alg.elements_into(*w) {
                span.insert(&ctx.act(&m2.amb, &images[i], b));
            }
        }
        if span.rank() == m2.dim() {
            return true;
        }
    }
    false
}

/// Global dimension, or why it could not be determined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Dimension {
    Finite(usize),
    /// Some simple has a periodic resolution.
    Infinite { vertex: usize, start: usize, period: usize },
    /// Some resolution exceeded the bound.
    Exceeds(usize),
}

impl Dimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Dimension::Finite(d) => Some(*d),
            _ => None,
        }
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite { .. } => write!(f, "infinite"),
            Dimension::Exceeds(b) => write!(f, ">{b}"),
        }
    }
}

fn combine(reports: impl Iterator<Item = (usize, ResolutionReport)>, bound: usize) -> Dimension {
    let mut best = 0;
    for (v, r) in reports {
        match r.status {
            ResolutionStatus::Terminated(d) => best = best.max(d),
            ResolutionStatus::PeriodicityDetected { start, period } => {
                return Dimension::Infinite { vertex: v, start, period }
            }
            ResolutionStatus::ExceededBound => return Dimension::Exceeds(bound),
        }
    }
    Dimension::Finite(best)
}

/// Maximum projective dimension of the simple right modules.
pub fn global_dimension(alg: &BasedAlgebra, bound: usize) -> Dimension {
    combine((0..alg.vertex_count()).map(|v| (v, minimal_projective_resolution(alg, Start::Simple(v), bound))), bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Injective dimension of `A` as a module over itself.
///
/// For the right regular module this is the projective dimension of `D(A_A)` over `A^op`;
/// for the left regular module, of `D(_A A)` over `A`.
pub fn self_injective_dimension(alg: &BasedAlgebra, side: Side, bound: usize) -> Dimension {
    let over = match side {
        Side::Right => alg.opposite(),
        Side::Left => alg.clone(),
    };
    combine(
        (0..over.vertex_count()).map(|v| {
            let m = FDModule::dual_of_left_projective(&over, v);
            (v, minimal_projective_resolution(&over, Start::Explicit(m), bound))
        }),
        bound,
    )
}

/// A finite poset on `0..n`, given by its order relation.
#[derive(Clone, Debug)]
pub struct Poset {
    pub labels: Vec<String>,
    /// `leq[u][v]` iff `u <= v`.
    pub leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        for u in 0..n {
            if !self.leq[u][u] {
                return false;
            }
            for v in 0..n {
                if u != v && self.leq[u][v] && self.leq[v][u] {
                    return false;
                }
                if self.leq[u][v] && (0..n).any(|w| self.leq[v][w] && !self.leq[u][w]) {
                    return false;
                }
            }
        }
        true
    }

    /// Covering pairs `u < v` with nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v
                    && self.leq[u][v]
                    && !(0..n).any(|w| w != u && w != v && self.leq[u][w] && self.leq[w][v])
                {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn comparable_pairs(&self) -> usize {
        self.leq.iter().flatten().filter(|&&b| b).count()
    }
}

/// The incidence algebra: basis `e_{u,v}` for `u <= v`, with source `u` and target `v`, and
/// `e_{v,w} * e_{u,v} = e_{u,w}`.
pub fn incidence_algebra(field: Field, poset: &Poset) -> BasedAlgebra {
    let n = poset.len();
    let mut index = HashMap::new();
    let mut basis = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if poset.leq[u][v] {
                index.insert((u, v), basis.len());
                basis.push(BasisElem {
                    source: u,
                    target: v,
                    label: format!("e_{{{},{}}}", poset.labels[u], poset.labels[v]),
                    radical: u != v,
                });
            }
        }
    }
    let identities = (0..n).map(|u| index[&(u, u)]).collect();
    let mut products = HashMap::new();
    for (&(u, v), &b) in &index {
        for w in 0..n {
            if let Some(&a) = index.get(&(v, w)) {
                products.insert((a, b), SparseVec::unit(index[&(u, w)], field));
            }
        }
    }
    BasedAlgebra::new(field, poset.labels.clone(), basis, identities, products)
}

/// The self-injective Nakayama algebra `kC_n/(rad^{len})` on the cyclic quiver
/// `i → i + 1 (mod n)`: basis the paths of length `< len`, labeled `p_{i,ℓ}`.
pub fn nakayama(field: Field, n: usize, len: usize) -> BasedAlgebra {
    let index = |i: usize, l: usize| i * len + l;
    let mut basis = Vec::new();
    for i in 0..n {
        for l in 0..len {
            basis.push(BasisElem { source: i, target: (i + l) % n, label: format!("p_{{{i},{l}}}"), radical: l > 0 });
        }
    }
    let mut products = HashMap::new();
    for i in 0..n {
        for l1 in 0..len {
            let j = (i + l1) % n;
            for l2 in 0..len - l1 {
                products.insert((index(j, l2), index(i, l1)), SparseVec::unit(index(i, l1 + l2), field));
            }
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    BasedAlgebra::new(field, labels, basis, (0..n).map(|i| index(i, 0)).collect(), products)
}

/// `C[t][s] = dim e_t A e_s`.
pub fn cartan_matrix(alg: &BasedAlgebra) -> Vec<Vec<i64>> {
    let n = alg.vertex_count();
    (0..n).map(|t| (0..n).map(|s| alg.block(t, s).len() as i64).collect()).collect()
}

/// Characteristic polynomial of the Coxeter matrix `−Cᵀ C⁻¹`, lowest coefficient first.
/// `None` when the Cartan matrix is not invertible over ℤ.
pub fn coxeter_polynomial(alg: &BasedAlgebra) -> Option<Vec<i64>> {
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};

    let c = cartan_matrix(alg);
    let n = c.len();
    let q = |v: i64| BigRational::from_integer(v.into());
    // Gauss-Jordan on [C | I].
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..2 * n).map(|j| if j < n { q(c[i][j]) } else { q((j - n == i) as i64) }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for j in 0..2 * n {
                    let delta = &factor * &aug[col][j];
                    aug[r][j] -= delta;
                }
            }
        }
    }
    let phi: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| -(0..n).map(|k| q(c[k][i]) * &aug[k][n + j]).sum::<BigRational>()).collect())
        .collect();
    // Faddeev-LeVerrier.
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| &phi[i][l] * &m[l][j]).sum::<BigRational>();
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        m = next;
        let trace: BigRational = (0..n).map(|i| (0..n).map(|l| &phi[i][l] * &m[l][i]).sum::<BigRational>()).sum();
        coeffs[n - k] = -trace / q(k as i64);
    }
    coeffs.iter().map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten()).collect()
}
