//! Summands of the standard tilting object for `a >= 0`, their degree-zero Hom spaces, and
//! the based endomorphism algebra Γ.
//!
//! A morphism between summands is stored as a Laurent polynomial in `x, y` acting by
//! multiplication; composition multiplies representatives and reduces in the ring of the
//! final target (`R`, `K^x`, `K^y` or `K^j`).

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::algebra::{BasedAlgebra, BasisElem};
use crate::arith::{Field, Monomial, Poly, Scalar, UniPoly};
use crate::linalg::{Echelon, SparseVec};
use crate::ring::{canonical_unit, Component, HypersurfaceSpec, NegativeCase};

#[derive(Debug, Error)]
pub enum GammaError {
    #[error("a-invariant is negative; use the dg pipeline")]
    NegativeA,
    #[error("R is regular; the stable category is trivial")]
    Regular,
    #[error("endpoints do not match: {0}")]
    Mismatch(String),
    #[error("cap too small: Hom dimension {small} at cap {small_cap} but {large} at cap {large_cap}")]
    CapTooSmall { small: usize, small_cap: i64, large: usize, large_cap: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    /// `R(i)_{>=0}` for `1 <= i <= a`.
    Interior(i64),
    /// `K^x(i)_{>=0}` for `a+1 <= i <= a+n`.
    X(i64),
    /// `K^y(i)_{>=0}` for `a+1 <= i <= a+m`.
    Y(i64),
    /// `K^j(a+1)_{>=0}`.
    F(usize),
}

impl Summand {
    pub fn twist(self, a: i64) -> i64 {
        match self {
            Summand::Interior(i) | Summand::X(i) | Summand::Y(i) => i,
            Summand::F(_) => a + 1,
        }
    }

    pub fn component(self) -> Option<Component> {
        match self {
            Summand::Interior(_) => None,
            Summand::X(_) => Some(Component::X),
            Summand::Y(_) => Some(Component::Y),
            Summand::F(j) => Some(Component::J(j)),
        }
    }

    /// Vertex label in the quiver: `i`, `(i,x)`, `(i,y)` or `(0,j)` with `j` counted from 1.
    pub fn label(self, a: i64) -> String {
        match self {
            Summand::Interior(i) => i.to_string(),
            Summand::X(i) => format!("({},x)", i - a - 1),
            Summand::Y(i) => format!("({},y)", i - a - 1),
            Summand::F(j) => format!("(0,{})", j + 1),
        }
    }
}

/// Summands in vertex order: interiors, then the `x` family, the `y` family, the factors.
/// Families whose quotient component is zero (`n_x = 0` or `n_y = 0`) are omitted.
pub fn summands(spec: &HypersurfaceSpec) -> Vec<Summand> {
    let a = spec.a_invariant();
    let mut out: Vec<Summand> = (1..=a).map(Summand::Interior).collect();
    if spec.n_x > 0 {
        out.extend((a + 1..=a + spec.n()).map(Summand::X));
    }
    if spec.n_y > 0 {
        out.extend((a + 1..=a + spec.m()).map(Summand::Y));
    }
    out.extend((0..spec.factors.len()).map(Summand::F));
    out
}

/// Arithmetic context shared by Hom computations.
#[derive(Clone, Debug)]
pub struct CmContext {
    pub spec: HypersurfaceSpec,
    pub a: i64,
    /// `(r, s)` with `w = x^r y^s` the degree-one unit of every `K^j`.
    pub unit: (i64, i64),
    f: Poly,
    lead: Monomial,
    /// Per factor: `G = g^{n_j}` and `z^{-1} mod G`.
    jdata: Vec<(UniPoly, UniPoly)>,
}

impl CmContext {
    pub fn new(spec: &HypersurfaceSpec) -> CmContext {
        let unit = canonical_unit(spec.weights.m, spec.weights.n);
        let jdata = spec
            .factors
            .iter()
            .map(|fac| {
                let big = fac.power();
                let zinv = z_inverse(&big);
                (big, zinv)
            })
            .collect();
        CmContext {
            a: spec.a_invariant(),
            unit,
            f: spec.f_poly(),
            lead: spec.leading_monomial(),
            jdata,
            spec: spec.clone(),
        }
    }

    pub fn field(&self) -> Field {
        self.spec.field
    }

    /// Laurent monomial of `z^e w^d`.
    pub fn zw(&self, e: i64, d: i64) -> Monomial {
        let (r, s) = self.unit;
        Monomial::new(self.spec.n() * e + r * d, -self.spec.m() * e + s * d)
    }

    /// The `z`-exponent of a degree-`d` Laurent monomial written as `z^e w^d`.
    pub fn z_exponent(&self, mono: Monomial, d: i64) -> i64 {
        let e = mono.x - self.unit.0 * d;
        debug_assert_eq!(e.rem_euclid(self.spec.n()), 0);
        e / self.spec.n()
    }

    /// Image in `K^j_0 = k[z]/(G)` of a degree-`d` Laurent polynomial, after dividing by `w^d`.
    pub fn to_z_poly(&self, j: usize, p: &Poly, d: i64) -> UniPoly {
        let field = self.field();
        let (big, zinv) = &self.jdata[j];
        let terms: Vec<(i64, &Scalar)> = p.terms().map(|(mono, c)| (self.z_exponent(*mono, d), c)).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else { return UniPoly::zero(field) };
        let shift = lo.min(0);
        let mut acc = UniPoly::zero(field);
        for (e, c) in &terms {
            acc = acc.add(&UniPoly::monomial(field, (*c).clone(), (e - shift) as usize));
        }
        let acc = acc.rem(big);
        if shift < 0 {
            acc.mul(&zinv.pow_mod((-shift) as u64, big)).rem(big)
        } else {
            acc
        }
    }

    /// Coordinates of `q mod G` in the basis `g^k z^e` (`0 <= k < n_j`, `0 <= e < deg g`),
    /// indexed `k·deg g + e`.
    pub fn adapted_coords(&self, j: usize, q: &UniPoly) -> SparseVec {
        let fac = &self.spec.factors[j];
        let dg = fac.deg_g();
        let mut rest = q.clone();
        let mut entries = Vec::new();
        for k in 0..fac.multiplicity as usize {
            let (quot, rem) = rest.div_rem(&fac.g);
            entries.extend(rem.coeffs().iter().enumerate().map(|(e, c)| (k * dg + e, c.clone())));
            rest = quot;
        }
        debug_assert!(rest.is_zero());
        SparseVec::from_entries(entries)
    }

    /// Laurent representative of the adapted basis element `g^k z^e w^d`.
    pub fn adapted_element(&self, j: usize, k: usize, e: usize, d: i64) -> Poly {
        let field = self.field();
        let fac = &self.spec.factors[j];
        let q = fac.g.pow(k as u32).mul(&UniPoly::monomial(field, field.one(), e));
        Poly::from_terms(
            field,
            q.coeffs().iter().enumerate().map(|(c, coeff)| (self.zw(c as i64, d), coeff.clone())),
        )
    }

    /// Basis of `Hom(src, dst)_0` as Laurent representatives.
    pub fn hom_basis(&self, src: Summand, dst: Summand) -> Vec<Poly> {
        let field = self.field();
        let d = dst.twist(self.a) - src.twist(self.a);
        let monos = |ms: Vec<Monomial>| ms.into_iter().map(|mono| Poly::monomial(field, field.one(), mono)).collect();
        match (src, dst) {
            (Summand::Interior(_), Summand::Interior(_)) => monos(self.spec.ring_basis(d)),
            (Summand::Interior(_) | Summand::X(_), Summand::X(_))
            | (Summand::Interior(_) | Summand::Y(_), Summand::Y(_)) => {
                monos(self.spec.component_piece_basis(dst.component().unwrap(), d, self.unit))
            }
            (Summand::Interior(_), Summand::F(j)) => self.adapted_basis(j, d),
            (Summand::F(j), Summand::F(k)) if j == k => self.adapted_basis(j, 0),
            _ => Vec::new(),
        }
    }

    fn adapted_basis(&self, j: usize, d: i64) -> Vec<Poly> {
        let fac = &self.spec.factors[j];
        let mut out = Vec::new();
        for k in 0..fac.multiplicity as usize {
            for e in 0..fac.deg_g() {
                out.push(self.adapted_element(j, k, e, d));
            }
        }
        out
    }

    /// Coordinates of the multiplication map by `p` in `hom_basis(src, dst)`.
    pub fn coords(&self, src: Summand, dst: Summand, p: &Poly) -> SparseVec {
        let d = dst.twist(self.a) - src.twist(self.a);
        match (src, dst) {
            (Summand::Interior(_), Summand::Interior(_)) => {
                let basis = self.spec.ring_basis(d);
                let reduced = self.reduce_r(p);
                SparseVec::from_entries(reduced.terms().map(|(mono, c)| {
                    let idx = basis.iter().position(|b| b == mono).expect("normal form lies in the basis");
                    (idx, c.clone())
                }))
            }
            (Summand::Interior(_) | Summand::X(_), Summand::X(_)) => {
                let n_x = self.spec.n_x as i64;
                let basis = self.spec.component_piece_basis(Component::X, d, self.unit);
                SparseVec::from_entries(p.terms().filter(|(mono, _)| mono.x < n_x).map(|(mono, c)| {
                    let idx = basis.iter().position(|b| b == mono).expect("monomial of the right degree");
                    (idx, c.clone())
                }))
            }
            (Summand::Interior(_) | Summand::Y(_), Summand::Y(_)) => {
                let n_y = self.spec.n_y as i64;
                let basis = self.spec.component_piece_basis(Component::Y, d, self.unit);
                SparseVec::from_entries(p.terms().filter(|(mono, _)| mono.y < n_y).map(|(mono, c)| {
                    let idx = basis.iter().position(|b| b == mono).expect("monomial of the right degree");
                    (idx, c.clone())
                }))
            }
            (Summand::Interior(_), Summand::F(j)) => self.adapted_coords(j, &self.to_z_poly(j, p, d)),
            (Summand::F(j), Summand::F(k)) if j == k => self.adapted_coords(j, &self.to_z_poly(j, p, 0)),
            _ => SparseVec::new(),
        }
    }

    fn reduce_r(&self, p: &Poly) -> Poly {
        if p.terms().all(|(mono, _)| !mono.divisible_by(self.lead)) {
            return p.clone();
        }
        crate::arith::normal_form_poly(p, &self.f).expect("f is nonzero")
    }

    /// `g ∘ f` for `f: a → b`, `g: b → c`, in coordinates of `hom_basis(a, c)`.
    pub fn compose(
        &self,
        (b2, c, g): (Summand, Summand, &Poly),
        (a, b1, f): (Summand, Summand, &Poly),
    ) -> Result<SparseVec, GammaError> {
        if b1 != b2 {
            return Err(GammaError::Mismatch(format!("{b1:?} vs {b2:?}")));
        }
        Ok(self.coords(a, c, &g.mul(f)))
    }
}

/// `z^{-1}` in `k[z]/(G)`, from `G = z·h + G(0)`.
fn z_inverse(big: &UniPoly) -> UniPoly {
    let field = big.field();
    let c0 = big.coeff(0);
    let h = UniPoly::new(field, big.coeffs()[1..].to_vec());
    let factor = -c0.inv().expect("G(0) is nonzero");
    h.scale(&factor)
}

/// The based endomorphism algebra Γ together with the data needed to map into it.
#[derive(Clone, Debug)]
pub struct Gamma {
    pub ctx: CmContext,
    pub summands: Vec<Summand>,
    pub algebra: BasedAlgebra,
    /// Laurent representative of each basis element.
    pub reps: Vec<Poly>,
    ranges: HashMap<(usize, usize), Range<usize>>,
}

impl Gamma {
    /// Basis index range of `Hom(summands[src], summands[dst])`.
    pub fn range(&self, src: usize, dst: usize) -> Range<usize> {
        self.ranges.get(&(src, dst)).cloned().unwrap_or(0..0)
    }

    pub fn vertex_of(&self, s: Summand) -> Option<usize> {
        self.summands.iter().position(|&t| t == s)
    }

    /// Γ-element given by multiplication by `p` from summand `src` to summand `dst`.
    pub fn element(&self, src: usize, dst: usize, p: &Poly) -> SparseVec {
        let start = self.range(src, dst).start;
        self.ctx.coords(self.summands[src], self.summands[dst], p).map_indices(|i| i + start)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

pub fn assemble_gamma(spec: &HypersurfaceSpec) -> Result<Gamma, GammaError> {
    match spec.classify_negative() {
        Ok(NegativeCase::NonNegative) => {}
        Ok(NegativeCase::Regular) => return Err(GammaError::Regular),
        _ => return Err(GammaError::NegativeA),
    }
    let ctx = CmContext::new(spec);
    let a = ctx.a;
    let sums = summands(spec);
    let field = spec.field;
    let mut basis = Vec::new();
    let mut reps = Vec::new();
    let mut ranges = HashMap::new();
    let mut identities = vec![usize::MAX; sums.len()];
    for (si, &s) in sums.iter().enumerate() {
        for (ti, &t) in sums.iter().enumerate() {
            let hb = ctx.hom_basis(s, t);
            if hb.is_empty() {
                continue;
            }
            let start = basis.len();
            for (k, p) in hb.into_iter().enumerate() {
                let is_one = p == Poly::one(field);
                if si == ti && is_one {
                    identities[si] = basis.len();
                }
                let radical = si != ti || !top_element(&ctx, s, k, &p);
                basis.push(BasisElem { source: si, target: ti, label: format!("{p}"), radical });
                reps.push(p);
            }
            ranges.insert((si, ti), start..basis.len());
        }
    }
    assert!(identities.iter().all(|&i| i != usize::MAX), "every summand has an identity");
    let mut products = HashMap::new();
    for (&(s, t), r1) in &ranges {
        for u in 0..sums.len() {
            let Some(r2) = ranges.get(&(t, u)) else { continue };
            let Some(out) = ranges.get(&(s, u)) else { continue };
            for b in r1.clone() {
                for a_idx in r2.clone() {
                    let prod = ctx.coords(sums[s], sums[u], &reps[a_idx].mul(&reps[b]));
                    if !prod.is_zero() {
                        products.insert((a_idx, b), prod.map_indices(|i| i + out.start));
                    }
                }
            }
        }
    }
    let vertices = sums.iter().map(|s| s.label(a)).collect();
    let algebra = BasedAlgebra::new(field, vertices, basis, identities, products);
    Ok(Gamma { ctx, summands: sums, algebra, reps, ranges })
}

/// Whether an endomorphism basis element lies outside the radical.
fn top_element(ctx: &CmContext, s: Summand, index: usize, p: &Poly) -> bool {
    match s {
        Summand::F(j) => index < ctx.spec.factors[j].deg_g(),
        _ => *p == Poly::one(ctx.field()),
    }
}

/// Dimensions of `rad`, `rad²` and the nilpotency index of the radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalLayers {
    pub rad: usize,
    pub rad2: usize,
    pub nilpotency: usize,
    /// `dim rad^k` for `k = 1, 2, ...`.
    pub powers: Vec<usize>,
}

pub fn radical_layers(alg: &BasedAlgebra) -> RadicalLayers {
    let powers: Vec<usize> = alg.radical_powers().iter().map(Echelon::rank).collect();
    RadicalLayers {
        rad: powers.first().copied().unwrap_or(0),
        rad2: powers.get(1).copied().unwrap_or(0),
        nilpotency: powers.len() + 1,
        powers,
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Interior(i) => write!(f, "V^{i}"),
            Summand::X(i) => write!(f, "V^{{{i},x}}"),
            Summand::Y(i) => write!(f, "V^{{{i},y}}"),
            Summand::F(j) => write!(f, "V^{{f_{}}}", j + 1),
        }
    }
}

/// Graded pieces of a summand with the `x` and `y` actions, built directly from the
/// module definitions and independent of the Hom formulas above.
struct TruncatedModule {
    dims: Vec<usize>,
    /// `act_x[d]`: matrix (as column images) of `x: M_d → M_{d+m}`.
    act_x: Vec<Vec<SparseVec>>,
    act_y: Vec<Vec<SparseVec>>,
}

fn truncated_module(ctx: &CmContext, s: Summand, cap: i64) -> TruncatedModule {
    let spec = &ctx.spec;
    let field = spec.field;
    let (m, n) = (spec.m(), spec.n());
    let tw = s.twist(ctx.a);
    let mut dims = Vec::new();
    let mut act_x = Vec::new();
    let mut act_y = Vec::new();
    for d in 0..=cap {
        let deg = tw + d;
        match s {
            Summand::Interior(_) => {
                let here = spec.ring_basis(deg);
                dims.push(here.len());
                let image = |step: Monomial, shift: i64| -> Vec<SparseVec> {
                    let there = spec.ring_basis(deg + shift);
                    here.iter()
                        .map(|mono| {
                            let p = Poly::monomial(field, field.one(), mono.mul(step));
                            let r = spec.reduce(&p);
                            SparseVec::from_entries(
                                r.terms().map(|(mm, c)| (there.iter().position(|b| b == mm).unwrap(), c.clone())),
                            )
                        })
                        .collect()
                };
                act_x.push(image(Monomial::new(1, 0), m));
                act_y.push(image(Monomial::new(0, 1), n));
            }
            Summand::X(_) | Summand::Y(_) => {
                let comp = s.component().unwrap();
                let here = spec.component_piece_basis(comp, deg, ctx.unit);
                dims.push(here.len());
                let image = |step: Monomial, shift: i64| -> Vec<SparseVec> {
                    let there = spec.component_piece_basis(comp, deg + shift, ctx.unit);
                    here.iter()
                        .map(|mono| match there.iter().position(|b| *b == mono.mul(step)) {
                            Some(i) => SparseVec::unit(i, field),
                            None => SparseVec::new(),
                        })
                        .collect()
                };
                act_x.push(image(Monomial::new(1, 0), m));
                act_y.push(image(Monomial::new(0, 1), n));
            }
            Summand::F(j) => {
                // Monomial basis z^e w^deg, 0 <= e < N. x = z^s w^m and y = z^{-r} w^n.
                let size = spec.factors[j].piece_dim();
                let (big, zinv) = &ctx.jdata[j];
                dims.push(size);
                let (r, s_exp) = ctx.unit;
                let z = UniPoly::monomial(field, field.one(), 1);
                let power = |e: i64| {
                    if e >= 0 {
                        z.pow_mod(e as u64, big)
                    } else {
                        zinv.pow_mod((-e) as u64, big)
                    }
                };
                let image = |mult: &UniPoly| -> Vec<SparseVec> {
                    (0..size)
                        .map(|e| {
                            let q = UniPoly::monomial(field, field.one(), e).mul(mult).rem(big);
                            SparseVec::from_entries(q.coeffs().iter().cloned().enumerate())
                        })
                        .collect()
                };
                act_x.push(image(&power(s_exp)));
                act_y.push(image(&power(-r)));
            }
        }
    }
    TruncatedModule { dims, act_x, act_y }
}

/// Dimension of degree-zero homomorphisms between the degree-`<= cap` truncations of two
/// summands, solved directly as a linear system in the unknown matrices `φ_d`.
fn truncated_hom_dim(ctx: &CmContext, src: Summand, dst: Summand, cap: i64) -> usize {
    let field = ctx.field();
    let (m, n) = (ctx.spec.m(), ctx.spec.n());
    let ms = truncated_module(ctx, src, cap);
    let ns = truncated_module(ctx, dst, cap);
    // Unknown (d, row, col) ↦ offset[d] + row·dim M_d + col.
    let mut offset = Vec::new();
    let mut total = 0;
    for d in 0..=cap as usize {
        offset.push(total);
        total += ms.dims[d] * ns.dims[d];
    }
    let var = |d: usize, row: usize, col: usize| offset[d] + row * ms.dims[d] + col;
    let mut eqs = Echelon::new(field);
    for (step, mact, nact) in [(m, &ms.act_x, &ns.act_x), (n, &ms.act_y, &ns.act_y)] {
        for d in 0..=cap as usize {
            let e = d + step as usize;
            if e > cap as usize {
                break;
            }
            // (N.act ∘ φ_d − φ_e ∘ M.act)[row, col] = 0 for row < dim N_e, col < dim M_d.
            let mut rows: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
            for col in 0..ms.dims[d] {
                for mid in 0..ns.dims[d] {
                    for (row, c) in nact[d][mid].iter() {
                        rows.entry((row, col)).or_default().push((var(d, mid, col), c.clone()));
                    }
                }
                for (mid, c) in mact[d][col].iter() {
                    for row in 0..ns.dims[e] {
                        rows.entry((row, col)).or_default().push((var(e, row, mid), -c.clone()));
                    }
                }
            }
            let mut keys: Vec<_> = rows.keys().copied().collect();
            keys.sort_unstable();
            for key in keys {
                eqs.insert(&SparseVec::from_entries(rows.remove(&key).unwrap()));
            }
        }
    }
    total - eqs.rank()
}

/// Independent Hom oracle with a stabilization check between caps `cap − m − n` and `cap`.
pub fn brute_force_hom(ctx: &CmContext, src: Summand, dst: Summand, cap: i64) -> Result<usize, GammaError> {
    let small_cap = cap - ctx.spec.m() - ctx.spec.n();
    let large = truncated_hom_dim(ctx, src, dst, cap);
    let small = truncated_hom_dim(ctx, src, dst, small_cap);
    if small != large {
        return Err(GammaError::CapTooSmall { small, small_cap, large, large_cap: cap });
    }
    Ok(large)
}

/// Default oracle cap `4(a + m + n)`.
pub fn default_cap(spec: &HypersurfaceSpec) -> i64 {
    4 * (spec.a_invariant() + spec.m() + spec.n())
}
