//! Finite-dimensional basic algebras given by a basis adapted to a complete set of
//! orthogonal idempotents, with exact structure constants.
//!
//! Every basis element `b` lies in some `e_t A e_s`; we call `s` its source and `t` its
//! target. Products follow composition order: `a * b` means "first `b`, then `a`", so it
//! can only be nonzero when `target(b) = source(a)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::{Field, Scalar};
use crate::linalg::{Echelon, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisElem {
    pub source: usize,
    pub target: usize,
    pub label: String,
    /// Whether the element lies in the Jacobson radical.
    pub radical: bool,
}

#[derive(Clone, Debug)]
pub struct BasedAlgebra {
    field: Field,
    vertices: Vec<String>,
    basis: Vec<BasisElem>,
    identities: Vec<usize>,
    products: HashMap<(usize, usize), SparseVec>,
    /// Basis elements grouped by (target, source).
    blocks: HashMap<(usize, usize), Vec<usize>>,
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
}

impl BasedAlgebra {
    /// `identities[v]` is the basis index of the idempotent of vertex `v`. Products that are
    /// absent from `products` are zero; products with identities are filled in automatically.
    pub fn new(
        field: Field,
        vertices: Vec<String>,
        basis: Vec<BasisElem>,
        identities: Vec<usize>,
        mut products: HashMap<(usize, usize), SparseVec>,
    ) -> BasedAlgebra {
        assert_eq!(identities.len(), vertices.len());
        for (k, b) in basis.iter().enumerate() {
            let unit = SparseVec::unit(k, field);
            products.insert((identities[b.target], k), unit.clone());
            products.insert((k, identities[b.source]), unit);
        }
        products.retain(|_, v| !v.is_zero());
        let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut by_source = vec![Vec::new(); vertices.len()];
        let mut by_target = vec![Vec::new(); vertices.len()];
        for (k, b) in basis.iter().enumerate() {
            blocks.entry((b.target, b.source)).or_default().push(k);
            by_source[b.source].push(k);
            by_target[b.target].push(k);
        }
        BasedAlgebra { field, vertices, basis, identities, products, blocks, by_source, by_target }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn elem(&self, k: usize) -> &BasisElem {
        &self.basis[k]
    }

    pub fn identity(&self, v: usize) -> usize {
        self.identities[v]
    }

    /// Basis indices of `e_target A e_source`.
    pub fn block(&self, target: usize, source: usize) -> &[usize] {
        self.blocks.get(&(target, source)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Nonzero structure constants, keyed by `(a, b)` for the product `a * b`.
    pub fn products(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.products.iter()
    }

    /// `basis[a] * basis[b]`.
    pub fn mul_basis(&self, a: usize, b: usize) -> Option<&SparseVec> {
        self.products.get(&(a, b))
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                if let Some(p) = self.products.get(&(i, j)) {
                    let c = ca * cb;
                    acc.extend(p.iter().map(|(k, v)| (k, v * &c)));
                }
            }
        }
        SparseVec::from_entries(acc)
    }

    /// The algebra with reversed multiplication; sources and targets swap.
    pub fn opposite(&self) -> BasedAlgebra {
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem { source: b.target, target: b.source, label: b.label.clone(), radical: b.radical })
            .collect();
        let products = self.products.iter().map(|(&(a, b), v)| ((b, a), v.clone())).collect();
        BasedAlgebra::new(self.field, self.vertices.clone(), basis, self.identities.clone(), products)
    }

    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.basis[k].radical).collect()
    }

    /// Dimension of `e_v A e_v / e_v rad e_v`.
    pub fn top_dim(&self, v: usize) -> usize {
        self.block(v, v).iter().filter(|&&k| !self.basis[k].radical).count()
    }

    /// Echelon bases of `rad^k` for `k = 1, 2, ...` until zero; the length is the nilpotency
    /// index minus one.
    pub fn radical_powers(&self) -> Vec<Echelon> {
        let rad: Vec<usize> = self.radical_basis();
        let mut out: Vec<Echelon> = Vec::new();
        let mut current = Echelon::new(self.field);
        for &k in &rad {
            current.insert(&SparseVec::unit(k, self.field));
        }
        while current.rank() > 0 {
            let mut next = Echelon::new(self.field);
            let gens: Vec<SparseVec> = current.basis().cloned().collect();
            for g in &gens {
                let Some((lead, _)) = g.first() else { continue };
                let source = self.basis[lead].source;
                for &r in self.elements_into(source).iter().filter(|&&r| self.basis[r].radical) {
                    let p = self.mul(g, &SparseVec::unit(r, self.field));
                    if !p.is_zero() {
                        next.insert(&p);
                    }
                }
            }
            out.push(current);
            current = next;
        }
        out
    }

    /// Elements of `rad` whose classes form a basis of `rad/rad²`, grouped per block;
    /// returned as `(source, target, element)`.
    pub fn gabriel_generators(&self) -> Vec<(usize, usize, SparseVec)> {
        let powers = self.radical_powers();
        let mut span = match powers.get(1) {
            Some(e) => e.clone(),
            None => Echelon::new(self.field),
        };
        let mut out = Vec::new();
        for k in self.radical_basis() {
            let v = SparseVec::unit(k, self.field);
            if span.insert(&v) {
                out.push((self.basis[k].source, self.basis[k].target, v));
            }
        }
        out
    }

    /// Checks `(ab)c = a(bc)` on all composable basis triples, stopping after `limit` triples.
    /// Returns the first failing triple.
    pub fn check_associativity(&self, limit: usize) -> Result<usize, (usize, usize, usize)> {
        let mut count = 0;
        for c in 0..self.dim() {
            let cb = &self.basis[c];
            for &b in self.elements_from(cb.target) {
                let bb = &self.basis[b];
                let bc = self.product_vec(b, c);
                for &a in self.elements_from(bb.target) {
                    if count >= limit {
                        return Ok(count);
                    }
                    count += 1;
                    let left = self.mul(&self.product_vec(a, b), &SparseVec::unit(c, self.field));
                    let right = self.mul(&SparseVec::unit(a, self.field), &bc);
                    if left != right {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(count)
    }

    fn product_vec(&self, a: usize, b: usize) -> SparseVec {
        self.products.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Basis elements with the given source, in index order.
    pub fn elements_from(&self, source: usize) -> &[usize] {
        &self.by_source[source]
    }

    /// Basis elements with the given target, in index order.
    pub fn elements_into(&self, target: usize) -> &[usize] {
        &self.by_target[target]
    }
}
