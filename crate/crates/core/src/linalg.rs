//! Sparse exact linear algebra: incremental echelon forms with optional tracking of
//! combinations, used for ranks, kernels, membership tests and linear solves.

use std::collections::{BTreeMap, HashMap};

use crate::arith::{Field, Scalar};

/// Sparse vector with entries sorted by index and no explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: Field) -> SparseVec {
        SparseVec { entries: vec![(index, field.one())] }
    }

    /// Builds from arbitrary (possibly repeated, unsorted) entries.
    pub fn from_entries<I: IntoIterator<Item = (usize, Scalar)>>(entries: I) -> SparseVec {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in entries {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&i) {
                Some(v) => *v += &c,
                None => {
                    map.insert(i, c);
                }
            }
        }
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn from_map(map: BTreeMap<usize, Scalar>) -> SparseVec {
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn first(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, a)| (*i, a * c)).collect() }
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, vb * c));
                        b.next();
                    } else {
                        let s = va + &(vb * c);
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, vb * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec, field: Field) -> SparseVec {
        self.add_scaled(other, &field.one())
    }

    pub fn sub(&self, other: &SparseVec, field: Field) -> SparseVec {
        self.add_scaled(other, &-field.one())
    }

    /// Reindexes through `f`, summing collisions.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    pub fn to_dense(&self, len: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    combo: SparseVec,
}

/// Incrementally built echelon basis of a subspace.
///
/// Each stored row has a leading 1 at its pivot (its smallest index) and records, when
/// tracking is enabled, which combination of the inserted vectors produced it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<Row>,
    pivots: HashMap<usize, usize>,
    inserted: usize,
    track: bool,
}

impl Echelon {
    pub fn new(field: Field) -> Echelon {
        Echelon { field, rows: Vec::new(), pivots: HashMap::new(), inserted: 0, track: false }
    }

    pub fn tracked(field: Field) -> Echelon {
        Echelon { track: true, ..Echelon::new(field) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot indices in increasing order.
    pub fn pivot_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pivots.keys().copied().collect();
        v.sort_unstable();
        v
    }

    /// Basis vectors of the span (in echelon form).
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|r| &r.vec)
    }

    fn reduce_inner(&self, v: &SparseVec, mut combo: Option<SparseVec>) -> (SparseVec, Option<SparseVec>) {
        if self.rows.is_empty() {
            return (v.clone(), combo);
        }
        let mut work: BTreeMap<usize, Scalar> = v.entries.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).find(|(i, _)| self.pivots.contains_key(i)).map(|(i, c)| (*i, c.clone()));
            let Some((idx, c)) = next else { break };
            let row = &self.rows[self.pivots[&idx]];
            for (j, a) in row.vec.iter() {
                let delta = a * &c;
                match work.get_mut(&j) {
                    Some(x) => {
                        *x -= &delta;
                        if x.is_zero() {
                            work.remove(&j);
                        }
                    }
                    None => {
                        work.insert(j, -delta);
                    }
                }
            }
            if let Some(cb) = combo.as_mut() {
                *cb = cb.add_scaled(&row.combo, &-c);
            }
            cursor = idx + 1;
        }
        (SparseVec::from_map(work), combo)
    }

    /// Remainder of `v` modulo the span; zero iff `v` is in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_inner(v, None).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v` (counted as input number `self.inserted`); returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.insert_with_combo(v).is_none()
    }

    /// Inserts `v`. When `v` was dependent, returns the relation among inputs that it
    /// witnesses (only meaningful when tracking).
    pub fn insert_with_combo(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let combo = self.track.then(|| SparseVec::unit(id, self.field));
        let (rem, combo) = self.reduce_inner(v, combo);
        let combo = combo.unwrap_or_default();
        let Some((pivot, lead)) = rem.first().map(|(i, c)| (i, c.clone())) else {
            return Some(combo);
        };
        let inv = lead.inv().expect("nonzero pivot");
        let row = Row { vec: rem.scale(&inv), combo: combo.scale(&inv) };
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        None
    }

    /// Coefficients `c` over inserted inputs with `Σ c_k·input_k = v`, if `v` is in the span.
    /// Requires tracking.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "solve requires a tracked echelon");
        let (rem, combo) = self.reduce_inner(v, Some(SparseVec::new()));
        rem.is_zero().then(|| combo.unwrap().scale(&-self.field.one()))
    }
}

/// Rank of a family of vectors.
pub fn rank(field: Field, vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of `{c : Σ c_k·vectors[k] = 0}`.
pub fn kernel(field: Field, vectors: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::tracked(field);
    vectors.iter().filter_map(|v| e.insert_with_combo(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(f: Field, v: &[i64]) -> SparseVec {
        SparseVec::from_entries(v.iter().enumerate().map(|(i, &c)| (i, f.from_i64(c))))
    }

    #[test]
    fn rank_and_kernel() {
        let q = Field::Rationals;
        let vs = vec![sv(q, &[1, 2, 3]), sv(q, &[2, 4, 6]), sv(q, &[0, 1, 1]), sv(q, &[1, 3, 4])];
        assert_eq!(rank(q, &vs), 2);
        let ker = kernel(q, &vs);
        assert_eq!(ker.len(), 2);
        for c in &ker {
            let mut total = SparseVec::new();
            for (k, a) in c.iter() {
                total = total.add_scaled(&vs[k], a);
            }
            assert!(total.is_zero());
        }
    }

    #[test]
    fn solve_recovers_combination() {
        let f = Field::Prime(7);
        let vs = vec![sv(f, &[1, 0, 2]), sv(f, &[0, 1, 5])];
        let mut e = Echelon::tracked(f);
        for v in &vs {
            e.insert(v);
        }
        let target = vs[0].scale(&f.from_i64(3)).add_scaled(&vs[1], &f.from_i64(4));
        let c = e.solve(&target).unwrap();
        assert_eq!(c.get(0), Some(&f.from_i64(3)));
        assert_eq!(c.get(1), Some(&f.from_i64(4)));
        assert!(e.solve(&sv(f, &[0, 0, 1])).is_none());
    }
}
