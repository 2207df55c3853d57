//! Numerical semigroups, the poset of graded Homs between the summands of the standard
//! tilting module, and the bridge from two-generator semigroups to plane curves.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::BasedAlgebra;
use crate::arith::Field;
use crate::homalg::{incidence_algebra, Poset};
use crate::ring::{uni, HypersurfaceSpec, SpecError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("semigroup needs at least one positive generator")]
    Empty,
    #[error("generators have gcd {0}, so the semigroup is not cofinite")]
    NotCofinite(u64),
    #[error("the semigroup is all of ℕ, so there is no tilting object to build")]
    WholeLine,
    #[error("expected exactly two minimal generators, found {0}")]
    NotTwoGenerated(usize),
    #[error("{0}")]
    Spec(String),
}

impl From<SpecError> for SemigroupError {
    fn from(e: SpecError) -> SemigroupError {
        SemigroupError::Spec(e.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericalSemigroup {
    pub generators: Vec<u64>,
    /// Largest gap, `-1` for `ℕ`.
    pub frobenius: i64,
    /// Membership of `0..=2·frobenius + 2`.
    member: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[u64]) -> Result<NumericalSemigroup, SemigroupError> {
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let Some(&smallest) = gens.first() else { return Err(SemigroupError::Empty) };
        let g = gens.iter().fold(0, |acc, &x| num_integer::gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NotCofinite(g));
        }
        // Scan until `smallest` consecutive members appear; everything after is in S.
        let mut member = vec![true];
        let mut run = 1u64;
        let mut d = 0usize;
        while run < smallest {
            d += 1;
            let inside = gens.iter().any(|&x| x as usize <= d && member[d - x as usize]);
            member.push(inside);
            run = if inside { run + 1 } else { 0 };
        }
        let frobenius = member.iter().rposition(|&b| !b).map_or(-1, |k| k as i64);
        let limit = (2 * frobenius + 2).max(0) as usize;
        while member.len() <= limit {
            member.push(true);
        }
        member.truncate(limit + 1);
        Ok(NumericalSemigroup { generators: gens, frobenius, member })
    }

    pub fn contains(&self, d: i64) -> bool {
        d >= 0 && (d as usize >= self.member.len() || self.member[d as usize])
    }

    /// Generators that are not sums of smaller elements.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for &g in &self.generators {
            let reachable = |target: u64, mins: &[u64]| {
                let mut ok = vec![false; target as usize + 1];
                ok[0] = true;
                for t in 1..=target as usize {
                    ok[t] = mins.iter().any(|&x| x as usize <= t && ok[t - x as usize]);
                }
                ok[target as usize]
            };
            if !reachable(g, &out) {
                out.push(g);
            }
        }
        out
    }

    pub fn a_invariant(&self) -> i64 {
        self.frobenius
    }

    /// The poset on `1..=a+1` with `i <= j` iff `d + i ∈ S` implies `d + j ∈ S` for all
    /// `d >= 0`, checked for `d <= 2·frobenius + 2`.
    pub fn hom_poset(&self) -> Result<Poset, SemigroupError> {
        let a = self.frobenius;
        if a < 0 {
            return Err(SemigroupError::WholeLine);
        }
        let n = (a + 1) as usize;
        let horizon = 2 * a + 2;
        let leq = (1..=n as i64)
            .map(|i| {
                (1..=n as i64)
                    .map(|j| (0..=horizon).all(|d| !self.contains(d + i) || self.contains(d + j)))
                    .collect()
            })
            .collect();
        Ok(Poset { labels: (1..=n).map(|i| i.to_string()).collect(), leq })
    }

    /// The endomorphism algebra of the standard tilting module, as the incidence algebra of
    /// the Hom poset.
    pub fn gamma(&self, field: Field) -> Result<BasedAlgebra, SemigroupError> {
        Ok(incidence_algebra(field, &self.hom_poset()?))
    }

    /// For `S = ⟨m, n⟩` with `m < n`, the curve `x^n − y^m` with `deg x = m`, `deg y = n`.
    pub fn bridge(&self, field: Field) -> Result<HypersurfaceSpec, SemigroupError> {
        let mins = self.minimal_generators();
        if mins.len() != 2 {
            return Err(SemigroupError::NotTwoGenerated(mins.len()));
        }
        let (m, n) = (mins[0] as u32, mins[1] as u32);
        let spec = HypersurfaceSpec::new(field, m, n, 0, 0, vec![(uni(field, &[-1, 1]), 1)])
            .map_err(SemigroupError::from)?;
        Ok(spec.with_name(&format!("semigroup-{m}-{n}")))
    }
}
