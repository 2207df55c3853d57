//! The graded hypersurface `R = k[x, y]/(f)` given in factored form, its graded pieces and
//! the pieces of the components of its graded total quotient ring.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{
    graded_monomials, normal_form_poly, rehomogenize, ArithError, Field, Monomial, Poly, UniPoly,
    Weights,
};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("malformed spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("invalid spec: {0}")]
    Invalid(String),
}

/// On-disk form of a spec.
///
/// Each factor `f_j` is given by the coefficients of `g_j(t) = f_j(t^{1/n}, 1)`, lowest
/// degree first, so `coeffs[k]` multiplies `x^{nk} y^{m(d-k)}` with `d = deg g_j`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: String,
    pub m: u32,
    pub n: u32,
    #[serde(default)]
    pub n_x: u32,
    #[serde(default)]
    pub n_y: u32,
    #[serde(default)]
    pub factors: Vec<FactorFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FactorFile {
    pub coeffs: Vec<String>,
    pub multiplicity: u32,
}

/// An irreducible factor `f_j` other than `x`, `y`, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Monic `g_j` with nonzero constant term.
    pub g: UniPoly,
    pub multiplicity: u32,
}

impl Factor {
    pub fn deg_g(&self) -> usize {
        self.g.degree().unwrap_or(0)
    }

    /// `G = g^{n_j}`, so that the degree-zero part of `K^j` is `k[z]/(G)`.
    pub fn power(&self) -> UniPoly {
        self.g.pow(self.multiplicity)
    }

    /// Dimension of every graded piece of `K^j`.
    pub fn piece_dim(&self) -> usize {
        self.deg_g() * self.multiplicity as usize
    }
}

/// Which component of the graded total quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    X,
    Y,
    J(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NegativeCase {
    NonNegative,
    Regular,
    PureXPower(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    pub name: Option<String>,
    pub field: Field,
    pub weights: Weights,
    pub n_x: u32,
    pub n_y: u32,
    pub factors: Vec<Factor>,
    /// Non-fatal notes from validation (for example unchecked irreducibility).
    pub warnings: Vec<String>,
}

impl HypersurfaceSpec {
    pub fn new(
        field: Field,
        m: u32,
        n: u32,
        n_x: u32,
        n_y: u32,
        factors: Vec<(UniPoly, u32)>,
    ) -> Result<HypersurfaceSpec, SpecError> {
        let weights = Weights::new(m, n)?;
        if m > n {
            return Err(SpecError::Invalid(format!("weights must satisfy m <= n, got ({m}, {n})")));
        }
        let mut warnings = Vec::new();
        let mut checked: Vec<Factor> = Vec::new();
        for (k, (g, multiplicity)) in factors.into_iter().enumerate() {
            let label = format!("factor {}", k + 1);
            if g.field() != field {
                return Err(SpecError::Invalid(format!("{label}: coefficients over the wrong field")));
            }
            if multiplicity == 0 {
                return Err(SpecError::Invalid(format!("{label}: multiplicity must be positive")));
            }
            let Some(deg) = g.degree().filter(|&d| d >= 1) else {
                return Err(SpecError::Invalid(format!("{label}: g must have positive degree")));
            };
            if !g.is_monic() {
                return Err(SpecError::Invalid(format!(
                    "{label}: not monic (the coefficient of the largest x-power must be 1)"
                )));
            }
            if g.coeff(0).is_zero() {
                return Err(SpecError::Invalid(format!("{label}: divisible by x")));
            }
            if deg >= 2 {
                match (deg <= 3).then(|| g.has_root()).flatten() {
                    Some(true) => {
                        return Err(SpecError::Invalid(format!("{label}: g = {g} is reducible")))
                    }
                    Some(false) => {}
                    None => warnings.push(format!("{label}: irreducibility of g = {g} not checked")),
                }
            }
            if checked.iter().any(|f| f.g == g) {
                return Err(SpecError::Invalid(format!("{label}: repeated factor")));
            }
            checked.push(Factor { g, multiplicity });
        }
        let spec = HypersurfaceSpec { name: None, field, weights, n_x, n_y, factors: checked, warnings };
        if spec.degree_f() <= 0 {
            return Err(SpecError::Invalid("f must have positive degree".into()));
        }
        Ok(spec)
    }

    pub fn from_file(file: &SpecFile) -> Result<HypersurfaceSpec, SpecError> {
        let field: Field = file.field.parse()?;
        let mut factors = Vec::new();
        for fac in &file.factors {
            let coeffs = fac.coeffs.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>, _>>()?;
            factors.push((UniPoly::new(field, coeffs), fac.multiplicity));
        }
        let mut spec = HypersurfaceSpec::new(field, file.m, file.n, file.n_x, file.n_y, factors)?;
        spec.name = file.name.clone();
        Ok(spec)
    }

    pub fn from_json(text: &str) -> Result<HypersurfaceSpec, SpecError> {
        HypersurfaceSpec::from_file(&serde_json::from_str(text)?)
    }

    pub fn to_file(&self) -> SpecFile {
        SpecFile {
            name: self.name.clone(),
            field: self.field.to_string(),
            m: self.weights.m,
            n: self.weights.n,
            n_x: self.n_x,
            n_y: self.n_y,
            factors: self
                .factors
                .iter()
                .map(|f| FactorFile {
                    coeffs: f.g.coeffs().iter().map(|c| c.to_string()).collect(),
                    multiplicity: f.multiplicity,
                })
                .collect(),
        }
    }

    pub fn with_name(mut self, name: &str) -> HypersurfaceSpec {
        self.name = Some(name.to_string());
        self
    }

    pub fn m(&self) -> i64 {
        self.weights.m as i64
    }

    pub fn n(&self) -> i64 {
        self.weights.n as i64
    }

    /// Degree of the homogeneous factor `f_j`.
    pub fn factor_degree(&self, j: usize) -> i64 {
        self.factors[j].deg_g() as i64 * self.m() * self.n()
    }

    pub fn degree_f(&self) -> i64 {
        let mut d = self.n_x as i64 * self.m() + self.n_y as i64 * self.n();
        for (j, fac) in self.factors.iter().enumerate() {
            d += fac.multiplicity as i64 * self.factor_degree(j);
        }
        d
    }

    pub fn a_invariant(&self) -> i64 {
        self.degree_f() - self.m() - self.n()
    }

    pub fn is_reduced(&self) -> bool {
        self.n_x <= 1 && self.n_y <= 1 && self.factors.iter().all(|f| f.multiplicity == 1)
    }

    /// `f_j` as a homogeneous polynomial.
    pub fn factor_poly(&self, j: usize) -> Poly {
        rehomogenize(&self.factors[j].g, self.weights, self.factor_degree(j))
            .expect("factor degree is consistent")
            .poly()
            .clone()
    }

    /// The full product `f`.
    pub fn f_poly(&self) -> Poly {
        let mut p = Poly::monomial(self.field, self.field.one(), Monomial::new(self.n_x as i64, self.n_y as i64));
        for (j, fac) in self.factors.iter().enumerate() {
            p = p.mul(&self.factor_poly(j).pow(fac.multiplicity));
        }
        p
    }

    /// Leading monomial of `f` (largest `x`-exponent).
    pub fn leading_monomial(&self) -> Monomial {
        let xs: i64 = self.factors.iter().map(|f| f.multiplicity as i64 * f.deg_g() as i64 * self.n()).sum();
        Monomial::new(self.n_x as i64 + xs, self.n_y as i64)
    }

    /// Monomial basis of `R_d`: degree-`d` monomials not divisible by the leading monomial of `f`.
    pub fn ring_basis(&self, d: i64) -> Vec<Monomial> {
        let lead = self.leading_monomial();
        graded_monomials(d, self.weights.m, self.weights.n).into_iter().filter(|mono| !mono.divisible_by(lead)).collect()
    }

    pub fn ring_dim(&self, d: i64) -> usize {
        self.ring_basis(d).len()
    }

    /// Canonical representative of `p` in `R`.
    pub fn reduce(&self, p: &Poly) -> Poly {
        normal_form_poly(p, &self.f_poly()).expect("f is nonzero")
    }

    pub fn components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        if self.n_x > 0 {
            out.push(Component::X);
        }
        if self.n_y > 0 {
            out.push(Component::Y);
        }
        out.extend((0..self.factors.len()).map(Component::J));
        out
    }

    /// Monomial basis of the degree-`d` piece of a component.
    ///
    /// For `K^j` the basis is `z^e w^d` with `z = x^n y^{-m}` and `w = x^r y^s`, where
    /// `unit = (r, s)` satisfies `rm + sn = 1`.
    pub fn component_piece_basis(&self, c: Component, d: i64, unit: (i64, i64)) -> Vec<Monomial> {
        let (m, n) = (self.m(), self.n());
        match c {
            Component::X => (0..self.n_x as i64)
                .filter(|i| (d - i * m).rem_euclid(n) == 0)
                .map(|i| Monomial::new(i, (d - i * m) / n))
                .collect(),
            Component::Y => (0..self.n_y as i64)
                .filter(|j| (d - j * n).rem_euclid(m) == 0)
                .map(|j| Monomial::new((d - j * n) / m, j))
                .collect(),
            Component::J(j) => {
                let (r, s) = unit;
                (0..self.factors[j].piece_dim() as i64).map(|e| Monomial::new(n * e + r * d, -m * e + s * d)).collect()
            }
        }
    }

    pub fn classify_negative(&self) -> Result<NegativeCase, SpecError> {
        if self.a_invariant() >= 0 {
            return Ok(NegativeCase::NonNegative);
        }
        if self.f_poly().terms().any(|(mono, _)| mono.x + mono.y == 1) {
            return Ok(NegativeCase::Regular);
        }
        if self.n_y == 0 && self.factors.is_empty() && self.n_x > 1 && (self.n_x as i64 - 1) * self.m() < self.n() {
            return Ok(NegativeCase::PureXPower(self.n_x));
        }
        Err(SpecError::Invalid(format!(
            "internal: negative a-invariant {} matches no known case",
            self.a_invariant()
        )))
    }
}

/// The pair `(r, s)` with `rm + sn = 1` and `0 <= r < n` (for `n = 1`, `r = 0`).
pub fn canonical_unit(m: u32, n: u32) -> (i64, i64) {
    let (m, n) = (m as i64, n as i64);
    let r = (0..n.max(1)).find(|r| (1 - r * m).rem_euclid(n) == 0).expect("m and n are coprime");
    (r, (1 - r * m) / n)
}

/// Scalar helper for building factors from small integers.
pub fn uni(field: Field, coeffs: &[i64]) -> UniPoly {
    UniPoly::from_i64s(field, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn e7() -> HypersurfaceSpec {
        HypersurfaceSpec::new(Q, 2, 3, 0, 1, vec![(uni(Q, &[-1, 1]), 1)]).unwrap()
    }

    fn quartic() -> HypersurfaceSpec {
        HypersurfaceSpec::new(Q, 2, 3, 0, 0, vec![(uni(Q, &[1, 0, 1]), 1)]).unwrap()
    }

    fn hilbert_coeff(deg_f: i64, m: i64, n: i64, d: i64) -> i64 {
        let count = |e: i64| if e < 0 { 0 } else { graded_monomials(e, m as u32, n as u32).len() as i64 };
        count(d) - count(d - deg_f)
    }

    #[test]
    fn canonical_units() {
        assert_eq!(canonical_unit(2, 3), (2, -1));
        assert_eq!(canonical_unit(2, 9), (5, -1));
        assert_eq!(canonical_unit(1, 4), (1, 0));
        assert_eq!(canonical_unit(1, 1), (0, 1));
    }

    #[test]
    fn a_invariants() {
        assert_eq!(quartic().a_invariant(), 7);
        assert_eq!(e7().a_invariant(), 4);
        let cube = HypersurfaceSpec::new(Q, 2, 9, 3, 0, vec![]).unwrap();
        assert_eq!(cube.a_invariant(), -5);
    }

    #[test]
    fn classification() {
        let cube = HypersurfaceSpec::new(Q, 2, 9, 3, 0, vec![]).unwrap();
        assert_eq!(cube.classify_negative().unwrap(), NegativeCase::PureXPower(3));
        let line = HypersurfaceSpec::new(Q, 1, 1, 0, 1, vec![]).unwrap();
        assert_eq!(line.classify_negative().unwrap(), NegativeCase::Regular);
        assert_eq!(quartic().classify_negative().unwrap(), NegativeCase::NonNegative);
    }

    #[test]
    fn piece_bases() {
        let y_only = HypersurfaceSpec::new(Q, 2, 3, 0, 1, vec![]).unwrap();
        assert_eq!(y_only.component_piece_basis(Component::Y, 4, (2, -1)), vec![Monomial::new(2, 0)]);
        assert!(quartic().component_piece_basis(Component::X, 5, (2, -1)).is_empty());
        assert_eq!(quartic().component_piece_basis(Component::J(0), 3, (2, -1)).len(), 2);
        for (c, d) in [(Component::J(0), 3), (Component::J(0), -2)] {
            for mono in quartic().component_piece_basis(c, d, (2, -1)) {
                assert_eq!(quartic().weights.degree(mono), d);
            }
        }
    }

    #[test]
    fn hilbert_series_matches() {
        for spec in [e7(), quartic()] {
            let deg = spec.degree_f();
            for d in 0..=4 * deg {
                assert_eq!(spec.ring_dim(d) as i64, hilbert_coeff(deg, spec.m(), spec.n(), d), "d = {d}");
            }
        }
    }

    #[test]
    fn quotient_pieces_add_up_in_stable_range() {
        for spec in [e7(), quartic()] {
            let a = spec.a_invariant();
            for d in a + 1..=a + 4 * spec.degree_f() {
                let total: usize = spec.components().into_iter().map(|c| spec.component_piece_basis(c, d, (2, -1)).len()).sum();
                assert_eq!(total, spec.ring_dim(d), "d = {d}");
            }
        }
    }

    #[test]
    fn json_roundtrip_and_rejections() {
        let text = r#"{"field":"q","m":2,"n":3,"n_x":0,"n_y":1,"factors":[{"coeffs":["-1","1"],"multiplicity":1}]}"#;
        let spec = HypersurfaceSpec::from_json(text).unwrap();
        assert_eq!(spec, e7());
        let again = HypersurfaceSpec::from_file(&spec.to_file()).unwrap();
        assert_eq!(again, spec);
        let reducible = r#"{"field":"q","m":2,"n":3,"factors":[{"coeffs":["-1","0","1"],"multiplicity":1}]}"#;
        assert!(HypersurfaceSpec::from_json(reducible).is_err());
        let not_monic = r#"{"field":"q","m":2,"n":3,"factors":[{"coeffs":["1","2"],"multiplicity":1}]}"#;
        assert!(HypersurfaceSpec::from_json(not_monic).is_err());
        let swapped = r#"{"field":"q","m":3,"n":2,"n_x":2}"#;
        assert!(HypersurfaceSpec::from_json(swapped).is_err());
        let over_f5 = r#"{"field":"p:5","m":2,"n":3,"factors":[{"coeffs":["1","0","1"],"multiplicity":1}]}"#;
        assert!(HypersurfaceSpec::from_json(over_f5).is_err());
    }
}
