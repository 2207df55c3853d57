use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::{ArithError, Field, Scalar, UniPoly};

/// `x^x y^y`; exponents may be negative in localized rings.
///
/// The derived order is lexicographic with `x > y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: i64,
    pub y: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Monomial {
        Monomial { x, y }
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial { x: self.x + other.x, y: self.y + other.y }
    }

    pub fn pow(self, e: i64) -> Monomial {
        Monomial { x: self.x * e, y: self.y * e }
    }

    pub fn inv(self) -> Monomial {
        Monomial { x: -self.x, y: -self.y }
    }

    pub fn is_polynomial(self) -> bool {
        self.x >= 0 && self.y >= 0
    }

    /// Whether `other` divides `self` in `k[x, y]`.
    pub fn divisible_by(self, other: Monomial) -> bool {
        self.x >= other.x && self.y >= other.y
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, v: &str, e: i64| match e {
            1 => write!(f, "{v}"),
            _ => write!(f, "{v}^{e}"),
        };
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (a, 0) => part(f, "x", a),
            (0, b) => part(f, "y", b),
            (a, b) => {
                part(f, "x", a)?;
                write!(f, "*")?;
                part(f, "y", b)
            }
        }
    }
}

/// Positive coprime degrees of `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weights {
    pub m: u32,
    pub n: u32,
}

impl Weights {
    pub fn new(m: u32, n: u32) -> Result<Weights, ArithError> {
        if m == 0 || n == 0 || m.gcd(&n) != 1 {
            return Err(ArithError::BadWeights { m, n });
        }
        Ok(Weights { m, n })
    }

    pub fn degree(self, mono: Monomial) -> i64 {
        mono.x * self.m as i64 + mono.y * self.n as i64
    }
}

/// Nonnegative `(i, j)` with `i·m + j·n = d`, sorted by descending `i`.
pub fn graded_monomials(d: i64, m: u32, n: u32) -> Vec<Monomial> {
    let (m, n) = (m as i64, n as i64);
    if d < 0 {
        return Vec::new();
    }
    let mut out: Vec<Monomial> = (0..=d / m)
        .rev()
        .filter(|i| (d - i * m) % n == 0)
        .map(|i| Monomial::new(i, (d - i * m) / n))
        .collect();
    out.dedup();
    out
}

/// Sparse Laurent polynomial in `x, y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(field: Field) -> Poly {
        Poly { field, terms: BTreeMap::new() }
    }

    pub fn monomial(field: Field, c: Scalar, mono: Monomial) -> Poly {
        let mut p = Poly::zero(field);
        p.add_term(mono, &c);
        p
    }

    pub fn one(field: Field) -> Poly {
        Poly::monomial(field, field.one(), Monomial::ONE)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(field: Field, terms: I) -> Poly {
        let mut p = Poly::zero(field);
        for (mono, c) in terms {
            p.add_term(mono, &c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: Monomial) -> Scalar {
        self.terms.get(&mono).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Term with the largest `x`-exponent.
    pub fn leading(&self) -> Option<(Monomial, &Scalar)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn add_term(&mut self, mono: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(|| self.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(*mono, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(*mono, &-c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_terms(self.field, self.terms.iter().map(|(m, a)| (*m, a * c)))
    }

    pub fn shift(&self, mono: Monomial) -> Poly {
        Poly { field: self.field, terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field);
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                out.add_term(ma.mul(*mb), &(a * b));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Common degree of all terms; `None` if the terms disagree or the polynomial is zero.
    pub fn homogeneous_degree(&self, w: Weights) -> Option<i64> {
        let mut degs = self.terms.keys().map(|m| w.degree(*m));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.is_polynomial())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *mono == Monomial::ONE {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// A homogeneous polynomial with its weighted degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly {
    poly: Poly,
    degree: i64,
    weights: Weights,
}

impl HomogeneousPoly {
    pub fn new(poly: Poly, weights: Weights) -> Result<HomogeneousPoly, ArithError> {
        let degree = poly.homogeneous_degree(weights).ok_or(ArithError::NotHomogeneous)?;
        Ok(HomogeneousPoly { poly, degree, weights })
    }

    /// The zero polynomial, regarded as homogeneous of degree `d`.
    pub fn zero(field: Field, weights: Weights, degree: i64) -> HomogeneousPoly {
        HomogeneousPoly { poly: Poly::zero(field), degree, weights }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn weights(&self) -> Weights {
        self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn mul(&self, other: &HomogeneousPoly) -> HomogeneousPoly {
        HomogeneousPoly {
            poly: self.poly.mul(&other.poly),
            degree: self.degree + other.degree,
            weights: self.weights,
        }
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Remainder of `p` on division by `f` in `k[x, y]`, with respect to the lexicographic
/// order `x > y`. No monomial of the result is divisible by the leading monomial of `f`.
pub fn normal_form_poly(p: &Poly, f: &Poly) -> Result<Poly, ArithError> {
    let (lead, lead_c) = f.leading().ok_or(ArithError::ZeroModulus)?;
    let lead_inv = lead_c.inv().expect("nonzero leading coefficient");
    let mut work = p.clone();
    let mut out = Poly::zero(p.field());
    while let Some((mono, c)) = work.leading().map(|(m, c)| (m, c.clone())) {
        if mono.divisible_by(lead) {
            let q = Monomial::new(mono.x - lead.x, mono.y - lead.y);
            let factor = &c * &lead_inv;
            work = work.sub(&f.shift(q).scale(&factor));
        } else {
            out.add_term(mono, &c);
            work.terms.remove(&mono);
        }
    }
    Ok(out)
}

/// Homogeneous version of [`normal_form_poly`].
pub fn normal_form(p: &HomogeneousPoly, f: &HomogeneousPoly) -> Result<HomogeneousPoly, ArithError> {
    let poly = normal_form_poly(&p.poly, &f.poly)?;
    Ok(HomogeneousPoly { poly, degree: p.degree, weights: p.weights })
}

/// `g(t) = f(t^{1/n}, 1)`: sends `x^{cn} y^e` to `t^c`.
pub fn dehomogenize(f: &HomogeneousPoly, n: u32) -> Result<UniPoly, ArithError> {
    let field = f.poly.field();
    let mut coeffs = Vec::new();
    for (mono, c) in f.poly.terms() {
        if mono.x < 0 || mono.x % n as i64 != 0 {
            return Err(ArithError::NotDehomogenizable { exponent: mono.x, n });
        }
        let k = (mono.x / n as i64) as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, field.zero());
        }
        coeffs[k] += c;
    }
    Ok(UniPoly::new(field, coeffs))
}

/// Inverse of [`dehomogenize`]: `t^c ↦ x^{cn} y^{(degree − c·n·m)/n}`.
pub fn rehomogenize(g: &UniPoly, weights: Weights, degree: i64) -> Result<HomogeneousPoly, ArithError> {
    let (m, n) = (weights.m as i64, weights.n as i64);
    let mut poly = Poly::zero(g.field());
    for (c, coeff) in g.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let rest = degree - c as i64 * n * m;
        if rest % n != 0 {
            return Err(ArithError::NotHomogeneous);
        }
        poly.add_term(Monomial::new(c as i64 * n, rest / n), coeff);
    }
    if poly.is_zero() {
        return Ok(HomogeneousPoly::zero(g.field(), weights, degree));
    }
    HomogeneousPoly::new(poly, weights)
}
