use std::fmt;

use super::{Field, Scalar};

/// Dense univariate polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> UniPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> UniPoly {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> UniPoly {
        UniPoly { field, coeffs: vec![field.one()] }
    }

    /// `c · t^k`
    pub fn monomial(field: Field, c: Scalar, k: usize) -> UniPoly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(field, coeffs)
    }

    pub fn from_i64s(field: Field, cs: &[i64]) -> UniPoly {
        UniPoly::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let cs = (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        UniPoly::new(self.field, cs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let cs = (0..len).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        UniPoly::new(self.field, cs)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut cs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                cs[i + j] += &(a * b);
            }
        }
        UniPoly::new(self.field, cs)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                let shift = top - dd;
                for (k, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[shift + k] -= &t;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (UniPoly::new(self.field, quot), UniPoly::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.div_rem(divisor).1
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * t) + c)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => {
                let inv = l.inv().unwrap();
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &UniPoly) -> UniPoly {
        let mut base = self.rem(modulus);
        let mut acc = UniPoly::one(self.field).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Whether the polynomial has a root in the ground field.
    ///
    /// Over 𝔽_p this is `gcd(g, t^p − t) ≠ 1`; over ℚ the rational root test is used and
    /// `None` is returned when the coefficients are too large to enumerate divisors.
    pub fn has_root(&self) -> Option<bool> {
        let deg = self.degree()?;
        if deg == 0 {
            return Some(false);
        }
        match self.field {
            Field::Prime(p) => {
                let t = UniPoly::monomial(self.field, self.field.one(), 1);
                let tp = t.pow_mod(p, self);
                let g = self.gcd(&tp.sub(&t));
                Some(g.degree().unwrap_or(0) > 0)
            }
            Field::Rationals => rational_root_test(self),
        }
    }
}

fn rational_root_test(g: &UniPoly) -> Option<bool> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, ToPrimitive, Zero};

    let rats: Vec<_> = g
        .coeffs
        .iter()
        .map(|c| match c {
            Scalar::Rational(r) => r.clone(),
            Scalar::Modular { .. } => unreachable!(),
        })
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
    if ints[0].is_zero() {
        return Some(true);
    }
    let small = |b: &BigInt| b.abs().to_u64().filter(|&v| v <= 1_000_000_000_000);
    let c0 = small(&ints[0])?;
    let cd = small(ints.last().unwrap())?;
    let field = g.field;
    for p in divisors(c0) {
        for q in divisors(cd) {
            for sign in [1i64, -1] {
                let cand = field
                    .from_ratio(&BigInt::from(sign * p as i64), &BigInt::from(q))
                    .expect("nonzero q");
                if g.eval(&cand).is_zero() {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}
