//! Named specs used by the verification suites.

use crate::arith::Field;
use crate::ring::{uni, HypersurfaceSpec};

const Q: Field = Field::Rationals;

/// `f = y(x³ − y²)`, weights `(2, 3)`.
pub fn e7() -> HypersurfaceSpec {
    HypersurfaceSpec::new(Q, 2, 3, 0, 1, vec![(uni(Q, &[-1, 1]), 1)]).unwrap().with_name("e7")
}

/// `f = x^{m+1} − y^m`, weights `(m, m+1)`; the semigroup `⟨m, m+1⟩`.
pub fn consecutive(m: u32) -> HypersurfaceSpec {
    HypersurfaceSpec::new(Q, m, m + 1, 0, 0, vec![(uni(Q, &[-1, 1]), 1)])
        .unwrap()
        .with_name(&format!("consecutive-{m}"))
}

/// `f = x⁶ + y⁴`, weights `(2, 3)`.
pub fn quartic() -> HypersurfaceSpec {
    HypersurfaceSpec::new(Q, 2, 3, 0, 0, vec![(uni(Q, &[1, 0, 1]), 1)]).unwrap().with_name("quartic")
}

/// `f = y^{n_y}`, weights `(2, 3)`.
pub fn y_power(n_y: u32) -> HypersurfaceSpec {
    HypersurfaceSpec::new(Q, 2, 3, 0, n_y, vec![]).unwrap().with_name(&format!("y-power-{n_y}"))
}

/// `f = x³`, weights `(2, 9)`.
pub fn cube() -> HypersurfaceSpec {
    HypersurfaceSpec::new(Q, 2, 9, 3, 0, vec![]).unwrap().with_name("cube")
}

/// `f = x^n − y^m` for coprime `m < n`.
pub fn binomial(m: u32, n: u32) -> HypersurfaceSpec {
    HypersurfaceSpec::new(Q, m, n, 0, 0, vec![(uni(Q, &[-1, 1]), 1)])
        .unwrap()
        .with_name(&format!("binomial-{m}-{n}"))
}

/// Specs with `a >= 0` used for cross-checks.
pub fn nonnegative_suite() -> Vec<HypersurfaceSpec> {
    let mut out = vec![e7(), quartic(), y_power(2), y_power(3)];
    out.extend((2..=5).map(consecutive));
    out
}
