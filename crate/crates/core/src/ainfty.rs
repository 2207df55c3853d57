//! The minimal A∞-structure on the Ext algebra of the simples over the self-injective
//! Nakayama algebra `kC_n/(x^{n_x})`, the Stasheff identities, and the differential it
//! induces on the tensor algebra of the shifted dual.

use serde::Serialize;

use crate::arith::Field;
use crate::dg::{Chain, DgParams, DgPath, DgPathAlgebra};

/// Basis `α_{p,i}` for `p >= 0` and `i ∈ ℤ/n`; `α_{p,i}` is followed by inputs starting at
/// `ν_p(i)`. Products are determined by the degrees, so tuples are stored as degree lists
/// together with the start vertex of the first input.
#[derive(Clone, Copy, Debug)]
pub struct AInfinityNakayama {
    pub params: DgParams,
    corrupted: bool,
}

impl AInfinityNakayama {
    /// Arrows go `i → i + m`. No coprimality or size condition is imposed here.
    pub fn new(n: u32, n_x: u32, m: u32) -> AInfinityNakayama {
        assert!(n >= 1 && n_x >= 2 && m >= 1, "need n >= 1, n_x >= 2, m >= 1");
        AInfinityNakayama { params: DgParams { n, n_x, m }, corrupted: false }
    }

    /// Negative control: `m_{n_x}` changes sign on tuples of degree-one inputs only.
    pub fn with_corrupted_top(mut self) -> AInfinityNakayama {
        self.corrupted = true;
        self
    }

    /// `m_k` on a composable tuple of degrees. Returns the coefficient and the degree of the
    /// output `α_{·,i}`, which starts where the first input starts.
    pub fn product(&self, degrees: &[u32]) -> Option<(i64, u32)> {
        let k = degrees.len();
        let all_odd = degrees.iter().all(|p| p % 2 == 1);
        let mut coeff = 0;
        if k == 2 && !all_odd {
            coeff += 1;
        }
        if k == self.params.n_x as usize && all_odd {
            coeff += if self.corrupted && degrees.iter().all(|&p| p == 1) { -1 } else { 1 };
        }
        if coeff == 0 {
            return None;
        }
        let total: u32 = degrees.iter().sum();
        let out = (total + 2).checked_sub(k as u32).expect("degree of m_k is 2 - k");
        Some((coeff, out))
    }

    /// `m_2(α_{p1,i}, α_{p2,j})`, zero unless `j = ν_{p1}(i)`.
    pub fn m2(&self, (p1, i): (u32, usize), (p2, j): (u32, usize)) -> Option<(i64, u32, usize)> {
        self.composite(&[(p1, i), (p2, j)])
    }

    /// `m_{n_x}` on explicit basis elements, zero on non-composable input.
    pub fn m_top(&self, inputs: &[(u32, usize)]) -> Result<Option<(i64, u32, usize)>, String> {
        if inputs.len() != self.params.n_x as usize {
            return Err(format!("m_top takes {} inputs, got {}", self.params.n_x, inputs.len()));
        }
        Ok(self.composite(inputs))
    }

    fn composite(&self, inputs: &[(u32, usize)]) -> Option<(i64, u32, usize)> {
        let n = self.params.n as usize;
        for w in inputs.windows(2) {
            if self.params.nu(w[0].0, w[0].1 % n) != w[1].1 % n {
                return None;
            }
        }
        let degrees: Vec<u32> = inputs.iter().map(|x| x.0).collect();
        self.product(&degrees).map(|(c, p)| (c, p, inputs[0].1 % n))
    }

    /// Evaluates the left side of the Stasheff identity of arity `degrees.len()`.
    fn stasheff_defect(&self, degrees: &[u32]) -> i64 {
        let n = degrees.len();
        let mut total = 0;
        for s in 2..=n {
            for r in 0..=n - s {
                let t = n - r - s;
                if r + 1 + t < 2 {
                    continue;
                }
                let Some((inner, q)) = self.product(&degrees[r..r + s]) else { continue };
                let mut outer_in = degrees[..r].to_vec();
                outer_in.push(q);
                outer_in.extend_from_slice(&degrees[r + s..]);
                let Some((outer, _)) = self.product(&outer_in) else { continue };
                let passed: u32 = degrees[..r].iter().sum();
                let exponent = r + s * t + s * passed as usize;
                let sign = if exponent % 2 == 0 { 1 } else { -1 };
                total += sign * inner * outer;
            }
        }
        total
    }

    /// Checks every identity on composable tuples of arity `3..=arity_bound` with total
    /// degree at most `p_bound`. Tuples only carry degrees: the start vertex fixes the rest
    /// and the products do not depend on it.
    pub fn check_stasheff(&self, p_bound: u32, arity_bound: usize) -> StasheffReport {
        let mut checked = 0;
        for arity in 3..=arity_bound {
            let mut tuple = vec![0u32; arity];
            loop {
                checked += 1;
                let defect = self.stasheff_defect(&tuple);
                if defect != 0 {
                    return StasheffReport { pass: false, tuples_checked: checked, failure: Some((tuple, defect)) };
                }
                if !next_tuple(&mut tuple, p_bound) {
                    break;
                }
            }
        }
        StasheffReport { pass: true, tuples_checked: checked, failure: None }
    }

    /// `d(β_{p,i})` on the tensor algebra of the shifted dual of `Ext^{>0}`: one term per
    /// tuple of positive degrees whose product is a multiple of `α_{p,i}`. The dual of the
    /// tuple is read in reverse, and moving the shifts past it gives `(−1)^{Σ_j (j−1)p_j}`.
    pub fn bar_differential(&self, p: u32, i: usize, field: Field) -> Chain {
        let mut out = Chain::zero(field);
        let mut arities = vec![2usize];
        if self.params.n_x != 2 {
            arities.push(self.params.n_x as usize);
        }
        for k in arities {
            let mut tuple = vec![1u32; k];
            loop {
                if let Some((c, q)) = self.product(&tuple) {
                    if q == p {
                        let shift: u32 = tuple.iter().enumerate().map(|(j, &pj)| j as u32 * pj).sum();
                        let sign = if shift % 2 == 0 { c } else { -c };
                        out.add_term(DgPath { start: i, arrows: tuple.clone() }, &field.from_i64(sign));
                    }
                }
                if !next_positive_tuple(&mut tuple, p + k as u32) {
                    break;
                }
            }
        }
        out
    }

    /// Compares the bar differential with the closed-form one for `p <= p_check`.
    pub fn compare_with_dg(&self, p_check: u32, field: Field) -> BarComparison {
        let dg = DgPathAlgebra::new(self.params, p_check, field);
        let mut mismatches = Vec::new();
        for p in 1..=p_check {
            for i in 0..self.params.n as usize {
                let bar = self.bar_differential(p, i, field);
                let closed = dg.arrow_differential(p, i);
                if bar != closed {
                    mismatches.push(BarMismatch {
                        p,
                        i,
                        bar: bar.display(&self.params),
                        closed_form: closed.display(&self.params),
                    });
                }
            }
        }
        BarComparison { p_check, mismatches }
    }
}

/// Next tuple of nonnegative entries with sum at most `bound`, in lexicographic order.
fn next_tuple(t: &mut [u32], bound: u32) -> bool {
    for k in (0..t.len()).rev() {
        t[k] += 1;
        if t.iter().sum::<u32>() <= bound {
            return true;
        }
        t[k] = 0;
    }
    false
}

/// Next tuple of positive entries with sum at most `bound`.
fn next_positive_tuple(t: &mut [u32], bound: u32) -> bool {
    for k in (0..t.len()).rev() {
        t[k] += 1;
        if t.iter().sum::<u32>() <= bound {
            return true;
        }
        t[k] = 1;
    }
    false
}

#[derive(Clone, Debug, Serialize)]
pub struct StasheffReport {
    pub pass: bool,
    pub tuples_checked: usize,
    /// Degrees of the first failing tuple and the resulting coefficient.
    pub failure: Option<(Vec<u32>, i64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BarMismatch {
    pub p: u32,
    pub i: usize,
    pub bar: String,
    pub closed_form: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BarComparison {
    pub p_check: u32,
    pub mismatches: Vec<BarMismatch>,
}

impl BarComparison {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}
