//! Floating-point cross-checks for the exact engine.
//!
//! Nothing here feeds back into the exact results; this module exists so
//! that every headline value can be compared against a classical summation
//! device computed by entirely different means.
//!
//! * [`abel_estimate`]: evaluate the power series at points marching
//!   toward 1 and extrapolate the limit (Abel summation, numerically).
//!   When the generalized sum exists and the series Abel-converges (no
//!   poles strictly inside the unit disk), the two agree.
//! * [`harmonic_demo`]: the one place the harmonic sequence appears.  The
//!   transform of `(1/(k+1))` by the index-multiplicative factor
//!   `e_0 - e_1` is the alternating harmonic sequence, whose accelerated
//!   sum is ln 2 — decisively nonzero, while the same factor annihilates
//!   every finitely supported sequence.  That mismatch is the numeric
//!   shadow of a real obstruction: no consistent generalized sum can
//!   cover the harmonic sequence, which is why the exact engine refuses
//!   it everywhere else.

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::Rat;
use crate::seq::{FiniteSeq, GfSeq};

/// Terms per evaluation point used by the CLI; enough that even a pole on
/// the unit circle (other than at 1) is damped to well below double
/// precision at the innermost evaluation point.
pub const DEFAULT_ABEL_TERMS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the generating function has a pole at 1; Abel evaluation cannot apply")]
    PoleAtOne,
}

/// Result of the Abel evaluation: the extrapolated limit plus the raw
/// evaluation grid, for reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct AbelEstimate {
    pub value: f64,
    /// The points `x = 1 - 2^-m` the series was evaluated at.
    pub points: Vec<f64>,
    pub terms_per_point: usize,
}

/// Numerically sum `u` by Abel's method: partial sums of `n_terms` terms
/// at `x = 1 - 2^-4 .. 1 - 2^-10`, then polynomial extrapolation in
/// `h = 1 - x` down to `h = 0`.  Requires no pole at 1 (checked exactly);
/// meaningful when the remaining poles are not strictly inside the unit
/// disk.  `n_terms` below 64 is a caller bug.
pub fn abel_estimate(u: &GfSeq, n_terms: usize) -> Result<AbelEstimate, OracleError> {
    assert!(n_terms >= 64, "too few terms for the evaluation grid");
    if !u.is_zero() && u.gf().vanishing_order(&Rat::one()).unwrap() < 0 {
        return Err(OracleError::PoleAtOne);
    }

    let coeffs = series_f64(u, n_terms);
    let points: Vec<f64> = (4..=10).map(|m| 1.0 - 0.5f64.powi(m)).collect();
    let mut estimates: Vec<f64> = points
        .iter()
        .map(|&x| {
            // compensated summation: the partial sums of a divergent-ish
            // series cancel massively, so keep the rounding error down
            let mut sum = 0.0;
            let mut comp = 0.0;
            let mut xp = 1.0;
            for c in &coeffs {
                let term = c * xp - comp;
                let next = sum + term;
                comp = (next - sum) - term;
                sum = next;
                xp *= x;
            }
            sum
        })
        .collect();

    // Neville's scheme on the nodes h_m = 1 - x_m, evaluated at h = 0
    let hs: Vec<f64> = points.iter().map(|&x| 1.0 - x).collect();
    let n = hs.len();
    for level in 1..n {
        for i in 0..n - level {
            estimates[i] = (hs[i + level] * estimates[i] - hs[i] * estimates[i + 1])
                / (hs[i + level] - hs[i]);
        }
    }

    Ok(AbelEstimate {
        value: estimates[0],
        points,
        terms_per_point: n_terms,
    })
}

/// First `n` terms of `u` in floating point, by running the denominator
/// recurrence directly in f64 (the canonical form has den(0) = 1).
fn series_f64(u: &GfSeq, n: usize) -> Vec<f64> {
    let num: Vec<f64> = u.gf().num().coeffs().iter().map(rat_f64).collect();
    let den: Vec<f64> = u.gf().den().coeffs().iter().map(rat_f64).collect();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.get(k).copied().unwrap_or(0.0);
        for i in 1..den.len().min(k + 1) {
            acc -= den[i] * out[k - i];
        }
        out.push(acc / den[0]);
    }
    out
}

/// Nearest float to an exact rational, for comparing against estimates.
pub fn rat_f64(q: &Rat) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Accelerated sum of an (alternating-type) series from its raw terms:
/// take partial sums, then repeatedly average adjacent entries — each
/// pass is exact on the limit and roughly halves the alternating error —
/// and read off the deepest value.  Half the rows are averaged away.
pub fn pairwise_average_sum(terms: &[f64]) -> f64 {
    assert!(!terms.is_empty());
    let mut row: Vec<f64> = terms
        .iter()
        .scan(0.0, |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    let levels = row.len() / 2;
    for _ in 0..levels {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
    }
    *row.last().unwrap()
}

/// Exact terms of the transform of the harmonic sequence `(1/(k+1))` by
/// the index-multiplicative factor `e_0 - e_1`, straight from the
/// convolution definition.  Comes out as the alternating harmonic series:
/// `1, -1/2, 1/3, -1/4, ...`
pub fn harmonic_demo_terms(n: usize) -> Vec<Rat> {
    let factor = FiniteSeq::from_ints(&[1, -1]);
    (0..n)
        .map(|k| {
            let mut acc = Rat::zero();
            for (j, c) in factor.coeffs().iter().enumerate() {
                if (k + 1) % (j + 1) == 0 {
                    let i = (k + 1) / (j + 1) - 1;
                    acc += c / Rat::from_integer((i + 1).into());
                }
            }
            acc
        })
        .collect()
}

/// Accelerated numeric sum of the harmonic demonstration transform;
/// converges to ln 2 to machine precision.
pub fn harmonic_demo() -> f64 {
    let terms: Vec<f64> = harmonic_demo_terms(80).iter().map(rat_f64).collect();
    pairwise_average_sum(&terms)
}
