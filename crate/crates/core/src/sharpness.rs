//! Optimality oracle for the Yosida-form constant: reproduces the
//! Gamma-function bound C ≤ −A(δ) − A(δ+n)·δ(δ+1)···(δ+n−1) along the test
//! family v = r^β e^{-r/p} and extrapolates δ → 0⁺, where the limit is β_0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::ln_gamma;

/// One evaluation of the sharpness bound at a fixed δ > 0.
///
/// `c_bound = first_term + second_term` with first_term = −A(δ) and
/// second_term = −A(δ+n) Γ(δ+n)/Γ(δ).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SharpnessEvaluation {
    pub delta: f64,
    pub beta_param: f64,
    pub alpha_n: u32,
    pub c_bound: f64,
    pub first_term: f64,
    pub second_term: f64,
}

/// A(x) = β(β+N−2) + ((1−N−2β)/p) x + x(x+1)/p², the coefficient polynomial
/// produced by applying the operator to v = r^β e^{-r/p}.
fn a_poly(beta: f64, n: f64, p: f64, x: f64) -> f64 {
    beta * (beta + n - 2.0) + (1.0 - n - 2.0 * beta) / p * x + x * (x + 1.0) / (p * p)
}

/// Rising product δ(δ+1)···(δ+n−1) = Γ(δ+n)/Γ(δ) via log-gamma differences;
/// stable down to δ = 1e-8 and beyond.
pub fn rising_product_ln_gamma(delta: f64, n: u32) -> f64 {
    if n == 0 {
        return 1.0;
    }
    (ln_gamma(delta + n as f64) - ln_gamma(delta)).exp()
}

/// The same product by direct multiplication; cross-check for small n.
pub fn rising_product_direct(delta: f64, n: u32) -> f64 {
    (0..n).map(|j| delta + j as f64).product()
}

/// Evaluate the bound at one δ.
///
/// With β = (δ+2p−N)/p the displayed estimate reads
/// C ≤ −A(δ) − A(δ+n)·(δ+n−1)···δ; the rising product realises
/// Γ(δ+n)/Γ(δ) and is computed through log-gamma differences.
pub fn c_bound_of_delta(n: u32, p: f64, alpha_n: u32, delta: f64) -> Result<SharpnessEvaluation> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("need N >= 3, got {n}")));
    }
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::InvalidParams(format!(
            "need 1 < p < infinity, got {p}"
        )));
    }
    if alpha_n < 1 {
        return Err(Error::InvalidParams(
            "the sharpness computation needs integer alpha >= 1".into(),
        ));
    }
    if !(delta > 0.0) {
        return Err(Error::InvalidParams(format!("need delta > 0, got {delta}")));
    }
    let nf = n as f64;
    let beta = (delta + 2.0 * p - nf) / p;
    let first_term = -a_poly(beta, nf, p, delta);
    let product = rising_product_ln_gamma(delta, alpha_n);
    let second_term = -a_poly(beta, nf, p, delta + alpha_n as f64) * product;
    Ok(SharpnessEvaluation {
        delta,
        beta_param: beta,
        alpha_n,
        c_bound: first_term + second_term,
        first_term,
        second_term,
    })
}

/// δ → 0⁺ limit of the bound along δ = 10^{-k}, k = 2..8, by Richardson
/// extrapolation; equals β_0 = N(p−1)(N−2p)/p².
pub fn c_limit(n: u32, p: f64, alpha_n: u32) -> Result<f64> {
    let deltas: Vec<f64> = (2..=8).map(|k| 10f64.powi(-k)).collect();
    let values: Vec<f64> = deltas
        .iter()
        .map(|&d| c_bound_of_delta(n, p, alpha_n, d).map(|e| e.c_bound))
        .collect::<Result<_>>()?;
    richardson_limit(&values, 10.0)
}

/// Neville-style tableau for f(h_k) with h_{k+1} = h_k / ratio, assuming an
/// expansion in integer powers of h. Convergence is declared when the last
/// two diagonal entries agree to 1e-9 relative.
fn richardson_limit(values: &[f64], ratio: f64) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::ExtrapolationFailure(
            "need at least two samples".into(),
        ));
    }
    let mut tableau = values.to_vec();
    let mut diag = vec![tableau[0]];
    for level in 1..values.len() {
        let factor = ratio.powi(level as i32);
        for i in 0..(values.len() - level) {
            tableau[i] = (factor * tableau[i + 1] - tableau[i]) / (factor - 1.0);
        }
        diag.push(tableau[0]);
    }
    let last = diag[diag.len() - 1];
    let prev = diag[diag.len() - 2];
    if (last - prev).abs() > 1e-9 * last.abs().max(1.0) {
        return Err(Error::ExtrapolationFailure(format!(
            "tableau diagonal still moving: {prev} -> {last}"
        )));
    }
    Ok(last)
}
