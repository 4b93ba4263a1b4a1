//! Special-function kernels: log-gamma and the unit-sphere surface measure.

use std::f64::consts::PI;

/// Lanczos coefficients, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.9999999999998099,
    676.5203681218851,
    -1259.1392167224028,
    771.3234287776531,
    -176.6150291621406,
    12.507343278686905,
    -0.13857109526572012,
    9.984369578019572e-6,
    1.5056327351493116e-7,
];

/// Natural log of the Gamma function for x > 0.
///
/// Lanczos approximation; for x < 0.5 the recurrence
/// ln Γ(x) = ln Γ(x+1) − ln x keeps full accuracy down to tiny arguments.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires a positive argument, got {x}");
    if x < 0.5 {
        return ln_gamma(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Γ(x) for x > 0.
pub fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}

/// Surface measure of the unit sphere S^{N-1}: σ = 2 π^{N/2} / Γ(N/2).
pub fn unit_sphere_area(n: u32) -> f64 {
    let half = n as f64 / 2.0;
    (2.0_f64.ln() + half * PI.ln() - ln_gamma(half)).exp()
}
