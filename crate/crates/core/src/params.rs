//! Parameter tuple and every closed-form constant and scalar threshold of
//! the theory.
//!
//! All quantities are pure functions of [`Params`]; the dual exponent is
//! always derived as p' = p/(p-1) and never supplied.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Ratio;

/// The parameter tuple (N, p, α, c) with the optional confining pair (η, β)
/// for the operator (1+|x|^α)Δ − η|x|^β + c/|x|².
///
/// Invariants: N ≥ 3, 1 < p < ∞, α ≥ 0, and η present only together with β.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(rename = "N")]
    pub n: u32,
    pub p: f64,
    pub alpha: f64,
    pub c: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
}

impl Params {
    pub fn new(n: u32, p: f64, alpha: f64, c: f64) -> Result<Self> {
        let params = Params {
            n,
            p,
            alpha,
            c,
            eta: None,
            beta: None,
        };
        params.validate()?;
        Ok(params)
    }

    /// Same tuple with the confining term −η|x|^β attached.
    pub fn with_confinement(mut self, eta: f64, beta: f64) -> Result<Self> {
        self.eta = Some(eta);
        self.beta = Some(beta);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidParams(format!(
                "N must satisfy N >= 3, got {}",
                self.n
            )));
        }
        if !(self.p > 1.0) || !self.p.is_finite() {
            return Err(Error::InvalidParams(format!(
                "p must satisfy 1 < p < infinity, got {}",
                self.p
            )));
        }
        if !(self.alpha >= 0.0) || !self.alpha.is_finite() {
            return Err(Error::InvalidParams(format!(
                "alpha must satisfy alpha >= 0, got {}",
                self.alpha
            )));
        }
        if !self.c.is_finite() {
            return Err(Error::InvalidParams("c must be finite".into()));
        }
        if self.eta.is_some() && self.beta.is_none() {
            return Err(Error::InvalidParams(
                "eta given without beta: the confining term needs both".into(),
            ));
        }
        for (name, v) in [("eta", self.eta), ("beta", self.beta)] {
            if let Some(v) = v {
                if !v.is_finite() {
                    return Err(Error::InvalidParams(format!("{name} must be finite")));
                }
            }
        }
        Ok(())
    }

    pub fn has_confinement(&self) -> bool {
        self.eta.is_some()
    }

    fn nf(&self) -> f64 {
        self.n as f64
    }

    /// Weighted Hardy constant γ_α = ((N+α−2)/p)².
    pub fn gamma_alpha(&self) -> f64 {
        let g = (self.nf() + self.alpha - 2.0) / self.p;
        g * g
    }

    /// γ_0 = ((N−2)/p)², the unweighted Hardy constant.
    pub fn gamma_zero(&self) -> f64 {
        let g = (self.nf() - 2.0) / self.p;
        g * g
    }

    /// β_0 = N(p−1)(N−2p)/p²; positive iff N > 2p.
    pub fn beta_zero(&self) -> f64 {
        let (n, p) = (self.nf(), self.p);
        n * (p - 1.0) * (n - 2.0 * p) / (p * p)
    }

    /// β_α = (Np−N−α)(N+α−2p)/p².
    pub fn beta_alpha(&self) -> f64 {
        let (n, p, a) = (self.nf(), self.p, self.alpha);
        (n * p - n - a) * (n + a - 2.0 * p) / (p * p)
    }

    /// δ_α = (p−1)(4α−4−2Np+4N)/p²; zero exactly at α = 1 + N(p−2)/2.
    pub fn delta_alpha(&self) -> f64 {
        let (n, p, a) = (self.nf(), self.p, self.alpha);
        (p - 1.0) * (4.0 * a - 4.0 - 2.0 * n * p + 4.0 * n) / (p * p)
    }

    /// k = min(β_0, (p−1)γ_0), the admissible coupling bound of the
    /// contraction theorems.
    pub fn k_min(&self) -> f64 {
        self.beta_zero().min((self.p - 1.0) * self.gamma_zero())
    }

    /// The Yosida-form split constants (k_0, k_1) and μ = min(k_0, k_0+k_1).
    ///
    /// k_0 + k_1 = β_α identically; the sum is asserted here to 1e-12
    /// relative and exactly (rational arithmetic) in [`exact`].
    pub fn k0_k1_mu(&self) -> (f64, f64, f64) {
        let (n, p, a) = (self.nf(), self.p, self.alpha);
        let k0 = (n + a - 2.0) / p * ((p - 1.0) / p * (n + a - 2.0) - a);
        let k1 =
            4.0 * a * (p - 1.0) / (p * p) - (p - 1.0) * (4.0 + 2.0 * n * p - 4.0 * n) / (p * p);
        let beta_alpha = self.beta_alpha();
        assert!(
            (k0 + k1 - beta_alpha).abs() <= 1e-12 * beta_alpha.abs().max(1.0),
            "k0+k1 = {} drifted from beta_alpha = {}",
            k0 + k1,
            beta_alpha
        );
        (k0, k1, k0.min(k0 + k1))
    }

    /// Threshold η* in the admissibility condition η ≥ η* for the
    /// β = α−2 confining branch: η* = α(N+α−2)/p − (N+α−2)²/(p p').
    pub fn eta_threshold(&self) -> f64 {
        let (n, p, a) = (self.nf(), self.p, self.alpha);
        let m = n + a - 2.0;
        a * m / p - m * m * (p - 1.0) / (p * p)
    }

    /// Shift m = min over r ∈ (0,∞) of K r^{α−2} + η r^β with
    /// K = ((N+α−2)/p) ((p−1)(N−2)−α)/p.
    ///
    /// Only defined on the confined branch α > 2, β > α−2, η > 0; always
    /// ≤ 0, and = 0 exactly when K ≥ 0.
    pub fn m_shift(&self) -> Result<f64> {
        let (eta, beta) = self.require_confinement("m_shift")?;
        let a = self.alpha;
        if !(a > 2.0 && beta > a - 2.0 && eta > 0.0) {
            return Err(Error::TildeBranchOnly(format!(
                "m_shift needs alpha > 2, beta > alpha-2, eta > 0; got alpha={a}, beta={beta}, eta={eta}"
            )));
        }
        let (n, p) = (self.nf(), self.p);
        let k_coef = (n + a - 2.0) / p * ((p - 1.0) * (n - 2.0) - a) / p;
        if k_coef >= 0.0 {
            // Both terms are nonnegative and vanish as r -> 0.
            return Ok(0.0);
        }
        let g = |r: f64| k_coef * r.powf(a - 2.0) + eta * r.powf(beta);
        // Stationary point of g: (α−2) K r^{α−3} + η β r^{β−1} = 0.
        let r_star = (-(a - 2.0) * k_coef / (eta * beta)).powf(1.0 / (beta - a + 2.0));
        if r_star.is_finite() && r_star > 0.0 {
            Ok(g(r_star))
        } else {
            let (_, m) = golden_section_min_log(&g, 1e-8, 1e8);
            Ok(m)
        }
    }

    /// M(ε) = sup over r ≥ 0 of (α²/(4ε)) r^{α−2} − η r^β, the
    /// quasi-dissipativity constant; finite because β > α−2.
    pub fn quasi_diss_bound_m(&self, epsilon: f64) -> Result<f64> {
        let (eta, beta) = self.require_confinement("quasi_diss_bound_m")?;
        let a = self.alpha;
        if beta <= a - 2.0 {
            return Err(Error::Unbounded(format!(
                "sup of (alpha^2/4eps) r^(alpha-2) - eta r^beta needs beta > alpha-2; got beta={beta}, alpha={a}"
            )));
        }
        if !(a >= 2.0 && eta > 0.0) {
            return Err(Error::TildeBranchOnly(format!(
                "quasi_diss_bound_m needs alpha >= 2 and eta > 0; got alpha={a}, eta={eta}"
            )));
        }
        if !(epsilon > 0.0 && epsilon <= self.p - 1.0) {
            return Err(Error::InvalidParams(format!(
                "epsilon must lie in (0, p-1] = (0, {}], got {epsilon}",
                self.p - 1.0
            )));
        }
        let amp = a * a / (4.0 * epsilon);
        if a == 2.0 {
            // f(r) = amp − η r^β peaks at the origin.
            return Ok(amp);
        }
        let f = |r: f64| amp * r.powf(a - 2.0) - eta * r.powf(beta);
        let r_star = (amp * (a - 2.0) / (eta * beta)).powf(1.0 / (beta - a + 2.0));
        if r_star.is_finite() && r_star > 0.0 {
            Ok(f(r_star))
        } else {
            let (_, neg_max) = golden_section_min_log(&|r| -f(r), 1e-8, 1e8);
            Ok(-neg_max)
        }
    }

    /// Classical coupling thresholds: (c_0, Baras–Goldstein) =
    /// ((N−2)²/4 − 1, (N−2)²/4).
    pub fn classical_thresholds(&self) -> (f64, f64) {
        let q = (self.nf() - 2.0) * (self.nf() - 2.0) / 4.0;
        (q - 1.0, q)
    }

    fn require_confinement(&self, what: &str) -> Result<(f64, f64)> {
        match (self.eta, self.beta) {
            (Some(e), Some(b)) => Ok((e, b)),
            _ => Err(Error::TildeBranchOnly(format!(
                "{what} requires the confining pair (eta, beta)"
            ))),
        }
    }
}

/// Every scalar constant of the theory evaluated at one parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantSet {
    pub gamma_alpha: f64,
    pub gamma_zero: f64,
    pub beta_zero: f64,
    pub beta_alpha: f64,
    pub delta_alpha: f64,
    pub k: f64,
    pub k0: f64,
    pub k1: f64,
    pub mu: f64,
    pub c0: f64,
    pub baras_goldstein: f64,
}

impl ConstantSet {
    pub fn from_params(params: &Params) -> Self {
        let (k0, k1, mu) = params.k0_k1_mu();
        let (c0, bg) = params.classical_thresholds();
        ConstantSet {
            gamma_alpha: params.gamma_alpha(),
            gamma_zero: params.gamma_zero(),
            beta_zero: params.beta_zero(),
            beta_alpha: params.beta_alpha(),
            delta_alpha: params.delta_alpha(),
            k: params.k_min(),
            k0,
            k1,
            mu,
            c0,
            baras_goldstein: bg,
        }
    }
}

/// Golden-section minimum of f over [a, b] searched in log coordinates.
/// Fallback for exponent combinations without a usable stationary point.
fn golden_section_min_log(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let inv_phi = 0.618_033_988_749_894_9;
    let (mut lo, mut hi) = (a.ln(), b.ln());
    let g = |t: f64| f(t.exp());
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (g(x1), g(x2));
    for _ in 0..200 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2);
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    let t = 0.5 * (lo + hi);
    (t.exp(), g(t))
}

/// Exact rational evaluation of the constant identities for rational inputs.
pub mod exact {
    use super::Ratio;

    /// β_0 = N(p−1)(N−2p)/p².
    pub fn beta_zero(n: i128, p: Ratio) -> Ratio {
        let nn = Ratio::integer(n);
        let one = Ratio::integer(1);
        let two = Ratio::integer(2);
        nn * (p - one) * (nn - two * p) / (p * p)
    }

    /// β_α = (Np−N−α)(N+α−2p)/p².
    pub fn beta_alpha(n: i128, p: Ratio, alpha: Ratio) -> Ratio {
        let nn = Ratio::integer(n);
        let two = Ratio::integer(2);
        (nn * p - nn - alpha) * (nn + alpha - two * p) / (p * p)
    }

    /// k_0 = ((N+α−2)/p)(((p−1)/p)(N+α−2) − α).
    pub fn k0(n: i128, p: Ratio, alpha: Ratio) -> Ratio {
        let nn = Ratio::integer(n);
        let one = Ratio::integer(1);
        let two = Ratio::integer(2);
        let m = nn + alpha - two;
        (m / p) * ((p - one) / p * m - alpha)
    }

    /// k_1 = 4α(p−1)/p² − (p−1)(4+2Np−4N)/p².
    pub fn k1(n: i128, p: Ratio, alpha: Ratio) -> Ratio {
        let nn = Ratio::integer(n);
        let one = Ratio::integer(1);
        let four = Ratio::integer(4);
        let two = Ratio::integer(2);
        (four * alpha * (p - one) - (p - one) * (four + two * nn * p - four * nn)) / (p * p)
    }

    /// δ_α = (p−1)(4α−4−2Np+4N)/p².
    pub fn delta_alpha(n: i128, p: Ratio, alpha: Ratio) -> Ratio {
        let nn = Ratio::integer(n);
        let one = Ratio::integer(1);
        let four = Ratio::integer(4);
        let two = Ratio::integer(2);
        (p - one) * (four * alpha - four - two * nn * p + four * nn) / (p * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, p: f64, alpha: f64) -> Params {
        Params::new(n, p, alpha, 0.0).unwrap()
    }

    #[test]
    fn rejects_invalid_tuples() {
        assert!(Params::new(2, 2.0, 0.0, 0.0).is_err());
        assert!(Params::new(5, 1.0, 0.0, 0.0).is_err());
        assert!(Params::new(5, 2.0, -0.5, 0.0).is_err());
        assert!(Params {
            n: 5,
            p: 2.0,
            alpha: 0.0,
            c: 0.0,
            eta: Some(1.0),
            beta: None
        }
        .validate()
        .is_err());
    }

    #[test]
    fn gamma_alpha_values() {
        assert_eq!(params(5, 2.0, 0.0).gamma_alpha(), 2.25);
        assert_eq!(params(3, 2.0, 0.0).gamma_alpha(), 0.25);
        assert_eq!(params(3, 1.5, 0.5).gamma_alpha(), 1.0);
    }

    #[test]
    fn beta_zero_values() {
        assert_eq!(params(5, 2.0, 0.0).beta_zero(), 1.25);
        assert_eq!(params(4, 2.0, 0.0).beta_zero(), 0.0);
        assert_eq!(params(3, 2.0, 0.0).beta_zero(), -0.75);
    }

    #[test]
    fn beta_alpha_values() {
        assert_eq!(params(5, 2.0, 1.0).beta_alpha(), 2.0);
        // First factor vanishes at alpha = N(p-1).
        let p = params(5, 2.0, 5.0);
        assert!(p.beta_alpha().abs() < 1e-15);
        // Second factor vanishes at alpha = 2p - N when 2p > N.
        let p = params(3, 2.0, 1.0);
        assert!(p.beta_alpha().abs() < 1e-15);
    }

    #[test]
    fn delta_alpha_values() {
        assert_eq!(params(5, 2.0, 3.0).delta_alpha(), 2.0);
        // Zero of the linear form at alpha = 1 + N(p-2)/2.
        let p = params(6, 3.0, 4.0);
        assert!(p.delta_alpha().abs() < 1e-15);
        let p = params(4, 3.0, 1.0);
        assert!((p.delta_alpha() - (-16.0 / 9.0)).abs() < 1e-15);
    }

    #[test]
    fn k_min_values() {
        assert_eq!(params(5, 2.0, 0.0).k_min(), 1.25);
        assert_eq!(params(7, 2.0, 0.0).k_min(), 5.25);
        assert_eq!(params(3, 2.0, 0.0).k_min(), -0.75);
    }

    #[test]
    fn k0_k1_mu_values() {
        let (k0, k1, mu) = params(5, 2.0, 1.0).k0_k1_mu();
        assert!((k0 - 2.0).abs() < 1e-14);
        assert!(k1.abs() < 1e-14);
        assert!((mu - 2.0).abs() < 1e-14);

        let (k0, k1, mu) = params(6, 2.0, 2.0).k0_k1_mu();
        assert!((k0 - 3.0).abs() < 1e-14);
        assert!((k1 - 1.0).abs() < 1e-14);
        assert!((mu - 3.0).abs() < 1e-14);

        // k0 vanishes at alpha = (N-2)(p-1).
        let (k0, _, _) = params(6, 2.0, 4.0).k0_k1_mu();
        assert!(k0.abs() < 1e-14);
    }

    #[test]
    fn eta_threshold_values() {
        assert!((params(5, 2.0, 2.0).eta_threshold() - (-1.25)).abs() < 1e-14);
        assert!((params(4, 2.0, 4.0).eta_threshold() - 3.0).abs() < 1e-14);
        // At alpha = 0 the first term vanishes and the threshold is negative.
        let p = params(6, 1.5, 0.0);
        let expected = -(4.0_f64 * 4.0) * 0.5 / (1.5 * 1.5);
        assert!((p.eta_threshold() - expected).abs() < 1e-14);
        assert!(p.eta_threshold() < 0.0);
    }

    #[test]
    fn m_shift_values() {
        // K >= 0: infimum 0 at the origin.
        let p = params(6, 2.0, 3.0).with_confinement(1.0, 2.0).unwrap();
        assert_eq!(p.m_shift().unwrap(), 0.0);

        // Closed-form stationary point.
        let p = params(3, 2.0, 4.0).with_confinement(1.0, 3.0).unwrap();
        let m = p.m_shift().unwrap();
        assert!((m - (-7.8125)).abs() < 1e-12);
        // Cross-check against a 1-D log-grid search.
        let k_coef = (3.0 + 4.0 - 2.0) / 2.0 * ((2.0 - 1.0) * (3.0 - 2.0) - 4.0) / 2.0;
        let g = |r: f64| k_coef * r * r + r * r * r;
        let brute = (0..20_000)
            .map(|i| 1e-4 * f64::exp(i as f64 * 1e-3))
            .map(g)
            .fold(f64::INFINITY, f64::min);
        assert!((m - brute).abs() < 1e-4 * m.abs());

        // Large eta pushes the minimum toward zero from below.
        let m1 = params(3, 2.0, 4.0)
            .with_confinement(10.0, 3.0)
            .unwrap()
            .m_shift()
            .unwrap();
        let m2 = params(3, 2.0, 4.0)
            .with_confinement(100.0, 3.0)
            .unwrap()
            .m_shift()
            .unwrap();
        assert!(m1 < 0.0 && m2 < 0.0 && m2 > m1 && m1 > m);

        // Outside the tilde branch: rejected.
        assert!(params(5, 2.0, 1.0).m_shift().is_err());
        let p = params(5, 2.0, 4.0).with_confinement(1.0, 1.0).unwrap();
        assert!(p.m_shift().is_err());
    }

    #[test]
    fn quasi_diss_bound_values() {
        let p = params(5, 2.0, 2.0).with_confinement(1.0, 1.0).unwrap();
        assert_eq!(p.quasi_diss_bound_m(1.0).unwrap(), 1.0);

        let p = params(5, 2.0, 3.0).with_confinement(1.0, 2.0).unwrap();
        let m = p.quasi_diss_bound_m(1.0).unwrap();
        assert!((m - 81.0 / 64.0).abs() < 1e-13);
        // Grid-search cross-check of the supremum.
        let f = |r: f64| 9.0 / 4.0 * r - r * r;
        let brute = (0..200_000)
            .map(|i| i as f64 * 1e-4)
            .map(f)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((m - brute).abs() < 1e-6);

        // Monotone decrease in eta.
        let m10 = params(5, 2.0, 3.0)
            .with_confinement(10.0, 2.0)
            .unwrap()
            .quasi_diss_bound_m(1.0)
            .unwrap();
        assert!(m10 > 0.0 && m10 < m);

        // beta <= alpha - 2 is unbounded.
        let p = params(5, 2.0, 3.0).with_confinement(1.0, 0.5).unwrap();
        assert!(matches!(
            p.quasi_diss_bound_m(1.0),
            Err(Error::Unbounded(_))
        ));

        // epsilon out of (0, p-1] is rejected.
        let p = params(5, 2.0, 3.0).with_confinement(1.0, 2.0).unwrap();
        assert!(p.quasi_diss_bound_m(1.5).is_err());
        assert!(p.quasi_diss_bound_m(0.0).is_err());
    }

    #[test]
    fn classical_threshold_values() {
        assert_eq!(params(5, 2.0, 0.0).classical_thresholds(), (1.25, 2.25));
        assert_eq!(params(3, 2.0, 0.0).classical_thresholds(), (-0.75, 0.25));
        assert_eq!(params(4, 2.0, 0.0).classical_thresholds(), (0.0, 1.0));
    }

    #[test]
    fn constant_set_is_consistent() {
        let p = params(6, 2.0, 2.0);
        let cs = ConstantSet::from_params(&p);
        assert_eq!(cs.gamma_alpha, p.gamma_alpha());
        assert!((cs.k0 + cs.k1 - cs.beta_alpha).abs() < 1e-12);
        assert_eq!(cs.k, p.k_min());
        // gamma_alpha collapses to gamma_zero at alpha = 0.
        let p0 = params(6, 2.0, 0.0);
        let cs0 = ConstantSet::from_params(&p0);
        assert_eq!(cs0.gamma_alpha, cs0.gamma_zero);
    }

    #[test]
    fn exact_split_identity() {
        let p = Ratio::new(3, 2);
        let a = Ratio::new(5, 4);
        let lhs = exact::k0(7, p, a) + exact::k1(7, p, a);
        assert_eq!(lhs, exact::beta_alpha(7, p, a));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // k0 + k1 = beta_alpha exactly on rational tuples.
            #[test]
            fn split_identity_exact(n in 3i128..=16, pn in 3i128..=40, pd in 1i128..=12,
                                    an in 0i128..=40, ad in 1i128..=12) {
                prop_assume!(pn > pd); // p > 1
                let p = Ratio::new(pn, pd);
                let a = Ratio::new(an, ad);
                prop_assert_eq!(exact::k0(n, p, a) + exact::k1(n, p, a),
                                exact::beta_alpha(n, p, a));
            }

            // beta_zero > 0 iff N > 2p, exactly.
            #[test]
            fn beta_zero_sign(n in 3i128..=16, pn in 3i128..=40, pd in 1i128..=12) {
                prop_assume!(pn > pd);
                let p = Ratio::new(pn, pd);
                let positive = exact::beta_zero(n, p).is_positive();
                let n_gt_2p = Ratio::integer(n) > Ratio::integer(2) * p;
                prop_assert_eq!(positive, n_gt_2p);
            }

            // delta_alpha >= 0 iff alpha >= 1 + N(p-2)/2, exactly.
            #[test]
            fn delta_alpha_sign(n in 3i128..=16, pn in 3i128..=40, pd in 1i128..=12,
                                an in 0i128..=60, ad in 1i128..=12) {
                prop_assume!(pn > pd);
                let p = Ratio::new(pn, pd);
                let a = Ratio::new(an, ad);
                let nonneg = !exact::delta_alpha(n, p, a).is_negative();
                let threshold = Ratio::integer(1)
                    + Ratio::integer(n) * (p - Ratio::integer(2)) / Ratio::integer(2);
                prop_assert_eq!(nonneg, a >= threshold);
            }

            // beta_alpha > 0 whenever N > 2p and 0 <= alpha <= (N-2)(p-1).
            #[test]
            fn beta_alpha_positive_in_band(n in 3u32..=16, p in 1.05f64..4.0, t in 0.0f64..1.0) {
                prop_assume!((n as f64) > 2.0 * p);
                let alpha = t * (n as f64 - 2.0) * (p - 1.0);
                let params = Params::new(n, p, alpha, 0.0).unwrap();
                prop_assert!(params.beta_alpha() > 0.0);
            }

            // gamma_alpha is increasing in alpha and decreasing in p.
            #[test]
            fn gamma_alpha_monotone(n in 3u32..=16, p in 1.05f64..6.0,
                                    a in 0.0f64..8.0, da in 0.001f64..4.0, dp in 0.001f64..3.0) {
                let base = Params::new(n, p, a, 0.0).unwrap();
                let more_alpha = Params::new(n, p, a + da, 0.0).unwrap();
                let more_p = Params::new(n, p + dp, a, 0.0).unwrap();
                prop_assert!(more_alpha.gamma_alpha() > base.gamma_alpha());
                prop_assert!(more_p.gamma_alpha() < base.gamma_alpha());
            }

            // m_shift is never positive and vanishes exactly when K >= 0.
            #[test]
            fn m_shift_sign(n in 3u32..=10, p in 1.1f64..3.0, a in 2.1f64..6.0,
                            db in 0.1f64..3.0, eta in 0.1f64..10.0) {
                let beta = a - 2.0 + db;
                let params = Params::new(n, p, a, 0.0)
                    .unwrap()
                    .with_confinement(eta, beta)
                    .unwrap();
                let m = params.m_shift().unwrap();
                let k_coef = (p - 1.0) * (n as f64 - 2.0) - a;
                prop_assert!(m <= 0.0);
                if k_coef >= 0.0 {
                    prop_assert_eq!(m, 0.0);
                } else {
                    prop_assert!(m < 0.0);
                }
            }
        }
    }
}
