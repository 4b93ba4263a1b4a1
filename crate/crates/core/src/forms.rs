//! Evaluates both sides of the weighted Hardy, dissipativity, Yosida-form
//! and dispersivity inequalities on concrete radial profiles, and scans
//! families for the violations that exhibit sharpness of the constants.
//!
//! Radial reductions used throughout, with σ = σ_{N-1} the unit-sphere
//! area: ∫_{R^N} g(|x|) dx = σ ∫_0^∞ g(r) r^{N-1} dr and, for radial u,
//! |∇u| = |u'| and Δu = u'' + (N-1) u'/r.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::Params;
use crate::radial::{integrate_profile, QuadOptions, QuadratureResult, RadialProfile};
use crate::special::unit_sphere_area;

/// Profile values below this are treated as zero inside fractional-power
/// integrands to avoid 0 * inf at support edges.
const VALUE_FLOOR: f64 = 1e-250;

/// Left and right side of one inequality on one profile.
///
/// The orientation of `gap` is documented per operation; `ratio` is filled
/// only by the Hardy evaluator (rhs/lhs).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormEvaluation {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    pub quadrature_error: f64,
    pub profile_descriptor: String,
}

/// One point of a 1-D violation scan.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ScanSample {
    pub parameter: f64,
    pub value: f64,
}

/// Result of a violation search. Failure to find one is reported, never
/// asserted as nonexistence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationScan {
    pub samples: Vec<ScanSample>,
    pub found: Option<ScanSample>,
}

struct Ctx<'a> {
    sigma: f64,
    nm1: f64,
    opts: &'a QuadOptions,
}

impl<'a> Ctx<'a> {
    fn new(params: &Params, opts: &'a QuadOptions) -> Self {
        Ctx {
            sigma: unit_sphere_area(params.n),
            nm1: (params.n - 1) as f64,
            opts,
        }
    }

    /// σ ∫ g(r) r^{N-1} dr over the profile's domain.
    fn integral(&self, u: &RadialProfile, g: impl Fn(f64) -> f64) -> Result<QuadratureResult> {
        let nm1 = self.nm1;
        let mut res = integrate_profile(|r| g(r) * r.powf(nm1), u, self.opts)?;
        res.value *= self.sigma;
        res.abs_error_estimate *= self.sigma;
        Ok(res)
    }
}

/// The four integrals of the dissipativity estimate for a radial profile:
/// I_w^2 = ∫ |u'|^2 u^{p-2} r^w dx and J_w^2 = ∫ u^p r^{w-2} dx, w ∈ {0, α},
/// taken on the positive part when `positive_part` is set.
struct DissipativityIntegrals {
    i0_sq: f64,
    ia_sq: f64,
    j0_sq: f64,
    ja_sq: f64,
    quad_err: f64,
}

fn dissipativity_integrals(
    u: &RadialProfile,
    params: &Params,
    ctx: &Ctx,
    positive_part: bool,
) -> Result<DissipativityIntegrals> {
    let p = params.p;
    let alpha = params.alpha;
    let val = move |r: f64, u: &RadialProfile| {
        let v = u.value(r);
        if positive_part {
            v.max(0.0)
        } else {
            v
        }
    };
    let grad_term = move |r: f64, w: f64, u: &RadialProfile| {
        let v = val(r, u);
        if v <= VALUE_FLOOR {
            return 0.0;
        }
        // (u' v^{(p-2)/2})^2 keeps intermediates in range for steep powers.
        let g = u.d1(r) * v.powf(0.5 * (p - 2.0));
        g * g * r.powf(w)
    };
    let pot_term = move |r: f64, w: f64, u: &RadialProfile| {
        let v = val(r, u);
        if v <= VALUE_FLOOR {
            return 0.0;
        }
        v.powf(p) * r.powf(w - 2.0)
    };
    let i0 = ctx.integral(u, |r| grad_term(r, 0.0, u))?;
    let ia = ctx.integral(u, |r| grad_term(r, alpha, u))?;
    let j0 = ctx.integral(u, |r| pot_term(r, 0.0, u))?;
    let ja = ctx.integral(u, |r| pot_term(r, alpha, u))?;
    Ok(DissipativityIntegrals {
        i0_sq: i0.value,
        ia_sq: ia.value,
        j0_sq: j0.value,
        ja_sq: ja.value,
        quad_err: i0.abs_error_estimate
            + ia.abs_error_estimate
            + j0.abs_error_estimate
            + ja.abs_error_estimate,
    })
}

fn assemble_dissipativity(ints: &DissipativityIntegrals, params: &Params) -> f64 {
    let p = params.p;
    -(p - 1.0) * (ints.i0_sq + ints.ia_sq)
        + params.c * ints.j0_sq
        + params.alpha * ints.ia_sq.max(0.0).sqrt() * ints.ja_sq.max(0.0).sqrt()
}

fn dissipativity_error_scale(params: &Params) -> f64 {
    (params.p - 1.0)
        .max(params.c.abs())
        .max(params.alpha)
        .max(1.0)
}

/// Weighted Hardy quotient.
///
/// lhs = ∫ |u|^p |x|^{α-2} dx, rhs = ∫ |∇u|^2 |u|^{p-2} |x|^α dx,
/// gap = rhs − lhs, ratio = rhs/lhs; the Hardy inequality asserts
/// ratio ≥ γ_α.
pub fn hardy_ratio(
    u: &RadialProfile,
    params: &Params,
    opts: &QuadOptions,
) -> Result<FormEvaluation> {
    params.validate()?;
    let ctx = Ctx::new(params, opts);
    let p = params.p;
    let alpha = params.alpha;
    let lhs = ctx.integral(u, |r| {
        let v = u.value(r).abs();
        if v <= VALUE_FLOOR {
            0.0
        } else {
            v.powf(p) * r.powf(alpha - 2.0)
        }
    })?;
    let rhs = ctx.integral(u, |r| {
        let v = u.value(r).abs();
        if v <= VALUE_FLOOR {
            return 0.0;
        }
        let g = u.d1(r) * v.powf(0.5 * (p - 2.0));
        g * g * r.powf(alpha)
    })?;
    if lhs.value <= 0.0 {
        return Err(Error::DegenerateProfile(format!(
            "Hardy quotient undefined: vanishing weighted mass for {}",
            u.descriptor()
        )));
    }
    Ok(FormEvaluation {
        lhs: lhs.value,
        rhs: rhs.value,
        gap: rhs.value - lhs.value,
        ratio: Some(rhs.value / lhs.value),
        quadrature_error: lhs.abs_error_estimate + rhs.abs_error_estimate,
        profile_descriptor: u.descriptor(),
    })
}

/// The near-optimizer family for the Hardy constant:
/// u_ε = r^{-(N+α-2)/p + ε} times a fixed smooth cutoff (plateau to r = 1,
/// bump taper over eight log units; a wide taper keeps its gradient
/// contribution small against the 1/(εp) bulk of the quotient).
pub fn hardy_optimizer_profile(params: &Params, eps: f64) -> RadialProfile {
    let s_star = (params.n as f64 + params.alpha - 2.0) / params.p;
    RadialProfile::LogCutoffPower {
        s: -s_star + eps,
        r0: 1.0,
        log_width: 8.0,
    }
}

/// Evaluates the Hardy quotient along u_ε for each ε in a decreasing
/// positive sequence. Ratios decrease towards γ_α.
///
/// The integrand near the origin behaves like r^{εp-1}, so the truncation
/// radius is lowered to 1e-16 to keep the truncated mass negligible.
pub fn hardy_infimum_search(
    params: &Params,
    eps_sequence: &[f64],
    opts: &QuadOptions,
) -> Result<Vec<FormEvaluation>> {
    params.validate()?;
    if eps_sequence.is_empty() {
        return Err(Error::InvalidParams("empty epsilon sequence".into()));
    }
    for pair in eps_sequence.windows(2) {
        if pair[1] >= pair[0] {
            return Err(Error::InvalidParams(
                "epsilon sequence must be strictly decreasing".into(),
            ));
        }
    }
    if *eps_sequence.last().unwrap() <= 0.0 {
        return Err(Error::InvalidParams("epsilons must be positive".into()));
    }
    // The truncation radius trades the lost near-origin mass (a fraction
    // r_min^{eps p}) against f64 range: intermediates scale like
    // r^{-(s* p + 2)}, so cap the decade count by an exponent budget.
    let s_star = (params.n as f64 + params.alpha - 2.0) / params.p;
    let decades = (280.0 / (s_star * params.p + 2.0)).clamp(12.0, 56.0);
    let search_opts = QuadOptions {
        r_min: opts.r_min.min(10f64.powf(-decades)),
        ..*opts
    };
    eps_sequence
        .iter()
        .map(|&eps| hardy_ratio(&hardy_optimizer_profile(params, eps), params, &search_opts))
        .collect()
}

/// Dissipativity form for L + c/|x|² on a nonnegative profile:
///
/// lhs = −(p−1)(I_0² + I_α²) + c J_0² + α I_α J_α,
///
/// the Hölder upper bound for Re⟨(L + c/|x|²)u, u|u|^{p-2}⟩.
/// Orientation: rhs = 0 and gap = −lhs, so gap ≥ 0 means dissipative;
/// expected whenever c ≤ (p−1)γ_0 and α ≤ (N−2)(p−1).
pub fn dissipativity_form(
    u: &RadialProfile,
    params: &Params,
    opts: &QuadOptions,
) -> Result<FormEvaluation> {
    params.validate()?;
    if !u.is_nonnegative() {
        return Err(Error::InvalidParams(format!(
            "dissipativity form needs a nonnegative profile, got {}",
            u.descriptor()
        )));
    }
    let ctx = Ctx::new(params, opts);
    let ints = dissipativity_integrals(u, params, &ctx, false)?;
    let lhs = assemble_dissipativity(&ints, params);
    Ok(FormEvaluation {
        lhs,
        rhs: 0.0,
        gap: -lhs,
        ratio: None,
        quadrature_error: ints.quad_err * dissipativity_error_scale(params),
        profile_descriptor: u.descriptor(),
    })
}

/// Scan of the coupling pairing −(p−1) I_0² + c J_0² over the family
/// u_s = r^s e^{-r}, s ∈ (-(N−2)/p, 0).
///
/// This is the part of the dissipativity estimate controlled by the
/// hypothesis c ≤ (p−1)γ_0; optimality of γ_0 forces a positive value for
/// some s once c exceeds that threshold. (The full four-term form cannot
/// go positive at α = 0, where the elliptic coefficient 1 + |x|^α doubles
/// the gradient term.)
pub fn dissipativity_violation_scan(
    params: &Params,
    n_samples: usize,
    opts: &QuadOptions,
) -> Result<ViolationScan> {
    params.validate()?;
    let n_samples = n_samples.max(8);
    // Stay away from the integrability edge s_min, where the truncated
    // near-origin mass would dominate, and lower the truncation radius.
    let scan_opts = QuadOptions {
        r_min: opts.r_min.min(1e-12),
        ..*opts
    };
    let ctx = Ctx::new(params, &scan_opts);
    let p = params.p;
    let s_min = -(params.n as f64 - 2.0) / p;
    let lo = 0.8 * s_min;
    let hi = -0.02;
    let mut samples = Vec::with_capacity(n_samples);
    let mut found: Option<ScanSample> = None;
    for i in 0..n_samples {
        let s = lo + (hi - lo) * i as f64 / (n_samples - 1) as f64;
        let u = RadialProfile::power_exp(s, 1.0);
        let grad = ctx.integral(&u, |r| {
            let v = u.value(r);
            if v <= VALUE_FLOOR {
                return 0.0;
            }
            let g = u.d1(r) * v.powf(0.5 * (p - 2.0));
            g * g
        })?;
        let pot = ctx.integral(&u, |r| {
            let v = u.value(r);
            if v <= VALUE_FLOOR {
                0.0
            } else {
                v.powf(p) * r.powf(-2.0)
            }
        })?;
        let value = -(p - 1.0) * grad.value + params.c * pot.value;
        let sample = ScanSample {
            parameter: s,
            value,
        };
        samples.push(sample);
        let better = match found {
            Some(best) => value > best.value,
            None => value > 0.0,
        };
        if better {
            found = Some(sample);
        }
    }
    Ok(ViolationScan { samples, found })
}

/// Dissipativity form for the confined operator L − η|x|^β + c/|x|².
///
/// Branch β > α−2 (needs α ≥ 2, η > 0): lhs is the dissipativity form
/// minus η ∫ u^p |x|^β dx, rhs = M ‖u‖_p^p with M the quasi-dissipativity
/// bound at ε = p−1, gap = rhs − lhs ≥ 0 expected.
///
/// Branch β = α−2: lhs adds −η J_α², rhs = 0, gap = −lhs; lhs ≤ 0 expected
/// when η ≥ η*, α ≤ (N−2)(p−1) and c ≤ (p−1)γ_0.
pub fn tilde_dissipativity_form(
    u: &RadialProfile,
    params: &Params,
    opts: &QuadOptions,
) -> Result<FormEvaluation> {
    params.validate()?;
    let (eta, beta) = match (params.eta, params.beta) {
        (Some(e), Some(b)) => (e, b),
        _ => {
            return Err(Error::TildeBranchOnly(
                "tilde dissipativity form requires eta and beta".into(),
            ))
        }
    };
    if !u.is_nonnegative() {
        return Err(Error::InvalidParams(format!(
            "tilde dissipativity form needs a nonnegative profile, got {}",
            u.descriptor()
        )));
    }
    let ctx = Ctx::new(params, opts);
    let ints = dissipativity_integrals(u, params, &ctx, false)?;
    let base = assemble_dissipativity(&ints, params);
    let p = params.p;

    if beta == params.alpha - 2.0 {
        let lhs = base - eta * ints.ja_sq;
        return Ok(FormEvaluation {
            lhs,
            rhs: 0.0,
            gap: -lhs,
            ratio: None,
            quadrature_error: ints.quad_err * dissipativity_error_scale(params).max(eta.abs()),
            profile_descriptor: u.descriptor(),
        });
    }
    if beta < params.alpha - 2.0 {
        return Err(Error::InvalidParams(format!(
            "confining exponent must satisfy beta >= alpha - 2, got beta={beta}, alpha={}",
            params.alpha
        )));
    }

    let confine = ctx.integral(u, |r| {
        let v = u.value(r);
        if v <= VALUE_FLOOR {
            0.0
        } else {
            v.powf(p) * r.powf(beta)
        }
    })?;
    let norm_p = ctx.integral(u, |r| {
        let v = u.value(r);
        if v <= VALUE_FLOOR {
            0.0
        } else {
            v.powf(p)
        }
    })?;
    let m_bound = params.quasi_diss_bound_m(p - 1.0)?;
    let lhs = base - eta * confine.value;
    let rhs = m_bound * norm_p.value;
    Ok(FormEvaluation {
        lhs,
        rhs,
        gap: rhs - lhs,
        ratio: None,
        quadrature_error: (ints.quad_err + confine.abs_error_estimate + norm_p.abs_error_estimate)
            * dissipativity_error_scale(params)
                .max(eta.abs())
                .max(m_bound.abs()),
        profile_descriptor: u.descriptor(),
    })
}

/// Yosida-form inequality with V_ε = 1/(|x|² + ε).
///
/// lhs = Re⟨−Lu, |V_ε u|^{p-2} V_ε u⟩ by direct quadrature of
/// −(1+r^α)(u'' + (N−1)u'/r) V_ε^{p-1} u^{p-1} (independent of the
/// integration-by-parts route that proves the bound);
/// rhs = β_0 ∫ V_ε^p u^p dx + β_α ∫ V_ε^p u^p |x|^α dx.
/// Orientation: gap = lhs − rhs, expected ≥ 0 when α ≤ (N−2)(p−1).
pub fn yosida_form_gap(
    u: &RadialProfile,
    params: &Params,
    epsilon: f64,
    opts: &QuadOptions,
) -> Result<FormEvaluation> {
    params.validate()?;
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParams(format!(
            "Yosida regularisation needs epsilon > 0, got {epsilon}"
        )));
    }
    if !u.is_nonnegative() {
        return Err(Error::InvalidParams(format!(
            "Yosida form needs a nonnegative profile, got {}",
            u.descriptor()
        )));
    }
    yosida_eval(u, params, epsilon, params.beta_zero(), opts)
}

fn yosida_eval(
    u: &RadialProfile,
    params: &Params,
    epsilon: f64,
    beta_zero_coef: f64,
    opts: &QuadOptions,
) -> Result<FormEvaluation> {
    let ctx = Ctx::new(params, opts);
    let p = params.p;
    let alpha = params.alpha;
    let nm1 = (params.n - 1) as f64;
    let v_eps = move |r: f64| 1.0 / (r * r + epsilon);

    let lhs = ctx.integral(u, |r| {
        let v = u.value(r);
        if v <= VALUE_FLOOR {
            return 0.0;
        }
        let lap = u.d2(r) + nm1 * u.d1(r) / r;
        -(1.0 + r.powf(alpha)) * lap * v_eps(r).powf(p - 1.0) * v.powf(p - 1.0)
    })?;
    let s0 = ctx.integral(u, |r| {
        let v = u.value(r);
        if v <= VALUE_FLOOR {
            0.0
        } else {
            v_eps(r).powf(p) * v.powf(p)
        }
    })?;
    let sa = ctx.integral(u, |r| {
        let v = u.value(r);
        if v <= VALUE_FLOOR {
            0.0
        } else {
            v_eps(r).powf(p) * v.powf(p) * r.powf(alpha)
        }
    })?;
    let beta_alpha = params.beta_alpha();
    let rhs = beta_zero_coef * s0.value + beta_alpha * sa.value;
    Ok(FormEvaluation {
        lhs: lhs.value,
        rhs,
        gap: lhs.value - rhs,
        ratio: None,
        quadrature_error: lhs.abs_error_estimate
            + beta_zero_coef.abs() * s0.abs_error_estimate
            + beta_alpha.abs() * sa.abs_error_estimate,
        profile_descriptor: u.descriptor(),
    })
}

/// One point of the Yosida coefficient scan.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct YosidaScanSample {
    pub delta: f64,
    pub epsilon: f64,
    pub gap: f64,
}

/// Searches for a profile and ε making the Yosida gap negative after the
/// β_0 coefficient is raised by `bump`, scanning the family
/// u = r^β e^{-r/p} with β = (δ + 2p − N)/p.
///
/// Sharpness of β_0 guarantees such a violation exists for any bump > 0;
/// the scan reports where it found one.
pub fn yosida_coefficient_scan(
    params: &Params,
    bump: f64,
    opts: &QuadOptions,
) -> Result<(Vec<YosidaScanSample>, Option<YosidaScanSample>)> {
    params.validate()?;
    let raised = params.beta_zero() + bump;
    let mut samples = Vec::new();
    let mut found = None;
    for &delta in &[1.0, 0.5, 0.25, 0.1] {
        let beta = (delta + 2.0 * params.p - params.n as f64) / params.p;
        let u = RadialProfile::power_exp_scaled(beta, params.p);
        for &epsilon in &[1e-2, 1e-3, 1e-4, 1e-5] {
            let eval = yosida_eval(&u, params, epsilon, raised, opts)?;
            let sample = YosidaScanSample {
                delta,
                epsilon,
                gap: eval.gap,
            };
            samples.push(sample);
            if eval.gap < 0.0 && found.is_none() {
                found = Some(sample);
            }
        }
    }
    Ok((samples, found))
}

/// Dispersivity form ⟨(L + c/|x|²)u, u_+^{p-1}⟩ via the positive-part
/// integrals: lhs = (1−p)(I_{0,+}² + I_{α,+}²) + c J_{0,+}² + α I_{α,+} J_{α,+}.
///
/// Orientation: rhs = 0, gap = −lhs; expected ≥ 0 when c ≤ (p−1)γ_0 and
/// α ≤ (N−2)(p−1). A profile with u_+ ≡ 0 yields the zero form (trivial
/// pass).
pub fn dispersivity_form(
    u: &RadialProfile,
    params: &Params,
    opts: &QuadOptions,
) -> Result<FormEvaluation> {
    params.validate()?;
    let ctx = Ctx::new(params, opts);
    let ints = dissipativity_integrals(u, params, &ctx, true)?;
    let lhs = assemble_dissipativity(&ints, params);
    let mut descriptor = u.descriptor();
    if ints.i0_sq == 0.0 && ints.j0_sq == 0.0 {
        descriptor.push_str(" [u_+ == 0: trivial]");
    }
    Ok(FormEvaluation {
        lhs,
        rhs: 0.0,
        gap: -lhs,
        ratio: None,
        quadrature_error: ints.quad_err * dissipativity_error_scale(params),
        profile_descriptor: descriptor,
    })
}

/// The fixed 100-profile corpus every corpus-wide check runs over:
/// 3 Gaussians, 33 power-exponentials r^s e^{-r}, 32 scaled families
/// r^b e^{-r/q}, and 32 smooth-cutoff powers.
pub fn standard_corpus() -> Vec<RadialProfile> {
    let mut corpus = Vec::with_capacity(100);
    for &a in &[0.5, 1.0, 2.0] {
        corpus.push(RadialProfile::gaussian(a));
    }
    for j in 0..33 {
        corpus.push(RadialProfile::power_exp(0.125 * j as f64, 1.0));
    }
    for &b in &[0.5, 1.0, 1.5, 2.0] {
        for &q in &[1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0] {
            corpus.push(RadialProfile::power_exp_scaled(b, q));
        }
    }
    for &s in &[0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5] {
        for &(r0, w) in &[(1.0, 4.0), (1.0, 9.0), (2.0, 8.0), (0.5, 4.5)] {
            corpus.push(RadialProfile::CutoffPower { s, r0, w });
        }
    }
    debug_assert_eq!(corpus.len(), 100);
    corpus
}
