//! Maps a parameter tuple to the applicable generation theorem, the
//! semigroup properties it asserts, and a symbolic domain descriptor.
//!
//! The rule tables are evaluated in a fixed order and every inequality
//! tested is recorded in the hypothesis trace, so a report is reproducible
//! from the tuple alone. Comparisons are exact on the supplied floats: a
//! coupling exactly on a rule's bound is the closure case, never the open
//! interval.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::params::{ConstantSet, Params};

/// Which statement of the theory decides the tuple.
///
/// The `TH_2_*` tags name the unperturbed-operator results that the rule
/// tables consume as hypotheses (they never decide a perturbed tuple by
/// themselves, except for the negative case `TH_2_2_NEG`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremTag {
    #[serde(rename = "TH_2_1")]
    Th21,
    #[serde(rename = "TH_2_2_NEG")]
    Th22Neg,
    #[serde(rename = "TH_2_2_GEN")]
    Th22Gen,
    #[serde(rename = "TH_2_3")]
    Th23,
    #[serde(rename = "TH_3_MAIN_SMALL_ALPHA")]
    Th3MainSmallAlpha,
    #[serde(rename = "TH_3_MAIN_LARGE_ALPHA")]
    Th3MainLargeAlpha,
    #[serde(rename = "TH_3_BIS_SMALL_ALPHA")]
    Th3BisSmallAlpha,
    #[serde(rename = "TH_3_BIS_LARGE_ALPHA")]
    Th3BisLargeAlpha,
    #[serde(rename = "TH_TILDE_CONTRACTIVE")]
    ThTildeContractive,
    #[serde(rename = "TH_TILDE_BIS")]
    ThTildeBis,
    #[serde(rename = "BOUNDARY_CLOSURE")]
    BoundaryClosure,
    #[serde(rename = "NO_RESULT")]
    NoResult,
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremTag::Th21 => "TH_2_1",
            TheoremTag::Th22Neg => "TH_2_2_NEG",
            TheoremTag::Th22Gen => "TH_2_2_GEN",
            TheoremTag::Th23 => "TH_2_3",
            TheoremTag::Th3MainSmallAlpha => "TH_3_MAIN_SMALL_ALPHA",
            TheoremTag::Th3MainLargeAlpha => "TH_3_MAIN_LARGE_ALPHA",
            TheoremTag::Th3BisSmallAlpha => "TH_3_BIS_SMALL_ALPHA",
            TheoremTag::Th3BisLargeAlpha => "TH_3_BIS_LARGE_ALPHA",
            TheoremTag::ThTildeContractive => "TH_TILDE_CONTRACTIVE",
            TheoremTag::ThTildeBis => "TH_TILDE_BIS",
            TheoremTag::BoundaryClosure => "BOUNDARY_CLOSURE",
            TheoremTag::NoResult => "NO_RESULT",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SemigroupProperty {
    #[serde(rename = "contractive")]
    Contractive,
    #[serde(rename = "quasi-contractive")]
    QuasiContractive,
    #[serde(rename = "analytic")]
    Analytic,
    #[serde(rename = "positive")]
    Positive,
    #[serde(rename = "core_is_Cc_infinity")]
    CoreIsCcInfinity,
    #[serde(rename = "closure_generates")]
    ClosureGenerates,
}

/// Symbolic operator domain: one of the named weighted W^{2,p} domains,
/// optionally intersected with D(|x|^{-2}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainLabel {
    pub base: BaseDomain,
    pub with_inverse_square: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseDomain {
    DP,
    DMax,
    DHatP,
    DTildeP,
}

impl fmt::Display for DomainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            BaseDomain::DP => "D_p",
            BaseDomain::DMax => "D_max",
            BaseDomain::DHatP => "D_hat_p",
            BaseDomain::DTildeP => "D_tilde_p",
        };
        if self.with_inverse_square {
            write!(f, "{base} \u{2229} D(|x|^-2)")
        } else {
            f.write_str(base)
        }
    }
}

impl Serialize for DomainLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DomainLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let with_inverse_square = s.contains('\u{2229}');
        let base = if s.starts_with("D_tilde_p") {
            BaseDomain::DTildeP
        } else if s.starts_with("D_hat_p") {
            BaseDomain::DHatP
        } else if s.starts_with("D_max") {
            BaseDomain::DMax
        } else if s.starts_with("D_p") {
            BaseDomain::DP
        } else {
            return Err(serde::de::Error::custom(format!(
                "unknown domain label {s}"
            )));
        };
        Ok(DomainLabel {
            base,
            with_inverse_square,
        })
    }
}

/// One tested inequality. Entries marked `required` are hypotheses of the
/// decided statement; unmarked entries are branch selectors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub condition: String,
    pub holds: bool,
    pub required: bool,
}

/// Outcome of classifying one tuple.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub theorem_tag: TheoremTag,
    pub properties: Vec<SemigroupProperty>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain_label: Option<DomainLabel>,
    pub constants_used: ConstantSet,
    pub hypothesis_trace: Vec<HypothesisCheck>,
    pub statement: String,
}

struct Trace(Vec<HypothesisCheck>);

impl Trace {
    fn new() -> Self {
        Trace(Vec::new())
    }

    fn select(&mut self, condition: impl Into<String>, holds: bool) -> bool {
        self.0.push(HypothesisCheck {
            condition: condition.into(),
            holds,
            required: false,
        });
        holds
    }

    fn require(&mut self, condition: impl Into<String>, holds: bool) -> bool {
        self.0.push(HypothesisCheck {
            condition: condition.into(),
            holds,
            required: true,
        });
        holds
    }
}

use SemigroupProperty as Prop;

/// Classify the unconfined operator L + c/|x|^2 (no eta, beta).
pub fn classify_l0(params: &Params) -> Result<ClassificationReport> {
    params.validate()?;
    if params.has_confinement() {
        return Err(Error::InvalidParams(
            "classify_l0 takes a tuple without the confining pair; use classify_tilde".into(),
        ));
    }
    let constants = ConstantSet::from_params(params);
    let nf = params.n as f64;
    let (p, alpha, c) = (params.p, params.alpha, params.c);
    let k = constants.k;
    let beta_zero = constants.beta_zero;
    let mut tr = Trace::new();

    let report = |tag, properties, domain: Option<DomainLabel>, trace: Trace, statement: String| {
        ClassificationReport {
            theorem_tag: tag,
            properties,
            domain_label: domain,
            constants_used: constants,
            hypothesis_trace: trace.0,
            statement,
        }
    };

    if tr.select(format!("alpha <= 2 ({alpha} <= 2)"), alpha <= 2.0) {
        if tr.select(format!("N > 2p ({nf} > {})", 2.0 * p), nf > 2.0 * p) {
            // Contraction branch, small alpha.
            if tr.require(
                format!(
                    "alpha <= (N-2)(p-1) ({alpha} <= {})",
                    (nf - 2.0) * (p - 1.0)
                ),
                alpha <= (nf - 2.0) * (p - 1.0),
            ) {
                let domain = Some(DomainLabel {
                    base: BaseDomain::DP,
                    with_inverse_square: false,
                });
                if tr.select(format!("c < k ({c} < {k})"), c < k) {
                    return Ok(report(
                        TheoremTag::Th3MainSmallAlpha,
                        vec![Prop::Contractive, Prop::Positive, Prop::CoreIsCcInfinity],
                        domain,
                        tr,
                        format!(
                            "(1+|x|^{alpha})Delta + {c}/|x|^2 on D_p generates a contractive positive C0-semigroup on L^{p}(R^{}); C_c^infinity is a core.",
                            params.n
                        ),
                    ));
                }
                if tr.select(format!("c == k ({c} == {k})"), c == k) {
                    return Ok(report(
                        TheoremTag::BoundaryClosure,
                        vec![Prop::ClosureGenerates, Prop::Contractive, Prop::Positive],
                        domain,
                        tr,
                        format!(
                            "c equals k = {k}: the closure of ((1+|x|^{alpha})Delta + k/|x|^2, D_p) generates a contractive positive C0-semigroup (boundary case of TH_3_MAIN_SMALL_ALPHA)."
                        ),
                    ));
                }
            }
        } else {
            // 2p >= N: analytic branch, small alpha.
            tr.select(format!("2p >= N ({} >= {nf})", 2.0 * p), true);
            if tr.require(
                format!("2p - N <= alpha ({} <= {alpha})", 2.0 * p - nf),
                2.0 * p - nf <= alpha,
            ) & tr.require(
                format!(
                    "alpha <= (N-2)(p-1) ({alpha} <= {})",
                    (nf - 2.0) * (p - 1.0)
                ),
                alpha <= (nf - 2.0) * (p - 1.0),
            ) {
                let domain = Some(DomainLabel {
                    base: BaseDomain::DP,
                    with_inverse_square: true,
                });
                if tr.select(format!("c < beta_0 ({c} < {beta_zero})"), c < beta_zero) {
                    return Ok(report(
                        TheoremTag::Th3BisSmallAlpha,
                        vec![Prop::Contractive, Prop::Analytic],
                        domain,
                        tr,
                        format!(
                            "(1+|x|^{alpha})Delta + {c}/|x|^2 on D_p \u{2229} D(|x|^-2) generates a contractive analytic C0-semigroup on L^{p}(R^{}).",
                            params.n
                        ),
                    ));
                }
                if tr.select(format!("c == beta_0 ({c} == {beta_zero})"), c == beta_zero) {
                    return Ok(report(
                        TheoremTag::BoundaryClosure,
                        vec![Prop::ClosureGenerates, Prop::Contractive, Prop::Analytic],
                        domain,
                        tr,
                        format!(
                            "c equals beta_0 = {beta_zero}: the closure of ((1+|x|^{alpha})Delta + beta_0/|x|^2, D_p \u{2229} D(|x|^-2)) generates a contractive analytic C0-semigroup (boundary case of TH_3_BIS_SMALL_ALPHA)."
                        ),
                    ));
                }
            }
        }
    } else {
        // alpha > 2.
        let p_crit = nf / (nf - 2.0);
        if tr.select(format!("p <= N/(N-2) ({p} <= {p_crit})"), p <= p_crit) {
            return Ok(report(
                TheoremTag::Th22Neg,
                vec![],
                None,
                tr,
                format!(
                    "alpha > 2 with p <= N/(N-2) = {p_crit}: no realization of (1+|x|^{alpha})Delta in L^{p}(R^{}) generates a strongly continuous semigroup; no statement is available for the perturbed operator.",
                    params.n
                ),
            ));
        }
        if tr.select(format!("p < N/2 ({p} < {})", nf / 2.0), p < nf / 2.0) {
            if tr.require(
                format!("alpha < N(p-1)/p ({alpha} < {})", nf * (p - 1.0) / p),
                alpha < nf * (p - 1.0) / p,
            ) {
                let domain = Some(DomainLabel {
                    base: BaseDomain::DHatP,
                    with_inverse_square: false,
                });
                if tr.select(format!("c < k ({c} < {k})"), c < k) {
                    return Ok(report(
                        TheoremTag::Th3MainLargeAlpha,
                        vec![Prop::Contractive, Prop::Positive, Prop::CoreIsCcInfinity],
                        domain,
                        tr,
                        format!(
                            "(1+|x|^{alpha})Delta + {c}/|x|^2 on D_hat_p generates a contractive positive C0-semigroup on L^{p}(R^{}); C_c^infinity is a core.",
                            params.n
                        ),
                    ));
                }
                if tr.select(format!("c == k ({c} == {k})"), c == k) {
                    return Ok(report(
                        TheoremTag::BoundaryClosure,
                        vec![Prop::ClosureGenerates, Prop::Contractive, Prop::Positive],
                        domain,
                        tr,
                        format!(
                            "c equals k = {k}: the closure of ((1+|x|^{alpha})Delta + k/|x|^2, D_hat_p) generates a contractive positive C0-semigroup (boundary case of TH_3_MAIN_LARGE_ALPHA)."
                        ),
                    ));
                }
            }
        } else if tr.select(format!("2p >= N ({} >= {nf})", 2.0 * p), 2.0 * p >= nf)
            && tr.require(
                format!("2p - N <= alpha ({} <= {alpha})", 2.0 * p - nf),
                2.0 * p - nf <= alpha,
            ) & tr.require(
                format!("alpha < N(p-1)/p ({alpha} < {})", nf * (p - 1.0) / p),
                alpha < nf * (p - 1.0) / p,
            )
        {
            let domain = Some(DomainLabel {
                base: BaseDomain::DHatP,
                with_inverse_square: true,
            });
            if tr.select(format!("c < beta_0 ({c} < {beta_zero})"), c < beta_zero) {
                return Ok(report(
                        TheoremTag::Th3BisLargeAlpha,
                        vec![Prop::Contractive, Prop::Analytic],
                        domain,
                        tr,
                        format!(
                            "(1+|x|^{alpha})Delta + {c}/|x|^2 on D_hat_p \u{2229} D(|x|^-2) generates a contractive analytic C0-semigroup on L^{p}(R^{}).",
                            params.n
                        ),
                    ));
            }
            if tr.select(format!("c == beta_0 ({c} == {beta_zero})"), c == beta_zero) {
                return Ok(report(
                        TheoremTag::BoundaryClosure,
                        vec![Prop::ClosureGenerates, Prop::Contractive, Prop::Analytic],
                        domain,
                        tr,
                        format!(
                            "c equals beta_0 = {beta_zero}: the closure of ((1+|x|^{alpha})Delta + beta_0/|x|^2, D_hat_p \u{2229} D(|x|^-2)) generates a contractive analytic C0-semigroup (boundary case of TH_3_BIS_LARGE_ALPHA)."
                        ),
                    ));
            }
        }
    }
    Ok(report(
        TheoremTag::NoResult,
        vec![],
        None,
        tr,
        "No theorem in scope applies to this tuple; the failing hypotheses are listed in the trace. This does not assert that generation fails.".into(),
    ))
}

/// Classify the confined operator L - eta|x|^beta + c/|x|^2.
pub fn classify_tilde(params: &Params) -> Result<ClassificationReport> {
    params.validate()?;
    let (eta, beta) = match (params.eta, params.beta) {
        (Some(e), Some(b)) => (e, b),
        _ => {
            return Err(Error::InvalidParams(
                "classify_tilde needs the confining pair (eta, beta)".into(),
            ))
        }
    };
    let constants = ConstantSet::from_params(params);
    let nf = params.n as f64;
    let (p, alpha, c) = (params.p, params.alpha, params.c);
    let k = constants.k;
    let beta_zero = constants.beta_zero;
    let mut tr = Trace::new();

    let report = |tag, properties, domain: Option<DomainLabel>, trace: Trace, statement: String| {
        ClassificationReport {
            theorem_tag: tag,
            properties,
            domain_label: domain,
            constants_used: constants,
            hypothesis_trace: trace.0,
            statement,
        }
    };

    let alpha_floor = 1.0 + nf * (p - 2.0) / 2.0;
    let hypotheses = tr.require(format!("eta > 0 ({eta} > 0)"), eta > 0.0)
        & tr.require(
            format!("alpha - 2 > 0 ({} > 0)", alpha - 2.0),
            alpha - 2.0 > 0.0,
        )
        & tr.require(
            format!("beta > alpha - 2 ({beta} > {})", alpha - 2.0),
            beta > alpha - 2.0,
        )
        & tr.require(
            format!("alpha >= 1 + N(p-2)/2 ({alpha} >= {alpha_floor})"),
            alpha >= alpha_floor,
        );
    if hypotheses {
        if tr.select(format!("N > 2p ({nf} > {})", 2.0 * p), nf > 2.0 * p) {
            let domain = Some(DomainLabel {
                base: BaseDomain::DTildeP,
                with_inverse_square: false,
            });
            if tr.select(format!("c < k ({c} < {k})"), c < k) {
                return Ok(report(
                    TheoremTag::ThTildeContractive,
                    vec![
                        Prop::QuasiContractive,
                        Prop::Positive,
                        Prop::CoreIsCcInfinity,
                    ],
                    domain,
                    tr,
                    format!(
                        "(1+|x|^{alpha})Delta - {eta}|x|^{beta} + {c}/|x|^2 on D_tilde_p generates a positive quasi-contractive C0-semigroup on L^{p}(R^{}); C_c^infinity is a core.",
                        params.n
                    ),
                ));
            }
            if tr.select(format!("c == k ({c} == {k})"), c == k) {
                return Ok(report(
                    TheoremTag::BoundaryClosure,
                    vec![
                        Prop::ClosureGenerates,
                        Prop::QuasiContractive,
                        Prop::Positive,
                    ],
                    domain,
                    tr,
                    format!(
                        "c equals k = {k}: the closure of the confined operator on D_tilde_p generates a positive quasi-contractive C0-semigroup (boundary case of TH_TILDE_CONTRACTIVE)."
                    ),
                ));
            }
        } else {
            tr.select(format!("N <= 2p ({nf} <= {})", 2.0 * p), true);
            let domain = Some(DomainLabel {
                base: BaseDomain::DTildeP,
                with_inverse_square: true,
            });
            if tr.select(format!("c < beta_0 ({c} < {beta_zero})"), c < beta_zero) {
                return Ok(report(
                    TheoremTag::ThTildeBis,
                    vec![Prop::QuasiContractive],
                    domain,
                    tr,
                    format!(
                        "(1+|x|^{alpha})Delta - {eta}|x|^{beta} + {c}/|x|^2 on D_tilde_p \u{2229} D(|x|^-2) generates a quasi-contractive C0-semigroup on L^{p}(R^{}).",
                        params.n
                    ),
                ));
            }
            if tr.select(format!("c == beta_0 ({c} == {beta_zero})"), c == beta_zero) {
                return Ok(report(
                    TheoremTag::BoundaryClosure,
                    vec![Prop::ClosureGenerates, Prop::QuasiContractive],
                    domain,
                    tr,
                    format!(
                        "c equals beta_0 = {beta_zero}: the closure of the confined operator on D_tilde_p \u{2229} D(|x|^-2) generates a quasi-contractive C0-semigroup (boundary case of TH_TILDE_BIS)."
                    ),
                ));
            }
        }
    }
    Ok(report(
        TheoremTag::NoResult,
        vec![],
        None,
        tr,
        "No theorem in scope applies to this confined tuple; the failing hypotheses are listed in the trace. This does not assert that generation fails.".into(),
    ))
}

/// Dispatch on the presence of the confining pair.
pub fn classify(params: &Params) -> Result<ClassificationReport> {
    if params.has_confinement() {
        classify_tilde(params)
    } else {
        classify_l0(params)
    }
}
