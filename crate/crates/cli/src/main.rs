//! Command-line front door: every library capability as a subcommand with
//! machine-readable output.
//!
//! Exit codes: 0 success, 1 invalid flags or parameter-invariant
//! violations, 2 numerical failure (quadrature or linear solver).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use std::process::ExitCode;

use hardylab_core::classify::{classify, ClassificationReport};
use hardylab_core::error::Error;
use hardylab_core::evolve::{
    evolve, Boundary, EvolutionConfig, EvolutionTrace, Scheme as EvolveScheme,
};
use hardylab_core::forms::{
    dispersivity_form, dissipativity_form, hardy_infimum_search, hardy_ratio,
    tilde_dissipativity_form, yosida_form_gap, FormEvaluation,
};
use hardylab_core::params::{ConstantSet, Params};
use hardylab_core::radial::{make_grid, GridLayout, QuadOptions, RadialProfile};
use hardylab_core::sharpness::{c_bound_of_delta, c_limit, SharpnessEvaluation};

#[derive(Parser)]
#[command(
    name = "hardylab",
    about = "Constants, classification, weighted-Hardy form checks, sharpness tables and a radial evolver for (1+|x|^a)Delta - eta |x|^b + c/|x|^2 on L^p(R^N)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every closed-form constant for a parameter tuple.
    Constants(ConstantsArgs),
    /// Classify a tuple against the generation theorems.
    Classify(ClassifyArgs),
    /// Hardy quotient on one profile, or the infimum search over the
    /// near-optimizer family when --eps is given.
    Hardy(HardyArgs),
    /// Dissipativity / tilde / Yosida / dispersivity form on one profile.
    Forms(FormsArgs),
    /// Gamma-function sharpness table and its delta -> 0 limit.
    Sharpness(SharpnessArgs),
    /// Time-step the radial parabolic problem and monitor norms.
    Evolve(EvolveArgs),
}

#[derive(Args, Clone)]
struct ParamFlags {
    /// Space dimension (N >= 3).
    #[arg(long = "N")]
    n: u32,
    /// Lebesgue exponent (1 < p < infinity).
    #[arg(long)]
    p: f64,
    /// Growth exponent of 1+|x|^alpha (alpha >= 0).
    #[arg(long)]
    alpha: f64,
    /// Inverse-square coupling.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    c: f64,
    /// Confining coupling (needs --beta).
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<f64>,
    /// Confining exponent.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
}

impl ParamFlags {
    fn build(&self) -> Result<Params, Error> {
        let params = Params {
            n: self.n,
            p: self.p,
            alpha: self.alpha,
            c: self.c,
            eta: self.eta,
            beta: self.beta,
        };
        params.validate()?;
        Ok(params)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Clone)]
struct OutputFlags {
    #[arg(long, value_enum, default_value = "pretty")]
    output: OutputKind,
    /// Write the document to a file instead of stdout.
    #[arg(long)]
    output_path: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ConstantsArgs {
    #[command(flatten)]
    params: Option<ParamFlagsOpt>,
    /// JSON file with a Params document or an array of them (sweeps).
    #[arg(long)]
    params_file: Option<std::path::PathBuf>,
    #[command(flatten)]
    out: OutputFlags,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    params: Option<ParamFlagsOpt>,
    /// JSON file with a Params document or an array of them (sweeps).
    #[arg(long)]
    params_file: Option<std::path::PathBuf>,
    #[command(flatten)]
    out: OutputFlags,
}

/// Optional variant of the parameter flags so --params-file can replace them.
#[derive(Args, Clone)]
struct ParamFlagsOpt {
    #[arg(long = "N")]
    n: Option<u32>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
}

impl ParamFlagsOpt {
    fn build(&self) -> Result<Option<Params>, Error> {
        match (self.n, self.p, self.alpha) {
            (Some(n), Some(p), Some(alpha)) => {
                let params = Params {
                    n,
                    p,
                    alpha,
                    c: self.c.unwrap_or(0.0),
                    eta: self.eta,
                    beta: self.beta,
                };
                params.validate()?;
                Ok(Some(params))
            }
            (None, None, None) => Ok(None),
            _ => Err(Error::InvalidParams(
                "--N, --p and --alpha must be given together".into(),
            )),
        }
    }
}

#[derive(Args)]
struct HardyArgs {
    #[command(flatten)]
    params: ParamFlags,
    /// Profile, e.g. gaussian:a=1 | powerexp:s=1,lambda=1 |
    /// cutoff:s=1,r0=1,w=4 | logcutoff:s=-1.2,r0=1,lw=8 |
    /// affinegaussian:c0=1,c1=-1,a=1
    #[arg(long, default_value = "gaussian:a=1")]
    profile: String,
    /// Decreasing positive epsilons; switches to the infimum search.
    #[arg(long, value_delimiter = ',')]
    eps: Option<Vec<f64>>,
    /// Quadrature tolerance (absolute and relative).
    #[arg(long, default_value_t = 1e-10)]
    quad_tol: f64,
    #[command(flatten)]
    out: OutputFlags,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormKind {
    Dissipativity,
    Tilde,
    Yosida,
    Dispersivity,
}

#[derive(Args)]
struct FormsArgs {
    #[arg(long, value_enum)]
    form: FormKind,
    #[command(flatten)]
    params: ParamFlags,
    #[arg(long, default_value = "gaussian:a=1")]
    profile: String,
    /// Yosida regularisation parameter.
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value_t = 1e-10)]
    quad_tol: f64,
    #[command(flatten)]
    out: OutputFlags,
}

#[derive(Args)]
struct SharpnessArgs {
    #[arg(long = "N")]
    n: u32,
    #[arg(long)]
    p: f64,
    /// Integer growth exponent (>= 1).
    #[arg(long)]
    alpha_n: u32,
    /// Evaluate at a single delta instead of the table + limit.
    #[arg(long)]
    delta: Option<f64>,
    #[command(flatten)]
    out: OutputFlags,
}

#[derive(Args)]
struct EvolveArgs {
    #[command(flatten)]
    params: Option<ParamFlagsOpt>,
    /// JSON run description (fields: N, p, alpha, c, eta, beta, grid_m,
    /// r_min, r_max, layout, dt, t_final, scheme, u0); flags are ignored
    /// when this is given.
    #[arg(long)]
    config_file: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 2000)]
    grid_m: usize,
    #[arg(long, default_value_t = 1e-6)]
    r_min: f64,
    #[arg(long, default_value_t = 50.0)]
    r_max: f64,
    #[arg(long, value_enum, default_value = "log-uniform")]
    layout: LayoutArg,
    #[arg(long, default_value_t = 1e-4)]
    dt: f64,
    #[arg(long, default_value_t = 0.1)]
    t_final: f64,
    #[arg(long, value_enum, default_value = "implicit-euler")]
    scheme: SchemeArg,
    #[arg(long, default_value = "gaussian:a=1")]
    u0: String,
    #[command(flatten)]
    out: OutputFlags,
}

/// JSON run description for `evolve --config-file`.
#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct EvolveFileConfig {
    #[serde(rename = "N")]
    n: u32,
    p: f64,
    alpha: f64,
    #[serde(default)]
    c: f64,
    #[serde(default)]
    eta: Option<f64>,
    #[serde(default)]
    beta: Option<f64>,
    #[serde(default = "default_grid_m")]
    grid_m: usize,
    #[serde(default = "default_r_min")]
    r_min: f64,
    #[serde(default = "default_r_max")]
    r_max: f64,
    #[serde(default)]
    layout: Option<String>,
    #[serde(default = "default_dt")]
    dt: f64,
    #[serde(default = "default_t_final")]
    t_final: f64,
    #[serde(default)]
    scheme: Option<String>,
    #[serde(default)]
    u0: Option<String>,
}

fn default_grid_m() -> usize {
    2000
}
fn default_r_min() -> f64 {
    1e-6
}
fn default_r_max() -> f64 {
    50.0
}
fn default_dt() -> f64 {
    1e-4
}
fn default_t_final() -> f64 {
    0.1
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    ImplicitEuler,
    CrankNicolson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayoutArg {
    LogUniform,
    Uniform,
}

fn parse_profile(spec: &str) -> Result<RadialProfile, Error> {
    let bad = |msg: &str| Error::InvalidParams(format!("profile '{spec}': {msg}"));
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut fields = std::collections::BTreeMap::new();
    if !rest.is_empty() {
        for piece in rest.split(',') {
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| bad("expected key=value pairs"))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| bad(&format!("bad number in '{piece}'")))?;
            fields.insert(key.trim().to_string(), value);
        }
    }
    let get = |key: &str, default: Option<f64>| {
        fields
            .get(key)
            .copied()
            .or(default)
            .ok_or_else(|| bad(&format!("missing field '{key}'")))
    };
    match kind {
        "gaussian" => Ok(RadialProfile::Gaussian {
            a: get("a", Some(1.0))?,
        }),
        "powerexp" => Ok(RadialProfile::PowerExp {
            s: get("s", None)?,
            lambda: get("lambda", Some(1.0))?,
        }),
        "cutoff" => Ok(RadialProfile::CutoffPower {
            s: get("s", None)?,
            r0: get("r0", Some(1.0))?,
            w: get("w", Some(4.0))?,
        }),
        "logcutoff" => Ok(RadialProfile::LogCutoffPower {
            s: get("s", None)?,
            r0: get("r0", Some(1.0))?,
            log_width: get("lw", Some(8.0))?,
        }),
        "affinegaussian" => Ok(RadialProfile::AffineGaussian {
            c0: get("c0", None)?,
            c1: get("c1", None)?,
            a: get("a", Some(1.0))?,
        }),
        other => Err(bad(&format!("unknown profile kind '{other}'"))),
    }
}

fn load_params_file(path: &std::path::Path) -> Result<Vec<Params>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", path.display())))?;
    let list: Vec<Params> = match serde_json::from_str::<Vec<Params>>(&text) {
        Ok(list) => list,
        Err(_) => vec![serde_json::from_str::<Params>(&text)
            .map_err(|e| Error::InvalidParams(format!("cannot parse {}: {e}", path.display())))?],
    };
    for p in &list {
        p.validate()?;
    }
    if list.is_empty() {
        return Err(Error::InvalidParams("empty params file".into()));
    }
    Ok(list)
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------------------
// Per-command rendering

#[derive(Serialize)]
struct ConstantsDoc {
    params: Params,
    constants: ConstantSet,
}

fn constants_csv(docs: &[ConstantsDoc]) -> String {
    let mut out = String::from(
        "N,p,alpha,c,gamma_alpha,gamma_zero,beta_zero,beta_alpha,delta_alpha,k,k0,k1,mu,c0,baras_goldstein\n",
    );
    for d in docs {
        let cs = &d.constants;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            d.params.n,
            d.params.p,
            d.params.alpha,
            d.params.c,
            cs.gamma_alpha,
            cs.gamma_zero,
            cs.beta_zero,
            cs.beta_alpha,
            cs.delta_alpha,
            cs.k,
            cs.k0,
            cs.k1,
            cs.mu,
            cs.c0,
            cs.baras_goldstein
        );
    }
    out
}

fn constants_pretty(docs: &[ConstantsDoc]) -> String {
    let mut out = String::new();
    for d in docs {
        let cs = &d.constants;
        let _ = writeln!(
            out,
            "tuple: N={} p={} alpha={} c={}",
            d.params.n, d.params.p, d.params.alpha, d.params.c
        );
        let _ = writeln!(out, "  gamma_alpha     = {}", cs.gamma_alpha);
        let _ = writeln!(out, "  gamma_zero      = {}", cs.gamma_zero);
        let _ = writeln!(out, "  beta_zero       = {}", cs.beta_zero);
        let _ = writeln!(out, "  beta_alpha      = {}", cs.beta_alpha);
        let _ = writeln!(out, "  delta_alpha     = {}", cs.delta_alpha);
        let _ = writeln!(out, "  k               = {}", cs.k);
        let _ = writeln!(out, "  k0, k1, mu      = {}, {}, {}", cs.k0, cs.k1, cs.mu);
        let _ = writeln!(out, "  c0              = {}", cs.c0);
        let _ = writeln!(out, "  baras_goldstein = {}", cs.baras_goldstein);
    }
    out
}

fn classify_csv(reports: &[ClassificationReport]) -> String {
    let mut out = String::from("theorem_tag,properties,domain_label,k,beta_zero,statement\n");
    for r in reports {
        let props = r
            .properties
            .iter()
            .map(serde_plain_name)
            .collect::<Vec<_>>()
            .join("|");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.theorem_tag,
            csv_escape(&props),
            csv_escape(&r.domain_label.map(|d| d.to_string()).unwrap_or_default()),
            r.constants_used.k,
            r.constants_used.beta_zero,
            csv_escape(&r.statement)
        );
    }
    out
}

fn serde_plain_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn classify_pretty(reports: &[ClassificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "theorem: {}", r.theorem_tag);
        let props = r
            .properties
            .iter()
            .map(serde_plain_name)
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "properties: {}",
            if props.is_empty() { "(none)" } else { &props }
        );
        let _ = writeln!(
            out,
            "domain: {}",
            r.domain_label
                .map(|d| d.to_string())
                .unwrap_or_else(|| "(none)".into())
        );
        let _ = writeln!(
            out,
            "constants: k={} beta_zero={} gamma_alpha={}",
            r.constants_used.k, r.constants_used.beta_zero, r.constants_used.gamma_alpha
        );
        let _ = writeln!(out, "hypotheses:");
        for h in &r.hypothesis_trace {
            let mark = if h.holds { "[x]" } else { "[ ]" };
            let req = if h.required { " (required)" } else { "" };
            let _ = writeln!(out, "  {mark} {}{req}", h.condition);
        }
        let _ = writeln!(out, "statement: {}", r.statement);
    }
    out
}

fn forms_csv(evals: &[FormEvaluation]) -> String {
    let mut out = String::from("lhs,rhs,gap,ratio,quadrature_error,profile\n");
    for e in evals {
        let ratio = e.ratio.map(|r| r.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            e.lhs,
            e.rhs,
            e.gap,
            ratio,
            e.quadrature_error,
            csv_escape(&e.profile_descriptor)
        );
    }
    out
}

fn forms_pretty(evals: &[FormEvaluation]) -> String {
    let mut out = String::new();
    for e in evals {
        let _ = writeln!(out, "profile: {}", e.profile_descriptor);
        let _ = writeln!(out, "  lhs = {}", e.lhs);
        let _ = writeln!(out, "  rhs = {}", e.rhs);
        let _ = writeln!(out, "  gap = {}", e.gap);
        if let Some(ratio) = e.ratio {
            let _ = writeln!(out, "  ratio = {ratio}");
        }
        let _ = writeln!(out, "  quadrature_error = {:.3e}", e.quadrature_error);
    }
    out
}

#[derive(Serialize)]
struct SharpnessDoc {
    table: Vec<SharpnessEvaluation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    limit: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta_zero: Option<f64>,
}

fn sharpness_csv(doc: &SharpnessDoc) -> String {
    let mut out = String::from("delta,beta_param,alpha_n,first_term,second_term,c_bound\n");
    for e in &doc.table {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            e.delta, e.beta_param, e.alpha_n, e.first_term, e.second_term, e.c_bound
        );
    }
    if let Some(limit) = doc.limit {
        let _ = writeln!(out, "0,,,,,{limit}");
    }
    out
}

fn sharpness_pretty(doc: &SharpnessDoc) -> String {
    let mut out = String::from("delta        c_bound\n");
    for e in &doc.table {
        let _ = writeln!(out, "{:<12} {}", e.delta, e.c_bound);
    }
    if let (Some(limit), Some(beta_zero)) = (doc.limit, doc.beta_zero) {
        let _ = writeln!(out, "limit (delta -> 0+) = {limit}");
        let _ = writeln!(out, "beta_zero           = {beta_zero}");
    }
    out
}

fn evolve_csv(trace: &EvolutionTrace) -> String {
    let mut out = String::from("t,lp_norm,min_u,residual\n");
    for i in 0..trace.times.len() {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            trace.times[i], trace.lp_norms[i], trace.minima[i], trace.residuals[i]
        );
    }
    out
}

fn evolve_pretty(trace: &EvolutionTrace) -> String {
    let steps = trace.times.len() - 1;
    let mut out = String::new();
    let _ = writeln!(out, "steps: {steps}");
    let _ = writeln!(out, "initial norm: {}", trace.lp_norms[0]);
    let _ = writeln!(out, "final norm:   {}", trace.lp_norms[steps]);
    let _ = writeln!(out, "max step growth: {:.3e}", trace.max_step_growth());
    let _ = writeln!(
        out,
        "min value over run: {}",
        trace.minima.iter().copied().fold(f64::INFINITY, f64::min)
    );
    let _ = writeln!(out, "supercritical: {}", trace.supercritical);
    out
}

// ---------------------------------------------------------------------------

fn run(cli: Cli) -> Result<(String, OutputFlags), Error> {
    match cli.command {
        Command::Constants(args) => {
            let list = gather_params(&args.params, &args.params_file)?;
            let docs: Vec<ConstantsDoc> = list
                .into_iter()
                .map(|params| ConstantsDoc {
                    constants: ConstantSet::from_params(&params),
                    params,
                })
                .collect();
            let text = match args.out.output {
                OutputKind::Json => to_json(&docs)?,
                OutputKind::Csv => constants_csv(&docs),
                OutputKind::Pretty => constants_pretty(&docs),
            };
            Ok((text, args.out))
        }
        Command::Classify(args) => {
            let list = gather_params(&args.params, &args.params_file)?;
            let reports: Vec<ClassificationReport> =
                list.iter().map(classify).collect::<Result<_, Error>>()?;
            let text = match args.out.output {
                OutputKind::Json => {
                    if reports.len() == 1 {
                        to_json(&reports[0])?
                    } else {
                        to_json(&reports)?
                    }
                }
                OutputKind::Csv => classify_csv(&reports),
                OutputKind::Pretty => classify_pretty(&reports),
            };
            Ok((text, args.out))
        }
        Command::Hardy(args) => {
            let params = args.params.build()?;
            let opts = QuadOptions {
                abs_tol: args.quad_tol,
                rel_tol: args.quad_tol,
                ..QuadOptions::default()
            };
            let evals = match &args.eps {
                Some(eps) => hardy_infimum_search(&params, eps, &opts)?,
                None => vec![hardy_ratio(&parse_profile(&args.profile)?, &params, &opts)?],
            };
            let text = match args.out.output {
                OutputKind::Json => to_json(&evals)?,
                OutputKind::Csv => forms_csv(&evals),
                OutputKind::Pretty => {
                    let mut s = forms_pretty(&evals);
                    let _ = writeln!(s, "gamma_alpha = {}", params.gamma_alpha());
                    s
                }
            };
            Ok((text, args.out))
        }
        Command::Forms(args) => {
            let params = args.params.build()?;
            let profile = parse_profile(&args.profile)?;
            let opts = QuadOptions {
                abs_tol: args.quad_tol,
                rel_tol: args.quad_tol,
                ..QuadOptions::default()
            };
            let eval = match args.form {
                FormKind::Dissipativity => dissipativity_form(&profile, &params, &opts)?,
                FormKind::Tilde => tilde_dissipativity_form(&profile, &params, &opts)?,
                FormKind::Yosida => yosida_form_gap(&profile, &params, args.epsilon, &opts)?,
                FormKind::Dispersivity => dispersivity_form(&profile, &params, &opts)?,
            };
            let evals = vec![eval];
            let text = match args.out.output {
                OutputKind::Json => to_json(&evals[0])?,
                OutputKind::Csv => forms_csv(&evals),
                OutputKind::Pretty => forms_pretty(&evals),
            };
            Ok((text, args.out))
        }
        Command::Sharpness(args) => {
            let doc = match args.delta {
                Some(delta) => SharpnessDoc {
                    table: vec![c_bound_of_delta(args.n, args.p, args.alpha_n, delta)?],
                    limit: None,
                    beta_zero: None,
                },
                None => {
                    let table = (2..=8)
                        .map(|k| c_bound_of_delta(args.n, args.p, args.alpha_n, 10f64.powi(-k)))
                        .collect::<Result<Vec<_>, Error>>()?;
                    let limit = c_limit(args.n, args.p, args.alpha_n)?;
                    let beta_zero = Params::new(args.n, args.p, 0.0, 0.0)?.beta_zero();
                    SharpnessDoc {
                        table,
                        limit: Some(limit),
                        beta_zero: Some(beta_zero),
                    }
                }
            };
            let text = match args.out.output {
                OutputKind::Json => to_json(&doc)?,
                OutputKind::Csv => sharpness_csv(&doc),
                OutputKind::Pretty => sharpness_pretty(&doc),
            };
            Ok((text, args.out))
        }
        Command::Evolve(args) => {
            let (params, grid_m, r_min, r_max, layout, dt, t_final, scheme, u0);
            if let Some(path) = &args.config_file {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidParams(format!("cannot read {}: {e}", path.display()))
                })?;
                let fc: EvolveFileConfig = serde_json::from_str(&text).map_err(|e| {
                    Error::InvalidParams(format!("cannot parse {}: {e}", path.display()))
                })?;
                params = Params {
                    n: fc.n,
                    p: fc.p,
                    alpha: fc.alpha,
                    c: fc.c,
                    eta: fc.eta,
                    beta: fc.beta,
                };
                params.validate()?;
                grid_m = fc.grid_m;
                r_min = fc.r_min;
                r_max = fc.r_max;
                layout = match fc.layout.as_deref() {
                    None | Some("log_uniform") => GridLayout::LogUniform,
                    Some("uniform") => GridLayout::Uniform,
                    Some(other) => {
                        return Err(Error::InvalidParams(format!("unknown layout '{other}'")))
                    }
                };
                dt = fc.dt;
                t_final = fc.t_final;
                scheme = match fc.scheme.as_deref() {
                    None | Some("implicit_euler") => EvolveScheme::ImplicitEuler,
                    Some("crank_nicolson") => EvolveScheme::CrankNicolson,
                    Some(other) => {
                        return Err(Error::InvalidParams(format!("unknown scheme '{other}'")))
                    }
                };
                u0 = fc.u0.unwrap_or_else(|| "gaussian:a=1".into());
            } else {
                params = match args
                    .params
                    .as_ref()
                    .map(|f| f.build())
                    .transpose()?
                    .flatten()
                {
                    Some(p) => p,
                    None => return Err(Error::InvalidParams(
                        "give --N, --p, --alpha (and optionally --c/--eta/--beta) or --config-file"
                            .into(),
                    )),
                };
                grid_m = args.grid_m;
                r_min = args.r_min;
                r_max = args.r_max;
                layout = match args.layout {
                    LayoutArg::LogUniform => GridLayout::LogUniform,
                    LayoutArg::Uniform => GridLayout::Uniform,
                };
                dt = args.dt;
                t_final = args.t_final;
                scheme = match args.scheme {
                    SchemeArg::ImplicitEuler => EvolveScheme::ImplicitEuler,
                    SchemeArg::CrankNicolson => EvolveScheme::CrankNicolson,
                };
                u0 = args.u0.clone();
            }
            let grid = make_grid(r_min, r_max, grid_m, layout)?;
            let config = EvolutionConfig {
                params,
                grid,
                dt,
                t_final,
                scheme,
                boundary: Boundary::DirichletZero,
            };
            let trace = evolve(&config, &parse_profile(&u0)?)?;
            let text = match args.out.output {
                OutputKind::Json => to_json(&trace)?,
                OutputKind::Csv => evolve_csv(&trace),
                OutputKind::Pretty => evolve_pretty(&trace),
            };
            Ok((text, args.out))
        }
    }
}

fn gather_params(
    flags: &Option<ParamFlagsOpt>,
    file: &Option<std::path::PathBuf>,
) -> Result<Vec<Params>, Error> {
    if let Some(path) = file {
        return load_params_file(path);
    }
    match flags.as_ref().map(|f| f.build()).transpose()?.flatten() {
        Some(params) => Ok(vec![params]),
        None => Err(Error::InvalidParams(
            "give --N, --p, --alpha (and optionally --c/--eta/--beta) or --params-file".into(),
        )),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidParams(format!("serialization failed: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes.
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok((text, out)) => {
            if let Some(path) = out.output_path {
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
                if !text.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
