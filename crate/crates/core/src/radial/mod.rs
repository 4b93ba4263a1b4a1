//! Radial grids, quadrature and weighted L^p norms on (0, ∞): the
//! numerical substrate for every inequality check.

mod profile;
mod quad;

pub use profile::{derivative, RadialProfile};
pub use quad::{integrate_adaptive, integrate_to_infinity, QuadOptions, QuadratureResult};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::unit_sphere_area;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridLayout {
    LogUniform,
    Uniform,
}

/// Strictly increasing positive nodes r_1 < ... < r_M, M >= 16.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    nodes: Vec<f64>,
    layout: GridLayout,
    r_min: f64,
    r_max: f64,
}

impl RadialGrid {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn layout(&self) -> GridLayout {
        self.layout
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }
}

/// Build a grid of M nodes on [r_min, r_max].
///
/// `LogUniform` spaces nodes geometrically: r_i = r_min (r_max/r_min)^{(i-1)/(M-1)}.
pub fn make_grid(r_min: f64, r_max: f64, m: usize, layout: GridLayout) -> Result<RadialGrid> {
    if !(r_min > 0.0) {
        return Err(Error::InvalidParams(format!(
            "r_min must be positive, got {r_min}"
        )));
    }
    if !(r_max > r_min) || !r_max.is_finite() {
        return Err(Error::InvalidParams(format!(
            "need r_min < r_max < infinity, got [{r_min}, {r_max}]"
        )));
    }
    if m < 16 {
        return Err(Error::InvalidParams(format!(
            "grid needs at least 16 nodes, got {m}"
        )));
    }
    let nodes: Vec<f64> = match layout {
        GridLayout::Uniform => {
            let h = (r_max - r_min) / (m - 1) as f64;
            (0..m).map(|i| r_min + h * i as f64).collect()
        }
        GridLayout::LogUniform => {
            let ratio = (r_max / r_min).ln() / (m - 1) as f64;
            (0..m).map(|i| r_min * (ratio * i as f64).exp()).collect()
        }
    };
    Ok(RadialGrid {
        nodes,
        layout,
        r_min,
        r_max,
    })
}

/// Integrate f(r) over the profile's natural domain: up to the support end
/// when compact, otherwise with doubling tail chunks. The integrand f must
/// already contain every weight (r^{N-1}, surface factor, ...).
pub fn integrate_profile<F: Fn(f64) -> f64>(
    f: F,
    u: &RadialProfile,
    opts: &QuadOptions,
) -> Result<QuadratureResult> {
    let bps = u.breakpoints();
    match u.support_end() {
        Some(end) => {
            if end <= opts.r_min {
                return Err(Error::DegenerateProfile(format!(
                    "support [0, {end}] lies below the truncation radius {}",
                    opts.r_min
                )));
            }
            integrate_adaptive(&f, opts.r_min, end, &bps, opts)
        }
        None => integrate_to_infinity(&f, u.suggested_r_max(), &bps, opts),
    }
}

/// Fixed-grid trapezoidal integration of f over the grid nodes; the error
/// estimate is the difference against the half-resolution rule.
pub fn integrate_on_grid<F: Fn(f64) -> f64>(f: F, grid: &RadialGrid) -> QuadratureResult {
    let nodes = grid.nodes();
    let values: Vec<f64> = nodes.iter().map(|&r| f(r)).collect();
    let trapz = |stride: usize| -> f64 {
        let mut acc = 0.0;
        let mut prev = 0;
        let mut i = stride;
        while i < nodes.len() {
            acc += 0.5 * (values[prev] + values[i]) * (nodes[i] - nodes[prev]);
            prev = i;
            i += stride;
        }
        if prev != nodes.len() - 1 {
            let last = nodes.len() - 1;
            acc += 0.5 * (values[prev] + values[last]) * (nodes[last] - nodes[prev]);
        }
        acc
    };
    let fine = trapz(1);
    let coarse = trapz(2);
    QuadratureResult {
        value: fine,
        abs_error_estimate: (fine - coarse).abs(),
        node_count: nodes.len() as u64,
    }
}

/// Weighted L^p norm (σ_{N-1} ∫ |u(r)|^p r^w r^{N-1} dr)^{1/p}.
pub fn lp_norm_weighted(
    u: &RadialProfile,
    p: f64,
    n: u32,
    weight_exp: f64,
    opts: &QuadOptions,
) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::InvalidParams(format!("p must be positive, got {p}")));
    }
    let sigma = unit_sphere_area(n);
    let pow = weight_exp + (n - 1) as f64;
    let res = integrate_profile(|r| u.value(r).abs().powf(p) * r.powf(pow), u, opts)?;
    Ok((sigma * res.value.max(0.0)).powf(1.0 / p))
}

/// Discrete weighted p-norm: trapezoidal weights times r^{N-1}. The same
/// functional the evolver monitors, so "non-increasing" statements refer to
/// one fixed discrete quantity.
pub fn discrete_lp_norm(values: &[f64], grid: &RadialGrid, p: f64, n: u32) -> f64 {
    let nodes = grid.nodes();
    assert_eq!(values.len(), nodes.len());
    let mut acc = 0.0;
    for i in 0..nodes.len() {
        let left = if i == 0 { 0.0 } else { nodes[i] - nodes[i - 1] };
        let right = if i + 1 == nodes.len() {
            0.0
        } else {
            nodes[i + 1] - nodes[i]
        };
        let w = 0.5 * (left + right);
        acc += values[i].abs().powf(p) * nodes[i].powi(n as i32 - 1) * w;
    }
    acc.powf(1.0 / p)
}
