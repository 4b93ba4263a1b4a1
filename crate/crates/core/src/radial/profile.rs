//! Radial test profiles: analytic families with closed-form derivatives,
//! plus grid-sampled data with finite-difference derivatives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radial::RadialGrid;

/// A radially symmetric function on (0, ∞).
///
/// Analytic variants provide value and the first two derivatives in closed
/// form; `Sampled` uses second-order stencils on its grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RadialProfile {
    /// e^{-a r^2}
    Gaussian { a: f64 },
    /// r^s e^{-lambda r}
    PowerExp { s: f64, lambda: f64 },
    /// r^s chi(r), chi the clipped bump exp(1 - 1/(1-t^2)) with
    /// t = (r - r0)/w: plateau 1 on (0, r0], support ends at r0 + w.
    CutoffPower { s: f64, r0: f64, w: f64 },
    /// r^s chi(r) with the same bump driven by t = ln(r/r0)/log_width:
    /// plateau on (0, r0], support ends at r0 e^{log_width}.
    LogCutoffPower { s: f64, r0: f64, log_width: f64 },
    /// (c0 + c1 r) e^{-a r^2}; the one sign-changing family.
    AffineGaussian { c0: f64, c1: f64, a: f64 },
    /// Values on a grid, linearly interpolated, zero outside.
    Sampled { grid: RadialGrid, values: Vec<f64> },
    /// Closed-form derivative of an analytic base profile.
    Derivative { base: Box<RadialProfile>, order: u8 },
}

/// Bump kernel B(t) = exp(1 - 1/(1-t^2)) clipped to 1 for t <= 0 and 0 for
/// t >= 1, together with its first two derivatives on the transition.
fn bump(t: f64) -> f64 {
    if t <= 0.0 {
        1.0
    } else if t >= 1.0 || 1.0 - t * t < 1e-8 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - t * t)).exp()
    }
}

fn bump_d1(t: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 || 1.0 - t * t < 1e-8 {
        0.0
    } else {
        let q = 1.0 - t * t;
        bump(t) * (-2.0 * t) / (q * q)
    }
}

fn bump_d2(t: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 || 1.0 - t * t < 1e-8 {
        0.0
    } else {
        let q = 1.0 - t * t;
        bump(t) * (4.0 * t * t / (q * q * q * q) - (2.0 + 6.0 * t * t) / (q * q * q))
    }
}

impl RadialProfile {
    pub fn gaussian(a: f64) -> Self {
        RadialProfile::Gaussian { a }
    }

    pub fn power_exp(s: f64, lambda: f64) -> Self {
        RadialProfile::PowerExp { s, lambda }
    }

    /// The family r^beta e^{-r/q} used by the sharpness computations.
    pub fn power_exp_scaled(beta: f64, q: f64) -> Self {
        RadialProfile::PowerExp {
            s: beta,
            lambda: 1.0 / q,
        }
    }

    pub fn value(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Gaussian { a } => (-a * r * r).exp(),
            RadialProfile::PowerExp { s, lambda } => r.powf(*s) * (-lambda * r).exp(),
            RadialProfile::CutoffPower { s, r0, w } => r.powf(*s) * bump((r - r0) / w),
            RadialProfile::LogCutoffPower { s, r0, log_width } => {
                r.powf(*s) * bump((r / r0).ln() / log_width)
            }
            RadialProfile::AffineGaussian { c0, c1, a } => (c0 + c1 * r) * (-a * r * r).exp(),
            RadialProfile::Sampled { grid, values } => sampled_value(grid, values, r),
            RadialProfile::Derivative { base, order } => match order {
                1 => base.d1(r),
                _ => base.d2(r),
            },
        }
    }

    /// First derivative u'(r).
    pub fn d1(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Gaussian { a } => -2.0 * a * r * (-a * r * r).exp(),
            RadialProfile::PowerExp { s, lambda } => {
                (s / r - lambda) * r.powf(*s) * (-lambda * r).exp()
            }
            RadialProfile::CutoffPower { s, r0, w } => {
                let t = (r - r0) / w;
                s * r.powf(s - 1.0) * bump(t) + r.powf(*s) * bump_d1(t) / w
            }
            RadialProfile::LogCutoffPower { s, r0, log_width } => {
                let t = (r / r0).ln() / log_width;
                s * r.powf(s - 1.0) * bump(t) + r.powf(*s) * bump_d1(t) / (r * log_width)
            }
            RadialProfile::AffineGaussian { c0, c1, a } => {
                (c1 - 2.0 * a * r * (c0 + c1 * r)) * (-a * r * r).exp()
            }
            RadialProfile::Sampled { grid, values } => sampled_deriv(grid, values, r, 1),
            RadialProfile::Derivative { base, order } => match order {
                1 => base.d2(r),
                _ => numeric_d1(|x| self.value(x), r),
            },
        }
    }

    /// Second derivative u''(r).
    pub fn d2(&self, r: f64) -> f64 {
        match self {
            RadialProfile::Gaussian { a } => (4.0 * a * a * r * r - 2.0 * a) * (-a * r * r).exp(),
            RadialProfile::PowerExp { s, lambda } => {
                (s * (s - 1.0) / (r * r) - 2.0 * s * lambda / r + lambda * lambda)
                    * r.powf(*s)
                    * (-lambda * r).exp()
            }
            RadialProfile::CutoffPower { s, r0, w } => {
                let t = (r - r0) / w;
                s * (s - 1.0) * r.powf(s - 2.0) * bump(t)
                    + 2.0 * s * r.powf(s - 1.0) * bump_d1(t) / w
                    + r.powf(*s) * bump_d2(t) / (w * w)
            }
            RadialProfile::LogCutoffPower { s, r0, log_width } => {
                let l = *log_width;
                let t = (r / r0).ln() / l;
                let chi = bump(t);
                let chi_d1 = bump_d1(t) / (r * l);
                let chi_d2 = (bump_d2(t) / l - bump_d1(t)) / (r * r * l);
                s * (s - 1.0) * r.powf(s - 2.0) * chi
                    + 2.0 * s * r.powf(s - 1.0) * chi_d1
                    + r.powf(*s) * chi_d2
            }
            RadialProfile::AffineGaussian { c0, c1, a } => {
                (-2.0 * a * c0 - 6.0 * a * c1 * r + 4.0 * a * a * r * r * (c0 + c1 * r))
                    * (-a * r * r).exp()
            }
            RadialProfile::Sampled { grid, values } => sampled_deriv(grid, values, r, 2),
            RadialProfile::Derivative { .. } => numeric_d2(|x| self.value(x), r),
        }
    }

    /// Points where the profile is not smooth; used as quadrature panel
    /// boundaries.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            RadialProfile::CutoffPower { r0, w, .. } => vec![*r0, r0 + w],
            RadialProfile::LogCutoffPower { r0, log_width, .. } => {
                vec![*r0, r0 * log_width.exp()]
            }
            RadialProfile::AffineGaussian { .. } => self.sign_changes(),
            RadialProfile::Derivative { base, .. } => base.breakpoints(),
            _ => Vec::new(),
        }
    }

    /// End of the support when compact, else None.
    pub fn support_end(&self) -> Option<f64> {
        match self {
            RadialProfile::CutoffPower { r0, w, .. } => Some(r0 + w),
            RadialProfile::LogCutoffPower { r0, log_width, .. } => Some(r0 * log_width.exp()),
            RadialProfile::Sampled { grid, .. } => Some(grid.r_max()),
            RadialProfile::Derivative { base, .. } => base.support_end(),
            _ => None,
        }
    }

    /// Radii where the profile changes sign (for positive-part forms).
    pub fn sign_changes(&self) -> Vec<f64> {
        match self {
            RadialProfile::AffineGaussian { c0, c1, .. } => {
                if *c1 != 0.0 {
                    let z = -c0 / c1;
                    if z > 0.0 {
                        return vec![z];
                    }
                }
                Vec::new()
            }
            _ => Vec::new(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        match self {
            RadialProfile::Gaussian { .. }
            | RadialProfile::PowerExp { .. }
            | RadialProfile::CutoffPower { .. }
            | RadialProfile::LogCutoffPower { .. } => true,
            RadialProfile::AffineGaussian { c0, c1, .. } => *c0 >= 0.0 && *c1 >= 0.0,
            RadialProfile::Sampled { values, .. } => values.iter().all(|v| *v >= 0.0),
            RadialProfile::Derivative { .. } => false,
        }
    }

    /// Radius from which tail-doubling starts when integrating to infinity.
    pub fn suggested_r_max(&self) -> f64 {
        match self {
            RadialProfile::Gaussian { a } | RadialProfile::AffineGaussian { a, .. } => {
                (50.0 / a.max(1e-8)).sqrt().max(8.0)
            }
            RadialProfile::PowerExp { s, lambda } => {
                ((50.0 + s.abs() * 8.0) / lambda.max(1e-8)).max(8.0)
            }
            _ => self.support_end().unwrap_or(50.0),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            RadialProfile::Gaussian { a } => format!("gaussian(a={a})"),
            RadialProfile::PowerExp { s, lambda } => format!("power_exp(s={s}, lambda={lambda})"),
            RadialProfile::CutoffPower { s, r0, w } => {
                format!("cutoff_power(s={s}, r0={r0}, w={w})")
            }
            RadialProfile::LogCutoffPower { s, r0, log_width } => {
                format!("log_cutoff_power(s={s}, r0={r0}, log_width={log_width})")
            }
            RadialProfile::AffineGaussian { c0, c1, a } => {
                format!("affine_gaussian(c0={c0}, c1={c1}, a={a})")
            }
            RadialProfile::Sampled { grid, values } => format!(
                "sampled(M={} on [{}, {}])",
                values.len(),
                grid.r_min(),
                grid.r_max()
            ),
            RadialProfile::Derivative { base, order } => {
                format!("d{}({})", order, base.descriptor())
            }
        }
    }
}

/// Differentiate a profile, order 1 or 2.
///
/// Analytic families return their closed-form derivative; sampled profiles
/// get a new sampled profile from second-order stencils (one-sided at the
/// ends). Total derivative order beyond 2 is rejected.
pub fn derivative(u: &RadialProfile, order: u8) -> Result<RadialProfile> {
    if !(order == 1 || order == 2) {
        return Err(Error::InvalidParams(format!(
            "derivative order must be 1 or 2, got {order}"
        )));
    }
    match u {
        RadialProfile::Sampled { grid, values } => {
            let n = values.len();
            let out: Vec<f64> = (0..n)
                .map(|i| node_stencil(grid.nodes(), values, i, order))
                .collect();
            Ok(RadialProfile::Sampled {
                grid: grid.clone(),
                values: out,
            })
        }
        RadialProfile::Derivative { base, order: prior } => {
            if prior + order > 2 {
                return Err(Error::InvalidParams(
                    "closed-form derivatives are available up to total order 2".into(),
                ));
            }
            Ok(RadialProfile::Derivative {
                base: base.clone(),
                order: prior + order,
            })
        }
        _ => Ok(RadialProfile::Derivative {
            base: Box::new(u.clone()),
            order,
        }),
    }
}

fn sampled_value(grid: &RadialGrid, values: &[f64], r: f64) -> f64 {
    let nodes = grid.nodes();
    if r <= nodes[0] || r >= nodes[nodes.len() - 1] {
        if (r - nodes[0]).abs() < 1e-15 * nodes[0] {
            return values[0];
        }
        if (r - nodes[nodes.len() - 1]).abs() < 1e-15 * nodes[nodes.len() - 1] {
            return values[values.len() - 1];
        }
        return 0.0;
    }
    let i = nodes.partition_point(|&x| x <= r) - 1;
    let t = (r - nodes[i]) / (nodes[i + 1] - nodes[i]);
    values[i] * (1.0 - t) + values[i + 1] * t
}

/// Derivative at an arbitrary point: stencil values at the two bracketing
/// nodes, linearly interpolated.
fn sampled_deriv(grid: &RadialGrid, values: &[f64], r: f64, order: u8) -> f64 {
    let nodes = grid.nodes();
    if r <= nodes[0] || r >= nodes[nodes.len() - 1] {
        return 0.0;
    }
    let i = nodes.partition_point(|&x| x <= r) - 1;
    let d_lo = node_stencil(nodes, values, i, order);
    let d_hi = node_stencil(nodes, values, i + 1, order);
    let t = (r - nodes[i]) / (nodes[i + 1] - nodes[i]);
    d_lo * (1.0 - t) + d_hi * t
}

/// Second-order stencil at node i on a possibly nonuniform grid: centered
/// three-point in the interior, one-sided at the ends (four points for the
/// second derivative, which a three-point one-sided stencil would only
/// resolve to first order).
fn node_stencil(nodes: &[f64], values: &[f64], i: usize, order: u8) -> f64 {
    let n = nodes.len();
    let m = order as usize;
    let window = if i == 0 {
        0..(m + 2).min(n)
    } else if i == n - 1 {
        n.saturating_sub(m + 2)..n
    } else {
        (i - 1)..(i + 2)
    };
    let w = fd_weights(nodes[i], &nodes[window.clone()], m);
    w.iter().zip(&values[window]).map(|(wi, fi)| wi * fi).sum()
}

/// Fornberg weights: coefficients of the m-th derivative at x0 from values
/// at the stencil points xs.
fn fd_weights(x0: f64, xs: &[f64], m: usize) -> Vec<f64> {
    let n = xs.len();
    let mut c = vec![vec![0.0; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    (0..n).map(|j| c[j][m]).collect()
}

fn numeric_d1(f: impl Fn(f64) -> f64, r: f64) -> f64 {
    let h = 1e-5 * r.abs().max(1.0);
    (f(r + h) - f(r - h)) / (2.0 * h)
}

fn numeric_d2(f: impl Fn(f64) -> f64, r: f64) -> f64 {
    let h = 1e-4 * r.abs().max(1.0);
    (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::{make_grid, GridLayout};

    #[test]
    fn gaussian_derivative_closed_form() {
        let u = RadialProfile::gaussian(1.0);
        for &r in &[0.3, 1.0, 2.7] {
            assert!((u.d1(r) - (-2.0 * r * (-r * r).exp())).abs() < 1e-14);
        }
    }

    #[test]
    fn power_exp_log_derivative() {
        // u = r^beta e^{-r/p} has u'/u = beta/r - 1/p.
        let (beta, p) = (1.5, 2.0);
        let u = RadialProfile::power_exp_scaled(beta, p);
        for &r in &[0.2, 1.0, 4.0] {
            let expected = (beta / r - 1.0 / p) * u.value(r);
            assert!((u.d1(r) - expected).abs() < 1e-13 * expected.abs().max(1.0));
        }
    }

    #[test]
    fn analytic_derivatives_match_finite_differences_to_second_order() {
        let profiles = [
            RadialProfile::gaussian(0.5),
            RadialProfile::power_exp(2.0, 1.0),
            RadialProfile::CutoffPower {
                s: 1.0,
                r0: 1.0,
                w: 4.0,
            },
            RadialProfile::LogCutoffPower {
                s: -1.2,
                r0: 1.0,
                log_width: 3.0,
            },
            RadialProfile::AffineGaussian {
                c0: 1.0,
                c1: -1.0,
                a: 1.0,
            },
        ];
        for u in &profiles {
            for &r in &[0.7, 1.9, 3.1] {
                let fd = |h: f64| ((u.value(r + h) - u.value(r - h)) / (2.0 * h) - u.d1(r)).abs();
                let (e1, e2) = (fd(1e-3), fd(5e-4));
                if e1 > 1e-12 {
                    let order = (e1 / e2).log2();
                    assert!(
                        order > 1.9,
                        "{}: observed order {order} at r={r}",
                        u.descriptor()
                    );
                }
                let fd2 = |h: f64| {
                    ((u.value(r + h) - 2.0 * u.value(r) + u.value(r - h)) / (h * h) - u.d2(r)).abs()
                };
                let (e1, e2) = (fd2(2e-3), fd2(1e-3));
                if e1 > 1e-9 {
                    let order = (e1 / e2).log2();
                    assert!(
                        order > 1.8,
                        "{}: observed d2 order {order} at r={r}",
                        u.descriptor()
                    );
                }
            }
        }
    }

    #[test]
    fn sampled_second_derivative_of_sine() {
        let grid = make_grid(0.1, 6.0, 400, GridLayout::Uniform).unwrap();
        let values: Vec<f64> = grid.nodes().iter().map(|r| r.sin()).collect();
        let u = RadialProfile::Sampled {
            grid: grid.clone(),
            values,
        };
        let d2 = derivative(&u, 2).unwrap();
        let max_err = grid
            .nodes()
            .iter()
            .map(|&r| (d2.value(r) + r.sin()).abs())
            .fold(0.0, f64::max);
        assert!(max_err <= 5e-4, "max error {max_err}");

        // Dyadic refinement shrinks the error by roughly 4x.
        let fine = make_grid(0.1, 6.0, 800, GridLayout::Uniform).unwrap();
        let values: Vec<f64> = fine.nodes().iter().map(|r| r.sin()).collect();
        let d2f = derivative(
            &RadialProfile::Sampled {
                grid: fine.clone(),
                values,
            },
            2,
        )
        .unwrap();
        let max_err_fine = fine
            .nodes()
            .iter()
            .map(|&r| (d2f.value(r) + r.sin()).abs())
            .fold(0.0, f64::max);
        assert!(max_err / max_err_fine > 3.0);
    }

    #[test]
    fn derivative_wrapper_bookkeeping() {
        let u = RadialProfile::gaussian(1.0);
        let d1 = derivative(&u, 1).unwrap();
        assert!((d1.value(1.3) - u.d1(1.3)).abs() < 1e-15);
        let d2 = derivative(&d1, 1).unwrap();
        assert!((d2.value(1.3) - u.d2(1.3)).abs() < 1e-15);
        assert!(derivative(&d2, 1).is_err());
        assert!(derivative(&u, 3).is_err());
    }

    #[test]
    fn cutoff_support_and_plateau() {
        let u = RadialProfile::CutoffPower {
            s: 2.0,
            r0: 1.0,
            w: 4.0,
        };
        assert_eq!(u.value(0.5), 0.25);
        assert_eq!(u.value(5.0), 0.0);
        assert_eq!(u.value(7.0), 0.0);
        assert_eq!(u.support_end(), Some(5.0));
        assert!(u.value(3.0) > 0.0 && u.value(3.0) < 9.0);
    }

    #[test]
    fn affine_gaussian_sign_change() {
        let u = RadialProfile::AffineGaussian {
            c0: 1.0,
            c1: -1.0,
            a: 1.0,
        };
        assert_eq!(u.sign_changes(), vec![1.0]);
        assert!(u.value(0.5) > 0.0 && u.value(2.0) < 0.0);
        assert!(!u.is_nonnegative());
    }
}
