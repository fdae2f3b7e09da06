//! Dip-shape classification of the delay profile.
//!
//! Stationary points of `g3(delta) = S - A e^{-d^2} - B e^{-4d^2} + C e^{-3d^2}`
//! at positive delay correspond one-to-one to roots `y > 1` of the cubic
//! `h(y) = A y^3 + 4B - 3C y` through `y = exp(delta^2)`:
//! `dg3/ddelta = 2 delta e^{-4 delta^2} h(e^{delta^2})`.
//! No such root means a plain dip; one odd-multiplicity root a revival; two a
//! small dip riding on a revival. Since `h` has no quadratic term its roots
//! sum to zero, so at most two can exceed one.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::cubic::{self, RootSet};
use crate::error::{Error, Result};

/// Width of the `y = 1` boundary band and the "vanishing cubic" band used by
/// [`classify`].
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Shape verdict for a delay profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    NoRevival,
    SimpleRevival,
    DipInRevival,
    Degenerate,
}

/// Classification result: verdict, the revival roots, and the positive
/// stationary point `y_min = sqrt(C/A)` of the cubic when defined.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RevivalClass {
    pub verdict: Verdict,
    /// Real roots of `h` with `y > 1`, ascending.
    pub roots_gt1: Vec<f64>,
    pub y_min: Option<f64>,
}

fn count_crossings(roots: &RootSet, tol: f64) -> usize {
    roots
        .iter()
        .filter(|r| r.multiplicity % 2 == 1 && r.y > 1.0 + tol)
        .count()
}

/// Classify the dip shape from its `(A, B, C)` coefficients.
///
/// Roots at `y = 1` belong to the trivial stationary point at zero delay and
/// never count as revivals (the boundary `mu = 1/2` case is a plain dip).
/// `Degenerate` flags the cases where the count is not numerically robust: an
/// odd-multiplicity root inside the `1e-9` band around 1, an even-multiplicity
/// root beyond 1 (a shoulder about to split), or a leading coefficient so
/// small that the cubic and its linear limit disagree.
pub fn classify(a: f64, b: f64, c: f64) -> RevivalClass {
    let tol = CLASSIFY_TOL;
    let y_min = if a > 0.0 && c >= 0.0 { Some((c / a).sqrt()) } else { None };
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return RevivalClass { verdict: Verdict::Degenerate, roots_gt1: Vec::new(), y_min: None };
    }

    let roots = cubic::h_roots(a, b, c);
    let roots_gt1: Vec<f64> = roots.iter().filter(|r| r.y > 1.0).map(|r| r.y).collect();

    let crossings = count_crossings(&roots, tol);
    let boundary_crossing = roots
        .iter()
        .any(|r| r.multiplicity % 2 == 1 && (r.y - 1.0).abs() <= tol);
    let shoulder_gt1 = roots
        .iter()
        .any(|r| r.multiplicity % 2 == 0 && r.y > 1.0 + tol);

    let ambiguous_leading = if a != 0.0 && a.abs() <= tol {
        let linear = cubic::h_roots(0.0, b, c);
        count_crossings(&linear, tol) != crossings
    } else {
        false
    };

    let verdict = if ambiguous_leading || boundary_crossing || shoulder_gt1 {
        Verdict::Degenerate
    } else {
        match crossings {
            0 => Verdict::NoRevival,
            1 => Verdict::SimpleRevival,
            2 => Verdict::DipInRevival,
            _ => Verdict::Degenerate,
        }
    };

    RevivalClass { verdict, roots_gt1, y_min }
}

/// The no-revival criterion in its analytic form, defined for `A, C > 0`:
/// either the cubic stays positive at its positive stationary point, or that
/// stationary point lies left of 1 with `h(1) >= 0`. Returns `None` outside
/// the `A, C > 0` regime.
pub fn analytic_no_revival(a: f64, b: f64, c: f64) -> Option<bool> {
    if !(a > 0.0 && c > 0.0) {
        return None;
    }
    let y_min = (c / a).sqrt();
    let h_min = cubic::eval(a, -3.0 * c, 4.0 * b, y_min);
    let h_one = a + 4.0 * b - 3.0 * c;
    Some(h_min > 0.0 || (y_min <= 1.0 && h_one >= 0.0))
}

/// `(A', B', C')` of classical sources on the balanced three-port, from the
/// per-source intensity means and variances:
/// `A' = 3 x2 (x1+x3) / S^2 + 3 [x2 (v1+v3) + v2 (x1+x3)] / S^3`,
/// `B' = 3 x1 x3 / S^2 + 3 (x1 v3 + x3 v1) / S^3`,
/// `C' = 12 x1 x2 x3 / S^3`, with `S = x1 + x2 + x3`.
pub fn classical_bell_coeffs(x: [f64; 3], v: [f64; 3]) -> Result<(f64, f64, f64)> {
    if x.iter().any(|&t| !(t >= 0.0) || !t.is_finite()) {
        return Err(Error::InvalidInput("intensity means must be finite and >= 0"));
    }
    if v.iter().any(|&t| !(t >= 0.0) || !t.is_finite()) {
        return Err(Error::InvalidInput("intensity variances must be finite and >= 0"));
    }
    let sum = x[0] + x[1] + x[2];
    if sum <= 0.0 {
        return Err(Error::InvalidInput("at least one source must have nonzero intensity"));
    }
    let s2 = sum * sum;
    let s3 = s2 * sum;
    let a = 3.0 * x[1] * (x[0] + x[2]) / s2 + 3.0 * (x[1] * (v[0] + v[2]) + v[1] * (x[0] + x[2])) / s3;
    let b = 3.0 * x[0] * x[2] / s2 + 3.0 * (x[0] * v[2] + x[2] * v[0]) / s3;
    let c = 12.0 * x[0] * x[1] * x[2] / s3;
    Ok((a, b, c))
}

/// `(A, B, C)` of three identical equal-energy quantum sources with
/// sub-Poissonian parameter `mu` on the balanced three-port:
/// `A = 2(3-2mu)/9`, `B = (3-2mu)/9`, `C = 4/9`.
pub fn quantum_bell_coeffs(mu: f64) -> Result<(f64, f64, f64)> {
    if !(0.0..=1.0).contains(&mu) {
        return Err(Error::InvalidInput("mu must lie in [0, 1]"));
    }
    Ok((2.0 * (3.0 - 2.0 * mu) / 9.0, (3.0 - 2.0 * mu) / 9.0, 4.0 / 9.0))
}

/// `y_min = sqrt(C/A)` and `h(1) = A + 4B - 3C`; errors unless `A > 0`.
pub fn ymin_and_h1(a: f64, b: f64, c: f64) -> Result<(f64, f64)> {
    if !(a > 0.0) {
        return Err(Error::StationaryPointUndefined);
    }
    if c < 0.0 {
        return Err(Error::InvalidInput("y_min needs C >= 0"));
    }
    Ok(((c / a).sqrt(), a + 4.0 * b - 3.0 * c))
}

/// `h(1)/3` of fluctuation-free classical sources on the balanced three-port,
/// written over normalized intensities `t` on the simplex:
/// `t2 (t1 + t3) + 4 t1 t3 - 12 t1 t2 t3`.
pub fn simplex_h1_form(t: [f64; 3]) -> f64 {
    t[1] * (t[0] + t[2]) + 4.0 * t[0] * t[2] - 12.0 * t[0] * t[1] * t[2]
}

/// Numerical audit of the nonnegativity of [`simplex_h1_form`] over the
/// intensity simplex.
#[derive(Clone, Copy, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SimplexAudit {
    pub resolution: usize,
    /// Minimum over the dense simplex grid (nonnegative up to rounding).
    pub grid_min: f64,
    pub grid_argmin: [f64; 3],
    /// Value 1/9 at the interior stationary point (1/6, 2/3, 1/6).
    pub stationary_symmetric: f64,
    /// Value 2/9 at the stationary point ((1-s)/3, 1/3, (1+s)/3), s = sqrt(3)/2.
    pub stationary_skew: f64,
    /// Minima of the edge reductions `t2 t3`, `4 t1 t3`, `t1 t2` on the three
    /// simplex edges `t1 = 0`, `t2 = 0`, `t3 = 0`.
    pub edge_minima: [f64; 3],
}

impl SimplexAudit {
    /// All reported quantities within their analytic bounds.
    pub fn holds(&self) -> bool {
        self.grid_min >= -1e-12
            && (self.stationary_symmetric - 1.0 / 9.0).abs() <= 1e-12
            && (self.stationary_skew - 2.0 / 9.0).abs() <= 1e-12
            && self.edge_minima.iter().all(|&m| m >= 0.0)
    }
}

/// Scan [`simplex_h1_form`] over a dense grid of the simplex, evaluate both
/// stationary points, and reduce the three boundary edges.
pub fn verify_simplex_nonnegativity(resolution: usize) -> Result<SimplexAudit> {
    if resolution < 2 {
        return Err(Error::InvalidInput("simplex grid resolution must be >= 2"));
    }
    let n = resolution;
    let mut grid_min = f64::INFINITY;
    let mut grid_argmin = [0.0; 3];
    for i in 0..=n {
        for j in 0..=(n - i) {
            let t1 = i as f64 / n as f64;
            let t2 = j as f64 / n as f64;
            let t3 = 1.0 - t1 - t2;
            let value = simplex_h1_form([t1, t2, t3]);
            if value < grid_min {
                grid_min = value;
                grid_argmin = [t1, t2, t3];
            }
        }
    }

    let skew = 3.0f64.sqrt() / 2.0;
    let stationary_symmetric = simplex_h1_form([1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0]);
    let stationary_skew =
        simplex_h1_form([(1.0 - skew) / 3.0, 1.0 / 3.0, (1.0 + skew) / 3.0]);

    // On each edge the form reduces to a product of the remaining coordinates.
    let mut edge_minima = [f64::INFINITY; 3];
    for k in 0..=n {
        let s = k as f64 / n as f64;
        edge_minima[0] = edge_minima[0].min(s * (1.0 - s)); // t1 = 0: t2 t3
        edge_minima[1] = edge_minima[1].min(4.0 * s * (1.0 - s)); // t2 = 0: 4 t1 t3
        edge_minima[2] = edge_minima[2].min(s * (1.0 - s)); // t3 = 0: t1 t2
    }

    Ok(SimplexAudit {
        resolution,
        grid_min,
        grid_argmin,
        stationary_symmetric,
        stationary_skew,
        edge_minima,
    })
}
