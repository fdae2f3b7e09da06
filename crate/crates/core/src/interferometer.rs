//! Three-mode transfer matrices and their circuit-level construction.
//!
//! A [`TransferMatrix`] maps input field amplitudes to output field
//! amplitudes, `E_out[j] = sum_a U[j][a] E_in[a]`. Circuits are ordered lists
//! of beamsplitters and phase shifters in optical order (the order light
//! meets them), so composition multiplies element matrices rightmost-first.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat3, C64};

/// Unitarity / physicality tolerance used throughout the crate.
pub const UNITARY_TOL: f64 = 1e-12;

/// 3x3 complex transfer matrix; row = output port, column = input port.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransferMatrix {
    pub entries: Mat3,
}

impl TransferMatrix {
    pub fn new(entries: Mat3) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        Self { entries: linalg::identity() }
    }

    /// Balanced three-port (discrete-Fourier) matrix, stored unitary:
    /// `U[j][a] = exp(i 2pi/3 (j)(a)) / sqrt(3)` for zero-based `j`, `a`.
    pub fn bell() -> Self {
        let norm = 1.0 / 3.0f64.sqrt();
        let half = 3.0f64.sqrt() / 2.0;
        // third roots of unity, algebraically exact components
        let w = [
            C64::new(1.0, 0.0),
            C64::new(-0.5, half),
            C64::new(-0.5, -half),
        ];
        let mut m = [[linalg::ZERO; 3]; 3];
        for (j, row) in m.iter_mut().enumerate() {
            for (a, e) in row.iter_mut().enumerate() {
                *e = w[(j * a) % 3] * norm;
            }
        }
        Self { entries: m }
    }

    #[inline]
    pub fn at(&self, out_port: usize, in_port: usize) -> C64 {
        self.entries[out_port][in_port]
    }

    /// Multiply every entry by a complex scalar (used for invariance checks).
    pub fn scaled(&self, c: C64) -> Self {
        Self { entries: linalg::scale(&self.entries, c) }
    }

    pub fn singular_values(&self) -> [f64; 3] {
        linalg::singular_values(&self.entries)
    }

    /// True when `U^dagger U = I` within `tol` entrywise.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let g = linalg::matmul(&linalg::adjoint(&self.entries), &self.entries);
        linalg::max_abs_diff(&g, &linalg::identity()) <= tol
    }
}

/// Balanced three-port matrix (unitary normalization).
pub fn bell_matrix() -> TransferMatrix {
    TransferMatrix::bell()
}

/// One optical element of a circuit.
///
/// Port numbers are 1-based. A beamsplitter on ports `(a, b)` applies the
/// rotation `[[cos t, sin t], [-sin t, cos t]]` to the pair of fields,
/// uniformly attenuated by `eta`; a phase shifter multiplies the field on its
/// port by `exp(-i phi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CircuitElement {
    #[cfg_attr(feature = "serde", serde(rename = "bs"))]
    BeamSplitter { ports: [u8; 2], theta: f64, eta: f64 },
    #[cfg_attr(feature = "serde", serde(rename = "ps"))]
    PhaseShifter { port: u8, phi: f64 },
}

impl CircuitElement {
    pub fn beamsplitter(ports: [u8; 2], theta: f64, eta: f64) -> Result<Self> {
        let el = CircuitElement::BeamSplitter { ports, theta, eta };
        el.validate()?;
        Ok(el)
    }

    pub fn phaseshifter(port: u8, phi: f64) -> Result<Self> {
        let el = CircuitElement::PhaseShifter { port, phi };
        el.validate()?;
        Ok(el)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            CircuitElement::BeamSplitter { ports, theta, eta } => {
                if !matches!(ports, [1, 2] | [2, 3] | [1, 3]) {
                    return Err(Error::InvalidInput(
                        "beamsplitter ports must be one of [1,2], [2,3], [1,3]",
                    ));
                }
                if !theta.is_finite() {
                    return Err(Error::InvalidInput("beamsplitter angle must be finite"));
                }
                if !(0.0..=1.0).contains(&eta) {
                    return Err(Error::InvalidInput("beamsplitter loss eta must lie in [0,1]"));
                }
                Ok(())
            }
            CircuitElement::PhaseShifter { port, phi } => {
                if !(1..=3).contains(&port) {
                    return Err(Error::InvalidInput("phase shifter port must lie in 1..=3"));
                }
                if !phi.is_finite() {
                    return Err(Error::InvalidInput("phase shifter angle must be finite"));
                }
                Ok(())
            }
        }
    }

    fn matrix(&self) -> Mat3 {
        let mut m = linalg::identity();
        match *self {
            CircuitElement::BeamSplitter { ports, theta, eta } => {
                let (a, b) = (ports[0] as usize - 1, ports[1] as usize - 1);
                let (c, s) = (theta.cos() * eta, theta.sin() * eta);
                m[a][a] = C64::new(c, 0.0);
                m[a][b] = C64::new(s, 0.0);
                m[b][a] = C64::new(-s, 0.0);
                m[b][b] = C64::new(c, 0.0);
            }
            CircuitElement::PhaseShifter { port, phi } => {
                let p = port as usize - 1;
                m[p][p] = C64::from_polar(1.0, -phi);
            }
        }
        m
    }
}

/// Ordered element list, first element = first met by the light.
#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CircuitSpec {
    pub elements: Vec<CircuitElement>,
}

impl CircuitSpec {
    pub fn new(elements: Vec<CircuitElement>) -> Self {
        Self { elements }
    }

    pub fn validate(&self) -> Result<()> {
        self.elements.iter().try_for_each(CircuitElement::validate)
    }
}

/// Beamsplitter/phase-shifter decomposition of the balanced three-port, with
/// a uniform loss `eta` on every beamsplitter. With `eta = 1` it composes to
/// `bell_matrix()` exactly (the two trailing pi shifters fix the row phases).
pub fn bell_circuit(eta: f64) -> CircuitSpec {
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
    let theta0 = (1.0 / 3.0f64.sqrt()).acos();
    CircuitSpec::new(alloc::vec![
        CircuitElement::BeamSplitter { ports: [2, 3], theta: FRAC_PI_4, eta },
        CircuitElement::PhaseShifter { port: 3, phi: FRAC_PI_2 },
        CircuitElement::BeamSplitter { ports: [1, 2], theta: theta0, eta },
        CircuitElement::BeamSplitter { ports: [2, 3], theta: -FRAC_PI_4, eta },
        CircuitElement::PhaseShifter { port: 2, phi: PI },
        CircuitElement::PhaseShifter { port: 3, phi: PI },
    ])
}

/// Compose a circuit into its transfer matrix. The empty spec composes to the
/// identity.
pub fn compose_circuit(spec: &CircuitSpec) -> Result<TransferMatrix> {
    spec.validate()?;
    let mut u = linalg::identity();
    for el in &spec.elements {
        u = linalg::matmul(&el.matrix(), &u);
    }
    Ok(TransferMatrix::new(u))
}

/// Replace every beamsplitter angle and every phase by an independent
/// Gaussian draw centered on its nominal value with standard deviation
/// `epsilon`; losses are untouched. Deterministic in `rng_seed`, and exactly
/// the identity for `epsilon = 0`.
pub fn perturb_circuit(spec: &CircuitSpec, epsilon: f64, rng_seed: u64) -> Result<CircuitSpec> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidInput("perturbation epsilon must be finite and >= 0"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut draw = || -> f64 {
        let z: f64 = StandardNormal.sample(&mut rng);
        epsilon * z
    };
    let elements = spec
        .elements
        .iter()
        .map(|el| match *el {
            CircuitElement::BeamSplitter { ports, theta, eta } => {
                CircuitElement::BeamSplitter { ports, theta: theta + draw(), eta }
            }
            CircuitElement::PhaseShifter { port, phi } => {
                CircuitElement::PhaseShifter { port, phi: phi + draw() }
            }
        })
        .collect();
    Ok(CircuitSpec { elements })
}

/// Physicality diagnostics of a transfer matrix.
#[derive(Clone, Copy, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PhysicalityReport {
    /// Singular values, descending.
    pub singular_values: [f64; 3],
    pub max_singular_value: f64,
    /// True when no singular value exceeds `1 + 1e-12`.
    pub physical: bool,
}

/// A matrix is physical when it never amplifies: all singular values <= 1
/// within tolerance.
pub fn validate_physical(u: &TransferMatrix) -> PhysicalityReport {
    let sv = u.singular_values();
    PhysicalityReport {
        singular_values: sv,
        max_singular_value: sv[0],
        physical: sv[0] <= 1.0 + UNITARY_TOL,
    }
}
