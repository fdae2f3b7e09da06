//! Source photon/intensity statistics and frequency-mode distinguishability.
//!
//! Distinguishability of the three sources enters only through the pairwise
//! overlap moduli `r12, r23, r31` and the triad phase `psi` (the phase of the
//! cyclic overlap product). Individual overlap phases are gauge; the chosen
//! gauge puts the whole triad phase on the (1,2) overlap.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, Mat3, C64};

/// Tolerance for the positive-semidefiniteness of the overlap Gram matrix.
pub const GRAM_PSD_TOL: f64 = 1e-10;

/// Mean, variance and third central moment of a classical pulse intensity.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassicalSourceMoments {
    pub mean: f64,
    pub variance: f64,
    pub third_central: f64,
}

impl ClassicalSourceMoments {
    pub fn new(mean: f64, variance: f64, third_central: f64) -> Result<Self> {
        if !(mean.is_finite() && variance.is_finite() && third_central.is_finite()) {
            return Err(Error::InvalidInput("classical moments must be finite"));
        }
        if mean < 0.0 {
            return Err(Error::InvalidInput("mean intensity must be >= 0"));
        }
        if variance < 0.0 {
            return Err(Error::InvalidInput("intensity variance must be >= 0"));
        }
        Ok(Self { mean, variance, third_central })
    }

    /// Non-fluctuating source of fixed intensity.
    pub fn fixed(mean: f64) -> Result<Self> {
        Self::new(mean, 0.0, 0.0)
    }

    /// Moments of a gamma-distributed intensity with the given mean and
    /// variance (third central moment `2 v^2 / x`).
    pub fn gamma(mean: f64, variance: f64) -> Result<Self> {
        if mean <= 0.0 {
            return Err(Error::InvalidInput("gamma intensity needs mean > 0"));
        }
        Self::new(mean, variance, 2.0 * variance * variance / mean)
    }

    pub(crate) fn raw(&self) -> RawMoments {
        let x = self.mean;
        let second = self.variance + x * x;
        let third = self.third_central + 3.0 * x * self.variance + x * x * x;
        RawMoments { mean: x, second, third }
    }
}

/// Photon-number moments `<n>`, `<n^2>`, `<n^3>` of a Fock-diagonal source,
/// plus its single-pulse energy scale.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuantumSourceMoments {
    pub mean_n: f64,
    pub second_n: f64,
    pub third_n: f64,
    pub energy: f64,
}

impl QuantumSourceMoments {
    pub fn new(mean_n: f64, second_n: f64, third_n: f64, energy: f64) -> Result<Self> {
        if !(mean_n.is_finite() && second_n.is_finite() && third_n.is_finite() && energy.is_finite())
        {
            return Err(Error::InvalidInput("photon-number moments must be finite"));
        }
        if mean_n < 0.0 {
            return Err(Error::InvalidInput("mean photon number must be >= 0"));
        }
        if second_n < mean_n * mean_n {
            return Err(Error::InvalidInput("photon-number variance must be >= 0"));
        }
        // <n^2> >= <n> holds for any integer-valued photon number; it bounds
        // the sub-Poissonian parameter mu by 1.
        if second_n < mean_n {
            return Err(Error::InvalidInput("photon-number moments need <n^2> >= <n>"));
        }
        if third_n < 0.0 {
            return Err(Error::InvalidInput("third photon-number moment must be >= 0"));
        }
        if energy <= 0.0 {
            return Err(Error::InvalidInput("source energy must be > 0"));
        }
        Ok(Self { mean_n, second_n, third_n, energy })
    }

    pub fn single_photon(energy: f64) -> Result<Self> {
        Self::new(1.0, 1.0, 1.0, energy)
    }

    /// Poissonian statistics of mean `lambda` (phase-averaged coherent state).
    pub fn poissonian(lambda: f64, energy: f64) -> Result<Self> {
        let l = lambda;
        Self::new(l, l * l + l, l * l * l + 3.0 * l * l + l, energy)
    }

    /// Unit-mean source with sub-Poissonian parameter `mu` in [0, 1]:
    /// `<n> = 1`, `<n^2> = 2 - mu`. The third moment is pinned to the minimum
    /// compatible with the first two on a two-point support,
    /// `<n^3> = <n^2>^2 / <n>`; it shifts only the correlation offset, never
    /// the dip shape.
    pub fn from_mu(mu: f64, energy: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::InvalidInput("mu must lie in [0, 1]"));
        }
        let second = 2.0 - mu;
        Self::new(1.0, second, second * second, energy)
    }

    /// `mu = -(<n^2> - <n>^2 - <n>) / <n>^2`, the negated normalized Mandel Q.
    pub fn mandel_mu(&self) -> Result<f64> {
        if self.mean_n == 0.0 {
            return Err(Error::InvalidInput("mandel mu undefined for zero mean photon number"));
        }
        let m = self.mean_n;
        Ok(-(self.second_n - m * m - m) / (m * m))
    }

    /// Effective intensity moments after normal ordering:
    /// `<I^k> -> E^k <:n^k:>`.
    pub(crate) fn raw(&self) -> RawMoments {
        let e = self.energy;
        RawMoments {
            mean: e * self.mean_n,
            second: e * e * (self.second_n - self.mean_n),
            third: e * e * e * (self.third_n - 3.0 * self.second_n + 2.0 * self.mean_n),
        }
    }
}

/// Raw (non-central) intensity moments fed to the correlation engine.
#[derive(Clone, Copy, Debug)]
pub(crate) struct RawMoments {
    pub mean: f64,
    pub second: f64,
    pub third: f64,
}

/// Sub-Poissonian parameter of a source (errors on zero mean).
pub fn mandel_mu(q: &QuantumSourceMoments) -> Result<f64> {
    q.mandel_mu()
}

/// Pairwise overlap moduli and the triad phase.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OverlapSet {
    pub r12: f64,
    pub r23: f64,
    pub r31: f64,
    pub psi: f64,
}

impl OverlapSet {
    pub fn new(r12: f64, r23: f64, r31: f64, psi: f64) -> Result<Self> {
        for r in [r12, r23, r31] {
            if !(0.0..=1.0).contains(&r) {
                return Err(Error::InvalidInput("overlap moduli must lie in [0, 1]"));
            }
        }
        if !psi.is_finite() {
            return Err(Error::InvalidInput("triad phase must be finite"));
        }
        Ok(Self { r12, r23, r31, psi })
    }

    /// Overlaps of three identical Gaussian pulses delayed by `(-tau, 0, +tau)`
    /// as a function of the dimensionless delay `delta = sigma * tau`:
    /// `r12 = r23 = exp(-delta^2/2)`, `r31 = exp(-2 delta^2)`, `psi = 0`.
    pub fn from_delta(delta: f64) -> Self {
        let d2 = delta * delta;
        Self {
            r12: (-d2 / 2.0).exp(),
            r23: (-d2 / 2.0).exp(),
            r31: (-2.0 * d2).exp(),
            psi: 0.0,
        }
    }

    pub fn indistinguishable() -> Self {
        Self { r12: 1.0, r23: 1.0, r31: 1.0, psi: 0.0 }
    }

    pub fn distinguishable() -> Self {
        Self { r12: 0.0, r23: 0.0, r31: 0.0, psi: 0.0 }
    }

    /// Complex pairwise overlaps in the chosen gauge (triad phase on c12).
    pub fn phased(&self) -> PairOverlaps {
        PairOverlaps {
            c12: C64::from_polar(self.r12, self.psi),
            c23: C64::new(self.r23, 0.0),
            c31: C64::new(self.r31, 0.0),
        }
    }

    /// Hermitian Gram matrix `G[a][b] = <phi_a|phi_b>` of the mode vectors.
    pub fn gram(&self) -> Mat3 {
        let p = self.phased();
        [
            [linalg::ONE, p.c12, p.c31.conj()],
            [p.c12.conj(), linalg::ONE, p.c23],
            [p.c31, p.c23.conj(), linalg::ONE],
        ]
    }

    /// Smallest eigenvalue of the Gram matrix; realizable overlaps have
    /// `min >= -GRAM_PSD_TOL`.
    pub fn min_gram_eigenvalue(&self) -> f64 {
        let (w, _) = linalg::hermitian_eigen(&self.gram());
        w[0]
    }
}

/// Complex pairwise overlaps `c12 = <phi1|phi2>`, `c23 = <phi2|phi3>`,
/// `c31 = <phi3|phi1>`. Only the product `c12 c23 c31` (modulus and triad
/// phase) and the individual moduli are physical.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairOverlaps {
    pub c12: Complex64,
    pub c23: Complex64,
    pub c31: Complex64,
}

impl PairOverlaps {
    /// Ordered overlap `<phi_a|phi_b>` for zero-based distinct `a`, `b`.
    #[inline]
    pub fn overlap(&self, a: usize, b: usize) -> C64 {
        match (a, b) {
            (0, 1) => self.c12,
            (1, 0) => self.c12.conj(),
            (1, 2) => self.c23,
            (2, 1) => self.c23.conj(),
            (2, 0) => self.c31,
            (0, 2) => self.c31.conj(),
            _ => panic!("overlap indices must be distinct and < 3"),
        }
    }

    /// Cyclic product `c12 c23 c31 = r12 r23 r31 exp(i psi)`.
    #[inline]
    pub fn triad(&self) -> C64 {
        self.c12 * self.c23 * self.c31
    }
}

/// Gaussian pulse pair-delay model: spectral width `sigma`, delay `tau`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaussianDelayModel {
    pub sigma: f64,
    pub tau: f64,
}

impl GaussianDelayModel {
    pub fn new(sigma: f64, tau: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite() && tau.is_finite()) {
            return Err(Error::InvalidInput("delay model needs sigma > 0 and finite tau"));
        }
        Ok(Self { sigma, tau })
    }

    pub fn delta(&self) -> f64 {
        self.sigma * self.tau
    }
}

/// Overlaps of the Gaussian delay path at `delta = sigma * tau`.
pub fn overlaps_from_delay(model: &GaussianDelayModel) -> OverlapSet {
    OverlapSet::from_delta(model.delta())
}

/// Realize the overlaps as three unit vectors in dimension three, one row per
/// source, via a symmetric factorization of the Gram matrix. Errors when the
/// Gram matrix is not positive semidefinite within [`GRAM_PSD_TOL`].
pub fn embed_overlaps(o: &OverlapSet) -> Result<[[C64; 3]; 3]> {
    let gram = o.gram();
    let (w, v) = linalg::hermitian_eigen(&gram);
    if w[0] < -GRAM_PSD_TOL {
        return Err(Error::UnrealizableOverlaps { min_eigenvalue: w[0] });
    }
    // phi_a[k] = conj(L[a][k]) with L = V sqrt(clamped eigenvalues), so that
    // <phi_a|phi_b> = (L L^dagger)[a][b] = G[a][b].
    let mut vectors = [[linalg::ZERO; 3]; 3];
    for a in 0..3 {
        for k in 0..3 {
            let root = w[k].max(0.0).sqrt();
            vectors[a][k] = (v[a][k] * root).conj();
        }
    }
    Ok(vectors)
}
