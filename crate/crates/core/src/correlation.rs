//! Closed-form third-order output-intensity correlations.
//!
//! `g3 = <I1 I2 I3> / (<I1><I2><I3>)` for three independent random-phase
//! sources behind a three-mode transfer matrix. The classical and quantum
//! (Fock-diagonal) models share one engine: the quantum value is the
//! classical expression evaluated with normally ordered effective moments
//! `<I^k> -> E^k <:n^k:>`.
//!
//! Along the Gaussian delay path the correlation collapses to four
//! exponentials, `g3(delta) = S - A e^{-d^2} - B e^{-4 d^2} + C e^{-3 d^2}`;
//! [`shape_coefficients`] extracts `(S, A, B, C)` by probing indicator
//! overlap configurations, which works uniformly for both models and for
//! arbitrary (lossy, perturbed) matrices.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::interferometer::TransferMatrix;
use crate::linalg::{self, C64};
use crate::sources::{
    ClassicalSourceMoments, OverlapSet, PairOverlaps, QuantumSourceMoments, RawMoments,
};

/// Mean output intensities below this threshold count as dark ports.
pub const DARK_PORT_EPS: f64 = 1e-14;

/// Cyclic successor on {0, 1, 2}.
#[inline]
fn cyc(a: usize) -> usize {
    (a + 1) % 3
}

const CYCLES: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];

/// Three sources of either statistics; the engine only sees raw moments.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sources {
    Classical([ClassicalSourceMoments; 3]),
    Quantum([QuantumSourceMoments; 3]),
}

impl Sources {
    fn raw(&self) -> [RawMoments; 3] {
        match self {
            Sources::Classical(s) => [s[0].raw(), s[1].raw(), s[2].raw()],
            Sources::Quantum(s) => [s[0].raw(), s[1].raw(), s[2].raw()],
        }
    }
}

/// Normalized third-order correlation for classical random-phase sources.
pub fn g3_classical(
    u: &TransferMatrix,
    sources: &[ClassicalSourceMoments; 3],
    overlaps: &OverlapSet,
) -> Result<f64> {
    g3(u, &Sources::Classical(*sources), overlaps)
}

/// Normalized third-order correlation for Fock-diagonal quantum sources.
pub fn g3_quantum(
    u: &TransferMatrix,
    sources: &[QuantumSourceMoments; 3],
    overlaps: &OverlapSet,
) -> Result<f64> {
    g3(u, &Sources::Quantum(*sources), overlaps)
}

/// Model-generic entry point.
pub fn g3(u: &TransferMatrix, sources: &Sources, overlaps: &OverlapSet) -> Result<f64> {
    g3_with_overlap_phases(u, sources, &overlaps.phased())
}

/// Evaluate with explicit complex pairwise overlaps. Only the moduli and the
/// cyclic product enter the result, so any distribution of the triad phase
/// over the three overlaps gives the same value; this entry point exists to
/// make that gauge freedom testable.
pub fn g3_with_overlap_phases(
    u: &TransferMatrix,
    sources: &Sources,
    overlaps: &PairOverlaps,
) -> Result<f64> {
    g3_raw(u, &sources.raw(), overlaps)
}

fn g3_raw(u: &TransferMatrix, m: &[RawMoments; 3], ov: &PairOverlaps) -> Result<f64> {
    let x = [m[0].mean, m[1].mean, m[2].mean];
    let v = [
        m[0].second - x[0] * x[0],
        m[1].second - x[1] * x[1],
        m[2].second - x[2] * x[2],
    ];

    let mut usq = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for a in 0..3 {
            usq[i][a] = u.at(i, a).norm_sqr();
        }
    }

    let mut mean_out = [0.0f64; 3];
    for (i, row) in usq.iter().enumerate() {
        mean_out[i] = row[0] * x[0] + row[1] * x[1] + row[2] * x[2];
        if mean_out[i] < DARK_PORT_EPS {
            return Err(Error::DarkPort { port: i + 1 });
        }
    }
    let denom = mean_out[0] * mean_out[1] * mean_out[2];

    let r2 = |a: usize, b: usize| ov.overlap(a, b).norm_sqr();

    // Triple-diagonal intensity fluctuations: <I^3> - <I>^3 per source.
    let mut f1 = 0.0;
    for a in 0..3 {
        f1 += usq[0][a] * usq[1][a] * usq[2][a] * (m[a].third - x[a] * x[a] * x[a]);
    }

    // One output fed by source b, the other two diagonal in a: variance of a
    // against the mean of b.
    let mut f2 = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            if a == b {
                continue;
            }
            let mut pattern = 0.0;
            for [i, j, k] in CYCLES {
                pattern += usq[i][b] * usq[j][a] * usq[k][a];
            }
            f2 += v[a] * x[b] * pattern;
        }
    }

    // Interference of the (a, b) overlap on two outputs with the third output
    // diagonal in a: carries r_ab^2 and the variance of a.
    let mut f3 = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            if a == b {
                continue;
            }
            let mut pattern = linalg::ZERO;
            for [i, j, k] in CYCLES {
                pattern += usq[i][a]
                    * (u.at(j, a) * u.at(j, b).conj())
                    * (u.at(k, b) * u.at(k, a).conj());
            }
            f3 += 2.0 * r2(a, b) * v[a] * x[b] * pattern.re;
        }
    }

    // Pairwise interference at mean intensities.
    let mut pairwise = 0.0;
    for (a, b) in [(0usize, 1usize), (1, 2), (0, 2)] {
        let mut sum = 0.0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                let z = u.at(i, a) * u.at(i, b).conj() * u.at(j, b) * u.at(j, a).conj();
                sum += 2.0 * z.re / (mean_out[i] * mean_out[j]);
            }
        }
        pairwise += r2(a, b) * x[a] * x[b] * sum;
    }

    // Triad term: permanent of the entrywise product of conj(U) with U
    // column-cycled one step, conjugate pair summed into 2 Re[...].
    let mut triad_mat = [[linalg::ZERO; 3]; 3];
    for j in 0..3 {
        for a in 0..3 {
            triad_mat[j][a] = u.at(j, a).conj() * u.at(j, cyc(a));
        }
    }
    let triad = 2.0 * (ov.triad() * linalg::permanent3(&triad_mat)).re * x[0] * x[1] * x[2] / denom;

    Ok(1.0 + (f1 + f2 + f3) / denom + pairwise + triad)
}

/// Coefficients of the four-exponential delay profile
/// `g3(delta) = S - A e^{-delta^2} - B e^{-4 delta^2} + C e^{-3 delta^2}`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ShapeCoefficients {
    pub s: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ShapeCoefficients {
    /// Evaluate the four-exponential profile at a dimensionless delay.
    pub fn eval(&self, delta: f64) -> f64 {
        let d2 = delta * delta;
        self.s - self.a * (-d2).exp() - self.b * (-4.0 * d2).exp() + self.c * (-3.0 * d2).exp()
    }
}

fn probe(u: &TransferMatrix, sources: &Sources, r12: f64, r23: f64, r31: f64) -> Result<f64> {
    let ov = PairOverlaps {
        c12: C64::new(r12, 0.0),
        c23: C64::new(r23, 0.0),
        c31: C64::new(r31, 0.0),
    };
    g3_with_overlap_phases(u, sources, &ov)
}

/// Extract `(S, A, B, C)` by probing indicator overlaps: `S` at fully
/// distinguishable sources, one pairwise coefficient per single unit overlap,
/// and the triad coefficient from the fully indistinguishable point. Along
/// the delay path `r12^2` and `r23^2` decay as `e^{-delta^2}`, `r31^2` as
/// `e^{-4 delta^2}` and the triad product as `e^{-3 delta^2}`.
pub fn shape_coefficients(u: &TransferMatrix, sources: &Sources) -> Result<ShapeCoefficients> {
    let s = probe(u, sources, 0.0, 0.0, 0.0)?;
    let a12 = s - probe(u, sources, 1.0, 0.0, 0.0)?;
    let a23 = s - probe(u, sources, 0.0, 1.0, 0.0)?;
    let a31 = s - probe(u, sources, 0.0, 0.0, 1.0)?;
    let full = probe(u, sources, 1.0, 1.0, 1.0)?;
    Ok(ShapeCoefficients {
        s,
        a: a12 + a23,
        b: a31,
        c: full - s + a12 + a23 + a31,
    })
}

/// A sampled `g3(delta)` curve with strictly increasing delays.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepCurve {
    pub points: Vec<(f64, f64)>,
}

/// Evaluate `g3` along the Gaussian delay path on a strictly increasing grid.
pub fn sweep_delay(u: &TransferMatrix, sources: &Sources, delta_grid: &[f64]) -> Result<SweepCurve> {
    if delta_grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidInput("delta grid must be strictly increasing"));
    }
    let mut points = Vec::with_capacity(delta_grid.len());
    for &delta in delta_grid {
        let value = g3(u, sources, &OverlapSet::from_delta(delta))?;
        points.push((delta, value));
    }
    Ok(SweepCurve { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interferometer::{bell_matrix, compose_circuit, perturb_circuit, bell_circuit};
    use crate::sources::GaussianDelayModel;

    fn equal_fixed() -> [ClassicalSourceMoments; 3] {
        let s = ClassicalSourceMoments::fixed(1.0).unwrap();
        [s, s, s]
    }

    fn single_photons() -> [QuantumSourceMoments; 3] {
        let s = QuantumSourceMoments::single_photon(1.0).unwrap();
        [s, s, s]
    }

    #[test]
    fn bell_classical_fixed_points() {
        let u = bell_matrix();
        let g0 = g3_classical(&u, &equal_fixed(), &OverlapSet::indistinguishable()).unwrap();
        assert!((g0 - 4.0 / 9.0).abs() < 1e-14, "g3(0) = {g0}");
        let ginf = g3_classical(&u, &equal_fixed(), &OverlapSet::distinguishable()).unwrap();
        assert!((ginf - 1.0).abs() < 1e-14);
    }

    #[test]
    fn bell_quantum_fixed_points() {
        let u = bell_matrix();
        let g0 = g3_quantum(&u, &single_photons(), &OverlapSet::indistinguishable()).unwrap();
        assert!((g0 - 1.0 / 3.0).abs() < 1e-14, "g3(0) = {g0}");
        let ginf = g3_quantum(&u, &single_photons(), &OverlapSet::distinguishable()).unwrap();
        assert!((ginf - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn bell_quantum_matches_closed_form_at_generic_overlaps() {
        // 2/9 - (r12^2 + r23^2 + r31^2)/9 + 4/9 r12 r23 r31 cos psi
        let u = bell_matrix();
        let o = OverlapSet::new(0.8, 0.55, 0.3, 0.9).unwrap();
        let expect = 2.0 / 9.0
            - (o.r12 * o.r12 + o.r23 * o.r23 + o.r31 * o.r31) / 9.0
            + 4.0 / 9.0 * o.r12 * o.r23 * o.r31 * o.psi.cos();
        let got = g3_quantum(&u, &single_photons(), &o).unwrap();
        assert!((got - expect).abs() < 1e-14, "{got} vs {expect}");
    }

    #[test]
    fn bell_classical_matches_closed_form_at_generic_overlaps() {
        // 1 - (r12^2 + r23^2 + r31^2)/3 + 4/9 r12 r23 r31 cos psi
        let u = bell_matrix();
        let o = OverlapSet::new(0.4, 0.9, 0.65, -1.2).unwrap();
        let expect = 1.0 - (o.r12 * o.r12 + o.r23 * o.r23 + o.r31 * o.r31) / 3.0
            + 4.0 / 9.0 * o.r12 * o.r23 * o.r31 * o.psi.cos();
        let got = g3_classical(&u, &equal_fixed(), &o).unwrap();
        assert!((got - expect).abs() < 1e-14, "{got} vs {expect}");
    }

    #[test]
    fn distinguishable_fixed_sources_are_uncorrelated() {
        let u = compose_circuit(&perturb_circuit(&bell_circuit(0.9), 0.3, 7).unwrap()).unwrap();
        let s = [
            ClassicalSourceMoments::fixed(0.7).unwrap(),
            ClassicalSourceMoments::fixed(2.0).unwrap(),
            ClassicalSourceMoments::fixed(0.1).unwrap(),
        ];
        let g = g3_classical(&u, &s, &OverlapSet::distinguishable()).unwrap();
        assert!((g - 1.0).abs() < 1e-13, "g3 = {g}");
    }

    #[test]
    fn poissonian_sources_reduce_to_classical() {
        let u = compose_circuit(&perturb_circuit(&bell_circuit(0.85), 0.25, 3).unwrap()).unwrap();
        let o = OverlapSet::new(0.6, 0.7, 0.42, 0.3).unwrap();
        let lambdas = [0.5, 1.7, 2.3];
        let energies = [1.0, 0.8, 1.9];
        let q: [QuantumSourceMoments; 3] = core::array::from_fn(|k| {
            QuantumSourceMoments::poissonian(lambdas[k], energies[k]).unwrap()
        });
        let c: [ClassicalSourceMoments; 3] = core::array::from_fn(|k| {
            ClassicalSourceMoments::fixed(lambdas[k] * energies[k]).unwrap()
        });
        let gq = g3_quantum(&u, &q, &o).unwrap();
        let gc = g3_classical(&u, &c, &o).unwrap();
        assert!((gq - gc).abs() < 1e-12, "{gq} vs {gc}");
    }

    #[test]
    fn dark_port_reports_port_number() {
        // Identity matrix and a switched-off source 2 leave output 2 dark.
        let u = TransferMatrix::identity();
        let s = [
            ClassicalSourceMoments::fixed(1.0).unwrap(),
            ClassicalSourceMoments::fixed(0.0).unwrap(),
            ClassicalSourceMoments::fixed(1.0).unwrap(),
        ];
        match g3_classical(&u, &s, &OverlapSet::distinguishable()) {
            Err(Error::DarkPort { port }) => assert_eq!(port, 2),
            other => panic!("expected dark port, got {other:?}"),
        }
    }

    #[test]
    fn diagonal_matrix_has_no_interference_coefficients() {
        let u = TransferMatrix::identity();
        let s = Sources::Classical([
            ClassicalSourceMoments::new(1.0, 0.3, 0.1).unwrap(),
            ClassicalSourceMoments::fixed(2.0).unwrap(),
            ClassicalSourceMoments::new(3.0, 1.0, 0.0).unwrap(),
        ]);
        let coeffs = shape_coefficients(&u, &s).unwrap();
        assert!(coeffs.a.abs() < 1e-14);
        assert!(coeffs.b.abs() < 1e-14);
        assert!(coeffs.c.abs() < 1e-14);
    }

    #[test]
    fn shape_coefficients_bell_classical() {
        let u = bell_matrix();
        let coeffs = shape_coefficients(&u, &Sources::Classical(equal_fixed())).unwrap();
        assert!((coeffs.s - 1.0).abs() < 1e-14);
        assert!((coeffs.a - 2.0 / 3.0).abs() < 1e-14);
        assert!((coeffs.b - 1.0 / 3.0).abs() < 1e-14);
        assert!((coeffs.c - 4.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn shape_coefficients_bell_quantum_single_photons() {
        let u = bell_matrix();
        let coeffs = shape_coefficients(&u, &Sources::Quantum(single_photons())).unwrap();
        assert!((coeffs.s - 2.0 / 9.0).abs() < 1e-14);
        assert!((coeffs.a - 2.0 / 9.0).abs() < 1e-14);
        assert!((coeffs.b - 1.0 / 9.0).abs() < 1e-14);
        assert!((coeffs.c - 4.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn reconstruction_matches_direct_sweep() {
        let spec = perturb_circuit(&bell_circuit(0.8), 2.0 * core::f64::consts::PI / 100.0, 21).unwrap();
        let u = compose_circuit(&spec).unwrap();
        let sources = Sources::Classical([
            ClassicalSourceMoments::new(0.9, 0.2, 0.05).unwrap(),
            ClassicalSourceMoments::fixed(0.4).unwrap(),
            ClassicalSourceMoments::new(1.4, 0.8, 0.0).unwrap(),
        ]);
        let coeffs = shape_coefficients(&u, &sources).unwrap();
        let grid: Vec<f64> = (0..101).map(|k| 3.0 * k as f64 / 100.0).collect();
        let curve = sweep_delay(&u, &sources, &grid).unwrap();
        let mut worst = 0.0f64;
        for &(delta, g) in &curve.points {
            worst = worst.max((g - coeffs.eval(delta)).abs());
        }
        assert!(worst < 1e-12, "max reconstruction error {worst}");
    }

    #[test]
    fn sweep_rejects_non_increasing_grid() {
        let u = bell_matrix();
        let s = Sources::Classical(equal_fixed());
        assert!(sweep_delay(&u, &s, &[0.0, 0.0, 1.0]).is_err());
        assert!(sweep_delay(&u, &s, &[1.0, 0.5]).is_err());
    }

    #[test]
    fn sweep_examples_on_bell() {
        let u = bell_matrix();
        let q = sweep_delay(&u, &Sources::Quantum(single_photons()), &[0.0]).unwrap();
        assert!((q.points[0].1 - 1.0 / 3.0).abs() < 1e-13);

        let c = sweep_delay(&u, &Sources::Classical(equal_fixed()), &[0.0, 5.0]).unwrap();
        assert!((c.points[0].1 - 4.0 / 9.0).abs() < 1e-13);
        assert!((c.points[1].1 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn scale_invariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let u = compose_circuit(&perturb_circuit(&bell_circuit(0.9), 0.2, 5).unwrap()).unwrap();
        let o = OverlapSet::new(0.5, 0.6, 0.25, 0.7).unwrap();
        let c = Sources::Classical([
            ClassicalSourceMoments::new(1.0, 0.5, 0.2).unwrap(),
            ClassicalSourceMoments::fixed(2.0).unwrap(),
            ClassicalSourceMoments::new(3.0, 1.0, 0.4).unwrap(),
        ]);
        let q = Sources::Quantum([
            QuantumSourceMoments::new(0.7, 1.1, 2.0, 1.0).unwrap(),
            QuantumSourceMoments::single_photon(0.5).unwrap(),
            QuantumSourceMoments::poissonian(1.3, 2.0).unwrap(),
        ]);
        for sources in [&c, &q] {
            let base = g3(&u, sources, &o).unwrap();
            for _ in 0..20 {
                let z = C64::from_polar(rng.random_range(0.2..2.5), rng.random_range(0.0..6.28));
                let scaled = g3(&u.scaled(z), sources, &o).unwrap();
                assert!((scaled - base).abs() < 1e-12, "{scaled} vs {base}");
            }
        }
    }

    #[test]
    fn gauge_invariance_of_triad_phase() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let u = compose_circuit(&perturb_circuit(&bell_circuit(0.8), 0.3, 2).unwrap()).unwrap();
        let sources = Sources::Classical([
            ClassicalSourceMoments::new(1.2, 0.4, 0.1).unwrap(),
            ClassicalSourceMoments::fixed(0.8).unwrap(),
            ClassicalSourceMoments::new(2.0, 1.5, 0.3).unwrap(),
        ]);
        let (r12, r23, r31, psi) = (0.7, 0.5, 0.3, 1.1);
        let base = g3(&u, &sources, &OverlapSet::new(r12, r23, r31, psi).unwrap()).unwrap();
        for _ in 0..25 {
            let p1 = rng.random_range(-3.0..3.0);
            let p2 = rng.random_range(-3.0..3.0);
            let ov = PairOverlaps {
                c12: C64::from_polar(r12, p1),
                c23: C64::from_polar(r23, p2),
                c31: C64::from_polar(r31, psi - p1 - p2),
            };
            let redistributed = g3_with_overlap_phases(&u, &sources, &ov).unwrap();
            assert!((redistributed - base).abs() < 1e-12);
        }
    }

    #[test]
    fn permutation_covariance() {
        // Relabeling sources and permuting columns accordingly leaves g3 fixed.
        let spec = perturb_circuit(&bell_circuit(0.9), 0.4, 13).unwrap();
        let u = compose_circuit(&spec).unwrap();
        let s = [
            ClassicalSourceMoments::new(1.0, 0.2, 0.1).unwrap(),
            ClassicalSourceMoments::new(2.0, 0.0, 0.0).unwrap(),
            ClassicalSourceMoments::new(0.5, 0.9, 0.4).unwrap(),
        ];
        let o = OverlapSet::new(0.6, 0.45, 0.2, 0.8).unwrap();
        let base = g3_classical(&u, &s, &o).unwrap();
        let pair = o.phased();

        // cyclic relabeling (1,2,3) -> (2,3,1)
        let perm = [1usize, 2, 0];
        let mut pu = u.entries;
        for j in 0..3 {
            for a in 0..3 {
                pu[j][a] = u.entries[j][perm[a]];
            }
        }
        let ps = [s[perm[0]], s[perm[1]], s[perm[2]]];
        let po = PairOverlaps {
            c12: pair.overlap(perm[0], perm[1]),
            c23: pair.overlap(perm[1], perm[2]),
            c31: pair.overlap(perm[2], perm[0]),
        };
        let cycled = g3_with_overlap_phases(
            &TransferMatrix::new(pu),
            &Sources::Classical(ps),
            &po,
        )
        .unwrap();
        assert!((cycled - base).abs() < 1e-13, "{cycled} vs {base}");

        // transposition (1,2,3) -> (2,1,3)
        let perm = [1usize, 0, 2];
        let mut pu = u.entries;
        for j in 0..3 {
            for a in 0..3 {
                pu[j][a] = u.entries[j][perm[a]];
            }
        }
        let ps = [s[perm[0]], s[perm[1]], s[perm[2]]];
        let po = PairOverlaps {
            c12: pair.overlap(perm[0], perm[1]),
            c23: pair.overlap(perm[1], perm[2]),
            c31: pair.overlap(perm[2], perm[0]),
        };
        let swapped = g3_with_overlap_phases(
            &TransferMatrix::new(pu),
            &Sources::Classical(ps),
            &po,
        )
        .unwrap();
        assert!((swapped - base).abs() < 1e-13, "{swapped} vs {base}");
    }

    #[test]
    fn psi_dependence_is_a_pure_sinusoid() {
        // g3(psi) = k0 + k1 cos psi + k2 sin psi exactly; on the balanced
        // three-port the sine coefficient vanishes and the dependence reduces
        // to a pure cosine.
        let spec = perturb_circuit(&bell_circuit(0.85), 0.3, 41).unwrap();
        let u = compose_circuit(&spec).unwrap();
        let s = Sources::Classical([
            ClassicalSourceMoments::new(1.0, 0.3, 0.0).unwrap(),
            ClassicalSourceMoments::fixed(1.5).unwrap(),
            ClassicalSourceMoments::new(0.7, 0.1, 0.2).unwrap(),
        ]);
        let (r12, r23, r31) = (0.8, 0.6, 0.5);
        let at = |psi: f64| {
            g3(&u, &s, &OverlapSet::new(r12, r23, r31, psi).unwrap()).unwrap()
        };
        // fit k0, k1, k2 on three nodes
        let (g0, gp, gm) = (
            at(0.0),
            at(2.0 * core::f64::consts::PI / 3.0),
            at(-2.0 * core::f64::consts::PI / 3.0),
        );
        let k2 = (gp - gm) / 3.0f64.sqrt();
        let k1 = (2.0 * g0 - gp - gm) / 3.0;
        let k0 = g0 - k1;
        for i in 0..40 {
            let psi = -3.2 + 0.16 * i as f64;
            let predicted = k0 + k1 * psi.cos() + k2 * psi.sin();
            assert!((at(psi) - predicted).abs() < 1e-12);
        }

        let ub = bell_matrix();
        let at_bell = |psi: f64| {
            g3(&ub, &s, &OverlapSet::new(r12, r23, r31, psi).unwrap()).unwrap()
        };
        let b0 = at_bell(0.0);
        let amp = b0 - at_bell(core::f64::consts::PI / 2.0);
        for i in 0..40 {
            let psi = -3.2 + 0.16 * i as f64;
            let predicted = b0 + amp * (psi.cos() - 1.0);
            assert!((at_bell(psi) - predicted).abs() < 1e-12);
        }
    }

    #[test]
    fn delay_model_plumbs_through() {
        let u = bell_matrix();
        let model = GaussianDelayModel::new(2.0, 0.25).unwrap();
        let via_model =
            g3_classical(&u, &equal_fixed(), &crate::sources::overlaps_from_delay(&model)).unwrap();
        let via_delta =
            g3_classical(&u, &equal_fixed(), &OverlapSet::from_delta(0.5)).unwrap();
        assert_eq!(via_model, via_delta);
    }
}
