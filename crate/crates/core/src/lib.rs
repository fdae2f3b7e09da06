//! Third-order intensity correlations of three independent light sources
//! behind a three-mode linear optical interferometer.
//!
//! The crate evaluates the closed-form normalized correlation
//! `g3 = <I1 I2 I3> / (<I1><I2><I3>)` for two source models sharing one
//! engine — classical fields with random phases, and quantum states diagonal
//! in the Fock basis — then reduces the delay dependence of `g3` to four
//! exponentials and classifies the dip shape (plain dip, revival,
//! dip-in-revival). A revival under sub-Poissonian sources is the
//! nonclassicality signature this toolkit exists to certify.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable default
//! features to drop `std`. IO, file formats, Monte Carlo and Fock-space
//! reference oracles live in the companion `tricorr` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod cubic;
mod error;
mod linalg;

pub mod correlation;
pub mod interferometer;
pub mod seeding;
pub mod shape;
pub mod sources;

pub use correlation::{
    g3, g3_classical, g3_quantum, g3_with_overlap_phases, shape_coefficients, sweep_delay,
    ShapeCoefficients, Sources, SweepCurve, DARK_PORT_EPS,
};
pub use error::{Error, Result};
pub use interferometer::{
    bell_circuit, bell_matrix, compose_circuit, perturb_circuit, validate_physical, CircuitElement,
    CircuitSpec, PhysicalityReport, TransferMatrix, UNITARY_TOL,
};
pub use linalg::{hermitian_eigen, permanent3, singular_values, Mat3, C64};
pub use seeding::stream_seed;
pub use shape::{
    analytic_no_revival, classical_bell_coeffs, classify, quantum_bell_coeffs,
    simplex_h1_form, verify_simplex_nonnegativity, ymin_and_h1, RevivalClass, SimplexAudit,
    Verdict, CLASSIFY_TOL,
};
pub use sources::{
    embed_overlaps, mandel_mu, overlaps_from_delay, ClassicalSourceMoments, GaussianDelayModel,
    OverlapSet, PairOverlaps, QuantumSourceMoments, GRAM_PSD_TOL,
};
