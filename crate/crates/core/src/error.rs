use thiserror::Error;

/// Errors produced by correlation evaluation and model construction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An output port receives zero mean intensity, so the normalized
    /// correlation function is undefined. Ports are numbered 1..=3.
    #[error("dark output port {port}")]
    DarkPort { port: usize },

    /// The requested pairwise overlaps admit no set of mode vectors: the
    /// associated Gram matrix has a negative eigenvalue.
    #[error("unrealizable overlaps: Gram matrix eigenvalue {min_eigenvalue:e}")]
    UnrealizableOverlaps { min_eigenvalue: f64 },

    /// A Fock-space enumeration would need more photons than the configured cap.
    #[error("truncation too small: joint photon support {required} exceeds n_max {n_max}")]
    TruncationTooSmall { required: usize, n_max: usize },

    /// `y_min = sqrt(C/A)` requires a positive cubic leading coefficient.
    #[error("stationary point undefined: leading coefficient A must be positive")]
    StationaryPointUndefined,

    /// A parameter fails its domain check (range, finiteness, normalization).
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
