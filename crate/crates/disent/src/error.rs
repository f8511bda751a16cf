use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("qubit pair must be distinct, got ({0}, {0})")]
    EqualPair(usize),

    #[error("action index {action} out of range: {n_actions} pairs available")]
    ActionOutOfRange { action: usize, n_actions: usize },

    #[error("state has {len} amplitudes, expected {expected}")]
    BadStateLength { len: usize, expected: usize },

    #[error("state norm deviates from 1 by {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    #[error("matrix is not unitary: max |U U^† - I| = {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not Hermitian: max |A - A^†| = {deviation:.3e}")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("expected {expected} qubits, got {got}")]
    WrongQubitCount { expected: usize, got: usize },

    #[error("minimum support p={p} exceeds qubit count L={l}")]
    BadSupport { p: usize, l: usize },

    #[error("invalid permutation of {0} qubits")]
    BadPermutation(usize),

    #[error("noise strength must lie in [0, 1], got {0}")]
    BadNoiseStrength(f64),

    #[error("shot count must be positive (0 is reserved for exact mode)")]
    BadShotCount,

    #[error("no decaying tail found in the curve; cannot fit a decay scale")]
    NoDecay,

    #[error("all {tried} universal sequence variants failed; best terminal S_avg = {best:.3e}")]
    UniversalFailed { tried: usize, best: f64 },

    #[error("beam search exhausted depth {max_depth} without reaching the threshold; best h = {best:.3e}")]
    BeamExhausted { max_depth: usize, best: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(String),
}
