//! Disentangling circuits for multiqubit pure states.
//!
//! Everything is built around one primitive: the *locally optimal* two-qubit
//! gate, obtained by diagonalizing a pair's reduced density matrix with
//! eigenvalues in descending order. On top of it sit
//!
//! - exact statevector / density-matrix simulation and entanglement metrics
//!   ([`state`], [`density`], [`metrics`]),
//! - deterministic gate synthesis and the universal 3- and 4-qubit
//!   disentangling sequences ([`synth`]),
//! - a batched Markov environment ([`env`]) driving a PPO-trained
//!   permutation-equivariant transformer policy ([`net`], [`ppo`]),
//! - random/greedy/RL episode runners and ensemble statistics ([`bench`]),
//! - offline beam-search planning ([`beam`]),
//! - shot-based pair tomography and noisy protocol evaluation ([`tomo`]).
//!
//! Qubits are indexed `1..=L` and the basis is big-endian: qubit 1 owns the
//! most significant bit of an amplitude index.

pub mod error;
pub mod linalg;
pub mod pairs;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
