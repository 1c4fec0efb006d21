//! N-qubit Pauli operators as the points of the symplectic polar space W(2N-1, 2).
//!
//! Discarding phases, the `4^N - 1` non-identity Pauli operators on N qubits are the
//! nonzero vectors of V(2N, 2), and two operators commute exactly when their vectors
//! are orthogonal under the standard alternating form. Under this dictionary:
//!
//! - maximally commuting subsets are the generators (rank-N totally isotropic
//!   subspaces), `(2+1)(2^2+1)...(2^N+1)` of them, each with `2^N - 1` points;
//! - partitions of all operators into such subsets are the spreads, with `2^N + 1`
//!   blocks;
//! - every operator anticommutes with exactly `2^(2N-1)` others.
//!
//! This crate enumerates those objects and checks each count against its closed form,
//! with an exact matrix oracle standing behind the commutation rule.
//!
//! ```
//! use wpolar::pauli::{commutes, commutes_matrix, PauliOperator};
//!
//! let xx: PauliOperator = "XX".parse().unwrap();
//! let zz: PauliOperator = "ZZ".parse().unwrap();
//! assert!(commutes(&xx, &zz).unwrap());
//! assert!(commutes_matrix(&xx, &zz).unwrap());
//! ```

pub mod error;
pub mod export;
pub mod field;
pub mod gf2;
pub mod pauli;
pub mod polar;
pub mod report;

pub use error::{Error, Result};
pub use gf2::{perp_census, rref, sp_form, Subspace, SymplecticVector, MAX_QUBITS};
pub use pauli::{commutes, commutes_matrix, PauliOperator};
pub use polar::{desarguesian_spread, enumerate_generators, enumerate_spreads, params, PolarSpaceParams, Spread};
pub use report::{verify, VerificationReport};
