//! Entanglement quantifiers for two-qubit states.
//!
//! `bineg-core` computes the concurrence, the negativity and the binegativity of
//! arbitrary 4×4 density matrices, builds the standard two-qubit state families,
//! applies amplitude-damping, phase-damping and depolarizing noise through their
//! Kraus operators, and evaluates the closed-form expressions for the evolved
//! states against that Kraus-operator oracle. It also implements Haar `U⊗U`
//! twirling, both by Monte-Carlo sampling and by the exact Werner projection.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure function of
//! its inputs; randomness is always passed in as an explicit generator.
//!
//! Layout:
//!
//! - [`qmat`]: fixed-size complex matrices, partial transpose, Jacobi eigensolver.
//! - [`measures`]: concurrence, negativity, binegativity, X-state formulas.
//! - [`states`]: Werner, Bell-diagonal, MEM, generalized MEM and `ρ_EW` families.
//! - [`channels`]: Kraus sets, channel application, closed-form final states.
//! - [`twirl`]: Haar sampling, twirling, the twirl monotonicity experiment.
//! - [`sample`]: seeded random states and unitaries.
//! - [`verify`]: the self-check suites behind the `verify` command.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod channels;
mod error;
pub mod measures;
pub mod qmat;
pub mod sample;
pub mod states;
pub mod twirl;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use qmat::{DensityMatrix4, Mat2, Mat4};
