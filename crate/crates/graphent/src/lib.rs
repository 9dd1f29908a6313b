//! Graph states built from controlled-phase gates on identical one-qubit
//! product states, and the geometric measure of entanglement of each qubit
//! with the rest of the register.
//!
//! The crate provides three independent routes to the same quantity:
//!
//! * [`analytic`] — the closed form `E = ½(1 − |⟨σ⟩|)` evaluated from the
//!   vertex degree and the preparation angles alone;
//! * [`statevector`] — exact dense simulation with Pauli expectations summed
//!   over amplitudes;
//! * the reduced-density-matrix route (partial trace, largest eigenvalue),
//!   which realizes the minimal Fubini–Study distance directly.
//!
//! On top of those, [`measurement`] emulates the shot-based experiment
//! (basis pre-rotations, seeded Bernoulli sampling, readout flips, and
//! stochastic Pauli gate noise driven by a device calibration file) and
//! [`circuit`] builds the preparation protocols and serializes them as
//! OpenQASM 2.0.
//!
//! ```
//! use graphent::graph::{generate_named, NamedGraph};
//! use graphent::statevector::{PrepParams, StateVector};
//! use std::f64::consts::{FRAC_PI_2, PI};
//!
//! let g = generate_named(NamedGraph::Chain, 5).unwrap();
//! let p = PrepParams::new(PI, 0.0, FRAC_PI_2).unwrap();
//! let state = StateVector::graph_state(&g, &p).unwrap();
//! let e = state.exact_entanglement(0).unwrap();
//! assert!((e - 0.5).abs() < 1e-12);
//! assert!((e - graphent::analytic::entanglement(1, PI, FRAC_PI_2)).abs() < 1e-10);
//! ```

pub mod analytic;
pub mod circuit;
pub mod gates;
pub mod graph;
pub mod measurement;
pub mod statevector;

use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input (edge lists, calibration files, dumps).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// An argument violates a documented precondition.
    #[error("{0}")]
    Invalid(String),
    /// Qubit index outside the register.
    #[error("qubit {qubit} out of range for a {n_qubits}-qubit state")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    /// Vertex index outside the graph.
    #[error("vertex {vertex} out of range for a graph on {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    /// Statevector would exceed the configured qubit cap.
    #[error("{requested} qubits exceeds the configured cap of {cap}")]
    TooManyQubits { requested: usize, cap: usize },
    /// The circuit cannot be serialized in the requested format.
    #[error("cannot export: {0}")]
    Export(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
