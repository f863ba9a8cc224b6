//! Grover walks on finite graphs with one absorbing tail per vertex.
//!
//! A walker distribution lives on the arcs of a finite symmetric digraph.
//! Each step scatters amplitudes through the Grover coin at every vertex
//! while one unit of amplitude flows in from the tail attached to that
//! vertex and whatever leaves onto a tail never returns. Restricted to
//! the internal graph the dynamics is affine, `psi -> E psi + rho`, with
//! a strictly contracting `E`, so it converges to a stationary state.
//!
//! The crate provides:
//!
//! - [`graph`]: validated symmetric digraphs and the standard families
//!   (cycles, complete graphs, circulants, edge lists).
//! - [`operators`]: the coin, adjacency/incidence/shift matrices, the
//!   truncated arc-space evolution, the doubled vertex-space evolution it
//!   intertwines with, and a Jacobi eigendecomposition with grouped
//!   eigenprojections.
//! - [`walk`]: the dynamics itself — trajectories, stationary states,
//!   vertex measures, the total-variance distance (with a brute-force
//!   subset oracle), closed forms for regular graphs, and the
//!   convergence speed with its analytic bounds.
//! - [`sweep`]: experiment sweeps over graph families with CSV output.
//! - [`verify`]: an aggregated identity-check suite for any graph.

pub mod error;
pub mod graph;
pub mod linalg;
pub mod operators;
pub mod sweep;
pub mod text;
pub mod verify;
pub mod walk;

pub use error::{ConfigError, GraphError, LinalgError, OperatorError, WalkError};
pub use graph::{Arc, Digraph};
pub use linalg::DenseMatrix;
pub use operators::SpectralDecomposition;
pub use sweep::{ExperimentConfig, GraphFamily, SpeedRecord};
pub use verify::{IdentityCheck, SkippedCheck, VerifyReport};
pub use walk::{ArcField, SpeedBounds, Trajectory, VertexMeasure};
