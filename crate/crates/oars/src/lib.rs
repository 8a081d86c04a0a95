//! Construction, verification, measurement, and run-size lower bounds for
//! orthogonal arrays and their space-filling derivatives.
//!
//! The crate is organized around a small set of value types:
//!
//! - [`galois::GaloisField`] — exact arithmetic over GF(q), q <= 64
//! - [`oa::OrthogonalArray`] — the central N x k array type with strength
//!   verification, projection, level collapsing, and a plain-text
//!   interchange format
//! - [`metrics::SignedTwoLevelView`] — J-characteristics, generalized
//!   resolution, and the regularity test for two-level designs
//! - [`bounds`] — Rao's bound and the Delsarte linear-programming bound
//!   over exact rationals
//! - [`construct`] — difference schemes, Hadamard families, Rao-Hamming
//!   arrays, Kronecker-style compositions, and the Latin-square / block
//!   design conversions
//! - [`codes`] — linear codes over GF(s) and the code/array duality
//! - [`spacefill`] — orthogonal-array-based Latin hypercubes, the
//!   rotation construction, and verifiers for sliced, nested, strong,
//!   and grouped arrays
//! - [`integrate`] — a Monte Carlo harness comparing random, Latin
//!   hypercube, and array-based Latin hypercube sampling
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `oars` binary for a scriptable command-line front end.

pub mod bounds;
pub mod codes;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod galois;
pub mod integrate;
pub mod metrics;
pub mod oa;
pub mod simplex;
pub mod spacefill;

pub use error::{Error, Result};
pub use oa::{LevelCollapseMap, OrthogonalArray};
