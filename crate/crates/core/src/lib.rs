// Indexed loops mirror the matrix algebra they implement.
#![allow(clippy::needless_range_loop)]

//! Pretty good quantum state transfer on graphs with an involution.
//!
//! A continuous-time quantum walk on a graph `G` with Hamiltonian `H = A + Q`
//! (adjacency plus a diagonal potential) admits pretty good state transfer
//! between vertices `u` and `v` when the transfer fidelity `|U(t)_{u,v}|`
//! gets arbitrarily close to 1. This crate decides and certifies that
//! property for vertex pairs swapped by an involution:
//!
//! - exact graph/potential/Hamiltonian construction ([`graph`]),
//! - involution verification and the H+/H- block split ([`involution`]),
//! - exact characteristic polynomials, gcds, and factorization ([`poly`],
//!   [`factor`]),
//! - high-precision eigendecomposition and eigenvector classification
//!   ([`spectral`]),
//! - integer-relation detection among eigenvalues and the parity test
//!   ([`relations`], [`certify`]),
//! - time-domain evolution and fidelity search ([`dynamics`]),
//! - closed forms for paths ([`paths`]).

pub mod certify;
pub mod dynamics;
pub mod error;
pub mod factor;
pub mod graph;
pub mod involution;
pub mod paths;
pub mod poly;
pub mod precision;
pub mod quad;
pub mod relations;
pub mod spectral;
pub mod value;

pub use error::{Error, Result};
