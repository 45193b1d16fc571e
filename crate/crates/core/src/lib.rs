//! Exact-arithmetic toolkit for free polyhedra over ground sets, relative
//! convexity and Helly numbers.
//!
//! The crate is organized around a small number of kernels:
//!
//! - [`ratgeom`]: rational linear algebra and polyhedra (exact LP with
//!   certificates, hull membership, facets, dimensions, projections);
//! - [`sconvex`]: relative convexity over finite ground sets and exact Helly
//!   numbers of finite families;
//! - [`sfree`]: freeness tests, the blocking/redundancy maximalization
//!   procedure and maximality certificates;
//! - [`separation`]: facet-preserving separation of polyhedra;
//! - [`structured`]: lattices, the parity argument, witness families,
//!   Minkowski truncations, mixed-integer freeness and bound reports;
//! - [`io`]: the JSON instance formats shared with the command-line tool.
//!
//! All geometry is generic over an exact scalar (see [`scalar::Scalar`]);
//! the concrete aliases below fix the arbitrary-precision rational used
//! throughout the CLI and the test suites.

pub mod error;
pub mod io;
pub mod ratgeom;
pub mod scalar;
pub mod sconvex;
pub mod separation;
pub mod sfree;
pub mod structured;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational: the default scalar everywhere.
pub type Rat = num_rational::BigRational;

pub type RPoint = ratgeom::Point<Rat>;
pub type RConstraint = ratgeom::LinearConstraint<Rat>;
pub type RPolyhedron = ratgeom::HPolyhedron<Rat>;
pub type RStrictSystem = ratgeom::StrictSystem<Rat>;
pub type RPointSet = sconvex::FinitePointSet<Rat>;
pub type RUnion = sfree::PolytopeUnion<Rat>;
pub type RLattice = structured::Lattice<Rat>;
