//! Hermitian adjacency spectra of digraphs and mixed graphs.
//!
//! A digraph is stored as a table of unordered-pair states (none / arc /
//! reverse arc / digon); its Hermitian adjacency matrix has entry 1 on
//! digons, `i` on forward arcs and `-i` on backward arcs. This crate
//! computes exact integer characteristic polynomials, numeric spectra,
//! spectrum-preserving switching operations, theorem-level certificates,
//! and isomorph-free censuses of all digraphs of small order.
//!
//! The exact kernels (`scalar`, `poly`, `matrix`) are generic over the
//! integer scalar via `num-traits`; the concrete aliases below pin the
//! arbitrary-precision instantiations used by the public API.

pub mod analysis;
pub mod canon;
pub mod codec;
pub mod digraph;
pub mod enumerate;
pub mod family;
pub mod hermitian;
pub mod jacobi;
pub mod matrix;
pub mod poly;
pub mod sachs;
pub mod scalar;
pub mod switching;
pub mod verify;

pub use digraph::{DegreeProfile, Digraph, Graph, PairState};
pub use family::Family;

/// Gaussian integer with arbitrary-precision components.
pub type GaussianInt = scalar::Gaussian<num_bigint::BigInt>;

/// Exact rational Gaussian number (used by quotient matrices).
pub type GaussianRational = scalar::Gaussian<num_rational::BigRational>;

/// Dense matrix over arbitrary-precision Gaussian integers; the Hermitian
/// adjacency matrix lives here.
pub type HermitianMatrix = matrix::Matrix<GaussianInt>;

/// Monic integer characteristic polynomial, the cospectrality key.
pub type CharPoly = poly::Poly<num_bigint::BigInt>;

/// Exact rational polynomial (Sturm chains, square-free decompositions).
pub type RationalPoly = poly::Poly<num_rational::BigRational>;

/// Default numeric tolerance for eigenvalue clustering and comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;
