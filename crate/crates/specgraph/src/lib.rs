//! Spectral graph theory toolkit.
//!
//! The crate builds small graphs (named families, joined unions, power graphs
//! and zero-divisor graphs of `Z_n`), assembles the associated matrices
//! (adjacency, Laplacian, normalized Laplacian, signless Laplacian, distance,
//! distance Laplacian, distance signless Laplacian and the generalized
//! distance matrix `D_alpha`), and computes their spectra two ways: a dense
//! symmetric eigensolver, and equitable-partition / joined-union shortcut
//! theorems that assemble the spectrum from part spectra plus a small
//! quotient matrix.
//!
//! On top of that sit exact tree algorithms (characteristic polynomials and
//! congruent diagonalization over big rationals) and a verification suite for
//! eigenvalue-sum bounds (Brouwer, Grone-Merris-Bai, Laplacian energy,
//! generalized distance energy).
//!
//! Numeric kernels are generic over the scalar type via `num-traits`:
//! floating point for eigensolving, `BigInt`/`BigRational` for exact work.
//! Concrete aliases live at the crate root.
//!
//! ```
//! use specgraph::graph::{build_named, FamilySpec};
//! use specgraph::spectra::{build_matrix, eigen, laplacian_energy, MatrixKind};
//!
//! let star = build_named(&FamilySpec::Star { n: 4 }).unwrap();
//! let spec = eigen(&build_matrix(&star, MatrixKind::Laplacian, None).unwrap()).unwrap();
//! assert!((spec.values()[0] - 4.0).abs() < 1e-10);
//!
//! let (le, sigma) = laplacian_energy(&star).unwrap();
//! assert!((le - 5.0).abs() < 1e-9);
//! assert_eq!(sigma, 1);
//! ```

pub mod algebraic;
pub mod conjectures;
pub mod graph;
pub mod linalg;
pub mod quotient;
pub mod spectra;
pub mod treelab;

mod error;

pub use error::{Error, Result};

/// Exact rational scalar used wherever matrix entries are rational.
pub type Rational = num_rational::BigRational;
/// Exact integer scalar.
pub type Int = num_bigint::BigInt;

/// Dense floating-point matrix (eigensolving, normalized Laplacian).
pub type FloatMatrix = linalg::Matrix<f64>;
/// Dense exact-rational matrix.
pub type RationalMatrix = linalg::Matrix<Rational>;
/// Dense exact-integer matrix.
pub type IntMatrix = linalg::Matrix<Int>;

/// Polynomial with big-rational coefficients, ascending by degree.
pub type ExactPolynomial = linalg::Polynomial<Rational>;
/// Polynomial with big-integer coefficients, ascending by degree.
pub type IntPolynomial = linalg::Polynomial<Int>;
