//! Exact computational toolkit for finite dimensional superalgebras given by
//! structure constants over ℚ or a prime field, with optional polynomial
//! parameters.
//!
//! The main pieces:
//!
//! * [`ring`] / [`scalar`]: coefficient rings `k[p1,…,pn]` where `k` is ℚ or
//!   GF(p), with exact sparse polynomial arithmetic. No floating point
//!   anywhere.
//! * [`algebra`]: ℤ₂-graded algebras (superalgebras) as sparse multiplication
//!   tables, plus the standard constructions (plus-algebra, quadratic
//!   extensions, block matrix gradings, subalgebras on a spanning set).
//! * [`catalog`]: ready-made simple superalgebras — matrix superalgebras,
//!   division superalgebra gradings, a characteristic 2 octonion table,
//!   the characteristic 3 alternative superalgebras B(1,2), B(4,2) and
//!   B(Γ,∂,γ), and the classical simple Jordan superalgebra families.
//! * [`identity`]: multilinear graded identities (associativity, left/right
//!   alternativity, supercommutativity, the super Jordan identity) checked
//!   exhaustively on homogeneous basis tuples, with Koszul signs.
//! * [`center`] / [`ideals`]: centers, centralizers, ideal closures and a
//!   seeded simplicity probe, all as exact linear algebra.
//! * [`proofs`]: a registry of coefficient-extraction identity sets
//!   ("proof cases") evaluated exactly over polynomial coefficient rings,
//!   with a discrepancy report for identities that only hold after a
//!   recorded emendation.
//! * [`dsl`]: a small line-oriented text format for algebra documents with a
//!   canonical serializer.
//!
//! With the default `parallel` feature the basis-tuple sweeps in [`identity`]
//! run on rayon; disabling it gives a dependency-free sequential fallback
//! with identical output.

pub mod algebra;
pub mod catalog;
pub mod center;
pub mod dsl;
pub mod error;
pub mod expr;
pub mod ideals;
pub mod identity;
pub mod linalg;
pub mod proofs;
pub mod ring;
pub mod scalar;

pub use algebra::{Element, Parity, SuperAlgebra};
pub use error::Error;
pub use ring::Ring;
pub use scalar::Scalar;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
