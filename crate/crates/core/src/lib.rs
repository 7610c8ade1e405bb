//! Edge ideals of Ferrers graphs.
//!
//! A partition `λ = (λ_1, …, λ_n)` defines a bipartite Ferrers graph on row
//! vertices `x_1..x_n` and column vertices `y_1..y_m` (`m = λ_1`), with an
//! edge `(x_i, y_j)` whenever `j <= λ_i`. This crate builds the edge ideal
//! `I(G)` generated by the corresponding squarefree quadratic monomials and
//! computes its invariants:
//!
//! - [`shape`]: the partition, its diagonals, outer corners, and the key
//!   quantity `μ = max_j(λ_j + j − 1)`;
//! - [`ideal`]: generators, both prime decompositions, and membership tests;
//! - [`certificate`]: the diagonal Schmitt–Vogel certificate whose block sums
//!   `q_1..q_μ` generate `I(G)` up to radical, plus a full verifier for the
//!   certificate conditions;
//! - [`invariants`]: arithmetical rank, projective and cohomological
//!   dimension (all equal to `μ`), height, and the set-theoretic complete
//!   intersection test (true exactly for staircases);
//! - [`oracle`]: independent brute-force validation over small prime fields
//!   and over all squarefree monomials at desk scale.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so the whole API is safe to use from parallel sweeps without
//! coordination.

pub mod certificate;
pub mod ideal;
pub mod invariants;
pub mod oracle;
pub mod shape;

pub use certificate::{
    diagonal_certificate, sv_sums, verify_sv, SvCertificate, VerificationReport,
};
pub use ideal::{Monomial, Polynomial, PrimeComponent, Variable};
pub use invariants::{invariant_report, InvariantReport};
pub use shape::{Cell, CornerProfile, Partition, PartitionError};
