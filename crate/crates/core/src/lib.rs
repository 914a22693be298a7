//! Exact arithmetic for matrices with nilpotent entries over commutative
//! rings, the quotient algebra k[X]/J they generate, and a randomized and
//! symbolic checker for the algebraic facts relating them.

pub mod error;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod verifier;

pub use error::{Error, Result};
pub use matrix::{
    apply_polymap_columns, are_neighbors, beta, det, is_in_d, is_in_dtilde,
    is_infinitesimal_simplex, is_special, mat_mul, mult_trace, Matrix, MatrixDoc, PolyMap,
    PolyMapDoc,
};
pub use poly::{Monomial, Polynomial, Rational, Variable};
pub use quotient::{
    algebra_basis, algebra_dimension, generic_matrix, membership_oracle, normal_form, BasisLabel,
    IdealSpec, NormalForm, OracleCaps,
};
pub use ring::{Element, Ring, RingSpec};
pub use verifier::{
    verify, verify_all, Budget, Family, Mode, PropositionId, PropositionReport, Status,
};
