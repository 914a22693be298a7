//! The quotient k[X]/J of the polynomial ring on an m×n grid of
//! indeterminates by the quadratic defining relations.

mod basis;
mod echelon;
mod ideal;
mod normal_form;

pub use basis::{
    algebra_basis, algebra_dimension, algebra_dimension_capped, rewriting_basis, BasisLabel,
    DEFAULT_SIZE_CAP,
};
pub use echelon::Echelon;
pub use ideal::{
    membership_oracle, membership_oracle_with, oracle_dimension, same_span, span_contains,
    GradedIdeal, IdealSpec, OracleCaps, OracleDimension,
};
pub use normal_form::{normal_form, NormalForm, SignedMonomialNF};
pub(crate) use normal_form::rewrite_monomial;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::ring::{Ring, RingSpec};

/// The matrix of classes [X_ij] in the quotient for `ideal`.
pub fn generic_matrix(ideal: IdealSpec) -> Result<Matrix> {
    let spec = match ideal {
        IdealSpec::FullDtilde { rows, cols } => RingSpec::GenericDtilde(rows, cols),
        IdealSpec::SpecialOnly { n } => RingSpec::GenericSpecial(n),
    };
    let ring = Ring::new(spec)?;
    let (m, n) = ideal.grid();
    Ok(Matrix::from_fn(&ring, m as usize, n as usize, |i, j| {
        ring.x(i as u32 + 1, j as u32 + 1)
    }))
}
