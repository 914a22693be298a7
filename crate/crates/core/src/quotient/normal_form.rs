use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{rat, Monomial, Polynomial, Rational, Variable};

/// A product X_{i1 j1} ... X_{ip jp} with distinct rows and distinct
/// columns, rows strictly increasing, carrying a sign.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedMonomialNF {
    pub sign: i8,
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl SignedMonomialNF {
    /// Reads the matrix part of a monomial. Returns `None` when the
    /// monomial is zero modulo the defining relations: a repeated
    /// indeterminate, a repeated row or a repeated column.
    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        let mut pairs = Vec::new();
        for &(v, e) in m.factors() {
            if let Variable::Matrix(i, j) = v {
                if e > 1 {
                    return None;
                }
                pairs.push((i, j));
            }
        }
        // factors are sorted by (i, j), so rows are already non-decreasing
        let rows: Vec<u32> = pairs.iter().map(|p| p.0).collect();
        if rows.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let cols: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        let mut seen = cols.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Self {
            sign: 1,
            rows,
            cols,
        })
    }

    pub fn is_canonical(&self) -> bool {
        self.cols.windows(2).all(|w| w[0] < w[1])
    }

    /// Sorts the columns by adjacent transpositions, each one applying
    /// X_ij X_i'j' = -X_ij' X_i'j.
    pub fn canonicalize(mut self) -> Self {
        let n = self.cols.len();
        for pass in 0..n {
            for k in 0..n.saturating_sub(1 + pass) {
                if self.cols[k] > self.cols[k + 1] {
                    self.cols.swap(k, k + 1);
                    self.sign = -self.sign;
                }
            }
        }
        self
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_factors(
            self.rows
                .iter()
                .zip(&self.cols)
                .map(|(&i, &j)| (Variable::Matrix(i, j), 1)),
        )
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }
}

/// Rewrites one monomial to its canonical signed form modulo the full
/// defining ideal. Non-matrix factors are carried along untouched.
pub(crate) fn rewrite_monomial(m: &Monomial) -> Option<(Monomial, Rational)> {
    let nf = SignedMonomialNF::from_monomial(m)?.canonicalize();
    let (_, rest) = m.split(Variable::is_matrix);
    Some((rest.mul(&nf.to_monomial()), rat(nf.sign as i64)))
}

/// Canonical representative of an element of k[a][X]/J. Every stored
/// monomial has distinct rows and increasing columns in its matrix part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NormalForm {
    poly: Polynomial,
}

impl NormalForm {
    pub fn as_polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Basis labels paired with their (parameter-valued) coefficients.
    pub fn components(&self) -> BTreeMap<SignedMonomialNF, Polynomial> {
        let mut out: BTreeMap<SignedMonomialNF, Polynomial> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let (x, rest) = m.split(Variable::is_matrix);
            let label = SignedMonomialNF::from_monomial(&x).expect("normal form monomial");
            out.entry(label)
                .or_default()
                .add_term(rest, c.clone());
        }
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub(crate) fn check_grid(p: &Polynomial, rows: u32, cols: u32) -> Result<()> {
    for v in p.variables() {
        if let Variable::Matrix(i, j) = v {
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::IndexOutOfRange {
                    var: v.to_string(),
                    context: format!("{rows}x{cols} grid"),
                });
            }
        }
    }
    Ok(())
}

/// Normal form of `p` modulo the ideal generated by
/// X_ij X_i'j' + X_i'j X_ij' over all index quadruples of the grid.
pub fn normal_form(p: &Polynomial, rows: u32, cols: u32) -> Result<NormalForm> {
    check_grid(p, rows, cols)?;
    Ok(NormalForm {
        poly: reduce_full(p),
    })
}

pub(crate) fn reduce_full(p: &Polynomial) -> Polynomial {
    p.map_monomials(rewrite_monomial)
}
