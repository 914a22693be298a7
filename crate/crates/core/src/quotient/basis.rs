use std::collections::BTreeSet;
use std::fmt;

use super::ideal::binomial;
use super::normal_form::SignedMonomialNF;
use crate::error::{Error, Result};
use crate::poly::{monomials_of_xdegree, Monomial, Variable};

pub const DEFAULT_SIZE_CAP: u32 = 5;

/// A (row-set, column-set) pair naming the class of the p×p minor on
/// those rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl BasisLabel {
    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    /// The diagonal monomial X_{i1 j1} ... X_{ip jp}, which equals the
    /// minor divided by p! in the quotient.
    pub fn representative(&self) -> Monomial {
        Monomial::from_factors(
            self.rows
                .iter()
                .zip(&self.cols)
                .map(|(&i, &j)| (Variable::Matrix(i, j), 1)),
        )
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "1");
        }
        let join = |v: &[u32]| {
            v.iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "det{{{}|{}}}", join(&self.rows), join(&self.cols))
    }
}

fn check_cap(m: u32, n: u32, cap: u32) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::ShapeMismatch(format!("grid {m}x{n} must be at least 1x1")));
    }
    if m.max(n) > cap {
        return Err(Error::CapExceeded {
            what: "grid size",
            cap: cap as usize,
            got: m.max(n) as usize,
        });
    }
    Ok(())
}

/// Σ_p C(m,p)·C(n,p).
pub fn algebra_dimension(m: u32, n: u32) -> Result<usize> {
    algebra_dimension_capped(m, n, DEFAULT_SIZE_CAP)
}

pub fn algebra_dimension_capped(m: u32, n: u32, cap: u32) -> Result<usize> {
    check_cap(m, n, cap)?;
    Ok((0..=m.min(n) as u64)
        .map(|p| binomial(m as u64, p) * binomial(n as u64, p))
        .sum::<u128>() as usize)
}

fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Basis labels ordered by degree, then row set, then column set.
pub fn algebra_basis(m: u32, n: u32) -> Result<Vec<BasisLabel>> {
    check_cap(m, n, DEFAULT_SIZE_CAP)?;
    let mut out = Vec::new();
    for p in 0..=m.min(n) as usize {
        for rows in subsets(m, p) {
            for cols in subsets(n, p) {
                out.push(BasisLabel {
                    rows: rows.clone(),
                    cols,
                });
            }
        }
    }
    Ok(out)
}

/// Distinct canonical monomials reached by rewriting every monomial of
/// degree ≤ min(m,n)+1. Counts the spanning set the rewriting system
/// produces, without reference to the closed-form count.
pub fn rewriting_basis(m: u32, n: u32) -> Result<BTreeSet<BasisLabel>> {
    check_cap(m, n, DEFAULT_SIZE_CAP)?;
    let mut out = BTreeSet::new();
    for d in 0..=m.min(n) + 1 {
        for mono in monomials_of_xdegree(m, n, d) {
            if let Some(nf) = SignedMonomialNF::from_monomial(&mono) {
                let nf = nf.canonicalize();
                out.insert(BasisLabel {
                    rows: nf.rows,
                    cols: nf.cols,
                });
            }
        }
    }
    Ok(out)
}
