use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{Monomial, Polynomial, Rational};

/// Sparse row-echelon basis of a finite-dimensional space of polynomials.
///
/// Each stored row is keyed by its leading (largest) monomial and has
/// leading coefficient 1. The set of keys is an invariant of the spanned
/// subspace, so [`Echelon::reduce`] yields a canonical representative of
/// every coset.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<Monomial, Polynomial>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows(rows: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut e = Self::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.pivots.keys()
    }

    /// Adds a row; returns `true` when it enlarged the span.
    pub fn insert(&mut self, mut row: Polynomial) -> bool {
        while let Some((lead, c)) = row.leading() {
            match self.pivots.get(lead) {
                Some(p) => {
                    let c = c.clone();
                    row = &row - &p.scale(&c);
                }
                None => {
                    let inv = Rational::one() / c;
                    let key = lead.clone();
                    self.pivots.insert(key, row.scale(&inv));
                    return true;
                }
            }
        }
        false
    }

    /// The unique element of `p + span` supported on non-pivot monomials.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut todo: BTreeMap<Monomial, Rational> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut out = Polynomial::zero();
        while let Some((m, c)) = todo.pop_last() {
            match self.pivots.get(&m) {
                Some(row) => {
                    // the leading term cancels `m`; the rest is strictly smaller
                    for (m2, c2) in row.terms().rev().skip(1) {
                        let e = todo.entry(m2.clone()).or_insert_with(Rational::zero);
                        *e -= &c * c2;
                        if e.is_zero() {
                            todo.remove(m2);
                        }
                    }
                }
                None => out.add_term(m, c),
            }
        }
        out
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn rank_and_membership() {
        let e = Echelon::from_rows([p("X11 + X12"), p("X12 - X21"), p("X11 + X21")]);
        // third row = first - second
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&p("2*X11 + X12 + X21")));
        assert!(!e.contains(&p("X11")));
    }

    #[test]
    fn reduction_is_canonical() {
        let e = Echelon::from_rows([p("X11*X22 + X12*X21")]);
        let a = e.reduce(&p("X12*X21 + X11^2"));
        let b = e.reduce(&p("-X11*X22 + X11^2"));
        assert_eq!(a, b);
        assert_eq!(e.reduce(&a), a);
    }
}
