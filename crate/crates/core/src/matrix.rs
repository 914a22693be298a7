//! Dense matrices over any [`Ring`], with the nilpotency predicates.
//!
//! Vectors are plain slices of elements; a 1×n or n×1 [`Matrix`] is
//! accepted wherever the predicate is phrased on matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Variable};
use crate::ring::{Element, Ring};

pub const DET_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl Matrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Element>) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(format!("{rows}x{cols} matrix is empty")));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch(e.ring().to_string(), ring.to_string()));
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Element) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(ring, rows, cols, entries).expect("from_fn produces a well-formed matrix")
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Element>>) -> Result<Matrix> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Matrix::new(ring, m, n, rows.into_iter().flatten().collect())
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        Matrix::from_fn(ring, n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Zero-based access.
    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Element) {
        assert_eq!(e.ring(), &self.ring);
        self.entries[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> Vec<Element> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Element> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vectors(&self) -> Vec<Vec<Element>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn with_row_appended(&self, row: &[Element]) -> Result<Matrix> {
        if row.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "appending a length-{} row to a {}-column matrix",
                row.len(),
                self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(row);
        Matrix::new(&self.ring, self.rows + 1, self.cols, entries)
    }

    /// X^σ: column j of the result is column σ(j) of `self`.
    pub fn permute_cols(&self, sigma: &[usize]) -> Matrix {
        assert_eq!(sigma.len(), self.cols);
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, sigma[j]).clone())
    }

    pub fn permute_rows(&self, sigma: &[usize]) -> Matrix {
        assert_eq!(sigma.len(), self.rows);
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(sigma[i], j).clone())
    }

    pub fn map(&self, f: impl Fn(&Element) -> Element) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// Moves every entry into `target` (see [`Element::lift`]).
    pub fn lift(&self, target: &Ring) -> Result<Matrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.lift(target))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(target, self.rows, self.cols, entries)
    }

    pub fn is_vector(&self) -> bool {
        self.rows == 1 || self.cols == 1
    }

    /// Entries of a 1×n or n×1 matrix.
    pub fn as_vector(&self) -> Result<&[Element]> {
        if self.is_vector() {
            Ok(&self.entries)
        } else {
            Err(Error::ShapeMismatch(format!(
                "expected a vector, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            ring: self.ring.to_string(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .row_vectors()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn from_doc(doc: &MatrixDoc) -> Result<Matrix> {
        let ring = Ring::parse(&doc.ring)?;
        if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
            return Err(Error::Document(format!(
                "entries do not form a {}x{} grid",
                doc.rows, doc.cols
            )));
        }
        let rows = doc
            .entries
            .iter()
            .map(|r| r.iter().map(|s| ring.parse_element(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(&ring, rows)
    }

    pub fn from_json(s: &str) -> Result<Matrix> {
        let doc: MatrixDoc =
            serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))?;
        Matrix::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("matrix doc serializes")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// On-disk matrix format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub ring: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

fn same_len(x: &[Element], y: &[Element]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::ShapeMismatch(format!(
            "vectors of length {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(())
}

/// x_j · x_j' = 0 for all j, j'.
pub fn vector_in_d(x: &[Element]) -> bool {
    (0..x.len()).all(|j| (j..x.len()).all(|k| (&x[j] * &x[k]).is_zero()))
}

/// Membership of a 1×n or n×1 matrix in D(n).
pub fn is_in_d(x: &Matrix) -> Result<bool> {
    Ok(vector_in_d(x.as_vector()?))
}

/// All defining equations x_ij x_i'j' + x_i'j x_ij' = 0. Vectors fall back
/// to D(n).
pub fn is_in_dtilde(x: &Matrix) -> bool {
    if x.is_vector() {
        return vector_in_d(&x.entries);
    }
    // The equation is symmetric under i <-> i' and under j <-> j'.
    let (m, n) = x.shape();
    for i in 0..m {
        for i2 in i..m {
            for j in 0..n {
                for j2 in j..n {
                    if !defining_equation(x, i, i2, j, j2).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub(crate) fn defining_equation(x: &Matrix, i: usize, i2: usize, j: usize, j2: usize) -> Element {
    &(x.get(i, j) * x.get(i2, j2)) + &(x.get(i2, j) * x.get(i, j2))
}

/// Every defining equation of D̃ as an element, in a fixed order.
pub fn dtilde_equations(x: &Matrix) -> Vec<Element> {
    if x.is_vector() {
        let v = &x.entries;
        let mut out = Vec::new();
        for j in 0..v.len() {
            for k in j..v.len() {
                out.push(&v[j] * &v[k]);
            }
        }
        return out;
    }
    let (m, n) = x.shape();
    let mut out = Vec::new();
    for i in 0..m {
        for i2 in i..m {
            for j in 0..n {
                for j2 in j..n {
                    out.push(defining_equation(x, i, i2, j, j2));
                }
            }
        }
    }
    out
}

/// The defining equations restricted to i ≠ i', j ≠ j'.
pub fn is_special(x: &Matrix) -> Result<bool> {
    let (m, n) = x.shape();
    if m < 2 || n < 2 {
        return Err(Error::ShapeMismatch(format!(
            "special matrices need at least 2x2, got {m}x{n}"
        )));
    }
    for i in 0..m {
        for i2 in i + 1..m {
            for j in 0..n {
                for j2 in j + 1..n {
                    if !defining_equation(x, i, i2, j, j2).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

pub fn vector_sub(x: &[Element], y: &[Element]) -> Result<Vec<Element>> {
    same_len(x, y)?;
    Ok(x.iter().zip(y).map(|(a, b)| a - b).collect())
}

/// x − y ∈ D(n).
pub fn are_neighbors(x: &[Element], y: &[Element]) -> Result<bool> {
    Ok(vector_in_d(&vector_sub(x, y)?))
}

/// Pairwise neighbours. A single point (or none) is a simplex.
pub fn is_infinitesimal_simplex(points: &[Vec<Element>]) -> Result<bool> {
    if let Some(first) = points.first() {
        for p in points {
            same_len(first, p)?;
        }
    }
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            if !are_neighbors(&points[a], &points[b])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// β(x, y) with jj' entry x_j y_j' + x_j' y_j, in row-major jj' order.
pub fn beta(x: &[Element], y: &[Element]) -> Result<Vec<Element>> {
    same_len(x, y)?;
    let n = x.len();
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            out.push(&(&x[j] * &y[k]) + &(&x[k] * &y[j]));
        }
    }
    Ok(out)
}

pub fn mat_mul(p: &Matrix, x: &Matrix) -> Result<Matrix> {
    if p.cols != x.rows {
        return Err(Error::ShapeMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            p.rows, p.cols, x.rows, x.cols
        )));
    }
    if p.ring != x.ring {
        return Err(Error::RingMismatch(p.ring.to_string(), x.ring.to_string()));
    }
    let ring = &p.ring;
    Ok(Matrix::from_fn(ring, p.rows, x.cols, |i, j| {
        (0..p.cols).fold(ring.zero(), |acc, k| &acc + &(p.get(i, k) * x.get(k, j)))
    }))
}

/// Matrix times column vector.
pub fn mat_vec(p: &Matrix, v: &[Element]) -> Result<Vec<Element>> {
    if p.cols != v.len() {
        return Err(Error::ShapeMismatch(format!(
            "cannot apply {}x{} to a length-{} vector",
            p.rows,
            p.cols,
            v.len()
        )));
    }
    let ring = &p.ring;
    Ok((0..p.rows)
        .map(|i| (0..p.cols).fold(ring.zero(), |acc, k| &acc + &(p.get(i, k) * &v[k])))
        .collect())
}

/// All permutations of 0..n with their signs, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
        let n = used.len();
        if cur.len() == n {
            let inversions = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| cur[a] > cur[b])
                .count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Σ_σ sign(σ) Π_i entry(i, σ(i)), over any type with ring operators.
pub fn leibniz<T>(n: usize, entry: impl Fn(usize, usize) -> T, zero: T) -> T
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    let mut acc = zero;
    for (sigma, sign) in permutations(n) {
        let mut term = entry(0, sigma[0]);
        for (i, &s) in sigma.iter().enumerate().skip(1) {
            term = &term * &entry(i, s);
        }
        acc = if sign > 0 { &acc + &term } else { &acc + &(-&term) };
    }
    acc
}

fn square(x: &Matrix) -> Result<usize> {
    if x.rows != x.cols {
        return Err(Error::ShapeMismatch(format!(
            "expected a square matrix, got {}x{}",
            x.rows, x.cols
        )));
    }
    Ok(x.rows)
}

/// Leibniz determinant; no division is used, so zero divisors are fine.
pub fn det(x: &Matrix) -> Result<Element> {
    let n = square(x)?;
    if n > DET_CAP {
        return Err(Error::CapExceeded {
            what: "determinant size",
            cap: DET_CAP,
            got: n,
        });
    }
    Ok(leibniz(n, |i, j| x.get(i, j).clone(), x.ring.zero()))
}

/// Product of the diagonal entries.
pub fn mult_trace(x: &Matrix) -> Result<Element> {
    let n = square(x)?;
    Ok((0..n).fold(x.ring.one(), |acc, i| &acc * x.get(i, i)))
}

/// The generic determinant as a polynomial in the free algebra Q[X].
pub fn generic_det_polynomial(n: u32) -> Polynomial {
    leibniz(
        n as usize,
        |i, j| Polynomial::x(i as u32 + 1, j as u32 + 1),
        Polynomial::zero(),
    )
}

/// A 0-preserving polynomial map R^domain → R^codomain.
///
/// Components are polynomials in the inputs `u1..u_domain`; any other
/// variables (parameters, nilpotent generators, matrix classes) act as
/// coefficients and must exist in the ring the map is applied over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    domain: usize,
    codomain: usize,
    components: Vec<Polynomial>,
}

fn input_degree(m: &crate::poly::Monomial) -> u32 {
    m.factors()
        .iter()
        .filter(|(v, _)| matches!(v, Variable::Input(_)))
        .map(|(_, e)| e)
        .sum()
}

impl PolyMap {
    pub fn new(domain: usize, components: Vec<Polynomial>) -> Result<PolyMap> {
        if domain == 0 || components.is_empty() {
            return Err(Error::ShapeMismatch("polynomial map needs positive dimensions".into()));
        }
        for (k, c) in components.iter().enumerate() {
            for v in c.variables() {
                if let Variable::Input(r) = v {
                    if r as usize > domain {
                        return Err(Error::IndexOutOfRange {
                            var: v.to_string(),
                            context: format!("map with domain dimension {domain}"),
                        });
                    }
                }
            }
            if c.terms().any(|(m, _)| input_degree(m) == 0) {
                return Err(Error::Document(format!(
                    "component {} has a constant term; the map must preserve 0",
                    k + 1
                )));
            }
        }
        Ok(PolyMap {
            domain,
            codomain: components.len(),
            components,
        })
    }

    /// The linear map with the given matrix.
    pub fn linear(g: &Matrix) -> PolyMap {
        let components = (0..g.rows())
            .map(|i| {
                (0..g.cols())
                    .map(|j| g.get(i, j).value() * &Polynomial::var(Variable::Input(j as u32 + 1)))
                    .sum()
            })
            .collect();
        PolyMap {
            domain: g.cols(),
            codomain: g.rows(),
            components,
        }
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .flat_map(|c| c.terms().map(|(m, _)| input_degree(m)))
            .max()
            .unwrap_or(0)
    }

    /// The part of the map that is homogeneous of degree `k` in the inputs.
    pub fn homogeneous_part(&self, k: u32) -> PolyMap {
        PolyMap {
            domain: self.domain,
            codomain: self.codomain,
            components: self
                .components
                .iter()
                .map(|c| Polynomial::from_terms(
                    c.terms()
                        .filter(|(m, _)| input_degree(m) == k)
                        .map(|(m, q)| (m.clone(), q.clone())),
                ))
                .collect(),
        }
    }

    pub fn apply(&self, ring: &Ring, u: &[Element]) -> Result<Vec<Element>> {
        if u.len() != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "map with domain {} applied to a length-{} vector",
                self.domain,
                u.len()
            )));
        }
        self.components
            .iter()
            .map(|c| {
                let mut acc = ring.zero();
                for (m, q) in c.terms() {
                    let (inputs, rest) = m.split(|v| matches!(v, Variable::Input(_)));
                    let mut term = ring.element(&Polynomial::term(q.clone(), rest))?;
                    for &(v, e) in inputs.factors() {
                        if let Variable::Input(r) = v {
                            term = &term * &u[r as usize - 1].pow(e);
                        }
                    }
                    acc = &acc + &term;
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn to_doc(&self) -> PolyMapDoc {
        PolyMapDoc {
            domain: self.domain,
            codomain: self.codomain,
            components: self.components.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_doc(doc: &PolyMapDoc) -> Result<PolyMap> {
        if doc.components.len() != doc.codomain {
            return Err(Error::Document(format!(
                "{} components for codomain {}",
                doc.components.len(),
                doc.codomain
            )));
        }
        let comps = doc
            .components
            .iter()
            .map(|s| Polynomial::parse(s))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(doc.domain, comps)
    }

    pub fn from_json(s: &str) -> Result<PolyMap> {
        let doc: PolyMapDoc =
            serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))?;
        PolyMap::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("polymap doc serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyMapDoc {
    pub domain: usize,
    pub codomain: usize,
    pub components: Vec<String>,
}

/// g·X: `g` applied to each column of `x`.
pub fn apply_polymap_columns(g: &PolyMap, x: &Matrix) -> Result<Matrix> {
    if g.domain != x.rows {
        return Err(Error::ShapeMismatch(format!(
            "map with domain {} applied to columns of length {}",
            g.domain, x.rows
        )));
    }
    let cols = x
        .col_vectors()
        .iter()
        .map(|c| g.apply(&x.ring, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(&x.ring, g.codomain, x.cols, |i, j| cols[j][i].clone()))
}

/// n! as an element.
pub fn factorial(ring: &Ring, n: usize) -> Element {
    let f: u64 = (1..=n as u64).product();
    ring.from_int(f.to_i64().expect("small factorial"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(ring: &str, rows: &[&[&str]]) -> Matrix {
        let r = Ring::parse(ring).unwrap();
        Matrix::from_rows(
            &r,
            rows.iter()
                .map(|row| row.iter().map(|s| r.parse_element(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn generic(m: u32, n: u32) -> Matrix {
        let r = Ring::parse(&format!("gdt:{m}:{n}")).unwrap();
        Matrix::from_fn(&r, m as usize, n as usize, |i, j| r.x(i as u32 + 1, j as u32 + 1))
    }

    #[test]
    fn d_membership() {
        assert!(is_in_d(&mat("nil:Q:2", &[&["e1", "e2"]])).unwrap());
        assert!(!is_in_d(&mat("nil:Q:2", &[&["e1", "1"]])).unwrap());
        let g = generic(2, 2);
        assert!(vector_in_d(&g.row(0)));
        assert!(is_in_d(&g).is_err());
    }

    #[test]
    fn dtilde_membership() {
        for (m, n) in [(2, 2), (2, 3), (3, 4)] {
            let all_d = mat("nil:Q:1", &vec![vec!["e1"; n].as_slice(); m]);
            assert!(is_in_dtilde(&all_d));
        }
        assert!(is_in_dtilde(&generic(2, 2)));
        assert!(!is_in_dtilde(&mat("Q", &[&["1", "-1"], &["1", "1"]])));
        assert!(is_in_dtilde(&generic(1, 3)));
    }

    #[test]
    fn special_predicate() {
        assert!(is_special(&mat("Q", &[&["1", "-1"], &["1", "1"]])).unwrap());
        assert!(is_special(&generic(2, 2)).unwrap());
        assert!(!is_special(&mat("Q", &[&["1", "0"], &["0", "1"]])).unwrap());
        assert!(is_special(&mat("Q", &[&["1", "0"]])).is_err());
    }

    #[test]
    fn neighbors_and_simplices() {
        let r = Ring::parse("nil:Q:2").unwrap();
        let v = vec![r.nil_gen(1), r.from_int(3)];
        assert!(are_neighbors(&v, &v).unwrap());
        assert!(are_neighbors(&[r.nil_gen(1), r.zero()], &[r.zero(), r.nil_gen(2)]).unwrap());
        let q = Ring::rationals();
        assert!(!are_neighbors(&[q.one(), q.zero()], &[q.zero(), q.zero()]).unwrap());
        assert!(are_neighbors(&[q.one()], &[q.one(), q.zero()]).is_err());

        let g = generic(2, 3);
        let mut pts = g.row_vectors();
        pts.push(vec![g.ring().zero(); 3]);
        assert!(is_infinitesimal_simplex(&pts).unwrap());
        assert!(is_infinitesimal_simplex(&[vec![q.one(), q.one()]]).unwrap());
        let z = q.zero();
        let o = q.one();
        assert!(!is_infinitesimal_simplex(&[
            vec![z.clone(), z.clone()],
            vec![o.clone(), z.clone()],
            vec![z, o]
        ])
        .unwrap());
    }

    #[test]
    fn beta_examples() {
        let q = Ring::rationals();
        let b = beta(&[q.one(), q.zero()], &[q.zero(), q.one()]).unwrap();
        let s: Vec<String> = b.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["0", "1", "1", "0"]);

        let g = generic(2, 2);
        assert!(beta(&g.row(0), &g.row(1)).unwrap().iter().all(Element::is_zero));

        let r = Ring::parse("nil:nil:Q:1:1").unwrap();
        let x = vec![&r.nil_gen(1) + &r.nil_gen(2), r.nil_gen(2)];
        let bxx = beta(&x, &x).unwrap();
        for j in 0..2 {
            for k in 0..2 {
                let twice = &(&x[j] * &x[k]) + &(&x[j] * &x[k]);
                assert_eq!(bxx[j * 2 + k], twice);
            }
        }
    }

    #[test]
    fn products() {
        let g = generic(2, 2);
        let r = g.ring().clone();
        assert_eq!(mat_mul(&Matrix::identity(&r, 2), &g).unwrap(), g);
        assert!(mat_mul(&g, &generic(3, 3).lift(&r).unwrap_or_else(|_| g.clone())).is_ok());
        let q = Ring::rationals();
        assert!(mat_mul(&Matrix::identity(&q, 2), &Matrix::identity(&q, 3)).is_err());
    }

    #[test]
    fn determinants() {
        let g = generic(2, 2);
        assert_eq!(det(&g).unwrap().to_string(), "2*X11*X22");
        assert_eq!(mult_trace(&g).unwrap().to_string(), "X11*X22");
        for n in 2..=4 {
            let all_d = mat("nil:Q:1", &vec![vec!["e1"; n].as_slice(); n]);
            assert!(det(&all_d).unwrap().is_zero());
        }
        let s = mat("Q", &[&["1", "-1"], &["1", "1"]]);
        assert_eq!(det(&s).unwrap().to_string(), "2");
        assert!(mult_trace(&s).unwrap().is_one());
        assert!(mult_trace(&Matrix::identity(&Ring::rationals(), 4)).unwrap().is_one());
        let q = Ring::rationals();
        assert!(matches!(
            det(&Matrix::identity(&q, 7)),
            Err(Error::CapExceeded { .. })
        ));
        assert!(det(&mat("Q", &[&["1", "2"]])).is_err());
        assert_eq!(generic_det_polynomial(2).to_string(), "X11*X22 - X12*X21");
    }

    #[test]
    fn permutation_signs() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps.iter().filter(|(_, s)| *s > 0).count(), 3);
        assert_eq!(ps[1], (vec![0, 2, 1], -1));
    }

    #[test]
    fn polymap_columns() {
        let g = generic(2, 2);
        let r = g.ring().clone();
        let lin = Matrix::from_rows(&r, vec![vec![r.from_int(1), r.from_int(2)], vec![r.from_int(3), r.zero()]]).unwrap();
        let pm = PolyMap::linear(&lin);
        assert_eq!(apply_polymap_columns(&pm, &g).unwrap(), mat_mul(&lin, &g).unwrap());

        let sq = PolyMap::new(2, vec![Polynomial::parse("u1^2 + 3*u1*u2").unwrap()]).unwrap();
        let out = apply_polymap_columns(&sq, &g).unwrap();
        assert!(out.row(0).iter().all(Element::is_zero));

        let id = PolyMap::new(2, vec![Polynomial::parse("u1").unwrap(), Polynomial::parse("u2").unwrap()]).unwrap();
        assert_eq!(apply_polymap_columns(&id, &g).unwrap(), g);

        assert!(PolyMap::new(2, vec![Polynomial::parse("1 + u1").unwrap()]).is_err());
        assert!(PolyMap::new(1, vec![Polynomial::parse("u2").unwrap()]).is_err());
    }

    #[test]
    fn json_formats() {
        let doc = r#"{"ring":"Q","rows":2,"cols":2,"entries":[["1","-1"],["1","1"]]}"#;
        let m = Matrix::from_json(doc).unwrap();
        assert_eq!(m, mat("Q", &[&["1", "-1"], &["1", "1"]]));
        assert_eq!(Matrix::from_json(&m.to_json()).unwrap(), m);
        assert!(Matrix::from_json(r#"{"ring":"Q","rows":2,"cols":2,"entries":[["1"]]}"#).is_err());
        assert!(Matrix::from_json(r#"{"ring":"Zmod:4","rows":1,"cols":1,"entries":[["1"]]}"#).is_err());

        let pm = PolyMap::from_json(r#"{"domain":2,"codomain":1,"components":["u1^2 + a1*u2"]}"#).unwrap();
        assert_eq!(pm.degree(), 2);
        assert_eq!(PolyMap::from_json(&pm.to_json()).unwrap(), pm);
    }
}
