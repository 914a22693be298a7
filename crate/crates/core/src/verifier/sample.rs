//! Random rings, elements and matrices for randomized cases.

use std::sync::OnceLock;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Budget, Family};
use crate::matrix::{mat_mul, Matrix};
use crate::poly::{Polynomial, Rational, Variable};
use crate::quotient::IdealSpec;
use crate::ring::{Element, Ring};

struct Pools {
    /// Nilpotent extensions of Q and Z/9, some with two generator groups
    /// so that products of generators from different groups survive.
    nil: Vec<Ring>,
    /// Algebras of generic D̃ matrices.
    generic: Vec<Ring>,
    /// Algebras of generic special matrices, by side.
    special: Vec<Ring>,
}

fn pools() -> &'static Pools {
    static POOLS: OnceLock<Pools> = OnceLock::new();
    POOLS.get_or_init(|| {
        let parse = |s: &str| Ring::parse(s).expect("pool ring spec");
        Pools {
            nil: [
                "nil:Q:1",
                "nil:Q:2",
                "nil:Q:3",
                "nil:Q:4",
                "nil:nil:Q:2:2",
                "nil:Zmod:9:1",
                "nil:Zmod:9:2",
                "nil:nil:Zmod:9:1:1",
            ]
            .iter()
            .map(|s| parse(s))
            .collect(),
            generic: ["gdt:2:2", "gdt:2:3", "gdt:3:2", "gdt:3:3"]
                .iter()
                .map(|s| parse(s))
                .collect(),
            special: ["gsp:2", "gsp:3"].iter().map(|s| parse(s)).collect(),
        }
    })
}

/// Generators (as elements) of an ideal whose square is zero.
fn square_zero_generators(ring: &Ring, pick: usize) -> Vec<Element> {
    let mut families: Vec<Vec<Element>> = ring
        .nil_groups()
        .into_iter()
        .map(|g| g.map(|k| ring.nil_gen(k)).collect())
        .collect();
    if ring.modulus() == Some(9) {
        families.push(vec![ring.from_int(3)]);
    }
    if let Some(IdealSpec::FullDtilde { rows, cols }) = ring.generic_ideal() {
        // one row, or one column, of the generic matrix
        for i in 1..=rows {
            families.push((1..=cols).map(|j| ring.x(i, j)).collect());
        }
        for j in 1..=cols {
            families.push((1..=rows).map(|i| ring.x(i, j)).collect());
        }
    }
    families.swap_remove(pick % families.len())
}

pub(crate) struct Gen {
    pub rng: ChaCha8Rng,
    pub max_dim: usize,
    pub degree: u32,
    pub family: Family,
}

impl Gen {
    pub fn new(rng: ChaCha8Rng, budget: &Budget) -> Gen {
        Gen {
            rng,
            max_dim: budget.max_dim,
            degree: budget.polymap_degree,
            family: budget.family,
        }
    }

    pub fn mutated(&self) -> bool {
        self.family == Family::Mutated
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn nonzero_int(&mut self) -> i64 {
        let v = self.int(1, 3);
        if self.rng.random_bool(0.5) {
            -v
        } else {
            v
        }
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    pub fn dim(&mut self, lo: usize) -> usize {
        self.rng.random_range(lo..=self.max_dim.max(lo))
    }

    /// A ring in which D̃ has non-trivial members: a nilpotent extension
    /// or a generic D̃ algebra.
    pub fn dtilde_ring(&mut self) -> Ring {
        let p = pools();
        if self.coin(0.5) {
            p.nil.choose(&mut self.rng).expect("pool").clone()
        } else {
            p.generic.choose(&mut self.rng).expect("pool").clone()
        }
    }

    fn generators(ring: &Ring) -> Vec<Element> {
        let mut out: Vec<Element> = (1..=ring.nil_count()).map(|k| ring.nil_gen(k)).collect();
        if let Some(IdealSpec::FullDtilde { rows, cols }) = ring.generic_ideal() {
            for i in 1..=rows {
                for j in 1..=cols {
                    out.push(ring.x(i, j));
                }
            }
        }
        out
    }

    /// A small integer plus a sparse combination of generators and
    /// products of two generators.
    pub fn element(&mut self, ring: &Ring) -> Element {
        let gens = Self::generators(ring);
        let mut e = ring.from_int(self.int(-3, 3));
        for g in &gens {
            if self.coin(0.3) {
                e = &e + &(g * &ring.from_int(self.nonzero_int()));
            }
        }
        if !gens.is_empty() && self.coin(0.3) {
            let a = gens.choose(&mut self.rng).expect("nonempty");
            let b = gens.choose(&mut self.rng).expect("nonempty");
            e = &e + &(&(a * b) * &ring.from_int(self.nonzero_int()));
        }
        e
    }

    pub fn vector(&mut self, ring: &Ring, n: usize) -> Vec<Element> {
        (0..n).map(|_| self.element(ring)).collect()
    }

    pub fn matrix(&mut self, ring: &Ring, rows: usize, cols: usize) -> Matrix {
        let entries = (0..rows * cols).map(|_| self.element(ring)).collect();
        Matrix::new(ring, rows, cols, entries).expect("shape")
    }

    /// An element of the square-zero ideal spanned by `gens`.
    fn in_ideal(&mut self, ring: &Ring, gens: &[Element]) -> Element {
        let mut e = ring.zero();
        for g in gens {
            if self.coin(0.7) {
                e = &e + &(g * &self.element(ring));
            }
        }
        e
    }

    /// A vector in D(n): entries in one square-zero ideal.
    pub fn d_vector(&mut self, ring: &Ring, n: usize) -> Vec<Element> {
        let pick = self.rng.random::<u32>() as usize;
        let gens = square_zero_generators(ring, pick);
        (0..n).map(|_| self.in_ideal(ring, &gens)).collect()
    }

    /// A matrix in D̃(m,n).
    pub fn dtilde(&mut self, ring: &Ring, m: usize, n: usize) -> Matrix {
        if let Some(ideal) = ring.generic_ideal() {
            if self.coin(0.7) {
                // P·G·Q with G the generic matrix
                let (a, b) = ideal.grid();
                let g = Matrix::from_fn(ring, a as usize, b as usize, |i, j| {
                    ring.x(i as u32 + 1, j as u32 + 1)
                });
                let p = self.matrix(ring, m, a as usize);
                let q = self.matrix(ring, b as usize, n);
                return mat_mul(&mat_mul(&p, &g).expect("shape"), &q).expect("shape");
            }
        }
        if self.coin(0.15) {
            // every entry the same square-zero d
            let d = self.d_vector(ring, 1).remove(0);
            return Matrix::from_fn(ring, m, n, |_, _| d.clone());
        }
        if self.coin(0.5) {
            // entries in one square-zero ideal
            let pick = self.rng.random::<u32>() as usize;
            let gens = square_zero_generators(ring, pick);
            let entries = (0..m * n).map(|_| self.in_ideal(ring, &gens)).collect();
            Matrix::new(ring, m, n, entries).expect("shape")
        } else {
            // u·vᵀ with u in D(m)
            let u = self.d_vector(ring, m);
            let v = self.vector(ring, n);
            Matrix::from_fn(ring, m, n, |i, j| &u[i] * &v[j])
        }
    }

    /// A special n×n matrix. Rational examples are only drawn when
    /// `allow_rational` is set, since their entries carry constants.
    pub fn special(&mut self, n: usize, allow_rational: bool) -> Matrix {
        let choice = self.int(0, 3);
        if choice == 0 && allow_rational && n == 2 {
            // [[a, b], [c, -bc/a]] over Q
            let q = Ring::rationals();
            let (a, b, c) = (self.nonzero_int(), self.nonzero_int(), self.nonzero_int());
            let d = Rational::new((-b * c).into(), a.into());
            return Matrix::from_rows(
                &q,
                vec![
                    vec![q.from_int(a), q.from_int(b)],
                    vec![q.from_int(c), q.from_rational(&d).expect("Q")],
                ],
            )
            .expect("shape");
        }
        if choice <= 1 && n <= 3 {
            // row/column scaled, column permuted generic special matrix
            let ring = pools().special[n - 2].clone();
            let mut sigma: Vec<usize> = (0..n).collect();
            sigma.shuffle(&mut self.rng);
            let r: Vec<i64> = (0..n).map(|_| self.nonzero_int()).collect();
            let c: Vec<i64> = (0..n).map(|_| self.nonzero_int()).collect();
            return Matrix::from_fn(&ring, n, n, |i, j| {
                &ring.x(i as u32 + 1, sigma[j] as u32 + 1) * &ring.from_int(r[i] * c[j])
            });
        }
        let ring = self.dtilde_ring();
        self.dtilde(&ring, n, n)
    }

    /// [I_m; random] of size p×m.
    pub fn forcing_left(&mut self, ring: &Ring, p: usize, m: usize) -> Matrix {
        let mut out = self.matrix(ring, p, m);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, if i == j { ring.one() } else { ring.zero() });
            }
        }
        out
    }

    /// [I_n random] of size n×q.
    pub fn forcing_right(&mut self, ring: &Ring, n: usize, q: usize) -> Matrix {
        self.forcing_left(ring, q, n).transpose()
    }

    /// A random 0-preserving polynomial map R^m → R^l of degree ≤ `degree`.
    pub fn polymap(&mut self, ring: &Ring, m: usize, l: usize) -> crate::matrix::PolyMap {
        let comps = (0..l)
            .map(|_| {
                let mut c = Polynomial::zero();
                for d in 1..=self.degree {
                    for mono in input_monomials(m, d) {
                        if self.coin(0.5) {
                            c = &c + &(self.element(ring).value() * &mono);
                        }
                    }
                }
                c
            })
            .collect();
        crate::matrix::PolyMap::new(m, comps).expect("0-preserving by construction")
    }

    /// A random polynomial in u1..um of degree ≤ `degree` with ring
    /// coefficients, constant term allowed.
    pub fn input_polynomial(&mut self, ring: &Ring, m: usize, degree: u32) -> Polynomial {
        let mut c = self.element(ring).value().clone();
        for d in 1..=degree {
            for mono in input_monomials(m, d) {
                if self.coin(0.5) {
                    c = &c + &(self.element(ring).value() * &mono);
                }
            }
        }
        c
    }
}

/// Monomials of degree `d` in u1..um, as polynomials.
pub(crate) fn input_monomials(m: usize, d: u32) -> Vec<Polynomial> {
    fn rec(start: usize, m: usize, d: u32, cur: &mut Vec<usize>, out: &mut Vec<Polynomial>) {
        if d == 0 {
            out.push(
                cur.iter()
                    .map(|&k| Polynomial::var(Variable::Input(k as u32 + 1)))
                    .fold(Polynomial::one(), |a, b| &a * &b),
            );
            return;
        }
        for k in start..m {
            cur.push(k);
            rec(k, m, d - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, d, &mut Vec::new(), &mut out);
    out
}

/// Adds 1 to the (0,0) entry, and to (0,1) when there is one. The result
/// has a unit entry, so it lies in no D̃ and is not special-plus-nilpotent.
pub(crate) fn corrupt(x: &Matrix) -> Matrix {
    let mut out = x.clone();
    let one = x.ring().one();
    out.set(0, 0, x.get(0, 0) + &one);
    if x.cols() >= 2 {
        out.set(0, 1, x.get(0, 1) + &one);
    }
    out
}

pub(crate) fn corrupt_vector(v: &[Element]) -> Vec<Element> {
    let mut out = v.to_vec();
    out[0] = &out[0] + &v[0].ring().one();
    out
}

/// X + I.
pub(crate) fn shift_identity(x: &Matrix) -> Matrix {
    let one = x.ring().one();
    Matrix::from_fn(x.ring(), x.rows(), x.cols(), |i, j| {
        if i == j {
            x.get(i, j) + &one
        } else {
            x.get(i, j).clone()
        }
    })
}
