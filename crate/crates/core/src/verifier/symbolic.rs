//! Symbolic checks. Inputs are the generic matrix of k[X]/J and maps
//! whose coefficients are free parameters, so each identity that reduces
//! to zero holds for every choice of coefficients in every commutative
//! Q-algebra. Converse directions are checked as equalities of spans of
//! quadratic polynomials in k[X].

use serde_json::{json, Value};

use super::sample::input_monomials;
use super::{Budget, PropositionId};
use crate::matrix::{
    apply_polymap_columns, dtilde_equations, factorial, generic_det_polynomial, is_in_dtilde,
    is_infinitesimal_simplex, mat_mul, mat_vec, mult_trace, permutations, Matrix, PolyMap,
};
use crate::poly::{rat, Polynomial, Variable};
use crate::quotient::{membership_oracle, normal_form, same_span, IdealSpec};
use crate::ring::{Element, Ring, RingSpec};

type Fail = (u64, Value);

#[derive(Default)]
struct Tally {
    checks: u64,
}

impl Tally {
    fn check(&mut self, ok: bool, cx: impl FnOnce() -> Value) -> Result<(), Fail> {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err((self.checks, cx()))
        }
    }

    /// Every element must reduce to zero.
    fn zeros(&mut self, what: &str, shape: Value, elems: impl IntoIterator<Item = Element>) -> Result<(), Fail> {
        let residue = elems.into_iter().find(|e| !e.is_zero());
        self.check(residue.is_none(), || {
            json!({"identity": what, "shape": shape,
                   "residue": residue.map(|e| e.to_string())})
        })
    }
}

pub(crate) fn note(id: PropositionId) -> Option<String> {
    match id {
        PropositionId::DV => Some(
            "checked for V = R^m only; claims about arbitrary modules V are skipped".into(),
        ),
        PropositionId::RemainderForm => Some("k ranges over polynomials of degree at most 1".into()),
        _ => None,
    }
}

pub(crate) fn run(id: PropositionId, budget: &Budget) -> Result<u64, Fail> {
    let mut t = Tally::default();
    let n = budget.symbolic_max_n;
    match id {
        PropositionId::RowAdjoin => row_adjoin(&mut t, n),
        PropositionId::LinComb => lin_comb(&mut t, n),
        PropositionId::Geometric => geometric(&mut t, n),
        PropositionId::LinearFunctional => linear_functional(&mut t, n),
        PropositionId::LinearImage => linear_image(&mut t, n),
        PropositionId::IdealProperty => ideal_property(&mut t, n),
        PropositionId::Bilinear => bilinear(&mut t, n),
        PropositionId::DV => dv(&mut t, n),
        PropositionId::DVW => dvw(&mut t, n),
        PropositionId::CoordFreeIdeal => coord_free_ideal(&mut t, n),
        PropositionId::TrmAlternating => trm_alternating(&mut t, n),
        PropositionId::DetTrace => det_trace(&mut t, n),
        PropositionId::Xlin => xlin(&mut t, n, budget.polymap_degree),
        PropositionId::RemainderForm => remainder_form(&mut t, n),
    }?;
    Ok(t.checks)
}

/// k[a_1..a_r][X]/J for the m×n grid, and its generic matrix.
fn generic(m: u32, n: u32, params: u32) -> (Ring, Matrix) {
    let ring = Ring::new(RingSpec::params(RingSpec::GenericDtilde(m, n), params))
        .expect("generic ring");
    let g = Matrix::from_fn(&ring, m as usize, n as usize, |i, j| {
        ring.x(i as u32 + 1, j as u32 + 1)
    });
    (ring, g)
}

/// Hands out fresh parameters a_1, a_2, ... in order.
struct Params<'a> {
    ring: &'a Ring,
    next: u32,
}

impl<'a> Params<'a> {
    fn new(ring: &'a Ring) -> Self {
        Params { ring, next: 0 }
    }

    fn one(&mut self) -> Element {
        self.next += 1;
        self.ring.param(self.next)
    }

    fn vector(&mut self, n: usize) -> Vec<Element> {
        (0..n).map(|_| self.one()).collect()
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let entries = (0..rows * cols).map(|_| self.one()).collect();
        Matrix::new(self.ring, rows, cols, entries).expect("shape")
    }
}

fn combine(ring: &Ring, coeffs: &[Element], vectors: &[Vec<Element>]) -> Vec<Element> {
    (0..vectors[0].len())
        .map(|j| {
            coeffs
                .iter()
                .zip(vectors)
                .fold(ring.zero(), |acc, (c, v)| &acc + &(c * &v[j]))
        })
        .collect()
}

fn dot(ring: &Ring, a: &[Element], b: &[Element]) -> Element {
    a.iter().zip(b).fold(ring.zero(), |acc, (x, y)| &acc + &(x * y))
}

/// The products x_j·x_j' (j ≤ j') that define D(n).
fn d_equations(x: &[Element]) -> Vec<Element> {
    let mut out = Vec::new();
    for j in 0..x.len() {
        for k in j..x.len() {
            out.push(&x[j] * &x[k]);
        }
    }
    out
}

fn d_equations_poly(x: &[Polynomial]) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for j in 0..x.len() {
        for k in j..x.len() {
            out.push(&x[j] * &x[k]);
        }
    }
    out
}

/// Squares of pr_j and pr_j + pr_j' applied to `x`.
fn witness_squares(x: &[Polynomial]) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = x.iter().map(|v| v.pow(2)).collect();
    for j in 0..x.len() {
        for k in j + 1..x.len() {
            out.push((&x[j] + &x[k]).pow(2));
        }
    }
    out
}

fn free_generic(m: u32, n: u32) -> Vec<Vec<Polynomial>> {
    (1..=m)
        .map(|i| (1..=n).map(|j| Polynomial::x(i, j)).collect())
        .collect()
}

fn transpose_poly(rows: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    (0..rows[0].len())
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

fn poly_sub(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Matrix-variable coefficients of each parameter monomial.
fn parameter_coefficients(p: &Polynomial) -> Vec<Polynomial> {
    p.group_by_complement(Variable::is_matrix).into_values().collect()
}

fn dtilde_generators(m: u32, n: u32) -> Vec<Polynomial> {
    IdealSpec::FullDtilde { rows: m, cols: n }.generators()
}

fn grid(max: u32, lo: u32) -> impl Iterator<Item = (u32, u32)> {
    (lo..=max).flat_map(move |m| (lo..=max).map(move |n| (m, n)))
}

fn row_adjoin(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        let (ring, g) = generic(m, n, m + n);
        let mut p = Params::new(&ring);
        let a = p.vector(m as usize);
        let b = p.vector(n as usize);
        let row = combine(&ring, &a, &g.row_vectors());
        let x = g.with_row_appended(&row).expect("shape");
        t.zeros("adjoined row", json!([m, n]), dtilde_equations(&x))?;
        let col = combine(&ring, &b, &g.col_vectors());
        let x = g.transpose().with_row_appended(&col).expect("shape").transpose();
        t.zeros("adjoined column", json!([m, n]), dtilde_equations(&x))?;
    }
    Ok(())
}

fn lin_comb(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        let (ring, g) = generic(m, n, m + n);
        let mut p = Params::new(&ring);
        let a = p.vector(m as usize);
        let b = p.vector(n as usize);
        for r in g.row_vectors() {
            t.zeros("row in D(n)", json!([m, n]), d_equations(&r))?;
        }
        for c in g.col_vectors() {
            t.zeros("column in D(m)", json!([m, n]), d_equations(&c))?;
        }
        let row = combine(&ring, &a, &g.row_vectors());
        t.zeros("row combination in D(n)", json!([m, n]), d_equations(&row))?;
        let col = combine(&ring, &b, &g.col_vectors());
        t.zeros("column combination in D(m)", json!([m, n]), d_equations(&col))?;
    }
    Ok(())
}

/// Defining polynomials of "every vector is in D and any two are
/// neighbours" for the given vectors.
fn simplex_polys(vectors: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for v in vectors {
        out.extend(d_equations_poly(v));
    }
    for i in 0..vectors.len() {
        for k in i + 1..vectors.len() {
            out.extend(d_equations_poly(&poly_sub(&vectors[i], &vectors[k])));
        }
    }
    out
}

fn combination_polys(vectors: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let n = vectors[0].len();
    let comb: Vec<Polynomial> = (0..n)
        .map(|j| {
            vectors
                .iter()
                .enumerate()
                .map(|(i, v)| &Polynomial::param(i as u32 + 1) * &v[j])
                .sum()
        })
        .collect();
    d_equations_poly(&comb)
        .iter()
        .flat_map(parameter_coefficients)
        .collect()
}

fn geometric(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 2) {
        // 1) ⇒ 2), 3), 2'), 3') on the generic matrix
        let (ring, g) = generic(m, n, m + n);
        let mut p = Params::new(&ring);
        let a = p.vector(m as usize);
        let b = p.vector(n as usize);
        let with_zero = |mut v: Vec<Vec<Element>>, len: usize| {
            v.push(vec![ring.zero(); len]);
            v
        };
        let rows_ok = is_infinitesimal_simplex(&with_zero(g.row_vectors(), n as usize)).expect("lengths");
        t.check(rows_ok, || json!({"identity": "rows with 0 form a simplex", "shape": [m, n]}))?;
        let cols_ok = is_infinitesimal_simplex(&with_zero(g.col_vectors(), m as usize)).expect("lengths");
        t.check(cols_ok, || json!({"identity": "columns with 0 form a simplex", "shape": [m, n]}))?;
        t.zeros("row combination", json!([m, n]), d_equations(&combine(&ring, &a, &g.row_vectors())))?;
        t.zeros("column combination", json!([m, n]), d_equations(&combine(&ring, &b, &g.col_vectors())))?;

        // each condition generates the same ideal as the defining equations
        let gens = dtilde_generators(m, n);
        let rows = free_generic(m, n);
        let cols = transpose_poly(&rows);
        for (name, family) in [
            ("row simplex", simplex_polys(&rows)),
            ("column simplex", simplex_polys(&cols)),
            ("row combinations", combination_polys(&rows)),
            ("column combinations", combination_polys(&cols)),
        ] {
            t.check(same_span(&family, &gens), || {
                json!({"identity": format!("{name} spans the defining equations"), "shape": [m, n]})
            })?;
        }
    }
    Ok(())
}

fn linear_functional(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for n in 1..=max {
        let (ring, g) = generic(1, n, n);
        let mut p = Params::new(&ring);
        let alpha = p.vector(n as usize);
        let x = g.row(0);
        t.zeros("alpha(x) squared", json!([n]), [dot(&ring, &alpha, &x).square()])?;
        let xs = free_generic(1, n).remove(0);
        t.check(same_span(&witness_squares(&xs), &d_equations_poly(&xs)), || {
            json!({"identity": "pr_j and pr_j + pr_j' detect D(n)", "shape": [n]})
        })?;
    }
    Ok(())
}

fn linear_image(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        let (ring, g) = generic(1, n, m * n);
        let f = Params::new(&ring).matrix(m as usize, n as usize);
        let fx = mat_vec(&f, &g.row(0)).expect("shape");
        t.zeros("f(x) in D(m)", json!([m, n]), d_equations(&fx))?;
    }
    Ok(())
}

fn ideal_property(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        for k in 1..=max {
            let (ring, g) = generic(m, n, k * m + n * k);
            let mut p = Params::new(&ring);
            let left = p.matrix(k as usize, m as usize);
            let right = p.matrix(n as usize, k as usize);
            let pg = mat_mul(&left, &g).expect("shape");
            t.zeros("P·X", json!([m, n, k]), dtilde_equations(&pg))?;
            let gq = mat_mul(&g, &right).expect("shape");
            t.zeros("X·Q", json!([m, n, k]), dtilde_equations(&gq))?;
        }
    }
    Ok(())
}

fn bilinear(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for n in 1..=max {
        let nn = n as usize;
        let sym_count = n * (n + 1) / 2;
        let (ring, g) = generic(1, n, sym_count + n * n);
        let mut p = Params::new(&ring);
        let mut sym = vec![vec![ring.zero(); nn]; nn];
        for j in 0..nn {
            for k in j..nn {
                let c = p.one();
                sym[j][k] = c.clone();
                sym[k][j] = c;
            }
        }
        let psi = Matrix::from_rows(&ring, sym).expect("shape");
        let phi = p.matrix(nn, nn);
        let x = g.row(0);
        let psi_xx = dot(&ring, &x, &mat_vec(&psi, &x).expect("shape"));
        let phi_xx = dot(&ring, &x, &mat_vec(&phi, &x).expect("shape"));
        t.zeros("psi(x,x)", json!([n]), [psi_xx, phi_xx])?;

        // the maps (x,y) ↦ x_i y_i' and their symmetrizations recover D(n)
        let xs = free_generic(1, n).remove(0);
        let family: Vec<Polynomial> = (0..nn)
            .flat_map(|i| (0..nn).map(move |k| (i, k)))
            .map(|(i, k)| &xs[i] * &xs[k])
            .collect();
        let symmetric: Vec<Polynomial> = (0..nn)
            .flat_map(|i| (i..nn).map(move |k| (i, k)))
            .map(|(i, k)| (&xs[i] * &xs[k]).scale(&rat(2)))
            .collect();
        let d = d_equations_poly(&xs);
        t.check(same_span(&family, &d) && same_span(&symmetric, &d), || {
            json!({"identity": "coordinate bilinear maps recover D(n)", "shape": [n]})
        })?;
    }
    Ok(())
}

fn dv(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for m in 1..=max {
        let (ring, g) = generic(1, m, m);
        let phi = Params::new(&ring).vector(m as usize);
        let x = g.row(0);
        // D(m) ⊆ D_s(R^m) via the identity map, D(m) ⊆ D_w(R^m)
        let id = mat_vec(&Matrix::identity(&ring, m as usize), &x).expect("shape");
        t.check(id == x, || json!({"identity": "identity witness", "shape": [m]}))?;
        t.zeros("phi(x) squared", json!([m]), [dot(&ring, &phi, &x).square()])?;
        // D_w(R^m) ⊆ D(m)
        let xs = free_generic(1, m).remove(0);
        t.check(same_span(&witness_squares(&xs), &d_equations_poly(&xs)), || {
            json!({"identity": "weak membership implies D(m)", "shape": [m]})
        })?;
        // D_s(R^m) ⊆ D_w(R^m)
        for s in 1..=max {
            let (ring, g) = generic(1, s, m * s + m);
            let mut p = Params::new(&ring);
            let f = p.matrix(m as usize, s as usize);
            let phi = p.vector(m as usize);
            let v = mat_vec(&f, &g.row(0)).expect("shape");
            t.zeros("phi(f(y)) squared", json!([m, s]), [dot(&ring, &phi, &v).square()])?;
        }
    }
    Ok(())
}

fn dvw(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        let (ring, g) = generic(m, n, n + m);
        let mut p = Params::new(&ring);
        let v = p.vector(n as usize);
        let y = p.vector(m as usize);
        let fv = mat_vec(&g, &v).expect("shape");
        t.zeros("F(v) in D(m)", json!([m, n]), d_equations(&fv))?;
        t.zeros("y(F(v)) squared", json!([m, n]), [dot(&ring, &y, &fv).square()])?;

        // values on e_j and e_j − e_j' already force the defining equations
        let cols = transpose_poly(&free_generic(m, n));
        let mut witnesses = cols.clone();
        for j in 0..cols.len() {
            for k in j + 1..cols.len() {
                witnesses.push(poly_sub(&cols[j], &cols[k]));
            }
        }
        let values: Vec<Polynomial> = witnesses.iter().flat_map(|w| d_equations_poly(w)).collect();
        let functionals: Vec<Polynomial> = witnesses.iter().flat_map(|w| witness_squares(w)).collect();
        let gens = dtilde_generators(m, n);
        t.check(same_span(&values, &gens), || {
            json!({"identity": "values in D(W) imply D̃", "shape": [m, n]})
        })?;
        t.check(same_span(&functionals, &gens), || {
            json!({"identity": "functionals in D imply D̃", "shape": [m, n]})
        })?;
    }
    Ok(())
}

fn coord_free_ideal(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        for (u, u2) in grid(2, 1) {
            let (ring, g) = generic(m, n, u * m + n * u2);
            let mut p = Params::new(&ring);
            let left = p.matrix(u as usize, m as usize);
            let right = p.matrix(n as usize, u2 as usize);
            let pfq = mat_mul(&mat_mul(&left, &g).expect("shape"), &right).expect("shape");
            t.zeros("P∘F∘Q", json!([m, n, u, u2]), dtilde_equations(&pfq))?;
            t.check(is_in_dtilde(&pfq), || json!({"identity": "P∘F∘Q in D̃", "shape": [m, n, u, u2]}))?;
        }
    }
    Ok(())
}

fn trm_poly(entry: impl Fn(usize, usize) -> Polynomial, n: usize) -> Polynomial {
    (0..n).fold(Polynomial::one(), |acc, i| &acc * &entry(i, i))
}

/// `p` vanishes in k[X]/J for both the full and the special ideal.
fn vanishes_mod_both(p: &Polynomial, n: u32) -> (bool, bool) {
    let full = normal_form(p, n, n).expect("grid").is_zero();
    let special = membership_oracle(p, &IdealSpec::SpecialOnly { n }).expect("within oracle caps");
    (full, special)
}

fn trm_alternating(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for n in 2..=max {
        let nn = n as usize;
        let x = |i: usize, j: usize| Polynomial::x(i as u32 + 1, j as u32 + 1);
        let base = trm_poly(x, nn);
        for (sigma, sign) in permutations(nn) {
            let signed = base.scale(&rat(sign as i64));
            let by_cols = &trm_poly(|i, j| x(i, sigma[j]), nn) - &signed;
            let by_rows = &trm_poly(|i, j| x(sigma[i], j), nn) - &signed;
            for (side, p) in [("columns", by_cols), ("rows", by_rows)] {
                let (full, special) = vanishes_mod_both(&p, n);
                t.check(full && special, || {
                    json!({"identity": format!("trm after permuting {side}"), "n": n,
                           "sigma": sigma, "full": full, "special": special})
                })?;
            }
        }
        // multilinearity in each column, as a polynomial identity
        let u = |i: usize| Polynomial::var(Variable::Input(i as u32 + 1));
        let w = |i: usize| Polynomial::var(Variable::Input((nn + i) as u32 + 1));
        let (a, b) = (Polynomial::param(1), Polynomial::param(2));
        for j in 0..nn {
            let with_col = |c: &dyn Fn(usize) -> Polynomial| {
                trm_poly(|r, s| if s == j { c(r) } else { x(r, s) }, nn)
            };
            let mixed = with_col(&|r| &(&a * &u(r)) + &(&b * &w(r)));
            let split = &(&a * &with_col(&u)) + &(&b * &with_col(&w));
            t.check(mixed == split, || json!({"identity": "trm linear in a column", "n": n, "column": j}))?;
        }
    }
    Ok(())
}

fn det_trace(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for n in 2..=max {
        let nn = n as usize;
        let trm = trm_poly(|i, j| Polynomial::x(i as u32 + 1, j as u32 + 1), nn);
        let fact = factorial(&Ring::rationals(), nn).value().clone();
        let diff = &generic_det_polynomial(n) - &(&fact * &trm);
        let (full, special) = vanishes_mod_both(&diff, n);
        t.check(full && special, || {
            json!({"identity": "det = n! trm", "n": n, "full": full, "special": special,
                   "residue": normal_form(&diff, n, n).map(|r| r.to_string()).ok()})
        })?;
        // and through the ring arithmetic of both generic algebras
        for spec in [RingSpec::GenericDtilde(n, n), RingSpec::GenericSpecial(n)] {
            let ring = Ring::new(spec).expect("generic ring");
            let g = Matrix::from_fn(&ring, nn, nn, |i, j| ring.x(i as u32 + 1, j as u32 + 1));
            let d = crate::matrix::det(&g).expect("small");
            let rhs = &factorial(&ring, nn) * &mult_trace(&g).expect("square");
            t.zeros("det − n! trm in the generic algebra", json!([n, ring.to_string()]), [&d - &rhs])?;
        }
    }
    Ok(())
}

/// g·(X·a) − (g·X)·a, entrywise.
fn associativity_residue(ring: &Ring, gmap: &PolyMap, x: &Matrix, a: &[Element]) -> Vec<Element> {
    let lhs = gmap.apply(ring, &mat_vec(x, a).expect("shape")).expect("coefficients in ring");
    let gx = apply_polymap_columns(gmap, x).expect("shape");
    let rhs = mat_vec(&gx, a).expect("shape");
    lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect()
}

const COMPONENTS: usize = 2;

fn xlin(t: &mut Tally, max: u32, degree: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        for d in 1..=degree {
            let monos: Vec<Polynomial> = (1..=d).flat_map(|k| input_monomials(m as usize, k)).collect();
            let count = (COMPONENTS * monos.len()) as u32 + n;
            let (ring, g) = generic(m, n, count);
            let mut next = 0u32;
            let mut fresh = || {
                next += 1;
                Polynomial::param(next)
            };
            let comps: Vec<Polynomial> = (0..COMPONENTS)
                .map(|_| monos.iter().map(|mono| &fresh() * mono).sum())
                .collect();
            let a: Vec<Element> = (0..n).map(|_| ring.element(&fresh()).expect("param")).collect();
            let gmap = PolyMap::new(m as usize, comps).expect("0-preserving");
            t.zeros("g(Xa) = (gX)a", json!([m, n, d]), associativity_residue(&ring, &gmap, &g, &a))?;
        }
    }
    Ok(())
}

fn remainder_form(t: &mut Tally, max: u32) -> Result<(), Fail> {
    for (m, n) in grid(max, 1) {
        let mm = m as usize;
        let per_component = m + m * (m + 1) / 2 + (m + 1);
        let (ring, g) = generic(m, n, COMPONENTS as u32 * per_component + n);
        let mut next = 0u32;
        let mut fresh = || {
            next += 1;
            Polynomial::param(next)
        };
        let u: Vec<Polynomial> = (1..=m).map(|k| Polynomial::var(Variable::Input(k))).collect();
        let mut comps = Vec::new();
        for _ in 0..COMPONENTS {
            let lin: Polynomial = u.iter().map(|uk| &fresh() * uk).sum();
            let mut quad = Polynomial::zero();
            for i in 0..mm {
                for j in i..mm {
                    let c = fresh();
                    let term = &(&c * &u[i]) * &u[j];
                    quad = &quad + &if i == j { term } else { term.scale(&rat(2)) };
                }
            }
            let k: Polynomial = &fresh() + &u.iter().map(|uk| &fresh() * uk).sum::<Polynomial>();
            comps.push(&lin + &(&quad * &k));
        }
        let a: Vec<Element> = (0..n).map(|_| ring.element(&fresh()).expect("param")).collect();
        let gmap = PolyMap::new(mm, comps).expect("0-preserving");
        t.zeros("g(Xa) = (gX)a", json!([m, n]), associativity_residue(&ring, &gmap, &g, &a))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_passes_at_n2() {
        let budget = Budget {
            symbolic_max_n: 2,
            polymap_degree: 2,
            ..Budget::default()
        };
        for id in PropositionId::ALL {
            let n = run(id, &budget).unwrap_or_else(|(_, cx)| panic!("{id}: {cx}"));
            assert!(n > 0, "{id} ran no checks");
        }
    }

    #[test]
    fn corrupted_identity_is_caught() {
        // det = trm (missing n!) must not vanish
        let diff = &generic_det_polynomial(2)
            - &trm_poly(|i, j| Polynomial::x(i as u32 + 1, j as u32 + 1), 2);
        assert_eq!(vanishes_mod_both(&diff, 2), (false, false));
    }
}
