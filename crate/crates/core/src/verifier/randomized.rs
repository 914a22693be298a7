//! One randomized case per call. A case draws its inputs from [`Gen`],
//! evaluates the conclusion directly and returns the inputs as JSON when
//! the conclusion fails.

use serde_json::{json, Value};

use super::sample::{corrupt, corrupt_vector, shift_identity, Gen};
use super::PropositionId;
use crate::matrix::{
    apply_polymap_columns, det, factorial, is_in_dtilde, is_infinitesimal_simplex, mat_mul,
    mat_vec, mult_trace, permutations, vector_in_d, Matrix, PolyMap,
};
use crate::poly::{Polynomial, Variable};
use crate::ring::{Element, Ring};

type Case = Result<(), Value>;

pub(crate) fn note(id: PropositionId) -> Option<String> {
    match id {
        PropositionId::DV => Some(
            "checked for V = R^m only; claims about arbitrary modules V are skipped".into(),
        ),
        _ => None,
    }
}

pub(crate) fn run_case(id: PropositionId, g: &mut Gen) -> Case {
    match id {
        PropositionId::RowAdjoin => row_adjoin(g),
        PropositionId::LinComb => lin_comb(g),
        PropositionId::Geometric => geometric(g),
        PropositionId::LinearFunctional => linear_functional(g),
        PropositionId::LinearImage => linear_image(g),
        PropositionId::IdealProperty => ideal_property(g),
        PropositionId::Bilinear => bilinear(g),
        PropositionId::DV => dv(g),
        PropositionId::DVW => dvw(g),
        PropositionId::CoordFreeIdeal => coord_free_ideal(g),
        PropositionId::TrmAlternating => trm_alternating(g),
        PropositionId::DetTrace => det_trace(g),
        PropositionId::Xlin => xlin(g),
        PropositionId::RemainderForm => remainder_form(g),
    }
}

fn mat_json(x: &Matrix) -> Value {
    serde_json::to_value(x.to_doc()).expect("matrix doc")
}

fn vec_json(v: &[Element]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn ensure(ok: bool, cx: impl FnOnce() -> Value) -> Case {
    if ok {
        Ok(())
    } else {
        Err(cx())
    }
}

fn combine(ring: &Ring, coeffs: &[Element], vectors: &[Vec<Element>]) -> Vec<Element> {
    let n = vectors[0].len();
    (0..n)
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

/// x_j² = 0 and (x_j + x_j')² = 0: the values of the functionals pr_j and
/// pr_j + pr_j' lie in D.
fn witness_functionals_vanish(x: &[Element]) -> bool {
    (0..x.len()).all(|j| x[j].square().is_zero())
        && (0..x.len()).all(|j| (j + 1..x.len()).all(|k| (&x[j] + &x[k]).square().is_zero()))
}

/// A D̃ sample of the given shape, corrupted in the mutated family.
fn claimed_dtilde(g: &mut Gen, ring: &Ring, m: usize, n: usize) -> Matrix {
    let x = g.dtilde(ring, m, n);
    if g.mutated() {
        corrupt(&x)
    } else {
        x
    }
}

fn claimed_d(g: &mut Gen, ring: &Ring, n: usize) -> Vec<Element> {
    let x = g.d_vector(ring, n);
    if g.mutated() {
        corrupt_vector(&x)
    } else {
        x
    }
}

/// (input, label): a member with label true, or in the sound family
/// sometimes a corrupted non-member with label false. Mutated cases
/// always carry a corrupted input labelled true.
fn labelled_matrix(g: &mut Gen, ring: &Ring, m: usize, n: usize) -> (Matrix, bool) {
    let x = g.dtilde(ring, m, n);
    if g.mutated() {
        (corrupt(&x), true)
    } else if g.coin(0.3) {
        (corrupt(&x), false)
    } else {
        (x, true)
    }
}

fn labelled_vector(g: &mut Gen, ring: &Ring, n: usize) -> (Vec<Element>, bool) {
    let x = g.d_vector(ring, n);
    if g.mutated() {
        (corrupt_vector(&x), true)
    } else if g.coin(0.3) {
        (corrupt_vector(&x), false)
    } else {
        (x, true)
    }
}

fn row_adjoin(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(1), g.dim(1));
    let x = claimed_dtilde(g, &ring, m, n);
    let c = g.vector(&ring, m);
    let row = combine(&ring, &c, &x.row_vectors());
    let adjoined = x.with_row_appended(&row).expect("shape");
    ensure(is_in_dtilde(&adjoined), || {
        json!({"ring": ring.to_string(), "X": mat_json(&x), "coefficients": vec_json(&c), "side": "row"})
    })?;
    let d = g.vector(&ring, n);
    let col = combine(&ring, &d, &x.col_vectors());
    let adjoined = x.transpose().with_row_appended(&col).expect("shape").transpose();
    ensure(is_in_dtilde(&adjoined), || {
        json!({"ring": ring.to_string(), "X": mat_json(&x), "coefficients": vec_json(&d), "side": "column"})
    })
}

fn lin_comb(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(1), g.dim(1));
    let x = claimed_dtilde(g, &ring, m, n);
    let rows = x.row_vectors();
    let cols = x.col_vectors();
    let cx = |what: &str| json!({"ring": ring.to_string(), "X": mat_json(&x), "violated": what});
    ensure(rows.iter().all(|r| vector_in_d(r)), || cx("a row is not in D(n)"))?;
    ensure(cols.iter().all(|c| vector_in_d(c)), || cx("a column is not in D(m)"))?;
    let c = g.vector(&ring, m);
    let row = combine(&ring, &c, &rows);
    ensure(vector_in_d(&row), || {
        json!({"ring": ring.to_string(), "X": mat_json(&x), "coefficients": vec_json(&c), "violated": "row combination"})
    })?;
    let d = g.vector(&ring, n);
    let col = combine(&ring, &d, &cols);
    ensure(vector_in_d(&col), || {
        json!({"ring": ring.to_string(), "X": mat_json(&x), "coefficients": vec_json(&d), "violated": "column combination"})
    })
}

/// Rows, together with the zero row, are pairwise neighbours.
fn rows_form_simplex(vectors: &[Vec<Element>]) -> bool {
    let ring = vectors[0][0].ring();
    let mut pts = vectors.to_vec();
    pts.push(vec![ring.zero(); vectors[0].len()]);
    is_infinitesimal_simplex(&pts).expect("equal lengths")
}

fn geometric(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(2), g.dim(2));
    let (x, label) = labelled_matrix(g, &ring, m, n);
    let c1 = is_in_dtilde(&x);
    let c2 = rows_form_simplex(&x.row_vectors());
    let c3 = rows_form_simplex(&x.col_vectors());
    let (c2p, c3p) = if label {
        let a = g.vector(&ring, m);
        let b = g.vector(&ring, n);
        (
            vector_in_d(&combine(&ring, &a, &x.row_vectors())),
            vector_in_d(&combine(&ring, &b, &x.col_vectors())),
        )
    } else {
        (false, false)
    };
    ensure([c1, c2, c3, c2p, c3p].iter().all(|&c| c == label), || {
        json!({
            "ring": ring.to_string(), "X": mat_json(&x), "claimed_member": label,
            "conditions": {"dtilde": c1, "row_simplex": c2, "column_simplex": c3,
                           "row_combination": c2p, "column_combination": c3p}
        })
    })
}

fn linear_functional(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let n = g.dim(1);
    let (x, label) = labelled_vector(g, &ring, n);
    let alpha = g.vector(&ring, n);
    let forward = !label || dot(&ring, &alpha, &x).square().is_zero();
    let witnesses = witness_functionals_vanish(&x);
    ensure(forward && witnesses == label, || {
        json!({"ring": ring.to_string(), "x": vec_json(&x), "alpha": vec_json(&alpha),
               "claimed_member": label, "witness_functionals_vanish": witnesses})
    })
}

fn linear_image(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let n = g.dim(1);
    let x = claimed_d(g, &ring, n);
    let f = if g.mutated() {
        let m = n + g.int(0, 1) as usize;
        g.forcing_left(&ring, m, n)
    } else {
        let m = g.dim(1);
        g.matrix(&ring, m, n)
    };
    let y = mat_vec(&f, &x).expect("shape");
    ensure(vector_in_d(&y), || {
        json!({"ring": ring.to_string(), "x": vec_json(&x), "f": mat_json(&f), "f(x)": vec_json(&y)})
    })
}

fn ideal_property(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(1), g.dim(1));
    let x = claimed_dtilde(g, &ring, m, n);
    let (p, q) = if g.mutated() {
        let pr = m + g.int(0, 1) as usize;
        let qc = n + g.int(0, 1) as usize;
        (g.forcing_left(&ring, pr, m), g.forcing_right(&ring, n, qc))
    } else {
        let (pr, qc) = (g.dim(1), g.dim(1));
        (g.matrix(&ring, pr, m), g.matrix(&ring, n, qc))
    };
    let px = mat_mul(&p, &x).expect("shape");
    let xq = mat_mul(&x, &q).expect("shape");
    ensure(is_in_dtilde(&px) && is_in_dtilde(&xq), || {
        json!({"ring": ring.to_string(), "X": mat_json(&x), "P": mat_json(&p), "Q": mat_json(&q),
               "PX_in_dtilde": is_in_dtilde(&px), "XQ_in_dtilde": is_in_dtilde(&xq)})
    })
}

fn bilinear(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let n = g.dim(1);
    let (x, label) = labelled_vector(g, &ring, n);
    // the family (x, y) ↦ x_i y_i' evaluated on the diagonal
    let family = (0..n).all(|i| (0..n).all(|k| (&x[i] * &x[k]).is_zero()));
    let (phi, psi, ok) = if label {
        let phi = g.matrix(&ring, n, n);
        let sym = g.matrix(&ring, n, n);
        let psi = Matrix::from_fn(&ring, n, n, |i, j| sym.get(i, j) + sym.get(j, i));
        let v_phi = dot(&ring, &x, &mat_vec(&phi, &x).expect("shape"));
        let v_psi = dot(&ring, &x, &mat_vec(&psi, &x).expect("shape"));
        let ok = v_phi.is_zero() && v_psi.is_zero() && family;
        (Some(phi), Some(psi), ok)
    } else {
        (None, None, !family)
    };
    ensure(ok, || {
        json!({"ring": ring.to_string(), "x": vec_json(&x), "claimed_member": label,
               "phi": phi.as_ref().map(mat_json), "psi": psi.as_ref().map(mat_json),
               "coordinate_products_vanish": family})
    })
}

fn dv(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let m = g.dim(1);
    let (x, label) = labelled_vector(g, &ring, m);
    let in_d = vector_in_d(&x);
    let weak = witness_functionals_vanish(&x);
    // D(m) ⊆ D_s(R^m): the identity map witnesses membership
    let strong = label && mat_vec(&Matrix::identity(&ring, m), &x).expect("shape") == x;
    let phi = g.vector(&ring, m);
    let random_weak = !label || dot(&ring, &phi, &x).square().is_zero();
    ensure(in_d == label && weak == label && random_weak && (strong || !label), || {
        json!({"ring": ring.to_string(), "x": vec_json(&x), "claimed_member": label,
               "in_D": in_d, "witness_functionals_vanish": weak, "phi": vec_json(&phi)})
    })?;
    if g.mutated() {
        return Ok(());
    }
    // D_s(R^m) ⊆ D_w(R^m) ⊆ D(m) on an image f(y) with y ∈ D(s)
    let s = g.dim(1);
    let y = g.d_vector(&ring, s);
    let f = g.matrix(&ring, m, s);
    let v = mat_vec(&f, &y).expect("shape");
    let phi = g.vector(&ring, m);
    ensure(dot(&ring, &phi, &v).square().is_zero() && vector_in_d(&v), || {
        json!({"ring": ring.to_string(), "y": vec_json(&y), "f": mat_json(&f), "phi": vec_json(&phi)})
    })
}

/// Columns F·e_j and differences F·(e_j − e_j').
fn column_witnesses(f: &Matrix) -> Vec<Vec<Element>> {
    let cols = f.col_vectors();
    let mut out = cols.clone();
    for j in 0..cols.len() {
        for k in j + 1..cols.len() {
            out.push(cols[j].iter().zip(&cols[k]).map(|(a, b)| a - b).collect());
        }
    }
    out
}

fn dvw(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(1), g.dim(1));
    let (f, label) = labelled_matrix(g, &ring, m, n);
    let witnesses = column_witnesses(&f);
    let c1 = witnesses.iter().all(|w| vector_in_d(w));
    let c2 = witnesses.iter().all(|w| witness_functionals_vanish(w));
    let c3 = is_in_dtilde(&f);
    let random_ok = if label {
        let v = g.vector(&ring, n);
        let fv = mat_vec(&f, &v).expect("shape");
        let y = g.vector(&ring, m);
        vector_in_d(&fv) && dot(&ring, &y, &fv).square().is_zero()
    } else {
        true
    };
    ensure(c1 == label && c2 == label && c3 == label && random_ok, || {
        json!({"ring": ring.to_string(), "F": mat_json(&f), "claimed_member": label,
               "conditions": {"values_in_D": c1, "functionals_in_D": c2, "dtilde": c3},
               "random_vector_ok": random_ok})
    })
}

fn coord_free_ideal(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(1), g.dim(1));
    let f = claimed_dtilde(g, &ring, m, n);
    let (p, q) = if g.mutated() {
        let u = m + g.int(0, 1) as usize;
        let u2 = n + g.int(0, 1) as usize;
        (g.forcing_left(&ring, u, m), g.forcing_right(&ring, n, u2))
    } else {
        let (u, u2) = (g.dim(1), g.dim(1));
        (g.matrix(&ring, u, m), g.matrix(&ring, n, u2))
    };
    let pfq = mat_mul(&mat_mul(&p, &f).expect("shape"), &q).expect("shape");
    let v = g.vector(&ring, q.cols());
    let image = mat_vec(&pfq, &v).expect("shape");
    ensure(is_in_dtilde(&pfq) && vector_in_d(&image), || {
        json!({"ring": ring.to_string(), "F": mat_json(&f), "P": mat_json(&p), "Q": mat_json(&q),
               "v": vec_json(&v)})
    })
}

fn trm_alternating(g: &mut Gen) -> Case {
    let n = g.dim(2);
    let x = g.special(n, !g.mutated());
    let x = if g.mutated() { shift_identity(&x) } else { x };
    let ring = x.ring().clone();
    let t = mult_trace(&x).expect("square");
    for (sigma, sign) in permutations(n) {
        let signed = if sign > 0 { t.clone() } else { -&t };
        let by_cols = mult_trace(&x.permute_cols(&sigma)).expect("square");
        let by_rows = mult_trace(&x.permute_rows(&sigma)).expect("square");
        ensure(by_cols == signed && by_rows == signed, || {
            json!({"ring": ring.to_string(), "X": mat_json(&x), "sigma": sigma,
                   "trm": t.to_string(), "trm_permuted_columns": by_cols.to_string(),
                   "trm_permuted_rows": by_rows.to_string()})
        })?;
    }
    // linearity in one column
    let j = g.int(0, n as i64 - 1) as usize;
    let (a, b) = (g.int(-3, 3), g.int(-3, 3));
    let w: Vec<Element> = (0..n).map(|_| ring.from_int(g.int(-3, 3))).collect();
    let mut mixed = x.clone();
    let mut replaced = x.clone();
    for i in 0..n {
        mixed.set(i, j, &(x.get(i, j) * &ring.from_int(a)) + &(&w[i] * &ring.from_int(b)));
        replaced.set(i, j, w[i].clone());
    }
    let lhs = mult_trace(&mixed).expect("square");
    let rhs = &(&t * &ring.from_int(a)) + &(&mult_trace(&replaced).expect("square") * &ring.from_int(b));
    ensure(lhs == rhs, || {
        json!({"ring": ring.to_string(), "X": mat_json(&x), "column": j, "w": vec_json(&w), "a": a, "b": b})
    })
}

fn det_trace(g: &mut Gen) -> Case {
    let n = g.dim(2);
    let x = g.special(n, !g.mutated());
    let x = if g.mutated() { shift_identity(&x) } else { x };
    let ring = x.ring().clone();
    let d = det(&x).expect("square, small");
    let t = &factorial(&ring, n) * &mult_trace(&x).expect("square");
    ensure(d == t, || {
        json!({"ring": ring.to_string(), "X": mat_json(&x), "det": d.to_string(), "n!_trm": t.to_string()})
    })
}

/// g·(X·a) against (g·X)·a.
fn associativity(
    ring: &Ring,
    gmap: &PolyMap,
    x: &Matrix,
    a: &[Element],
) -> Case {
    let xa = mat_vec(x, a).expect("shape");
    let lhs = gmap.apply(ring, &xa).expect("ring holds the coefficients");
    let gx = apply_polymap_columns(gmap, x).expect("shape");
    let rhs = mat_vec(&gx, a).expect("shape");
    ensure(lhs == rhs, || {
        json!({"ring": ring.to_string(), "X": mat_json(x), "g": serde_json::to_value(gmap.to_doc()).expect("doc"),
               "a": vec_json(a), "g(Xa)": vec_json(&lhs), "(gX)a": vec_json(&rhs)})
    })
}

/// u1², which separates the two sides on a matrix with a unit entry.
fn forcing_map(m: usize) -> PolyMap {
    PolyMap::new(m, vec![Polynomial::var(Variable::Input(1)).pow(2)]).expect("0-preserving")
}

/// (2, 0, ..., 0): the gap between the two sides is then 2·x11², a unit
/// once x11 has been shifted by one.
fn forcing_point(ring: &Ring, n: usize) -> Vec<Element> {
    (0..n).map(|j| ring.from_int(if j == 0 { 2 } else { 0 })).collect()
}

fn xlin(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(1), g.dim(1));
    let x = claimed_dtilde(g, &ring, m, n);
    let (gmap, a) = if g.mutated() {
        (forcing_map(m), forcing_point(&ring, n))
    } else {
        let l = g.int(1, 2) as usize;
        (g.polymap(&ring, m, l), g.vector(&ring, n))
    };
    associativity(&ring, &gmap, &x, &a)
}

fn remainder_form(g: &mut Gen) -> Case {
    let ring = g.dtilde_ring();
    let (m, n) = (g.dim(1), g.dim(1));
    let x = claimed_dtilde(g, &ring, m, n);
    let (gmap, a) = if g.mutated() {
        (forcing_map(m), forcing_point(&ring, n))
    } else {
        let l = g.int(1, 2) as usize;
        let u: Vec<Polynomial> = (1..=m as u32).map(|k| Polynomial::var(Variable::Input(k))).collect();
        let comps = (0..l)
            .map(|_| {
                let lin: Polynomial = u.iter().map(|uk| g.element(&ring).value() * uk).sum();
                let sym = g.matrix(&ring, m, m);
                let mut quad = Polynomial::zero();
                for i in 0..m {
                    for j in 0..m {
                        let c = sym.get(i, j) + sym.get(j, i);
                        quad = &quad + &(&(c.value() * &u[i]) * &u[j]);
                    }
                }
                let k = g.input_polynomial(&ring, m, 2);
                &lin + &(&quad * &k)
            })
            .collect();
        let gmap = PolyMap::new(m, comps).expect("0-preserving by construction");
        (gmap, g.vector(&ring, n))
    };
    associativity(&ring, &gmap, &x, &a)
}
