use std::sync::LazyLock;

use proptest::prelude::*;

use nilmat::matrix::{beta, mat_vec, vector_in_d};
use nilmat::poly::ratio;
use nilmat::quotient::{normal_form, IdealSpec};
use nilmat::{is_in_dtilde, is_special, mat_mul, Element, Matrix, Polynomial, Ring, Variable};

/// (numerator, denominator, generator picks); picks index the ring's
/// generator list modulo its length.
type Terms = Vec<(i64, i64, Vec<u8>)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((-5i64..=5, prop::sample::select(vec![1i64, 2]), prop::collection::vec(any::<u8>(), 0..=2)), 0..=4)
}

fn generators(ring: &Ring) -> Vec<Element> {
    let mut out: Vec<Element> = (1..=ring.param_count()).map(|r| ring.param(r)).collect();
    out.extend((1..=ring.nil_count()).map(|k| ring.nil_gen(k)));
    if let Some(ideal) = ring.generic_ideal() {
        let (m, n) = ideal.grid();
        for i in 1..=m {
            for j in 1..=n {
                out.push(ring.x(i, j));
            }
        }
    }
    out
}

fn build(ring: &Ring, t: &Terms) -> Element {
    let gens = generators(ring);
    let mut acc = ring.zero();
    for (num, den, picks) in t {
        let mut term = ring.from_rational(&ratio(*num, *den)).expect("odd moduli invert 2");
        if !gens.is_empty() {
            for &p in picks {
                term = &term * &gens[p as usize % gens.len()];
            }
        }
        acc = &acc + &term;
    }
    acc
}

static RINGS: LazyLock<Vec<Ring>> = LazyLock::new(|| {
    [
        "Q",
        "Zmod:9",
        "Zmod:15",
        "nil:Q:3",
        "nil:Zmod:9:2",
        "nil:nil:Q:1:2",
        "params:2:nil:Q:1",
        "gdt:2:2",
        "gdt:2:3",
        "gsp:2",
        "params:1:gsp:2",
    ]
    .iter()
    .map(|s| Ring::parse(s).unwrap())
    .collect()
});

macro_rules! ring_axioms {
    ($($name:ident => $idx:expr),* $(,)?) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            $(
                #[test]
                fn $name(a in terms(), b in terms(), c in terms()) {
                    let r = &RINGS[$idx];
                    let (a, b, c) = (build(r, &a), build(r, &b), build(r, &c));
                    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                    prop_assert_eq!(&a + &b, &b + &a);
                    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                    prop_assert_eq!(&a * &b, &b * &a);
                    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                    prop_assert_eq!(&a + &r.zero(), a.clone());
                    prop_assert_eq!(&a * &r.one(), a.clone());
                    prop_assert!((&a + &(-&a)).is_zero());
                    prop_assert_eq!(&a - &b, &a + &(-&b));
                    // canonical payloads are fixed points of normalization
                    prop_assert_eq!(r.element(a.value()).unwrap(), a.clone());
                    prop_assert_eq!(r.parse_element(&a.to_string()).unwrap(), a);
                }
            )*
        }
    };
}

ring_axioms! {
    axioms_q => 0,
    axioms_zmod9 => 1,
    axioms_zmod15 => 2,
    axioms_nil_q3 => 3,
    axioms_nil_zmod9 => 4,
    axioms_nested_nil => 5,
    axioms_params_nil => 6,
    axioms_gdt22 => 7,
    axioms_gdt23 => 8,
    axioms_gsp2 => 9,
    axioms_params_gsp2 => 10,
}

fn constant_free(e: &Element) -> Element {
    let ring = e.ring();
    let p = Polynomial::from_terms(
        e.value()
            .terms()
            .filter(|(m, _)| !m.is_one())
            .map(|(m, c)| (m.clone(), c.clone())),
    );
    ring.element(&p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn nilpotent_parts_multiply_to_zero(a in terms(), b in terms(), c in terms(), d in terms(), e in terms()) {
        // one group: any two nilpotent parts annihilate each other
        let r = &RINGS[3];
        let (x, y) = (constant_free(&build(r, &a)), constant_free(&build(r, &b)));
        prop_assert!((&x * &y).is_zero());
        for k in 1..=r.nil_count() {
            prop_assert!(r.nil_gen(k).square().is_zero());
        }
        // two groups: three nilpotent parts always annihilate
        let r = &RINGS[5];
        prop_assert_eq!(r.nil_groups().len(), 2);
        let (x, y, z) = (constant_free(&build(r, &c)), constant_free(&build(r, &d)), constant_free(&build(r, &e)));
        prop_assert!((&(&x * &y) * &z).is_zero());
    }
}

/// Variables for free polynomials: parameters and a 3×3 grid, plus one
/// two-digit index to exercise the braced syntax.
fn poly_vars() -> Vec<Variable> {
    let mut v = vec![Variable::Param(1), Variable::Param(2)];
    for i in 1..=3 {
        for j in 1..=3 {
            v.push(Variable::Matrix(i, j));
        }
    }
    v.push(Variable::Matrix(10, 2));
    v
}

fn poly_from(t: &Terms, vars: &[Variable]) -> Polynomial {
    let mut p = Polynomial::zero();
    for (num, den, picks) in t {
        let mut term = Polynomial::constant(ratio(*num, *den));
        for &k in picks {
            term = &term * &Polynomial::var(vars[k as usize % vars.len()]);
        }
        p = &p + &term;
    }
    p
}

/// Polynomials on the 3×3 grid only (no two-digit indices).
fn grid_poly(t: &Terms) -> Polynomial {
    let vars = poly_vars();
    poly_from(t, &vars[..11])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(a in terms(), b in terms(), c in terms()) {
        let vars = poly_vars();
        let (a, b, c) = (poly_from(&a, &vars), poly_from(&b, &vars), poly_from(&c, &vars));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in terms()) {
        let p = poly_from(&a, &poly_vars());
        prop_assert_eq!(Polynomial::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn graded_piece_projection_and_cauchy(a in terms(), b in terms()) {
        let (p, q) = (grid_poly(&a), grid_poly(&b));
        for d in 0..=4 {
            prop_assert_eq!(p.graded_piece(d).graded_piece(d), p.graded_piece(d));
            let product = (&p * &q).graded_piece(d);
            let cauchy: Polynomial = (0..=d).map(|d1| &p.graded_piece(d1) * &q.graded_piece(d - d1)).sum();
            prop_assert_eq!(product, cauchy);
        }
        let total: Polynomial = (0..=2).map(|d| p.graded_piece(d)).sum();
        prop_assert_eq!(total, p);
    }

    #[test]
    fn normal_form_is_a_homomorphism(a in terms(), b in terms()) {
        let (p, q) = (grid_poly(&a), grid_poly(&b));
        let nf = |x: &Polynomial| normal_form(x, 3, 3).unwrap().into_polynomial();
        prop_assert_eq!(nf(&(&p + &q)), &nf(&p) + &nf(&q));
        prop_assert_eq!(nf(&(&p * &q)), nf(&(&nf(&p) * &nf(&q))));
        prop_assert_eq!(nf(&nf(&p)), nf(&p));
    }

    #[test]
    fn products_beyond_min_side_vanish(
        (m, n) in (1u32..=4, 1u32..=4),
        picks in prop::collection::vec((0u32..16, 0u32..16), 5),
    ) {
        let k = m.min(n) as usize + 1;
        let p = picks[..k]
            .iter()
            .map(|&(i, j)| Polynomial::x(i % m + 1, j % n + 1))
            .fold(Polynomial::one(), |acc, x| &acc * &x);
        prop_assert!(normal_form(&p, m, n).unwrap().is_zero());
    }
}

fn int_matrix(ring: &Ring, rows: usize, cols: usize, vals: &[i64], offset: usize) -> Matrix {
    Matrix::from_fn(ring, rows, cols, |i, j| ring.from_int(vals[(offset + i * cols + j) % vals.len()]))
}

/// P·G·Q in gdt:a:b with integer P, Q.
fn dtilde_sample(a: u32, b: u32, m: usize, n: usize, vals: &[i64]) -> Matrix {
    let ring = Ring::parse(&format!("gdt:{a}:{b}")).unwrap();
    let g = Matrix::from_fn(&ring, a as usize, b as usize, |i, j| ring.x(i as u32 + 1, j as u32 + 1));
    let p = int_matrix(&ring, m, a as usize, vals, 0);
    let q = int_matrix(&ring, b as usize, n, vals, 7);
    mat_mul(&mat_mul(&p, &g).unwrap(), &q).unwrap()
}

fn arbitrary_matrix(ring: &Ring, m: usize, n: usize, t: &[Terms]) -> Matrix {
    Matrix::from_fn(ring, m, n, |i, j| build(ring, &t[(i * n + j) % t.len()]))
}

fn sample_strategy() -> impl Strategy<Value = (u32, u32, usize, usize, Vec<i64>)> {
    (2u32..=3, 2u32..=3, 1usize..=3, 1usize..=3, prop::collection::vec(-3i64..=3, 12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn transpose_symmetry((a, b, m, n, vals) in sample_strategy(), t in prop::collection::vec(terms(), 1..6)) {
        let x = dtilde_sample(a, b, m, n, &vals);
        prop_assert!(is_in_dtilde(&x));
        prop_assert!(is_in_dtilde(&x.transpose()));
        let ring = x.ring().clone();
        let y = arbitrary_matrix(&ring, m.max(2), n.max(2), &t);
        prop_assert_eq!(is_in_dtilde(&y), is_in_dtilde(&y.transpose()));
        prop_assert_eq!(is_special(&y).unwrap(), is_special(&y.transpose()).unwrap());
    }

    #[test]
    fn submatrices_stay_in_dtilde((a, b, m, n, vals) in sample_strategy(), rows in any::<u8>(), cols in any::<u8>()) {
        let x = dtilde_sample(a, b, m, n, &vals);
        let pick = |mask: u8, len: usize| -> Vec<usize> {
            let v: Vec<usize> = (0..len).filter(|k| mask & (1 << k) != 0).collect();
            if v.is_empty() { vec![0] } else { v }
        };
        let sub = x.submatrix(&pick(rows, m), &pick(cols, n));
        prop_assert!(is_in_dtilde(&sub));
    }

    #[test]
    fn scaling_and_combinations_stay_in_d((a, b, m, n, vals) in sample_strategy(), t in terms(), u in prop::collection::vec(terms(), 3)) {
        let x = dtilde_sample(a, b, m, n, &vals);
        let ring = x.ring().clone();
        let lambda = build(&ring, &t);
        for r in x.row_vectors() {
            prop_assert!(vector_in_d(&r));
            let scaled: Vec<Element> = r.iter().map(|e| &lambda * e).collect();
            prop_assert!(vector_in_d(&scaled));
        }
        let coeffs: Vec<Element> = (0..m).map(|i| build(&ring, &u[i % u.len()])).collect();
        let comb = mat_vec(&x.transpose(), &coeffs).unwrap();
        prop_assert!(vector_in_d(&comb));
        let coeffs: Vec<Element> = (0..n).map(|j| build(&ring, &u[j % u.len()])).collect();
        prop_assert!(vector_in_d(&mat_vec(&x, &coeffs).unwrap()));
    }

    #[test]
    fn beta_characterizes_dtilde((a, b, _, n, vals) in sample_strategy(), t in prop::collection::vec(terms(), 1..6)) {
        let ring = Ring::parse(&format!("gdt:{a}:{b}")).unwrap();
        let m = 2;
        let candidates = [dtilde_sample(a, b, m, n.max(2), &vals), arbitrary_matrix(&ring, m, n.max(2), &t)];
        for x in candidates {
            let rows = x.row_vectors();
            let by_beta = rows.iter().all(|r| rows.iter().all(|s| beta(r, s).unwrap().iter().all(Element::is_zero)));
            prop_assert_eq!(by_beta, is_in_dtilde(&x));
        }
    }
}

#[test]
fn generators_of_the_full_ideal_vanish_in_the_generic_algebra() {
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        for g in (IdealSpec::FullDtilde { rows: m, cols: n }).generators() {
            assert!(normal_form(&g, m, n).unwrap().is_zero(), "{g}");
        }
    }
}
