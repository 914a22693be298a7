//! The rings everything else is generic over.
//!
//! Every supported ring is a quotient of a polynomial ring over Q or Z/m:
//! free parameters `a_r`, nilpotent generators `e_k` in groups whose
//! pairwise products vanish, and at most one block of matrix
//! indeterminates `X_ij` taken modulo a [`IdealSpec`]. Elements are stored
//! as canonical polynomials, so equality is structural.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational, Variable};
use crate::quotient::{rewrite_monomial, GradedIdeal, IdealSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Rationals,
    IntegersMod(u64),
    NilpotentExt(Box<RingSpec>, u32),
    GenericDtilde(u32, u32),
    GenericSpecial(u32),
    WithParams(Box<RingSpec>, u32),
}

impl RingSpec {
    pub fn nil(base: RingSpec, k: u32) -> Self {
        RingSpec::NilpotentExt(Box::new(base), k)
    }

    pub fn params(base: RingSpec, r: u32) -> Self {
        RingSpec::WithParams(Box::new(base), r)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::IntegersMod(m) => write!(f, "Zmod:{m}"),
            RingSpec::NilpotentExt(b, k) => write!(f, "nil:{b}:{k}"),
            RingSpec::GenericDtilde(m, n) => write!(f, "gdt:{m}:{n}"),
            RingSpec::GenericSpecial(n) => write!(f, "gsp:{n}"),
            RingSpec::WithParams(b, r) => write!(f, "params:{r}:{b}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.trim().split(':').map(str::trim).collect();
        let mut pos = 0;
        let spec = parse_spec(s, &toks, &mut pos)?;
        if pos != toks.len() {
            return Err(invalid(s, "trailing tokens"));
        }
        Ok(spec)
    }
}

fn invalid(spec: &str, reason: impl Into<String>) -> Error {
    Error::InvalidRingSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_spec(src: &str, toks: &[&str], pos: &mut usize) -> Result<RingSpec> {
    let mut next = |what: &str| -> Result<&str> {
        let t = toks
            .get(*pos)
            .copied()
            .ok_or_else(|| invalid(src, format!("missing {what}")))?;
        *pos += 1;
        Ok(t)
    };
    fn num<T: FromStr>(src: &str, t: &str, what: &str) -> Result<T> {
        t.parse()
            .map_err(|_| invalid(src, format!("{what} `{t}` is not a positive integer")))
    }
    let head = next("ring kind")?;
    match head {
        "Q" => Ok(RingSpec::Rationals),
        "Zmod" => Ok(RingSpec::IntegersMod(num(src, next("modulus")?, "modulus")?)),
        "gdt" => {
            let m = num(src, next("rows")?, "rows")?;
            let n = num(src, next("cols")?, "cols")?;
            Ok(RingSpec::GenericDtilde(m, n))
        }
        "gsp" => Ok(RingSpec::GenericSpecial(num(src, next("size")?, "size")?)),
        "nil" => {
            let base = parse_spec(src, toks, pos)?;
            let t = toks
                .get(*pos)
                .ok_or_else(|| invalid(src, "missing generator count"))?;
            *pos += 1;
            Ok(RingSpec::nil(base, num(src, t, "generator count")?))
        }
        "params" => {
            let r = num(src, next("parameter count")?, "parameter count")?;
            let base = parse_spec(src, toks, pos)?;
            Ok(RingSpec::params(base, r))
        }
        other => Err(invalid(src, format!("unknown ring kind `{other}`"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Coefficients {
    Rationals,
    Mod(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Layout {
    coeffs: Coefficients,
    params: u32,
    /// Half-open ranges of nilpotent generator indices, one per group.
    nil_groups: Vec<(u32, u32)>,
    generic: Option<IdealSpec>,
}

impl Layout {
    fn nil_count(&self) -> u32 {
        self.nil_groups.last().map_or(0, |g| g.1 - 1)
    }

    fn nil_group_of(&self, k: u32) -> Option<usize> {
        self.nil_groups
            .iter()
            .position(|&(lo, hi)| (lo..hi).contains(&k))
    }
}

fn layout_of(spec: &RingSpec) -> Result<Layout> {
    let src = spec.to_string();
    match spec {
        RingSpec::Rationals => Ok(Layout {
            coeffs: Coefficients::Rationals,
            params: 0,
            nil_groups: vec![],
            generic: None,
        }),
        RingSpec::IntegersMod(m) => {
            if *m == 0 {
                return Err(invalid(&src, "modulus must be positive"));
            }
            if m % 2 == 0 {
                return Err(Error::EvenModulus(*m));
            }
            Ok(Layout {
                coeffs: Coefficients::Mod(*m),
                params: 0,
                nil_groups: vec![],
                generic: None,
            })
        }
        RingSpec::NilpotentExt(base, k) => {
            if *k == 0 {
                return Err(invalid(&src, "need at least one nilpotent generator"));
            }
            let mut l = layout_of(base)?;
            let lo = l.nil_count() + 1;
            l.nil_groups.push((lo, lo + k));
            Ok(l)
        }
        RingSpec::GenericDtilde(m, n) => {
            if *m == 0 || *n == 0 {
                return Err(invalid(&src, "grid must be at least 1x1"));
            }
            Ok(Layout {
                coeffs: Coefficients::Rationals,
                params: 0,
                nil_groups: vec![],
                generic: Some(IdealSpec::FullDtilde { rows: *m, cols: *n }),
            })
        }
        RingSpec::GenericSpecial(n) => {
            if *n < 2 {
                return Err(invalid(&src, "special matrices need n >= 2"));
            }
            Ok(Layout {
                coeffs: Coefficients::Rationals,
                params: 0,
                nil_groups: vec![],
                generic: Some(IdealSpec::SpecialOnly { n: *n }),
            })
        }
        RingSpec::WithParams(base, r) => {
            if *r == 0 {
                return Err(invalid(&src, "need at least one parameter"));
            }
            let mut l = layout_of(base)?;
            l.params += r;
            Ok(l)
        }
    }
}

struct RingInner {
    spec: RingSpec,
    layout: Layout,
    special: Option<Arc<GradedIdeal>>,
}

/// Shared handle to a ring. Cloning is cheap.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.spec)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.spec.fmt(f)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Ring {}

impl Serialize for Ring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.spec.to_string())
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Ring::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Ring {
    /// Validates `spec` and builds the ring. Even moduli are rejected.
    pub fn new(spec: RingSpec) -> Result<Ring> {
        let layout = layout_of(&spec)?;
        let special = match layout.generic {
            Some(s @ IdealSpec::SpecialOnly { .. }) => Some(Arc::new(GradedIdeal::new(s))),
            _ => None,
        };
        Ok(Ring(Arc::new(RingInner {
            spec,
            layout,
            special,
        })))
    }

    pub fn parse(s: &str) -> Result<Ring> {
        Ring::new(s.parse()?)
    }

    pub fn rationals() -> Ring {
        Ring::new(RingSpec::Rationals).expect("Q is well-formed")
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0.layout.coeffs {
            Coefficients::Mod(m) => Some(m),
            Coefficients::Rationals => None,
        }
    }

    pub fn param_count(&self) -> u32 {
        self.0.layout.params
    }

    pub fn nil_count(&self) -> u32 {
        self.0.layout.nil_count()
    }

    /// Index ranges `lo..hi` of each nilpotent generator group.
    pub fn nil_groups(&self) -> Vec<std::ops::Range<u32>> {
        self.0.layout.nil_groups.iter().map(|&(a, b)| a..b).collect()
    }

    pub fn generic_ideal(&self) -> Option<IdealSpec> {
        self.0.layout.generic
    }

    /// The same ring with `r` more free parameters adjoined; new
    /// parameters are numbered after the existing ones.
    pub fn with_params(&self, r: u32) -> Ring {
        let spec = RingSpec::params(self.0.spec.clone(), r);
        let layout = layout_of(&spec).expect("base ring already valid");
        // the echelon cache depends only on the ideal, so it can be shared
        Ring(Arc::new(RingInner {
            spec,
            layout,
            special: self.0.special.clone(),
        }))
    }

    pub fn zero(&self) -> Element {
        self.wrap(Polynomial::zero())
    }

    pub fn one(&self) -> Element {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Element {
        self.wrap(self.reduce(Polynomial::constant(Rational::from_integer(n.into()))))
    }

    /// Image of a rational; fails in Z/m when the denominator is not a unit.
    pub fn from_rational(&self, q: &Rational) -> Result<Element> {
        let c = self.coerce_coefficient(q)?;
        Ok(self.wrap(self.reduce(Polynomial::constant(c))))
    }

    pub fn param(&self, r: u32) -> Element {
        assert!(
            (1..=self.param_count()).contains(&r),
            "parameter a{r} not in {self}"
        );
        self.wrap(Polynomial::param(r))
    }

    pub fn nil_gen(&self, k: u32) -> Element {
        assert!((1..=self.nil_count()).contains(&k), "e{k} not in {self}");
        self.wrap(Polynomial::var(Variable::Nil(k)))
    }

    /// Class of X_ij; panics outside the generic grid.
    pub fn x(&self, i: u32, j: u32) -> Element {
        let (m, n) = self.0.layout.generic.expect("ring has no matrix indeterminates").grid();
        assert!(i >= 1 && j >= 1 && i <= m && j <= n, "X{i}{j} outside {m}x{n}");
        self.wrap(self.reduce(Polynomial::x(i, j)))
    }

    /// Embeds a polynomial, checking that every variable exists here.
    pub fn element(&self, p: &Polynomial) -> Result<Element> {
        let l = &self.0.layout;
        for v in p.variables() {
            let ok = match v {
                Variable::Param(r) => r <= l.params,
                Variable::Nil(k) => k <= l.nil_count(),
                Variable::Input(_) => false,
                Variable::Matrix(i, j) => l
                    .generic
                    .map(|g| {
                        let (m, n) = g.grid();
                        i <= m && j <= n
                    })
                    .unwrap_or(false),
            };
            if !ok {
                return Err(Error::IndexOutOfRange {
                    var: v.to_string(),
                    context: format!("ring {self}"),
                });
            }
        }
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            out.add_term(m.clone(), self.coerce_coefficient(c)?);
        }
        Ok(self.wrap(self.reduce(out)))
    }

    pub fn parse_element(&self, s: &str) -> Result<Element> {
        self.element(&Polynomial::parse(s)?)
    }

    /// Distinguished nilpotent generators: the e_k of the outermost
    /// nilpotent extension, or the classes of X_ij for generic algebras.
    pub fn nilpotent_generators(&self) -> Result<Vec<Element>> {
        fn walk(spec: &RingSpec, ring: &Ring) -> Result<Vec<Element>> {
            match spec {
                RingSpec::NilpotentExt(..) => {
                    let (lo, hi) = *ring.0.layout.nil_groups.last().expect("nil layout");
                    Ok((lo..hi).map(|k| ring.nil_gen(k)).collect())
                }
                RingSpec::GenericDtilde(m, n) => Ok((1..=*m)
                    .flat_map(|i| (1..=*n).map(move |j| (i, j)))
                    .map(|(i, j)| ring.x(i, j))
                    .collect()),
                RingSpec::GenericSpecial(n) => Ok((1..=*n)
                    .flat_map(|i| (1..=*n).map(move |j| (i, j)))
                    .map(|(i, j)| ring.x(i, j))
                    .collect()),
                RingSpec::WithParams(base, _) => walk(base, ring),
                RingSpec::Rationals | RingSpec::IntegersMod(_) => {
                    Err(Error::NotANilpotentRing(ring.to_string()))
                }
            }
        }
        walk(&self.0.spec, self)
    }

    fn coerce_coefficient(&self, q: &Rational) -> Result<Rational> {
        match self.0.layout.coeffs {
            Coefficients::Rationals => Ok(q.clone()),
            Coefficients::Mod(m) => {
                let m_big = BigInt::from(m);
                let num = q.numer().mod_floor(&m_big);
                let den = q.denom().mod_floor(&m_big);
                let g = den.extended_gcd(&m_big);
                if !g.gcd.is_one() {
                    return Err(Error::NotInvertible(
                        crate::poly::fmt_rational(q),
                        self.to_string(),
                    ));
                }
                let inv = g.x.mod_floor(&m_big);
                Ok(Rational::from_integer((num * inv).mod_floor(&m_big)))
            }
        }
    }

    fn reduce(&self, p: Polynomial) -> Polynomial {
        let l = &self.0.layout;
        let mut p = p;
        if let Coefficients::Mod(m) = l.coeffs {
            let m_big = BigInt::from(m);
            p = p.map_coefficients(|c| {
                debug_assert!(c.is_integer(), "Z/m coefficients are integers");
                Rational::from_integer(c.to_integer().mod_floor(&m_big))
            });
        }
        if !l.nil_groups.is_empty() {
            p = p.map_monomials(|mono| {
                let mut counts = vec![0u32; l.nil_groups.len()];
                for &(v, e) in mono.factors() {
                    if let Variable::Nil(k) = v {
                        let g = l.nil_group_of(k).expect("nil index in range");
                        counts[g] += e;
                        if counts[g] >= 2 {
                            return None;
                        }
                    }
                }
                Some((mono.clone(), Rational::one()))
            });
        }
        match l.generic {
            Some(IdealSpec::FullDtilde { .. }) => p.map_monomials(rewrite_monomial),
            Some(IdealSpec::SpecialOnly { .. }) => self
                .0
                .special
                .as_ref()
                .expect("special reducer")
                .reduce(&p),
            None => p,
        }
    }

    fn wrap(&self, value: Polynomial) -> Element {
        Element {
            ring: self.clone(),
            value,
        }
    }

    /// `x + x = 0` implies `x = 0` for this particular `x`.
    pub fn is_two_cancellable_witness(&self, x: &Element) -> bool {
        assert_eq!(&x.ring, self, "element from another ring");
        !(x + x).is_zero() || x.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct Element {
    ring: Ring,
    value: Polynomial,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.value == other.value
    }
}

impl Eq for Element {}

impl Element {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Canonical payload.
    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value == Polynomial::one()
    }

    pub fn square(&self) -> Element {
        self * self
    }

    pub fn pow(&self, e: u32) -> Element {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Re-reads this element in `target`, which must contain this ring's
    /// variables with the same coefficients and relations (e.g. the same
    /// ring with more parameters).
    pub fn lift(&self, target: &Ring) -> Result<Element> {
        let (a, b) = (&self.ring.0.layout, &target.0.layout);
        let compatible = a.coeffs == b.coeffs
            && a.params <= b.params
            && a.generic == b.generic
            && b.nil_groups.starts_with(&a.nil_groups);
        if !compatible {
            return Err(Error::RingMismatch(self.ring.to_string(), target.to_string()));
        }
        Ok(target.wrap(self.value.clone()))
    }

    fn binop(&self, rhs: &Element, f: impl FnOnce(&Polynomial, &Polynomial) -> Polynomial) -> Element {
        assert!(
            self.ring == rhs.ring,
            "ring mismatch: {} vs {}",
            self.ring,
            rhs.ring
        );
        self.ring.wrap(self.ring.reduce(f(&self.value, &rhs.value)))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl std::ops::Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.binop(rhs, |a, b| a + b)
    }
}

impl std::ops::Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.binop(rhs, |a, b| a - b)
    }
}

impl std::ops::Mul<&Element> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.binop(rhs, |a, b| a * b)
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.ring.wrap(self.ring.reduce(-&self.value))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl std::ops::$tr<Element> for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::ops::Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dsl_round_trip() {
        for s in ["Q", "Zmod:9", "nil:Q:3", "gdt:2:2", "gsp:3", "params:2:gdt:2:2", "nil:Zmod:9:2"] {
            let spec: RingSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("nil:Q".parse::<RingSpec>().is_err());
        assert!("Q:3".parse::<RingSpec>().is_err());
        assert!("Zmod:x".parse::<RingSpec>().is_err());
        assert!("R".parse::<RingSpec>().is_err());
    }

    #[test]
    fn even_modulus_rejected() {
        assert_eq!(Ring::parse("Zmod:8").unwrap_err(), Error::EvenModulus(8));
        assert!(Ring::parse("nil:Zmod:4:1").is_err());
        assert!(Ring::parse("Zmod:9").is_ok());
    }

    #[test]
    fn rationals_are_exact() {
        let q = Ring::rationals();
        let a = q.parse_element("3/4").unwrap();
        let b = q.parse_element("1/4").unwrap();
        assert!((&a + &b).is_one());
        assert_eq!((&a * &b).to_string(), "3/16");
    }

    #[test]
    fn two_cancellable_witnesses() {
        let q = Ring::rationals();
        assert!(q.is_two_cancellable_witness(&q.from_int(5)));
        let z9 = Ring::parse("Zmod:9").unwrap();
        let three = z9.from_int(3);
        assert!(!(&three + &three).is_zero());
        assert!(z9.is_two_cancellable_witness(&three));
        let n = Ring::parse("nil:Q:2").unwrap();
        assert!(n.is_two_cancellable_witness(&n.nil_gen(1)));
    }

    #[test]
    fn nilpotent_generators_of_each_kind() {
        let n = Ring::parse("nil:Q:3").unwrap();
        let gens = n.nilpotent_generators().unwrap();
        assert_eq!(gens.len(), 3);
        for a in &gens {
            for b in &gens {
                assert!((a * b).is_zero());
            }
        }
        let g = Ring::parse("gdt:2:2").unwrap();
        let xs = g.nilpotent_generators().unwrap();
        assert_eq!(xs.len(), 4);
        assert!(xs[0].square().is_zero());
        let s = Ring::parse("gsp:2").unwrap();
        let xs = s.nilpotent_generators().unwrap();
        assert!(!xs[0].square().is_zero());
        assert!(matches!(
            Ring::rationals().nilpotent_generators(),
            Err(Error::NotANilpotentRing(_))
        ));
        assert!(Ring::parse("Zmod:9").unwrap().nilpotent_generators().is_err());
    }

    #[test]
    fn modular_elements_print_canonically() {
        let r = Ring::parse("nil:Zmod:9:2").unwrap();
        let e = r.parse_element("-e1 + 10").unwrap();
        assert_eq!(e.to_string(), "1 + 8*e1");
        assert_eq!(r.parse_element("1/2").unwrap().to_string(), "5");
        assert!(r.parse_element("1/3").is_err());
    }

    #[test]
    fn nested_nil_groups_multiply() {
        let r = Ring::parse("nil:nil:Q:1:1").unwrap();
        let (e1, e2) = (r.nil_gen(1), r.nil_gen(2));
        assert!(e1.square().is_zero());
        assert!(!(&e1 * &e2).is_zero());
        assert!((&e1 * &(&e1 * &e2)).is_zero());
    }

    #[test]
    fn element_rejects_foreign_variables() {
        let r = Ring::parse("nil:Q:2").unwrap();
        assert!(r.parse_element("e3").is_err());
        assert!(r.parse_element("X11").is_err());
        assert!(r.parse_element("a1").is_err());
        let p = Ring::parse("params:1:gdt:2:2").unwrap();
        assert_eq!(p.parse_element("a1*X12*X21").unwrap().to_string(), "-a1*X11*X22");
    }

    #[test]
    fn lifting_into_parameter_extension() {
        let r = Ring::parse("gdt:2:2").unwrap();
        let rp = r.with_params(2);
        let x = r.x(1, 2).lift(&rp).unwrap();
        assert_eq!((&x * &rp.param(2)).to_string(), "a2*X12");
        assert!(x.lift(&Ring::rationals()).is_err());
    }
}
