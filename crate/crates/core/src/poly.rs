//! Exact multivariate polynomials over the rationals.
//!
//! Variables come in four families, totally ordered family-first:
//! parameters `a1, a2, ..` (free coefficients), nilpotent generators
//! `e1, e2, ..`, map inputs `u1, u2, ..` and matrix indeterminates `Xij`.
//! Only the parameter and matrix families take part in the quotient
//! algebras; the other two are carriers for ring elements and polynomial
//! maps.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], so the representation
//! is canonical: no zero coefficients, no zero exponents, and the zero
//! polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    /// Free parameter `a_r` (1-based).
    Param(u32),
    /// Nilpotent generator `e_k` (1-based).
    Nil(u32),
    /// Input coordinate `u_k` of a polynomial map (1-based).
    Input(u32),
    /// Matrix indeterminate `X_ij` (1-based).
    Matrix(u32, u32),
}

impl Variable {
    pub fn is_matrix(&self) -> bool {
        matches!(self, Variable::Matrix(..))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Variable::Param(r) => write!(f, "a{r}"),
            Variable::Nil(k) => write!(f, "e{k}"),
            Variable::Input(k) => write!(f, "u{k}"),
            Variable::Matrix(i, j) if i < 10 && j < 10 => write!(f, "X{i}{j}"),
            Variable::Matrix(i, j) => write!(f, "X{{{i},{j}}}"),
        }
    }
}

/// A power product. Ordered by total degree first, then lexicographically
/// on the sorted factor list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Variable) -> Self {
        Self::from_factors([(v, 1)])
    }

    /// Builds a monomial from arbitrary (possibly repeated, possibly zero)
    /// exponent pairs.
    pub fn from_factors(factors: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in factors {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        let degree = map.values().sum();
        Self {
            degree,
            factors: map.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Degree counting matrix indeterminates only.
    pub fn x_degree(&self) -> u32 {
        self.factors
            .iter()
            .filter(|(v, _)| v.is_matrix())
            .map(|(_, e)| e)
            .sum()
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Splits into the part satisfying `pred` and the rest.
    pub fn split(&self, pred: impl Fn(&Variable) -> bool) -> (Monomial, Monomial) {
        let (yes, no): (Vec<_>, Vec<_>) = self.factors.iter().partition(|(v, _)| pred(v));
        (Monomial::from_factors(yes), Monomial::from_factors(no))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors: out,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn x(i: u32, j: u32) -> Self {
        Self::var(Variable::Matrix(i, j))
    }

    pub fn param(r: u32) -> Self {
        Self::var(Variable::Param(r))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn max_x_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::x_degree).max().unwrap_or(0)
    }

    /// Terms whose matrix-variable degree is exactly `d`.
    pub fn graded_piece(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_x_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::x_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Applies `f` to every term, where `f` maps a monomial to a signed
    /// replacement monomial (or `None` for zero), and re-collects.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Option<(Monomial, Rational)>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some((m2, k)) = f(m) {
                out.add_term(m2, c * k);
            }
        }
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&Rational) -> Rational) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Groups terms by the part of the monomial that is *not* selected by
    /// `pred`; each group holds the selected part with its coefficient.
    pub fn group_by_complement(
        &self,
        pred: impl Fn(&Variable) -> bool,
    ) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (sel, rest) = m.split(&pred);
            out.entry(rest).or_default().add_term(sel, c.clone());
        }
        out
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        let mut vs: Vec<Variable> = self
            .terms
            .keys()
            .flat_map(|m| m.factors.iter().map(|(v, _)| *v))
            .collect();
        vs.sort();
        vs.dedup();
        vs.into_iter()
    }

    /// Substitutes every variable for which `f` returns `Some`.
    pub fn substitute(&self, f: impl Fn(Variable) -> Option<Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.factors() {
                match f(v) {
                    Some(p) => acc = &acc * &p.pow(e),
                    None => kept.push((v, e)),
                }
            }
            let rest = Polynomial::term(Rational::one(), Monomial::from_factors(kept));
            out = &out + &(&acc * &rest);
        }
        out
    }

    pub fn parse(s: &str) -> Result<Polynomial> {
        Parser::new(s).parse()
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |a, b| &a + &b)
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// All monomials in the indeterminates `X_ij` (1 ≤ i ≤ m, 1 ≤ j ≤ n) of
/// degree exactly `d`, in increasing monomial order. There are
/// C(mn + d - 1, d) of them.
pub fn monomials_of_xdegree(m: u32, n: u32, d: u32) -> Vec<Monomial> {
    let vars: Vec<Variable> = (1..=m)
        .flat_map(|i| (1..=n).map(move |j| Variable::Matrix(i, j)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(d as usize);
    fn rec(
        vars: &[Variable],
        start: usize,
        left: u32,
        chosen: &mut Vec<Variable>,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            out.push(Monomial::from_factors(chosen.iter().map(|v| (*v, 1))));
            return;
        }
        for k in start..vars.len() {
            chosen.push(vars[k]);
            rec(vars, k, left - 1, chosen, out);
            chosen.pop();
        }
    }
    rec(&vars, 0, d, &mut chosen, &mut out);
    out.sort();
    out
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(&self.src[start..self.pos])
    }

    fn index(&mut self) -> Result<u32> {
        let d = self.digits()?;
        match d.parse::<u32>() {
            Ok(0) | Err(_) => self.err(format!("invalid index `{d}`")),
            Ok(v) => Ok(v),
        }
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut first = true;
        loop {
            let neg = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else if self.peek().is_none() {
                break;
            } else {
                return self.err("expected `+` or `-` between terms");
            };
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, if neg { -c } else { c });
            if self.peek().is_none() {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let n: BigInt = self.digits()?.parse().expect("digits");
                    let mut c = Rational::from_integer(n);
                    if self.eat(b'/') {
                        self.skip_ws();
                        let d: BigInt = self.digits()?.parse().expect("digits");
                        if d.is_zero() {
                            return self.err("zero denominator");
                        }
                        c /= Rational::from_integer(d);
                    }
                    coeff *= c;
                }
                Some(_) => {
                    let v = self.variable()?;
                    let e = if self.eat(b'^') {
                        self.skip_ws();
                        let d = self.digits()?;
                        match d.parse::<u32>() {
                            Ok(e) => e,
                            Err(_) => return self.err("exponent too large"),
                        }
                    } else {
                        1
                    };
                    factors.push((v, e));
                }
                None => return self.err("unexpected end of input"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::from_factors(factors), coeff))
    }

    fn variable(&mut self) -> Result<Variable> {
        let b = self.peek().expect("peeked");
        self.pos += 1;
        match b {
            b'a' => Ok(Variable::Param(self.index()?)),
            b'e' => Ok(Variable::Nil(self.index()?)),
            b'u' => Ok(Variable::Input(self.index()?)),
            b'X' => {
                if self.bytes.get(self.pos) == Some(&b'{') {
                    self.pos += 1;
                    let i = self.index()?;
                    if !self.eat(b',') {
                        return self.err("expected `,` in X{i,j}");
                    }
                    self.skip_ws();
                    let j = self.index()?;
                    if !self.eat(b'}') {
                        return self.err("expected `}` in X{i,j}");
                    }
                    Ok(Variable::Matrix(i, j))
                } else {
                    let d = self.digits()?;
                    let ds = d.as_bytes();
                    if ds.len() != 2 || ds[0] == b'0' || ds[1] == b'0' {
                        return self.err(format!(
                            "`X{d}`: use two nonzero digits `Xij` or braces `X{{i,j}}`"
                        ));
                    }
                    Ok(Variable::Matrix((ds[0] - b'0') as u32, (ds[1] - b'0') as u32))
                }
            }
            other => {
                self.pos -= 1;
                self.err(format!("unexpected character `{}`", other as char))
            }
        }
    }
}
