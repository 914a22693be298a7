use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::echelon::Echelon;
use super::normal_form::check_grid;
use crate::error::{Error, Result};
use crate::poly::{monomials_of_xdegree, Polynomial, Variable};

/// Which quadratic relations generate the ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdealSpec {
    /// x_ij x_i'j' + x_i'j x_ij' for every i, i', j, j'.
    FullDtilde { rows: u32, cols: u32 },
    /// The same relations restricted to i ≠ i' and j ≠ j'.
    SpecialOnly { n: u32 },
}

impl IdealSpec {
    pub fn grid(&self) -> (u32, u32) {
        match *self {
            IdealSpec::FullDtilde { rows, cols } => (rows, cols),
            IdealSpec::SpecialOnly { n } => (n, n),
        }
    }

    /// The distinct quadratic generators, in a deterministic order.
    pub fn generators(&self) -> Vec<Polynomial> {
        let (m, n) = self.grid();
        let strict = matches!(self, IdealSpec::SpecialOnly { .. });
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for i in 1..=m {
            for i2 in 1..=m {
                for j in 1..=n {
                    for j2 in 1..=n {
                        if strict && (i == i2 || j == j2) {
                            continue;
                        }
                        let g = &(&Polynomial::x(i, j) * &Polynomial::x(i2, j2))
                            + &(&Polynomial::x(i2, j) * &Polynomial::x(i, j2));
                        if seen.insert(g.clone()) {
                            out.push(g);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSpec::FullDtilde { rows, cols } => write!(f, "FullDtilde({rows},{cols})"),
            IdealSpec::SpecialOnly { n } => write!(f, "SpecialOnly({n})"),
        }
    }
}

/// Size limits for the linear-algebra oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_degree: u32,
    pub max_grid_cells: u32,
    pub max_monomials: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            max_degree: 4,
            max_grid_cells: 16,
            max_monomials: 20_000,
        }
    }
}

impl OracleCaps {
    pub fn check(&self, ideal: &IdealSpec, degree: u32) -> Result<()> {
        let (m, n) = ideal.grid();
        if m * n > self.max_grid_cells {
            return Err(Error::CapExceeded {
                what: "oracle grid cells",
                cap: self.max_grid_cells as usize,
                got: (m * n) as usize,
            });
        }
        if degree > self.max_degree {
            return Err(Error::CapExceeded {
                what: "oracle X-degree",
                cap: self.max_degree as usize,
                got: degree as usize,
            });
        }
        let count = binomial((m * n + degree).saturating_sub(1) as u64, degree as u64);
        if count > self.max_monomials as u128 {
            return Err(Error::CapExceeded {
                what: "oracle monomial space",
                cap: self.max_monomials,
                got: count.min(usize::MAX as u128) as usize,
            });
        }
        Ok(())
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A homogeneous quadratic ideal in k[X], decided degree by degree.
///
/// The degree-d component J_d is spanned by μ·g for generators g and
/// monomials μ of degree d − 2. Echelon bases are built on first use and
/// kept for the lifetime of the value.
pub struct GradedIdeal {
    spec: IdealSpec,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<u32, Arc<Echelon>>>,
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedIdeal").field("spec", &self.spec).finish()
    }
}

impl GradedIdeal {
    pub fn new(spec: IdealSpec) -> Self {
        Self {
            spec,
            generators: spec.generators(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn spec(&self) -> IdealSpec {
        self.spec
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn echelon(&self, d: u32) -> Arc<Echelon> {
        if let Some(e) = self.cache.lock().expect("cache lock").get(&d) {
            return e.clone();
        }
        let e = Arc::new(self.build(d));
        self.cache
            .lock()
            .expect("cache lock")
            .entry(d)
            .or_insert(e)
            .clone()
    }

    fn build(&self, d: u32) -> Echelon {
        let mut e = Echelon::new();
        if d < 2 {
            return e;
        }
        let (m, n) = self.spec.grid();
        for mu in monomials_of_xdegree(m, n, d - 2) {
            let mu = Polynomial::term(num_traits::One::one(), mu);
            for g in &self.generators {
                e.insert(&mu * g);
            }
        }
        e
    }

    pub fn rank(&self, d: u32) -> usize {
        self.echelon(d).rank()
    }

    /// dim of (k[X]/J)_d.
    pub fn quotient_dim(&self, d: u32) -> usize {
        let (m, n) = self.spec.grid();
        monomials_of_xdegree(m, n, d).len() - self.rank(d)
    }

    /// Canonical representative modulo J ⊗ k[other variables]. Terms are
    /// grouped by their non-matrix part and each group is reduced in its
    /// own X-degree.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (rest, xpart) in p.group_by_complement(Variable::is_matrix) {
            let mut by_degree: HashMap<u32, Polynomial> = HashMap::new();
            for (m, c) in xpart.terms() {
                by_degree
                    .entry(m.x_degree())
                    .or_default()
                    .add_term(m.clone(), c.clone());
            }
            let mut degrees: Vec<_> = by_degree.into_iter().collect();
            degrees.sort_by_key(|(d, _)| *d);
            for (d, piece) in degrees {
                let r = if d < 2 {
                    piece
                } else {
                    self.echelon(d).reduce(&piece)
                };
                let rest_p = Polynomial::term(num_traits::One::one(), rest.clone());
                out = &out + &(&r * &rest_p);
            }
        }
        out
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }
}

/// Decides `p ∈ J` by exact Gaussian elimination in each X-degree, within
/// the default caps.
pub fn membership_oracle(p: &Polynomial, ideal: &IdealSpec) -> Result<bool> {
    membership_oracle_with(p, &GradedIdeal::new(*ideal), &OracleCaps::default())
}

pub fn membership_oracle_with(p: &Polynomial, ideal: &GradedIdeal, caps: &OracleCaps) -> Result<bool> {
    let (m, n) = ideal.spec().grid();
    check_grid(p, m, n)?;
    caps.check(&ideal.spec(), p.max_x_degree())?;
    Ok(ideal.contains(p))
}

/// Per-degree dimensions of k[X]/J computed by rank, up to the first
/// degree where the quotient vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleDimension {
    pub per_degree: Vec<usize>,
    /// Whether the last computed degree is zero, so all higher ones are.
    pub terminated: bool,
}

impl OracleDimension {
    pub fn total(&self) -> usize {
        self.per_degree.iter().sum()
    }
}

pub fn oracle_dimension(ideal: &IdealSpec, caps: &OracleCaps) -> Result<OracleDimension> {
    let (m, n) = ideal.grid();
    let top = m.min(n) + 1;
    caps.check(ideal, top)?;
    let g = GradedIdeal::new(*ideal);
    let per_degree: Vec<usize> = (0..=top).map(|d| g.quotient_dim(d)).collect();
    let terminated = per_degree.last() == Some(&0);
    Ok(OracleDimension {
        per_degree,
        terminated,
    })
}

/// Whether `target` lies in the Q-span of `rows`.
pub fn span_contains(rows: &[Polynomial], target: &Polynomial) -> bool {
    Echelon::from_rows(rows.iter().cloned()).contains(target)
}

/// Whether two finite families span the same Q-subspace.
pub fn same_span(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let ea = Echelon::from_rows(a.iter().cloned());
    let eb = Echelon::from_rows(b.iter().cloned());
    ea.rank() == eb.rank() && b.iter().all(|p| ea.contains(p))
}
