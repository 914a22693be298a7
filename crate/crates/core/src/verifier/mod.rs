//! Executable checks for the structural facts about D(n), D̃(m,n) and
//! special matrices.
//!
//! Each [`PropositionId`] has two modes. Randomized mode samples concrete
//! rings and inputs; symbolic mode builds generic objects whose
//! coefficients are free parameters and reduces the claimed identity to a
//! normal-form or ideal-membership computation, so a pass holds for every
//! commutative Q-algebra at once.

mod randomized;
mod sample;
mod symbolic;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropositionId {
    RowAdjoin,
    LinComb,
    Geometric,
    LinearFunctional,
    LinearImage,
    IdealProperty,
    Bilinear,
    DV,
    DVW,
    CoordFreeIdeal,
    TrmAlternating,
    DetTrace,
    Xlin,
    RemainderForm,
}

impl PropositionId {
    pub const ALL: [PropositionId; 14] = [
        PropositionId::RowAdjoin,
        PropositionId::LinComb,
        PropositionId::Geometric,
        PropositionId::LinearFunctional,
        PropositionId::LinearImage,
        PropositionId::IdealProperty,
        PropositionId::Bilinear,
        PropositionId::DV,
        PropositionId::DVW,
        PropositionId::CoordFreeIdeal,
        PropositionId::TrmAlternating,
        PropositionId::DetTrace,
        PropositionId::Xlin,
        PropositionId::RemainderForm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropositionId::RowAdjoin => "P1-RowAdjoin",
            PropositionId::LinComb => "P2-LinComb",
            PropositionId::Geometric => "P3-Geometric",
            PropositionId::LinearFunctional => "P4-LinearFunctional",
            PropositionId::LinearImage => "P5-LinearImage",
            PropositionId::IdealProperty => "P6-IdealProperty",
            PropositionId::Bilinear => "P7-Bilinear",
            PropositionId::DV => "P8-DV",
            PropositionId::DVW => "P9-DVW",
            PropositionId::CoordFreeIdeal => "P10-CoordFreeIdeal",
            PropositionId::TrmAlternating => "P11-TrmAlternating",
            PropositionId::DetTrace => "C1-DetTrace",
            PropositionId::Xlin => "P12-Xlin",
            PropositionId::RemainderForm => "P13-RemainderForm",
        }
    }

    fn index(self) -> u64 {
        Self::ALL.iter().position(|&p| p == self).expect("listed") as u64
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Accepts the full id (`P3-Geometric`) or its short prefix (`P3`),
/// case-insensitively.
impl FromStr for PropositionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_lowercase();
        PropositionId::ALL
            .iter()
            .copied()
            .find(|p| {
                let full = p.as_str().to_ascii_lowercase();
                full == want || full.split('-').next() == Some(want.as_str())
            })
            .ok_or_else(|| Error::Unknown { what: "proposition id", name: s.to_string() })
    }
}

impl Serialize for PropositionId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for PropositionId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Randomized,
    Symbolic,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "randomized" => Ok(Mode::Randomized),
            "symbolic" => Ok(Mode::Symbolic),
            _ => Err(Error::Unknown { what: "mode", name: s.to_string() }),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Randomized => "randomized",
            Mode::Symbolic => "symbolic",
        })
    }
}

/// Which inputs randomized cases draw.
///
/// `Mutated` cases still claim the hypothesis of the statement but feed
/// inputs that violate it, so every check must fail on them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    #[default]
    Sound,
    Mutated,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail {
        case: u64,
        counterexample: serde_json::Value,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropositionReport {
    pub id: PropositionId,
    pub mode: Mode,
    pub family: Family,
    pub cases_run: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropositionReport {
    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.status, Status::Fail { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped { .. })
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub const MAX_DIM_CAP: usize = 4;
pub const SYMBOLIC_N_CAP: u32 = 3;
pub const POLYMAP_DEGREE_CAP: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Randomized cases per id.
    pub cases: u64,
    pub seed: u64,
    /// Largest matrix side drawn in randomized mode.
    pub max_dim: usize,
    /// Largest generic matrix side used in symbolic mode.
    pub symbolic_max_n: u32,
    /// Largest degree of the polynomial maps drawn or built.
    pub polymap_degree: u32,
    pub family: Family,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            cases: 1000,
            seed: 1,
            max_dim: 3,
            symbolic_max_n: 3,
            polymap_degree: 3,
            family: Family::Sound,
        }
    }
}

impl Budget {
    pub fn validate(&self) -> Result<()> {
        let check = |what, got: usize, lo: usize, cap: usize| {
            if got < lo || got > cap {
                Err(Error::CapExceeded { what, cap, got })
            } else {
                Ok(())
            }
        };
        check("randomized matrix side", self.max_dim, 2, MAX_DIM_CAP)?;
        check("symbolic matrix side", self.symbolic_max_n as usize, 2, SYMBOLIC_N_CAP as usize)?;
        check("polynomial map degree", self.polymap_degree as usize, 1, POLYMAP_DEGREE_CAP as usize)
    }
}

pub fn verify(id: PropositionId, mode: Mode, budget: &Budget) -> Result<PropositionReport> {
    budget.validate()?;
    Ok(match mode {
        Mode::Randomized => run_randomized(id, budget),
        Mode::Symbolic => run_symbolic(id, budget),
    })
}

/// Every id in both modes, ordered by id then mode.
pub fn verify_all(budget: &Budget) -> Result<Vec<PropositionReport>> {
    budget.validate()?;
    let jobs: Vec<(PropositionId, Mode)> = PropositionId::ALL
        .iter()
        .flat_map(|&id| [(id, Mode::Randomized), (id, Mode::Symbolic)])
        .collect();
    jobs.par_iter()
        .map(|&(id, mode)| verify(id, mode, budget))
        .collect()
}

/// Re-runs one randomized case; `Err` carries the counterexample.
pub fn replay_case(id: PropositionId, budget: &Budget, case: u64) -> std::result::Result<(), serde_json::Value> {
    let mut g = sample::Gen::new(case_rng(budget.seed, id, case), budget);
    randomized::run_case(id, &mut g)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn case_rng(seed: u64, id: PropositionId, case: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix(splitmix(splitmix(seed) ^ id.index()) ^ case))
}

fn run_randomized(id: PropositionId, budget: &Budget) -> PropositionReport {
    let mut report = PropositionReport {
        id,
        mode: Mode::Randomized,
        family: budget.family,
        cases_run: 0,
        seed: Some(budget.seed),
        status: Status::Pass,
        note: randomized::note(id),
    };
    if budget.cases == 0 {
        report.status = Status::Skipped {
            reason: "budget allows zero randomized cases".into(),
        };
        return report;
    }
    let first_failure = (0..budget.cases)
        .into_par_iter()
        .filter_map(|case| replay_case(id, budget, case).err().map(|cx| (case, cx)))
        .min_by_key(|(case, _)| *case);
    report.cases_run = budget.cases;
    if let Some((case, counterexample)) = first_failure {
        report.status = Status::Fail {
            case,
            counterexample,
        };
    }
    report
}

fn run_symbolic(id: PropositionId, budget: &Budget) -> PropositionReport {
    let mut report = PropositionReport {
        id,
        mode: Mode::Symbolic,
        family: budget.family,
        cases_run: 0,
        seed: None,
        status: Status::Pass,
        note: symbolic::note(id),
    };
    if budget.family == Family::Mutated {
        report.status = Status::Skipped {
            reason: "mutated inputs are drawn in randomized mode only".into(),
        };
        return report;
    }
    match symbolic::run(id, budget) {
        Ok(n) => report.cases_run = n,
        Err((n, counterexample)) => {
            report.cases_run = n;
            report.status = Status::Fail {
                case: n.saturating_sub(1),
                counterexample,
            };
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse_and_print() {
        for id in PropositionId::ALL {
            assert_eq!(id.as_str().parse::<PropositionId>().unwrap(), id);
        }
        assert_eq!("p3".parse::<PropositionId>().unwrap(), PropositionId::Geometric);
        assert_eq!("C1".parse::<PropositionId>().unwrap(), PropositionId::DetTrace);
        assert!("P14".parse::<PropositionId>().is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = PropositionReport {
            id: PropositionId::DetTrace,
            mode: Mode::Symbolic,
            family: Family::Sound,
            cases_run: 2,
            seed: None,
            status: Status::Pass,
            note: None,
        };
        let line = r.to_json_line();
        assert_eq!(
            line,
            r#"{"id":"C1-DetTrace","mode":"symbolic","family":"sound","cases_run":2,"status":"pass"}"#
        );
        let back: PropositionReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn budget_caps() {
        let b = Budget {
            max_dim: 9,
            ..Budget::default()
        };
        assert!(verify(PropositionId::RowAdjoin, Mode::Randomized, &b).is_err());
    }

    #[test]
    fn zero_cases_skip() {
        let b = Budget {
            cases: 0,
            ..Budget::default()
        };
        let r = verify(PropositionId::Xlin, Mode::Randomized, &b).unwrap();
        assert!(r.is_skipped());
    }
}
