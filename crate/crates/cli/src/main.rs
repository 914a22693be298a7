use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nilmat::matrix::factorial;
use nilmat::quotient::algebra_basis;
use nilmat::verifier::Mode;
use nilmat::{
    algebra_dimension, det, is_in_d, is_in_dtilde, is_infinitesimal_simplex, is_special, mult_trace, normal_form,
    verify, Budget, Family, Matrix, Polynomial, PropositionId,
};

#[derive(Parser)]
#[command(name = "nilmat", version, about = "Exact calculus of square-zero matrices")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a matrix file against a membership predicate.
    Check {
        #[arg(long, value_enum)]
        pred: Pred,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Normal form of a polynomial in the generic algebra of an MxN grid.
    Nf {
        #[arg(long)]
        grid: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Dimension of the generic algebra.
    Dim {
        #[arg(long)]
        grid: String,
        /// Also list the basis, one label per line with its degree.
        #[arg(long)]
        with_basis: bool,
        /// TSV `m n dim` for every grid up to MxN.
        #[arg(long, conflicts_with = "with_basis")]
        table: bool,
    },
    /// Basis labels of the generic algebra.
    Basis {
        #[arg(long)]
        grid: String,
    },
    /// Determinant against n! times the multiplicative trace.
    Det {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Run the proposition checks, one JSON report per line.
    Verify {
        #[arg(long, default_value = "all")]
        prop: String,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest matrix side drawn in randomized mode.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Run the corrupted-input family; every id should then fail.
        #[arg(long)]
        mutate: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pred {
    D,
    Dtilde,
    Special,
    Simplex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Randomized,
    Symbolic,
    Both,
}

/// A usage problem tied to one flag; exits 2.
struct FlagError {
    flag: &'static str,
    msg: String,
}

fn flag_err(flag: &'static str) -> impl Fn(nilmat::Error) -> FlagError {
    move |e| FlagError { flag, msg: e.to_string() }
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(cli, &mut out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: --{}: {}", e.flag, e.msg);
            ExitCode::from(2)
        }
    }
}

fn parse_grid(s: &str) -> Result<(u32, u32), FlagError> {
    let bad = || FlagError {
        flag: "grid",
        msg: format!("expected MxN with positive integers, got `{s}`"),
    };
    let (m, n) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let m: u32 = m.trim().parse().map_err(|_| bad())?;
    let n: u32 = n.trim().parse().map_err(|_| bad())?;
    if m == 0 || n == 0 {
        return Err(bad());
    }
    Ok((m, n))
}

fn read_matrix(path: &Path) -> Result<Matrix, FlagError> {
    let text = std::fs::read_to_string(path).map_err(|e| FlagError {
        flag: "in",
        msg: format!("{}: {e}", path.display()),
    })?;
    Matrix::from_json(&text).map_err(flag_err("in"))
}

fn emit(out: &mut impl Write, line: impl std::fmt::Display) {
    // a closed pipe is not worth a panic
    let _ = writeln!(out, "{line}");
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome, FlagError> {
    let json = cli.json;
    match cli.command {
        Command::Check { pred, input } => {
            let x = read_matrix(&input)?;
            let (name, holds) = match pred {
                Pred::D => ("d", is_in_d(&x).map_err(flag_err("in"))?),
                Pred::Dtilde => ("dtilde", is_in_dtilde(&x)),
                Pred::Special => ("special", is_special(&x).map_err(flag_err("in"))?),
                Pred::Simplex => ("simplex", is_infinitesimal_simplex(&x.row_vectors()).map_err(flag_err("in"))?),
            };
            if json {
                emit(out, json!({"pred": name, "result": holds}));
            } else {
                emit(out, holds);
            }
        }
        Command::Nf { grid, expr } => {
            let (m, n) = parse_grid(&grid)?;
            let p = Polynomial::parse(&expr).map_err(flag_err("expr"))?;
            let nf = normal_form(&p, m, n).map_err(flag_err("expr"))?;
            if json {
                emit(out, json!({"grid": format!("{m}x{n}"), "input": p.to_string(), "nf": nf.to_string()}));
            } else {
                emit(out, nf);
            }
        }
        Command::Dim { grid, with_basis, table } => {
            let (m, n) = parse_grid(&grid)?;
            if table {
                let mut rows = Vec::new();
                for a in 1..=m {
                    for b in 1..=n {
                        rows.push((a, b, algebra_dimension(a, b).map_err(flag_err("grid"))?));
                    }
                }
                if json {
                    let v: Vec<_> = rows.iter().map(|&(a, b, d)| json!({"m": a, "n": b, "dim": d})).collect();
                    emit(out, json!(v));
                } else {
                    for (a, b, d) in rows {
                        emit(out, format_args!("{a}\t{b}\t{d}"));
                    }
                }
                return Ok(Outcome::Ok);
            }
            let dim = algebra_dimension(m, n).map_err(flag_err("grid"))?;
            let basis = if with_basis {
                Some(algebra_basis(m, n).map_err(flag_err("grid"))?)
            } else {
                None
            };
            if json {
                let mut v = json!({"grid": format!("{m}x{n}"), "dim": dim});
                if let Some(b) = &basis {
                    v["basis"] = b.iter().map(|l| json!({"label": l.to_string(), "degree": l.degree()})).collect();
                }
                emit(out, v);
            } else {
                emit(out, dim);
                for l in basis.iter().flatten() {
                    emit(out, format_args!("{l}\t{}", l.degree()));
                }
            }
        }
        Command::Basis { grid } => {
            let (m, n) = parse_grid(&grid)?;
            let basis = algebra_basis(m, n).map_err(flag_err("grid"))?;
            if json {
                let v: Vec<_> = basis.iter().map(|l| json!({"label": l.to_string(), "degree": l.degree()})).collect();
                emit(out, json!(v));
            } else {
                for l in &basis {
                    emit(out, format_args!("{l}\t{}", l.degree()));
                }
            }
        }
        Command::Det { input } => {
            let x = read_matrix(&input)?;
            let d = det(&x).map_err(flag_err("in"))?;
            let t = &factorial(x.ring(), x.rows()) * &mult_trace(&x).map_err(flag_err("in"))?;
            let equal = d == t;
            if json {
                emit(out, json!({"det": d.to_string(), "n!*tr_m": t.to_string(), "equal": equal}));
            } else {
                emit(out, format_args!("det: {d}"));
                emit(out, format_args!("{}!*tr_m: {t}", x.rows()));
                emit(out, format_args!("equal: {equal}"));
            }
        }
        Command::Verify { prop, mode, cases, seed, max_dim, mutate } => {
            let ids: Vec<PropositionId> = if prop.eq_ignore_ascii_case("all") {
                PropositionId::ALL.to_vec()
            } else {
                vec![prop.parse().map_err(flag_err("prop"))?]
            };
            let modes: &[Mode] = match mode {
                ModeArg::Randomized => &[Mode::Randomized],
                ModeArg::Symbolic => &[Mode::Symbolic],
                ModeArg::Both => &[Mode::Randomized, Mode::Symbolic],
            };
            let budget = Budget {
                cases,
                seed,
                max_dim,
                family: if mutate { Family::Mutated } else { Family::Sound },
                ..Budget::default()
            };
            budget.validate().map_err(flag_err("max-dim"))?;
            let mut failed = false;
            for &id in &ids {
                for &m in modes {
                    let report = verify(id, m, &budget).map_err(flag_err("prop"))?;
                    failed |= report.is_fail();
                    emit(out, report.to_json_line());
                    let _ = out.flush();
                }
            }
            return Ok(if failed { Outcome::Failed } else { Outcome::Ok });
        }
    }
    Ok(Outcome::Ok)
}
