use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use qfgraph::families::{tournament_family, SkewShape, Snake};
use qfgraph::fgraph::{build_graph, FactGraph, Level};
use qfgraph::primality::{classify_with_cap, Outcome};
use qfgraph::redsets::{rset, rset_restricted};
use qfgraph::{DrinfeldPoly, DynkinA, Error, Interval, KrFactor};

const EXIT_NOT_PRIME: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "qfgraph", version, about = "q-factorization graphs of type A Drinfeld polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct PolyInput {
    /// Rank n of A_n.
    #[arg(long)]
    rank: Option<u32>,
    /// Factors as `color:center:length[@coset]`, or a JSON array; read from stdin when absent.
    poly: Option<String>,
}

#[derive(clap::Args)]
struct GraphInput {
    #[command(flatten)]
    poly: PolyInput,
    /// Read a JSON graph instead of a polynomial.
    #[arg(long, conflicts_with = "poly")]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-factorization.
    Factorize {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Print the graph as JSON or DOT.
    Graph {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        dot: bool,
        /// DOT output with only the covering arrows.
        #[arg(long)]
        hasse: bool,
        /// Keep the factors as given instead of q-factorizing.
        #[arg(long)]
        pseudo: bool,
    },
    /// Validate the graph of the given factors at a level.
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "qfact")]
        level: LevelArg,
    },
    /// Classify primality.
    Verdict {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = qfgraph::fgraph::DEFAULT_CUT_CAP)]
        cut_cap: usize,
    },
    /// Print a reducibility set.
    Rset {
        i: u32,
        j: u32,
        r: u32,
        s: u32,
        #[arg(long)]
        rank: u32,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        interval: Option<Vec<u32>>,
    },
    /// Apply a duality to a polynomial.
    Dual {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, value_enum)]
        kind: DualKind,
        /// Shift amount for `--kind shift`.
        #[arg(long, allow_hyphen_values = true, required_if_eq("kind", "shift"))]
        by: Option<i64>,
    },
    /// Generate an example family.
    Family {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    Tournament {
        #[arg(long = "N")]
        count: u32,
        #[arg(long = "n")]
        rank: u32,
        #[arg(long)]
        poly_only: bool,
    },
    Snake {
        #[arg(long)]
        rank: u32,
        /// Points as `i:m,i:m,...`.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        poly_only: bool,
    },
    Skew {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        mu: String,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        poly_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Prefact,
    Pseudo,
    Qfact,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Prefact => Level::Prefact,
            LevelArg::Pseudo => Level::Pseudo,
            LevelArg::Qfact => Level::Qfact,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualKind {
    Negate,
    Sigma,
    Star,
    Kappa,
    Shift,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

#[derive(Deserialize)]
struct JsonFactor {
    color: u32,
    center: i64,
    length: u32,
    #[serde(default)]
    coset: u32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
    }
}

fn read_poly(input: &PolyInput) -> Result<DrinfeldPoly, Failure> {
    let rank = input.rank.ok_or_else(|| Failure::Usage("--rank is required".into()))?;
    let rank = DynkinA::new(rank)?;
    let text = match &input.poly {
        Some(t) => t.clone(),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    if text.trim_start().starts_with('[') {
        let factors: Vec<JsonFactor> = serde_json::from_str(&text)?;
        let factors = factors.into_iter().map(|f| {
            if f.length == 0 {
                return Err(Error::NonPositiveLength);
            }
            rank.check(f.color)?;
            Ok(KrFactor::new(f.color, f.center, f.length).in_coset(f.coset))
        });
        Ok(DrinfeldPoly::from_factors(rank, factors.collect::<Result<Vec<_>, _>>()?)?)
    } else {
        Ok(DrinfeldPoly::parse(rank, &text)?)
    }
}

fn read_graph_file(path: &PathBuf) -> Result<FactGraph, Failure> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// The graph of the input: a JSON graph as given, or the graph of the
/// q-factorization (`pseudo` keeps the factors as given).
fn read_graph(input: &GraphInput, pseudo: bool) -> Result<FactGraph, Failure> {
    if let Some(path) = &input.graph {
        return read_graph_file(path);
    }
    let p = read_poly(&input.poly)?;
    Ok(build_graph(&if pseudo { p } else { p.q_factorize()? }))
}

fn print_json(out: &mut impl Write, value: &impl Serialize) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn verdict_code(outcome: Outcome) -> u8 {
    match outcome {
        Outcome::Prime => 0,
        Outcome::NotPrime => EXIT_NOT_PRIME,
        Outcome::Unknown => EXIT_UNKNOWN,
    }
}

fn parse_list(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("not an integer: {t}"))))
        .collect()
}

fn parse_points(text: &str) -> Result<Vec<(u32, i64)>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let bad = || Failure::Usage(format!("expected i:m, got {t}"));
            let (i, m) = t.split_once(':').ok_or_else(bad)?;
            Ok((i.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

/// Polynomial, graph and verdict of a generated family member.
fn family_report(out: &mut impl Write, p: &DrinfeldPoly, extra: serde_json::Value) -> Result<u8, Failure> {
    let g = build_graph(&p.q_factorize()?).canonical_form();
    let verdict = classify_with_cap(&g, qfgraph::fgraph::DEFAULT_CUT_CAP)?;
    let mut report = json!({
        "polynomial": p.to_string(),
        "graph": g,
        "verdict": verdict,
    });
    if let (Some(obj), serde_json::Value::Object(more)) = (report.as_object_mut(), extra) {
        obj.extend(more);
    }
    print_json(out, &report)?;
    Ok(verdict_code(verdict.outcome()))
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    match command {
        Command::Factorize { input } => {
            let p = read_poly(&input)?.q_factorize()?;
            writeln!(out, "{p}")?;
            Ok(0)
        }
        Command::Graph { input, dot, hasse, pseudo } => {
            let g = read_graph(&input, pseudo)?.canonical_form();
            if dot || hasse {
                write!(out, "{}", g.to_dot(hasse)?)?;
            } else {
                print_json(out, &g)?;
            }
            Ok(0)
        }
        Command::Check { input, level } => {
            let g = read_graph(&input, true)?;
            let report = g.validate(level.into());
            let messages: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            print_json(
                out,
                &json!({
                    "level": report.level,
                    "passed": report.passed(),
                    "violations": report.violations,
                    "messages": messages,
                }),
            )?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Verdict { input, cut_cap } => {
            let g = read_graph(&input, false)?;
            let verdict = classify_with_cap(&g, cut_cap)?;
            print_json(out, &verdict)?;
            Ok(verdict_code(verdict.outcome()))
        }
        Command::Rset { i, j, r, s, rank, interval } => {
            let rank = DynkinA::new(rank)?;
            if r == 0 || s == 0 {
                return Err(Error::NonPositiveLength.into());
            }
            let set = match interval.as_deref() {
                Some([lo, hi]) => rset_restricted(&rank, i, j, r, s, Interval::new(*lo, *hi))?,
                _ => rset(&rank, i, j, r, s)?,
            };
            print_json(out, &set.members())?;
            Ok(0)
        }
        Command::Dual { input, kind, by } => {
            let p = read_poly(&input)?;
            let d = match kind {
                DualKind::Negate => p.dual_negate(),
                DualKind::Sigma => p.dual_sigma(),
                DualKind::Star => p.dual_star(),
                DualKind::Kappa => p.dual_kappa(),
                DualKind::Shift => p.shift(by.unwrap_or(0)),
            };
            writeln!(out, "{d}")?;
            Ok(0)
        }
        Command::Family { family } => match family {
            Family::Tournament { count, rank, poly_only } => {
                let p = tournament_family(count, &DynkinA::new(rank)?)?;
                if poly_only {
                    writeln!(out, "{p}")?;
                    return Ok(0);
                }
                family_report(out, &p, json!({}))
            }
            Family::Snake { rank, points, poly_only } => {
                let s = Snake::new(DynkinA::new(rank)?, parse_points(&points)?)?;
                let p = s.to_poly();
                if poly_only {
                    writeln!(out, "{p}")?;
                    return Ok(0);
                }
                family_report(
                    out,
                    &p,
                    json!({ "is_snake": s.is_snake(), "is_prime_snake": s.is_prime_snake() }),
                )
            }
            Family::Skew { lambda, mu, rank, poly_only } => {
                let shape = SkewShape::new(DynkinA::new(rank)?, parse_list(&lambda)?, parse_list(&mu)?)?;
                let sp = shape.to_poly();
                if poly_only {
                    writeln!(out, "{}", sp.poly)?;
                    return Ok(0);
                }
                family_report(out, &sp.poly, json!({ "nu": shape.nu_table(), "table": sp.table }))
            }
        },
    }
}
