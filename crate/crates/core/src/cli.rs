//! Command-line front end. [`run`] is the whole program minus process I/O so the
//! binary, the batch mode and the tests share one code path.
//!
//! Exit codes: `0` success (and "equal" for `eq`), `1` "unequal" for `eq`,
//! `2` any error. In `--json` mode each successful command prints exactly one
//! compact JSON document; errors go to stderr only.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cocycles::{beta, canonical_cocycle, Cocycle, Perturbation};
use crate::error::Error;
use crate::homology::{algebraic_area, decompose_cycle, decompose_cycle_2d, project_flow};
use crate::json;
use crate::lattice::{evaluate_path, EdgeFlow};
use crate::metabelian::{fox_image, FoxImage, MetabelianElem};
use crate::nilpotent::{heis_eval, HeisenbergElem};
use crate::point::Point;
use crate::satellite::{SatelliteElem, Subgroup};
use crate::words::Word;

const SATELLITE_HELP: &str = "Satellite words use the generators x, y, z with optional \
integer exponents, e.g. \"x y x^-1 y^-1 z^-2\". x = (e1, 0), y = (e2, 0), z = unit plaquette.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    Free,
    Abelian,
    Heisenberg,
    Metabelian,
    Satellite,
}

impl GroupKind {
    fn name(self) -> &'static str {
        match self {
            GroupKind::Free => "free",
            GroupKind::Abelian => "abelian",
            GroupKind::Heisenberg => "heisenberg",
            GroupKind::Metabelian => "metabelian",
            GroupKind::Satellite => "satellite",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "latgroup",
    version,
    about = "Word problems, plaquette homology and cocycles for lattice-path groups",
    after_help = SATELLITE_HELP,
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Quotient group of F_d in which words are evaluated.
    #[arg(long, global = true, value_enum, default_value_t = GroupKind::Metabelian)]
    pub group: GroupKind,

    /// Rank (number of generators).
    #[arg(long, global = true, default_value_t = 2)]
    pub d: usize,

    /// Satellite level / cocycle multiple.
    #[arg(long, global = true, default_value_t = 1, allow_negative_numbers = true)]
    pub k: i64,

    /// Emit one JSON document instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Freely reduce a word.
    Reduce { word: String },
    /// Evaluate a word in the selected group.
    Eval { word: String },
    /// Decide equality of two words in the selected group (exit 0 equal, 1 unequal).
    Eq { w1: String, w2: String },
    /// Normal form of a word in the selected group.
    Nf { word: String },
    /// Plaquette decomposition of the flow of a closed word.
    Decompose { word: String },
    /// Signed area of the flow of a closed word, projected to a coordinate plane.
    Area {
        word: String,
        /// Axes `i,j` of the projection plane (ignored when d = 2).
        #[arg(long, default_value = "1,2")]
        plane: String,
    },
    /// Canonical cocycle value c(g1, g2) for comma-separated vectors.
    Cocycle {
        #[arg(allow_hyphen_values = true)]
        g1: String,
        #[arg(allow_hyphen_values = true)]
        g2: String,
    },
    /// Cohomology invariant of k times the canonical cocycle, optionally perturbed.
    Beta {
        /// JSON file: [{"vertex": [m, n], "value": <plaquette sum>}, ...]
        #[arg(long)]
        perturb: Option<PathBuf>,
    },
    /// Magnus embedding image (abelianized Fox derivatives) of a word.
    Fox { word: String },
    /// Membership of a satellite word in N, M or the commutant.
    Member {
        #[arg(long)]
        sub: String,
        word: String,
    },
    /// Run one command per line of a file; one output line per input line.
    Batch {
        file: PathBuf,
        /// Lines are `w1 | w2` pairs checked with `eq` under the outer flags.
        #[arg(long)]
        pairs: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn err(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        }
    }
}

enum CliError {
    Lib(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// One result: the JSON document and its human rendering.
struct Rendered {
    json: Value,
    human: String,
    code: i32,
}

impl Rendered {
    fn new(json: Value, human: impl Into<String>) -> Self {
        Rendered {
            json,
            human: human.into(),
            code: 0,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                },
            };
        }
    };
    if let Command::Batch { file, pairs } = &cli.command {
        return run_batch(&cli, file, *pairs);
    }
    match dispatch(&cli) {
        Ok(r) => {
            let body = if cli.json {
                serde_json::to_string(&r.json).expect("serializable")
            } else {
                r.human
            };
            Outcome {
                stdout: format!("{body}\n"),
                stderr: String::new(),
                code: r.code,
            }
        }
        Err(e) => Outcome::err(e),
    }
}

fn word(text: &str, d: usize) -> CliResult<Word> {
    Ok(Word::parse(text, d)?)
}

fn flow_text(f: &EdgeFlow) -> String {
    let mut s = String::from("[");
    for (n, (k, m)) in f.iter().enumerate() {
        if n > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "({},{}):{}", k.base, k.axis, m);
    }
    s.push(']');
    s
}

fn render_met(e: &MetabelianElem) -> Rendered {
    Rendered::new(
        json::metabelian(e),
        format!("endpoint={} flow={}", e.endpoint, flow_text(&e.flow)),
    )
}

fn render_heis(h: &HeisenbergElem) -> Rendered {
    let mut human = format!("endpoint={}", h.endpoint);
    for (i, j, a) in h.areas() {
        let _ = write!(human, " A{i},{j}={a}");
    }
    Rendered::new(json::heisenberg(h), human)
}

fn render_sat(s: &SatelliteElem) -> Rendered {
    Rendered::new(
        json::satellite(s),
        format!("k={} vec={} cycle={}", s.k, s.vec, flow_text(&s.cycle)),
    )
}

fn render_fox(f: &FoxImage) -> Rendered {
    let mut human = format!("monomial={}", f.monomial);
    for (i, d) in f.derivatives.iter().enumerate() {
        let _ = write!(human, " d{}=[", i + 1);
        for (n, (p, c)) in d.iter().enumerate() {
            if n > 0 {
                human.push_str(", ");
            }
            let _ = write!(human, "{p}:{c}");
        }
        human.push(']');
    }
    Rendered::new(json::fox(f), human)
}

fn render_word(w: &Word) -> Rendered {
    Rendered::new(json!({"word": w.to_string(), "length": w.len()}), w.to_string())
}

/// Evaluation in the selected group. The same data is the normal form.
fn evaluate(cli: &Cli, text: &str) -> CliResult<Rendered> {
    Ok(match cli.group {
        GroupKind::Free => render_word(&word(text, cli.d)?),
        GroupKind::Abelian => {
            let e = evaluate_path(&word(text, cli.d)?).endpoint;
            Rendered::new(json!({"endpoint": json::point(&e)}), e.to_string())
        }
        GroupKind::Heisenberg => render_heis(&heis_eval(&word(text, cli.d)?)),
        GroupKind::Metabelian => render_met(&MetabelianElem::from_word(&word(text, cli.d)?)),
        GroupKind::Satellite => render_sat(&SatelliteElem::from_word(text, cli.k)?),
    })
}

fn equal_in_group(cli: &Cli, a: &str, b: &str) -> CliResult<bool> {
    Ok(match cli.group {
        GroupKind::Free => word(a, cli.d)? == word(b, cli.d)?,
        GroupKind::Abelian => evaluate_path(&word(a, cli.d)?).endpoint == evaluate_path(&word(b, cli.d)?).endpoint,
        GroupKind::Heisenberg => heis_eval(&word(a, cli.d)?) == heis_eval(&word(b, cli.d)?),
        GroupKind::Metabelian => {
            MetabelianElem::from_word(&word(a, cli.d)?) == MetabelianElem::from_word(&word(b, cli.d)?)
        }
        GroupKind::Satellite => SatelliteElem::from_word(a, cli.k)? == SatelliteElem::from_word(b, cli.k)?,
    })
}

fn render_eq(cli: &Cli, equal: bool) -> Rendered {
    let verdict = if equal { "equal" } else { "unequal" };
    Rendered {
        json: json!({"equal": equal, "group": cli.group.name(), "verdict": verdict}),
        human: verdict.to_string(),
        code: if equal { 0 } else { 1 },
    }
}

fn parse_plane(text: &str) -> CliResult<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [i, j] => match (i.parse(), j.parse()) {
            (Ok(i), Ok(j)) => Ok((i, j)),
            _ => Err(CliError::Usage(format!("invalid plane {text:?}: expected i,j"))),
        },
        _ => Err(CliError::Usage(format!("invalid plane {text:?}: expected i,j"))),
    }
}

fn dispatch(cli: &Cli) -> CliResult<Rendered> {
    match &cli.command {
        Command::Reduce { word: w } => Ok(render_word(&word(w, cli.d)?)),
        Command::Eval { word: w } | Command::Nf { word: w } => evaluate(cli, w),
        Command::Eq { w1, w2 } => Ok(render_eq(cli, equal_in_group(cli, w1, w2)?)),
        Command::Decompose { word: w } => {
            let flow = evaluate_path(&word(w, cli.d)?).flow;
            let sum = if cli.d == 2 {
                decompose_cycle_2d(&flow)?
            } else {
                decompose_cycle(&flow)?
            };
            Ok(Rendered::new(json::plaquette_sum(&sum), sum.to_string()))
        }
        Command::Area { word: w, plane } => {
            let flow = evaluate_path(&word(w, cli.d)?).flow;
            let planar = if cli.d == 2 {
                flow
            } else {
                let (i, j) = parse_plane(plane)?;
                if !flow.is_cycle() {
                    return Err(Error::NotACycle.into());
                }
                project_flow(&flow, i, j)?
            };
            let a = algebraic_area(&planar)?;
            Ok(Rendered::new(json!({"area": json::int(&a)}), a.to_string()))
        }
        Command::Cocycle { g1, g2 } => {
            let c = canonical_cocycle(&Point::parse(g1)?, &Point::parse(g2)?)?;
            Ok(Rendered::new(json::edge_flow(&c), flow_text(&c)))
        }
        Command::Beta { perturb } => {
            let base = Cocycle::scaled(2, cli.k);
            let y = match perturb {
                None => base,
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                    let u: Perturbation = json::parse_perturbation(&text, 2)?;
                    base.perturbed(u)?
                }
            };
            let b = beta(&y)?;
            Ok(Rendered::new(json!({"beta": json::int(&b)}), b.to_string()))
        }
        Command::Fox { word: w } => Ok(render_fox(&fox_image(&word(w, cli.d)?))),
        Command::Member { sub, word: w } => {
            let sub: Subgroup = sub.parse()?;
            let member = SatelliteElem::from_word(w, cli.k)?.is_member(sub);
            let name = match sub {
                Subgroup::N => "N",
                Subgroup::M => "M",
                Subgroup::Commutant => "commutant",
            };
            Ok(Rendered::new(
                json!({"k": cli.k, "member": member, "sub": name}),
                member.to_string(),
            ))
        }
        Command::Batch { .. } => Err(CliError::Usage("batch cannot be nested".into())),
    }
}

fn outer_flags(cli: &Cli) -> Vec<String> {
    let mut v = vec![
        "latgroup".to_string(),
        "--group".into(),
        cli.group.name().into(),
        "--d".into(),
        cli.d.to_string(),
        format!("--k={}", cli.k),
    ];
    if cli.json {
        v.push("--json".into());
    }
    v
}

fn batch_line(cli: &Cli, line: &str, pairs: bool) -> String {
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return String::new();
    }
    let mut args = outer_flags(cli);
    if pairs {
        let Some((a, b)) = trimmed.split_once('|') else {
            return error_line(cli, "expected `w1 | w2`");
        };
        args.extend(["eq".to_string(), a.trim().to_string(), b.trim().to_string()]);
    } else {
        let Some(tokens) = shlex::split(trimmed) else {
            return error_line(cli, "unbalanced quotes");
        };
        if tokens.first().map(String::as_str) == Some("batch") {
            return error_line(cli, "batch cannot be nested");
        }
        args.extend(tokens);
    }
    let out = run(args);
    if out.code == 2 {
        let msg = out.stderr.trim().trim_start_matches("error:").trim();
        let first = msg.lines().next().unwrap_or("failed");
        return error_line(cli, first);
    }
    out.stdout.trim_end().replace('\n', " ")
}

fn error_line(cli: &Cli, msg: &str) -> String {
    if cli.json {
        json!({"error": msg}).to_string()
    } else {
        format!("error: {msg}")
    }
}

fn run_batch(cli: &Cli, file: &PathBuf, pairs: bool) -> Outcome {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return Outcome::err(format!("cannot read {}: {e}", file.display())),
    };
    let mut stdout = String::new();
    for line in text.lines() {
        stdout.push_str(&batch_line(cli, line, pairs));
        stdout.push('\n');
    }
    Outcome::ok(stdout)
}
