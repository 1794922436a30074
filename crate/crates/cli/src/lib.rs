//! Argument parsing and dispatch for the `qwalled` binary.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qwalled_core::acceptance;
use qwalled_core::centralizer::{commutant_dim, Side};
use qwalled_core::diagram::{enumerate_basis, normalize, statistics, worked_example, BeadDiagram};
use qwalled_core::quantum::{
    aq_relation_rank_all, aq_relation_span, cap_cup_checks, certify_dimension, check_all_relations,
    classical_limit_check, enumerate_normal_monomials, generator_matrix, hecke_checks,
    hecke_clifford_commutant_dim, skein_checks, wta_relation_check, QGen,
};
use qwalled_core::relations::{CheckStatus, RelationCheck};
use qwalled_core::report::{Check, Report};
use qwalled_core::superlinalg::RankMode;
use qwalled_core::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN_FLAG: i32 = 2;
pub const EXIT_MISSING_FLAG: i32 = 3;
pub const EXIT_OUT_OF_RANGE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "qwalled",
    version,
    about = "Walled Brauer-Clifford superalgebras, exactly"
)]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bead diagrams.
    #[command(subcommand)]
    Bd(BdCommand),
    /// The quantum algebra BC_{r,s}(q) acting on tensor space.
    #[command(subcommand)]
    Bc(BcCommand),
    /// Degree-two relations of the quantum matrix superalgebra.
    #[command(subcommand)]
    Aq(AqCommand),
    /// Centralizer dimensions.
    #[command(subcommand)]
    Cent(CentCommand),
    /// Run the acceptance suite.
    Selftest {
        /// Skip the (2,2) shapes.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Walls {
    #[arg(long, value_parser = clap::value_parser!(u64).range(0..=4))]
    pub r: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(0..=4))]
    pub s: u64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Shape {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=6))]
    pub n: u64,
    #[command(flatten)]
    pub walls: Walls,
}

impl Shape {
    fn nrs(&self) -> (usize, usize, usize) {
        (
            self.n as usize,
            self.walls.r as usize,
            self.walls.s as usize,
        )
    }
}

#[derive(Debug, Subcommand)]
pub enum BdCommand {
    /// Compose two diagrams (the first one on the bottom).
    Mul {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sign and normal form of a diagram.
    Normalize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The statistics ℓ1, ℓ2, ρ1, ρ2, p1, p2, c, α, β, γ.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// The normal-form basis of BD_{r,s}.
    Basis {
        #[command(flatten)]
        walls: Walls,
        #[arg(long)]
        count_only: bool,
    },
    /// The 12-bead example diagram on (4,3).
    Example {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BcCommand {
    /// Matrix of one generator.
    Rep {
        #[command(flatten)]
        shape: Shape,
        /// t1, tstar1, e, c1, cstar1, t1^-1, …
        #[arg(long)]
        gen: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Defining relations, Hecke, cap/cup and skein identities as matrix identities.
    Check {
        #[command(flatten)]
        shape: Shape,
    },
    /// Normal-form monomials.
    Basis {
        #[command(flatten)]
        walls: Walls,
        #[arg(long)]
        count_only: bool,
    },
    /// Rank of the monomial images against the basis count.
    Dim {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Evaluation at q = 1.
    Limit {
        #[command(flatten)]
        shape: Shape,
    },
}

#[derive(Debug, Subcommand)]
pub enum AqCommand {
    /// Degree-two quotient against the Hecke-Clifford commutant, and the walled relations.
    Dual {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=3))]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CentCommand {
    /// Supercommutant of the U_q, BC_{r,s}(q) or classical q(n) action on tensor space
    Dim {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Probabilistic,
}

impl From<Mode> for RankMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => RankMode::Exact,
            Mode::Probabilistic => RankMode::Probabilistic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Uq,
    Bc,
    Classical,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Uq => Side::Uq,
            SideArg::Bc => Side::Bc,
            SideArg::Classical => Side::Classical,
        }
    }
}

/// A rejected command line, with the exit code it maps to (0 for --help).
#[derive(Debug)]
pub struct UsageError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<clap::Error> for UsageError {
    fn from(e: clap::Error) -> Self {
        let code = match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
            ErrorKind::MissingRequiredArgument
            | ErrorKind::MissingSubcommand
            | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_MISSING_FLAG,
            ErrorKind::ValueValidation | ErrorKind::InvalidValue => EXIT_OUT_OF_RANGE,
            _ => EXIT_UNKNOWN_FLAG,
        };
        Self {
            code,
            message: e.render().to_string(),
        }
    }
}

fn out_of_range(msg: String) -> UsageError {
    UsageError {
        code: EXIT_OUT_OF_RANGE,
        message: format!("error: {msg}\n"),
    }
}

fn walls_nonempty(w: &Walls) -> Result<(), UsageError> {
    if w.r + w.s == 0 {
        return Err(out_of_range("need r + s ≥ 1".into()));
    }
    Ok(())
}

/// Parses and validates a command line (argv[0] included).
pub fn parse_args<I, T>(argv: I) -> Result<Cli, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    match &cli.command {
        Command::Bd(BdCommand::Basis { walls, .. })
        | Command::Bc(BcCommand::Basis { walls, .. }) => walls_nonempty(walls)?,
        Command::Bc(BcCommand::Rep { shape, gen, .. }) => {
            walls_nonempty(&shape.walls)?;
            let g: QGen = gen
                .parse()
                .map_err(|e: Error| out_of_range(e.to_string()))?;
            let (_, r, s) = shape.nrs();
            if !g.is_valid(r, s) {
                return Err(out_of_range(format!(
                    "generator {g} does not exist for (r,s)=({r},{s})"
                )));
            }
        }
        Command::Bc(
            BcCommand::Check { shape } | BcCommand::Dim { shape, .. } | BcCommand::Limit { shape },
        )
        | Command::Cent(CentCommand::Dim { shape, .. }) => walls_nonempty(&shape.walls)?,
        _ => {}
    }
    Ok(cli)
}

/// A finished command: its report plus an optional payload.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub data: Option<Value>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(&self.report).expect("report serializes");
        if let Some(d) = &self.data {
            v["data"] = d.clone();
        }
        v
    }
}

/// Pretty JSON with a trailing newline: the on-disk format of every artifact.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn read_json(p: &Path) -> Result<Value, Error> {
    let text = fs::read_to_string(p)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
}

fn write_json(p: &Path, v: &Value) -> Result<(), Error> {
    fs::write(p, render_json(v))
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display())))
}

fn read_diagram(p: &Path) -> Result<BeadDiagram, Error> {
    BeadDiagram::from_json(&read_json(p)?)
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn basis_size(r: usize, s: usize) -> usize {
    (1 << (r + s)) * factorial(r + s)
}

fn relation_items(checks: &[RelationCheck]) -> Vec<Check> {
    checks
        .iter()
        .map(|c| match c.status {
            CheckStatus::Skipped => Check::info(&c.id, "not applicable"),
            s => Check::holds(&c.id, s == CheckStatus::Holds),
        })
        .collect()
}

fn finish(title: String, items: Vec<Check>, started: Instant, data: Option<Value>) -> Outcome {
    Outcome {
        report: Report::new(title, items, started),
        data,
    }
}

fn run_bd(cmd: &BdCommand, started: Instant) -> Result<Outcome, Error> {
    match cmd {
        BdCommand::Mul { a, b, out } => {
            let (da, db) = (read_diagram(a)?, read_diagram(b)?);
            let Some(prod) = da.multiply_raw(&db)? else {
                let items = vec![Check::info("product", "0 (closed loop)")];
                return Ok(finish("bd mul".into(), items, started, Some(Value::Null)));
            };
            let (sign, nd) = normalize(&prod);
            if let Some(p) = out {
                write_json(p, &prod.to_json())?;
            }
            let items = vec![Check::info("sign", sign), Check::info("normal form", &nd)];
            let data =
                json!({"product": prod.to_json(), "sign": sign, "normal_form": nd.to_string()});
            Ok(finish("bd mul".into(), items, started, Some(data)))
        }
        BdCommand::Normalize { input, out } => {
            let d = read_diagram(input)?;
            let (sign, nd) = normalize(&d);
            let nd_json = nd.to_bead_diagram().to_json();
            if let Some(p) = out {
                write_json(p, &nd_json)?;
            }
            let items = vec![Check::info("sign", sign), Check::info("normal form", &nd)];
            let data = json!({"sign": sign, "normal_form": nd.to_string(), "diagram": nd_json});
            Ok(finish("bd normalize".into(), items, started, Some(data)))
        }
        BdCommand::Stats { input } => {
            let d = read_diagram(input)?;
            let st = statistics(&d);
            let (sign, nd) = normalize(&d);
            let names = [
                "l1", "l2", "rho1", "rho2", "p1", "p2", "c", "alpha", "beta", "gamma",
            ];
            let mut items: Vec<Check> = names
                .iter()
                .zip(st.as_tuple())
                .map(|(k, v)| Check::info(*k, v))
                .collect();
            items.push(Check::info("sign", sign));
            items.push(Check::info("normal form", &nd));
            items.push(Check::eq(
                "gamma = 0 iff normal",
                st.gamma == 0,
                d == nd.to_bead_diagram(),
            ));
            let data = serde_json::to_value(st).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(finish("bd stats".into(), items, started, Some(data)))
        }
        BdCommand::Basis { walls, count_only } => {
            let (r, s) = (walls.r as usize, walls.s as usize);
            let basis = enumerate_basis(r, s);
            let items = vec![Check::eq("count", basis_size(r, s), basis.len())];
            let data = (!count_only)
                .then(|| json!(basis.iter().map(ToString::to_string).collect::<Vec<_>>()));
            Ok(finish(format!("bd basis ({r},{s})"), items, started, data))
        }
        BdCommand::Example { out } => {
            let d = worked_example().to_json();
            if let Some(p) = out {
                write_json(p, &d)?;
            }
            Ok(finish(
                "bd example".into(),
                vec![Check::info("beads", 12)],
                started,
                Some(d),
            ))
        }
    }
}

fn run_bc(cmd: &BcCommand, started: Instant) -> Result<Outcome, Error> {
    match cmd {
        BcCommand::Rep { shape, gen, out } => {
            let (n, r, s) = shape.nrs();
            let g: QGen = gen.parse()?;
            let m = generator_matrix(g, n, r, s)?;
            let v = m.to_json()?;
            if let Some(p) = out {
                write_json(p, &v)?;
            }
            let parity = m.parity().map_or("mixed".to_string(), |p| p.to_string());
            let items = vec![
                Check::info("nonzero entries", m.nnz()),
                Check::info("parity", parity),
            ];
            Ok(finish(
                format!("bc rep {g} ({n},{r},{s})"),
                items,
                started,
                Some(v),
            ))
        }
        BcCommand::Check { shape } => {
            let (n, r, s) = shape.nrs();
            let mut items = relation_items(&check_all_relations(n, r, s)?);
            items.extend(hecke_checks(n));
            items.extend(cap_cup_checks(n)?);
            items.extend(skein_checks(n, r, s)?);
            Ok(finish(
                format!("bc check ({n},{r},{s})"),
                items,
                started,
                None,
            ))
        }
        BcCommand::Basis { walls, count_only } => {
            let (r, s) = (walls.r as usize, walls.s as usize);
            let ms = enumerate_normal_monomials(r, s);
            let items = vec![Check::eq("count", basis_size(r, s), ms.len())];
            let data = (!count_only)
                .then(|| json!(ms.iter().map(ToString::to_string).collect::<Vec<_>>()));
            Ok(finish(format!("bc basis ({r},{s})"), items, started, data))
        }
        BcCommand::Dim { shape, mode } => {
            let (n, r, s) = shape.nrs();
            let c = certify_dimension(n, r, s, (*mode).into())?;
            let mut items = vec![
                Check::info("count", c.count),
                Check::info("rank", c.rank.rank),
            ];
            if n >= r + s {
                items.push(Check::eq("rank = count", c.count, c.rank.rank));
            } else {
                items.push(Check::info(
                    "n < r + s",
                    "rank recorded, no equality expected",
                ));
            }
            if !c.rank.points.is_empty() {
                items.push(Check::info("evaluation points", c.rank.points.join(", ")));
            }
            let data = json!({"count": c.count, "rank": c.rank.rank, "certified": c.certified,
                "mode": c.rank.mode, "points": c.rank.points, "ranks_at_points": c.rank.ranks_at_points});
            Ok(finish(
                format!("bc dim ({n},{r},{s})"),
                items,
                started,
                Some(data),
            ))
        }
        BcCommand::Limit { shape } => {
            let (n, r, s) = shape.nrs();
            let lim = classical_limit_check(n, r, s)?;
            let mut items = lim.checks.clone();
            items.extend(relation_items(&lim.relations));
            if n >= r + s {
                items.push(Check::eq("rank at q=1", lim.count, lim.rank_at_one));
            } else {
                items.push(Check::info("rank at q=1", lim.rank_at_one));
            }
            Ok(finish(
                format!("bc limit ({n},{r},{s})"),
                items,
                started,
                None,
            ))
        }
    }
}

fn run_aq(cmd: &AqCommand, started: Instant) -> Result<Outcome, Error> {
    let AqCommand::Dual { n } = cmd;
    let n = *n as usize;
    let span = aq_relation_span(n, 2)?;
    let hc = hecke_clifford_commutant_dim(n)?;
    let all = aq_relation_rank_all(n);
    let w = wta_relation_check(n)?;
    let items = vec![
        Check::info("free dimension", span.free_dim),
        Check::eq("quotient = HC_2 commutant", hc, span.quotient_dim),
        Check::eq("span reduction", all, span.relation_rank),
        Check::eq(
            "walled relation rank = commutant codimension",
            w.commutant_codim,
            w.relation_rank,
        ),
    ];
    let data = json!({"span": span, "hecke_clifford_commutant": hc, "rank_all": all, "walled": w});
    Ok(finish(format!("aq dual n={n}"), items, started, Some(data)))
}

fn run_cent(cmd: &CentCommand, started: Instant) -> Result<Outcome, Error> {
    let CentCommand::Dim { shape, side, mode } = cmd;
    let (n, r, s) = shape.nrs();
    let rep = commutant_dim(n, r, s, (*side).into(), (*mode).into())?;
    let mut items = vec![
        Check::info("dimension", rep.dim),
        Check::info("even", rep.even),
        Check::info("odd", rep.odd),
    ];
    if !rep.points.is_empty() {
        items.push(Check::info("evaluation points", rep.points.join(", ")));
    }
    if *side != SideArg::Bc && n >= r + s {
        items.push(Check::eq("equals basis count", basis_size(r, s), rep.dim));
    }
    let data = serde_json::to_value(&rep).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(finish(
        format!("cent dim {side:?} ({n},{r},{s})").to_lowercase(),
        items,
        started,
        Some(data),
    ))
}

fn run_selftest(quick: bool, started: Instant) -> Outcome {
    let reports = acceptance::run_all(quick);
    let items = reports
        .iter()
        .map(|r| Check::holds(&r.title, r.passed()))
        .collect();
    let data = serde_json::to_value(&reports).expect("reports serialize");
    finish(
        if quick {
            "selftest (quick)"
        } else {
            "selftest"
        }
        .into(),
        items,
        started,
        Some(data),
    )
}

pub fn run(cli: &Cli) -> Result<Outcome, Error> {
    let started = Instant::now();
    match &cli.command {
        Command::Bd(c) => run_bd(c, started),
        Command::Bc(c) => run_bc(c, started),
        Command::Aq(c) => run_aq(c, started),
        Command::Cent(c) => run_cent(c, started),
        Command::Selftest { quick } => Ok(run_selftest(*quick, started)),
    }
}

/// The whole binary: parse, run, print, and return the exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.code == EXIT_PASS {
                print!("{e}");
            } else {
                eprint!("{e}");
            }
            return e.code;
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                print!("{}", render_json(&out.to_json()));
            } else {
                print!("{}", out.report);
                if let Command::Selftest { .. } = cli.command {
                    for r in out
                        .data
                        .iter()
                        .flat_map(|d| d.as_array().into_iter().flatten())
                    {
                        if let Ok(r) = serde_json::from_value::<Report>(r.clone()) {
                            if !r.passed() {
                                print!("{r}");
                            }
                        }
                    }
                } else if let Some(d) = &out.data {
                    print!("{}", render_json(d));
                }
            }
            out.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAIL
        }
    }
}
