//! The `itri` command line.
//!
//! [`run`] takes the argument list and returns the process exit code, so the
//! binary is a one-liner and the whole interface is testable in-process.
//! Exit codes: 0 for success with solutions (or a passing verification),
//! 1 for a clean run that found nothing or failed verification, 2 for usage
//! and domain errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::arith::{fraction_string, parse_rational, rat_int, Integer, Rational};
use crate::curve::CurvePoint;
use crate::error::Error;
use crate::search::{self, isosceles_parameter, SearchConfig, SolutionRecord};
use crate::table::{builtin_rows, parse_rows, TableRow};
use crate::torsion::{deviations_from_closed_form, torsion_subgroup};
use crate::transform::RatioTarget;
use crate::triangle::{
    angles_degrees, euler_distance_sq, is_valid_triangle, near_equilateral_parameter, ratio,
    Triangle, Triple,
};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_EMPTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "itri",
    version,
    about = "Integer triangles with prescribed circumradius to inradius ratio"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Jsonl,
    /// Only for `table1`: columns N,f,g,h,pass.
    Csv,
}

#[derive(Debug, Args)]
pub struct SearchFlags {
    /// Largest denominator q in x = p/q (quartic) or e in u = m/e^2 (egg).
    #[arg(long, default_value_t = 200)]
    pub denominator_bound: u64,
    /// Largest |n| used when combining found points as T + nP.
    #[arg(long, default_value_t = 3)]
    pub multiple_bound: u64,
    /// Soft limit in seconds, checked between denominator batches.
    #[arg(long)]
    pub time_budget: Option<f64>,
}

impl SearchFlags {
    fn config(&self) -> Result<SearchConfig, String> {
        let time_budget = match self.time_budget {
            Some(s) if !(s.is_finite() && s >= 0.0) => {
                return Err(format!("invalid time budget {s}"))
            }
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        let cfg = SearchConfig {
            denominator_bound: self.denominator_bound,
            multiple_bound: self.multiple_bound,
            time_budget,
        };
        cfg.validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
pub struct OutputFlags {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write results to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for triangles with R/r = N.
    ///
    /// Runs the quartic sieve and the egg sieve up to the denominator bound,
    /// then combines the points found with torsion and small multiples.
    /// Rows of the built-in table whose generators have large height
    /// (N = 314, 386, 778, ...) are out of reach of a bounded search; check
    /// them with `table1` or `verify` instead.
    Solve {
        n: u64,
        #[command(flatten)]
        search: SearchFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Compute R/r exactly for sides f g h (integers or fractions).
    Verify {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Check the built-in table of sixteen triangles, or rows "N f g h" from a file.
    Table1 {
        file: Option<PathBuf>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Torsion subgroup of the curve for R/r = N or R/r = 2 + 1/M.
    Torsion {
        #[arg(long, conflicts_with = "m", required_unless_present = "m")]
        n: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Triangles with R/r = 2 + 1/M.
    NearEq {
        m: u64,
        /// Check the given sides instead of searching.
        #[arg(long, num_args = 3, value_names = ["F", "G", "H"])]
        verify: Option<Vec<String>>,
        #[command(flatten)]
        search: SearchFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Run the quartic sieve for every N in FROM..=TO.
    Scan {
        from: u64,
        to: u64,
        #[command(flatten)]
        search: SearchFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
}

/// One line of JSONL output. Exact values are decimal strings; angles are
/// fixed-precision decimals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue_mod_8: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residues: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            ..Default::default()
        }
    }

    fn with_sides(mut self, f: &Integer, g: &Integer, h: &Integer) -> Self {
        self.f = Some(f.to_string());
        self.g = Some(g.to_string());
        self.h = Some(h.to_string());
        self
    }

    fn with_point(mut self, p: &CurvePoint) -> Self {
        match p {
            CurvePoint::Infinity => self.u = Some("infinity".into()),
            CurvePoint::Affine { u, v } => {
                self.u = Some(fraction_string(u));
                self.v = Some(fraction_string(v));
            }
        }
        self
    }

    fn from_solution(command: &str, r: &SolutionRecord) -> Self {
        let mut o = OutputRecord::new(command).with_point(&r.point);
        o.target = Some(r.target.to_string());
        if let Some(t) = &r.triangle {
            o = o.with_sides(t.f(), t.g(), t.h());
            o.ratio = ratio(&t.as_triple()).ok().map(|q| fraction_string(&q));
            o.angles = Some(angle_strings(t));
        } else if let Some(s) = &r.representation {
            o = o.with_sides(&s.f, &s.g, &s.h);
            o.ratio = ratio(s).ok().map(|q| fraction_string(&q));
        }
        o.component = Some(r.component.to_string());
        o.provenance = Some(r.provenance.to_string());
        o.residue_mod_8 = r.residue_mod_8;
        o
    }

    fn human(&self) -> String {
        let mut parts = Vec::new();
        if let Some(t) = &self.target {
            parts.push(t.clone());
        }
        if let (Some(f), Some(g), Some(h)) = (&self.f, &self.g, &self.h) {
            parts.push(format!("({f}, {g}, {h})"));
        }
        if let Some(r) = &self.ratio {
            parts.push(format!("R/r={}", pretty(r)));
        }
        if let Some(u) = &self.u {
            match &self.v {
                Some(v) => parts.push(format!("point=({}, {})", pretty(u), pretty(v))),
                None => parts.push(format!("point={u}")),
            }
        }
        if let Some(k) = self.order {
            parts.push(format!("order={k}"));
        }
        if let Some(c) = &self.component {
            parts.push(c.clone());
        }
        if let Some(p) = &self.provenance {
            parts.push(p.clone());
        }
        if let Some(a) = &self.angles {
            parts.push(format!("angles={}", a.join("/")));
        }
        if let Some(v) = self.valid {
            parts.push(if v {
                "valid triangle".into()
            } else {
                "not a triangle".into()
            });
        }
        if let Some(p) = self.pass {
            parts.push(if p { "PASS".into() } else { "FAIL".into() });
        }
        if let Some(r) = self.residue_mod_8 {
            parts.push(format!("N mod 8 = {r}"));
        }
        if let Some(h) = &self.residues {
            let hist: Vec<String> = h.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            parts.push(format!("residues mod 8 {{{}}}", hist.join(", ")));
        }
        if let Some(n) = &self.note {
            parts.push(n.clone());
        }
        parts.join("  ")
    }
}

/// `"26/1"` reads better as `"26"` on a terminal.
fn pretty(fraction: &str) -> &str {
    fraction.strip_suffix("/1").unwrap_or(fraction)
}

fn angle_strings(t: &Triangle) -> Vec<String> {
    angles_degrees(t)
        .iter()
        .map(|a| format!("{a:.4}"))
        .collect()
}

/// Where records go: stdout or the `--out` file. Notes for humans go to the
/// same place in table mode and to stderr otherwise, so JSONL stays clean.
struct Sink {
    format: Format,
    out: Box<dyn Write>,
}

impl Sink {
    fn open(flags: &OutputFlags) -> io::Result<Self> {
        let out: Box<dyn Write> = match &flags.out {
            Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
            None => Box::new(io::stdout()),
        };
        Ok(Sink {
            format: flags.format,
            out,
        })
    }

    fn record(&mut self, r: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Jsonl => {
                let line = serde_json::to_string(r).map_err(io::Error::other)?;
                writeln!(self.out, "{line}")
            }
            _ => writeln!(self.out, "{}", r.human()),
        }
    }

    fn note(&mut self, msg: &str) -> io::Result<()> {
        match self.format {
            Format::Table => writeln!(self.out, "{msg}"),
            _ => {
                eprintln!("{msg}");
                Ok(())
            }
        }
    }

    fn raw(&mut self, line: &str) -> io::Result<()> {
        writeln!(self.out, "{line}")
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_FOUND
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_FOUND,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Solve { n, search, output } => cmd_solve(n, &search, &output),
        Command::Verify { f, g, h, output } => cmd_verify([&f, &g, &h], &output),
        Command::Table1 { file, output } => cmd_table1(file.as_ref(), &output),
        Command::Torsion { n, m, output } => cmd_torsion(n, m, &output),
        Command::NearEq {
            m,
            verify,
            search,
            output,
        } => cmd_near_eq(m, verify.as_deref(), &search, &output),
        Command::Scan {
            from,
            to,
            search,
            output,
        } => cmd_scan(from, to, &search, &output),
    }
}

fn no_csv(output: &OutputFlags) -> std::result::Result<(), Failure> {
    if output.format == Format::Csv {
        return Err(Failure::Usage(
            "--format csv is only available for table1".into(),
        ));
    }
    Ok(())
}

fn integer_target(n: u64) -> std::result::Result<RatioTarget, Failure> {
    RatioTarget::integer(n).map_err(|e| match e {
        Error::SingularCurve => Failure::Usage(
            "N = 2 is the equilateral case: the curve is singular there and the only triangle is (1, 1, 1)".into(),
        ),
        other => other.into(),
    })
}

fn cmd_solve(n: u64, flags: &SearchFlags, output: &OutputFlags) -> Outcome {
    no_csv(output)?;
    let target = integer_target(n)?;
    let cfg = flags.config().map_err(Failure::Usage)?;
    let records = search::solve(&target, &cfg)?;
    let mut sink = Sink::open(output)?;
    for r in &records {
        sink.record(&OutputRecord::from_solution("solve", r))?;
    }
    if records.is_empty() {
        sink.note(&format!(
            "no triangles up to bound {} for {target}",
            cfg.denominator_bound
        ))?;
        return Ok(EXIT_EMPTY);
    }
    Ok(EXIT_FOUND)
}

fn parse_sides(sides: [&str; 3]) -> std::result::Result<[Rational; 3], Failure> {
    let parse = |s: &str| {
        parse_rational(s)
            .ok_or_else(|| Failure::Usage(format!("'{s}' is not an integer or fraction")))
    };
    Ok([parse(sides[0])?, parse(sides[1])?, parse(sides[2])?])
}

fn cmd_verify(sides: [&str; 3], output: &OutputFlags) -> Outcome {
    no_csv(output)?;
    let [f, g, h] = parse_sides(sides)?;
    let triple = Triple::from_rationals(&f, &g, &h);
    let q = ratio(&triple)
        .map_err(|_| Failure::Usage(format!("degenerate sides {triple}: zero area")))?;
    let valid = is_valid_triangle(&triple);
    let mut o = OutputRecord::new("verify").with_sides(&triple.f, &triple.g, &triple.h);
    o.ratio = Some(fraction_string(&q));
    o.valid = Some(valid);
    let kind = if q.is_integer() {
        Some(format!("R/r is the integer {}", q.numer()))
    } else {
        near_equilateral_parameter(&q).map(|m| format!("R/r = 2 + 1/{m}"))
    };
    let mut notes = Vec::new();
    if valid {
        let t = Triangle::new(triple.f.clone(), triple.g.clone(), triple.h.clone())?;
        o.angles = Some(angle_strings(&t));
        let d2 = euler_distance_sq(&t);
        let sign = match d2.cmp(&Rational::from_integer(0.into())) {
            std::cmp::Ordering::Greater => "d^2 > 0",
            std::cmp::Ordering::Equal => "d^2 = 0",
            std::cmp::Ordering::Less => "d^2 < 0",
        };
        notes.push(sign.to_string());
        if q.is_integer() {
            o.residue_mod_8 = u8::try_from(((q.numer() % 8u32) + 8u32) % 8u32).ok();
        }
    }
    notes.push(
        kind.clone()
            .unwrap_or_else(|| "R/r is neither an integer nor 2 + 1/M".into()),
    );
    o.note = Some(notes.join("; "));
    let mut sink = Sink::open(output)?;
    sink.record(&o)?;
    Ok(if valid && kind.is_some() {
        EXIT_FOUND
    } else {
        EXIT_EMPTY
    })
}

fn cmd_table1(file: Option<&PathBuf>, output: &OutputFlags) -> Outcome {
    let rows: Vec<TableRow> = match file {
        Some(path) => parse_rows(&fs::read_to_string(path)?)?,
        None => builtin_rows(),
    };
    let mut sink = Sink::open(output)?;
    if output.format == Format::Csv {
        sink.raw("N,f,g,h,pass")?;
    }
    let mut passed = 0;
    for row in &rows {
        let pass = row.check();
        passed += usize::from(pass);
        match output.format {
            Format::Csv => {
                sink.raw(&format!("{},{},{},{},{}", row.n, row.f, row.g, row.h, pass))?
            }
            _ => {
                let mut o = OutputRecord::new("table1").with_sides(&row.f, &row.g, &row.h);
                o.target = Some(format!("N={}", row.n));
                o.ratio = ratio(&row.triple()).ok().map(|q| fraction_string(&q));
                o.pass = Some(pass);
                o.residue_mod_8 = Some(row.residue_mod_8());
                if row.is_equilateral_row() {
                    o.note = Some(
                        "equilateral case, excluded from the curve family (singular at N = 2)"
                            .into(),
                    );
                }
                sink.record(&o)?;
            }
        }
    }
    sink.note(&format!("{passed}/{} rows pass", rows.len()))?;
    let off_residue: Vec<String> = rows
        .iter()
        .filter(|r| !r.is_equilateral_row() && r.residue_mod_8() != 2)
        .map(|r| r.n.to_string())
        .collect();
    if off_residue.is_empty() {
        sink.note("every row has N = 2 (mod 8)")?;
    } else {
        sink.note(&format!(
            "rows with N not 2 (mod 8): {}",
            off_residue.join(", ")
        ))?;
    }
    Ok(if passed == rows.len() {
        EXIT_FOUND
    } else {
        EXIT_EMPTY
    })
}

fn cmd_torsion(n: Option<u64>, m: Option<u64>, output: &OutputFlags) -> Outcome {
    no_csv(output)?;
    let target = match (n, m) {
        (Some(n), _) => integer_target(n)?,
        (None, Some(m)) => RatioTarget::near_equilateral(m)?,
        (None, None) => return Err(Failure::Usage("one of --n or --m is required".into())),
    };
    let curve = target.curve();
    let report = torsion_subgroup(&curve)?;
    let mut sink = Sink::open(output)?;
    for (p, k) in &report.points {
        let mut o = OutputRecord::new("torsion").with_point(p);
        o.target = Some(target.to_string());
        o.order = Some(*k);
        if !p.is_infinity() {
            o.component = Some(curve.component_of(p)?.to_string());
        }
        sink.record(&o)?;
    }
    let mut summary = OutputRecord::new("torsion");
    summary.target = Some(target.to_string());
    summary.note = Some(format!(
        "structure {} with {} points",
        report.structure,
        report.len()
    ));
    sink.record(&summary)?;
    for d in deviations_from_closed_form(&curve, &report) {
        eprintln!("WARNING: {target}: {d}");
    }
    Ok(EXIT_FOUND)
}

fn cmd_near_eq(
    m: u64,
    verify: Option<&[String]>,
    flags: &SearchFlags,
    output: &OutputFlags,
) -> Outcome {
    no_csv(output)?;
    let target = RatioTarget::near_equilateral(m)?;
    let mut sink = Sink::open(output)?;
    if let Some(sides) = verify {
        let [f, g, h] = parse_sides([&sides[0], &sides[1], &sides[2]])?;
        let triple = Triple::from_rationals(&f, &g, &h);
        let q = ratio(&triple)
            .map_err(|_| Failure::Usage(format!("degenerate sides {triple}: zero area")))?;
        let valid = is_valid_triangle(&triple);
        let mut o = OutputRecord::new("near-eq").with_sides(&triple.f, &triple.g, &triple.h);
        o.target = Some(target.to_string());
        o.ratio = Some(fraction_string(&q));
        o.valid = Some(valid);
        let pass = valid && q == target.rho();
        o.pass = Some(pass);
        if valid {
            o.angles = Some(angle_strings(&Triangle::new(
                triple.f.clone(),
                triple.g.clone(),
                triple.h.clone(),
            )?));
        }
        sink.record(&o)?;
        return Ok(if pass { EXIT_FOUND } else { EXIT_EMPTY });
    }
    let cfg = flags.config().map_err(Failure::Usage)?;
    let records = search::near_equilateral(m, &cfg)?;
    for r in &records {
        sink.record(&OutputRecord::from_solution("near-eq", r))?;
    }
    if let Some(k) = isosceles_parameter(m) {
        sink.note(&format!(
            "M = 2k^2 + 2k with k = {k}: triangles from torsion points on the egg"
        ))?;
    }
    if records.is_empty() {
        sink.note(&format!(
            "no triangles up to bound {} for {target}",
            cfg.denominator_bound
        ))?;
        return Ok(EXIT_EMPTY);
    }
    Ok(EXIT_FOUND)
}

fn cmd_scan(from: u64, to: u64, flags: &SearchFlags, output: &OutputFlags) -> Outcome {
    no_csv(output)?;
    if from < 3 || from > to {
        return Err(Failure::Usage(format!(
            "invalid range {from}..{to}: need 3 <= from <= to"
        )));
    }
    let cfg = flags.config().map_err(Failure::Usage)?;
    let report = search::scan_range(from, to, &cfg)?;
    let mut sink = Sink::open(output)?;
    for r in &report.records {
        sink.record(&OutputRecord::from_solution("scan", r))?;
    }
    let mut summary = OutputRecord::new("scan-summary");
    summary.residues = Some(
        report
            .residues
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
    );
    let ns: Vec<String> = report.triangle_ns.iter().map(u64::to_string).collect();
    summary.note = Some(format!(
        "N in {from}..={to} with triangles up to bound {}: [{}]",
        cfg.denominator_bound,
        ns.join(", ")
    ));
    sink.record(&summary)?;
    let exceptions = report.residue_exceptions();
    if exceptions.is_empty() {
        return Ok(EXIT_FOUND);
    }
    eprintln!("WARNING: triangle-bearing N not congruent to 2 mod 8: {exceptions:?}");
    Ok(EXIT_EMPTY)
}

/// Exact ratio recomputed from an emitted record's sides, for checking
/// output consistency.
pub fn recompute_ratio(o: &OutputRecord) -> Option<String> {
    let side = |s: &Option<String>| {
        s.as_ref()
            .and_then(|x| x.parse::<Integer>().ok())
            .map(rat_int)
    };
    let t = Triple::from_rationals(&side(&o.f)?, &side(&o.g)?, &side(&o.h)?);
    ratio(&t).ok().map(|q| fraction_string(&q))
}
