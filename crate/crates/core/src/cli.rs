//! The `pillow` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! or parameter errors, 3 when an export cannot be written.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::degeneration::{build_table, check_table_conservation};
use crate::error::Error;
use crate::pillow::{
    build_pillow, cuple_reduction, face_adjacency_dot, line_degrees, line_intersection_dot,
    quadric_stage, to_json, two_surface_stage, verify_sphere_triangulation, verify_stage,
    PairCensus,
};
use crate::report::{Check, VerificationReport};
use crate::suite::{config_suite, family_suite};
use crate::surface::{
    branch_characters, del_pezzo, k3, scroll_p1p1, verify_character_identities, veronese,
    SurfaceClasses,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pillow", version, about = "Pillow degenerations of K3 surfaces and their branch curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Veronese,
    Scroll,
    Delpezzo,
    K3,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Export {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Graph {
    /// One node per triangle, edges along shared lines.
    Faces,
    /// One node per line, edges where lines meet.
    Lines,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Branch-curve characters of a surface.
    #[command(allow_negative_numbers = true)]
    Characters {
        #[arg(long, value_enum)]
        family: Family,
        /// Veronese or scroll parameter.
        #[arg(long)]
        r: Option<i64>,
        /// Del Pezzo degree, or the degree of a custom surface.
        #[arg(long)]
        d: Option<i64>,
        /// K3 genus.
        #[arg(long)]
        g: Option<i64>,
        #[arg(long)]
        kh: Option<i64>,
        #[arg(long)]
        k2: Option<i64>,
        #[arg(long)]
        euler: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the pillow configuration of bidegree (a, b).
    Pillow {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        /// Run the triangulation, degree and disjoint-pair checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum)]
        export: Option<Export>,
        /// Which graph a DOT export describes.
        #[arg(long, value_enum, default_value_t = Graph::Faces)]
        graph: Graph,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The degeneration table of the branch curve for the pillow (a, b).
    Table {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every check over a sweep of bidegrees, e.g. `--a 2..4 --b 2..4`.
    Verify {
        #[arg(long, value_parser = parse_range, default_value = "2..6")]
        a: (u32, u32),
        #[arg(long, value_parser = parse_range, default_value = "2..6")]
        b: (u32, u32),
        #[arg(long, default_value_t = 6)]
        limit: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// `lo..hi` (inclusive) or a single value.
fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("`{x}`: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => parse(s).map(|v| (v, v)),
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub checks: Vec<Check>,
    pub artifacts: Vec<String>,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl RunReport {
    fn new(command: &str, parameters: Value) -> Self {
        let parameters = match parameters {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        RunReport {
            command: command.to_string(),
            parameters,
            checks: Vec::new(),
            artifacts: Vec::new(),
            exit_code: EXIT_OK,
            result: None,
        }
    }

    fn add(&mut self, report: VerificationReport) {
        self.checks.extend(report.checks);
    }

    fn finish(mut self) -> Self {
        if self.exit_code == EXIT_OK && self.checks.iter().any(|c| !c.passed) {
            self.exit_code = EXIT_CHECK_FAILED;
        }
        self
    }
}

enum Failure {
    Usage(String),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedComplex(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let outcome = match cli.command {
        Command::Characters { family, r, d, g, kh, k2, euler, format } => {
            characters(family, [r, d, g, kh, k2, euler], format, out)
        }
        Command::Pillow { a, b, verify, export, graph, out: path, format } => {
            pillow(a, b, verify, export, graph, path, format, out, err)
        }
        Command::Table { a, b, format } => table(a, b, format, out),
        Command::Verify { a, b, limit, format } => sweep(a, b, limit, format, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CHECK_FAILED
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

fn emit(report: RunReport, format: Format, text: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = report.finish();
    match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(&report).expect("run report is serializable");
            writeln!(out, "{s}")?;
        }
        Format::Text => {
            write!(out, "{text}")?;
            for c in report.checks.iter().filter(|c| !c.passed) {
                writeln!(out, "FAIL {}: {} != {}", c.name, c.lhs, c.rhs)?;
            }
            let passed = report.checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed} of {} checks pass", report.checks.len())?;
        }
    }
    Ok(report.exit_code)
}

fn require(value: Option<i64>, flag: &str, family: &str) -> Result<i64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--family {family} requires --{flag}")))
}

fn characters(
    family: Family,
    [r, d, g, kh, k2, euler]: [Option<i64>; 6],
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let surface: SurfaceClasses = match family {
        Family::Veronese => veronese(require(r, "r", "veronese")?)?,
        Family::Scroll => scroll_p1p1(require(r, "r", "scroll")?)?,
        Family::Delpezzo => del_pezzo(require(d, "d", "delpezzo")?)?,
        Family::K3 => k3(require(g, "g", "k3")?)?,
        Family::Custom => SurfaceClasses::new(
            require(d, "d", "custom")?,
            require(kh, "kh", "custom")?,
            require(k2, "k2", "custom")?,
            require(euler, "euler", "custom")?,
            "custom",
        )?,
    };
    let c = branch_characters(&surface)?;
    let identities = verify_character_identities(&surface, &c);

    let mut text = format!(
        "surface: {} (d={}, K.H={}, K^2={}, e={})\nb={} n={} k={} t={}\n",
        surface.label, surface.d, surface.kh, surface.k2, surface.euler, c.b, c.n, c.k, c.t
    );
    for check in &identities.checks {
        let mark = if check.passed { "ok  " } else { "FAIL" };
        text.push_str(&format!("{mark} {}: {} = {}\n", check.name, check.lhs, check.rhs));
    }
    let mut report = RunReport::new(
        "characters",
        json!({ "d": surface.d, "kh": surface.kh, "k2": surface.k2, "euler": surface.euler }),
    );
    report.result = Some(json!({ "surface": surface, "characters": c }));
    report.add(identities);
    emit(report, format, &text, out)
}

#[allow(clippy::too_many_arguments)]
fn pillow(
    a: u32,
    b: u32,
    verify: bool,
    export: Option<Export>,
    graph: Graph,
    path: Option<PathBuf>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let c = build_pillow(a, b)?;
    if export.is_some() && path.is_none() && format == Format::Json {
        return Err(Failure::Usage("--export to stdout cannot be combined with --format json".into()));
    }
    let mut report = RunReport::new("pillow", json!({ "a": a, "b": b, "verify": verify }));
    let cuple = cuple_reduction(a, b)?;
    let mut text = format!(
        "V={} E={} F={} g={}",
        c.vertices.len(),
        c.lines.len(),
        c.triangles.len(),
        c.g
    );
    let mut result = json!({
        "vertices": c.vertices.len(),
        "lines": c.lines.len(),
        "triangles": c.triangles.len(),
        "g": c.g,
        "corners": c.corners(),
        "cuple": cuple,
    });

    if verify {
        report.add(verify_sphere_triangulation(&c));
        let degrees = line_degrees(&c);
        let mut census = VerificationReport::new();
        census.equal("vertices on 3 lines", degrees.values().filter(|&&d| d == 3).count() as i128, 4);
        census.equal(
            "vertices on 6 lines",
            degrees.values().filter(|&&d| d == 6).count() as i128,
            c.vertices.len() as i128 - 4,
        );
        report.add(census);
        let pairs = PairCensus::of(&c)?;
        let mut pair_checks = VerificationReport::new();
        pair_checks.equal("disjoint pairs: enumeration = degree count", pairs.brute_force, pairs.from_degrees);
        pair_checks.equal("disjoint pairs: enumeration = closed form", pairs.brute_force, pairs.formula);
        report.add(pair_checks);
        report.add(verify_stage(&quadric_stage(a, b)?));
        report.add(verify_stage(&two_surface_stage(a, b)?));
        text.push_str(&format!(
            "; disjoint pairs {} = formula {}",
            pairs.brute_force, pairs.formula
        ));
        result["disjoint_pairs"] = json!(pairs);
    }
    text.push_str(&format!(
        "\ncorners {}; gcd c={} (reduced bidegree {:?})\n",
        c.corners().map(|v| v.to_string()).join(","),
        cuple.c,
        cuple.reduced
    ));

    if let Some(kind) = export {
        let body = match (kind, graph) {
            (Export::Json, _) => to_json(&c),
            (Export::Dot, Graph::Faces) => face_adjacency_dot(&c),
            (Export::Dot, Graph::Lines) => line_intersection_dot(&c),
        };
        match &path {
            Some(p) => {
                std::fs::write(p, body).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
                report.artifacts.push(p.display().to_string());
            }
            None => {
                out.write_all(body.as_bytes())?;
                // Keep the export parseable; the summary goes to stderr.
                report.result = Some(result);
                let finished = report.finish();
                writeln!(err, "{}", text.trim_end())?;
                return Ok(finished.exit_code);
            }
        }
    }
    report.result = Some(result);
    let all_pass = report.checks.iter().all(|c| c.passed);
    if verify && all_pass {
        text = text.replacen('\n', "; all checks pass\n", 1);
    }
    emit(report, format, &text, out)
}

fn table(a: u32, b: u32, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let c = build_pillow(a, b)?;
    let table = build_table(&c)?;
    let mut report = RunReport::new("table", json!({ "a": a, "b": b }));
    report.add(check_table_conservation(&table)?);
    let text = table.to_string();
    report.result = Some(serde_json::to_value(&table).expect("table is serializable"));
    emit(report, format, &text, out)
}

fn sweep(
    (a_lo, a_hi): (u32, u32),
    (b_lo, b_hi): (u32, u32),
    limit: u32,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if a_lo > a_hi || b_lo > b_hi {
        return Err(Failure::Usage("empty bidegree range".into()));
    }
    if a_lo < 2 || b_lo < 2 || a_hi > limit || b_hi > limit {
        return Err(Failure::Usage(format!("bidegree ranges must lie within 2..{limit}")));
    }
    let mut report = RunReport::new(
        "verify",
        json!({ "a": [a_lo, a_hi], "b": [b_lo, b_hi], "limit": limit }),
    );
    let families = family_suite()?;
    let mut text = format!(
        "surface families: {}\n",
        if families.all_passed() { "ok" } else { "FAIL" }
    );
    for mut check in families.checks {
        check.name = format!("families: {}", check.name);
        report.checks.push(check);
    }

    text.push_str(&format!("{:>5}", "a\\b"));
    for b in b_lo..=b_hi {
        text.push_str(&format!(" {b:>4}"));
    }
    text.push('\n');
    let mut matrix = Vec::new();
    for a in a_lo..=a_hi {
        text.push_str(&format!("{a:>5}"));
        for b in b_lo..=b_hi {
            let checks = config_suite(a, b)?;
            let ok = checks.all_passed();
            text.push_str(&format!(" {:>4}", if ok { "ok" } else { "FAIL" }));
            matrix.push(json!({ "a": a, "b": b, "passed": ok, "checks": checks.checks.len() }));
            for mut check in checks.checks {
                check.name = format!("({a},{b}) {}", check.name);
                report.checks.push(check);
            }
        }
        text.push('\n');
    }
    report.result = Some(json!({ "matrix": matrix }));
    emit(report, format, &text, out)
}
