//! The `toric-contact` command line.
//!
//! Commands that produce a datum, cone or presentation always print JSON so
//! they can be piped into the next command. Report commands print text by
//! default and JSON with `--output json`.
//!
//! Exit codes: 0 success, 1 the mathematics says no, 2 bad input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::contact::{ReebMode, Regularity, ToricContactDatum};
use crate::document::{
    datum_to_json, parse_datum, parse_presentation, to_json, vertex_documents, ClassificationDocument,
    ConeDocument, DatumDocument, PresentationDocument, VerificationDocument,
};
use crate::error::{Error, Result};
use crate::lattice::{format_rat, parse_rat, rat_to_int, Rat};
use crate::reduction::{synthesize, verify_presentation};
use crate::sphere::{convexity_sample_check, weighted_simplex, SampleReport, WeightVector, DEFAULT_TOL};

#[derive(Debug, Parser)]
#[command(name = "toric-contact", version, about = "Exact computations with toric contact manifolds of Reeb type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Rational,
    Irrational,
}

#[derive(Debug, Args)]
struct DatumInput {
    /// Datum document; standard input when absent or `-`.
    file: Option<PathBuf>,
    /// Override the document's mode.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a datum and print it in normalized form.
    Validate {
        #[command(flatten)]
        input: DatumInput,
        /// Print the vertices and their facets instead of the datum.
        #[arg(long)]
        emit_vertices: bool,
    },
    /// Isotropy, leaf holonomy and regularity of every face.
    Classify {
        #[command(flatten)]
        input: DatumInput,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// The moment cone over the polytope.
    Cone {
        #[command(flatten)]
        input: DatumInput,
    },
    /// Re-slice the moment cone with another characteristic vector.
    Slice {
        #[command(flatten)]
        input: DatumInput,
        /// Comma-separated integers.
        #[arg(long)]
        reeb: String,
    },
    /// Present the datum as a torus reduction of a sphere.
    Reduce {
        #[command(flatten)]
        input: DatumInput,
    },
    /// Check that a presentation reduces to the datum.
    Verify {
        #[command(flatten)]
        input: DatumInput,
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// The weighted simplex of the sphere with weights `a`.
    Sphere {
        /// Comma-separated positive integers or rationals.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        emit_vertices: bool,
    },
    /// Sample the sphere moment map and check convexity.
    Sample {
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, holds: bool) -> Self {
        Outcome { code: if holds { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn input_error(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Runs the command line `args` (program name first) with `stdin` as
/// standard input.
pub fn run<I, S>(args: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::input_error(text)
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::input_error(format!("error: {e}\n")),
    }
}

fn read_input(file: &Option<PathBuf>, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Result<String> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        }
        _ => stdin().map_err(|e| Error::Parse(format!("standard input: {e}"))),
    }
}

fn load_datum(input: &DatumInput, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Result<ToricContactDatum> {
    let text = read_input(&input.file, stdin)?;
    match input.mode {
        None => parse_datum(&text),
        Some(mode) => {
            let mut doc: DatumDocument =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("syntax error: {e}")))?;
            doc.mode = match mode {
                Mode::Rational => ReebMode::Rational,
                Mode::Irrational => ReebMode::Irrational,
            };
            doc.into_datum()
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<Rat>> {
    text.split(',').map(|s| parse_rat(s.trim())).collect()
}

fn line(out: String) -> String {
    out + "\n"
}

fn execute(command: Command, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Result<Outcome> {
    Ok(match command {
        Command::Validate { input, emit_vertices } => {
            let d = load_datum(&input, stdin)?;
            let text = if emit_vertices { to_json(&vertex_documents(&d)) } else { datum_to_json(&d) };
            Outcome::ok(line(text), true)
        }
        Command::Classify { input, output } => {
            let report = load_datum(&input, stdin)?.classify()?;
            let doc = ClassificationDocument::from_report(&report);
            let text = match output {
                Output::Json => line(to_json(&doc)),
                Output::Text => classification_text(&doc),
            };
            Outcome::ok(text, true)
        }
        Command::Cone { input } => {
            let d = load_datum(&input, stdin)?;
            let cone = d.polytope().cone_over(&d.integral_reeb()?)?;
            Outcome::ok(line(to_json(&ConeDocument::from_cone(&cone))), true)
        }
        Command::Slice { input, reeb } => {
            let d = load_datum(&input, stdin)?;
            let reeb = rat_to_int(&parse_list(&reeb)?).ok_or(Error::NonIntegralReeb)?;
            Outcome::ok(line(datum_to_json(&d.perturb_reeb(&reeb)?)), true)
        }
        Command::Reduce { input } => {
            let p = synthesize(&load_datum(&input, stdin)?)?;
            Outcome::ok(line(to_json(&PresentationDocument::from_presentation(&p))), true)
        }
        Command::Verify { input, presentation, output } => {
            let d = load_datum(&input, stdin)?;
            let text = std::fs::read_to_string(&presentation)
                .map_err(|e| Error::Parse(format!("{}: {e}", presentation.display())))?;
            let report = verify_presentation(&parse_presentation(&text)?, &d)?;
            let doc = VerificationDocument::from_report(&report);
            let text = match output {
                Output::Json => line(to_json(&doc)),
                Output::Text => verification_text(&doc),
            };
            Outcome::ok(text, doc.holds)
        }
        Command::Sphere { weights, emit_vertices } => {
            let d = weighted_simplex(&WeightVector::from_rationals(&parse_list(&weights)?)?)?;
            let text = if emit_vertices { to_json(&vertex_documents(&d)) } else { datum_to_json(&d) };
            Outcome::ok(line(text), true)
        }
        Command::Sample { weights, count, seed, tol, output } => {
            let a = WeightVector::from_rationals(&parse_list(&weights)?)?;
            let report = convexity_sample_check(&a, count, seed, tol)?;
            let text = match output {
                Output::Json => line(to_json(&report)),
                Output::Text => sample_text(&report),
            };
            Outcome::ok(text, report.holds())
        }
    })
}

fn join<T: AsRef<str>>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().join(", ")
}

fn classification_text(doc: &ClassificationDocument) -> String {
    let mut out = String::new();
    let regularity = match doc.regularity {
        Regularity::Regular => "regular",
        Regularity::QuasiRegular => "quasi-regular",
    };
    let nontrivial = doc.faces.iter().filter(|f| f.holonomy.name != "trivial").count();
    writeln!(out, "regularity: {regularity}").unwrap();
    writeln!(out, "sasakian compatible: {}", doc.sasakian_compatible).unwrap();
    writeln!(out, "faces: {} ({nontrivial} with nontrivial holonomy)", doc.faces.len()).unwrap();
    for f in &doc.faces {
        let basis = join(f.isotropy_basis.iter().map(|v| format!("({})", join(v.iter().map(|x| x.0.to_string())))));
        writeln!(
            out,
            "face {{{}}}: holonomy {}; isotropy [{}]; point ({})",
            join(f.face.iter().map(ToString::to_string)),
            f.holonomy.name,
            basis,
            join(f.sample_point.iter().map(|r| format_rat(&r.0))),
        )
        .unwrap();
    }
    out
}

fn verification_text(doc: &VerificationDocument) -> String {
    let mut out = String::new();
    writeln!(out, "verdict: {}", if doc.holds { "holds" } else { "fails" }).unwrap();
    writeln!(out, "polytope match: {}", doc.polytope_match).unwrap();
    writeln!(out, "smooth: {}", doc.smooth).unwrap();
    for f in &doc.failures {
        writeln!(out, "failure: {f}").unwrap();
    }
    for d in &doc.vertex_diff {
        writeln!(out, "{} vertex ({}) {}", d.space, join(d.coords.iter().map(|r| format_rat(&r.0))), d.side).unwrap();
    }
    for s in &doc.local_freeness {
        let order = s.group.order.as_ref().map_or_else(|| "infinite".to_string(), |o| o.0.to_string());
        writeln!(
            out,
            "vertex {} at facets {{{}}}: stabilizer {} (order {order})",
            s.vertex,
            join(s.active.iter().map(ToString::to_string)),
            s.group.name,
        )
        .unwrap();
    }
    out
}

fn sample_text(r: &SampleReport) -> String {
    let mut out = String::new();
    writeln!(out, "weights: {}", join(r.weights.iter().map(ToString::to_string))).unwrap();
    writeln!(out, "count: {}  seed: {}  tol: {:e}", r.count, r.seed, r.tol).unwrap();
    writeln!(out, "max facet violation: {:e}", r.max_facet_violation).unwrap();
    writeln!(out, "max hyperplane residual: {:e}", r.max_hyperplane_residual).unwrap();
    writeln!(out, "violations: {}", r.violations.len()).unwrap();
    for v in &r.violations {
        writeln!(out, "sample {}: facet {:e} residual {:e}", v.index, v.facet_violation, v.hyperplane_residual).unwrap();
    }
    out
}
