//! `sdrg`: analyze graphs, inspect intersection arrays, generate witness
//! graphs and scan for feasible arrays.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when an analysis finds the
//! spectral verdicts disagreeing with the direct checks.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use sdrg_core::scan::{open_question_report, scan_with, Tag};
use sdrg_core::spectrum::{moment_residuals, spectrum_report};
use sdrg_core::format::render_interval;
use sdrg_core::{
    analyze_with, check_fields, check_report, cycle, hadamard_graph, hadamard_matrix_sylvester,
    hypercube, kneser, Graph, IntersectionArray, Precision, SignMatrix, Spectrum,
};

const EXIT_INPUT: u8 = 1;
const EXIT_INCONSISTENT: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "sdrg", version, about = "Checks for strongly distance-regular graphs of diameter four")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Width to which irrational eigenvalues are refined.
    #[arg(long, global = true, default_value_t = 1e-12)]
    epsilon: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a graph file: direct checks, spectral predicates and their agreement.
    Analyze { path: PathBuf },
    /// Eigenvalues, multiplicities, pi-products and moment residuals of an array.
    Spectrum {
        /// Intersection array, e.g. "4 3 2 1 ; 1 2 3 4".
        array: String,
    },
    /// Both conditions and the multiplicity patterns of an array.
    Check { array: String },
    /// Write a graph from one of the built-in families.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Output path; standard output when omitted.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Enumerate arrays with b0 <= k-max and n <= n-max.
    Scan {
        #[arg(long)]
        k_max: u64,
        #[arg(long)]
        n_max: u64,
        /// Only print arrays satisfying condition 1 but not condition 2.
        #[arg(long)]
        witnesses_only: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    Hypercube {
        d: u32,
    },
    Cycle {
        n: usize,
    },
    Kneser {
        v: u32,
        t: u32,
    },
    /// Hadamard graph of a Sylvester matrix of order 2^t, or of a matrix file.
    HadamardGraph {
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        sylvester: Option<u32>,
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
}

fn parse_array(s: &str) -> Result<IntersectionArray> {
    s.parse::<IntersectionArray>()
        .with_context(|| format!("invalid intersection array {s:?}"))
}

fn emit_fields<K: AsRef<str>>(out: &mut impl Write, fields: &[(K, String)], format: Format) -> io::Result<()> {
    let width = fields.iter().map(|(k, _)| k.as_ref().len()).max().unwrap_or(0);
    for (k, v) in fields {
        let k = k.as_ref();
        match format {
            Format::Machine => writeln!(out, "{k}={v}")?,
            Format::Text => writeln!(out, "{k:<width$}  {v}")?,
        }
    }
    Ok(())
}

fn spectrum_fields(ia: &IntersectionArray, s: &Spectrum) -> Vec<(String, String)> {
    let mut f = Vec::new();
    for (i, (e, m)) in s.eigenvalues().iter().zip(s.multiplicities()).enumerate() {
        f.push((format!("lambda_{i}"), e.to_string()));
        f.push((format!("multiplicity_{i}"), m.to_string()));
    }
    for (i, pi) in s.pi_products().iter().enumerate() {
        f.push((format!("pi_{i}"), render_interval(pi)));
    }
    for (j, r) in moment_residuals(s, ia.k(), ia.a1()).iter().enumerate() {
        f.push((format!("moment_{j}_residual"), render_interval(r)));
    }
    f
}

fn generate(family: &Family) -> Result<Graph> {
    Ok(match family {
        Family::Hypercube { d } => hypercube(*d)?,
        Family::Cycle { n } => cycle(*n)?,
        Family::Kneser { v, t } => kneser(*v, *t)?,
        Family::HadamardGraph { sylvester, matrix } => {
            let h = match (sylvester, matrix) {
                (Some(t), _) => hadamard_matrix_sylvester(*t)?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("cannot read {}", path.display()))?;
                    SignMatrix::parse(&text).with_context(|| path.display().to_string())?
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            hadamard_graph(&h)?
        }
    })
}

fn run(cli: Cli) -> Result<u8> {
    let precision = Precision::new(cli.epsilon)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze { path } => {
            let text = fs::read_to_string(&path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let g = Graph::parse(&text).with_context(|| path.display().to_string())?;
            let report = analyze_with(&g, &path.display().to_string(), &precision);
            let rendered = match cli.format {
                Format::Text => report.to_text(),
                Format::Machine => report.to_machine(),
            };
            out.write_all(rendered.as_bytes())?;
            if report.consistency() == Some(false) {
                return Ok(EXIT_INCONSISTENT);
            }
        }
        Command::Spectrum { array } => {
            let ia = parse_array(&array)?;
            let s = Spectrum::from_array_with(&ia, &precision)?;
            match cli.format {
                Format::Text => out.write_all(spectrum_report(&ia, &s).as_bytes())?,
                Format::Machine => emit_fields(&mut out, &spectrum_fields(&ia, &s), cli.format)?,
            }
        }
        Command::Check { array } => {
            let ia = parse_array(&array)?;
            match cli.format {
                Format::Text => out.write_all(check_report(&ia, &precision)?.as_bytes())?,
                Format::Machine => emit_fields(&mut out, &check_fields(&ia, &precision)?, cli.format)?,
            }
        }
        Command::Generate { family, out: path } => {
            let text = generate(&family)?.to_text();
            match path {
                Some(p) => fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Scan {
            k_max,
            n_max,
            witnesses_only,
        } => {
            let records = scan_with(k_max, n_max, &precision)?;
            for r in &records {
                if !witnesses_only || r.tag() == Tag::SdrgNonAntipodalCandidate {
                    writeln!(out, "{}", r.to_line())?;
                }
            }
            if !witnesses_only {
                writeln!(out)?;
                out.write_all(open_question_report(&records, Some((k_max, n_max))).as_bytes())?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
