//! `gk` — build instances of the G_k family, verify the structural and
//! metric claims about them, measure exact diameters, and emit the
//! refutation table against the fullerene diameter lower bound.
//!
//! Exit codes: 0 success (discrepancies allowed and flagged), 1 for
//! verification failures, decode errors or I/O problems, 2 for usage
//! errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use gk_core::analysis::{
    diameter_bfs_all, double_sweep, expected_census, face_census, ifub, refutation_table,
    smallest_refuting_k, verify_claims, ClaimReport, DiameterResult, ExactDiameterMethod,
};
use gk_core::construction::{build_gk_for, GkGraph};
use gk_core::formats::{
    decode_rotation_doc, encode_rotation_doc, from_graph6, from_rotation_doc, to_dot,
    to_edge_list, to_graph6, to_rotation_doc, to_svg, RenderSpec,
};
use gk_core::graph::EmbeddedGraph;

fn k_in_range() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(2..=26)
}

#[derive(Parser)]
#[command(name = "gk", version, about = "Generator and verifier for the G_k graph family", long_about = None)]
struct Cli {
    /// Worker threads for diameter fan-out (default: all cores; 1 = serial)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Dot,
    Edges,
    Rotdoc,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExactMethod {
    BfsAll,
    Ifub,
}

impl From<ExactMethod> for ExactDiameterMethod {
    fn from(m: ExactMethod) -> Self {
        match m {
            ExactMethod::BfsAll => ExactDiameterMethod::BfsAll,
            ExactMethod::Ifub => ExactDiameterMethod::Ifub,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AnyMethod {
    BfsAll,
    Ifub,
    DoubleSweep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CensusFormat {
    Plain,
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build G_k and write it in the chosen format
    Generate {
        #[arg(long, value_parser = k_in_range())]
        k: u32,
        #[arg(long, value_enum)]
        format: OutputFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check every claim about an instance and report per-claim verdicts
    Verify {
        #[arg(long, value_parser = k_in_range(), conflicts_with = "input", required_unless_present = "input")]
        k: Option<u32>,
        /// Rotation document (with labels) to verify instead of building
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "ifub")]
        method: ExactMethod,
        #[arg(long, value_enum, default_value = "tsv")]
        report: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Face-length census
    Census {
        #[arg(long, value_parser = k_in_range(), conflicts_with = "input", required_unless_present = "input")]
        k: Option<u32>,
        /// Rotation document to analyse instead of building
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        report: CensusFormat,
    },
    /// Exact diameter (or double-sweep lower bound)
    Diameter {
        #[arg(long, value_parser = k_in_range(), conflicts_with = "input", required_unless_present = "input")]
        k: Option<u32>,
        /// Rotation document or graph6 input instead of building
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "ifub")]
        method: AnyMethod,
        /// Start-vertex seed for double-sweep
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Diameter-vs-bound table over a range of k
    Refute {
        #[arg(long = "k-min", value_parser = k_in_range())]
        k_min: u32,
        #[arg(long = "k-max", value_parser = k_in_range())]
        k_max: u32,
        #[arg(long, value_enum, default_value = "ifub")]
        method: ExactMethod,
        #[arg(long, value_enum, default_value = "tsv")]
        report: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Radial SVG rendering of G_k
    Render {
        #[arg(long, value_parser = k_in_range())]
        k: u32,
        #[arg(long)]
        out: PathBuf,
        /// Skip the gray shading of length-7 faces
        #[arg(long)]
        plain: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn write_output(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn emit(report_text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_output(path, report_text),
        None => {
            print!("{report_text}");
            Ok(())
        }
    }
}

/// Loads an embedded graph from a rotation document or graph6 file.
fn load_graph(path: &Path) -> Result<(EmbeddedGraph, Option<GkGraph>)> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if text.trim_start().starts_with('{') {
        let doc = decode_rotation_doc(&text)
            .with_context(|| format!("decoding rotation document {}", path.display()))?;
        let (graph, labels) = from_rotation_doc(&doc)
            .with_context(|| format!("decoding rotation document {}", path.display()))?;
        let gk = match labels {
            Some(labels) => Some(
                GkGraph::from_parts(graph.clone(), labels)
                    .with_context(|| format!("validating labelled graph {}", path.display()))?,
            ),
            None => None,
        };
        Ok((graph, gk))
    } else {
        let graph = from_graph6(&text)
            .with_context(|| format!("decoding graph6 {}", path.display()))?;
        Ok((graph, None))
    }
}

fn claim_report_tsv(report: &ClaimReport) -> String {
    let mut out = String::new();
    out.push_str("claim\tmeasured\tbound\tverdict\n");
    for entry in &report.entries {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            entry.id, entry.measured, entry.bound, entry.verdict
        ));
    }
    out
}

fn overall_line(report: &ClaimReport) -> String {
    if report.has_fail() {
        "overall: FAIL".to_string()
    } else if report.has_discrepancy() {
        "overall: PASS (with discrepancies)".to_string()
    } else {
        "overall: PASS".to_string()
    }
}

fn refutation_tsv(rows: &[gk_core::RefutationRow]) -> String {
    let mut out = String::new();
    out.push_str("k\tn\tdiameter\tthree_k\tthree_log2_n\tfullerene_bound\trefutes\n");
    for row in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{:.6}\t{:.6}\t{}\n",
            row.k, row.n, row.diameter, row.three_k, row.three_log2_n, row.fullerene_bound,
            row.refutes
        ));
    }
    out
}

fn describe_vertex(gk: Option<&GkGraph>, v: u32) -> String {
    match gk {
        Some(gk) => gk.vertex_name(v),
        None => v.to_string(),
    }
}

fn diameter_line(result: &DiameterResult, gk: Option<&GkGraph>) -> String {
    format!(
        "{} ({}, {}) {}",
        result.value,
        describe_vertex(gk, result.witness.0),
        describe_vertex(gk, result.witness.1),
        if result.exact { "exact" } else { "lower-bound" }
    )
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Generate { k, format, out } => {
            let gk = build_gk_for(k)?;
            let g = gk.graph();
            let contents = match format {
                OutputFormat::Graph6 => {
                    let mut text = to_graph6(g)?;
                    text.push('\n');
                    text
                }
                OutputFormat::Dot => to_dot(g, Some(gk.labels())),
                OutputFormat::Edges => to_edge_list(g),
                OutputFormat::Rotdoc => {
                    encode_rotation_doc(&to_rotation_doc(g, Some(gk.labels())))
                }
                OutputFormat::Svg => to_svg(&gk, &RenderSpec::scaled_for(k)),
            };
            write_output(&out, &contents)?;
            let faces = g.face_orbits()?.len();
            println!("V={} E={} F={}", g.vertex_count(), g.edge_count(), faces);
            Ok(0)
        }
        Command::Verify {
            k,
            input,
            method,
            report,
            out,
        } => {
            let gk = match (k, input) {
                (Some(k), None) => build_gk_for(k)?,
                (None, Some(path)) => {
                    let (_, gk) = load_graph(&path)?;
                    gk.ok_or_else(|| {
                        anyhow!(
                            "{} carries no vertex labels; only labelled rotation documents can be verified",
                            path.display()
                        )
                    })?
                }
                _ => unreachable!("clap enforces k xor input"),
            };
            let claim_report = verify_claims(&gk, method.into())?;
            match report {
                ReportFormat::Tsv => {
                    emit(&claim_report_tsv(&claim_report), out.as_deref())?;
                    println!("{}", overall_line(&claim_report));
                }
                ReportFormat::Json => {
                    let json = serde_json::to_string_pretty(&claim_report.entries)?;
                    emit(&format!("{json}\n"), out.as_deref())?;
                    // keep stdout valid JSON when the report goes there
                    if out.is_some() {
                        println!("{}", overall_line(&claim_report));
                    } else {
                        eprintln!("{}", overall_line(&claim_report));
                    }
                }
            }
            Ok(if claim_report.has_fail() { 1 } else { 0 })
        }
        Command::Census { k, input, report } => {
            let (census, expected) = match (k, input) {
                (Some(k), None) => {
                    let gk = build_gk_for(k)?;
                    (face_census(gk.graph())?, Some(expected_census(k)?))
                }
                (None, Some(path)) => {
                    let (graph, gk) = load_graph(&path)?;
                    if !graph.all_darts_placed() {
                        bail!(
                            "{} has no embedding; a face census needs a rotation document",
                            path.display()
                        );
                    }
                    let expected = gk.map(|gk| expected_census(gk.k())).transpose()?;
                    (face_census(&graph)?, expected)
                }
                _ => unreachable!("clap enforces k xor input"),
            };
            match report {
                CensusFormat::Plain => println!("{census}"),
                CensusFormat::Tsv => {
                    println!("length\tcount");
                    for (len, count) in census.histogram() {
                        println!("{len}\t{count}");
                    }
                }
                CensusFormat::Json => {
                    println!("{}", serde_json::to_string(census.histogram())?);
                }
            }
            if let Some(expected) = expected {
                if census != expected {
                    eprintln!("census mismatch: measured {census} but closed form gives {expected}");
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Diameter {
            k,
            input,
            method,
            seed,
        } => {
            let (graph, gk) = match (k, input) {
                (Some(k), None) => {
                    let gk = build_gk_for(k)?;
                    (gk.graph().clone(), Some(gk))
                }
                (None, Some(path)) => load_graph(&path)?,
                _ => unreachable!("clap enforces k xor input"),
            };
            let result = match method {
                AnyMethod::BfsAll => diameter_bfs_all(&graph)?,
                AnyMethod::Ifub => ifub(&graph, None)?,
                AnyMethod::DoubleSweep => double_sweep(&graph, seed)?,
            };
            println!("{}", diameter_line(&result, gk.as_ref()));
            Ok(0)
        }
        Command::Refute {
            k_min,
            k_max,
            method,
            report,
            out,
        } => {
            if k_min > k_max {
                // usage error, same exit class as a clap failure
                eprintln!("error: --k-min must not exceed --k-max");
                return Ok(2);
            }
            let rows = refutation_table(k_min, k_max, method.into())?;
            let summary = match smallest_refuting_k(&rows) {
                Some(k) => format!("smallest refuting k: {k}"),
                None => "no refuting k in range".to_string(),
            };
            match report {
                ReportFormat::Tsv => {
                    emit(&refutation_tsv(&rows), out.as_deref())?;
                    println!("{summary}");
                }
                ReportFormat::Json => {
                    let json = serde_json::to_string_pretty(&rows)?;
                    emit(&format!("{json}\n"), out.as_deref())?;
                    if out.is_some() {
                        println!("{summary}");
                    } else {
                        eprintln!("{summary}");
                    }
                }
            }
            Ok(0)
        }
        Command::Render { k, out, plain } => {
            let gk = build_gk_for(k)?;
            let mut spec = RenderSpec::scaled_for(k);
            spec.shade_heptagons = !plain;
            write_output(&out, &to_svg(&gk, &spec))?;
            let g = gk.graph();
            println!(
                "V={} E={} F={}",
                g.vertex_count(),
                g.edge_count(),
                g.face_orbits()?.len()
            );
            Ok(0)
        }
    }
}
