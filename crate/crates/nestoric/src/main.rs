//! Command-line interface over the Betti pipelines, the shellability
//! verifier, and the table emitters.
//!
//! Exit codes: 0 success, 2 parse or validation failure, 3 precondition or
//! verification failure, 4 resource bound exceeded. Every failure writes one
//! JSON record to stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nestoric::betti::{
    compare_methods, complex_betti, hochschild_betti, hochschild_stability_check,
    real_betti_alternating, real_betti_homology_oracle, sa_number, BettiReport, ComparisonReport,
    PipelineError,
};
use nestoric::building::{BuildingSet, BuildingSetError};
use nestoric::complex::ComplexError;
use nestoric::io::{parse_building_set_file, parse_graph_file, FileError};
use nestoric::poset::{verify_el, PosetError};
use nestoric::set::ElementSet;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nestoric",
    version,
    about = "Betti numbers of toric manifolds built from building sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers of the real toric manifold of a building set.
    Betti(BettiArgs),
    /// Betti numbers of the complex toric manifold (even degrees carry the
    /// descent histogram of the B-permutations).
    ComplexBetti(ComplexBettiArgs),
    /// Verify lexicographic shellability of the labeled subset poset.
    VerifyEl(VerifyElArgs),
    /// The a-number of a graph.
    Anumber(AnumberArgs),
    /// Hochschild Betti table with stable shade rows collapsed.
    HochschildTable(HochschildTableArgs),
    /// Per-subset comparison of the alternating count and the homology
    /// oracle.
    Compare(CompareArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Building-set file: one member per line, optional `ground:` line.
    #[arg(long, value_name = "FILE")]
    building_set: Option<PathBuf>,
    /// Graph file: one edge per line, optional `vertices:` line. The
    /// building set is the connected induced subgraphs.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Hochschild building set with M clear and N shaded elements.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    hochschild: Option<Vec<u32>>,
    /// Maximal building set on N elements (the complete graph).
    #[arg(long, value_name = "N")]
    complete: Option<u32>,
    /// Path graph 1-2-...-N.
    #[arg(long, value_name = "N")]
    path: Option<u32>,
    /// Star graph on N vertices with center N.
    #[arg(long, value_name = "N")]
    star: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Alt,
    Homology,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Computation engine; `both` runs the two engines side by side.
    #[arg(long, value_enum, default_value = "alt")]
    method: MethodArg,
    /// Include the per-subset contribution table.
    #[arg(long)]
    breakdown: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    format: FormatArg,
    /// Cap the worker-thread pool.
    #[arg(long, value_name = "T")]
    threads: Option<usize>,
    /// Append a note on unimodality and log-concavity of the sequence.
    #[arg(long)]
    unimodality: bool,
    /// Add missing singletons when reading a building-set file.
    #[arg(long)]
    add_singletons: bool,
}

#[derive(Args)]
struct ComplexBettiArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "tsv")]
    format: FormatArg,
    #[arg(long)]
    add_singletons: bool,
}

#[derive(Args)]
struct VerifyElArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Largest ground size to attempt (interval checking is exponential).
    #[arg(long, value_name = "N", default_value_t = 8)]
    max_ground: usize,
    #[arg(long)]
    add_singletons: bool,
}

#[derive(Args)]
struct AnumberArgs {
    /// Graph file.
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
}

#[derive(Args)]
struct HochschildTableArgs {
    /// Largest number of clear elements M; rows cover m = 0..=M.
    #[arg(long, value_name = "M")]
    max_m: u32,
    #[arg(long, value_enum, default_value = "tsv")]
    format: FormatArg,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "tsv")]
    format: FormatArg,
    #[arg(long, value_name = "T")]
    threads: Option<usize>,
    #[arg(long)]
    add_singletons: bool,
}

struct CliError {
    code: u8,
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(code: u8, kind: &'static str, message: impl Into<String>) -> CliError {
        CliError {
            code,
            kind,
            message: message.into(),
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> CliError {
        let (code, kind) = match &e {
            PipelineError::NotConnected | PipelineError::NotChordal => (3, "precondition"),
            PipelineError::GroundTooLarge(..) => (4, "bound"),
            PipelineError::Overflow => (4, "overflow"),
            PipelineError::Complex(ComplexError::TooLarge(_)) => (4, "bound"),
            PipelineError::Complex(_) => (3, "precondition"),
        };
        CliError::new(code, kind, e.to_string())
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> CliError {
        let (code, kind) = match &e {
            FileError::Parse(..) => (2, "parse"),
            FileError::Building(BuildingSetError::GroundTooLarge(..)) => (4, "bound"),
            FileError::Building(_) | FileError::Graph(_) => (2, "validation"),
        };
        CliError::new(code, kind, e.to_string())
    }
}

impl From<BuildingSetError> for CliError {
    fn from(e: BuildingSetError) -> CliError {
        let code = match &e {
            BuildingSetError::GroundTooLarge(..) => 4,
            _ => 2,
        };
        CliError::new(code, "validation", e.to_string())
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> CliError {
        let (code, kind) = match &e {
            PosetError::GroundTooLarge(..) => (4, "bound"),
            _ => (3, "verification"),
        };
        CliError::new(code, kind, e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new(2, "io", format!("{}: {e}", path.display())))
}

enum Resolved {
    Building(BuildingSet),
    Hochschild(u32, u32),
}

fn resolve(source: &SourceArgs, add_singletons: bool) -> Result<(String, Resolved), CliError> {
    if let Some(path) = &source.building_set {
        let b = parse_building_set_file(&read_file(path)?, add_singletons)?;
        return Ok((
            format!("building-set {}", path.display()),
            Resolved::Building(b),
        ));
    }
    if let Some(path) = &source.graph {
        let g = parse_graph_file(&read_file(path)?)?;
        let b = BuildingSet::graphical(&g)?;
        return Ok((format!("graph {}", path.display()), Resolved::Building(b)));
    }
    if let Some(mn) = &source.hochschild {
        return Ok((
            format!("hochschild {} {}", mn[0], mn[1]),
            Resolved::Hochschild(mn[0], mn[1]),
        ));
    }
    if let Some(n) = source.complete {
        let b = BuildingSet::maximal(ElementSet::initial(n))?;
        return Ok((format!("complete {n}"), Resolved::Building(b)));
    }
    if let Some(n) = source.path {
        let b = BuildingSet::graphical(&nestoric::graph::SimpleGraph::path(n))?;
        return Ok((format!("path {n}"), Resolved::Building(b)));
    }
    if let Some(n) = source.star {
        let b = BuildingSet::graphical(&nestoric::graph::SimpleGraph::star(n))?;
        return Ok((format!("star {n}"), Resolved::Building(b)));
    }
    unreachable!("clap enforces exactly one source")
}

fn materialize(resolved: Resolved) -> Result<BuildingSet, CliError> {
    match resolved {
        Resolved::Building(b) => Ok(b),
        Resolved::Hochschild(m, n) => Ok(BuildingSet::hochschild(m, n)?),
    }
}

fn set_threads(threads: Option<usize>) -> Result<(), CliError> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::new(2, "threads", e.to_string()))?;
    }
    Ok(())
}

fn is_unimodal(v: &[u64]) -> bool {
    let mut i = 0;
    while i + 1 < v.len() && v[i] <= v[i + 1] {
        i += 1;
    }
    while i + 1 < v.len() && v[i] >= v[i + 1] {
        i += 1;
    }
    i + 1 >= v.len().max(1)
}

fn is_log_concave(v: &[u64]) -> bool {
    (1..v.len().saturating_sub(1))
        .all(|k| (v[k] as u128) * (v[k] as u128) >= (v[k - 1] as u128) * (v[k + 1] as u128))
}

fn unimodality_note(v: &[u64]) -> String {
    format!(
        "# unimodal: {}\n# log-concave: {}\n",
        is_unimodal(v),
        is_log_concave(v)
    )
}

fn render_betti_tsv(report: &BettiReport, breakdown: bool, unimodality: bool) -> String {
    let mut out = String::from("k\tbeta\n");
    for (k, b) in report.betti.iter().enumerate() {
        out.push_str(&format!("{k}\t{b}\n"));
    }
    if breakdown {
        out.push_str("\nsubset\tk\tcount\n");
        for row in &report.breakdown {
            out.push_str(&format!("{}\t{}\t{}\n", row.subset, row.k, row.count));
        }
    }
    if unimodality {
        out.push_str(&unimodality_note(&report.betti));
    }
    out
}

fn render_betti_json(
    source: &str,
    report: &BettiReport,
    breakdown: bool,
    unimodality: bool,
) -> String {
    let mut value = json!({
        "source": source,
        "method": report.method.to_string(),
        "betti": report.betti,
    });
    if breakdown {
        let rows: Vec<_> = report
            .breakdown
            .iter()
            .map(|r| json!({"subset": r.subset.to_string(), "k": r.k, "count": r.count}))
            .collect();
        value["breakdown"] = json!(rows);
    }
    if unimodality {
        value["unimodality"] = json!({
            "unimodal": is_unimodal(&report.betti),
            "log_concave": is_log_concave(&report.betti),
        });
    }
    format!("{value}\n")
}

fn render_comparison_tsv(
    report: &ComparisonReport,
    rows: bool,
    unimodality: bool,
) -> String {
    let len = report.alternating.betti.len().max(report.homology.betti.len());
    let mut out = String::from("k\talt\thomology\n");
    for k in 0..len {
        out.push_str(&format!(
            "{k}\t{}\t{}\n",
            report.alternating.betti_at(k),
            report.homology.betti_at(k)
        ));
    }
    if rows {
        out.push_str("\nsubset\tk\talt\thomology\n");
        for row in &report.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                row.subset, row.k, row.alternating, row.homology
            ));
        }
    }
    out.push_str(&format!("# chordal: {}\n# agree: {}\n", report.chordal, report.agree));
    if unimodality {
        out.push_str(&unimodality_note(&report.homology.betti));
    }
    out
}

fn render_comparison_json(
    source: &str,
    report: &ComparisonReport,
    rows: bool,
    unimodality: bool,
) -> String {
    let mut value = json!({
        "source": source,
        "method": "both",
        "alternating": report.alternating.betti,
        "homology": report.homology.betti,
        "chordal": report.chordal,
        "agree": report.agree,
    });
    if rows {
        let cells: Vec<_> = report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "subset": r.subset.to_string(),
                    "k": r.k,
                    "alternating": r.alternating,
                    "homology": r.homology,
                })
            })
            .collect();
        value["breakdown"] = json!(cells);
    }
    if unimodality {
        value["unimodality"] = json!({
            "unimodal": is_unimodal(&report.homology.betti),
            "log_concave": is_log_concave(&report.homology.betti),
        });
    }
    format!("{value}\n")
}

fn run_betti(args: &BettiArgs) -> Result<String, CliError> {
    set_threads(args.threads)?;
    let (source, resolved) = resolve(&args.source, args.add_singletons)?;
    match args.method {
        MethodArg::Alt => {
            let report = match &resolved {
                Resolved::Hochschild(m, n) => hochschild_betti(*m, *n)?,
                Resolved::Building(b) => real_betti_alternating(b)?,
            };
            Ok(match args.format {
                FormatArg::Tsv => render_betti_tsv(&report, args.breakdown, args.unimodality),
                FormatArg::Json => {
                    render_betti_json(&source, &report, args.breakdown, args.unimodality)
                }
            })
        }
        MethodArg::Homology => {
            let b = materialize(resolved)?;
            let report = real_betti_homology_oracle(&b)?;
            Ok(match args.format {
                FormatArg::Tsv => render_betti_tsv(&report, args.breakdown, args.unimodality),
                FormatArg::Json => {
                    render_betti_json(&source, &report, args.breakdown, args.unimodality)
                }
            })
        }
        MethodArg::Both => {
            let b = materialize(resolved)?;
            let report = compare_methods(&b)?;
            Ok(match args.format {
                FormatArg::Tsv => {
                    render_comparison_tsv(&report, args.breakdown, args.unimodality)
                }
                FormatArg::Json => {
                    render_comparison_json(&source, &report, args.breakdown, args.unimodality)
                }
            })
        }
    }
}

fn run_complex_betti(args: &ComplexBettiArgs) -> Result<String, CliError> {
    let (source, resolved) = resolve(&args.source, args.add_singletons)?;
    let b = materialize(resolved)?;
    let betti = complex_betti(&b)?;
    Ok(match args.format {
        FormatArg::Tsv => {
            let mut out = String::from("k\tbeta\n");
            for (k, v) in betti.iter().enumerate() {
                out.push_str(&format!("{k}\t{v}\n"));
            }
            out
        }
        FormatArg::Json => {
            format!(
                "{}\n",
                json!({"source": source, "method": "complex", "betti": betti})
            )
        }
    })
}

fn run_verify_el(args: &VerifyElArgs) -> Result<String, CliError> {
    let (_, resolved) = resolve(&args.source, args.add_singletons)?;
    let b = materialize(resolved)?;
    let report = verify_el(&b, args.max_ground)?;
    let histogram: Vec<String> = report.histogram.iter().map(|v| v.to_string()).collect();
    let chain: Vec<String> = report
        .decreasing_chain
        .iter()
        .map(|e| e.to_string())
        .collect();
    Ok(format!(
        "elements\t{}\ncovers\t{}\nintervals\t{}\nmaximal_chains\t{}\nhistogram\t{}\ndecreasing_chain\t{}\n",
        report.element_count,
        report.cover_count,
        report.intervals_checked,
        report.maximal_chain_count,
        histogram.join(" "),
        chain.join(" ")
    ))
}

fn run_anumber(args: &AnumberArgs) -> Result<String, CliError> {
    let g = parse_graph_file(&read_file(&args.graph)?)?;
    let sa = sa_number(&g)?;
    Ok(format!("a\t{}\nsa\t{}\n", sa.unsigned_abs(), sa))
}

fn run_hochschild_table(args: &HochschildTableArgs) -> Result<String, CliError> {
    let mut rows: Vec<(u32, String, Vec<u64>)> = Vec::new();
    for m in 0..=args.max_m {
        for n in 2..=m + 1 {
            rows.push((m, n.to_string(), hochschild_betti(m, n)?.betti));
        }
        let stable_from = m + 2;
        if !hochschild_stability_check(m, (m as usize + stable_from as usize) / 2)? {
            return Err(CliError::new(
                3,
                "verification",
                format!("Betti numbers for m = {m} do not stabilize at n = {stable_from}"),
            ));
        }
        rows.push((
            m,
            format!(">={stable_from}"),
            hochschild_betti(m, stable_from)?.betti,
        ));
    }
    Ok(match args.format {
        FormatArg::Tsv => {
            let mut out = String::from("m\tn\tbetti\n");
            for (m, n, betti) in &rows {
                let values: Vec<String> = betti.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("{m}\t{n}\t{}\n", values.join(" ")));
            }
            out
        }
        FormatArg::Json => {
            let entries: Vec<_> = rows
                .iter()
                .map(|(m, n, betti)| json!({"m": m, "n": n, "betti": betti}))
                .collect();
            format!("{}\n", json!({"max_m": args.max_m, "rows": entries}))
        }
    })
}

fn run_compare(args: &CompareArgs) -> Result<String, CliError> {
    set_threads(args.threads)?;
    let (source, resolved) = resolve(&args.source, args.add_singletons)?;
    let b = materialize(resolved)?;
    let report = compare_methods(&b)?;
    Ok(match args.format {
        FormatArg::Tsv => render_comparison_tsv(&report, true, false),
        FormatArg::Json => render_comparison_json(&source, &report, true, false),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Betti(args) => run_betti(args),
        Command::ComplexBetti(args) => run_complex_betti(args),
        Command::VerifyEl(args) => run_verify_el(args),
        Command::Anumber(args) => run_anumber(args),
        Command::HochschildTable(args) => run_hochschild_table(args),
        Command::Compare(args) => run_compare(args),
    };
    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", json!({"kind": e.kind, "error": e.message}));
            ExitCode::from(e.code)
        }
    }
}
