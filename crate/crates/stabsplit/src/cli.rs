//! Argument parsing and subcommand drivers for the `stabsplit` binary.
//!
//! Exit codes: `0` success, `1` parse/validation failure, `2` brute-force
//! size limit exceeded, `3` oracle disagreement in `verify` (a correctness
//! alarm, not an input problem).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use stabsplit_core::{
    CanonicalForm, EntanglementReport, Partition, PauliOperator, Sign, SplitMix64,
    StabilizerGroup, Witnesses, all_partitions, canonicalize, e_multi, entropy_bipartite,
    extract_epr, graph_bipartite_rank,
};

use crate::oracle::{
    OracleError, brute_force_local_rank, entanglement_entropy_dense, statevector,
};
use crate::report::{CircuitReport, Report, gate_strings, witness_strings};
use crate::formats;

/// Exit code for input parse and validation failures.
pub const EXIT_INVALID_INPUT: i32 = 1;
/// Exit code when a brute-force size limit is exceeded.
pub const EXIT_ORACLE_LIMIT: i32 = 2;
/// Exit code when `verify` finds the fast and brute-force answers disagree.
pub const EXIT_VERIFY_MISMATCH: i32 = 3;

/// A failure to report on stderr, with the process exit code to use.
#[derive(Clone, Debug)]
pub struct CliError {
    /// Process exit code.
    pub code: i32,
    /// Message for stderr.
    pub message: String,
}

fn invalid(message: impl ToString) -> CliError {
    CliError { code: EXIT_INVALID_INPUT, message: message.to_string() }
}

fn oracle_limit(e: OracleError) -> CliError {
    CliError { code: EXIT_ORACLE_LIMIT, message: e.to_string() }
}

/// Entanglement analysis for stabilizer states.
#[derive(Parser, Debug)]
#[command(
    name = "stabsplit",
    version,
    about = "Bipartite and multipartite entanglement of stabilizer states"
)]
pub struct Cli {
    /// The analysis to run.
    #[command(subcommand)]
    pub command: Command,
}

/// All subcommands.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bipartite entanglement (number of shared entangled pairs) across a cut.
    Entropy(EntropyArgs),
    /// Multipartite measure: qubit count minus the local-subgroup rank.
    Multi(MultiArgs),
    /// Layered generator form: block-local generators plus entangled pairs.
    Canonical(CanonicalArgs),
    /// Clifford circuits moving each entangled pair onto a designated qubit pair.
    #[command(name = "extract-epr")]
    ExtractEpr(ExtractEprArgs),
    /// Cross-adjacency rank of a graph state (equals its entanglement).
    #[command(name = "graph-rank")]
    GraphRank(GraphRankArgs),
    /// Measure a Pauli observable and print the post-measurement group.
    Measure(MeasureArgs),
    /// Recompute a value with the dense brute-force oracle and compare.
    Verify(VerifyArgs),
    /// Tabulate the multipartite measure over every partition.
    Partitions(PartitionsArgs),
}

/// Where the stabilizer group comes from (exactly one source).
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Stabilizer file: `n <count>` header, then one Pauli string per line.
    #[arg(long, value_name = "FILE")]
    pub stab: Option<PathBuf>,
    /// Graph file: `graph <n>` header, then one `u v` edge per line.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Inline comma-separated generators, e.g. "XX,ZZ".
    #[arg(long, value_name = "PAULIS")]
    pub gens: Option<String>,
}

/// Output rendering.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable lines.
    Text,
    /// One pretty-printed JSON report (an array for `partitions`).
    Json,
}

/// Arguments for `entropy`.
#[derive(Args, Debug)]
pub struct EntropyArgs {
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    /// Two-block partition, e.g. "0,1|2".
    #[arg(long, value_name = "SPEC")]
    pub partition: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Also emit the layered generator witnesses behind the value.
    #[arg(long)]
    pub witnesses: bool,
}

/// Arguments for `multi`.
#[derive(Args, Debug)]
pub struct MultiArgs {
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    /// Partition with any number of blocks, e.g. "0|1|2,3".
    #[arg(long, value_name = "SPEC")]
    pub partition: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Also emit the local-subgroup generators behind the value.
    #[arg(long)]
    pub witnesses: bool,
}

/// Arguments for `canonical`.
#[derive(Args, Debug)]
pub struct CanonicalArgs {
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    /// Two-block partition, e.g. "0,1|2".
    #[arg(long, value_name = "SPEC")]
    pub partition: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

/// Arguments for `extract-epr`.
#[derive(Args, Debug)]
pub struct ExtractEprArgs {
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    /// Two-block partition, e.g. "0,1|2".
    #[arg(long, value_name = "SPEC")]
    pub partition: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

/// Arguments for `graph-rank`.
#[derive(Args, Debug)]
pub struct GraphRankArgs {
    /// Graph file: `graph <n>` header, then one `u v` edge per line.
    #[arg(long, value_name = "FILE")]
    pub graph: PathBuf,
    /// Two-block partition, e.g. "0,1|2".
    #[arg(long, value_name = "SPEC")]
    pub partition: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

/// Requested measurement outcome.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OutcomeChoice {
    /// Force the `+1` eigenvalue.
    Plus,
    /// Force the `-1` eigenvalue.
    Minus,
    /// Sample with the seeded generator.
    Random,
}

fn parse_outcome(text: &str) -> Result<OutcomeChoice, String> {
    match text {
        "+1" => Ok(OutcomeChoice::Plus),
        "-1" => Ok(OutcomeChoice::Minus),
        "random" => Ok(OutcomeChoice::Random),
        _ => Err("expected +1, -1, or random".into()),
    }
}

/// Arguments for `measure`.
#[derive(Args, Debug)]
pub struct MeasureArgs {
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    /// The observable to measure, e.g. "ZII" or "-XX".
    #[arg(long, value_name = "PAULI")]
    pub pauli: String,
    /// Outcome selection: +1, -1, or random (seeded).
    #[arg(
        long,
        value_name = "CHOICE",
        default_value = "random",
        allow_hyphen_values = true,
        value_parser = parse_outcome
    )]
    pub outcome: OutcomeChoice,
    /// Seed for random outcomes; identical seeds reproduce identical output.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

/// Arguments for `verify`.
#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    /// Partition to verify across (two blocks or more).
    #[arg(long, value_name = "SPEC")]
    pub partition: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

/// Arguments for `partitions`.
#[derive(Args, Debug)]
pub struct PartitionsArgs {
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    /// Only sweep partitions with at most this many blocks.
    #[arg(long, value_name = "K")]
    pub max_blocks: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

/// Runs a parsed command line, returning the stdout payload.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Entropy(args) => entropy_cmd(args),
        Command::Multi(args) => multi_cmd(args),
        Command::Canonical(args) => canonical_cmd(args),
        Command::ExtractEpr(args) => extract_epr_cmd(args),
        Command::GraphRank(args) => graph_rank_cmd(args),
        Command::Measure(args) => measure_cmd(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Partitions(args) => partitions_cmd(args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_group(input: &InputArgs) -> Result<StabilizerGroup, CliError> {
    if let Some(path) = &input.stab {
        let text = read_file(path)?;
        return formats::parse_stab(&text)
            .map_err(|e| invalid(format!("{}: {e}", path.display())));
    }
    if let Some(path) = &input.graph {
        let text = read_file(path)?;
        let g = formats::parse_graph(&text)
            .map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        return Ok(StabilizerGroup::from_graph(&g));
    }
    let listing = input.gens.as_ref().expect("clap guarantees exactly one input source");
    let strings: Vec<&str> = listing.split(',').map(str::trim).collect();
    StabilizerGroup::from_strings(&strings).map_err(|e| invalid(format!("--gens: {e}")))
}

fn load_partition(spec: &str, n: usize) -> Result<Partition, CliError> {
    Partition::parse(spec, n).map_err(|e| invalid(format!("--partition: {e}")))
}

/// Renders a partition back into the `0,1|2` flag syntax.
fn partition_spec(p: &Partition) -> String {
    (0..p.num_blocks())
        .map(|i| {
            p.block_indices(i).iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        })
        .collect::<Vec<_>>()
        .join("|")
}

fn witness_lines(report: &EntanglementReport) -> Option<Vec<String>> {
    report.witnesses().map(|w| match w {
        Witnesses::Canonical(cf) => witness_strings(&cf.generators()),
        Witnesses::LocalSubgroups { joint, .. } => witness_strings(joint),
    })
}

/// The layered generator table shared by `canonical` and `entropy --witnesses`.
fn canonical_table(cf: &CanonicalForm) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "A-local generators ({}):", cf.local_a().len());
    for g in cf.local_a() {
        let _ = writeln!(out, "  {g}");
    }
    let _ = writeln!(out, "B-local generators ({}):", cf.local_b().len());
    for g in cf.local_b() {
        let _ = writeln!(out, "  {g}");
    }
    let _ = writeln!(out, "entangled pairs ({}):", cf.pairs().len());
    for (g, gbar) in cf.pairs() {
        let _ = writeln!(out, "  {g}  {gbar}");
    }
    out
}

fn entropy_cmd(args: &EntropyArgs) -> Result<String, CliError> {
    let s = load_group(&args.input)?;
    let p = load_partition(&args.partition, s.num_qubits())?;
    let report = entropy_bipartite(&s, &p, args.witnesses).map_err(invalid)?;
    match args.format {
        OutputFormat::Json => Ok(Report {
            n: s.num_qubits(),
            partition: partition_spec(&p),
            mode: "entropy".into(),
            value: report.value() as i64,
            method: report.method().to_string(),
            witnesses: witness_lines(&report),
            circuits: None,
        }
        .to_json()),
        OutputFormat::Text => {
            let mut out = format!("E = {}\n", report.value());
            if let Some(Witnesses::Canonical(cf)) = report.witnesses() {
                out.push_str(&canonical_table(cf));
            }
            Ok(out)
        }
    }
}

fn multi_cmd(args: &MultiArgs) -> Result<String, CliError> {
    let s = load_group(&args.input)?;
    let p = load_partition(&args.partition, s.num_qubits())?;
    // Witnesses are always computed here: the text table shows the per-block
    // kernel ranks, and they are cheap at CLI scale.
    let report = e_multi(&s, &p, true).map_err(invalid)?;
    let Some(Witnesses::LocalSubgroups { per_block, joint }) = report.witnesses() else {
        unreachable!("e_multi with witnesses always returns local subgroups")
    };
    match args.format {
        OutputFormat::Json => Ok(Report {
            n: s.num_qubits(),
            partition: partition_spec(&p),
            mode: "multi".into(),
            value: report.value() as i64,
            method: report.method().to_string(),
            witnesses: args.witnesses.then(|| witness_strings(joint)),
            circuits: None,
        }
        .to_json()),
        OutputFormat::Text => {
            let mut out = format!("e = {}\n", report.value());
            for (j, block) in per_block.iter().enumerate() {
                let _ = writeln!(out, "block {j}: |S_{j}| = {}", block.len());
            }
            let _ = writeln!(out, "|S_loc| = {}", joint.len());
            if args.witnesses {
                for g in joint {
                    let _ = writeln!(out, "  {g}");
                }
            }
            Ok(out)
        }
    }
}

fn canonical_cmd(args: &CanonicalArgs) -> Result<String, CliError> {
    let s = load_group(&args.input)?;
    let p = load_partition(&args.partition, s.num_qubits())?;
    let cf = canonicalize(&s, &p).map_err(invalid)?;
    match args.format {
        OutputFormat::Json => Ok(Report {
            n: s.num_qubits(),
            partition: partition_spec(&p),
            mode: "canonical".into(),
            value: cf.entanglement() as i64,
            method: "canonical_pairs".into(),
            witnesses: Some(witness_strings(&cf.generators())),
            circuits: None,
        }
        .to_json()),
        OutputFormat::Text => {
            let mut out = format!(
                "n = {}, partition = {}\nE = {}\n",
                s.num_qubits(),
                partition_spec(&p),
                cf.entanglement()
            );
            out.push_str(&canonical_table(&cf));
            Ok(out)
        }
    }
}

fn extract_epr_cmd(args: &ExtractEprArgs) -> Result<String, CliError> {
    let s = load_group(&args.input)?;
    let p = load_partition(&args.partition, s.num_qubits())?;
    let cf = canonicalize(&s, &p).map_err(invalid)?;
    let extraction = extract_epr(&cf);
    match args.format {
        OutputFormat::Json => Ok(Report {
            n: s.num_qubits(),
            partition: partition_spec(&p),
            mode: "extract-epr".into(),
            value: cf.entanglement() as i64,
            method: "canonical_pairs".into(),
            witnesses: Some(witness_strings(extraction.target_group().generators())),
            circuits: Some(CircuitReport {
                a: gate_strings(extraction.circuit_a()),
                b: gate_strings(extraction.circuit_b()),
                pairs: extraction.pair_sites().iter().map(|&(a, b)| [a, b]).collect(),
            }),
        }
        .to_json()),
        OutputFormat::Text => {
            let mut out = format!("E = {}\n", cf.entanglement());
            let _ = writeln!(out, "pair sites (A-side, B-side):");
            for (a, b) in extraction.pair_sites() {
                let _ = writeln!(out, "  ({a}, {b})");
            }
            let _ = writeln!(out, "circuit A ({} gates):", extraction.circuit_a().len());
            for gate in extraction.circuit_a() {
                let _ = writeln!(out, "  {gate}");
            }
            let _ = writeln!(out, "circuit B ({} gates):", extraction.circuit_b().len());
            for gate in extraction.circuit_b() {
                let _ = writeln!(out, "  {gate}");
            }
            Ok(out)
        }
    }
}

fn graph_rank_cmd(args: &GraphRankArgs) -> Result<String, CliError> {
    let text = read_file(&args.graph)?;
    let g = formats::parse_graph(&text)
        .map_err(|e| invalid(format!("{}: {e}", args.graph.display())))?;
    let p = load_partition(&args.partition, g.num_vertices())?;
    let rank = graph_bipartite_rank(&g, &p).map_err(invalid)?;
    match args.format {
        OutputFormat::Json => Ok(Report {
            n: g.num_vertices(),
            partition: partition_spec(&p),
            mode: "graph-rank".into(),
            value: rank as i64,
            method: "graph_rank".into(),
            witnesses: None,
            circuits: None,
        }
        .to_json()),
        OutputFormat::Text => Ok(format!("rank = {rank}\n")),
    }
}

fn measure_cmd(args: &MeasureArgs) -> Result<String, CliError> {
    let s = load_group(&args.input)?;
    let m: PauliOperator =
        args.pauli.parse().map_err(|e| invalid(format!("--pauli: {e}")))?;
    let forced = match args.outcome {
        OutcomeChoice::Plus => Some(Sign::Plus),
        OutcomeChoice::Minus => Some(Sign::Minus),
        OutcomeChoice::Random => None,
    };
    let mut rng = SplitMix64::new(args.seed);
    let result = s.measure_pauli(&m, forced, &mut rng).map_err(invalid)?;
    let outcome_value: i64 = match result.outcome {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let outcome_text = if outcome_value == 1 { "+1" } else { "-1" };
    match args.format {
        OutputFormat::Json => Ok(Report {
            n: s.num_qubits(),
            partition: String::new(),
            mode: "measure".into(),
            value: outcome_value,
            method: "measurement".into(),
            witnesses: Some(witness_strings(result.state.generators())),
            circuits: None,
        }
        .to_json()),
        OutputFormat::Text => {
            let how = if result.deterministic {
                "deterministic"
            } else if forced.is_some() {
                "forced"
            } else {
                "random"
            };
            let mut out = format!("outcome = {outcome_text} ({how})\n");
            let _ = writeln!(out, "post-measurement group:");
            for g in result.state.generators() {
                let _ = writeln!(out, "  {g}");
            }
            Ok(out)
        }
    }
}

fn verify_cmd(args: &VerifyArgs) -> Result<String, CliError> {
    let s = load_group(&args.input)?;
    let p = load_partition(&args.partition, s.num_qubits())?;
    let (fast, oracle_value, method) = if p.num_blocks() == 2 {
        let report = entropy_bipartite(&s, &p, false).map_err(invalid)?;
        let psi = statevector(&s).map_err(oracle_limit)?;
        let dense = entanglement_entropy_dense(&psi, &p);
        if (dense - report.value() as f64).abs() > 1e-9 {
            return Err(CliError {
                code: EXIT_VERIFY_MISMATCH,
                message: format!("fast={} oracle={dense} MISMATCH", report.value()),
            });
        }
        (report.value() as i64, dense.round() as i64, report.method().to_string())
    } else {
        let report = e_multi(&s, &p, false).map_err(invalid)?;
        let rank = brute_force_local_rank(&s, &p).map_err(oracle_limit)?;
        let oracle_e = (s.num_qubits() - rank) as i64;
        if oracle_e != report.value() as i64 {
            return Err(CliError {
                code: EXIT_VERIFY_MISMATCH,
                message: format!("fast={} oracle={oracle_e} MISMATCH", report.value()),
            });
        }
        (report.value() as i64, oracle_e, report.method().to_string())
    };
    match args.format {
        OutputFormat::Json => Ok(Report {
            n: s.num_qubits(),
            partition: partition_spec(&p),
            mode: "verify".into(),
            value: fast,
            method,
            witnesses: None,
            circuits: None,
        }
        .to_json()),
        OutputFormat::Text => Ok(format!("fast={fast} oracle={oracle_value} OK\n")),
    }
}

fn partitions_cmd(args: &PartitionsArgs) -> Result<String, CliError> {
    let s = load_group(&args.input)?;
    let n = s.num_qubits();
    let max_blocks = args.max_blocks.unwrap_or(n.max(1));
    let mut parts = all_partitions(n, max_blocks).map_err(invalid)?;
    // Coarse to fine: the measure can only drop along each refinement chain,
    // so this order makes the table scan naturally.
    parts.sort_by_key(|p| p.num_blocks());
    let mut rows = Vec::with_capacity(parts.len());
    for p in &parts {
        let report = e_multi(&s, p, false).map_err(invalid)?;
        rows.push((p, report.value()));
    }
    match args.format {
        OutputFormat::Json => {
            let reports: Vec<Report> = rows
                .iter()
                .map(|(p, value)| Report {
                    n,
                    partition: partition_spec(p),
                    mode: "partitions".into(),
                    value: *value as i64,
                    method: "kernel_rank".into(),
                    witnesses: None,
                    circuits: None,
                })
                .collect();
            let mut out =
                serde_json::to_string_pretty(&reports).expect("reports always serialize");
            out.push('\n');
            Ok(out)
        }
        OutputFormat::Text => {
            let mut out = format!("partitions of {n} qubits ({} total)\n", rows.len());
            let _ = writeln!(out, "blocks  e  partition");
            for (p, value) in &rows {
                let _ = writeln!(out, "{:>6} {:>2}  {}", p.num_blocks(), value, partition_spec(p));
            }
            Ok(out)
        }
    }
}
