//! `trilcd`: construct, transform, analyze, search and verify ternary LCD
//! codes from the command line.
//!
//! Exit status is 0 on success, 1 when a check or transform fails and 2 on
//! usage errors (bad flags, unknown ids, malformed input files).

use std::fmt;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trilcd::code::LinearCode;
use trilcd::constructions;
use trilcd::registry::{
    self, bounds_table, build_registry, diff_against_paper, export_registry, format_code,
    full_enumerator, import_registry, parse_code, parse_matrix, write_atomic, CodeRecord,
    DiffStatus,
};
use trilcd::search::{self, SearchBudget, Target, DEFAULT_SEED};
use trilcd::verify::{self, Overrides};
use trilcd::{CoordSet, Error, Trit, TritMatrix};

#[derive(Parser)]
#[command(
    name = "trilcd",
    version,
    about = "Ternary linear complementary dual codes"
)]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "TRILCD_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from a family or a named construction.
    Construct(ConstructArgs),
    /// Report parameters, Gram rank, hull dimension and optionally the weight enumerator.
    Analyze(AnalyzeArgs),
    /// Puncture, shorten, juxtapose or scale a code.
    Transform(TransformArgs),
    /// Look for the best LCD code of given length and dimension.
    Search(SearchArgs),
    /// Print the d_LCD bounds table, or its comparison with the printed table.
    Table(TableArgs),
    /// Export, import or list the verified code registry.
    Registry {
        #[command(subcommand)]
        command: RegistryCommand,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Output {
    /// Write the code file here instead of standard output.
    #[arg(short, long)]
    out: Option<PathBuf>,

    /// Print a single JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// simplex, dim1, dim2, dim3, codim1, codim2 or paper:<id>.
    #[arg(long)]
    family: String,

    /// Length, for the length-indexed families.
    #[arg(long)]
    n: Option<usize>,

    /// Dimension, for simplex.
    #[arg(long)]
    k: Option<usize>,

    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Code file, `-` for standard input, or a construction id.
    input: String,

    #[arg(long)]
    json: bool,

    /// Include the full weight enumerator.
    #[arg(long)]
    enumerator: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Puncture,
    Shorten,
    Juxtapose,
    Scale,
}

#[derive(Args)]
struct TransformArgs {
    op: TransformOp,

    /// Code file, `-` for standard input, or a construction id.
    input: String,

    /// 1-based, comma separated, e.g. `1,2,7`.
    #[arg(long)]
    coords: Option<CoordSet>,

    /// Juxtaposed block: `simplex:<k>`, `named:<id>` or a code file.
    #[arg(long)]
    block: Option<String>,

    #[arg(long, default_value_t = 1)]
    copies: usize,

    /// Scaling factor, 1 or 2.
    #[arg(long, default_value_t = 2)]
    factor: u8,

    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,

    #[arg(long)]
    k: usize,

    /// Target distance; defaults to the Griesmer bound. Not reaching an
    /// explicit target exits with status 1.
    #[arg(long)]
    d: Option<usize>,

    /// Also require the dual to reach this distance.
    #[arg(long)]
    dual_d: Option<usize>,

    /// Sweep every systematic generator instead of hill-climbing.
    #[arg(long)]
    exhaustive: bool,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[arg(long, default_value_t = SearchBudget::default().max_iters)]
    iters: u64,

    #[arg(long, default_value_t = SearchBudget::default().plateau)]
    plateau: u64,

    /// Exhaustive mode refuses more than 3^max_exponent candidates.
    #[arg(long, default_value_t = SearchBudget::default().max_exponent)]
    max_exponent: usize,

    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = registry::REGISTRY_MAX_N)]
    max_n: usize,

    /// Compare with the printed table cell by cell.
    #[arg(long)]
    diff: bool,

    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum RegistryCommand {
    /// Rebuild every code and write the files plus manifest.json.
    Export { dir: PathBuf },
    /// Load a registry directory, checking hashes and parameters.
    Import {
        dir: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild and list every record.
    List {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "paper")]
    suite: Suite,

    #[arg(long)]
    json: bool,

    /// Directory of `<id>.code` files replacing the embedded named matrices.
    #[arg(long)]
    named_dir: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Format { .. } | Error::UnknownId(_) | Error::Io(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Failed(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

fn usage(msg: impl fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult<bool> {
    match command {
        Command::Construct(a) => construct(a),
        Command::Analyze(a) => analyze(a),
        Command::Transform(a) => transform(a),
        Command::Search(a) => search_cmd(a),
        Command::Table(a) => table(a),
        Command::Registry { command } => registry_cmd(command),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn print_json(v: &Value) -> CliResult<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn params_json(code: &LinearCode) -> CliResult<Value> {
    let p = code.params()?;
    Ok(json!({ "n": p.n, "k": p.k, "d": p.d, "is_lcd": p.is_lcd }))
}

fn describe(code: &LinearCode) -> CliResult<String> {
    let p = code.params()?;
    Ok(format!("[{},{},{}] lcd={}", p.n, p.k, p.d, p.is_lcd))
}

fn generator_rows(g: &TritMatrix) -> Vec<String> {
    g.row_vectors().iter().map(|r| r.to_string()).collect()
}

/// Writes the code to `--out` or standard output. The report goes to
/// standard output when the code does not, else to standard error; with
/// `--json` a single document carrying the generator goes to standard output.
fn emit(code: &LinearCode, output: &Output, mut report: Value, text: &str) -> CliResult<()> {
    if let Some(path) = &output.out {
        write_atomic(path, format_code(code.generator()).as_bytes())?;
        report["file"] = json!(path.display().to_string());
    }
    if output.json {
        report["generator"] = json!(generator_rows(code.generator()));
        return print_json(&report);
    }
    if output.out.is_some() {
        println!("{text}");
    } else {
        print!("{}", format_code(code.generator()));
        eprintln!("{text}");
    }
    Ok(())
}

fn read_input(spec: &str) -> CliResult<String> {
    if spec == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))
}

type Family = fn(usize) -> trilcd::Result<LinearCode>;

const FAMILIES: &[(&str, Family)] = &[
    ("dim1", constructions::dim1_code),
    ("dim2", constructions::dim2_code),
    ("dim3", constructions::dim3_code),
    ("codim1", constructions::codim1_code),
    ("codim2", constructions::codim2_code),
];

/// `dim3_n13`, `simplex_k3`, or `C_<n>_<k>_<d>` when a family code of
/// length `n` has those parameters.
fn family_code(id: &str) -> Option<LinearCode> {
    if let Some(k) = id.strip_prefix("simplex_k") {
        return LinearCode::new(constructions::simplex(k.parse().ok()?).ok()?).ok();
    }
    for (name, build) in FAMILIES {
        if let Some(n) = id.strip_prefix(name).and_then(|r| r.strip_prefix("_n")) {
            return build(n.parse().ok()?).ok();
        }
    }
    let nums: Vec<usize> = id
        .strip_prefix("C_")?
        .split('_')
        .map(|p| p.parse().ok())
        .collect::<Option<_>>()?;
    let [n, k, d] = nums[..] else { return None };
    FAMILIES
        .iter()
        .filter_map(|(_, build)| build(n).ok())
        .find(|c| c.k() == k && c.min_distance().ok() == Some(d))
}

/// A code file, `-`, a construction id with or without `paper:`, or a
/// family code id.
fn load_code(spec: &str) -> CliResult<LinearCode> {
    if spec == "-" || Path::new(spec).exists() {
        let text = read_input(spec)?;
        return parse_code(&text).map_err(|e| usage(format!("{spec}: {e}")));
    }
    let id = spec.strip_prefix("paper:").unwrap_or(spec);
    if let Ok(r) = constructions::recipe(id) {
        return Ok(r.build()?);
    }
    family_code(id).ok_or_else(|| usage(format!("{spec}: no such file or code id")))
}

fn construct(a: ConstructArgs) -> CliResult<bool> {
    let need_n = || {
        a.n.ok_or_else(|| usage(format!("--family {} needs --n", a.family)))
    };
    let (code, paper_match) = match a.family.as_str() {
        "simplex" => {
            let k = a.k.ok_or_else(|| usage("--family simplex needs --k"))?;
            (LinearCode::new(constructions::simplex(k)?)?, None)
        }
        "dim1" => (constructions::dim1_code(need_n()?)?, None),
        "dim2" => (constructions::dim2_code(need_n()?)?, None),
        "dim3" => (constructions::dim3_code(need_n()?)?, None),
        "codim1" => (constructions::codim1_code(need_n()?)?, None),
        "codim2" => (constructions::codim2_code(need_n()?)?, None),
        other => match other.strip_prefix("paper:") {
            Some(id) => {
                let rec = registry::paper_code(id)?;
                (rec.code, Some(rec.paper_match))
            }
            None => return Err(usage(format!("unknown family {other:?}"))),
        },
    };
    let mut report = params_json(&code)?;
    report["family"] = json!(a.family);
    let mut text = describe(&code)?;
    if let Some(m) = paper_match {
        report["paper_match"] = json!(m);
        text.push_str(&format!(" ({m})"));
    }
    emit(&code, &a.output, report, &text)?;
    Ok(true)
}

fn analyze(a: AnalyzeArgs) -> CliResult<bool> {
    let code = load_code(&a.input)?;
    let gram = code.gram_report();
    let d = code.min_distance()?;
    let enumerator = if a.enumerator {
        Some(full_enumerator(&code)?)
    } else {
        None
    };
    if a.json {
        let mut v = json!({
            "n": code.n(),
            "k": code.k(),
            "d": d,
            "gram_rank": gram.gram_rank,
            "hull_dim": gram.hull_dim,
            "is_lcd": gram.is_lcd,
        });
        if let Some(e) = &enumerator {
            v["enumerator"] = json!(e.terms());
            v["enumerator_text"] = json!(e.to_string());
        }
        print_json(&v)?;
    } else {
        println!("n={} k={} d={}", code.n(), code.k(), d);
        println!(
            "gram_rank={} hull_dim={} is_lcd={}",
            gram.gram_rank, gram.hull_dim, gram.is_lcd
        );
        if let Some(e) = &enumerator {
            println!("enumerator: {e}");
        }
    }
    Ok(true)
}

fn load_block(spec: &str) -> CliResult<TritMatrix> {
    if let Some(k) = spec.strip_prefix("simplex:") {
        let k: usize = k
            .parse()
            .map_err(|_| usage(format!("bad simplex dimension {k:?}")))?;
        return Ok(constructions::simplex(k)?);
    }
    if let Some(id) = spec.strip_prefix("named:") {
        return Ok(constructions::named_matrix(id)?);
    }
    let text = read_input(spec)?;
    parse_matrix(&text).map_err(|e| usage(format!("{spec}: {e}")))
}

fn transform(a: TransformArgs) -> CliResult<bool> {
    let code = load_code(&a.input)?;
    let coords = || {
        a.coords
            .clone()
            .ok_or_else(|| usage("this operation needs --coords"))
    };
    let result = match a.op {
        TransformOp::Puncture => trilcd::puncture(&code, &coords()?)?,
        TransformOp::Shorten => trilcd::shorten(&code, &coords()?)?,
        TransformOp::Juxtapose => {
            let spec = a
                .block
                .as_deref()
                .ok_or_else(|| usage("juxtapose needs --block"))?;
            trilcd::juxtapose(&code, &load_block(spec)?, a.copies)?
        }
        TransformOp::Scale => {
            let factor = Trit::new(a.factor).map_err(|e| usage(e.to_string()))?;
            trilcd::scale_columns(&code, &coords()?, factor)?
        }
    };
    let report = json!({ "before": params_json(&code)?, "after": params_json(&result)? });
    let text = format!("{} -> {}", describe(&code)?, describe(&result)?);
    emit(&result, &a.output, report, &text)?;
    Ok(true)
}

fn search_cmd(a: SearchArgs) -> CliResult<bool> {
    if a.k == 0 || a.k > a.n {
        return Err(usage(format!("need 1 <= k <= n, got n={} k={}", a.n, a.k)));
    }
    let budget = SearchBudget {
        max_exponent: a.max_exponent,
        max_iters: a.iters,
        plateau: a.plateau,
        seed: a.seed,
    };
    let target = a.d.unwrap_or_else(|| search::griesmer_max_d(a.n, a.k));
    let result = if a.exhaustive {
        search::exhaustive_best_lcd(a.n, a.k, &budget)?
    } else {
        let t = Target {
            d: target,
            dual_d: a.dual_d,
        };
        search::randomized_search_with(a.n, a.k, t, &budget)?
    };
    let Some(w) = result.witness.clone() else {
        eprintln!("no LCD [{},{}] code found", a.n, a.k);
        return Ok(false);
    };
    let code = LinearCode::new(w)?;
    let dual_d = if a.k < a.n {
        Some(code.dual()?.min_distance()?)
    } else {
        None
    };
    let reached =
        a.exhaustive || (result.best_d >= target && a.dual_d.is_none_or(|t| dual_d >= Some(t)));
    let mut report = params_json(&code)?;
    report["dual_d"] = json!(dual_d);
    report["exhaustive"] = json!(result.exhaustive);
    report["seed"] = json!(a.seed);
    report["target_d"] = json!(if a.exhaustive { None } else { Some(target) });
    let mut text = describe(&code)?;
    if let Some(dd) = dual_d {
        text.push_str(&format!(" dual_d={dd}"));
    }
    text.push_str(if result.exhaustive {
        " (exhaustive optimum)"
    } else {
        ""
    });
    emit(&code, &a.output, report, &text)?;
    Ok(reached || a.d.is_none())
}

fn table(a: TableArgs) -> CliResult<bool> {
    let records = build_registry()?;
    if a.diff {
        let cells = diff_against_paper(&records);
        if a.json {
            print_json(&serde_json::to_value(&cells)?)?;
        } else {
            println!(
                "{:>3} {:>3} {:>7} {:>9} {:<9} {:<22} note",
                "n", "k", "printed", "witnessed", "status", "witness"
            );
            for c in &cells {
                let printed = if c.printed_lower == c.printed_upper {
                    c.printed_lower.to_string()
                } else {
                    format!("{}-{}", c.printed_lower, c.printed_upper)
                };
                println!(
                    "{:>3} {:>3} {:>7} {:>9} {:<9} {:<22} {}",
                    c.n,
                    c.k,
                    printed,
                    c.witnessed,
                    c.status.to_string(),
                    c.witness.as_deref().unwrap_or("-"),
                    c.note.as_deref().unwrap_or("")
                );
            }
        }
        return Ok(!cells.iter().any(|c| c.status == DiffStatus::Miss));
    }
    let entries = bounds_table(&records, a.max_n);
    if a.json {
        print_json(&serde_json::to_value(&entries)?)?;
    } else {
        println!(
            "{:>3} {:>3} {:>5} {:>5} {:<15} witness",
            "n", "k", "lower", "upper", "status"
        );
        for e in &entries {
            println!(
                "{:>3} {:>3} {:>5} {:>5} {:<15} {}",
                e.n,
                e.k,
                e.d_lower,
                e.d_upper,
                format!("{:?}", e.status),
                e.witness.as_deref().unwrap_or("-")
            );
        }
    }
    Ok(true)
}

fn record_json(r: &CodeRecord) -> Value {
    json!({
        "id": r.id,
        "n": r.n,
        "k": r.k,
        "d": r.d,
        "is_lcd": r.is_lcd,
        "paper_match": r.paper_match,
        "provenance": r.provenance,
        "enumerator": r.enumerator.terms(),
    })
}

fn print_records(records: &[CodeRecord], json_out: bool) -> CliResult<()> {
    if json_out {
        return print_json(&Value::Array(records.iter().map(record_json).collect()));
    }
    for r in records {
        println!(
            "{:<20} [{},{},{}] lcd={} {}",
            r.id, r.n, r.k, r.d, r.is_lcd, r.paper_match
        );
    }
    Ok(())
}

fn registry_cmd(command: RegistryCommand) -> CliResult<bool> {
    match command {
        RegistryCommand::Export { dir } => {
            let mut records = build_registry()?;
            records.sort_by(|a, b| a.id.cmp(&b.id));
            export_registry(&records, &dir)?;
            println!("wrote {} codes to {}", records.len(), dir.display());
        }
        RegistryCommand::Import { dir, json } => {
            let records = import_registry(&dir)?;
            print_records(&records, json)?;
        }
        RegistryCommand::List { json } => {
            let mut records = build_registry()?;
            records.sort_by(|a, b| a.id.cmp(&b.id));
            print_records(&records, json)?;
        }
    }
    Ok(true)
}

fn load_overrides(dir: &Path) -> CliResult<Overrides> {
    let known: Vec<&str> = constructions::named_ids().collect();
    let mut out = Overrides::new();
    for entry in std::fs::read_dir(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))? {
        let path = entry?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("code") {
            continue;
        }
        let id = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or_default()
            .to_string();
        if !known.contains(&id.as_str()) {
            return Err(usage(format!("{}: not a named matrix id", path.display())));
        }
        let text = std::fs::read_to_string(&path)?;
        let m = parse_matrix(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        out.insert(id, m);
    }
    Ok(out)
}

fn verify_cmd(a: VerifyArgs) -> CliResult<bool> {
    let Suite::Paper = a.suite;
    let overrides = match &a.named_dir {
        Some(dir) => load_overrides(dir)?,
        None => Overrides::new(),
    };
    let report = verify::verify_paper(&overrides);
    let failed = report.failures().count();
    if a.json {
        print_json(&json!({
            "suite": "paper",
            "passed": report.passed(),
            "total": report.checks.len(),
            "failed": failed,
            "checks": report.checks,
        }))?;
    } else {
        for c in &report.checks {
            println!(
                "{} {:<12} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.group,
                c.name,
                c.detail
            );
        }
        println!("{} checks, {} failed", report.checks.len(), failed);
    }
    Ok(report.passed())
}
