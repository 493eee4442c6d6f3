// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kaschlab::corpus::{run_corpus, CorpusConfig};
use kaschlab::{FieldSpec, PrimeField, Rationals, Side};
use kaschlab_cli::report::{render_text, ReportDocument, TextOptions};
use kaschlab_cli::{construct, goldens, CliError};

#[derive(Parser)]
#[command(name = "kaschlab", version, about = "Kasch and dual Kasch properties of finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze `.alg` files.
    Analyze(AnalyzeArgs),
    /// Build an algebra and write it as `.alg` text.
    Construct(ConstructArgs),
    /// Cross-check the deciders on random quiver algebras.
    Corpus(CorpusArgs),
    /// Compare the example reports with their goldens.
    Goldens(GoldensArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
    Both,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Emit JSON documents.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit a text table (default).
    #[arg(long)]
    text: bool,
    /// Restrict the text table to one side.
    #[arg(long, value_enum, default_value = "both")]
    side: SideArg,
    /// Show every certificate in the text table.
    #[arg(long)]
    certificates: bool,
    /// Analyze over this field instead of the declared one.
    #[arg(long, value_name = "FIELD")]
    field_override: Option<FieldSpec>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Builder words, e.g. `triangular 3 over GF(7)`.
    #[arg(required = true, num_args = 1..)]
    spec: Vec<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Rename the result.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 12)]
    dim_max: usize,
    #[arg(long, default_value = "GF(101)")]
    field: FieldSpec,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "KASCHLAB_JOBS")]
    jobs: Option<usize>,
    /// Random module pairs per algebra for the duality checks.
    #[arg(long, default_value_t = 0)]
    duality_pairs: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GoldensArgs {
    /// Directory holding `examples/` and `goldens/`.
    #[arg(long, default_value = ".")]
    root: PathBuf,
    /// Rewrite the goldens from the current output.
    #[arg(long)]
    update: bool,
}

fn analyze(args: AnalyzeArgs) -> Result<ExitCode, CliError> {
    // everything is analyzed before anything is printed
    let docs = args
        .files
        .iter()
        .map(|p| ReportDocument::from_file(p, args.field_override))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    if args.json {
        let values = docs.iter().map(ReportDocument::to_value).collect::<Result<Vec<_>, _>>()?;
        out = match values.as_slice() {
            [one] => serde_json::to_string_pretty(one)?,
            many => serde_json::to_string_pretty(many)?,
        };
        out.push('\n');
    } else {
        let side = match args.side {
            SideArg::Right => Some(Side::Right),
            SideArg::Left => Some(Side::Left),
            SideArg::Both => None,
        };
        let opts = TextOptions { side, certificates: args.certificates };
        for (i, doc) in docs.iter().enumerate() {
            doc.to_value()?;
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&render_text(doc, opts));
        }
    }
    print(&out)
}

fn print(s: &str) -> Result<ExitCode, CliError> {
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(s.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
    Ok(ExitCode::SUCCESS)
}

fn construct(args: ConstructArgs) -> Result<ExitCode, CliError> {
    let mut alg = construct::build(&args.spec)?;
    if let Some(name) = &args.name {
        alg = alg.renamed(name);
    }
    let text = alg.serialize();
    match &args.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            Ok(ExitCode::SUCCESS)
        }
        None => print(&text),
    }
}

fn corpus(args: CorpusArgs) -> Result<ExitCode, CliError> {
    let config = CorpusConfig {
        count: args.count,
        dim_max: args.dim_max,
        field: args.field,
        seed: args.seed,
        duality_pairs: args.duality_pairs,
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let summary = match config.field {
        FieldSpec::Rationals => run_corpus(&config, &Rationals, jobs)?,
        FieldSpec::Prime(p) => run_corpus(&config, &PrimeField::new(p)?, jobs)?,
    };
    let text = if args.json { serde_json::to_string_pretty(&summary)? + "\n" } else { summary.to_text() };
    print(&text)?;
    if summary.clean() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("kaschlab: {} corpus item(s) failed", summary.failures.len());
        Ok(ExitCode::from(3))
    }
}

fn run_goldens(args: GoldensArgs) -> Result<ExitCode, CliError> {
    let outcomes = goldens::run(&args.root, args.update)?;
    let mut out = String::new();
    let mut failed = 0;
    for o in &outcomes {
        let status = if args.update { "UPDATED" } else if o.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {} ({:.0} ms)\n", o.case, o.elapsed.as_secs_f64() * 1e3));
        for d in &o.diff {
            out.push_str(&format!("  {d}\n"));
        }
        failed += usize::from(!o.passed);
    }
    print(&out)?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Construct(a) => construct(a),
        Command::Corpus(a) => corpus(a),
        Command::Goldens(a) => run_goldens(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("kaschlab: {e}");
        ExitCode::from(e.exit_code() as u8)
    })
}
