//! Command-line front end: emit triangles and statistic distributions,
//! run the verification suites, and cross-check the embedded OEIS
//! snapshots.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use poupard::alternating::grn_distribution;
use poupard::oeis;
use poupard::report::VerifyReport;
use poupard::trees::{eoc_distribution, pom_distribution};
use poupard::triangle::{solve_diagonal, solve_forward, Kind};
use poupard::verify;
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "poupard", version, about = "Tangent/secant triangles, alternating permutations and increasing binary trees, exactly")]
struct Cli {
    /// Suppress per-check lines; print summaries only
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Tan,
    Sec,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Tan => Kind::Tan,
            KindArg::Sec => Kind::Sec,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Forward,
    Diagonal,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Perm,
    Tree,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Stat {
    Grn,
    Pom,
    Eoc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Triangle,
    Bijection,
    Genfun,
    Identities,
    SpecialValues,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum SequenceId {
    A008301,
    A125053,
}

#[derive(Args)]
struct TriangleArgs {
    /// Which triangle to solve
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Solution method
    #[arg(long, value_enum, default_value = "forward")]
    mode: Mode,
    /// Number of rows (n >= 1)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    /// What to enumerate
    #[arg(long, value_enum)]
    object: Object,
    /// Length / node count
    #[arg(long)]
    n: usize,
    /// Statistic to tabulate (grn for perms; pom or eoc for trees,
    /// eoc reported with the -1 shift)
    #[arg(long, value_enum)]
    stat: Stat,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Budget for the chosen suite (rows, permutation length, tree size,
    /// series order or identity index, depending on the suite)
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Args)]
struct OeisArgs {
    /// Embedded snapshot to compare against
    #[arg(long, value_enum)]
    sequence: SequenceId,
    /// How many leading terms to compare
    #[arg(long, default_value = "100")]
    n_max: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a triangle and print it
    Triangle(TriangleArgs),
    /// Enumerate permutations or trees and print a statistic distribution
    Enumerate(EnumerateArgs),
    /// Run a verification suite and print a JSON report
    Verify(VerifyArgs),
    /// Cross-check a triangle against an embedded OEIS snapshot
    Oeis(OeisArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Triangle(args) => cmd_triangle(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args, cli.quiet),
        Command::Oeis(args) => cmd_oeis(args, cli.quiet),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_triangle(args: TriangleArgs) -> ExitCode {
    if args.n < 1 {
        return usage_error("--n must be at least 1");
    }
    let t = match args.mode {
        Mode::Forward => solve_forward(args.kind.into(), args.n),
        Mode::Diagonal => solve_diagonal(args.kind.into(), args.n),
    };
    match args.format {
        Format::Csv => print!("{}", t.to_csv()),
        Format::Json => println!("{}", t.to_json()),
    }
    ExitCode::SUCCESS
}

fn cmd_enumerate(args: EnumerateArgs) -> ExitCode {
    if args.n < 1 {
        return usage_error("--n must be at least 1");
    }
    let counts: BTreeMap<usize, u64> = match (args.object, args.stat) {
        (Object::Perm, Stat::Grn) => grn_distribution(args.n).counts,
        (Object::Tree, Stat::Pom) => pom_distribution(args.n),
        (Object::Tree, Stat::Eoc) => eoc_distribution(args.n),
        (Object::Perm, _) => return usage_error("permutations carry the grn statistic only"),
        (Object::Tree, Stat::Grn) => {
            return usage_error("trees carry the pom and eoc statistics; grn is for perms")
        }
    };
    match args.format {
        Format::Csv => {
            for (k, count) in &counts {
                println!("{k},{count}");
            }
        }
        Format::Json => {
            let pairs: Vec<(usize, u64)> = counts.into_iter().collect();
            println!(
                "{}",
                serde_json::json!({ "n": args.n, "counts": pairs })
            );
        }
    }
    ExitCode::SUCCESS
}

fn report_outcome(report: &VerifyReport, quiet: bool) -> ExitCode {
    if quiet {
        println!(
            "{}",
            serde_json::json!({
                "suite": report.suite,
                "summary": { "pass": report.summary.pass, "fail": report.summary.fail },
            })
        );
    } else {
        println!("{}", report.to_json());
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(args: VerifyArgs, quiet: bool) -> ExitCode {
    use verify::defaults;
    let report = match args.suite {
        Suite::All => {
            if args.n_max.is_some() {
                return usage_error("--n-max applies to a single suite; `all` uses the per-suite defaults");
            }
            verify::all_suites()
        }
        Suite::Triangle => verify::triangle_suite(args.n_max.unwrap_or(defaults::TRIANGLE_N_MAX)),
        Suite::Bijection => verify::bijection_suite(args.n_max.unwrap_or(defaults::TREE_N_MAX)),
        Suite::Genfun => verify::genfun_suite(args.n_max.unwrap_or(defaults::SERIES_ORDER)),
        Suite::Identities => {
            verify::identities_suite(args.n_max.unwrap_or(defaults::IDENTITIES_N_MAX))
        }
        Suite::SpecialValues => {
            verify::special_values_suite(args.n_max.unwrap_or(defaults::PERM_M_MAX))
        }
    };
    report_outcome(&report, quiet)
}

fn cmd_oeis(args: OeisArgs, quiet: bool) -> ExitCode {
    let id = match args.sequence {
        SequenceId::A008301 => oeis::A008301,
        SequenceId::A125053 => oeis::A125053,
    };
    match oeis::cross_check(id, args.n_max) {
        Ok(report) => report_outcome(&report, quiet),
        Err(msg) => usage_error(&msg),
    }
}
