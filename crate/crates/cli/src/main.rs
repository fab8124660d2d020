//! Batch front door: count series, generate catalogs, run verification.
//!
//! Exit codes: 0 success, 1 verification or consistency failure, 2 usage
//! error.

mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use molegen_core::counting::{dct_unroot, otter_unroot, rooted_trees_series, solve_rooted_series};
use molegen_core::element::AtomKind;
use molegen_core::formats::{emit_catalog, emit_counts, CountsMode};
use molegen_core::series::GradedSeries;
use molegen_core::structure::{assemble_free, grow_rooted};

/// CHNO free generation past this bound needs --force; ~766k structures at
/// degree 10 already.
const FREE_GUARDRAIL: usize = 10;

#[derive(Parser)]
#[command(name = "molegen", version, about = "Count and generate saturated acyclic CHNOF structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a counts table for a structure family.
    Count(CountArgs),
    /// Write a structure catalog and check it against the counting engine.
    Generate(GenerateArgs),
    /// Run the oracle, orbit, round-trip and fixture regression suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Plain unlabeled trees (counting only).
    Trees,
    /// Carbon-only rooted radicals.
    Alkyl,
    /// Carbon-only molecules.
    Alkane,
    /// Carbon, nitrogen and oxygen.
    Chno,
    /// Carbon, nitrogen and oxygen with fluorine padding.
    Chnof,
}

impl Family {
    fn elements(self) -> Option<Vec<AtomKind>> {
        match self {
            Family::Trees => None,
            Family::Alkyl | Family::Alkane => Some(vec![AtomKind::C]),
            Family::Chno | Family::Chnof => Some(AtomKind::HEAVY.to_vec()),
        }
    }

    fn implies_fluorine(self) -> bool {
        matches!(self, Family::Chnof)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Catalog,
    Counts,
    PerElement,
}

#[derive(Args)]
struct FamilyArgs {
    /// Structure family.
    #[arg(long, value_enum)]
    family: Family,

    /// Rooted structures (radicals).
    #[arg(long)]
    rooted: bool,

    /// Free structures (molecules).
    #[arg(long, conflicts_with = "rooted")]
    free: bool,

    /// Heavy-atom truncation bound.
    #[arg(long)]
    max: usize,

    /// Include fluorine padding (implied by --family chnof).
    #[arg(long)]
    with_f: bool,
}

impl FamilyArgs {
    fn rooted_side(&self) -> Result<bool, String> {
        match (self.rooted, self.free) {
            (true, false) => Ok(true),
            (false, true) => Ok(false),
            _ => Err("exactly one of --rooted or --free is required".into()),
        }
    }

    fn include_f(&self) -> Result<bool, String> {
        if self.family == Family::Trees && self.with_f {
            return Err("--with-f does not apply to the trees family".into());
        }
        Ok(self.with_f || self.family.implies_fluorine())
    }
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    family: FamilyArgs,

    /// Output table shape.
    #[arg(long, value_enum, default_value = "counts")]
    format: OutputFormat,

    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    family: FamilyArgs,

    /// Output format; only catalog is meaningful here.
    #[arg(long, value_enum, default_value = "catalog")]
    format: OutputFormat,

    /// Write the catalog here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Override the CHNO free-generation size guardrail.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// fast: rooted <= 5, free <= 4; slow: rooted <= 7, free <= 6.
    #[arg(long, value_enum, default_value = "fast")]
    tier: verify::Tier,

    /// Directory holding chno_rooted.tsv and chno_free.tsv; defaults to the
    /// bundled copies.
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(args) => run_count(&args),
        Command::Generate(args) => run_generate(&args),
        Command::Verify(args) => verify::run(&args.tier, args.fixtures.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn usage<T>(message: impl Into<String>) -> Result<T, String> {
    Err(message.into())
}

fn open_sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, String> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn build_series(args: &FamilyArgs) -> Result<GradedSeries, String> {
    let rooted = args.rooted_side()?;
    let include_f = args.include_f()?;
    match args.family.elements() {
        None => {
            let trees = rooted_trees_series(args.max);
            if rooted {
                Ok(trees)
            } else {
                otter_unroot(&trees).map_err(|e| e.to_string())
            }
        }
        Some(elements) => {
            let a = solve_rooted_series(&elements, include_f, args.max)
                .map_err(|e| e.to_string())?;
            if rooted {
                Ok(a)
            } else {
                Ok(dct_unroot(&a, &elements, include_f)
                    .map_err(|e| e.to_string())?
                    .free)
            }
        }
    }
}

fn run_count(args: &CountArgs) -> Result<ExitCode, String> {
    let mode = match args.format {
        OutputFormat::Counts => CountsMode::Total,
        OutputFormat::PerElement => {
            if args.family.family == Family::Trees {
                return usage("per-element output does not apply to the trees family");
            }
            CountsMode::PerElement
        }
        OutputFormat::Catalog => return usage("count emits tables; use generate for catalogs"),
    };
    let series = build_series(&args.family)?;
    let mut sink = open_sink(&args.out)?;
    emit_counts(&series, mode, &mut sink).map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn run_generate(args: &GenerateArgs) -> Result<ExitCode, String> {
    if args.format != OutputFormat::Catalog {
        return usage("generate emits catalogs; use count for tables");
    }
    let family = &args.family;
    let rooted_side = family.rooted_side()?;
    let include_f = family.include_f()?;
    let Some(elements) = family.family.elements() else {
        return usage("the trees family is counting-only; generate needs atoms");
    };
    if !rooted_side
        && matches!(family.family, Family::Chno | Family::Chnof)
        && family.max > FREE_GUARDRAIL
        && !args.force
    {
        return usage(format!(
            "free {} generation past --max {FREE_GUARDRAIL} is large; pass --force to proceed",
            if family.family == Family::Chnof { "chnof" } else { "chno" },
        ));
    }

    let series = build_series(family)?;
    let mut sink = open_sink(&args.out)?;
    let summary_to_stdout = args.out.is_some();

    let check = if rooted_side {
        let set = grow_rooted(&elements, include_f, family.max);
        let check = set.check_against(&series, 0);
        emit_catalog(&set, &mut sink).map_err(|e| e.to_string())?;
        print_summary(set.counts(), 0, summary_to_stdout);
        check
    } else {
        let pool = grow_rooted(&elements, include_f, family.max / 2);
        let set = assemble_free(&pool, &elements, family.max);
        let check = set.check_against(&series, 1);
        emit_catalog(&set, &mut sink).map_err(|e| e.to_string())?;
        print_summary(set.counts(), 1, summary_to_stdout);
        check
    };
    sink.flush().map_err(|e| e.to_string())?;

    if let Err(mismatch) = check {
        eprintln!("error: {mismatch}");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_summary(counts: Vec<usize>, start: usize, to_stdout: bool) {
    for (degree, count) in counts.iter().enumerate().skip(start) {
        let line = format!("{degree}\t{count}");
        if to_stdout {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}
