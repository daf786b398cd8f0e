//! Command-line surface. `--size` is the matrix size for type A (`sl_n`)
//! and the rank for types B, C, D, matching the usual indexing of the
//! classical series.

use adnil::certify::certify;
use adnil::construct::minimal_ideal;
use adnil::oracle::{OrbitConfig, ENUMERATION_GUARD};
use adnil::partitions::{label_with_variant, Kind, Partition, Variant};
use adnil::report;
use adnil::roots::RootSystem;
use adnil::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "adnil",
    about = "Minimal-dimension ad-nilpotent ideals of Borel subalgebras in classical Lie algebras",
    after_help = "--size means matrix size n for type A (sl_n) and rank n for types B, C, D."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Target {
    /// Lie type: A, B, C or D
    #[arg(long = "type")]
    kind: String,
    /// Matrix size (type A) or rank (types B, C, D)
    #[arg(long)]
    size: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the minimal ideal for one nilpotent orbit
    Ideal {
        #[command(flatten)]
        target: Target,
        /// Orbit partition, comma-separated descending, e.g. 4,2
        #[arg(long)]
        partition: String,
        /// Variant I or II (required for very even type-D partitions)
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print one row per orbit: partition, m, constructed dimension
    Table {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustively certify that every orbit's minimum equals the bound
    Verify {
        #[command(flatten)]
        target: Target,
        /// Seed of the genericity protocol (env ADNIL_SEED, default 7)
        #[arg(long)]
        seed: Option<u64>,
        /// Independent coefficient draws per ideal
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Count the ad-nilpotent ideals of the algebra
    Count {
        #[command(flatten)]
        target: Target,
    },
}

fn seed_from(cli_seed: Option<u64>) -> u64 {
    cli_seed
        .or_else(|| {
            std::env::var("ADNIL_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(OrbitConfig::default().seed)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Ideal {
            target,
            partition,
            variant,
            format,
        } => {
            let kind = Kind::parse(&target.kind)?;
            let parts = Partition::parse(&partition)?;
            let variant = variant.map(|v| Variant::parse(&v)).transpose()?;
            let total = kind.partition_total(target.size);
            let label = label_with_variant(kind, total, parts.parts(), variant)?;
            let built = minimal_ideal(&label)?;
            match format {
                Format::Text => print!("{}", report::ideal_text(&built)?),
                Format::Json => print!("{}", report::render_json(&report::ideal_json(&built)?)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { target, format } => {
            let kind = Kind::parse(&target.kind)?;
            let rows = report::table_rows(kind, target.size)?;
            match format {
                Format::Text => print!("{}", report::table_text(kind, target.size, &rows)),
                Format::Json => print!("{}", report::table_json(kind, target.size, rows)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            seed,
            trials,
        } => {
            let kind = Kind::parse(&target.kind)?;
            let cfg = OrbitConfig {
                seed: seed_from(seed),
                trials,
            };
            let report_data = certify(kind, target.size, &cfg)?;
            print!(
                "{}",
                report::certify_text(&report_data, cfg.seed, cfg.trials)
            );
            if report_data.all_ok() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Count { target } => {
            let kind = Kind::parse(&target.kind)?;
            let rs = RootSystem::build(kind, target.size)?;
            if rs.num_positive() > ENUMERATION_GUARD {
                return Err(Error::Guard(format!(
                    "{kind}{} has {} positive roots; counting is limited to {ENUMERATION_GUARD}",
                    target.size,
                    rs.num_positive()
                )));
            }
            println!("{}", rs.ideals().count());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
