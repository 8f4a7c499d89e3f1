use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mlacalc::tensor::SeedOrder;
use mlacalc_cli::commands::{self, Options, Report};
use mlacalc_cli::document::InstanceDocument;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeedOrderArg {
    Default,
    Alt,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Identities,
    Compat,
    Tensor,
    All,
}

#[derive(Parser)]
#[command(name = "mlacalc", version, about = "Finite multiplicative Lie algebras, compatible actions and tensor products")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print a machine-readable JSON report instead of the summary
    #[arg(long, global = true)]
    json: bool,

    /// Coset cap for the tensor enumeration [default: 200000]
    #[arg(long, global = true)]
    max_cosets: Option<usize>,

    /// Completion round cap for the tensor star [default: 8]
    #[arg(long, global = true)]
    max_rounds: Option<usize>,

    /// Normal-form order used to realize the tensor star
    #[arg(long, global = true, value_enum, default_value = "default")]
    seed_order: SeedOrderArg,
}

#[derive(Subcommand)]
enum Command {
    /// Check the star axioms and, for pairs, every action and compatibility condition
    Validate { file: PathBuf },
    /// Lower central and derived series
    Series { file: PathBuf },
    /// Action and compatibility conditions plus the pair-level statements
    ActionCheck { file: PathBuf },
    /// Realize the non-abelian tensor product of a compatible pair
    Tensor { file: PathBuf },
    /// Run the statement catalogue and print the verdict ledger
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        suite: Option<SuiteArg>,
        /// A single statement id
        #[arg(long)]
        statement: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut opts = Options {
        max_cosets: cli.max_cosets,
        max_rounds: cli.max_rounds,
        seed_order: match cli.seed_order {
            SeedOrderArg::Default => SeedOrder::Default,
            SeedOrderArg::Alt => SeedOrder::Alt,
        },
        ..Options::default()
    };
    let (name, file) = match &cli.command {
        Command::Validate { file } => ("validate", file),
        Command::Series { file } => ("series", file),
        Command::ActionCheck { file } => ("action-check", file),
        Command::Tensor { file } => ("tensor", file),
        Command::Verify { file, suite, statement } => {
            opts.suite = suite.map(|s| format!("{s:?}").to_lowercase());
            opts.statement = statement.clone();
            ("verify", file)
        }
    };
    let report = match InstanceDocument::from_path(file) {
        Err(e) => Report::load_failure(name, &e),
        Ok(doc) => match cli.command {
            Command::Validate { .. } => commands::validate(&doc),
            Command::Series { .. } => commands::series(&doc),
            Command::ActionCheck { .. } => commands::action_check(&doc),
            Command::Tensor { .. } => commands::tensor(&doc, &opts),
            Command::Verify { .. } => commands::verify(&doc, &opts),
        },
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize"));
    } else {
        print!("{}", report.human);
    }
    if report.status == commands::ExitStatus::InputError && !cli.json {
        eprintln!("mlacalc: input rejected");
    }
    ExitCode::from(report.status.code())
}
