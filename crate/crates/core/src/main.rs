use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use iclneg::commands::{
    cmd_census, cmd_classify, cmd_countermodel, cmd_errata, cmd_eval, cmd_poset, cmd_table,
    cmd_valid, render_errata, OutputFormat,
};
use iclneg::verify::{run_suites, VerifyOptions};
use iclneg::{Error, SearchBound};

#[derive(Parser)]
#[command(name = "iclneg", version, about = "Negation-words of Intuitionistic Control Logic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forcing of a formula at every world of a JSON model
    Eval { model: String, formula: String },
    /// Bounded validity of a formula; exits 1 if refuted
    Valid {
        formula: String,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// First countermodel within the bound, as JSON
    Countermodel {
        formula: String,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Class of a negation-word under both normalizers
    Classify { word: String },
    /// Partition all words up to a length into classes
    Census {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(0..=16))]
        max_len: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Computed validity table
    Table {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(0..=8))]
        max_len: u32,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Cells of the printed table that disagree with the semantics
    Errata {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hasse diagram of the classes
    Poset {
        #[arg(long)]
        constants: bool,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Run every property suite; exits 1 on any failure
    Verify {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[command(flatten)]
        bound: BoundArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=6))]
    max_worlds: u32,
    /// A positive integer, or `none` for no limit
    #[arg(long, default_value = "3", value_parser = parse_height)]
    max_height: Height,
}

#[derive(Clone, Copy)]
struct Height(Option<usize>);

impl BoundArgs {
    fn bound(&self) -> SearchBound {
        SearchBound::new(self.max_worlds as usize, self.max_height.0)
    }
}

fn parse_height(s: &str) -> Result<Height, String> {
    if s == "none" {
        return Ok(Height(None));
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err("expected a positive integer or `none`".to_string()),
        Ok(h) => Ok(Height(Some(h))),
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Markdown,
    Json,
    Dot,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Csv => OutputFormat::Csv,
            Format::Markdown => OutputFormat::Markdown,
            Format::Json => OutputFormat::Json,
            Format::Dot => OutputFormat::Dot,
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Eval { model, formula } => {
            let text = fs::read_to_string(&model)?;
            print!("{}", cmd_eval(&text, &formula)?);
        }
        Command::Valid { formula, bound } => {
            let (valid, report) = cmd_valid(&formula, bound.bound())?;
            print!("{report}");
            if !valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Countermodel { formula, bound } => match cmd_countermodel(&formula, bound.bound())? {
            Some(json) => println!("{json}"),
            None => println!("no countermodel within {}", bound.bound()),
        },
        Command::Classify { word } => print!("{}", cmd_classify(&word)?),
        Command::Census { max_len, format } => print!("{}", cmd_census(max_len as usize, format.into())),
        Command::Table { max_len, format } => print!("{}", cmd_table(max_len as usize, format.into())),
        Command::Errata { format } => print!("{}", render_errata(&cmd_errata(), format.into())),
        Command::Poset { constants, format } => print!("{}", cmd_poset(constants, format.into())),
        Command::Verify {
            max_len,
            bound,
            samples,
            seed,
        } => {
            let opts = VerifyOptions {
                max_len,
                bound: bound.bound(),
                samples,
                seed,
            };
            let reports = run_suites(opts);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            for r in &reports {
                println!("{r}");
            }
            println!("{} suites, {} failed", reports.len(), failed);
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidModel(defects) => {
                    for d in defects {
                        eprintln!("  {d}");
                    }
                    ExitCode::from(3)
                }
                _ => ExitCode::from(2),
            }
        }
    }
}
