//! Thin command-line front end; all behavior lives in the library.
//!
//! Exit codes: 0 success, 1 input parse error, 2 domain or usage error,
//! 3 indeterminate form under strict mode, 4 unknown subcommand.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use prearith::report::{
    expansion_machine_line, expansion_text, law_machine_line, series_rows, series_table,
    Record,
};
use prearith::{
    audit_laws, classify_series, eval_expression, project_series_am, project_series_amm,
    project_series_bm, run_demo, ClassContext, Demo, Error, Expr, ExactScalar, Law,
    OutputFormat, Result, RunConfig, SeriesSpec, DEFAULT_SEED,
};

#[derive(Parser)]
#[command(
    name = "prearith",
    version,
    about = "Saturating and projective arithmetic over bounded carriers",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Arithmetic class: am ([0,M] clamped), amm ([-M,M] clamped), or bm
    /// (arctan-projected [0,M]).
    #[arg(long, global = true, default_value = "am")]
    class: String,

    /// The magnitude M (a rational like 5, 7/2, or 2.5).
    #[arg(long, global = true, default_value = "1")]
    magnitude: String,

    /// Indeterminate-form handling in the arctan class: total or strict.
    #[arg(long, global = true, default_value = "total")]
    mode: String,

    /// Output format: text or machine (key=value lines).
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Seed for randomized audits.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Term budget for series analysis.
    #[arg(long, global = true)]
    max_terms: Option<usize>,
}

impl GlobalArgs {
    fn build(&self) -> Result<RunConfig> {
        let class = self.class.parse()?;
        let context = ClassContext::parse(class, &self.magnitude)?;
        let mut config = RunConfig::new(context);
        config.mode = self.mode.parse()?;
        config.format = self.format.parse()?;
        config.seed = self.seed;
        config.max_terms = self.max_terms;
        Ok(config)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression (numbers, M, +, *, -, parentheses).
    Eval {
        /// Expression source; may start with '-' (signed class negation).
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },

    /// Classify a series and project it into the class.
    ///
    /// Specs: geom:a=<num>,r=<num> | harmonic:+ | harmonic:- | altharmonic
    /// | pseries:p=<num> | grandi | list:<t1>,<t2>,... |
    /// declared:<classification>:<t1>,...
    Series {
        spec: String,
        /// Also print the first N terms and projected partial sums as CSV.
        #[arg(long)]
        rows: Option<usize>,
    },

    /// Audit algebraic laws on a grid plus seeded random samples.
    Laws {
        /// Comma-separated law names (default: every law the class supports).
        #[arg(long = "laws", value_delimiter = ',')]
        laws: Vec<String>,
        /// Random samples per law, on top of the exhaustive grid.
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },

    /// Greedily expand Z in powers of X (exact-rational classes only).
    Expand {
        z: String,
        x: String,
        stages: u32,
    },

    /// Run a narrated demonstration: sorites, machine-infinity, raindrop,
    /// or lion-rabbit.
    Demo { name: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand => 4,
                _ => 2,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = cli.global.build()?;
    match cli.command {
        Command::Eval { expr } => cmd_eval(&expr, &config),
        Command::Series { spec, rows } => cmd_series(&spec, rows, &config),
        Command::Laws { laws, budget } => cmd_laws(&laws, budget, &config),
        Command::Expand { z, x, stages } => cmd_expand(&z, &x, stages, &config),
        Command::Demo { name } => cmd_demo(&name, &config),
    }
}

fn cmd_eval(src: &str, config: &RunConfig) -> Result<()> {
    let expr: Expr = src.parse()?;
    let outcome = eval_expression(&expr, config)?;
    match config.format {
        OutputFormat::Text => println!("{expr} = {outcome}"),
        OutputFormat::Machine => println!(
            "{}",
            Record::ok(&config.context, src, &outcome.value_string()).machine_line()
        ),
    }
    Ok(())
}

fn cmd_series(src: &str, rows: Option<usize>, config: &RunConfig) -> Result<()> {
    let mut series: SeriesSpec = src.parse()?;
    if let Some(max_terms) = config.max_terms {
        series = series.with_max_terms(max_terms);
    }
    let classification = classify_series(&series)?;
    let projection = match &config.context {
        ClassContext::Am(m) => project_series_am(&series, m)?.to_string(),
        ClassContext::Amm(m) => project_series_amm(&series, m)?.to_string(),
        ClassContext::Bm(m) => project_series_bm(&series, m)?.to_string(),
    };
    match config.format {
        OutputFormat::Text => {
            println!(
                "series {series} in {} with M = {}",
                config.context.class(),
                config.context.magnitude_string()
            );
            println!("classification: {classification}");
            println!("projection: {projection}");
        }
        OutputFormat::Machine => {
            println!(
                "class={} magnitude={} input={} classification={} projection={} status=ok",
                config.context.class(),
                config.context.magnitude_string(),
                prearith::report::quote(src),
                prearith::report::quote(&classification.to_string()),
                prearith::report::quote(&projection),
            );
        }
    }
    if let Some(rows) = rows {
        let table = series_table(&series_rows(&series, &config.context, rows)?);
        println!("{table}");
    }
    Ok(())
}

fn cmd_laws(names: &[String], budget: usize, config: &RunConfig) -> Result<()> {
    let laws: Vec<Law> = if names.is_empty() {
        Law::supported(config.context.class())
    } else {
        names.iter().map(|name| name.parse()).collect::<Result<_>>()?
    };
    let reports = audit_laws(&config.context, &laws, budget, config.seed)?;
    let held = reports.iter().filter(|r| r.held()).count();
    match config.format {
        OutputFormat::Text => {
            for report in &reports {
                println!("{}", report.summary_line());
            }
            println!("{held} of {} laws held", reports.len());
        }
        OutputFormat::Machine => {
            for report in &reports {
                println!("{}", law_machine_line(report));
            }
        }
    }
    Ok(())
}

fn cmd_expand(z: &str, x: &str, stages: u32, config: &RunConfig) -> Result<()> {
    let z: ExactScalar = z.parse()?;
    let x: ExactScalar = x.parse()?;
    let magnitude = match &config.context {
        ClassContext::Am(m) | ClassContext::Amm(m) => m,
        ClassContext::Bm(_) => {
            return Err(Error::ClassError {
                class: "bm".into(),
                operation: "greedy expansion (exact-rational classes only)".into(),
            })
        }
    };
    let result = prearith::greedy_expansion(&z, &x, stages, magnitude)?;
    match config.format {
        OutputFormat::Text => println!("{}", expansion_text(&z, &x, &result)),
        OutputFormat::Machine => {
            println!("{}", expansion_machine_line(&config.context, &z, &x, &result))
        }
    }
    Ok(())
}

fn cmd_demo(name: &str, config: &RunConfig) -> Result<()> {
    let demo: Demo = name.parse()?;
    let report = run_demo(demo)?;
    match config.format {
        OutputFormat::Text => {
            println!("demo {} (M = {})", report.demo, report.magnitude);
            for line in &report.narrative {
                println!("  {line}");
            }
            println!("{}", report.equation);
        }
        OutputFormat::Machine => {
            // Demos fix their own class and magnitude.
            println!(
                "class=am magnitude={} input={} output={} status=ok",
                report.magnitude,
                prearith::report::quote(name),
                prearith::report::quote(&report.equation),
            );
        }
    }
    Ok(())
}
