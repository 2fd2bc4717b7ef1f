use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use z3calc_core::expr::parse_poly;
use z3calc_core::format::{poly_latex, poly_text, word_text};
use z3calc_core::presets::{self, PRESETS};
use z3calc_core::rewrite::set_step_budget;
use z3calc_core::{serial, supergroup, verify, Error, Poly, Presentation, Report};

#[derive(Parser)]
#[command(name = "z3calc", version, about = "Z3-graded noncommutative rewriting calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression in a preset.
    Reduce {
        #[arg(long)]
        preset: String,
        /// Specialize q to this rational before reducing.
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Emit θ, dθ, ... instead of the ASCII names.
        #[arg(long)]
        unicode: bool,
        expr: String,
    },
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Critical-pair census as JSON.
    Pairs {
        #[arg(long)]
        preset: String,
    },
    /// List, export or import presets.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
    /// Supergroup checks as a JSON report: comodule, inverse or sdet.
    Supergroup {
        #[arg(long)]
        check: String,
    },
    /// The superdeterminant in normal form.
    Sdet {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    List,
    Export { name: String },
    /// Validate a preset file and print its canonical export.
    Import { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

enum Failure {
    Core(Error),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn poly_json(p: &Poly, pres: &Presentation) -> serde_json::Value {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| pres.order.cmp_words(b.0, a.0));
    let terms: Vec<_> = terms
        .into_iter()
        .map(|(w, c)| json!({ "coeff": c.to_string(), "word": word_text(w) }))
        .collect();
    json!({
        "preset": pres.name,
        "normal_form": poly_text(p, Some(&pres.order), false),
        "terms": terms,
    })
}

fn render(p: &Poly, pres: &Presentation, format: Format, unicode: bool) -> String {
    match format {
        Format::Text => poly_text(p, Some(&pres.order), unicode),
        Format::Latex => poly_latex(p, Some(&pres.order)),
        Format::Json => serde_json::to_string_pretty(&poly_json(p, pres)).expect("json"),
    }
}

fn report_text(r: &Report) -> String {
    let mut out = String::new();
    for c in &r.checks {
        match &c.witness {
            None => out.push_str(&format!("PASS {}\n", c.name)),
            Some(w) => out.push_str(&format!("FAIL {}: {}\n", c.name, w)),
        }
    }
    let failed = r.failures().count();
    out.push_str(&format!(
        "{}: {} checks, {} failed\n",
        r.suite,
        r.checks.len(),
        failed
    ));
    out
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Reduce {
            preset,
            q,
            format,
            unicode,
            expr,
        } => {
            let mut pres = presets::build(&preset)?;
            if let Some(q) = q {
                let q0: BigRational = q
                    .parse()
                    .map_err(|_| Failure::Other(format!("malformed rational `{q}`")))?;
                pres = presets::specialize(&pres, &q0)?;
            }
            let p = parse_poly(&expr, Some(&pres.alphabet))?;
            let nf = pres.normal_form(&p)?;
            println!("{}", render(&nf, &pres, format, unicode));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, format } => {
            let report = verify::run(&suite)?;
            match format {
                ReportFormat::Text => print!("{}", report_text(&report)),
                ReportFormat::Json => println!("{}", report.to_json()),
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Pairs { preset } => {
            let census = presets::build(&preset)?.census()?;
            println!("{}", serde_json::to_string_pretty(&census).expect("json"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Presets { action } => {
            match action {
                PresetAction::List => {
                    for name in PRESETS {
                        let p = presets::build(name)?;
                        println!("{name}\t{} rules", p.rules().len());
                    }
                }
                PresetAction::Export { name } => {
                    println!("{}", serial::export(&presets::build(&name)?));
                }
                PresetAction::Import { file } => {
                    let src = std::fs::read_to_string(&file)
                        .map_err(|e| Failure::Other(format!("{}: {e}", file.display())))?;
                    println!("{}", serial::export(&serial::import(&src)?));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Supergroup { check } => {
            let report = supergroup::check(&check)?;
            println!("{}", report.to_json());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Sdet { format } => {
            let pres = supergroup::glhj_inv()?;
            let d = supergroup::sdet(&pres)?;
            println!("{}", render(&d, &pres, format, false));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("Z3CALC_STEP_BUDGET") {
        match v.parse() {
            Ok(n) => set_step_budget(n),
            Err(_) => {
                eprintln!("error: Z3CALC_STEP_BUDGET must be a positive integer, got `{v}`");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Core(e @ Error::BudgetExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
