//! `dn-ogs`: canonical forms, factorizations and Coxeter lengths in `D_n` from the command line.
//!
//! Exit codes: 0 on success, 1 for a domain error, 2 for a parse or usage
//! error, 3 when a verification suite reports failures.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dn_ogs::blocks::{bullet_circle_decompose, length_factors};
use dn_ogs::exchange::{normalize_with_trace, TraceStep};
use dn_ogs::factor::factorize_elementary;
use dn_ogs::length::{dn_length, dn_normal_form};
use dn_ogs::oracle::verify_suite;
use dn_ogs::text::{parse_perm, parse_word, ParseError};
use dn_ogs::{DnOgsForm, MixedWord};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dn-ogs", version, about = "Canonical forms and Coxeter lengths in the group D_n")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print each rewrite step of the normalizer to stderr as a JSON line.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite a word into canonical form.
    Canon {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Canonical form of the product of two words.
    Mul {
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
    },
    /// Coxeter length of a word or form.
    Len {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Elementary factorization of the projection of a form.
    Factorize {
        #[arg(long)]
        n: usize,
        form: String,
    },
    /// Bullet/circle decomposition of a form.
    Decompose {
        #[arg(long)]
        n: usize,
        form: String,
    },
    /// Signed permutation denoted by a form.
    Perm {
        #[arg(long)]
        n: usize,
        form: String,
    },
    /// Canonical form of a signed permutation such as `[-2,-1,-4,-3]`.
    Form {
        #[arg(long)]
        n: usize,
        perm: String,
    },
    /// Reduced normal form of a form.
    Normform {
        #[arg(long)]
        n: usize,
        form: String,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long)]
        n: usize,
        /// One of bijection, exchange-laws, length, decomposition, subgroups.
        #[arg(long)]
        suite: String,
    },
}

enum Failure {
    Domain(String),
    Parse(String),
    Verification,
}

impl From<dn_ogs::Error> for Failure {
    fn from(e: dn_ogs::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn parse(text: &str, n: usize, what: &str) -> Result<MixedWord, Failure> {
    parse_word(text, n).map_err(|e| parse_failure(what, text, e))
}

fn parse_failure(what: &str, text: &str, e: ParseError) -> Failure {
    Failure::Parse(format!("invalid {what} {text:?}: {e}"))
}

struct Output {
    json: bool,
    trace: bool,
}

impl Output {
    fn normalize(&self, word: &MixedWord) -> DnOgsForm {
        let (form, steps) = normalize_with_trace(word);
        if self.trace {
            for step in &steps {
                eprintln!("{}", trace_line(step));
            }
        }
        form
    }

    fn emit(&self, text: String, value: Value) {
        if self.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    }
}

fn trace_line(step: &TraceStep) -> String {
    serde_json::to_string(step).expect("trace steps serialize")
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Output {
        json: cli.json,
        trace: cli.trace,
    };
    match cli.command {
        Command::Canon { n, word } => {
            let form = out.normalize(&parse(&word, n, "word")?);
            out.emit(form.to_string(), json!({ "form": form.to_string() }));
        }
        Command::Mul { n, left, right } => {
            let product = parse(&left, n, "word")?.concat(&parse(&right, n, "word")?)?;
            let form = out.normalize(&product);
            out.emit(form.to_string(), json!({ "form": form.to_string() }));
        }
        Command::Len { n, word } => {
            let length = dn_length(&out.normalize(&parse(&word, n, "word")?));
            out.emit(length.to_string(), json!({ "length": length }));
        }
        Command::Factorize { n, form } => {
            let form = out.normalize(&parse(&form, n, "form")?);
            let fact = factorize_elementary(form.circle());
            let factors: Vec<String> = fact.factors().iter().map(ToString::to_string).collect();
            out.emit(fact.to_string(), json!({ "factors": factors, "majs": fact.majs() }));
        }
        Command::Decompose { n, form } => {
            let form = out.normalize(&parse(&form, n, "form")?);
            let d = bullet_circle_decompose(&form);
            let bullet = bullet_text(d.w_indices());
            let factors: Vec<Value> = length_factors(&form)
                .iter()
                .map(|(ws, f)| json!({ "bullet": ws, "factor": f.to_string() }))
                .collect();
            let length = dn_length(&form);
            let text = format!("bullet: {bullet}\ncircle: {}\nlength: {length}", d.circle());
            out.emit(
                text,
                json!({
                    "bullet": d.w_indices(),
                    "circle": d.circle().to_string(),
                    "length": length,
                    "factors": factors,
                }),
            );
        }
        Command::Perm { n, form } => {
            let a = out.normalize(&parse(&form, n, "form")?).realize();
            out.emit(a.to_string(), json!({ "perm": a.images() }));
        }
        Command::Form { n, perm } => {
            let a = parse_perm(&perm).map_err(|e| parse_failure("permutation", &perm, e))?;
            if a.rank() != n {
                return Err(Failure::Domain(format!("permutation {a} has rank {}, expected {n}", a.rank())));
            }
            let form = DnOgsForm::extract(&a)?;
            out.emit(form.to_string(), json!({ "form": form.to_string() }));
        }
        Command::Normform { n, form } => {
            let form = out.normalize(&parse(&form, n, "form")?);
            let word = dn_normal_form(&form);
            let text = if word.is_empty() { "e".to_string() } else { word.to_string() };
            out.emit(text.clone(), json!({ "normal_form": text, "length": word.len() }));
        }
        Command::Verify { n, suite } => {
            let report = verify_suite(n, &suite)?;
            let text = if report.passed() {
                format!("{}: pass at n={n}, {} checks", report.suite, report.checked)
            } else {
                let mut lines = vec![format!("{}: FAIL at n={n}, {} checks", report.suite, report.checked)];
                lines.extend(report.failures.iter().cloned());
                lines.join("\n")
            };
            out.emit(text, serde_json::to_value(&report).expect("reports serialize"));
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn bullet_text(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter().map(|l| format!("w{l}")).collect::<Vec<_>>().join("*")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(3),
    }
}
