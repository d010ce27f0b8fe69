//! Command-line front end: `avgbi check|construct|report|search`.

use std::ffi::OsString;
use std::io::Write;

use avgbi_core::{scalar, Q};
use clap::{Parser, Subcommand};

use crate::checks::{applicable_kinds, find_kind, run_check};
use crate::construct::{run_construct, Inputs, Outcome};
use crate::diff::reference_diff;
use crate::document::{Document, Map};
use crate::error::{CliError, CliResult, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
use crate::render::{report_json, table, ReportJson};
use crate::search::{search, Template};
use crate::fixtures;

const AFTER_HELP: &str = "Files may be given as `fixture:<name>` to use a shipped fixture.\n\
Exit codes: 0 every axiom passed, 1 some axiom failed, 2 unusable input.";

#[derive(Debug, Parser)]
#[command(name = "avgbi", version, about = "Exact verifier for averaging algebras, bialgebras and Yang-Baxter solutions", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_q(s: &str) -> Result<Q, String> {
    scalar::parse(s).ok_or_else(|| format!("`{s}` is not a rational number p or p/q"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one axiom suite on a document.
    Check {
        file: String,
        /// The suite to run; an unknown name lists the available ones.
        #[arg(long = "as", value_name = "KIND")]
        kind: String,
        /// Weight of Rota-Baxter and O-operators.
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        lambda: Option<Q>,
        /// A document whose `beta` section replaces the input's.
        #[arg(long)]
        beta_file: Option<String>,
        /// Print the machine report instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Build a new document; reports and the reference diff go to stderr.
    Construct {
        kind: String,
        file: String,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        lambda: Option<Q>,
        #[arg(long)]
        beta_file: Option<String>,
        /// Compare the result with a reference document entry by entry.
        #[arg(long)]
        compare: Option<String>,
        /// A document whose `prelie` section is used by tensor-lie and lift-r.
        #[arg(long)]
        prelie_file: Option<String>,
    },
    /// Run every suite whose sections are present.
    Report {
        file: String,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        lambda: Option<Q>,
        #[arg(long)]
        beta_file: Option<String>,
        /// Print only the machine section.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate one section of a template document over a finite entry set.
    Search {
        template: String,
        /// Run even when the number of candidates exceeds the budget.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn read(path: &str) -> CliResult<String> {
    if let Some(name) = path.strip_prefix("fixture:") {
        return Ok(fixtures::get(name)?.to_string());
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })
}

pub fn load(path: &str) -> CliResult<Document> {
    Document::parse(&read(path)?).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{path}: {msg}")),
        other => other,
    })
}

fn load_with_beta(path: &str, beta_file: Option<&str>) -> CliResult<Document> {
    let mut doc = load(path)?;
    if let Some(b) = beta_file {
        let other = load(b)?;
        if other.basis != doc.basis {
            return Err(CliError::input(format!("{b}: basis differs from {path}")));
        }
        doc.maps.insert(Map::Beta, other.maps.get(&Map::Beta).cloned().unwrap_or_default());
    }
    Ok(doc)
}

fn labels_for<'a>(doc: &'a Document, kind: &str) -> Option<&'a [String]> {
    find_kind(kind).filter(|k| k.labelled).map(|_| doc.basis.as_slice())
}

fn json_text<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("reports always serialize") + "\n"
}

fn check(
    out: &mut dyn Write,
    file: &str,
    kind: &str,
    lambda: Option<&Q>,
    beta_file: Option<&str>,
    json: bool,
) -> CliResult<i32> {
    let doc = load_with_beta(file, beta_file)?;
    let rep = run_check(&doc, kind, lambda)?;
    let labels = labels_for(&doc, kind);
    let text = if json { json_text(&report_json(&rep, labels)) } else { table(&rep, labels) };
    let _ = out.write_all(text.as_bytes());
    Ok(if rep.passed() { EXIT_PASS } else { EXIT_FAIL })
}

#[allow(clippy::too_many_arguments)]
fn construct(
    out: &mut dyn Write,
    err: &mut dyn Write,
    kind: &str,
    file: &str,
    output: Option<&str>,
    lambda: Option<&Q>,
    beta_file: Option<&str>,
    compare: Option<&str>,
    prelie_file: Option<&str>,
) -> CliResult<i32> {
    let doc = load_with_beta(file, beta_file)?;
    let prelie = prelie_file.map(load).transpose()?;
    let reference = compare.map(load).transpose()?;
    let inputs = Inputs { lambda, prelie: prelie.as_ref() };
    let outcome = match run_construct(&doc, kind, &inputs) {
        Ok(o) => o,
        Err(e) => match e.report() {
            Some(rep) => {
                let _ = writeln!(err, "error: {e}");
                let _ = err.write_all(table(rep, Some(&doc.basis)).as_bytes());
                return Ok(e.exit_code());
            }
            None => return Err(e),
        },
    };
    match outcome {
        Outcome::Built(c) => {
            let text = c.document.emit();
            match output {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|source| CliError::Io { path: path.to_string(), source })?,
                None => {
                    let _ = out.write_all(text.as_bytes());
                }
            }
            for (rep, labels) in &c.reports {
                let _ = err.write_all(table(rep, labels.as_deref()).as_bytes());
            }
            if let Some(r) = &reference {
                let _ = err.write_all(reference_diff(&c.document, r).render().as_bytes());
            }
            Ok(if c.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Outcome::Refused { reason, report, labels } => {
            let _ = writeln!(err, "construction refused: {reason}");
            let _ = err.write_all(table(&report, labels.as_deref()).as_bytes());
            Ok(EXIT_FAIL)
        }
    }
}

#[derive(serde::Serialize)]
struct MachineReport {
    reports: Vec<ReportJson>,
    verdict: &'static str,
}

fn report(
    out: &mut dyn Write,
    file: &str,
    lambda: Option<&Q>,
    beta_file: Option<&str>,
    json: bool,
) -> CliResult<i32> {
    let doc = load_with_beta(file, beta_file)?;
    let mut tables = String::new();
    let mut reports = Vec::new();
    let mut all = true;
    for kind in applicable_kinds(&doc) {
        let rep = run_check(&doc, kind, lambda)?;
        let labels = labels_for(&doc, kind);
        all &= rep.passed();
        tables.push_str(&table(&rep, labels));
        reports.push(report_json(&rep, labels));
    }
    if reports.is_empty() {
        tables.push_str("no applicable suites\n");
    }
    let machine = json_text(&MachineReport { reports, verdict: if all { "pass" } else { "fail" } });
    if !json {
        let _ = out.write_all(tables.as_bytes());
        let _ = out.write_all(b"\n");
    }
    let _ = out.write_all(machine.as_bytes());
    Ok(if all { EXIT_PASS } else { EXIT_FAIL })
}

fn search_command(out: &mut dyn Write, template: &str, force: bool, threads: Option<usize>) -> CliResult<i32> {
    let t = Template::parse(&read(template)?)?;
    let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get().min(8)));
    let found = search(&t, threads, force)?;
    let _ = out.write_all(found.render().as_bytes());
    Ok(EXIT_PASS)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Check { file, kind, lambda, beta_file, json } => {
            check(out, &file, &kind, lambda.as_ref(), beta_file.as_deref(), json)
        }
        Command::Construct { kind, file, output, lambda, beta_file, compare, prelie_file } => construct(
            out,
            err,
            &kind,
            &file,
            output.as_deref(),
            lambda.as_ref(),
            beta_file.as_deref(),
            compare.as_deref(),
            prelie_file.as_deref(),
        ),
        Command::Report { file, lambda, beta_file, json } => {
            report(out, &file, lambda.as_ref(), beta_file.as_deref(), json)
        }
        Command::Search { template, force, threads } => search_command(out, &template, force, threads),
    }
}

/// Runs one command line (program name first) and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return EXIT_INPUT;
            }
            let _ = out.write_all(text.as_bytes());
            return EXIT_PASS;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Some(rep) = e.report() {
                let _ = err.write_all(table(rep, None).as_bytes());
            }
            e.exit_code()
        }
    }
}
