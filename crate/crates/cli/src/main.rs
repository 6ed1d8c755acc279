use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use entwine_core::checks::{checks_for, run_check};
use entwine_core::constructions::{construct, lookup, CONSTRUCTIONS};
use entwine_core::format::{Document, StructureFile};
use entwine_core::suite::{self, field_independence_selected, Grid, ROWS};
use entwine_core::{registry, Error, Field, Report};

/// Exact verification of entwining structures and Yang–Baxter systems.
#[derive(Parser)]
#[command(name = "entwine", version)]
struct Cli {
    /// Scalar field: q (rationals) or fp:<p>.
    #[arg(long, global = true)]
    field: Option<Field>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check on an object or construction.
    Verify {
        /// Object name or invocation such as gamma_q@Kx2-1,q=1.
        object: String,
        check: String,
        /// Structure files to load alongside the registry.
        #[arg(long)]
        file: Vec<PathBuf>,
    },
    /// Run the acceptance suite.
    Suite {
        /// Grid file with parameter ranges.
        #[arg(long)]
        grid: Option<PathBuf>,
        /// Restrict to rows, tags or criterion numbers.
        #[arg(long)]
        only: Vec<String>,
        #[arg(long)]
        file: Vec<PathBuf>,
    },
    /// Build an object and print it in the file format.
    Construct {
        /// Invocation such as R_rs@Kx2-1,r=1,s=1.
        invocation: String,
        /// Name of the emitted object.
        #[arg(long, default_value = "constructed")]
        name: String,
        #[arg(long)]
        file: Vec<PathBuf>,
    },
    /// List registry objects, constructions and suite rows.
    List {
        #[arg(long)]
        file: Vec<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Failed(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Precondition { what, report } => {
                let mut r = *report;
                r.suite = format!("{} (precondition: {what})", r.suite);
                Failure::Failed(r)
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn document(field: Option<Field>, files: &[PathBuf]) -> Result<Document, Failure> {
    let mut merged = registry::file();
    let mut file_field = None;
    for path in files {
        let file = StructureFile::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        file_field.get_or_insert_with(|| file.field.clone());
        merged.merge(file)?;
    }
    let field = match (field, file_field) {
        (Some(f), _) => f,
        (None, Some(text)) => text.parse()?,
        (None, None) => Field::Rational,
    };
    if field == Field::Rational && files.is_empty() {
        return Ok(registry::load(field)?);
    }
    Ok(Document::resolve(merged, Some(field))?)
}

fn print_report(out: &mut String, report: &Report, json: bool) {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).expect("json")).unwrap();
    } else {
        write!(out, "{report}").unwrap();
    }
}

fn verify(out: &mut String, cli: &Cli, object: &str, check: &str, files: &[PathBuf]) -> Result<bool, Failure> {
    let doc = document(cli.field, files)?;
    let obj = lookup(&doc, object)?;
    let report = run_check(&obj, check)?;
    print_report(out, &report, cli.json);
    Ok(report.passed)
}

fn run_suite(out: &mut String, cli: &Cli, grid: Option<&PathBuf>, only: &[String], files: &[PathBuf]) -> Result<bool, Failure> {
    let mut g = match grid {
        Some(p) => Grid::parse(&read(p)?)?,
        None => Grid::default(),
    };
    g.only.extend(only.iter().cloned());
    let doc = document(cli.field, files)?;
    let res = suite::run(&doc, &g)?;
    let cross = if field_independence_selected(&g.only) {
        let other = if doc.field() == Field::Rational { Field::prime(7)? } else { Field::Rational };
        let other_doc = document(Some(other), files)?;
        Some(suite::field_independence(&res, &suite::run(&other_doc, &g)?))
    } else {
        None
    };
    let passed = res.passed() && cross.as_ref().is_none_or(|r| r.passed);
    let rows = res.rows.len() + usize::from(cross.is_some());
    let failed = res.rows.iter().filter(|r| !r.report.passed).count() + usize::from(cross.as_ref().is_some_and(|r| !r.passed));
    if cli.json {
        let value = json!({
            "field": res.field,
            "passed": passed,
            "rows": res.rows,
            "field_independence": cross,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).unwrap();
    } else {
        for r in &res.rows {
            write!(out, "[{}] {}", r.criterion, r.report).unwrap();
        }
        if let Some(c) = &cross {
            write!(out, "[10] {c}").unwrap();
        }
        writeln!(out, "{} rows, {} passed, {} failed", rows, rows - failed, failed).unwrap();
    }
    Ok(passed)
}

fn run_construct(out: &mut String, cli: &Cli, invocation: &str, name: &str, files: &[PathBuf]) -> Result<bool, Failure> {
    let doc = document(cli.field, files)?;
    let built = construct(&doc, invocation)?;
    let mut file = StructureFile::new(doc.field());
    for (suffix, obj) in &built {
        let n = if suffix.is_empty() { name.to_string() } else { format!("{name}.{suffix}") };
        file.add(&n, obj);
    }
    write!(out, "{}", file.emit()).unwrap();
    Ok(true)
}

fn list(out: &mut String, cli: &Cli, files: &[PathBuf]) -> Result<bool, Failure> {
    let doc = document(cli.field, files)?;
    if cli.json {
        let objects: Vec<_> = doc
            .objects()
            .map(|(n, o)| json!({"name": n, "kind": o.kind(), "checks": checks_for(o)}))
            .collect();
        let constructions: Vec<_> = CONSTRUCTIONS.iter().map(|(n, a)| json!({"name": n, "args": a})).collect();
        let rows: Vec<_> =
            ROWS.iter().map(|r| json!({"id": r.id, "criterion": r.criterion, "tags": r.tags})).collect();
        let value = json!({"objects": objects, "constructions": constructions, "suite": rows});
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).unwrap();
        return Ok(true);
    }
    writeln!(out, "objects:").unwrap();
    for (n, o) in doc.objects() {
        let checks = checks_for(o);
        if checks.is_empty() {
            writeln!(out, "  {n} ({})", o.kind()).unwrap();
        } else {
            writeln!(out, "  {n} ({}): {}", o.kind(), checks.join(", ")).unwrap();
        }
    }
    writeln!(out, "constructions:").unwrap();
    for (n, a) in CONSTRUCTIONS {
        writeln!(out, "  {n}@{a}").unwrap();
    }
    writeln!(out, "suite rows:").unwrap();
    for r in ROWS {
        writeln!(out, "  [{}] {} ({})", r.criterion, r.id, r.tags.join(", ")).unwrap();
    }
    writeln!(out, "  [10] {}", suite::FIELD_INDEPENDENCE).unwrap();
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = match &cli.command {
        Command::Verify { object, check, file } => verify(&mut out, &cli, object, check, file),
        Command::Suite { grid, only, file } => run_suite(&mut out, &cli, grid.as_ref(), only, file),
        Command::Construct { invocation, name, file } => run_construct(&mut out, &cli, invocation, name, file),
        Command::List { file } => list(&mut out, &cli, file),
    };
    let code = match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Failed(report)) => {
            print_report(&mut out, &report, cli.json);
            1
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    };
    // a reader that closes the pipe early is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::from(code)
}
