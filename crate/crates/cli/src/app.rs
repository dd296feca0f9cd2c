use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use quasitoric_core::lattice::Body;

use crate::corpus;
use crate::doc::{Document, Loaded};
use crate::error::CliError;
use crate::render::{self, Target};
use crate::report;

#[derive(Parser, Debug)]
#[command(name = "quasitoric", version, about = "Exact convex geometry for nonrational toric data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Vertices, faces, simplicity, normal fan and fan predicates.
    Analyze {
        file: Option<PathBuf>,
        /// Analyze every `.json` document in a directory.
        #[arg(long, value_name = "DIR", conflicts_with = "file")]
        all: Option<PathBuf>,
    },
    /// Validate a fundamental triple.
    CheckTriple { file: PathBuf },
    /// Whether every facet normal or ray meets the quasilattice of another document.
    Quasirational {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        ql: PathBuf,
    },
    /// Chart structure group at each vertex.
    Charts { file: PathBuf },
    /// Add ghost vectors to reach a balanced odd configuration.
    Augment { file: PathBuf },
    /// Gale dual and virtual chamber of a configuration.
    Gale { file: PathBuf },
    /// Triangulation axioms, balance, parity and spanning of a configuration.
    ValidateConfig { file: PathBuf },
    /// Offsets realizing a fan as a normal fan, if any.
    Polytopal { file: PathBuf },
    /// Draw a planar polytope, fan or configuration.
    Render {
        file: PathBuf,
        #[arg(long, value_name = "SVG")]
        out: PathBuf,
        #[arg(long, value_enum)]
        target: Option<Target>,
    },
    /// Every report that applies to a document.
    Report { file: PathBuf },
    /// Write a shipped example document.
    Examples {
        name: String,
        /// Trapezoid parameter, `p/q` or `sqrt(k)`.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, value_name = "DIR", default_value = ".")]
        out: PathBuf,
    },
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Document::from_json(&text)
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    read_document(path)?.load()
}

fn analyze_dir(dir: &Path) -> Result<Value, CliError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let results: Vec<Value> = paths
        .par_iter()
        .map(|p| {
            let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let report = load(p).and_then(|l| report::analyze(&l)).unwrap_or_else(|e| json!({"error": e.diagnostic()}));
            json!({"name": name, "report": report})
        })
        .collect();
    Ok(Value::Array(results))
}

/// Runs one command; the value is printed as JSON on success.
pub fn run(cli: Cli) -> Result<Value, CliError> {
    match cli.command {
        Command::Analyze { file: Some(f), all: None } => report::analyze(&load(&f)?),
        Command::Analyze { all: Some(dir), .. } => analyze_dir(&dir),
        Command::Analyze { .. } => Err(CliError::MissingInput("analyze needs a file or --all DIR".into())),
        Command::CheckTriple { file } => report::check_triple(&load(&file)?.triple()?),
        Command::Quasirational { file, ql } => {
            let body = load(&file)?
                .body()
                .ok_or_else(|| CliError::MissingInput("document has no polytope or fan".into()))?;
            let q = load(&ql)?
                .quasilattice
                .ok_or_else(|| CliError::MissingInput(format!("{} has no quasilattice", ql.display())))?;
            if body.directions().first().is_some_and(|d| d[0].field() != q.field()) {
                return Err(CliError::FieldMismatch("body and quasilattice are declared over different fields".into()));
            }
            report::quasirational(&body.directions(), &q)
        }
        Command::Charts { file } => report::charts(&load(&file)?.triple()?),
        Command::Augment { file } => report::augment_report(&load(&file)?.triple()?),
        Command::Gale { file } => {
            let l = load(&file)?;
            let (v, t) = l.configuration()?;
            report::gale(v, t)
        }
        Command::ValidateConfig { file } => {
            let l = load(&file)?;
            let (v, t) = l.configuration()?;
            report::validate_config(v, t)
        }
        Command::Polytopal { file } => {
            let l = load(&file)?;
            match l.body() {
                Some(Body::Fan(f)) => report::polytopal(&f),
                Some(Body::Polytope(h)) => report::polytopal(&quasitoric_core::geometry::normal_fan(&h)?),
                None => Err(CliError::MissingInput("document has no fan".into())),
            }
        }
        Command::Render { file, out, target } => {
            let l = load(&file)?;
            let target = target.or(if l.polytope.is_some() {
                Some(Target::Polytope)
            } else if l.fan.is_some() {
                Some(Target::Fan)
            } else if l.configuration.is_some() {
                Some(Target::Configuration)
            } else {
                None
            });
            let svg = match target {
                None => render::empty_svg(),
                Some(Target::Polytope) => match &l.polytope {
                    Some(h) => render::polytope_svg(h)?,
                    None => return Err(CliError::MissingInput("document has no polytope".into())),
                },
                Some(Target::Fan) => match (&l.fan, &l.polytope) {
                    (Some(f), _) => render::fan_svg(f)?,
                    (None, Some(h)) => render::fan_svg(&quasitoric_core::geometry::normal_fan(h)?)?,
                    (None, None) => return Err(CliError::MissingInput("document has no fan".into())),
                },
                Some(Target::Configuration) => {
                    let (v, t) = l.configuration()?;
                    render::configuration_svg(v, t)?
                }
            };
            fs::write(&out, svg).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
            Ok(json!({"written": out.display().to_string()}))
        }
        Command::Report { file } => Ok(report::full_report(&load(&file)?)),
        Command::Examples { name, a, out } => {
            let d = corpus::entry(&name, a.as_deref())?;
            fs::create_dir_all(&out)?;
            let path = out.join(format!("{}.json", d.name.as_deref().unwrap_or(&name)));
            fs::write(&path, d.to_json()).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(json!({"written": path.display().to_string()}))
        }
    }
}

/// Parses the command line, runs it and returns the exit status.
pub fn main_exit() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => {
            println!("{}", crate::doc::pretty(&v));
            0
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            1
        }
    }
}
