//! The `k5n` command line.
//!
//! Exit codes: 0 on success, 1 when a domain check fails (invalid drawing,
//! non-optimal input to `decompose`, ...), 2 on usage errors and unreadable
//! or malformed input. Commands reading a drawing or key take a file path;
//! `-` or no path reads standard input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use k5n_core::classify::classify_antipodal_free_optimal;
use k5n_core::construct::{build_drs, build_zarankiewicz, decompose};
use k5n_core::cyclic::{antidistance, white_rotation};
use k5n_core::keycore::{build_key, KeyGraph};
use k5n_core::linsys::KeyLinearSystem;
use k5n_core::realize::fragment_realizable;

use crate::format::{
    self, classification_table, ClassificationDoc, DecompositionDoc, FormatError, FragmentDoc,
    KeyReportDoc, SystemDoc, VerifyDoc,
};

#[derive(Debug, Parser)]
#[command(name = "k5n", version, about = "Rotation systems of optimal drawings of K_{5,n}")]
struct Cli {
    /// Write output to FILE instead of standard output.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Antidistance between two rotations of the five black vertices.
    Antidist { first: String, second: String },
    /// Generate a drawing.
    #[command(subcommand)]
    Gen(Generator),
    /// Validate a drawing and report optimality, antipodal pairs and cleanliness.
    Verify { file: Option<PathBuf> },
    /// Key and core of a drawing, cleaning it first if needed.
    Key { file: Option<PathBuf> },
    /// Linear system of a key (or of a drawing's key) and its positive solutions.
    SolveKey {
        file: Option<PathBuf>,
        #[arg(long)]
        n: u64,
        /// Print the equations as aligned text instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Decide whether labelled rotations admit black rotations, with a
    /// refutation certificate when they do not.
    ForbidCheck { file: Option<PathBuf> },
    /// Classify antipodal-free optimal drawings on n white vertices.
    Classify {
        #[arg(long)]
        n: u64,
        /// Print a summary table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Split an optimal drawing into antipodal pairs and a residual D(r,s).
    Decompose { file: Option<PathBuf> },
}

#[derive(Debug, Subcommand)]
enum Generator {
    /// The antipodal-free optimal drawing D(r,s) on 4(r+s) white vertices.
    Drs {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// The Zarankiewicz drawing on n white vertices.
    Zar {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    /// Exit 1 with a message; any report has already been emitted.
    Domain(String),
    /// Exit 2 with a message.
    Usage(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    output: Option<PathBuf>,
}

impl Io<'_> {
    fn read(&mut self, file: Option<&PathBuf>) -> Result<String, Failure> {
        let mut text = String::new();
        match file {
            Some(path) if path.as_os_str() != "-" => {
                text = fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            _ => {
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Usage(format!("standard input: {e}")))?;
            }
        }
        Ok(text)
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        match &self.output {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("standard output: {e}"))),
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        output: cli.output,
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => 0,
        Err(Failure::Domain(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            1
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            2
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<(), Failure> {
    match command {
        Command::Antidist { first, second } => {
            let a = parse_rotation(&first)?;
            let b = parse_rotation(&second)?;
            let d = antidistance(&a, &b).expect("rotations on the same symbols");
            io.emit(&format!("{d}\n"))
        }
        Command::Gen(Generator::Drs { r, s }) => io.emit(&format::drawing_to_json(&build_drs(r, s))),
        Command::Gen(Generator::Zar { n }) => {
            io.emit(&format::drawing_to_json(&build_zarankiewicz(n)))
        }
        Command::Verify { file } => {
            let d = format::drawing_from_json(&io.read(file.as_ref())?)?;
            let report = VerifyDoc::new(&d);
            io.emit(&format::to_json(&report))?;
            if report.valid {
                Ok(())
            } else {
                Err(Failure::Domain("drawing is invalid".into()))
            }
        }
        Command::Key { file } => {
            let d = format::drawing_from_json(&io.read(file.as_ref())?)?;
            check_valid(&d)?;
            let key = build_key(&d.clean()).map_err(|e| Failure::Domain(e.to_string()))?;
            io.emit(&format::to_json(&KeyReportDoc::new(&key)))
        }
        Command::SolveKey { file, n, text } => {
            let key = read_key(&io.read(file.as_ref())?)?;
            let system = KeyLinearSystem::from_key(&key);
            if text {
                io.emit(&system.to_string())
            } else {
                let solutions = system.positive_integral_solutions(n);
                io.emit(&format::to_json(&SystemDoc::new(&system, n, &solutions)))
            }
        }
        Command::ForbidCheck { file } => {
            let key = format::key_from_json(&io.read(file.as_ref())?)?;
            let verdict = fragment_realizable(key.vertices(), &key.labels());
            io.emit(&format::to_json(&FragmentDoc::from(&verdict)))
        }
        Command::Classify { n, table } => {
            let result =
                classify_antipodal_free_optimal(n).map_err(|e| Failure::Domain(e.to_string()))?;
            if table {
                io.emit(&classification_table(&result))
            } else {
                io.emit(&format::to_json(&ClassificationDoc::from(&result)))
            }
        }
        Command::Decompose { file } => {
            let d = format::drawing_from_json(&io.read(file.as_ref())?)?;
            check_valid(&d)?;
            let decomposition = decompose(&d).map_err(|e| Failure::Domain(e.to_string()))?;
            io.emit(&format::to_json(&DecompositionDoc::from(&decomposition)))
        }
    }
}

fn parse_rotation(text: &str) -> Result<k5n_core::cyclic::CyclicPermutation, Failure> {
    white_rotation(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn check_valid(d: &k5n_core::drawing::AbstractDrawing) -> Result<(), Failure> {
    if d.validate().is_valid() {
        Ok(())
    } else {
        Err(Failure::Domain(
            "drawing is invalid; run verify for details".into(),
        ))
    }
}

/// A key document, or a drawing document whose key is taken.
fn read_key(text: &str) -> Result<KeyGraph, Failure> {
    let value: serde_json::Value = format::parse(text)?;
    if value.get("lambda").is_some() {
        let d = format::drawing_from_json(text)?;
        check_valid(&d)?;
        build_key(&d.clean()).map_err(|e| Failure::Domain(e.to_string()))
    } else {
        Ok(format::key_from_json(text)?)
    }
}
