use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::Parser;

use crate::engine::{
    circ_enumerate, EngineConfig, EnumerationReport, Limits, DEFAULT_SHRINK_BUDGET,
};

use super::dimacs::{parse, Mode, ParseError};
use super::mcs::mcs_transform;

pub const EXIT_COMPLETE: i32 = 0;
pub const EXIT_LIMIT: i32 = 10;
pub const EXIT_ERROR: i32 = 1;

/// Enumerates the preferred models of a circumscribed CNF theory.
///
/// Input is DIMACS CNF; `m <atom>... 0` lines list minimized atoms and
/// `z <atom>... 0` lines irrelevant ones.
#[derive(Debug, Parser)]
#[command(name = "circenum", version)]
pub struct Args {
    /// Stop after N models (0 = all).
    #[arg(short = 'n', value_name = "N", default_value_t = 0)]
    pub max_models: u64,

    /// Report at most N models per minimal assignment of the non-irrelevant
    /// atoms (0 = all; 1 skips witness enumeration).
    #[arg(long = "circ-wit", value_name = "N", default_value_t = 0)]
    pub circ_wit: u64,

    /// Enumerate minimal correction subsets of an unsatisfiable CNF.
    #[arg(long)]
    pub mcs: bool,

    /// Conflict budget of each core shrinking call (0 disables shrinking).
    #[arg(long, value_name = "CONFLICTS", default_value_t = DEFAULT_SHRINK_BUDGET)]
    pub shrink_budget: u64,

    /// Print counters to stderr.
    #[arg(long)]
    pub stats: bool,

    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    pub input: PathBuf,
}

impl Args {
    fn config(&self) -> EngineConfig {
        let nonzero = |v: u64| (v > 0).then_some(v);
        EngineConfig {
            limits: Limits {
                max_models: nonzero(self.max_models),
                max_witnesses: if self.mcs {
                    Some(1)
                } else {
                    nonzero(self.circ_wit)
                },
            },
            shrink_budget: self.shrink_budget,
            ..Default::default()
        }
    }
}

fn read_input(
    args: &Args,
    stdin: &mut dyn BufRead,
) -> Result<Result<super::ProblemFile, ParseError>, io::Error> {
    let mode = if args.mcs {
        Mode::Mcs
    } else {
        Mode::Circumscription
    };
    if args.input.as_os_str() == "-" {
        Ok(parse(stdin, mode))
    } else {
        let file = File::open(&args.input)?;
        Ok(parse(BufReader::new(file), mode))
    }
}

fn model_line(tag: char, ids: impl Iterator<Item = u64>) -> String {
    let mut line = String::from(tag);
    for id in ids {
        line.push(' ');
        line.push_str(&id.to_string());
    }
    line.push_str(" 0\n");
    line
}

fn print_stats(report: &EnumerationReport, err: &mut dyn Write) -> io::Result<()> {
    let s = &report.stats;
    let rows = [
        ("solve_calls", s.top_solve_calls),
        ("cores", s.cores_analyzed),
        ("shrink_solves", s.shrink_solves),
        ("models", s.models_emitted),
        ("witnesses", s.witnesses),
        ("cones", s.cones),
        ("enum_solves", s.enum_solves),
        ("blocking_clauses", s.blocking_clauses),
        ("core_constraints", s.core_constraints),
        ("input_constraints", s.input_constraints),
        ("theory_constraints", report.theory_constraints),
        ("conflicts", report.solver.conflicts),
        ("decisions", report.solver.decisions),
        ("propagations", report.solver.propagations),
        ("restarts", report.solver.restarts),
        ("learnts_deleted", report.solver.learnts_deleted),
    ];
    for (name, value) in rows {
        writeln!(err, "c stat {name} {value}")?;
    }
    Ok(())
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_COMPLETE
            };
        }
    };
    let pf = match read_input(&args, stdin) {
        Ok(Ok(pf)) => pf,
        Ok(Err(e)) => {
            let _ = writeln!(err, "c error: {e}");
            return EXIT_ERROR;
        }
        Err(e) => {
            let _ = writeln!(err, "c error: {}: {e}", args.input.display());
            return EXIT_ERROR;
        }
    };

    let mut write_error: Option<io::Error> = None;
    let mut emit = |line: String| {
        if write_error.is_none() {
            if let Err(e) = out.write_all(line.as_bytes()).and_then(|_| out.flush()) {
                write_error = Some(e);
            }
        }
    };
    let report = if args.mcs {
        let (instance, map) = mcs_transform(&pf);
        circ_enumerate(instance, args.config(), |m| {
            let ids = map.indices(&m.atoms_true).into_iter().map(|i| i as u64);
            emit(model_line('m', ids))
        })
    } else {
        let instance = match pf.to_instance() {
            Ok(i) => i,
            Err(e) => {
                let _ = writeln!(err, "c error: {e}");
                return EXIT_ERROR;
            }
        };
        circ_enumerate(instance, args.config(), |m| {
            emit(model_line('v', m.atoms_true.iter().map(|a| a.id() as u64)))
        })
    };
    let complete = if report.complete { "yes" } else { "no" };
    emit(format!("c models {} complete {complete}\n", report.models));
    if let Some(e) = write_error {
        let _ = writeln!(err, "c error: write failed: {e}");
        return EXIT_ERROR;
    }
    if args.stats {
        let _ = print_stats(&report, err);
    }
    if report.complete {
        EXIT_COMPLETE
    } else {
        EXIT_LIMIT
    }
}
