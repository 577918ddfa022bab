//! Command-line driver.
//!
//! Exit codes: 0 for an affirmative verdict or success, 1 for a negative
//! verdict, 2 for usage, parse and precondition errors. [`run`] returns the
//! output instead of printing it so the whole driver can be tested in
//! process.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::automaton::Safa;
use crate::closure::{complement, concat, lift_regular, union};
use crate::emptiness::witness;
use crate::fixtures::Language;
use crate::format::{parse_automaton, parse_nfa, parse_safa, Automaton};
use crate::models::cca::{cca_accepts, safa_to_cca};
use crate::models::register::register_accepts;
use crate::reductions::{cnf_to_membership_instance, cnf_to_safa, parse_dimacs};
use crate::semantics::{accepts, pump, run_deterministic};
use crate::word::{parse_word, DataWord};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "safa", about = "Set augmented finite automata over data words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
#[group(required = true, multiple = false)]
pub struct Words {
    /// Word as `letter:datum` tokens; "" is the empty word.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    /// File with one word per line.
    #[arg(long)]
    words: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership of words in a SAFA, register automaton or CCA.
    Check {
        file: PathBuf,
        #[command(flatten)]
        words: Words,
    },
    /// Simulates a deterministic SAFA.
    Run {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Print every configuration.
        #[arg(long)]
        trace: bool,
    },
    /// Emptiness, with a witness when nonempty.
    Empty { file: PathBuf },
    /// Whether the SAFA is deterministic.
    Deterministic { file: PathBuf },
    Union {
        a: PathBuf,
        b: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    Concat {
        a: PathBuf,
        b: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Complement of a deterministic SAFA.
    Complement {
        a: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// SAFA gadget for a DIMACS formula.
    FromCnf {
        dimacs: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
        /// Single-letter variant plus the word to test.
        #[arg(long)]
        membership: bool,
    },
    /// Pumped versions of an accepted word.
    Pump {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 1)]
        ell: usize,
    },
    /// Translation to a class counting automaton.
    ToCca {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Lifts an `nfa` file to a SAFA.
    Lift {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Membership in a named reference language.
    Oracle {
        language: String,
        #[command(flatten)]
        words: Words,
    },
}

/// What a command printed and how it exits.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: Error },
    #[error("{0}")]
    Lib(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load(path: &Path) -> Result<Automaton, CliError> {
    parse_automaton(&read(path)?).map_err(|e| CliError::File { path: path.to_path_buf(), source: e.into() })
}

fn load_safa(path: &Path) -> Result<Safa, CliError> {
    let a = parse_safa(&read(path)?).map_err(|e| CliError::File { path: path.to_path_buf(), source: e.into() })?;
    a.check().map_err(|e| CliError::File { path: path.to_path_buf(), source: e })?;
    Ok(a)
}

fn load_words(words: &Words) -> Result<Vec<DataWord>, CliError> {
    match (&words.word, &words.words) {
        (Some(w), _) => Ok(vec![parse_word(w).map_err(Error::from)?]),
        (None, Some(path)) => read(path)?
            .lines()
            .map(|l| parse_word(l).map_err(|e| CliError::File { path: path.clone(), source: e.into() }))
            .collect(),
        (None, None) => Err(CliError::Usage("give --word or --words".into())),
    }
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<String, CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn verdicts(results: &[bool], yes: &str, no: &str) -> (String, i32) {
    let text: String = results.iter().map(|&r| format!("{}\n", if r { yes } else { no })).collect();
    (text, if results.iter().all(|&r| r) { 0 } else { 1 })
}

/// Trace lines for `run --trace`.
fn trace(a: &Safa, w: &DataWord) -> Result<(String, bool), Error> {
    let r = run_deterministic(a, w)?;
    let mut out = format!("init: {}\n", r.run.configs[0]);
    for (i, &(t, d)) in r.run.steps.iter().enumerate() {
        let tr = &a.transitions[t];
        out += &format!("{}: {}:{} via {} -> {}\n", i + 1, tr.letter, d, tr, r.run.configs[i + 1]);
    }
    if let Some(pos) = r.stuck_at {
        let (letter, d) = &w.items()[pos];
        out += &format!("stuck: {}:{} has no transition from {}\n", letter, d, r.run.last().state);
    }
    out += if r.accepted { "ACCEPT\n" } else { "REJECT\n" };
    Ok((out, r.accepted))
}

fn execute(cli: Cli) -> Result<(String, i32), CliError> {
    Ok(match cli.command {
        Command::Check { file, words } => {
            let a = load(&file)?;
            let words = load_words(&words)?;
            let results = match &a {
                Automaton::Safa(s) => {
                    s.check()?;
                    words.iter().map(|w| accepts(s, w)).collect::<Result<Vec<_>, _>>()?
                }
                Automaton::Register(r) => {
                    if let Some(e) = r.validate().first() {
                        return Err(CliError::Usage(format!("{}: {e}", file.display())));
                    }
                    words.iter().map(|w| register_accepts(r, w)).collect()
                }
                Automaton::Cca(c) => {
                    if let Some(e) = c.validate().first() {
                        return Err(CliError::Usage(format!("{}: {e}", file.display())));
                    }
                    words.iter().map(|w| cca_accepts(c, w)).collect()
                }
                Automaton::Nfa(_) => return Err(CliError::Usage("check takes a safa, register or cca file".into())),
            };
            verdicts(&results, "ACCEPT", "REJECT")
        }
        Command::Run { file, word, trace: show } => {
            let a = load_safa(&file)?;
            let w = parse_word(&word).map_err(Error::from)?;
            let (text, accepted) = trace(&a, &w)?;
            let text = if show { text } else { text.lines().last().unwrap().to_string() + "\n" };
            (text, if accepted { 0 } else { 1 })
        }
        Command::Empty { file } => {
            let a = load_safa(&file)?;
            match witness(&a)? {
                None => ("EMPTY\n".into(), 0),
                Some(w) if w.is_empty() => ("NONEMPTY witness:\n".into(), 1),
                Some(w) => (format!("NONEMPTY witness: {w}\n"), 1),
            }
        }
        Command::Deterministic { file } => {
            let a = load_safa(&file)?;
            verdicts(&[a.is_deterministic()], "YES", "NO")
        }
        Command::Union { a, b, o } => (emit(union(&load_safa(&a)?, &load_safa(&b)?)?.to_string(), &o)?, 0),
        Command::Concat { a, b, o } => (emit(concat(&load_safa(&a)?, &load_safa(&b)?)?.to_string(), &o)?, 0),
        Command::Complement { a, o } => (emit(complement(&load_safa(&a)?)?.to_string(), &o)?, 0),
        Command::FromCnf { dimacs, o, membership } => {
            let f = parse_dimacs(&read(&dimacs)?).map_err(|e| CliError::File { path: dimacs.clone(), source: e })?;
            if membership {
                let (a, w) = cnf_to_membership_instance(&f);
                let mut text = emit(a.to_string(), &o)?;
                text += &format!("word: {w}\n");
                (text, 0)
            } else {
                (emit(cnf_to_safa(&f).to_string(), &o)?, 0)
            }
        }
        Command::Pump { file, word, ell } => {
            let a = load_safa(&file)?;
            let w = parse_word(&word).map_err(Error::from)?;
            let text = pump(&a, &w, ell)?.iter().map(|p| format!("{p}\n")).collect();
            (text, 0)
        }
        Command::ToCca { file, o } => (emit(safa_to_cca(&load_safa(&file)?).to_string(), &o)?, 0),
        Command::Lift { file, o } => {
            let n = parse_nfa(&read(&file)?).map_err(|e| CliError::File { path: file.clone(), source: e.into() })?;
            if let Some(e) = n.validate().first() {
                return Err(CliError::Usage(format!("{}: {e}", file.display())));
            }
            (emit(lift_regular(&n).to_string(), &o)?, 0)
        }
        Command::Oracle { language, words } => {
            let lang: Language = language.parse()?;
            let results: Vec<bool> = load_words(&words)?.iter().map(|w| lang.contains(w)).collect();
            verdicts(&results, "IN", "OUT")
        }
    })
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(cli) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}
