//! Line-oriented text format for all automaton kinds.
//!
//! ```text
//! safa
//! states: q0 q1
//! alphabet: a b
//! sets: 1
//! initial: q0
//! final: q0
//! trans: q0 a !p1 ins1 q0
//! ```
//!
//! The header is `safa`, `register`, `cca` or `nfa`. `#` starts a comment.
//! Register files use `registers: <k> init: <v|_> ...`, `update: q a r` and
//! `trans: q a r q'`; CCA files use `bags: <k>` and
//! `trans: q a [<cmp><e>;...] [<+m|=m>;...] q'`; NFA files have no count line
//! and use `trans: q a q'`. Printing emits the keys in that order, so parsing
//! the printed text gives back the same value.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::automaton::{Guard, Safa, SetOp, Transition};
use crate::models::cca::{BagOp, Cca, CcaTransition, Constraint};
use crate::models::register::RegisterAutomaton;
use crate::nfa::Nfa;
use crate::word::DataValue;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Safa(Safa),
    Register(RegisterAutomaton),
    Cca(Cca),
    Nfa(Nfa<String>),
}

impl Automaton {
    pub fn kind(&self) -> &'static str {
        match self {
            Automaton::Safa(_) => "safa",
            Automaton::Register(_) => "register",
            Automaton::Cca(_) => "cca",
            Automaton::Nfa(_) => "nfa",
        }
    }
}

#[derive(Clone, Copy)]
struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

/// One `key: values` line.
struct Entry<'a> {
    line: usize,
    key: &'a str,
    /// Column just past the colon, for errors about missing values.
    end: usize,
    values: Vec<Token<'a>>,
}

impl Entry<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.end, message: message.into() }
    }

    fn single(&self) -> Result<Token<'_>, ParseError> {
        match self.values.as_slice() {
            [t] => Ok(*t),
            [] => Err(self.error(format!("`{}:` needs a value", self.key))),
            [_, extra, ..] => Err(extra.error(format!("`{}:` takes one value", self.key))),
        }
    }

    fn exactly(&self, n: usize, shape: &str) -> Result<&[Token<'_>], ParseError> {
        if self.values.len() == n {
            Ok(&self.values)
        } else {
            Err(self.error(format!("expected `{}: {shape}`", self.key)))
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

fn tokens(line_no: usize, line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { line: line_no, column: offset + s + 1, text: &line[s..i] });
                start = None;
            }
            _ => {}
        }
    }
    out
}

struct Document<'a> {
    header: Token<'a>,
    entries: Vec<Entry<'a>>,
    last_line: usize,
}

fn split(text: &str) -> Result<Document<'_>, ParseError> {
    let mut header = None;
    let mut entries = Vec::new();
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if header.is_none() {
            let toks = tokens(line_no, line, 0);
            if toks.len() > 1 {
                return Err(toks[1].error("unexpected text after the header"));
            }
            header = Some(toks[0]);
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            let t = tokens(line_no, line, 0)[0];
            return Err(t.error("expected `key: values`"));
        };
        let indent = key.len() - key.trim_start().len();
        let key = key.trim();
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(ParseError { line: line_no, column: indent + 1, message: format!("bad key `{key}`") });
        }
        let end = line.len() - rest.len() + 1;
        entries.push(Entry { line: line_no, key, end, values: tokens(line_no, rest, end - 1) });
    }
    let header = header.ok_or(ParseError { line: 1, column: 1, message: "empty input".into() })?;
    Ok(Document { header, entries, last_line })
}

/// Collects the single-occurrence keys and the repeated ones, rejecting
/// unknown or duplicated keys.
struct Keys<'d, 'a> {
    singles: BTreeMap<&'a str, &'d Entry<'a>>,
    repeated: Vec<&'d Entry<'a>>,
    last_line: usize,
}

impl<'d, 'a> Keys<'d, 'a> {
    fn new(doc: &'d Document<'a>, singles: &[&str], repeated: &[&str]) -> Result<Self, ParseError> {
        let mut out = Keys { singles: BTreeMap::new(), repeated: Vec::new(), last_line: doc.last_line };
        for e in &doc.entries {
            if singles.contains(&e.key) {
                if let Some(first) = out.singles.insert(e.key, e) {
                    return Err(ParseError {
                        line: e.line,
                        column: 1,
                        message: format!("`{}:` already given on line {}", e.key, first.line),
                    });
                }
            } else if repeated.contains(&e.key) {
                out.repeated.push(e);
            } else {
                return Err(ParseError { line: e.line, column: 1, message: format!("unknown key `{}`", e.key) });
            }
        }
        Ok(out)
    }

    fn get(&self, key: &str) -> Result<&'d Entry<'a>, ParseError> {
        self.singles.get(key).copied().ok_or_else(|| ParseError {
            line: self.last_line,
            column: 1,
            message: format!("missing `{key}:` line"),
        })
    }

    fn names(&self, key: &str) -> Result<Vec<String>, ParseError> {
        Ok(self.get(key)?.values.iter().map(|t| t.text.to_string()).collect())
    }

    fn name(&self, key: &str) -> Result<String, ParseError> {
        Ok(self.get(key)?.single()?.text.to_string())
    }

    fn count(&self, key: &str) -> Result<usize, ParseError> {
        number(self.get(key)?.single()?)
    }

    fn finals(&self) -> Result<BTreeSet<String>, ParseError> {
        let mut out = BTreeSet::new();
        for t in &self.get("final")?.values {
            if !out.insert(t.text.to_string()) {
                return Err(t.error(format!("final state `{}` listed twice", t.text)));
            }
        }
        Ok(out)
    }
}

fn number<T: std::str::FromStr>(t: Token<'_>) -> Result<T, ParseError> {
    t.text.parse().map_err(|_| t.error(format!("expected a number, found `{}`", t.text)))
}

fn parse_guard(t: Token<'_>) -> Result<Guard, ParseError> {
    let bad = || t.error(format!("expected `p<i>` or `!p<i>`, found `{}`", t.text));
    let (member, rest) = match t.text.strip_prefix('!') {
        Some(r) => (false, r),
        None => (true, t.text),
    };
    let set = rest.strip_prefix('p').and_then(|n| n.parse().ok()).ok_or_else(bad)?;
    Ok(if member { Guard::member(set) } else { Guard::not_member(set) })
}

fn parse_op(t: Token<'_>) -> Result<SetOp, ParseError> {
    if t.text == "-" {
        return Ok(SetOp::NoOp);
    }
    t.text
        .strip_prefix("ins")
        .and_then(|n| n.parse().ok())
        .map(SetOp::Insert)
        .ok_or_else(|| t.error(format!("expected `-` or `ins<j>`, found `{}`", t.text)))
}

fn parse_vector<T: std::str::FromStr<Err = String>>(t: Token<'_>, k: usize) -> Result<Vec<T>, ParseError> {
    let inner = t
        .text
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| t.error(format!("expected `[...]`, found `{}`", t.text)))?;
    let items: Vec<T> = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(';').map(str::parse).collect::<Result<_, _>>().map_err(|e| t.error(e))?
    };
    if items.len() != k {
        return Err(t.error(format!("expected {k} entries, found {}", items.len())));
    }
    Ok(items)
}

fn parse_safa_doc(doc: &Document<'_>) -> Result<Safa, ParseError> {
    let keys = Keys::new(doc, &["states", "alphabet", "sets", "initial", "final"], &["trans"])?;
    let mut transitions = Vec::new();
    for e in &keys.repeated {
        let v = e.exactly(5, "<src> <letter> <p|!p><i> <-|ins><j> <dst>")?;
        transitions.push(Transition::new(v[0].text, v[1].text, parse_guard(v[2])?, parse_op(v[3])?, v[4].text));
    }
    Ok(Safa {
        states: keys.names("states")?,
        alphabet: keys.names("alphabet")?,
        set_count: keys.count("sets")?,
        initial: keys.name("initial")?,
        finals: keys.finals()?,
        transitions,
    })
}

fn parse_register_doc(doc: &Document<'_>) -> Result<RegisterAutomaton, ParseError> {
    let keys = Keys::new(doc, &["states", "alphabet", "registers", "initial", "final"], &["update", "trans"])?;
    let regs = keys.get("registers")?;
    let (k, init) = match regs.values.as_slice() {
        [k, init, rest @ ..] if init.text == "init:" => (number::<usize>(*k)?, rest),
        [k] => (number::<usize>(*k)?, &[][..]),
        _ => return Err(regs.error("expected `registers: <k> init: <v|_> ...`")),
    };
    if init.len() != k {
        return Err(regs.error(format!("expected {k} initial register values, found {}", init.len())));
    }
    let initial_registers = init
        .iter()
        .map(|t| if t.text == "_" { Ok(None) } else { number(*t).map(|v| Some(DataValue(v))) })
        .collect::<Result<Vec<_>, _>>()?;
    let mut update = BTreeMap::new();
    let mut transitions = Vec::new();
    for e in &keys.repeated {
        if e.key == "update" {
            let v = e.exactly(3, "<state> <letter> <reg>")?;
            let key = (v[0].text.to_string(), v[1].text.to_string());
            if update.insert(key, number(v[2])?).is_some() {
                return Err(v[0].error(format!("update for ({}, {}) given twice", v[0].text, v[1].text)));
            }
        } else {
            let v = e.exactly(4, "<src> <letter> <reg> <dst>")?;
            transitions.push((v[0].text.to_string(), v[1].text.to_string(), number(v[2])?, v[3].text.to_string()));
        }
    }
    Ok(RegisterAutomaton {
        states: keys.names("states")?,
        alphabet: keys.names("alphabet")?,
        initial_registers,
        update,
        initial: keys.name("initial")?,
        finals: keys.finals()?,
        transitions,
    })
}

fn parse_cca_doc(doc: &Document<'_>) -> Result<Cca, ParseError> {
    let keys = Keys::new(doc, &["states", "alphabet", "bags", "initial", "final"], &["trans"])?;
    let k = keys.count("bags")?;
    let mut transitions = Vec::new();
    for e in &keys.repeated {
        let v = e.exactly(5, "<src> <letter> [<cmp><e>;...] [<+m|=m>;...] <dst>")?;
        transitions.push(CcaTransition {
            source: v[0].text.to_string(),
            letter: v[1].text.to_string(),
            constraints: parse_vector::<Constraint>(v[2], k)?,
            ops: parse_vector::<BagOp>(v[3], k)?,
            target: v[4].text.to_string(),
        });
    }
    Ok(Cca {
        states: keys.names("states")?,
        alphabet: keys.names("alphabet")?,
        bag_count: k,
        initial: keys.name("initial")?,
        finals: keys.finals()?,
        transitions,
    })
}

fn parse_nfa_doc(doc: &Document<'_>) -> Result<Nfa<String>, ParseError> {
    let keys = Keys::new(doc, &["states", "alphabet", "initial", "final"], &["trans"])?;
    let mut transitions = Vec::new();
    for e in &keys.repeated {
        let v = e.exactly(3, "<src> <letter> <dst>")?;
        transitions.push((v[0].text.to_string(), v[1].text.to_string(), v[2].text.to_string()));
    }
    Ok(Nfa {
        states: keys.names("states")?,
        alphabet: keys.names("alphabet")?,
        initial: keys.name("initial")?,
        finals: keys.finals()?,
        transitions,
    })
}

/// Parses any automaton kind, dispatching on the header line.
pub fn parse_automaton(text: &str) -> Result<Automaton, ParseError> {
    let doc = split(text)?;
    match doc.header.text {
        "safa" => parse_safa_doc(&doc).map(Automaton::Safa),
        "register" => parse_register_doc(&doc).map(Automaton::Register),
        "cca" => parse_cca_doc(&doc).map(Automaton::Cca),
        "nfa" => parse_nfa_doc(&doc).map(Automaton::Nfa),
        other => Err(doc.header.error(format!("unknown automaton kind `{other}`"))),
    }
}

fn expect_kind<T>(text: &str, kind: &str, pick: impl FnOnce(Automaton) -> Option<T>) -> Result<T, ParseError> {
    let a = parse_automaton(text)?;
    let found = a.kind();
    pick(a).ok_or_else(|| ParseError { line: 1, column: 1, message: format!("expected a {kind} file, found {found}") })
}

pub fn parse_safa(text: &str) -> Result<Safa, ParseError> {
    expect_kind(text, "safa", |a| if let Automaton::Safa(s) = a { Some(s) } else { None })
}

pub fn parse_register(text: &str) -> Result<RegisterAutomaton, ParseError> {
    expect_kind(text, "register", |a| if let Automaton::Register(r) = a { Some(r) } else { None })
}

pub fn parse_cca(text: &str) -> Result<Cca, ParseError> {
    expect_kind(text, "cca", |a| if let Automaton::Cca(c) = a { Some(c) } else { None })
}

pub fn parse_nfa(text: &str) -> Result<Nfa<String>, ParseError> {
    expect_kind(text, "nfa", |a| if let Automaton::Nfa(n) = a { Some(n) } else { None })
}

fn line<I: IntoIterator<Item = S>, S: fmt::Display>(f: &mut fmt::Formatter<'_>, key: &str, items: I) -> fmt::Result {
    f.write_str(key)?;
    f.write_str(":")?;
    for item in items {
        write!(f, " {item}")?;
    }
    writeln!(f)
}

fn bracketed<T: fmt::Display>(items: &[T]) -> String {
    let inner: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", inner.join(";"))
}

impl fmt::Display for Safa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "safa")?;
        line(f, "states", &self.states)?;
        line(f, "alphabet", &self.alphabet)?;
        writeln!(f, "sets: {}", self.set_count)?;
        writeln!(f, "initial: {}", self.initial)?;
        line(f, "final", &self.finals)?;
        for t in &self.transitions {
            writeln!(f, "trans: {t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for RegisterAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "register")?;
        line(f, "states", &self.states)?;
        line(f, "alphabet", &self.alphabet)?;
        write!(f, "registers: {} init:", self.register_count())?;
        for r in &self.initial_registers {
            match r {
                Some(d) => write!(f, " {d}")?,
                None => f.write_str(" _")?,
            }
        }
        writeln!(f)?;
        writeln!(f, "initial: {}", self.initial)?;
        line(f, "final", &self.finals)?;
        for ((q, a), r) in &self.update {
            writeln!(f, "update: {q} {a} {r}")?;
        }
        for (s, a, r, t) in &self.transitions {
            writeln!(f, "trans: {s} {a} {r} {t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Cca {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cca")?;
        line(f, "states", &self.states)?;
        line(f, "alphabet", &self.alphabet)?;
        writeln!(f, "bags: {}", self.bag_count)?;
        writeln!(f, "initial: {}", self.initial)?;
        line(f, "final", &self.finals)?;
        for t in &self.transitions {
            writeln!(
                f,
                "trans: {} {} {} {} {}",
                t.source,
                t.letter,
                bracketed(&t.constraints),
                bracketed(&t.ops),
                t.target
            )?;
        }
        Ok(())
    }
}

impl fmt::Display for Nfa<String> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nfa")?;
        line(f, "states", &self.states)?;
        line(f, "alphabet", &self.alphabet)?;
        writeln!(f, "initial: {}", self.initial)?;
        line(f, "final", &self.finals)?;
        for (s, a, t) in &self.transitions {
            writeln!(f, "trans: {s} {a} {t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Automaton::Safa(a) => a.fmt(f),
            Automaton::Register(r) => r.fmt(f),
            Automaton::Cca(c) => c.fmt(f),
            Automaton::Nfa(n) => n.fmt(f),
        }
    }
}
