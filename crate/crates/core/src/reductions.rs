//! CNF satisfiability encoded as SAFA emptiness and as SAFA membership.
//!
//! Variable `v` owns sets `2v-1` (chosen true) and `2v` (chosen false). The
//! automaton first walks one step per variable, inserting the current datum
//! into exactly one of its two sets, then one step per clause, where the
//! literal in position `j` may be read as letter `a_j` if its set is
//! nonempty.

use std::fmt;

use crate::automaton::{Guard, Safa, SetOp, Transition};
use crate::format::ParseError;
use crate::word::{DataValue, DataWord};
use crate::Error;

/// Conjunction of clauses; literal `v` is variable `v`, `-v` its negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i64>>) -> Result<CnfFormula, Error> {
        if variable_count == 0 {
            return Err(Error::NoVariables);
        }
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::EmptyClause(i + 1));
            }
            for &literal in clause {
                if literal == 0 || literal.unsigned_abs() as usize > variable_count {
                    return Err(Error::LiteralOutOfRange { clause: i + 1, literal, variables: variable_count });
                }
            }
        }
        Ok(CnfFormula { variable_count, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    /// Widest clause, at least 2 so both variable letters exist.
    pub fn letter_count(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0).max(2)
    }

    /// `assignment[v - 1]` is the value of variable `v`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let value = assignment[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    pub fn to_dimacs(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.variable_count, self.clauses.len())?;
        for c in &self.clauses {
            for l in c {
                write!(f, "{l} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

/// Parses DIMACS CNF. Comment lines start with `c`; clauses end with `0`
/// and may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, Error> {
    let err = |line: usize, message: String| Error::Parse(ParseError { line, column: 1, message });
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| err(line_no, format!("bad variable count `{v}`")))?;
                    let c = c.parse().map_err(|_| err(line_no, format!("bad clause count `{c}`")))?;
                    header = Some((v, c, line_no));
                }
                _ => return Err(err(line_no, "expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        if header.is_none() {
            return Err(err(line_no, "clause before the `p cnf` header".into()));
        }
        for token in line.split_whitespace() {
            let literal: i64 = token.parse().map_err(|_| err(line_no, format!("bad literal `{token}`")))?;
            if literal == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(literal);
            }
        }
    }
    let Some((vars, count, line)) = header else {
        return Err(err(1, "missing `p cnf` header".into()));
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(err(line, format!("header declares {count} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(vars, clauses)
}

fn literal_set(literal: i64) -> usize {
    let v = literal.unsigned_abs() as usize;
    if literal > 0 {
        2 * v - 1
    } else {
        2 * v
    }
}

fn chain_states(f: &CnfFormula) -> Vec<String> {
    std::iter::once("q0".to_string())
        .chain((1..=f.variable_count).map(|v| format!("qv{v}")))
        .chain((1..=f.clauses.len()).map(|c| format!("qc{c}")))
        .collect()
}

fn gadget(f: &CnfFormula, letter: impl Fn(usize) -> String) -> Safa {
    let states = chain_states(f);
    let mut transitions = Vec::new();
    for v in 1..=f.variable_count {
        let (src, dst) = (&states[v - 1], &states[v]);
        for (j, lit) in [(1, v as i64), (2, -(v as i64))] {
            let h = literal_set(lit);
            transitions.push(Transition::new(src.clone(), letter(j), Guard::not_member(h), SetOp::Insert(h), dst.clone()));
        }
    }
    for (c, clause) in f.clauses.iter().enumerate() {
        let (src, dst) = (&states[f.variable_count + c], &states[f.variable_count + c + 1]);
        for (j, &lit) in clause.iter().enumerate() {
            let t = Transition::new(src.clone(), letter(j + 1), Guard::member(literal_set(lit)), SetOp::NoOp, dst.clone());
            // repeated literals collapse when all letters coincide
            if !transitions.contains(&t) {
                transitions.push(t);
            }
        }
    }
    Safa {
        alphabet: Vec::new(),
        set_count: 2 * f.variable_count,
        initial: states[0].clone(),
        finals: [states.last().unwrap().clone()].into(),
        states,
        transitions,
    }
}

/// Deterministic acyclic SAFA over `a1 .. a_w` (`w` the widest clause, at
/// least 2); nonempty iff `f` is satisfiable.
pub fn cnf_to_safa(f: &CnfFormula) -> Safa {
    let mut a = gadget(f, |j| format!("a{j}"));
    a.alphabet = (1..=f.letter_count()).map(|j| format!("a{j}")).collect();
    a
}

/// The same graph with every letter `a`, and the word `(a,1)` repeated once
/// per variable and clause; accepted iff `f` is satisfiable.
pub fn cnf_to_membership_instance(f: &CnfFormula) -> (Safa, DataWord) {
    let mut a = gadget(f, |_| "a".to_string());
    a.alphabet = vec!["a".to_string()];
    let n = f.variable_count + f.clauses.len();
    let word = DataWord::from_items((0..n).map(|_| ("a", 1u64)));
    (a, word)
}

/// Reads the truth assignment off an accepted word of [`cnf_to_safa`]:
/// step `v` reads `a1` when variable `v` is true and `a2` when false.
pub fn decode_assignment(f: &CnfFormula, w: &DataWord) -> Option<Vec<bool>> {
    if w.len() != f.variable_count + f.clauses.len() {
        return None;
    }
    w.letters()
        .take(f.variable_count)
        .map(|l| match l {
            "a1" => Some(true),
            "a2" => Some(false),
            _ => None,
        })
        .collect()
}

/// `(x ∨ ¬y ∨ z) ∧ (x ∨ y ∨ z)`.
pub fn sample_formula() -> CnfFormula {
    CnfFormula::new(3, vec![vec![1, -2, 3], vec![1, 2, 3]]).unwrap()
}

/// Datum used by the membership word.
pub const MEMBERSHIP_DATUM: DataValue = DataValue(1);
