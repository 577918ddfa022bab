//! k-register automata.
//!
//! Reading `(a, d)` in state `q`: if `d` sits in register `i`, only
//! transitions `(q, a, i, q')` may fire. Otherwise `d` is written into
//! register `U(q, a)` and a transition on that register fires; with `U(q, a)`
//! undefined the branch halts.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::word::{DataValue, DataWord};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegisterAutomaton {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    /// Initial contents, `None` for an empty register. Indices are 1-based
    /// everywhere else, so register `i` is `initial_registers[i - 1]`.
    pub initial_registers: Vec<Option<DataValue>>,
    pub update: BTreeMap<(String, String), usize>,
    pub initial: String,
    pub finals: BTreeSet<String>,
    pub transitions: Vec<(String, String, usize, String)>,
}

type Registers = Vec<Option<DataValue>>;

impl RegisterAutomaton {
    pub fn register_count(&self) -> usize {
        self.initial_registers.len()
    }

    /// Structural problems, one message per violation.
    pub fn validate(&self) -> Vec<String> {
        let states: HashSet<&str> = self.states.iter().map(String::as_str).collect();
        let letters: HashSet<&str> = self.alphabet.iter().map(String::as_str).collect();
        let k = self.register_count();
        let mut errors = Vec::new();
        if states.len() != self.states.len() {
            errors.push("duplicate state".to_string());
        }
        if letters.len() != self.alphabet.len() {
            errors.push("duplicate letter".to_string());
        }
        if !states.contains(self.initial.as_str()) {
            errors.push(format!("initial state `{}` is not declared", self.initial));
        }
        for f in &self.finals {
            if !states.contains(f.as_str()) {
                errors.push(format!("final state `{f}` is not declared"));
            }
        }
        let mut seen = HashSet::new();
        for d in self.initial_registers.iter().flatten() {
            if !seen.insert(d) {
                errors.push(format!("value {d} is preloaded into two registers"));
            }
        }
        for ((q, a), r) in &self.update {
            if !states.contains(q.as_str()) || !letters.contains(a.as_str()) {
                errors.push(format!("update for ({q}, {a}) names an undeclared state or letter"));
            }
            if *r == 0 || *r > k {
                errors.push(format!("update for ({q}, {a}) names register {r} of {k}"));
            }
        }
        for (i, (s, a, r, t)) in self.transitions.iter().enumerate() {
            if !states.contains(s.as_str()) || !states.contains(t.as_str()) {
                errors.push(format!("transition {i} names an undeclared state"));
            }
            if !letters.contains(a.as_str()) {
                errors.push(format!("transition {i} uses letter `{a}` outside the alphabet"));
            }
            if *r == 0 || *r > k {
                errors.push(format!("transition {i} names register {r} of {k}"));
            }
        }
        errors
    }

    /// Successor (state, registers) pairs after reading `(letter, d)`.
    fn step(&self, state: &str, regs: &Registers, letter: &str, d: DataValue) -> Vec<(String, Registers)> {
        let matching: Vec<usize> = (1..=regs.len()).filter(|&i| regs[i - 1] == Some(d)).collect();
        let fire = |r: usize, regs: &Registers| -> Vec<(String, Registers)> {
            self.transitions
                .iter()
                .filter(|(s, a, i, _)| s == state && a == letter && *i == r)
                .map(|(_, _, _, t)| (t.clone(), regs.clone()))
                .collect()
        };
        if !matching.is_empty() {
            return matching.into_iter().flat_map(|r| fire(r, regs)).collect();
        }
        match self.update.get(&(state.to_string(), letter.to_string())) {
            Some(&r) => {
                let mut next = regs.clone();
                next[r - 1] = Some(d);
                fire(r, &next)
            }
            None => Vec::new(),
        }
    }
}

/// Whether some branch consumes all of `w` and ends in a final state.
pub fn register_accepts(r: &RegisterAutomaton, w: &DataWord) -> bool {
    let mut failed = HashSet::new();
    search(r, w, 0, r.initial.clone(), r.initial_registers.clone(), &mut failed)
}

fn search(
    r: &RegisterAutomaton,
    w: &DataWord,
    pos: usize,
    state: String,
    regs: Registers,
    failed: &mut HashSet<(usize, String, Registers)>,
) -> bool {
    if pos == w.len() {
        return r.finals.contains(&state);
    }
    let key = (pos, state, regs);
    if failed.contains(&key) {
        return false;
    }
    let (letter, d) = &w.items()[pos];
    for (next, regs) in r.step(&key.1, &key.2, letter, *d) {
        if search(r, w, pos + 1, next, regs, failed) {
            return true;
        }
    }
    failed.insert(key);
    false
}
