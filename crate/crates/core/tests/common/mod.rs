//! Reference implementations used as test oracles. None of these call into
//! the library's search code: they enumerate everything directly from the
//! automaton's fields.

#![allow(dead_code)]

use std::collections::BTreeSet;

use safa::{accepts, CnfFormula, DataValue, DataWord, Guard, Polarity, Safa, SetOp};

/// Every word over `letters × values` of length at most `max_len`, shortest
/// first.
pub fn all_words(letters: &[String], values: &[u64], max_len: usize) -> Vec<DataWord> {
    let symbols: Vec<(String, u64)> =
        letters.iter().flat_map(|l| values.iter().map(move |&v| (l.clone(), v))).collect();
    let mut out = vec![DataWord::new()];
    let mut layer = vec![DataWord::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * symbols.len());
        for w in &layer {
            for (l, v) in &symbols {
                let mut w = w.clone();
                w.push(l.clone(), DataValue(*v));
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn holds(guard: Guard, sets: &[BTreeSet<u64>], d: u64) -> bool {
    let present = sets[guard.set - 1].contains(&d);
    match guard.polarity {
        Polarity::Member => present,
        Polarity::NotMember => !present,
    }
}

/// Tries every run, with no memoisation.
pub fn brute_accepts(a: &Safa, w: &DataWord) -> bool {
    fn go(a: &Safa, items: &[(String, DataValue)], state: &str, sets: Vec<BTreeSet<u64>>) -> bool {
        let Some(((letter, d), rest)) = items.split_first() else {
            return a.finals.contains(state);
        };
        a.transitions.iter().any(|t| {
            if t.source != state || &t.letter != letter || !holds(t.guard, &sets, d.0) {
                return false;
            }
            let mut next = sets.clone();
            if let SetOp::Insert(j) = t.op {
                next[j - 1].insert(d.0);
            }
            go(a, rest, &t.target, next)
        })
    }
    go(a, w.items(), &a.initial, vec![BTreeSet::new(); a.set_count])
}

/// Satisfiability by trying all `2^n` assignments.
pub fn truth_table_sat(f: &CnfFormula) -> bool {
    let n = f.variable_count();
    (0u32..1 << n).any(|mask| {
        f.clauses().iter().all(|c| {
            c.iter().any(|&l| {
                let value = mask >> (l.unsigned_abs() - 1) & 1 == 1;
                (l > 0) == value
            })
        })
    })
}

/// Whether `w = uv` for some `u ∈ L(a)`, `v ∈ L(b)`.
pub fn split_accepts(a: &Safa, b: &Safa, w: &DataWord) -> bool {
    (0..=w.len()).any(|i| {
        accepts(a, &w.slice(0..i)).unwrap() && accepts(b, &w.slice(i..w.len())).unwrap()
    })
}

pub fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn word(s: &str) -> DataWord {
    s.parse().unwrap()
}
