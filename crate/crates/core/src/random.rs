//! Seedable generators for automata, formulas and words, used by the
//! differential tests and the acceptance suite.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automaton::{Guard, Polarity, Safa, SetOp, Transition};
use crate::models::cca::{BagOp, Cca, CcaTransition, Comparator, Constraint};
use crate::models::register::RegisterAutomaton;
use crate::nfa::Nfa;
use crate::reductions::CnfFormula;
use crate::word::{DataValue, DataWord};

/// Size envelope for random automata; every bound is inclusive.
#[derive(Clone, Copy, Debug)]
pub struct Envelope {
    pub max_states: usize,
    pub max_sets: usize,
    pub max_letters: usize,
    pub max_transitions: usize,
}

impl Default for Envelope {
    fn default() -> Self {
        Envelope { max_states: 4, max_sets: 2, max_letters: 2, max_transitions: 8 }
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn letters(n: usize) -> Vec<String> {
    ["a", "b", "c", "d", "e", "f"].iter().take(n).map(|s| s.to_string()).chain((6..n).map(|i| format!("l{i}"))).collect()
}

fn random_finals<R: Rng>(rng: &mut R, states: &[String]) -> BTreeSet<String> {
    states.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect()
}

fn random_guard<R: Rng>(rng: &mut R, sets: usize) -> Guard {
    let set = rng.gen_range(1..=sets);
    if rng.gen_bool(0.5) {
        Guard::member(set)
    } else {
        Guard::not_member(set)
    }
}

fn random_op<R: Rng>(rng: &mut R, sets: usize) -> SetOp {
    if rng.gen_bool(0.5) {
        SetOp::Insert(rng.gen_range(1..=sets))
    } else {
        SetOp::NoOp
    }
}

/// A valid SAFA with at least one state and one set.
pub fn random_safa<R: Rng>(rng: &mut R, env: &Envelope) -> Safa {
    let states = names("q", rng.gen_range(1..=env.max_states));
    let alphabet = letters(rng.gen_range(1..=env.max_letters));
    let sets = rng.gen_range(1..=env.max_sets);
    let mut transitions: Vec<Transition> = Vec::new();
    for _ in 0..rng.gen_range(0..=env.max_transitions) {
        let t = Transition::new(
            states.choose(rng).unwrap().clone(),
            alphabet.choose(rng).unwrap().clone(),
            random_guard(rng, sets),
            random_op(rng, sets),
            states.choose(rng).unwrap().clone(),
        );
        if !transitions.contains(&t) {
            transitions.push(t);
        }
    }
    Safa {
        initial: states[0].clone(),
        finals: random_finals(rng, &states),
        states,
        alphabet,
        set_count: sets,
        transitions,
    }
}

/// A valid deterministic SAFA: each `(state, letter)` gets nothing, one
/// guard, or both polarities on one set.
pub fn random_dsafa<R: Rng>(rng: &mut R, env: &Envelope) -> Safa {
    let states = names("q", rng.gen_range(1..=env.max_states));
    let alphabet = letters(rng.gen_range(1..=env.max_letters));
    let sets = rng.gen_range(1..=env.max_sets);
    let mut transitions = Vec::new();
    for q in &states {
        for a in &alphabet {
            let set = rng.gen_range(1..=sets);
            let polarities: &[Polarity] = match rng.gen_range(0..4) {
                0 => &[],
                1 => &[Polarity::Member],
                2 => &[Polarity::NotMember],
                _ => &[Polarity::NotMember, Polarity::Member],
            };
            for &polarity in polarities {
                transitions.push(Transition::new(
                    q.clone(),
                    a.clone(),
                    Guard { polarity, set },
                    random_op(rng, sets),
                    states.choose(rng).unwrap().clone(),
                ));
            }
        }
    }
    transitions.shuffle(rng);
    Safa {
        initial: states[0].clone(),
        finals: random_finals(rng, &states),
        states,
        alphabet,
        set_count: sets,
        transitions,
    }
}

/// A valid register automaton with pairwise distinct preloaded values.
pub fn random_register<R: Rng>(rng: &mut R, env: &Envelope, max_value: u64) -> RegisterAutomaton {
    let states = names("q", rng.gen_range(1..=env.max_states));
    let alphabet = letters(rng.gen_range(1..=env.max_letters));
    let k = rng.gen_range(1..=env.max_sets);
    let mut pool: Vec<u64> = (1..=max_value.max(k as u64)).collect();
    pool.shuffle(rng);
    let initial_registers = (0..k).map(|i| rng.gen_bool(0.5).then(|| DataValue(pool[i]))).collect();
    let mut update = BTreeMap::new();
    for q in &states {
        for a in &alphabet {
            if rng.gen_bool(0.6) {
                update.insert((q.clone(), a.clone()), rng.gen_range(1..=k));
            }
        }
    }
    let mut transitions = Vec::new();
    for _ in 0..rng.gen_range(0..=env.max_transitions) {
        let t = (
            states.choose(rng).unwrap().clone(),
            alphabet.choose(rng).unwrap().clone(),
            rng.gen_range(1..=k),
            states.choose(rng).unwrap().clone(),
        );
        if !transitions.contains(&t) {
            transitions.push(t);
        }
    }
    RegisterAutomaton {
        initial: states[0].clone(),
        finals: random_finals(rng, &states),
        states,
        alphabet,
        initial_registers,
        update,
        transitions,
    }
}

/// A valid CCA with arbitrary comparators and operations.
pub fn random_cca<R: Rng>(rng: &mut R, env: &Envelope) -> Cca {
    let states = names("q", rng.gen_range(1..=env.max_states));
    let alphabet = letters(rng.gen_range(1..=env.max_letters));
    let k = rng.gen_range(0..=env.max_sets);
    let comparators = [Comparator::Lt, Comparator::Gt, Comparator::Eq, Comparator::Le, Comparator::Ge, Comparator::Ne];
    let transitions = (0..rng.gen_range(0..=env.max_transitions))
        .map(|_| CcaTransition {
            source: states.choose(rng).unwrap().clone(),
            letter: alphabet.choose(rng).unwrap().clone(),
            constraints: (0..k)
                .map(|_| Constraint::new(*comparators.choose(rng).unwrap(), rng.gen_range(0..3)))
                .collect(),
            ops: (0..k)
                .map(|_| if rng.gen_bool(0.5) { BagOp::Increment(rng.gen_range(0..3)) } else { BagOp::Reset(rng.gen_range(0..3)) })
                .collect(),
            target: states.choose(rng).unwrap().clone(),
        })
        .collect();
    Cca {
        initial: states[0].clone(),
        finals: random_finals(rng, &states),
        states,
        alphabet,
        bag_count: k,
        transitions,
    }
}

/// A valid NFA over plain letters.
pub fn random_nfa<R: Rng>(rng: &mut R, env: &Envelope) -> Nfa<String> {
    let states = names("n", rng.gen_range(1..=env.max_states));
    let alphabet = letters(rng.gen_range(1..=env.max_letters));
    let mut transitions = Vec::new();
    for _ in 0..rng.gen_range(0..=env.max_transitions) {
        let t = (
            states.choose(rng).unwrap().clone(),
            alphabet.choose(rng).unwrap().clone(),
            states.choose(rng).unwrap().clone(),
        );
        if !transitions.contains(&t) {
            transitions.push(t);
        }
    }
    Nfa {
        initial: states[0].clone(),
        finals: random_finals(rng, &states),
        states,
        alphabet,
        transitions,
    }
}

/// Random CNF with `1..=max_vars` variables, `1..=max_clauses` clauses of
/// width `1..=max_width`.
pub fn random_cnf<R: Rng>(rng: &mut R, max_vars: usize, max_clauses: usize, max_width: usize) -> CnfFormula {
    let vars = rng.gen_range(1..=max_vars);
    let clauses = (0..rng.gen_range(1..=max_clauses))
        .map(|_| {
            (0..rng.gen_range(1..=max_width))
                .map(|_| {
                    let v = rng.gen_range(1..=vars) as i64;
                    if rng.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(vars, clauses).expect("generated formula is well formed")
}

/// Word of length `0..=max_len` with data in `1..=max_value`.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &[String], max_len: usize, max_value: u64) -> DataWord {
    let len = rng.gen_range(0..=max_len);
    DataWord::from_items((0..len).map(|_| (alphabet.choose(rng).unwrap().clone(), rng.gen_range(1..=max_value))))
}

/// Injective renaming of the data in `w` into `1..=range` (`range` must be
/// at least the number of distinct values).
pub fn random_injection<R: Rng>(rng: &mut R, w: &DataWord, range: u64) -> HashMap<DataValue, DataValue> {
    let distinct: Vec<DataValue> = {
        let mut seen = HashSet::new();
        w.data().filter(|d| seen.insert(*d)).collect()
    };
    assert!(distinct.len() as u64 <= range, "range too small for an injection");
    let mut targets: Vec<u64> = (1..=range).collect();
    targets.shuffle(rng);
    distinct.into_iter().zip(targets).map(|(d, t)| (d, DataValue(t))).collect()
}
