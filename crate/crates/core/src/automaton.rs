//! The set augmented automaton record and its structural checks.
//!
//! A [`Safa`] is a finite automaton whose transitions read a `(letter,
//! datum)` pair, test the datum for (non-)membership in one of `set_count`
//! finite sets, and optionally insert the datum into one set. Sets are
//! numbered from 1.
//!
//! States and letters are referred to by name, exactly as in the text
//! format. [`Safa::validate`] reports dangling names and out-of-range set
//! indices instead of refusing to build the value, so that a parsed file can
//! be inspected before it is used.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::word::DataWord;
use crate::Error;

/// Polarity of a membership guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    /// `p(h_i)`: the datum is in set `i`.
    Member,
    /// `!p(h_i)`: the datum is not in set `i`.
    NotMember,
}

impl Polarity {
    pub fn opposite(self) -> Polarity {
        match self {
            Polarity::Member => Polarity::NotMember,
            Polarity::NotMember => Polarity::Member,
        }
    }
}

/// Membership test on one set. `set` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Guard {
    pub polarity: Polarity,
    pub set: usize,
}

impl Guard {
    pub fn member(set: usize) -> Guard {
        Guard { polarity: Polarity::Member, set }
    }

    pub fn not_member(set: usize) -> Guard {
        Guard { polarity: Polarity::NotMember, set }
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Member => write!(f, "p{}", self.set),
            Polarity::NotMember => write!(f, "!p{}", self.set),
        }
    }
}

/// Operation performed after a guard succeeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetOp {
    NoOp,
    /// Insert the datum into the given (1-based) set.
    Insert(usize),
}

impl fmt::Display for SetOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetOp::NoOp => f.write_str("-"),
            SetOp::Insert(i) => write!(f, "ins{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: String,
    pub letter: String,
    pub guard: Guard,
    pub op: SetOp,
    pub target: String,
}

impl Transition {
    pub fn new(
        source: impl Into<String>,
        letter: impl Into<String>,
        guard: Guard,
        op: SetOp,
        target: impl Into<String>,
    ) -> Transition {
        Transition {
            source: source.into(),
            letter: letter.into(),
            guard,
            op,
            target: target.into(),
        }
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {}", self.source, self.letter, self.guard, self.op, self.target)
    }
}

/// Set augmented finite automaton.
///
/// The order of `transitions` is only used as a tie-break: searches explore
/// transitions in list order, which makes runs and witnesses reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Safa {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    pub set_count: usize,
    pub initial: String,
    pub finals: BTreeSet<String>,
    pub transitions: Vec<Transition>,
}

/// One structural problem found by [`Safa::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    DuplicateState(String),
    DuplicateLetter(String),
    UnknownInitial(String),
    UnknownFinal(String),
    UnknownSource { transition: usize, state: String },
    UnknownTarget { transition: usize, state: String },
    UnknownLetter { transition: usize, letter: String },
    GuardOutOfBounds { transition: usize, set: usize, set_count: usize },
    InsertOutOfBounds { transition: usize, set: usize, set_count: usize },
    DuplicateTransition { transition: usize, first: usize },
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ValidationError::*;
        match self {
            DuplicateState(s) => write!(f, "state `{s}` declared twice"),
            DuplicateLetter(l) => write!(f, "letter `{l}` declared twice"),
            UnknownInitial(s) => write!(f, "initial state `{s}` is not a declared state"),
            UnknownFinal(s) => write!(f, "final state `{s}` is not a declared state"),
            UnknownSource { transition, state } => {
                write!(f, "transition {transition}: unknown source state `{state}`")
            }
            UnknownTarget { transition, state } => {
                write!(f, "transition {transition}: unknown target state `{state}`")
            }
            UnknownLetter { transition, letter } => {
                write!(f, "transition {transition}: letter `{letter}` not in alphabet")
            }
            GuardOutOfBounds { transition, set, set_count } => write!(
                f,
                "transition {transition}: guard names set {set} but only sets 1..={set_count} exist"
            ),
            InsertOutOfBounds { transition, set, set_count } => write!(
                f,
                "transition {transition}: insert names set {set} but only sets 1..={set_count} exist"
            ),
            DuplicateTransition { transition, first } => {
                write!(f, "transition {transition} duplicates transition {first}")
            }
        }
    }
}

impl Safa {
    /// All structural problems, in a stable order. Empty iff the automaton is
    /// well formed.
    pub fn validate(&self) -> Vec<ValidationError> {
        let mut errors = Vec::new();
        let mut states = HashSet::new();
        for s in &self.states {
            if !states.insert(s.as_str()) {
                errors.push(ValidationError::DuplicateState(s.clone()));
            }
        }
        let mut letters = HashSet::new();
        for l in &self.alphabet {
            if !letters.insert(l.as_str()) {
                errors.push(ValidationError::DuplicateLetter(l.clone()));
            }
        }
        if !states.contains(self.initial.as_str()) {
            errors.push(ValidationError::UnknownInitial(self.initial.clone()));
        }
        for f in &self.finals {
            if !states.contains(f.as_str()) {
                errors.push(ValidationError::UnknownFinal(f.clone()));
            }
        }
        let in_bounds = |i: usize| (1..=self.set_count).contains(&i);
        let mut seen: HashMap<&Transition, usize> = HashMap::new();
        for (ix, t) in self.transitions.iter().enumerate() {
            if !states.contains(t.source.as_str()) {
                errors.push(ValidationError::UnknownSource { transition: ix, state: t.source.clone() });
            }
            if !states.contains(t.target.as_str()) {
                errors.push(ValidationError::UnknownTarget { transition: ix, state: t.target.clone() });
            }
            if !letters.contains(t.letter.as_str()) {
                errors.push(ValidationError::UnknownLetter { transition: ix, letter: t.letter.clone() });
            }
            if !in_bounds(t.guard.set) {
                errors.push(ValidationError::GuardOutOfBounds {
                    transition: ix,
                    set: t.guard.set,
                    set_count: self.set_count,
                });
            }
            if let SetOp::Insert(j) = t.op {
                if !in_bounds(j) {
                    errors.push(ValidationError::InsertOutOfBounds {
                        transition: ix,
                        set: j,
                        set_count: self.set_count,
                    });
                }
            }
            if let Some(&first) = seen.get(t) {
                errors.push(ValidationError::DuplicateTransition { transition: ix, first });
            } else {
                seen.insert(t, ix);
            }
        }
        errors
    }

    /// `Ok(())` when [`validate`](Self::validate) finds nothing.
    pub fn check(&self) -> Result<(), Error> {
        let errors = self.validate();
        if errors.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(errors))
        }
    }

    /// Deterministic in the DSAFA sense: per `(state, letter)` there are at
    /// most two transitions, and if two, they guard the same set with
    /// opposite polarities. Transitions sharing `(state, letter, guard)` make
    /// the automaton nondeterministic whatever their targets.
    pub fn is_deterministic(&self) -> bool {
        let mut groups: HashMap<(&str, &str), Vec<Guard>> = HashMap::new();
        for t in &self.transitions {
            groups.entry((&t.source, &t.letter)).or_default().push(t.guard);
        }
        groups.values().all(|guards| match guards.as_slice() {
            [] | [_] => true,
            [g, h] => g.set == h.set && g.polarity != h.polarity,
            _ => false,
        })
    }

    pub fn is_final(&self, state: &str) -> bool {
        self.finals.contains(state)
    }

    /// Fails with [`Error::UnknownLetter`] on the first letter of `w` outside
    /// the alphabet.
    pub fn check_word(&self, w: &DataWord) -> Result<(), Error> {
        for (position, letter) in w.letters().enumerate() {
            if !self.alphabet.iter().any(|l| l == letter) {
                return Err(Error::UnknownLetter { position, letter: letter.to_string() });
            }
        }
        Ok(())
    }

    /// The same automaton with every set index shifted up by `offset`.
    pub(crate) fn shift_sets(&self, offset: usize) -> Vec<Transition> {
        self.transitions
            .iter()
            .map(|t| Transition {
                guard: Guard { set: t.guard.set + offset, ..t.guard },
                op: match t.op {
                    SetOp::NoOp => SetOp::NoOp,
                    SetOp::Insert(j) => SetOp::Insert(j + offset),
                },
                ..t.clone()
            })
            .collect()
    }
}

/// Index-based view of a validated automaton, used by the search routines.
#[derive(Debug)]
pub(crate) struct Indexed {
    pub initial: usize,
    pub finals: Vec<bool>,
    pub set_count: usize,
    pub letters: HashMap<String, usize>,
    pub trans: Vec<IxTransition>,
    /// Transition indices (in file order) leaving each `(state, letter)`;
    /// slot `state * letter_count + letter`.
    pub out: Vec<Vec<usize>>,
    /// Transition indices leaving each state, any letter.
    pub out_any: Vec<Vec<usize>>,
    letter_count: usize,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct IxTransition {
    pub source: usize,
    pub letter: usize,
    pub guard: Guard,
    pub op: SetOp,
    pub target: usize,
}

impl Indexed {
    pub fn new(a: &Safa) -> Result<Indexed, Error> {
        a.check()?;
        let states: HashMap<&str, usize> =
            a.states.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let letters: HashMap<String, usize> =
            a.alphabet.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let letter_count = a.alphabet.len();
        let mut out = vec![Vec::new(); a.states.len() * letter_count];
        let mut out_any = vec![Vec::new(); a.states.len()];
        let trans: Vec<IxTransition> = a
            .transitions
            .iter()
            .map(|t| IxTransition {
                source: states[t.source.as_str()],
                letter: letters[&t.letter],
                guard: t.guard,
                op: t.op,
                target: states[t.target.as_str()],
            })
            .collect();
        for (ix, t) in trans.iter().enumerate() {
            out[t.source * letter_count + t.letter].push(ix);
            out_any[t.source].push(ix);
        }
        Ok(Indexed {
            initial: states[a.initial.as_str()],
            finals: a.states.iter().map(|s| a.finals.contains(s)).collect(),
            set_count: a.set_count,
            letters,
            trans,
            out,
            out_any,
            letter_count,
        })
    }

    pub fn outgoing(&self, state: usize, letter: usize) -> &[usize] {
        &self.out[state * self.letter_count + letter]
    }

    pub fn letter_index(&self, position: usize, letter: &str) -> Result<usize, Error> {
        self.letters
            .get(letter)
            .copied()
            .ok_or_else(|| Error::UnknownLetter { position, letter: letter.to_string() })
    }
}
