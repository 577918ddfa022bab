//! Reference languages and example automata.
//!
//! [`Language`] evaluates the canonical data languages directly with
//! counting maps and loops; these predicates are the ground truth the
//! automata are tested against. The `fig*` and `ex*` functions transcribe
//! the worked example automata, transitions in the order they are drawn.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::automaton::{Guard, Safa, SetOp, Transition};
use crate::models::register::RegisterAutomaton;
use crate::word::{DataValue, DataWord};
use crate::Error;

/// A named data language with a direct membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Language {
    /// Data values carried by the given letter are pairwise distinct.
    FdA(String),
    /// Every data value occurs exactly twice.
    AllCnt2,
    /// Some data value occurs a number of times other than two.
    ExistsCntNe2,
    /// Every `a`-datum has already appeared with `b`.
    AExistsB,
    /// The given datum occurs somewhere.
    ContainsD(DataValue),
    /// Concatenation of `(a,d)(a,d)` blocks, `d` chosen per block.
    Pairs,
    /// Exactly one `(a,d)(a,d)` block.
    Pair,
    /// Letters in `a1* a2* ... ak*` order, each letter's data distinct.
    Hierarchy(usize),
}

impl Language {
    pub fn contains(&self, w: &DataWord) -> bool {
        match self {
            Language::FdA(letter) => {
                let mut seen = HashSet::new();
                w.iter().filter(|(l, _)| l == letter).all(|(_, d)| seen.insert(d))
            }
            Language::AllCnt2 => counts(w).values().all(|&c| c == 2),
            Language::ExistsCntNe2 => counts(w).values().any(|&c| c != 2),
            Language::AExistsB => {
                let mut with_b = HashSet::new();
                for (l, d) in w.iter() {
                    match l {
                        "b" => {
                            with_b.insert(d);
                        }
                        "a" if !with_b.contains(&d) => return false,
                        _ => {}
                    }
                }
                true
            }
            Language::ContainsD(d) => w.data().any(|x| x == *d),
            Language::Pairs => w.len().is_multiple_of(2) && is_pair_blocks(w),
            Language::Pair => w.len() == 2 && is_pair_blocks(w),
            Language::Hierarchy(k) => {
                let mut last = 0;
                let mut seen: HashMap<usize, HashSet<DataValue>> = HashMap::new();
                for (l, d) in w.iter() {
                    let Some(i) = l.strip_prefix('a').and_then(|n| n.parse::<usize>().ok()) else {
                        return false;
                    };
                    if i == 0 || i > *k || i < last {
                        return false;
                    }
                    last = i;
                    if !seen.entry(i).or_default().insert(d) {
                        return false;
                    }
                }
                true
            }
        }
    }
}

fn counts(w: &DataWord) -> HashMap<DataValue, usize> {
    let mut m = HashMap::new();
    for d in w.data() {
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

fn is_pair_blocks(w: &DataWord) -> bool {
    w.items()
        .chunks(2)
        .all(|c| c.len() == 2 && c[0].0 == "a" && c[1].0 == "a" && c[0].1 == c[1].1)
}

/// Membership of `w` in `lang`.
pub fn oracle(lang: &Language, w: &DataWord) -> bool {
    lang.contains(w)
}

impl FromStr for Language {
    type Err = Error;

    /// Ids: `fd(<letter>)`, `all_cnt_2`, `exists_cnt_ne_2`, `a_exists_b`,
    /// `contains_d(<n>)`, `pairs`, `pair`, `hierarchy(<k>)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || Error::UnknownLanguage(s.to_string());
        let arg = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        Ok(match s {
            "all_cnt_2" => Language::AllCnt2,
            "exists_cnt_ne_2" => Language::ExistsCntNe2,
            "a_exists_b" => Language::AExistsB,
            "pairs" => Language::Pairs,
            "pair" => Language::Pair,
            _ => {
                if let Some(l) = arg("fd(").filter(|l| !l.is_empty()) {
                    Language::FdA(l.to_string())
                } else if let Some(d) = arg("contains_d(") {
                    Language::ContainsD(DataValue(d.parse().map_err(|_| unknown())?))
                } else if let Some(k) = arg("hierarchy(") {
                    match k.parse() {
                        Ok(k) if k >= 1 => Language::Hierarchy(k),
                        _ => return Err(unknown()),
                    }
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Language::FdA(l) => write!(f, "fd({l})"),
            Language::AllCnt2 => f.write_str("all_cnt_2"),
            Language::ExistsCntNe2 => f.write_str("exists_cnt_ne_2"),
            Language::AExistsB => f.write_str("a_exists_b"),
            Language::ContainsD(d) => write!(f, "contains_d({d})"),
            Language::Pairs => f.write_str("pairs"),
            Language::Pair => f.write_str("pair"),
            Language::Hierarchy(k) => write!(f, "hierarchy({k})"),
        }
    }
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn finals(v: &[&str]) -> BTreeSet<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn tr(src: &str, letter: &str, guard: Guard, op: SetOp, dst: &str) -> Transition {
    Transition::new(src, letter, guard, op, dst)
}

/// Distinct `a`-values over `{a, b}`; deterministic.
pub fn fig1() -> Safa {
    Safa {
        states: strings(&["q0", "q1"]),
        alphabet: strings(&["a", "b"]),
        set_count: 1,
        initial: "q0".into(),
        finals: finals(&["q0"]),
        transitions: vec![
            tr("q0", "a", Guard::not_member(1), SetOp::Insert(1), "q0"),
            tr("q0", "b", Guard::member(1), SetOp::NoOp, "q0"),
            tr("q0", "b", Guard::not_member(1), SetOp::NoOp, "q0"),
            tr("q0", "a", Guard::member(1), SetOp::NoOp, "q1"),
        ],
    }
}

/// Some value does not occur exactly twice, over `{a}`. Guesses the value
/// on the move to `q1`; `q2` is the wrong-guess state.
pub fn fig2() -> Safa {
    Safa {
        states: strings(&["q0", "q1", "q2", "q3"]),
        alphabet: strings(&["a"]),
        set_count: 2,
        initial: "q0".into(),
        finals: finals(&["q1", "q3"]),
        transitions: vec![
            tr("q3", "a", Guard::not_member(1), SetOp::NoOp, "q3"),
            tr("q3", "a", Guard::member(1), SetOp::NoOp, "q3"),
            tr("q0", "a", Guard::member(1), SetOp::Insert(1), "q0"),
            tr("q0", "a", Guard::not_member(1), SetOp::Insert(1), "q0"),
            tr("q0", "a", Guard::not_member(1), SetOp::Insert(2), "q1"),
            tr("q1", "a", Guard::not_member(2), SetOp::NoOp, "q1"),
            tr("q1", "a", Guard::member(2), SetOp::NoOp, "q2"),
            tr("q2", "a", Guard::not_member(2), SetOp::NoOp, "q2"),
            tr("q2", "a", Guard::member(2), SetOp::NoOp, "q3"),
        ],
    }
}

/// Two states: the only simple path to the final state needs a membership
/// guard that only the insert loop can enable.
pub fn fig3_simple() -> Safa {
    Safa {
        states: strings(&["q0", "qf"]),
        alphabet: strings(&["a"]),
        set_count: 1,
        initial: "q0".into(),
        finals: finals(&["qf"]),
        transitions: vec![
            tr("q0", "a", Guard::member(1), SetOp::NoOp, "qf"),
            tr("q0", "a", Guard::not_member(1), SetOp::Insert(1), "q0"),
        ],
    }
}

/// Exactly the words `(a,d)(a,d)`.
pub fn fig5_pair() -> Safa {
    Safa {
        states: strings(&["q0", "q1", "q2"]),
        alphabet: strings(&["a"]),
        set_count: 1,
        initial: "q0".into(),
        finals: finals(&["q2"]),
        transitions: vec![
            tr("q0", "a", Guard::not_member(1), SetOp::Insert(1), "q1"),
            tr("q1", "a", Guard::member(1), SetOp::NoOp, "q2"),
        ],
    }
}

/// Every `a`-value already seen with `b`; deterministic, `q1` is dead.
pub fn fig6() -> Safa {
    Safa {
        states: strings(&["q0", "q1"]),
        alphabet: strings(&["a", "b"]),
        set_count: 1,
        initial: "q0".into(),
        finals: finals(&["q0"]),
        transitions: vec![
            tr("q0", "a", Guard::member(1), SetOp::NoOp, "q0"),
            tr("q0", "b", Guard::member(1), SetOp::NoOp, "q0"),
            tr("q0", "b", Guard::not_member(1), SetOp::Insert(1), "q0"),
            tr("q0", "a", Guard::not_member(1), SetOp::NoOp, "q1"),
        ],
    }
}

/// Letters `a1 .. ak` in non-decreasing order with distinct data per letter.
///
/// States `s1 .. sk`, all final. Reading `a_j` from `s_i` (`j >= i`) tests
/// and inserts into set `j` and moves to `s_j`; the self-loops and chain
/// edges are the `j = i` and `j = i + 1` cases, and the longer forward edges
/// admit words that skip letters.
pub fn hierarchy_safa(k: usize) -> Safa {
    assert!(k >= 1, "hierarchy needs at least one letter");
    let state = |i: usize| format!("s{i}");
    let letter = |i: usize| format!("a{i}");
    let mut transitions = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            transitions.push(tr(&state(i), &letter(j), Guard::not_member(j), SetOp::Insert(j), &state(j)));
        }
    }
    Safa {
        states: (1..=k).map(state).collect(),
        alphabet: (1..=k).map(letter).collect(),
        set_count: k,
        initial: state(1),
        finals: (1..=k).map(state).collect(),
        transitions,
    }
}

/// Single final state, no transitions, no sets: accepts only the empty word.
pub fn epsilon_only(alphabet: &[String]) -> Safa {
    Safa {
        states: vec!["e0".into()],
        alphabet: alphabet.to_vec(),
        set_count: 0,
        initial: "e0".into(),
        finals: finals(&["e0"]),
        transitions: vec![],
    }
}

/// Single non-final state: accepts nothing.
pub fn empty_language(alphabet: &[String]) -> Safa {
    Safa { finals: BTreeSet::new(), ..epsilon_only(alphabet) }
}

/// Two registers, the first preloaded with `d`: accepts words containing `d`.
pub fn ex7_register(d: u64) -> RegisterAutomaton {
    RegisterAutomaton {
        states: strings(&["q0", "q1"]),
        alphabet: strings(&["a"]),
        initial_registers: vec![Some(DataValue(d)), None],
        update: [(("q0", "a"), 2), (("q1", "a"), 2)]
            .into_iter()
            .map(|((q, a), r)| ((q.to_string(), a.to_string()), r))
            .collect(),
        initial: "q0".into(),
        finals: finals(&["q1"]),
        transitions: vec![
            ("q0".into(), "a".into(), 1, "q1".into()),
            ("q0".into(), "a".into(), 2, "q0".into()),
            ("q1".into(), "a".into(), 1, "q1".into()),
            ("q1".into(), "a".into(), 2, "q1".into()),
        ],
    }
}

/// Two empty registers: accepts concatenations of `(a,d)(a,d)` blocks.
pub fn ex8_register() -> RegisterAutomaton {
    RegisterAutomaton {
        states: strings(&["q0", "q1", "q2"]),
        alphabet: strings(&["a"]),
        initial_registers: vec![None, None],
        update: [(("q0", "a"), 1), (("q1", "a"), 2)]
            .into_iter()
            .map(|((q, a), r)| ((q.to_string(), a.to_string()), r))
            .collect(),
        initial: "q0".into(),
        finals: finals(&["q0"]),
        transitions: vec![
            ("q0".into(), "a".into(), 1, "q1".into()),
            ("q1".into(), "a".into(), 1, "q0".into()),
            ("q1".into(), "a".into(), 2, "q2".into()),
        ],
    }
}

/// A fixture of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Safa(Safa),
    Register(RegisterAutomaton),
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] =
    &["fig1", "fig2", "fig3_simple", "fig5_pair", "fig6", "ex7_register(5)", "ex8_register"];

/// Looks a fixture up by name; `ex7_register(<d>)` and `hierarchy(<k>)`
/// take a parameter.
pub fn fixture(name: &str) -> Result<Fixture, Error> {
    let param = |prefix: &str| -> Option<u64> {
        name.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
    };
    Ok(match name {
        "fig1" => Fixture::Safa(fig1()),
        "fig2" => Fixture::Safa(fig2()),
        "fig3_simple" => Fixture::Safa(fig3_simple()),
        "fig5_pair" => Fixture::Safa(fig5_pair()),
        "fig6" => Fixture::Safa(fig6()),
        "ex8_register" => Fixture::Register(ex8_register()),
        _ => {
            if let Some(d) = param("ex7_register(") {
                Fixture::Register(ex7_register(d))
            } else if let Some(k) = param("hierarchy(").filter(|&k| k >= 1) {
                Fixture::Safa(hierarchy_safa(k as usize))
            } else {
                return Err(Error::UnknownFixture(name.to_string()));
            }
        }
    })
}

/// The language each SAFA fixture is meant to accept.
pub fn fixture_language(name: &str) -> Option<Language> {
    Some(match name {
        "fig1" => Language::FdA("a".into()),
        "fig2" => Language::ExistsCntNe2,
        "fig5_pair" => Language::Pair,
        "fig6" => Language::AExistsB,
        _ => return None,
    })
}
