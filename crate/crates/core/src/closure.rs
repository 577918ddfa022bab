//! Union, concatenation, complement of deterministic automata, and lifting
//! of regular languages.
//!
//! The binary constructions keep the two operands' sets apart: the second
//! operand's set indices are shifted past the first's. States are renamed
//! `1.<name>` and `2.<name>` so the state spaces are disjoint.

use std::collections::{BTreeMap, BTreeSet};

use crate::automaton::{Guard, Safa, SetOp, Transition};
use crate::nfa::Nfa;
use crate::Error;

fn same_alphabet(a: &Safa, b: &Safa) -> Result<(), Error> {
    let left: BTreeSet<&String> = a.alphabet.iter().collect();
    let right: BTreeSet<&String> = b.alphabet.iter().collect();
    if left != right {
        return Err(Error::AlphabetMismatch { left: a.alphabet.clone(), right: b.alphabet.clone() });
    }
    Ok(())
}

fn prefixed(prefix: &str, name: &str) -> String {
    format!("{prefix}.{name}")
}

fn rename(prefix: &str, transitions: Vec<Transition>) -> Vec<Transition> {
    transitions
        .into_iter()
        .map(|t| Transition {
            source: prefixed(prefix, &t.source),
            target: prefixed(prefix, &t.target),
            ..t
        })
        .collect()
}

/// Disjoint union of states and transitions with `b`'s sets shifted.
fn juxtapose(a: &Safa, b: &Safa) -> (Vec<String>, Vec<Transition>, Vec<Transition>) {
    let states = a
        .states
        .iter()
        .map(|s| prefixed("1", s))
        .chain(b.states.iter().map(|s| prefixed("2", s)))
        .collect();
    let ta = rename("1", a.transitions.clone());
    let tb = rename("2", b.shift_sets(a.set_count));
    (states, ta, tb)
}

/// Accepts `L(a) ∪ L(b)`. A fresh initial state `u0` copies the outgoing
/// transitions of both original initial states.
pub fn union(a: &Safa, b: &Safa) -> Result<Safa, Error> {
    a.check()?;
    b.check()?;
    same_alphabet(a, b)?;
    let (mut states, ta, tb) = juxtapose(a, b);
    let init = "u0".to_string();
    states.insert(0, init.clone());

    let (ia, ib) = (prefixed("1", &a.initial), prefixed("2", &b.initial));
    let mut transitions = ta.clone();
    transitions.extend(tb.iter().cloned());
    for t in ta.iter().filter(|t| t.source == ia).chain(tb.iter().filter(|t| t.source == ib)) {
        transitions.push(Transition { source: init.clone(), ..t.clone() });
    }

    let mut finals: BTreeSet<String> = a
        .finals
        .iter()
        .map(|f| prefixed("1", f))
        .chain(b.finals.iter().map(|f| prefixed("2", f)))
        .collect();
    if a.is_final(&a.initial) || b.is_final(&b.initial) {
        finals.insert(init.clone());
    }
    Ok(Safa {
        states,
        alphabet: a.alphabet.clone(),
        set_count: a.set_count + b.set_count,
        initial: init,
        finals,
        transitions,
    })
}

/// Accepts `L(a)·L(b)`: every final state of `a` also takes the transitions
/// leaving `b`'s initial state.
pub fn concat(a: &Safa, b: &Safa) -> Result<Safa, Error> {
    a.check()?;
    b.check()?;
    same_alphabet(a, b)?;
    let (states, ta, tb) = juxtapose(a, b);
    let ib = prefixed("2", &b.initial);
    let mut transitions = ta;
    transitions.extend(tb.iter().cloned());
    for f in &a.finals {
        let f = prefixed("1", f);
        for t in tb.iter().filter(|t| t.source == ib) {
            transitions.push(Transition { source: f.clone(), ..t.clone() });
        }
    }
    let mut finals: BTreeSet<String> = b.finals.iter().map(|f| prefixed("2", f)).collect();
    if b.is_final(&b.initial) {
        finals.extend(a.finals.iter().map(|f| prefixed("1", f)));
    }
    Ok(Safa {
        states,
        alphabet: a.alphabet.clone(),
        set_count: a.set_count + b.set_count,
        initial: prefixed("1", &a.initial),
        finals,
        transitions,
    })
}

fn fresh_name(states: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while states.contains(&name) {
        name.push('\'');
    }
    name
}

/// Adds a non-final sink so that every `(state, letter)` has exactly one
/// applicable transition for every datum. Determinism is preserved: a
/// missing pair gets both polarities on set 1, a lone guard gets its
/// opposite on the same set.
pub fn complete(a: &Safa) -> Result<Safa, Error> {
    a.check()?;
    if !a.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    let mut out = a.clone();
    let sink = fresh_name(&a.states, "sink");
    out.states.push(sink.clone());
    out.set_count = a.set_count.max(1);

    let mut by_pair: BTreeMap<(&str, &str), Vec<Guard>> = BTreeMap::new();
    for t in &a.transitions {
        by_pair.entry((&t.source, &t.letter)).or_default().push(t.guard);
    }
    for state in &out.states {
        for letter in &a.alphabet {
            let guards = by_pair.get(&(state.as_str(), letter.as_str())).map_or(&[][..], Vec::as_slice);
            let added: Vec<Guard> = match guards {
                [] => vec![Guard::not_member(1), Guard::member(1)],
                [g] => vec![Guard { polarity: g.polarity.opposite(), set: g.set }],
                _ => vec![],
            };
            for guard in added {
                out.transitions.push(Transition::new(
                    state.clone(),
                    letter.clone(),
                    guard,
                    SetOp::NoOp,
                    sink.clone(),
                ));
            }
        }
    }
    Ok(out)
}

/// Accepts the complement of `L(a)`; `a` must be deterministic.
pub fn complement(a: &Safa) -> Result<Safa, Error> {
    let mut out = complete(a)?;
    out.finals = out.states.iter().filter(|s| !out.finals.contains(*s)).cloned().collect();
    Ok(out)
}

/// Lifts an NFA over plain letters: each `a`-edge becomes
/// `(a, !p1, -)`. Nothing is ever inserted, so every guard passes and the
/// result accepts exactly the words whose letter projection `n` accepts.
pub fn lift_regular(n: &Nfa<String>) -> Safa {
    Safa {
        states: n.states.clone(),
        alphabet: n.alphabet.clone(),
        set_count: 1,
        initial: n.initial.clone(),
        finals: n.finals.clone(),
        transitions: n
            .transitions
            .iter()
            .map(|(s, l, t)| Transition::new(s.clone(), l.clone(), Guard::not_member(1), SetOp::NoOp, t.clone()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::semantics::accepts;
    use crate::word::DataWord;

    fn w(s: &str) -> DataWord {
        s.parse().unwrap()
    }

    #[test]
    fn union_epsilon_rule() {
        let u = union(&fixtures::fig1(), &fixtures::fig6()).unwrap();
        assert!(u.validate().is_empty());
        assert!(u.finals.contains("u0"));
        assert_eq!(u.set_count, 2);
        assert!(accepts(&u, &DataWord::new()).unwrap());

        let pair = fixtures::fig5_pair();
        let u = union(&pair, &pair).unwrap();
        assert!(!u.finals.contains("u0"));
        assert!(!accepts(&u, &DataWord::new()).unwrap());
        assert!(accepts(&u, &w("a:4 a:4")).unwrap());
    }

    #[test]
    fn union_alphabet_mismatch() {
        assert!(matches!(
            union(&fixtures::fig1(), &fixtures::fig2()),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn union_is_disjunction_on_examples() {
        let u = union(&fixtures::fig1(), &fixtures::fig6()).unwrap();
        // in fd(a) but not a∃b
        assert!(accepts(&u, &w("a:1")).unwrap());
        // in a∃b but not fd(a)
        assert!(accepts(&u, &w("b:1 a:1 a:1")).unwrap());
        // in neither
        assert!(!accepts(&u, &w("a:1 a:1")).unwrap());
    }

    #[test]
    fn concat_pair_with_itself() {
        let pair = fixtures::fig5_pair();
        let c = concat(&pair, &pair).unwrap();
        assert!(accepts(&c, &w("a:1 a:1 a:2 a:2")).unwrap());
        assert!(accepts(&c, &w("a:1 a:1 a:1 a:1")).unwrap());
        assert!(!accepts(&c, &w("a:1 a:1 a:2 a:3")).unwrap());
        assert!(!accepts(&c, &w("a:1 a:1")).unwrap());
    }

    #[test]
    fn concat_with_epsilon_and_empty() {
        let a = fixtures::fig6();
        let eps = fixtures::epsilon_only(&a.alphabet);
        let c = concat(&a, &eps).unwrap();
        for s in ["", "b:1 a:1", "a:1", "b:2 b:3 a:3"] {
            assert_eq!(accepts(&c, &w(s)).unwrap(), accepts(&a, &w(s)).unwrap(), "{s}");
        }
        let none = fixtures::empty_language(&a.alphabet);
        let c = concat(&none, &a).unwrap();
        for s in ["", "b:1 a:1", "a:1"] {
            assert!(!accepts(&c, &w(s)).unwrap());
        }
    }

    #[test]
    fn complement_fig1() {
        let c = complement(&fixtures::fig1()).unwrap();
        assert!(c.is_deterministic());
        assert!(accepts(&c, &w("a:1 a:1")).unwrap());
        assert!(!accepts(&c, &w("a:1 a:2")).unwrap());
    }

    #[test]
    fn complement_of_accept_all_is_empty() {
        let mut all = fixtures::epsilon_only(&["a".to_string()]);
        all.set_count = 1;
        all.transitions.push(Transition::new("e0", "a", Guard::not_member(1), SetOp::NoOp, "e0"));
        all.transitions.push(Transition::new("e0", "a", Guard::member(1), SetOp::NoOp, "e0"));
        let c = complement(&all).unwrap();
        assert!(crate::emptiness::is_empty(&c).unwrap());
    }

    #[test]
    fn complement_needs_determinism() {
        assert!(matches!(complement(&fixtures::fig2()), Err(Error::NotDeterministic)));
    }

    #[test]
    fn complement_raises_zero_sets() {
        let a = fixtures::epsilon_only(&["a".to_string()]);
        assert_eq!(a.set_count, 0);
        let c = complement(&a).unwrap();
        assert_eq!(c.set_count, 1);
        assert!(c.validate().is_empty());
        assert!(!accepts(&c, &DataWord::new()).unwrap());
        assert!(accepts(&c, &w("a:9")).unwrap());
    }

    #[test]
    fn lift_examples() {
        let star = Nfa {
            states: vec!["0".into()],
            alphabet: vec!["a".into(), "b".into()],
            initial: "0".into(),
            finals: BTreeSet::from(["0".to_string()]),
            transitions: vec![("0".into(), "a".into(), "0".into())],
        };
        let s = lift_regular(&star);
        assert!(accepts(&s, &w("a:1 a:1 a:7")).unwrap());
        assert!(!accepts(&s, &w("a:1 b:1")).unwrap());

        let ab = Nfa {
            states: vec!["0".into(), "1".into(), "2".into()],
            alphabet: vec!["a".into(), "b".into()],
            initial: "0".into(),
            finals: BTreeSet::from(["2".to_string()]),
            transitions: vec![("0".into(), "a".into(), "1".into()), ("1".into(), "b".into(), "2".into())],
        };
        let s = lift_regular(&ab);
        assert!(accepts(&s, &w("a:3 b:3")).unwrap());
        assert!(accepts(&s, &w("a:3 b:4")).unwrap());
        assert!(!accepts(&s, &w("b:3 a:4")).unwrap());

        let none = Nfa { finals: BTreeSet::new(), ..ab };
        assert!(crate::emptiness::is_empty(&lift_regular(&none)).unwrap());
    }
}
