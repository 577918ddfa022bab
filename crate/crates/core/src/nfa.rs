//! Plain nondeterministic finite automata over an arbitrary label type.
//!
//! Used with `String` labels as the input of regular-language lifting, and
//! with [`TransitionLabel`] labels for the singleton emptiness pipeline,
//! where each SAFA transition triple is one letter.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::automaton::{Guard, SetOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa<L> {
    pub states: Vec<String>,
    pub alphabet: Vec<L>,
    pub initial: String,
    pub finals: BTreeSet<String>,
    pub transitions: Vec<(String, L, String)>,
}

/// A SAFA transition triple `(letter, guard, op)` used as an NFA letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TransitionLabel {
    pub letter: String,
    pub guard: Guard,
    pub op: SetOp,
}

impl fmt::Display for TransitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.letter, self.guard, self.op)
    }
}

impl<L: Clone + Eq + Hash> Nfa<L> {
    /// Problems with names: unknown initial/final/transition endpoints or
    /// labels outside the alphabet.
    pub fn validate(&self) -> Vec<String> {
        let states: HashSet<&str> = self.states.iter().map(String::as_str).collect();
        let mut errors = Vec::new();
        if !states.contains(self.initial.as_str()) {
            errors.push(format!("initial state `{}` is not declared", self.initial));
        }
        for f in &self.finals {
            if !states.contains(f.as_str()) {
                errors.push(format!("final state `{f}` is not declared"));
            }
        }
        for (i, (s, l, t)) in self.transitions.iter().enumerate() {
            if !states.contains(s.as_str()) || !states.contains(t.as_str()) {
                errors.push(format!("transition {i} names an undeclared state"));
            }
            if !self.alphabet.contains(l) {
                errors.push(format!("transition {i} uses a label outside the alphabet"));
            }
        }
        errors
    }

    /// States reachable from the initial state, in depth-first order.
    pub fn reachable(&self) -> Vec<&str> {
        let mut succ: HashMap<&str, Vec<&str>> = HashMap::new();
        for (s, _, t) in &self.transitions {
            succ.entry(s).or_default().push(t);
        }
        let mut seen = HashSet::new();
        let mut order = Vec::new();
        let mut stack = vec![self.initial.as_str()];
        while let Some(s) = stack.pop() {
            if !seen.insert(s) {
                continue;
            }
            order.push(s);
            if let Some(next) = succ.get(s) {
                stack.extend(next.iter().rev());
            }
        }
        order
    }

    /// No final state is reachable.
    pub fn is_empty(&self) -> bool {
        !self.reachable().into_iter().any(|s| self.finals.contains(s))
    }

    pub fn accepts(&self, word: &[L]) -> bool {
        let mut current: HashSet<&str> = HashSet::from([self.initial.as_str()]);
        for l in word {
            current = self
                .transitions
                .iter()
                .filter(|(s, m, _)| m == l && current.contains(s.as_str()))
                .map(|(_, _, t)| t.as_str())
                .collect();
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|s| self.finals.contains(*s))
    }

    /// Breadth-first shortest accepted label sequence.
    pub fn shortest_word(&self) -> Option<Vec<L>> {
        let mut parent: HashMap<&str, Option<(&str, &L)>> = HashMap::new();
        parent.insert(&self.initial, None);
        let mut queue = VecDeque::from([self.initial.as_str()]);
        while let Some(s) = queue.pop_front() {
            if self.finals.contains(s) {
                let mut word = Vec::new();
                let mut cur = s;
                while let Some(Some((p, l))) = parent.get(cur) {
                    word.push((*l).clone());
                    cur = p;
                }
                word.reverse();
                return Some(word);
            }
            for (src, l, t) in &self.transitions {
                if src == s && !parent.contains_key(t.as_str()) {
                    parent.insert(t, Some((s, l)));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Synchronous product restricted to the reachable part. Product states
    /// are named `left|right`; finals are pairs of finals.
    pub fn product(&self, other: &Nfa<L>) -> Nfa<L> {
        let name = |a: &str, b: &str| format!("{a}|{b}");
        let mut states = Vec::new();
        let mut finals = BTreeSet::new();
        let mut transitions = Vec::new();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([(self.initial.clone(), other.initial.clone())]);
        seen.insert((self.initial.clone(), other.initial.clone()));
        while let Some((p, q)) = queue.pop_front() {
            let pq = name(&p, &q);
            if self.finals.contains(&p) && other.finals.contains(&q) {
                finals.insert(pq.clone());
            }
            states.push(pq.clone());
            for (_, l1, t1) in self.transitions.iter().filter(|(s, _, _)| *s == p) {
                for (_, _, t2) in other.transitions.iter().filter(|(s, l, _)| *s == q && l == l1) {
                    transitions.push((pq.clone(), l1.clone(), name(t1, t2)));
                    if seen.insert((t1.clone(), t2.clone())) {
                        queue.push_back((t1.clone(), t2.clone()));
                    }
                }
            }
        }
        let alphabet = self.alphabet.iter().filter(|l| other.alphabet.contains(l)).cloned().collect();
        Nfa { states, alphabet, initial: name(&self.initial, &other.initial), finals, transitions }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Nfa<String> {
        Nfa {
            states: vec!["0".into(), "1".into(), "2".into()],
            alphabet: vec!["a".into(), "b".into()],
            initial: "0".into(),
            finals: BTreeSet::from(["2".to_string()]),
            transitions: vec![
                ("0".into(), "a".into(), "1".into()),
                ("1".into(), "b".into(), "2".into()),
            ],
        }
    }

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn accepts_and_shortest() {
        let n = ab();
        assert!(n.validate().is_empty());
        assert!(n.accepts(&s(&["a", "b"])));
        assert!(!n.accepts(&s(&["a"])));
        assert!(!n.accepts(&s(&["b", "a"])));
        assert_eq!(n.shortest_word(), Some(s(&["a", "b"])));
        assert!(!n.is_empty());
    }

    #[test]
    fn unreachable_final_is_empty() {
        let mut n = ab();
        n.transitions.pop();
        assert!(n.is_empty());
        assert_eq!(n.shortest_word(), None);
    }

    #[test]
    fn product_of_self_is_isomorphic() {
        let n = ab();
        let p = n.product(&n);
        assert_eq!(p.states.len(), 3);
        assert!(p.accepts(&s(&["a", "b"])));
        assert!(!p.accepts(&s(&["a"])));
    }
}
