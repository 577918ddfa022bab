//! Nonemptiness and witnesses.
//!
//! A non-membership guard can always be passed with a datum never seen
//! before, and a membership guard on set `i` can be passed exactly when
//! something has been inserted into set `i` earlier. Since guards test a
//! single set, tracking which sets are nonempty (the occupancy vector) is
//! enough to decide nonemptiness. [`is_empty`] searches the product of the
//! state space with all occupancy vectors; [`witness`] turns a shortest path
//! of that search into a concrete word.
//!
//! Two independent routes exist for cross-checking:
//! [`bounded_run_oracle`] enumerates abstract transition sequences up to the
//! length bound `|Q|·(|H|+2) − 1`, and [`singleton_product`] builds the
//! three-automaton pipeline for one-set automata.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automaton::{Guard, Indexed, IxTransition, Polarity, Safa, SetOp};
use crate::nfa::{Nfa, TransitionLabel};
use crate::word::{DataValue, DataWord};
use crate::Error;

/// Default depth cap for [`bounded_run_oracle`].
pub const DEFAULT_ORACLE_DEPTH: usize = 64;

/// A state paired with the sets known to be nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccupancyState {
    pub state: String,
    /// `occupied[i]` iff set `i + 1` is nonempty.
    pub occupied: Vec<bool>,
}

type Node = (usize, Vec<bool>);

/// Parent edge per visited node; `None` for the start.
type Parents = HashMap<Node, Option<(Node, usize)>>;

fn enabled(t: &IxTransition, occupied: &[bool]) -> bool {
    match t.guard.polarity {
        Polarity::NotMember => true,
        Polarity::Member => occupied[t.guard.set - 1],
    }
}

fn after(t: &IxTransition, occupied: &[bool]) -> Vec<bool> {
    let mut next = occupied.to_vec();
    if let SetOp::Insert(j) = t.op {
        next[j - 1] = true;
    }
    next
}

/// Breadth-first search over occupancy states. Returns the visit order and
/// the parent edge of every visited node.
fn explore(ix: &Indexed) -> (Vec<Node>, Parents) {
    let start: Node = (ix.initial, vec![false; ix.set_count]);
    let mut parent = HashMap::from([(start.clone(), None)]);
    let mut order = Vec::new();
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        for &t in &ix.out_any[node.0] {
            let tr = &ix.trans[t];
            if !enabled(tr, &node.1) {
                continue;
            }
            let next = (tr.target, after(tr, &node.1));
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((node.clone(), t)));
                queue.push_back(next);
            }
        }
        order.push(node);
    }
    (order, parent)
}

/// Every occupancy state reachable from `(initial, all empty)`.
pub fn reachable_occupancy(a: &Safa) -> Result<Vec<OccupancyState>, Error> {
    let ix = Indexed::new(a)?;
    let (order, _) = explore(&ix);
    Ok(order
        .into_iter()
        .map(|(s, occupied)| OccupancyState { state: a.states[s].clone(), occupied })
        .collect())
}

/// `true` iff the automaton accepts no word.
pub fn is_empty(a: &Safa) -> Result<bool, Error> {
    let ix = Indexed::new(a)?;
    let (order, _) = explore(&ix);
    Ok(!order.iter().any(|(s, _)| ix.finals[*s]))
}

/// Transition indices of a shortest accepting abstract path.
pub fn witness_path(a: &Safa) -> Result<Option<Vec<usize>>, Error> {
    let ix = Indexed::new(a)?;
    let (order, parent) = explore(&ix);
    let Some(goal) = order.into_iter().find(|(s, _)| ix.finals[*s]) else {
        return Ok(None);
    };
    let mut path = Vec::new();
    let mut cur = goal;
    while let Some(Some((prev, t))) = parent.get(&cur) {
        path.push(*t);
        cur = prev.clone();
    }
    path.reverse();
    Ok(Some(path))
}

/// Concrete data along a transition path: fresh values 1, 2, 3, ... for
/// non-membership guards, the smallest inserted value for membership guards.
pub fn instantiate_path(a: &Safa, path: &[usize]) -> DataWord {
    let mut sets: Vec<BTreeSet<DataValue>> = vec![BTreeSet::new(); a.set_count];
    let mut next_fresh = 1;
    let mut word = DataWord::new();
    for &t in path {
        let tr = &a.transitions[t];
        let d = match tr.guard.polarity {
            Polarity::NotMember => {
                next_fresh += 1;
                DataValue(next_fresh - 1)
            }
            Polarity::Member => *sets[tr.guard.set - 1]
                .first()
                .expect("membership guard on a path is preceded by an insert"),
        };
        if let SetOp::Insert(j) = tr.op {
            sets[j - 1].insert(d);
        }
        word.push(tr.letter.clone(), d);
    }
    word
}

/// A shortest accepted word, or `None` when the language is empty.
pub fn witness(a: &Safa) -> Result<Option<DataWord>, Error> {
    Ok(witness_path(a)?.map(|p| instantiate_path(a, &p)))
}

/// `|Q|·(|H|+2) − 1`: an upper bound on the shortest accepting run.
pub fn witness_length_bound(a: &Safa) -> usize {
    (a.states.len() * (a.set_count + 2)).saturating_sub(1)
}

/// Exhaustive search for an accepting abstract transition sequence of length
/// at most [`witness_length_bound`]. `true` means empty.
///
/// Sequences are enumerated depth first without merging visits to the same
/// occupancy state at different depths; a node is only pruned when the same
/// node already failed with at least as many steps left.
pub fn bounded_run_oracle(a: &Safa, depth_limit: usize) -> Result<bool, Error> {
    let ix = Indexed::new(a)?;
    let bound = witness_length_bound(a);
    if bound > depth_limit {
        return Err(Error::DepthLimit { required: bound, limit: depth_limit });
    }
    let mut failed: HashMap<Node, usize> = HashMap::new();
    let start = (ix.initial, vec![false; ix.set_count]);
    Ok(!sequence_exists(&ix, start, bound, &mut failed))
}

fn sequence_exists(ix: &Indexed, node: Node, remaining: usize, failed: &mut HashMap<Node, usize>) -> bool {
    if ix.finals[node.0] {
        return true;
    }
    if remaining == 0 || failed.get(&node).is_some_and(|&r| r >= remaining) {
        return false;
    }
    for &t in &ix.out_any[node.0] {
        let tr = &ix.trans[t];
        if enabled(tr, &node.1) && sequence_exists(ix, (tr.target, after(tr, &node.1)), remaining - 1, failed) {
            return true;
        }
    }
    failed.insert(node, remaining);
    false
}

/// The three automata of the singleton pipeline.
#[derive(Clone, Debug)]
pub struct SingletonProduct {
    /// The transition graph, each transition triple read as one letter.
    pub m1: Nfa<TransitionLabel>,
    /// Two-state monitor: membership labels only after some insert label.
    pub m2: Nfa<TransitionLabel>,
    /// Reachable part of the synchronous product of `m1` and `m2`.
    pub m3: Nfa<TransitionLabel>,
}

fn label(letter: &str, guard: Guard, op: SetOp) -> TransitionLabel {
    TransitionLabel { letter: letter.to_string(), guard, op }
}

/// Builds `m1`, `m2` and their product `m3` for a one-set automaton.
/// `m3.is_empty()` coincides with [`is_empty`].
pub fn singleton_product(a: &Safa) -> Result<SingletonProduct, Error> {
    a.check()?;
    if a.set_count != 1 {
        return Err(Error::NotSingleton(a.set_count));
    }
    let (p, np) = (Guard::member(1), Guard::not_member(1));
    let (nop, ins) = (SetOp::NoOp, SetOp::Insert(1));
    let alphabet: Vec<TransitionLabel> = a
        .alphabet
        .iter()
        .flat_map(|l| [label(l, np, nop), label(l, np, ins), label(l, p, nop), label(l, p, ins)])
        .collect();

    let m1 = Nfa {
        states: a.states.clone(),
        alphabet: alphabet.clone(),
        initial: a.initial.clone(),
        finals: a.finals.clone(),
        transitions: a
            .transitions
            .iter()
            .map(|t| (t.source.clone(), label(&t.letter, t.guard, t.op), t.target.clone()))
            .collect(),
    };

    let (m0, m1_state) = ("m0".to_string(), "m1".to_string());
    let mut monitor = Vec::new();
    for l in &a.alphabet {
        monitor.push((m0.clone(), label(l, np, nop), m0.clone()));
        monitor.push((m0.clone(), label(l, np, ins), m1_state.clone()));
        for lab in [label(l, np, ins), label(l, p, ins), label(l, p, nop), label(l, np, nop)] {
            monitor.push((m1_state.clone(), lab, m1_state.clone()));
        }
    }
    let m2 = Nfa {
        states: vec![m0.clone(), m1_state.clone()],
        alphabet,
        initial: m0.clone(),
        finals: BTreeSet::from([m0, m1_state]),
        transitions: monitor,
    };
    let m3 = m1.product(&m2);
    Ok(SingletonProduct { m1, m2, m3 })
}
