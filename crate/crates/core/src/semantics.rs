//! Run semantics: successor configurations, membership, deterministic
//! simulation, accepting-run extraction and pumping.
//!
//! Membership for nondeterministic automata is a depth-first search over
//! `(position, state, set contents)`; failed nodes are memoised. Transitions
//! are tried in file order, so the first accepting run found is stable.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::automaton::{Guard, Indexed, Polarity, Safa, SetOp};
use crate::word::{DataValue, DataWord};
use crate::Error;

/// Contents of the sets, index 0 holding set 1.
pub type Sets = Vec<BTreeSet<DataValue>>;

/// A state together with the contents of every set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: String,
    pub sets: Sets,
}

impl Configuration {
    pub fn initial(a: &Safa) -> Configuration {
        Configuration { state: a.initial.clone(), sets: vec![BTreeSet::new(); a.set_count] }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.state)?;
        for (i, set) in self.sets.iter().enumerate() {
            let values: Vec<String> = set.iter().map(|d| d.to_string()).collect();
            write!(f, " h{}={{{}}}", i + 1, values.join(","))?;
        }
        Ok(())
    }
}

/// A run: the transitions taken and the configurations visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    /// `(transition index, datum consumed)` per step.
    pub steps: Vec<(usize, DataValue)>,
    /// `steps.len() + 1` configurations, starting with the initial one.
    pub configs: Vec<Configuration>,
}

impl Run {
    pub fn last(&self) -> &Configuration {
        self.configs.last().expect("a run has at least one configuration")
    }

    pub fn states(&self) -> impl Iterator<Item = &str> + '_ {
        self.configs.iter().map(|c| c.state.as_str())
    }

    /// The word this run reads.
    pub fn word(&self, a: &Safa) -> DataWord {
        let mut w = DataWord::new();
        for &(t, d) in &self.steps {
            w.push(a.transitions[t].letter.clone(), d);
        }
        w
    }
}

pub(crate) fn guard_holds(guard: Guard, sets: &Sets, d: DataValue) -> bool {
    let present = sets[guard.set - 1].contains(&d);
    match guard.polarity {
        Polarity::Member => present,
        Polarity::NotMember => !present,
    }
}

pub(crate) fn apply(op: SetOp, sets: &Sets, d: DataValue) -> Sets {
    let mut next = sets.clone();
    if let SetOp::Insert(j) = op {
        next[j - 1].insert(d);
    }
    next
}

/// Every successor of `c` on `(letter, datum)`, ordered by transition index.
pub fn step(
    a: &Safa,
    c: &Configuration,
    letter: &str,
    datum: DataValue,
) -> Result<Vec<(usize, Configuration)>, Error> {
    a.check()?;
    if !a.alphabet.iter().any(|l| l == letter) {
        return Err(Error::UnknownLetter { position: 0, letter: letter.to_string() });
    }
    Ok(a.transitions
        .iter()
        .enumerate()
        .filter(|(_, t)| t.source == c.state && t.letter == letter && guard_holds(t.guard, &c.sets, datum))
        .map(|(ix, t)| (ix, Configuration { state: t.target.clone(), sets: apply(t.op, &c.sets, datum) }))
        .collect())
}

struct Search<'a> {
    ix: &'a Indexed,
    letters: Vec<usize>,
    data: Vec<DataValue>,
    dead: HashSet<(usize, usize, Sets)>,
}

impl Search<'_> {
    /// Steps of an accepting run from `(pos, state, sets)`, reversed.
    fn find(&mut self, pos: usize, state: usize, sets: &Sets) -> Option<Vec<usize>> {
        if pos == self.letters.len() {
            return self.ix.finals[state].then(Vec::new);
        }
        let key = (pos, state, sets.clone());
        if self.dead.contains(&key) {
            return None;
        }
        let d = self.data[pos];
        let ix = self.ix;
        for &t in ix.outgoing(state, self.letters[pos]) {
            let tr = &ix.trans[t];
            if !guard_holds(tr.guard, sets, d) {
                continue;
            }
            let next = apply(tr.op, sets, d);
            if let Some(mut rest) = self.find(pos + 1, tr.target, &next) {
                rest.push(t);
                return Some(rest);
            }
        }
        self.dead.insert(key);
        None
    }
}

fn search_run(a: &Safa, w: &DataWord) -> Result<Option<Vec<usize>>, Error> {
    let ix = Indexed::new(a)?;
    let letters = w
        .letters()
        .enumerate()
        .map(|(p, l)| ix.letter_index(p, l))
        .collect::<Result<Vec<_>, _>>()?;
    let mut search = Search { ix: &ix, letters, data: w.data().collect(), dead: HashSet::new() };
    let sets = vec![BTreeSet::new(); ix.set_count];
    Ok(search.find(0, ix.initial, &sets).map(|mut steps| {
        steps.reverse();
        steps
    }))
}

/// Replays `transitions` over `w` from the initial configuration, checking
/// every guard. `None` if some step does not apply.
pub fn replay(a: &Safa, w: &DataWord, transitions: &[usize]) -> Option<Run> {
    if transitions.len() != w.len() {
        return None;
    }
    let mut configs = vec![Configuration::initial(a)];
    let mut steps = Vec::with_capacity(w.len());
    for (&t, (letter, d)) in transitions.iter().zip(w.iter()) {
        let tr = a.transitions.get(t)?;
        let cur = configs.last().unwrap();
        if tr.source != cur.state || tr.letter != letter || !guard_holds(tr.guard, &cur.sets, d) {
            return None;
        }
        let next = Configuration { state: tr.target.clone(), sets: apply(tr.op, &cur.sets, d) };
        configs.push(next);
        steps.push((t, d));
    }
    Some(Run { steps, configs })
}

/// Whether some run of `a` reads all of `w` and ends in a final state.
pub fn accepts(a: &Safa, w: &DataWord) -> Result<bool, Error> {
    Ok(search_run(a, w)?.is_some())
}

/// The first accepting run in depth-first, file-order exploration.
pub fn find_accepting_run(a: &Safa, w: &DataWord) -> Result<Option<Run>, Error> {
    Ok(search_run(a, w)?.map(|ts| replay(a, w, &ts).expect("search produced a valid run")))
}

/// Result of simulating a deterministic automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterministicRun {
    pub accepted: bool,
    /// The run up to where it ended; complete unless `stuck_at` is set.
    pub run: Run,
    /// Position of the first item no transition could read.
    pub stuck_at: Option<usize>,
}

/// Follows the unique applicable transition at each step.
pub fn run_deterministic(a: &Safa, w: &DataWord) -> Result<DeterministicRun, Error> {
    let ix = Indexed::new(a)?;
    if !a.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    a.check_word(w)?;
    let mut configs = vec![Configuration::initial(a)];
    let mut steps = Vec::new();
    let mut state = ix.initial;
    for (pos, (letter, d)) in w.iter().enumerate() {
        let l = ix.letter_index(pos, letter)?;
        let sets = &configs.last().unwrap().sets;
        let Some(&t) = ix.outgoing(state, l).iter().find(|&&t| guard_holds(ix.trans[t].guard, sets, d)) else {
            return Ok(DeterministicRun { accepted: false, run: Run { steps, configs }, stuck_at: Some(pos) });
        };
        let tr = &ix.trans[t];
        let next = Configuration { state: a.transitions[t].target.clone(), sets: apply(tr.op, sets, d) };
        state = tr.target;
        configs.push(next);
        steps.push((t, d));
    }
    Ok(DeterministicRun { accepted: ix.finals[state], run: Run { steps, configs }, stuck_at: None })
}

/// Pumps the first state cycle of the depth-first accepting run of `w`.
///
/// With `w = xyz` split at the first repeated state of the run (`|y| >= 1`,
/// `|xy| <= |Q|`), returns for each `k` in `1..=ell` the word read along
/// `T_x T_y T_y^k T_z`. The prefix `xy` keeps its data; in the repeated cycle
/// copies and the suffix, non-membership guards read a fresh datum (counting
/// up from one above the largest datum of `w`) and membership guards read the
/// smallest value currently in the guarded set. Every produced word is
/// checked with [`accepts`]; a rejected one is reported as
/// [`Error::PumpNotAccepted`].
pub fn pump(a: &Safa, w: &DataWord, ell: usize) -> Result<Vec<DataWord>, Error> {
    if ell == 0 {
        return Err(Error::ZeroPump);
    }
    let run = find_accepting_run(a, w)?.ok_or(Error::NotAccepted)?;
    if w.len() < a.states.len() {
        return Err(Error::WordTooShort { len: w.len(), states: a.states.len() });
    }
    let (start, end) = first_cycle(&run).expect("a run longer than the state count repeats a state");
    let transitions: Vec<usize> = run.steps.iter().map(|&(t, _)| t).collect();
    let cycle = &transitions[start..end];
    let suffix = &transitions[end..];
    let mut out = Vec::with_capacity(ell);
    for k in 1..=ell {
        let mut fresh = w.max_datum().map_or(1, |d| d.0 + 1);
        let mut word = w.slice(0..end);
        let mut sets = run.configs[end].sets.clone();
        let tail = std::iter::repeat_n(cycle, k).flatten().chain(suffix);
        for &t in tail {
            let tr = &a.transitions[t];
            let d = match tr.guard.polarity {
                Polarity::NotMember => {
                    fresh += 1;
                    DataValue(fresh - 1)
                }
                Polarity::Member => match sets[tr.guard.set - 1].first() {
                    Some(&d) => d,
                    None => return Err(Error::PumpNotAccepted(word)),
                },
            };
            sets = apply(tr.op, &sets, d);
            word.push(tr.letter.clone(), d);
        }
        if !accepts(a, &word)? {
            return Err(Error::PumpNotAccepted(word));
        }
        out.push(word);
    }
    Ok(out)
}

/// `(i, j)` with `i < j` the first repetition `state_i == state_j` along the
/// run, minimising `j`.
fn first_cycle(run: &Run) -> Option<(usize, usize)> {
    let states: Vec<&str> = run.states().collect();
    (1..states.len()).find_map(|j| (0..j).find(|&i| states[i] == states[j]).map(|i| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(s: &str) -> DataWord {
        s.parse().unwrap()
    }

    fn set(vals: &[u64]) -> BTreeSet<DataValue> {
        vals.iter().map(|&v| DataValue(v)).collect()
    }

    fn conf(state: &str, sets: &[&[u64]]) -> Configuration {
        Configuration { state: state.into(), sets: sets.iter().map(|s| set(s)).collect() }
    }

    #[test]
    fn step_fig1_fresh_value_takes_insert_loop() {
        let a = fixtures::fig1();
        let succ = step(&a, &conf("q0", &[&[]]), "a", DataValue(1)).unwrap();
        assert_eq!(succ, vec![(0, conf("q0", &[&[1]]))]);
        assert_eq!(a.transitions[0].to_string(), "q0 a !p1 ins1 q0");
    }

    #[test]
    fn step_fig1_repeated_value_goes_dead() {
        let a = fixtures::fig1();
        let succ = step(&a, &conf("q0", &[&[1]]), "a", DataValue(1)).unwrap();
        assert_eq!(succ, vec![(3, conf("q1", &[&[1]]))]);
    }

    #[test]
    fn step_without_transitions_is_empty() {
        let a = fixtures::fig1();
        assert!(step(&a, &conf("q1", &[&[]]), "a", DataValue(4)).unwrap().is_empty());
        assert!(matches!(
            step(&a, &conf("q0", &[&[]]), "z", DataValue(4)),
            Err(Error::UnknownLetter { .. })
        ));
    }

    #[test]
    fn accepts_examples() {
        assert!(accepts(&fixtures::fig3_simple(), &w("a:1 a:1")).unwrap());
        assert!(accepts(&fixtures::fig1(), &DataWord::new()).unwrap());
        assert!(!accepts(&fixtures::fig1(), &w("a:1 a:2 b:1 b:5 a:2 a:5 a:7 a:100")).unwrap());
        assert!(matches!(accepts(&fixtures::fig1(), &w("c:1")), Err(Error::UnknownLetter { position: 0, .. })));
    }

    #[test]
    fn deterministic_fig1() {
        let r = run_deterministic(&fixtures::fig1(), &w("a:1 a:2")).unwrap();
        assert!(r.accepted);
        assert_eq!(r.stuck_at, None);
        assert_eq!(r.run.last(), &conf("q0", &[&[1, 2]]));
    }

    #[test]
    fn deterministic_fig6() {
        let a = fixtures::fig6();
        let r = run_deterministic(&a, &w("a:1")).unwrap();
        assert!(!r.accepted);
        assert_eq!(r.run.last().state, "q1");
        assert!(run_deterministic(&a, &w("b:1 a:1")).unwrap().accepted);
        // q1 has no transitions at all
        let r = run_deterministic(&a, &w("a:1 b:2")).unwrap();
        assert_eq!(r.stuck_at, Some(1));
        assert!(matches!(run_deterministic(&fixtures::fig2(), &w("a:1")), Err(Error::NotDeterministic)));
    }

    #[test]
    fn fig2_guessing_run() {
        let a = fixtures::fig2();
        let run = find_accepting_run(&a, &w("a:1")).unwrap().unwrap();
        assert_eq!(run.states().collect::<Vec<_>>(), ["q0", "q1"]);
        assert_eq!(run.last(), &conf("q1", &[&[], &[1]]));
        assert!(find_accepting_run(&a, &w("a:1 a:1")).unwrap().is_none());
        assert!(find_accepting_run(&a, &DataWord::new()).unwrap().is_none());
    }

    #[test]
    fn replay_rejects_wrong_transitions() {
        let a = fixtures::fig1();
        assert!(replay(&a, &w("a:1"), &[0]).is_some());
        assert!(replay(&a, &w("a:1"), &[3]).is_none());
        assert!(replay(&a, &w("a:1"), &[]).is_none());
    }

    #[test]
    fn pump_fig1() {
        let a = fixtures::fig1();
        let out = pump(&a, &w("a:1 a:2"), 1).unwrap();
        assert_eq!(out, vec![w("a:1 a:3 a:4")]);
        assert!(out[0].same_shape(&w("a:1 a:3 a:2")));
    }

    #[test]
    fn pump_fig3() {
        let a = fixtures::fig3_simple();
        let out = pump(&a, &w("a:1 a:1"), 2).unwrap();
        assert_eq!(out, vec![w("a:1 a:2 a:1"), w("a:1 a:2 a:3 a:1")]);
        assert!(out.iter().all(|x| accepts(&a, x).unwrap()));
    }

    #[test]
    fn pump_preconditions() {
        let a = fixtures::fig1();
        assert!(matches!(pump(&a, &w("a:1 a:2"), 0), Err(Error::ZeroPump)));
        assert!(matches!(pump(&a, &w("a:1 a:1"), 1), Err(Error::NotAccepted)));
        assert!(matches!(pump(&a, &w("a:1"), 1), Err(Error::WordTooShort { len: 1, states: 2 })));
    }
}
