//! k-bag class counting automata and the translation from SAFA.
//!
//! Each bag maps data values to naturals, all zero initially. A transition
//! fires when every bag's count for the current datum satisfies its
//! constraint, then each bag applies its operation to that count.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::automaton::{Polarity, Safa, SetOp};
use crate::word::{DataValue, DataWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparator {
    Lt,
    Gt,
    Eq,
    Le,
    Ge,
    Ne,
}

impl Comparator {
    pub fn holds(self, count: u64, e: u64) -> bool {
        match self {
            Comparator::Lt => count < e,
            Comparator::Gt => count > e,
            Comparator::Eq => count == e,
            Comparator::Le => count <= e,
            Comparator::Ge => count >= e,
            Comparator::Ne => count != e,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Comparator::Lt => "<",
            Comparator::Gt => ">",
            Comparator::Eq => "=",
            Comparator::Le => "<=",
            Comparator::Ge => ">=",
            Comparator::Ne => "!=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub cmp: Comparator,
    pub threshold: u64,
}

impl Constraint {
    pub fn new(cmp: Comparator, threshold: u64) -> Constraint {
        Constraint { cmp, threshold }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cmp.symbol(), self.threshold)
    }
}

impl FromStr for Constraint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // two-character symbols first
        let table = [
            ("<=", Comparator::Le),
            (">=", Comparator::Ge),
            ("!=", Comparator::Ne),
            ("<", Comparator::Lt),
            (">", Comparator::Gt),
            ("=", Comparator::Eq),
        ];
        for (sym, cmp) in table {
            if let Some(rest) = s.strip_prefix(sym) {
                let threshold = rest.parse().map_err(|_| format!("bad threshold in `{s}`"))?;
                return Ok(Constraint { cmp, threshold });
            }
        }
        Err(format!("bad constraint `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BagOp {
    Increment(u64),
    Reset(u64),
}

impl BagOp {
    pub fn apply(self, count: u64) -> u64 {
        match self {
            BagOp::Increment(m) => count + m,
            BagOp::Reset(m) => m,
        }
    }
}

impl fmt::Display for BagOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BagOp::Increment(m) => write!(f, "+{m}"),
            BagOp::Reset(m) => write!(f, "={m}"),
        }
    }
}

impl FromStr for BagOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let amount = |r: &str| r.parse::<u64>().map_err(|_| format!("bad amount in `{s}`"));
        if let Some(r) = s.strip_prefix('+') {
            Ok(BagOp::Increment(amount(r)?))
        } else if let Some(r) = s.strip_prefix('=') {
            Ok(BagOp::Reset(amount(r)?))
        } else {
            Err(format!("bad bag operation `{s}`"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcaTransition {
    pub source: String,
    pub letter: String,
    pub constraints: Vec<Constraint>,
    pub ops: Vec<BagOp>,
    pub target: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cca {
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    pub bag_count: usize,
    pub initial: String,
    pub finals: BTreeSet<String>,
    pub transitions: Vec<CcaTransition>,
}

/// Per-bag counts; zero entries are never stored, so equal bags compare equal.
type Bags = Vec<BTreeMap<DataValue, u64>>;

impl Cca {
    pub fn validate(&self) -> Vec<String> {
        let states: HashSet<&str> = self.states.iter().map(String::as_str).collect();
        let letters: HashSet<&str> = self.alphabet.iter().map(String::as_str).collect();
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
        for (i, t) in self.transitions.iter().enumerate() {
            if !states.contains(t.source.as_str()) || !states.contains(t.target.as_str()) {
                errors.push(format!("transition {i} names an undeclared state"));
            }
            if !letters.contains(t.letter.as_str()) {
                errors.push(format!("transition {i} uses letter `{}` outside the alphabet", t.letter));
            }
            if t.constraints.len() != self.bag_count || t.ops.len() != self.bag_count {
                errors.push(format!("transition {i} does not have one constraint and one operation per bag"));
            }
        }
        errors
    }

    fn step(&self, state: &str, bags: &Bags, letter: &str, d: DataValue) -> Vec<(String, Bags)> {
        let count = |b: &BTreeMap<DataValue, u64>| b.get(&d).copied().unwrap_or(0);
        self.transitions
            .iter()
            .filter(|t| t.source == state && t.letter == letter)
            .filter(|t| t.constraints.iter().zip(bags).all(|(c, b)| c.cmp.holds(count(b), c.threshold)))
            .map(|t| {
                let next = bags
                    .iter()
                    .zip(&t.ops)
                    .map(|(b, op)| {
                        let mut b = b.clone();
                        match op.apply(count(&b)) {
                            0 => b.remove(&d),
                            n => b.insert(d, n),
                        };
                        b
                    })
                    .collect();
                (t.target.clone(), next)
            })
            .collect()
    }

    /// Every configuration reachable while reading `w`, position by position.
    fn reachable(&self, w: &DataWord) -> Vec<HashSet<(String, Bags)>> {
        let mut layers = vec![HashSet::from([(self.initial.clone(), vec![BTreeMap::new(); self.bag_count])])];
        for (letter, d) in w.iter() {
            let next = layers
                .last()
                .unwrap()
                .iter()
                .flat_map(|(q, bags)| self.step(q, bags, letter, d))
                .collect();
            layers.push(next);
        }
        layers
    }
}

/// Whether some run consumes all of `w` and ends in a final state.
pub fn cca_accepts(c: &Cca, w: &DataWord) -> bool {
    let mut failed = HashSet::new();
    search(c, w, 0, c.initial.clone(), vec![BTreeMap::new(); c.bag_count], &mut failed)
}

fn search(c: &Cca, w: &DataWord, pos: usize, state: String, bags: Bags, failed: &mut HashSet<(usize, String, Bags)>) -> bool {
    if pos == w.len() {
        return c.finals.contains(&state);
    }
    let key = (pos, state, bags);
    if failed.contains(&key) {
        return false;
    }
    let (letter, d) = &w.items()[pos];
    for (next, bags) in c.step(&key.1, &key.2, letter, *d) {
        if search(c, w, pos + 1, next, bags, failed) {
            return true;
        }
    }
    failed.insert(key);
    false
}

/// Largest count held by any bag in any configuration reachable on a prefix
/// of `w`.
pub fn max_bag_count(c: &Cca, w: &DataWord) -> u64 {
    c.reachable(w)
        .iter()
        .flatten()
        .flat_map(|(_, bags)| bags.iter().flat_map(|b| b.values().copied()))
        .max()
        .unwrap_or(0)
}

/// One bag per set. `p(h_i)` becomes `(=,1)` on bag `i` and `!p(h_i)` becomes
/// `(=,0)`, other bags `(>=,0)`; `ins(h_j)` resets bag `j` to 1, every other
/// bag is incremented by 0.
pub fn safa_to_cca(a: &Safa) -> Cca {
    let k = a.set_count;
    let transitions = a
        .transitions
        .iter()
        .map(|t| {
            let mut constraints = vec![Constraint::new(Comparator::Ge, 0); k];
            constraints[t.guard.set - 1] = match t.guard.polarity {
                Polarity::Member => Constraint::new(Comparator::Eq, 1),
                Polarity::NotMember => Constraint::new(Comparator::Eq, 0),
            };
            let mut ops = vec![BagOp::Increment(0); k];
            if let SetOp::Insert(j) = t.op {
                ops[j - 1] = BagOp::Reset(1);
            }
            CcaTransition {
                source: t.source.clone(),
                letter: t.letter.clone(),
                constraints,
                ops,
                target: t.target.clone(),
            }
        })
        .collect();
    Cca {
        states: a.states.clone(),
        alphabet: a.alphabet.clone(),
        bag_count: k,
        initial: a.initial.clone(),
        finals: a.finals.clone(),
        transitions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::semantics::accepts;

    fn w(s: &str) -> DataWord {
        s.parse().unwrap()
    }

    #[test]
    fn translated_fig1() {
        let c = safa_to_cca(&fixtures::fig1());
        assert!(c.validate().is_empty());
        assert!(cca_accepts(&c, &w("a:1 a:2")));
        assert!(!cca_accepts(&c, &w("a:1 a:1")));
        assert_eq!(c.transitions[0].constraints, vec![Constraint::new(Comparator::Eq, 0)]);
        assert_eq!(c.transitions[0].ops, vec![BagOp::Reset(1)]);
    }

    #[test]
    fn translated_fig2_agrees() {
        let a = fixtures::fig2();
        let c = safa_to_cca(&a);
        for s in ["a:1", "a:1 a:1", "a:1 a:2 a:1", "a:1 a:1 a:2 a:2", ""] {
            assert_eq!(cca_accepts(&c, &w(s)), accepts(&a, &w(s)).unwrap(), "{s}");
            assert!(max_bag_count(&c, &w(s)) <= 1);
        }
    }

    #[test]
    fn no_transitions_accepts_epsilon_only() {
        let c = Cca {
            states: vec!["q".into()],
            alphabet: vec!["a".into()],
            bag_count: 1,
            initial: "q".into(),
            finals: BTreeSet::from(["q".to_string()]),
            transitions: vec![],
        };
        assert!(cca_accepts(&c, &DataWord::new()));
        assert!(!cca_accepts(&c, &w("a:1")));
    }

    #[test]
    fn counting_beyond_one() {
        // accepts words in which some value occurs at least three times,
        // checked on the last occurrence
        let t = |cmp, e, op, dst: &str| CcaTransition {
            source: "q".into(),
            letter: "a".into(),
            constraints: vec![Constraint::new(cmp, e)],
            ops: vec![op],
            target: dst.into(),
        };
        let c = Cca {
            states: vec!["q".into(), "f".into()],
            alphabet: vec!["a".into()],
            bag_count: 1,
            initial: "q".into(),
            finals: BTreeSet::from(["f".to_string()]),
            transitions: vec![t(Comparator::Ge, 0, BagOp::Increment(1), "q"), t(Comparator::Ge, 2, BagOp::Increment(0), "f")],
        };
        assert!(cca_accepts(&c, &w("a:1 a:2 a:1 a:1")));
        assert!(!cca_accepts(&c, &w("a:1 a:2 a:1 a:2")));
        assert_eq!(max_bag_count(&c, &w("a:1 a:1 a:1")), 3);
    }

    #[test]
    fn constraint_and_op_syntax() {
        for s in ["<3", ">0", "=1", "<=2", ">=0", "!=4"] {
            assert_eq!(s.parse::<Constraint>().unwrap().to_string(), s);
        }
        for s in ["+0", "+2", "=1"] {
            assert_eq!(s.parse::<BagOp>().unwrap().to_string(), s);
        }
        assert!("~1".parse::<Constraint>().is_err());
        assert!("*1".parse::<BagOp>().is_err());
    }

    #[test]
    fn zero_sets_translate_to_zero_bags() {
        let a = fixtures::epsilon_only(&["a".to_string()]);
        let c = safa_to_cca(&a);
        assert_eq!(c.bag_count, 0);
        assert!(cca_accepts(&c, &DataWord::new()));
    }
}
