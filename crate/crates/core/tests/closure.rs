mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{all_words, split_accepts, strings};
use safa::fixtures::{self, Language};
use safa::random::{random_dsafa, random_nfa, random_safa, random_word, Envelope};
use safa::{accepts, complement, concat, lift_regular, union, DataWord, Nfa, Safa};

fn one_letter_fixtures() -> Vec<Safa> {
    vec![fixtures::fig2(), fixtures::fig3_simple(), fixtures::fig5_pair()]
}

fn two_letter_fixtures() -> Vec<Safa> {
    vec![fixtures::fig1(), fixtures::fig6()]
}

fn pairs(group: &[Safa]) -> Vec<(Safa, Safa)> {
    group.iter().flat_map(|a| group.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

#[test]
fn union_and_concat_on_fixture_pairs() {
    for group in [one_letter_fixtures(), two_letter_fixtures()] {
        let words = all_words(&group[0].alphabet, &[1, 2], 4);
        for (a, b) in pairs(&group) {
            let u = union(&a, &b).unwrap();
            let c = concat(&a, &b).unwrap();
            assert!(u.validate().is_empty() && c.validate().is_empty());
            for w in &words {
                let (in_a, in_b) = (accepts(&a, w).unwrap(), accepts(&b, w).unwrap());
                assert_eq!(accepts(&u, w).unwrap(), in_a || in_b, "union on `{w}`");
                assert_eq!(accepts(&c, w).unwrap(), split_accepts(&a, &b, w), "concat on `{w}`");
            }
        }
    }
}

#[test]
fn union_against_language_predicates() {
    let u = union(&fixtures::fig1(), &fixtures::fig6()).unwrap();
    let (fd, aeb) = (Language::FdA("a".into()), Language::AExistsB);
    for w in all_words(&strings(&["a", "b"]), &[1, 2, 3], 4) {
        assert_eq!(accepts(&u, &w).unwrap(), fd.contains(&w) || aeb.contains(&w));
    }
}

#[test]
fn pair_concat_is_two_blocks() {
    let pair = fixtures::fig5_pair();
    let c = concat(&pair, &pair).unwrap();
    for w in all_words(&strings(&["a"]), &[1, 2, 3], 5) {
        let expected = w.len() == 4 && Language::Pairs.contains(&w);
        assert_eq!(accepts(&c, &w).unwrap(), expected, "`{w}`");
    }
}

#[test]
fn complement_on_deterministic_fixtures() {
    for a in [fixtures::fig1(), fixtures::fig6(), fixtures::hierarchy_safa(2)] {
        let c = complement(&a).unwrap();
        assert!(c.is_deterministic());
        let cc = complement(&c).unwrap();
        for w in all_words(&a.alphabet, &[1, 2], 4) {
            let inside = accepts(&a, &w).unwrap();
            assert_eq!(accepts(&c, &w).unwrap(), !inside, "`{w}`");
            assert_eq!(accepts(&cc, &w).unwrap(), inside);
        }
    }
}

#[test]
fn lift_depends_on_letters_only() {
    let n = Nfa {
        states: strings(&["0", "1"]),
        alphabet: strings(&["a", "b"]),
        initial: "0".into(),
        finals: BTreeSet::from(["1".to_string()]),
        transitions: vec![
            ("0".into(), "a".into(), "0".into()),
            ("0".into(), "b".into(), "1".into()),
            ("1".into(), "b".into(), "1".into()),
        ],
    };
    let s = lift_regular(&n);
    for w in all_words(&n.alphabet, &[1, 2], 4) {
        let letters: Vec<String> = w.letters().map(str::to_string).collect();
        assert_eq!(accepts(&s, &w).unwrap(), n.accepts(&letters));
    }
}

fn env() -> Envelope {
    Envelope { max_states: 3, ..Envelope::default() }
}

proptest! {
    #[test]
    fn random_union_concat(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_safa(&mut rng, &env());
        let mut b = random_safa(&mut rng, &env());
        b.alphabet = a.alphabet.clone();
        b.transitions.retain(|t| a.alphabet.contains(&t.letter));
        let (u, c) = (union(&a, &b).unwrap(), concat(&a, &b).unwrap());
        for _ in 0..20 {
            let w = random_word(&mut rng, &a.alphabet, 4, 2);
            prop_assert_eq!(accepts(&u, &w).unwrap(), accepts(&a, &w).unwrap() || accepts(&b, &w).unwrap());
            prop_assert_eq!(accepts(&c, &w).unwrap(), split_accepts(&a, &b, &w));
        }
    }

    #[test]
    fn random_complement(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_dsafa(&mut rng, &env());
        let c = complement(&a).unwrap();
        prop_assert!(c.is_deterministic());
        for _ in 0..20 {
            let w = random_word(&mut rng, &a.alphabet, 5, 3);
            prop_assert_eq!(accepts(&c, &w).unwrap(), !accepts(&a, &w).unwrap());
        }
    }

    #[test]
    fn random_lift_ignores_data(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let n = random_nfa(&mut rng, &env());
        let s = lift_regular(&n);
        let w = random_word(&mut rng, &n.alphabet, 5, 3);
        let flat = DataWord::from_items(w.letters().map(|l| (l.to_string(), 1u64)).collect::<Vec<_>>());
        let letters: Vec<String> = w.letters().map(str::to_string).collect();
        prop_assert_eq!(accepts(&s, &w).unwrap(), n.accepts(&letters));
        prop_assert_eq!(accepts(&s, &w).unwrap(), accepts(&s, &flat).unwrap());
    }
}
