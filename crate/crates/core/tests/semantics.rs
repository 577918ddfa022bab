mod common;

use std::collections::HashMap;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use common::{all_words, brute_accepts, strings, word};
use safa::fixtures::{self, Language};
use safa::random::{random_dsafa, random_injection, random_safa, random_word, Envelope};
use safa::semantics::replay;
use safa::{accepts, find_accepting_run, pump, run_deterministic, DataValue, DataWord, Error, Safa};

fn loop_fixtures() -> Vec<(&'static str, Safa)> {
    vec![
        ("fig1", fixtures::fig1()),
        ("fig2", fixtures::fig2()),
        ("fig3_simple", fixtures::fig3_simple()),
        ("fig5_pair", fixtures::fig5_pair()),
        ("fig6", fixtures::fig6()),
        ("hierarchy(2)", fixtures::hierarchy_safa(2)),
    ]
}

#[test]
fn memoised_search_matches_run_enumeration() {
    for (name, a) in loop_fixtures() {
        let letters: Vec<String> = a.alphabet.iter().take(2).cloned().collect();
        for w in all_words(&letters, &[1, 2, 3], 5) {
            assert_eq!(accepts(&a, &w).unwrap(), brute_accepts(&a, &w), "{name} on `{w}`");
        }
    }
}

#[test]
fn deterministic_simulation_matches_search() {
    for a in [fixtures::fig1(), fixtures::fig6(), fixtures::hierarchy_safa(2)] {
        for w in all_words(&a.alphabet, &[1, 2, 3], 4) {
            let r = run_deterministic(&a, &w).unwrap();
            assert_eq!(r.accepted, accepts(&a, &w).unwrap(), "`{w}`");
            match r.stuck_at {
                Some(pos) => assert_eq!(r.run.steps.len(), pos),
                None => assert_eq!(r.run.steps.len(), w.len()),
            }
        }
    }
    assert!(matches!(run_deterministic(&fixtures::fig2(), &word("a:1")), Err(Error::NotDeterministic)));
}

#[test]
fn deterministic_run_examples() {
    let r = run_deterministic(&fixtures::fig1(), &word("a:1 a:2")).unwrap();
    assert!(r.accepted);
    assert_eq!(r.run.last().to_string(), "q0 h1={1,2}");

    let r = run_deterministic(&fixtures::fig6(), &word("a:1")).unwrap();
    assert!(!r.accepted);
    assert_eq!(r.run.last().state, "q1");

    assert!(run_deterministic(&fixtures::fig6(), &word("b:1 a:1")).unwrap().accepted);
}

#[test]
fn accepting_runs_replay_and_grow_sets() {
    for (name, a) in loop_fixtures() {
        let letters: Vec<String> = a.alphabet.iter().take(2).cloned().collect();
        for w in all_words(&letters, &[1, 2], 4) {
            let run = find_accepting_run(&a, &w).unwrap();
            assert_eq!(run.is_some(), accepts(&a, &w).unwrap(), "{name} `{w}`");
            let Some(run) = run else { continue };
            assert_eq!(run.word(&a), w);
            assert!(a.is_final(&run.last().state));
            let transitions: Vec<usize> = run.steps.iter().map(|s| s.0).collect();
            assert_eq!(replay(&a, &w, &transitions).as_ref(), Some(&run));
            for pair in run.configs.windows(2) {
                for (before, after) in pair[0].sets.iter().zip(&pair[1].sets) {
                    assert!(before.is_subset(after));
                }
            }
        }
    }
}

#[test]
fn guessing_run_for_single_value() {
    let a = fixtures::fig2();
    let run = find_accepting_run(&a, &word("a:1")).unwrap().unwrap();
    assert_eq!(run.last().to_string(), "q1 h1={} h2={1}");
    assert!(find_accepting_run(&a, &word("a:1 a:1")).unwrap().is_none());
    assert!(find_accepting_run(&fixtures::fig5_pair(), &DataWord::new()).unwrap().is_none());
}

#[test]
fn pump_outputs_are_accepted_on_fixtures() {
    for (name, a) in loop_fixtures() {
        let letters: Vec<String> = a.alphabet.iter().take(2).cloned().collect();
        let n = a.states.len();
        for w in all_words(&letters, &[1, 2, 3], n.max(3)) {
            if w.len() < n || !accepts(&a, &w).unwrap() {
                continue;
            }
            for ell in 1..=3 {
                let out = pump(&a, &w, ell).unwrap_or_else(|e| panic!("{name} `{w}` ell {ell}: {e}"));
                assert_eq!(out.len(), ell);
                for (k, p) in out.iter().enumerate() {
                    assert!(p.len() > w.len() + k, "{name} `{w}`: pumped word `{p}` too short");
                    assert!(accepts(&a, p).unwrap());
                }
            }
        }
    }
}

#[test]
fn pump_examples_and_preconditions() {
    let out = pump(&fixtures::fig1(), &word("a:1 a:2"), 1).unwrap();
    assert_eq!(out, vec![word("a:1 a:3 a:4")]);
    assert!(out[0].same_shape(&word("a:1 a:3 a:2")));

    let out = pump(&fixtures::fig3_simple(), &word("a:1 a:1"), 2).unwrap();
    assert_eq!(out[1].len(), 4);

    assert!(matches!(pump(&fixtures::fig1(), &word("a:1 a:2"), 0), Err(Error::ZeroPump)));
    assert!(matches!(pump(&fixtures::fig1(), &word("a:1 a:1"), 1), Err(Error::NotAccepted)));
    assert!(matches!(pump(&fixtures::fig1(), &word("a:1"), 1), Err(Error::WordTooShort { .. })));
}

#[test]
fn fixtures_match_reference_languages() {
    for (name, lang) in [
        ("fig1", Language::FdA("a".into())),
        ("fig6", Language::AExistsB),
        ("fig5_pair", Language::Pair),
    ] {
        let a = match fixtures::fixture(name).unwrap() {
            fixtures::Fixture::Safa(a) => a,
            _ => unreachable!(),
        };
        for w in all_words(&a.alphabet, &[1, 2, 3], 4) {
            assert_eq!(accepts(&a, &w).unwrap(), lang.contains(&w), "{name} `{w}`");
        }
    }
    let k1 = fixtures::hierarchy_safa(1);
    for w in all_words(&strings(&["a1"]), &[1, 2, 3], 5) {
        let as_a: DataWord = DataWord::from_items(w.iter().map(|(_, d)| ("a", d.0)));
        assert_eq!(accepts(&k1, &w).unwrap(), Language::FdA("a".into()).contains(&as_a));
    }
}

fn seeded_safa(seed: u64, deterministic: bool) -> Safa {
    let mut rng = StdRng::seed_from_u64(seed);
    if deterministic {
        random_dsafa(&mut rng, &Envelope::default())
    } else {
        random_safa(&mut rng, &Envelope::default())
    }
}

proptest! {
    #[test]
    fn acceptance_is_invariant_under_renaming(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_safa(&mut rng, &Envelope::default());
        let w = random_word(&mut rng, &a.alphabet, 6, 4);
        let pi = random_injection(&mut rng, &w, 50);
        prop_assert_eq!(accepts(&a, &w).unwrap(), accepts(&a, &w.rename_data(&pi).unwrap()).unwrap());
    }

    #[test]
    fn determinism_ignores_transition_order(seed in any::<u64>(), deterministic in any::<bool>()) {
        let a = seeded_safa(seed, deterministic);
        let mut b = a.clone();
        b.transitions.shuffle(&mut StdRng::seed_from_u64(seed ^ 0x5eed));
        prop_assert_eq!(a.is_deterministic(), b.is_deterministic());
        if deterministic {
            prop_assert!(a.is_deterministic());
        }
    }

    #[test]
    fn random_memoised_search_matches_enumeration(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_safa(&mut rng, &Envelope::default());
        let w = random_word(&mut rng, &a.alphabet, 5, 3);
        prop_assert_eq!(accepts(&a, &w).unwrap(), brute_accepts(&a, &w));
    }

    #[test]
    fn random_deterministic_simulation_matches_search(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_dsafa(&mut rng, &Envelope::default());
        let w = random_word(&mut rng, &a.alphabet, 6, 3);
        prop_assert_eq!(run_deterministic(&a, &w).unwrap().accepted, accepts(&a, &w).unwrap());
    }

    #[test]
    fn renaming_by_identity_changes_nothing(data in proptest::collection::vec(1u64..20, 0..8)) {
        let w = DataWord::from_items(data.iter().map(|&d| ("a", d)));
        let id: HashMap<DataValue, DataValue> = data.iter().map(|&d| (DataValue(d), DataValue(d))).collect();
        prop_assert_eq!(w.rename_data(&id).unwrap(), w);
    }
}
