mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{all_words, strings};
use safa::fixtures::{self, Language};
use safa::models::cca::max_bag_count;
use safa::random::{random_safa, random_word, Envelope};
use safa::{accepts, cca_accepts, register_accepts, safa_to_cca, DataValue, Safa};

fn all_safa_fixtures() -> Vec<Safa> {
    vec![
        fixtures::fig1(),
        fixtures::fig2(),
        fixtures::fig3_simple(),
        fixtures::fig5_pair(),
        fixtures::fig6(),
        fixtures::hierarchy_safa(2),
    ]
}

#[test]
fn translation_agrees_on_fixtures() {
    for a in all_safa_fixtures() {
        let c = safa_to_cca(&a);
        assert_eq!(c.bag_count, a.set_count);
        for w in all_words(&a.alphabet, &[1, 2, 3], 3) {
            assert_eq!(cca_accepts(&c, &w), accepts(&a, &w).unwrap(), "`{w}`");
            assert!(max_bag_count(&c, &w) <= 1);
        }
    }
}

#[test]
fn register_fixtures_match_languages() {
    let words = all_words(&strings(&["a"]), &[3, 4, 5], 4);
    let (ex7, ex8) = (fixtures::ex7_register(5), fixtures::ex8_register());
    for w in &words {
        assert_eq!(register_accepts(&ex7, w), Language::ContainsD(DataValue(5)).contains(w), "`{w}`");
        assert_eq!(register_accepts(&ex8, w), Language::Pairs.contains(w), "`{w}`");
    }
}

#[test]
fn register_datum_is_a_parameter() {
    let r = fixtures::ex7_register(9);
    assert!(register_accepts(&r, &common::word("a:1 a:9")));
    assert!(!register_accepts(&r, &common::word("a:1 a:5")));
}

proptest! {
    #[test]
    fn translation_agrees_on_random(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_safa(&mut rng, &Envelope::default());
        let c = safa_to_cca(&a);
        for _ in 0..10 {
            let w = random_word(&mut rng, &a.alphabet, 5, 3);
            prop_assert_eq!(cca_accepts(&c, &w), accepts(&a, &w).unwrap());
        }
    }
}
