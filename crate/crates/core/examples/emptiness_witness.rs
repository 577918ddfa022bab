//! Emptiness with witnesses, cross-checked against the bounded search and,
//! for one-set automata, the three-automaton product.

use safa::emptiness::DEFAULT_ORACLE_DEPTH;
use safa::fixtures;
use safa::{bounded_run_oracle, is_empty, singleton_product, witness, witness_length_bound};

fn main() -> Result<(), safa::Error> {
    let cases = [
        ("fig1", fixtures::fig1()),
        ("fig2", fixtures::fig2()),
        ("fig3_simple", fixtures::fig3_simple()),
        ("fig5_pair", fixtures::fig5_pair()),
        ("never", fixtures::empty_language(&["a".into()])),
    ];
    for (name, a) in &cases {
        let verdict = match witness(a)? {
            Some(w) => format!("NONEMPTY witness `{w}` (bound {})", witness_length_bound(a)),
            None => "EMPTY".to_string(),
        };
        let oracle = bounded_run_oracle(a, DEFAULT_ORACLE_DEPTH)?;
        println!("{name:<12} {verdict:<40} oracle agrees: {}", oracle == is_empty(a)?);
    }

    let p = singleton_product(&fixtures::fig3_simple())?;
    println!("\nproduct for fig3_simple:");
    for (s, l, t) in &p.m3.transitions {
        println!("  {s} --{l}--> {t}");
    }
    Ok(())
}
