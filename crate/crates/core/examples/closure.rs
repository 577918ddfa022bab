//! Union, concatenation, complement and lifting of a regular language.

use safa::fixtures;
use safa::format::parse_nfa;
use safa::{accepts, complement, concat, lift_regular, union, DataWord};

fn show(label: &str, a: &safa::Safa, words: &[&str]) -> Result<(), safa::Error> {
    for text in words {
        let w: DataWord = text.parse()?;
        println!("{label:<22} {text:<20} {}", accepts(a, &w)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u = union(&fixtures::fig1(), &fixtures::fig6())?;
    show("fd(a) or a-exists-b", &u, &["a:1", "b:1 a:1 a:1", "a:1 a:1"])?;

    let pair = fixtures::fig5_pair();
    let twice = concat(&pair, &pair)?;
    show("pair . pair", &twice, &["a:1 a:1 a:2 a:2", "a:1 a:1 a:2 a:3", "a:1 a:1"])?;

    let not_fd = complement(&fixtures::fig1())?;
    show("not fd(a)", &not_fd, &["a:1 a:1", "a:1 a:2"])?;

    let nfa = parse_nfa("nfa\nstates: 0 1\nalphabet: a b\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 1 b 1\n")?;
    let ab_star = lift_regular(&nfa);
    show("a b*", &ab_star, &["a:3 b:3 b:9", "b:3"])?;

    println!("\ncomplement of fd(a):\n{not_fd}");
    Ok(())
}
