//! Writes every fixture in the text format.
//!
//!     cargo run --example export_fixtures -- crates/core/fixtures

use std::fs;
use std::path::PathBuf;

use safa::fixtures::{self, Fixture, FIXTURE_NAMES};
use safa::reductions::sample_formula;
use safa::safa_to_cca;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    fs::create_dir_all(&dir)?;
    for name in FIXTURE_NAMES {
        let (file, text) = match fixtures::fixture(name).expect("listed fixture exists") {
            Fixture::Safa(a) => (format!("{name}.safa"), a.to_string()),
            Fixture::Register(r) => (format!("{}.reg", name.trim_end_matches("(5)")), r.to_string()),
        };
        fs::write(dir.join(&file), text)?;
        println!("wrote {}", dir.join(file).display());
    }
    let extras = [
        ("hierarchy3.safa", fixtures::hierarchy_safa(3).to_string()),
        ("fig1.cca", safa_to_cca(&fixtures::fig1()).to_string()),
        ("sample.cnf", sample_formula().to_dimacs()),
        ("a_then_bs.nfa", "nfa\nstates: 0 1\nalphabet: a b\ninitial: 0\nfinal: 1\ntrans: 0 a 1\ntrans: 1 b 1\n".into()),
    ];
    for (file, text) in extras {
        fs::write(dir.join(file), text)?;
        println!("wrote {}", dir.join(file).display());
    }
    Ok(())
}
