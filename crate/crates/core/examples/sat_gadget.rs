//! Encodes a CNF formula as SAFA emptiness and as SAFA membership, and reads
//! a satisfying assignment back from the witness.
//!
//!     cargo run --example sat_gadget -- crates/core/fixtures/sample.cnf

use safa::reductions::{decode_assignment, parse_dimacs, sample_formula};
use safa::{accepts, cnf_to_membership_instance, cnf_to_safa, witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = match std::env::args().nth(1) {
        Some(path) => parse_dimacs(&std::fs::read_to_string(path)?)?,
        None => sample_formula(),
    };
    print!("formula:\n{f}");

    let a = cnf_to_safa(&f);
    println!("gadget: {} states, {} sets, deterministic {}", a.states.len(), a.set_count, a.is_deterministic());
    match witness(&a)? {
        Some(w) => {
            let assignment = decode_assignment(&f, &w).expect("witness walks the gadget");
            println!("witness {w}\nassignment {assignment:?} satisfies: {}", f.evaluate(&assignment));
        }
        None => println!("empty: unsatisfiable"),
    }

    let (m, w) = cnf_to_membership_instance(&f);
    println!("membership instance: `{w}` accepted {}", accepts(&m, &w)?);
    Ok(())
}
