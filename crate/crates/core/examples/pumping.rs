//! Pumps the first cycle of an accepting run with fresh data.

use safa::fixtures;
use safa::{pump, DataWord};

fn main() -> Result<(), safa::Error> {
    let cases = [
        ("fig1", fixtures::fig1(), "a:1 b:1 a:2"),
        ("fig3_simple", fixtures::fig3_simple(), "a:1 a:1"),
        ("fig2", fixtures::fig2(), "a:1 a:1 a:2 a:3"),
    ];
    for (name, a, text) in cases {
        let w: DataWord = text.parse()?;
        println!("{name}: {w}");
        for (k, p) in pump(&a, &w, 3)?.iter().enumerate() {
            println!("  k={} {p}", k + 1);
        }
    }
    Ok(())
}
