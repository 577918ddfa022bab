//! Register automata and class counting automata next to SAFA.

use safa::fixtures;
use safa::{accepts, cca_accepts, register_accepts, safa_to_cca, DataWord};

fn main() -> Result<(), safa::Error> {
    let contains5 = fixtures::ex7_register(5);
    let pairs = fixtures::ex8_register();
    for text in ["a:3 a:5", "a:3 a:4", "a:7 a:7 a:9 a:9", "a:7 a:8"] {
        let w: DataWord = text.parse()?;
        println!(
            "{text:<18} contains 5: {:<5} pairs: {}",
            register_accepts(&contains5, &w),
            register_accepts(&pairs, &w)
        );
    }

    let a = fixtures::fig6();
    let c = safa_to_cca(&a);
    println!("\n{c}");
    for text in ["b:1 a:1", "a:1 b:1", "b:1 b:2 a:2 a:1"] {
        let w: DataWord = text.parse()?;
        println!("{text:<18} safa {:<5} cca {}", accepts(&a, &w)?, cca_accepts(&c, &w));
    }
    Ok(())
}
