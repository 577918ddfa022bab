//! Membership: nondeterministic search, deterministic simulation and the
//! accepting run behind a verdict.

use safa::fixtures;
use safa::{accepts, find_accepting_run, run_deterministic, DataWord};

fn main() -> Result<(), safa::Error> {
    // distinct a-values, deterministic
    let fd = fixtures::fig1();
    for text in ["a:1 b:1 a:2 b:2", "a:1 a:2 b:1 b:5 a:2 a:5 a:7 a:100"] {
        let w: DataWord = text.parse()?;
        let r = run_deterministic(&fd, &w)?;
        println!("fd(a)  {text:<36} accepted={} final={}", r.accepted, r.run.last());
    }

    // some value does not occur exactly twice: the automaton guesses it
    let cnt = fixtures::fig2();
    for text in ["a:1 a:1 a:2 a:2", "a:1 a:1 a:2", "a:4 a:4 a:4"] {
        let w: DataWord = text.parse()?;
        print!("cnt!=2 {text:<20} {}", if accepts(&cnt, &w)? { "ACCEPT" } else { "REJECT" });
        if let Some(run) = find_accepting_run(&cnt, &w)? {
            print!("  via {}", run.states().collect::<Vec<_>>().join(" "));
        }
        println!();
    }
    Ok(())
}
