//! Set augmented finite automata (SAFA) over data words.
//!
//! A SAFA is a finite automaton with a fixed number of sets of data values.
//! Each transition reads a letter together with a datum, tests whether the
//! datum is (`p(h_i)`) or is not (`!p(h_i)`) in one set, and may insert it
//! into one set.
//!
//! ```
//! use safa::{accepts, fixtures, DataWord};
//!
//! // all data values carried by `a` are distinct
//! let a = fixtures::fig1();
//! assert!(accepts(&a, &"a:1 b:1 a:2".parse::<DataWord>().unwrap()).unwrap());
//! assert!(!accepts(&a, &"a:1 a:1".parse::<DataWord>().unwrap()).unwrap());
//! ```

mod error;

pub mod automaton;
pub mod cli;
pub mod closure;
pub mod emptiness;
pub mod fixtures;
pub mod format;
pub mod models;
pub mod nfa;
pub mod random;
pub mod reductions;
pub mod semantics;
pub mod word;

pub use automaton::{Guard, Polarity, Safa, SetOp, Transition, ValidationError};
pub use closure::{complement, concat, lift_regular, union};
pub use emptiness::{bounded_run_oracle, is_empty, singleton_product, witness, witness_length_bound};
pub use error::Error;
pub use format::{parse_automaton, Automaton, ParseError};
pub use models::{cca_accepts, register_accepts, safa_to_cca, Cca, RegisterAutomaton};
pub use nfa::Nfa;
pub use reductions::{cnf_to_membership_instance, cnf_to_safa, CnfFormula};
pub use semantics::{accepts, find_accepting_run, pump, run_deterministic, step, Configuration, Run};
pub use word::{parse_word, rename_data, DataValue, DataWord};
