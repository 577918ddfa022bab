//! Comparison models: k-register automata and k-bag class counting automata.

pub mod cca;
pub mod register;

pub use cca::{cca_accepts, safa_to_cca, BagOp, Cca, CcaTransition, Comparator, Constraint};
pub use register::{register_accepts, RegisterAutomaton};
