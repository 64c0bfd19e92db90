//! The axiom checker: named defeat-level and choice-level conditions, a
//! scanner that searches profile domains for counterexamples, and a suite
//! of built-in replayable witnesses.

mod check;
mod witnesses;

pub use check::*;
pub use witnesses::*;
