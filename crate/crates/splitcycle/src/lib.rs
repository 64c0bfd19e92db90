//! Ranked-ballot election analysis.
//!
//! The crate is organized in four layers:
//!
//! - [`ballots`]: profiles of strict ranked ballots, the `.vote` text form,
//!   structural transforms (restriction, replication, permutations), pairwise
//!   margins, and exhaustive or seeded-random domain enumeration.
//! - [`graphs`]: margin graphs and their views, simple cycle enumeration,
//!   splitting numbers, widest paths, a McGarvey-style profile synthesizer,
//!   and DOT rendering.
//! - [`methods`]: a registry of collective choice rules mapping profiles to
//!   defeat relations, four independent formulations of Split Cycle, choice
//!   sets, and resoluteness comparison.
//! - [`axioms`]: an axiom checker that scans profile domains for
//!   counterexamples to defeat-level and choice-level conditions, plus a
//!   suite of built-in replayable witnesses.
//!
//! The crate is `no_std` (with `alloc`); file IO, JSON wire formats, and the
//! command line live in the companion `splitcycle-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod axioms;
pub mod ballots;
pub mod graphs;
pub mod methods;
