//! Ignored search tools that rediscover the counterexample domains the
//! acceptance suite is configured with. Run with
//! `cargo test --test counterexample_search --release -- --ignored --nocapture`.

use splitcycle::axioms::{check_axiom, AxiomId, CheckStatus};
use splitcycle::ballots::{candidates, format_profile, ProfileDomain};
use splitcycle::methods::MethodId;

/// Scans 3-candidate multiset domains by voter count. No violation exists
/// below 10 voters; the first appears at exactly 10.
#[test]
#[ignore]
fn find_hare_monotonicity_failure() {
    let roster = candidates(&["a", "b", "c"]).unwrap();
    for n in 3..=11u32 {
        let d = ProfileDomain::exhaustive_multiset(roster.clone(), n..=n).unwrap();
        let v = check_axiom(AxiomId::Monotonicity, MethodId::Hare, &d).unwrap();
        println!("hare monotonicity, {n} voters: {:?}", v.status);
        if v.status == CheckStatus::Counterexample {
            let w = v.witness.unwrap();
            println!("base:\n{}", format_profile(&w.profiles[0]));
            println!("lifted:\n{}", format_profile(&w.profiles[1]));
            println!("pair: {:?} detail: {:?}", w.candidates, w.detail);
            return;
        }
    }
    panic!("no failure found up to 11 voters");
}

/// Finds the first Borda flip across coherent-related pairs; it already
/// shows up with two voters and three candidates.
#[test]
#[ignore]
fn find_borda_coherent_iia_failure() {
    let roster = candidates(&["a", "b", "c"]).unwrap();
    for hi in 2..=4u32 {
        let d = ProfileDomain::exhaustive_multiset(roster.clone(), 1..=hi).unwrap();
        let v = check_axiom(AxiomId::CoherentIia, MethodId::Borda, &d).unwrap();
        println!("borda coherent_iia, 1..={hi} voters: {:?}", v.status);
        if v.status == CheckStatus::Counterexample {
            let w = v.witness.unwrap();
            println!("P:\n{}", format_profile(&w.profiles[0]));
            println!("P2:\n{}", format_profile(&w.profiles[1]));
            println!("pair: {:?}", w.candidates);
            return;
        }
    }
    panic!("no failure found");
}
