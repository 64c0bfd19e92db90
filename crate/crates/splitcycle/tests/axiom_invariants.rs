//! Cross-cutting invariants of the axiom harness on exhaustive small
//! domains: the flagship rule passes its advertised suite, the coarser
//! independence condition follows from the finer one wherever the finer
//! one holds, global and local choice coincide for the purely pairwise
//! rules, and every verdict is deterministic and replayable.

mod common;

use splitcycle::axioms::{check_axiom, replay_witness, AxiomId, CheckStatus};
use splitcycle::ballots::{candidates, enumerate_profiles, ProfileDomain};
use splitcycle::methods::{global_choice, local_choice, MethodId, ALL_METHODS};

const SUITE: [AxiomId; 8] = [
    AxiomId::Anonymity,
    AxiomId::Neutrality,
    AxiomId::Availability,
    AxiomId::UpwardHomogeneity,
    AxiomId::MonotonicityTwoCandidate,
    AxiomId::NeutralReversalUp,
    AxiomId::NeutralReversalDown,
    AxiomId::CoherentIia,
];

fn domain(max_voters: u32) -> ProfileDomain {
    ProfileDomain::exhaustive_multiset(candidates(&["a", "b", "c"]).unwrap(), 1..=max_voters).unwrap()
}

fn holds(axiom: AxiomId, method: MethodId, d: &ProfileDomain) -> bool {
    let verdict = check_axiom(axiom, method, d).unwrap();
    match verdict.status {
        CheckStatus::HoldsOnDomain => true,
        CheckStatus::Counterexample => {
            let w = verdict.witness.as_ref().expect("counterexamples carry witnesses");
            assert_eq!(replay_witness(axiom, method, w), Ok(true), "{axiom} / {method}");
            false
        }
        CheckStatus::BudgetExceeded => panic!("budget exhausted for {axiom} / {method}"),
    }
}

#[test]
fn split_cycle_passes_its_suite_exhaustively() {
    let d = domain(3);
    for axiom in SUITE {
        assert!(holds(axiom, MethodId::SplitCycle, &d), "{axiom}");
    }
}

#[test]
fn the_resolute_refinements_pass_the_same_suite() {
    let d = domain(2);
    for method in [MethodId::Null, MethodId::GlobalSplit] {
        for axiom in SUITE {
            assert!(holds(axiom, method, &d), "{axiom} / {method}");
        }
    }
}

/// Wherever the margin-respecting independence condition holds, the weaker
/// no-reversal form must hold as well: its premise set is smaller and its
/// forbidden outcome stronger.
#[test]
fn weak_independence_follows_from_coherent_independence() {
    let d = domain(2);
    for method in ALL_METHODS {
        if holds(AxiomId::CoherentIia, method, &d) {
            assert!(holds(AxiomId::WeakIia, method, &d), "{method}");
        }
    }
    assert!(holds(AxiomId::WeakIia, MethodId::SplitCycle, &domain(3)));
}

/// A defeat relation that is acyclic on every profile never loses a chosen
/// element when the menu shrinks under full-profile defeats.
#[test]
fn acyclic_relations_pass_global_subset_consistency() {
    let d = domain(2);
    for method in ALL_METHODS {
        if holds(AxiomId::Acyclicity, method, &d) {
            assert!(holds(AxiomId::GlobalAlpha, method, &d), "{method}");
        }
    }
    assert!(holds(AxiomId::GlobalAlpha, MethodId::SplitCycle, &domain(3)));
    // three voters admit a majority cycle, which pure majority rule keeps
    assert!(!holds(AxiomId::Acyclicity, MethodId::SimpleMajority, &domain(3)));
}

/// Any rule that is anonymous, neutral, monotone on two-candidate profiles,
/// and margin-respecting-independent only defeats with majority backing.
#[test]
fn majority_backing_follows_from_the_four_marked_axioms() {
    let d = domain(2);
    let mut qualifying = 0;
    for method in ALL_METHODS {
        let premises = [
            AxiomId::Anonymity,
            AxiomId::Neutrality,
            AxiomId::MonotonicityTwoCandidate,
            AxiomId::CoherentIia,
        ];
        if premises.iter().all(|&a| holds(a, method, &d)) {
            qualifying += 1;
            assert!(holds(AxiomId::MajorityDefeat, method, &d), "{method}");
        }
    }
    assert!(qualifying >= 2, "expected several qualifying rules, saw {qualifying}");
}

/// The stability premise (no head-to-head loss) subsumes the spoiler
/// premise (head-to-head win over a defeated rival), so the stronger axiom
/// implies the weaker one instance by instance.
#[test]
fn spoiler_immunity_follows_from_strong_stability() {
    let d = domain(3);
    for method in ALL_METHODS {
        if holds(AxiomId::StrongStability, method, &d) {
            assert!(holds(AxiomId::ImmunityToSpoilers, method, &d), "{method}");
        }
    }
    assert!(holds(AxiomId::StrongStability, MethodId::SplitCycle, &d));
    assert!(holds(AxiomId::ImmunityToSpoilers, MethodId::SplitCycle, &d));
}

/// For rules whose defeats depend only on each pair's own ballots, choosing
/// from a menu with full-profile defeats and choosing from the restricted
/// election agree everywhere (including on when the choice set is empty).
#[test]
fn global_and_local_choice_coincide_for_pairwise_rules() {
    let d = domain(3);
    let masks: Vec<Vec<usize>> = (1u32..8)
        .map(|m| (0..3).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    for p in enumerate_profiles(&d).unwrap() {
        let roster = p.candidates().to_vec();
        for mask in &masks {
            let subset: Vec<_> = mask.iter().map(|&i| roster[i].clone()).collect();
            for method in [MethodId::SimpleMajority, MethodId::Pareto] {
                assert_eq!(
                    global_choice(method, &p, &subset).ok(),
                    local_choice(method, &p, &subset).ok(),
                    "{method} on {subset:?}"
                );
            }
        }
    }
}

/// Even a rule with acyclic defeats can dethrone a winner once the menu
/// shrinks: in a perfect majority cycle nobody is defeated, yet each
/// two-candidate sub-election is decided by its majority.
#[test]
fn winner_stability_under_menus_fails_for_split_cycle() {
    let d = ProfileDomain::exhaustive_multiset(candidates(&["a", "b", "c"]).unwrap(), 3..=3).unwrap();
    let verdict = check_axiom(AxiomId::AlphaBar, MethodId::SplitCycle, &d).unwrap();
    assert_eq!(verdict.status, CheckStatus::Counterexample);
    let w = verdict.witness.expect("counterexamples carry witnesses");
    assert_eq!(
        replay_witness(AxiomId::AlphaBar, MethodId::SplitCycle, &w),
        Ok(true)
    );
    assert!(holds(AxiomId::LocalAlpha, MethodId::Null, &d));
}

#[test]
fn verdicts_are_deterministic() {
    let d = domain(2);
    for (axiom, method) in [
        (AxiomId::CoherentIia, MethodId::Borda),
        (AxiomId::Availability, MethodId::SimpleMajority),
        (AxiomId::Neutrality, MethodId::SplitCycle),
        (AxiomId::LocalAlpha, MethodId::Minimax),
    ] {
        let first = check_axiom(axiom, method, &d).unwrap();
        let second = check_axiom(axiom, method, &d).unwrap();
        assert_eq!(first, second, "{axiom} / {method}");
    }
}

/// The sampled-domain path exercises the seeded generator, including the
/// derived-partner route for the betweenness conditions.
#[test]
fn random_domains_are_reproducible_and_checkable() {
    let d = ProfileDomain::random(candidates(&["a", "b", "c", "d"]).unwrap(), 5..=5, 40, 99).unwrap();
    let first = check_axiom(AxiomId::ModifiedIia, MethodId::SplitCycle, &d).unwrap();
    let second = check_axiom(AxiomId::ModifiedIia, MethodId::SplitCycle, &d).unwrap();
    assert_eq!(first, second);
    if let Some(w) = &first.witness {
        assert_eq!(
            replay_witness(AxiomId::ModifiedIia, MethodId::SplitCycle, w),
            Ok(true)
        );
    }
    let pareto = check_axiom(AxiomId::Pareto, MethodId::SplitCycle, &d).unwrap();
    assert_eq!(pareto.status, CheckStatus::HoldsOnDomain);
}
