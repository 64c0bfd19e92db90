//! Property suites for the ballot layer: the text form round-trips, margins
//! obey their arithmetic laws, and every structural transform moves margins
//! exactly the way it claims to.

mod common;

use common::{profiles, profiles_with_subset};
use proptest::prelude::*;
use splitcycle::ballots::{
    add_reversed_pair, condorcet_winner, format_profile, lift_adjacent, margin, parse_profile,
    permute_candidates, permute_voters, replicate, restrict, Candidate, Profile,
};

fn all_pairs(p: &Profile) -> Vec<(Candidate, Candidate)> {
    let cs = p.candidates();
    let mut out = Vec::new();
    for x in cs {
        for y in cs {
            if x != y {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn text_form_round_trips(p in profiles(5, 7)) {
        // formatting groups equal ballots by first occurrence, so the
        // round trip preserves the anonymous form, not voter order
        let parsed = parse_profile(&format_profile(&p)).unwrap();
        prop_assert_eq!(parsed.anonymized(), p.anonymized());
        prop_assert_eq!(parsed.margin_matrix(), p.margin_matrix());
    }

    #[test]
    fn margins_are_antisymmetric_bounded_and_parity_locked(p in profiles(5, 7)) {
        let n = p.voter_count() as i64;
        for (x, y) in all_pairs(&p) {
            let m = margin(&p, &x, &y).unwrap();
            prop_assert_eq!(m, -margin(&p, &y, &x).unwrap());
            prop_assert!(m.abs() <= n);
            // each voter contributes +1 or -1, so margin and n share parity
            prop_assert_eq!((m - n) % 2, 0);
        }
    }

    #[test]
    fn margin_matrix_agrees_with_pairwise_margins(p in profiles(5, 6)) {
        let w = p.margin_matrix();
        let cs = p.candidates();
        for (i, x) in cs.iter().enumerate() {
            prop_assert_eq!(w[i][i], 0);
            for (j, y) in cs.iter().enumerate() {
                if i != j {
                    prop_assert_eq!(w[i][j], margin(&p, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn restriction_keeps_margins_and_voters((p, keep) in profiles_with_subset(5, 6)) {
        let q = restrict(&p, &keep).unwrap();
        prop_assert_eq!(q.candidates(), keep.as_slice());
        prop_assert_eq!(q.voter_count(), p.voter_count());
        for x in &keep {
            for y in &keep {
                if x != y {
                    prop_assert_eq!(margin(&q, x, y).unwrap(), margin(&p, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn replication_scales_margins(p in profiles(4, 5), k in 1u32..=4) {
        let q = replicate(&p, k).unwrap();
        prop_assert_eq!(q.voter_count(), p.voter_count() * k as usize);
        for (x, y) in all_pairs(&p) {
            prop_assert_eq!(
                margin(&q, &x, &y).unwrap(),
                k as i64 * margin(&p, &x, &y).unwrap()
            );
        }
    }

    #[test]
    fn reversed_pairs_leave_margins_alone(p in profiles(4, 5), pick in any::<prop::sample::Index>()) {
        let b = p.ballot(pick.index(p.voter_count())).unwrap();
        let q = add_reversed_pair(&p, &b).unwrap();
        prop_assert_eq!(q.voter_count(), p.voter_count() + 2);
        for (x, y) in all_pairs(&p) {
            prop_assert_eq!(margin(&q, &x, &y).unwrap(), margin(&p, &x, &y).unwrap());
        }
    }

    #[test]
    fn voter_permutations_fix_margins_and_the_anonymous_form(p in profiles(4, 6)) {
        // deterministic nontrivial permutation: rotate by one
        let n = p.voter_count();
        let perm: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
        let q = permute_voters(&p, &perm).unwrap();
        prop_assert_eq!(q.anonymized(), p.anonymized());
        for (x, y) in all_pairs(&p) {
            prop_assert_eq!(margin(&q, &x, &y).unwrap(), margin(&p, &x, &y).unwrap());
        }
    }

    #[test]
    fn candidate_permutations_conjugate_margins(p in profiles(5, 5), rot in 1usize..5) {
        let cs = p.candidates().to_vec();
        let m = cs.len();
        let rot = rot % m;
        let mapping: Vec<(Candidate, Candidate)> = (0..m)
            .map(|i| (cs[i].clone(), cs[(i + rot) % m].clone()))
            .collect();
        let image = |c: &Candidate| {
            let i = cs.iter().position(|d| d == c).unwrap();
            cs[(i + rot) % m].clone()
        };
        let q = permute_candidates(&p, &mapping).unwrap();
        for (x, y) in all_pairs(&p) {
            prop_assert_eq!(
                margin(&q, &x, &y).unwrap(),
                margin(&p, &image(&x), &image(&y)).unwrap()
            );
        }
    }

    #[test]
    fn adjacent_lifts_move_one_margin_by_two(
        p in profiles(5, 5),
        voter_pick in any::<prop::sample::Index>(),
        cand_pick in any::<prop::sample::Index>(),
    ) {
        let voter = voter_pick.index(p.voter_count());
        let x = p.candidates()[cand_pick.index(p.candidate_count())].clone();
        match lift_adjacent(&p, voter, &x).unwrap() {
            None => {
                let b = p.ballot(voter).unwrap();
                prop_assert_eq!(&b.ranking()[0], &x);
            }
            Some(q) => {
                // exactly one opponent loses one voter's comparison against x
                let mut changed = Vec::new();
                for (u, v) in all_pairs(&p) {
                    let before = margin(&p, &u, &v).unwrap();
                    let after = margin(&q, &u, &v).unwrap();
                    if before != after {
                        changed.push(((u, v), after - before));
                    }
                }
                prop_assert_eq!(changed.len(), 2);
                for ((u, v), delta) in changed {
                    if u == x {
                        prop_assert_eq!(delta, 2);
                        prop_assert_ne!(v, x.clone());
                    } else {
                        prop_assert_eq!(v, x.clone());
                        prop_assert_eq!(delta, -2);
                    }
                }
            }
        }
    }

    #[test]
    fn majority_champion_is_detected_exactly(p in profiles(4, 5)) {
        let expected = p.candidates().iter().find(|x| {
            p.candidates()
                .iter()
                .filter(|y| y != x)
                .all(|y| margin(&p, x, y).unwrap() > 0)
        });
        let got = condorcet_winner(&p);
        prop_assert_eq!(got.as_ref(), expected);
    }
}
