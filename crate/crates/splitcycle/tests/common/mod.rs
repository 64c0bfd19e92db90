#![allow(dead_code)]

use proptest::prelude::*;
use splitcycle::ballots::{candidates, Ballot, Candidate, Profile};

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn roster(m: usize) -> Vec<Candidate> {
    candidates(&NAMES[..m]).unwrap()
}

pub fn profile_from_rows(m: usize, rows: &[Vec<u32>]) -> Profile {
    let names = roster(m);
    let ballots = rows
        .iter()
        .map(|row| {
            Ballot::new(row.iter().map(|&i| names[i as usize].clone()).collect()).unwrap()
        })
        .collect();
    Profile::new(names, ballots).unwrap()
}

/// Profiles over the first 2..=max_m fixed names with 1..=max_n voters,
/// each ballot an independent uniform permutation.
pub fn profiles(max_m: usize, max_n: usize) -> impl Strategy<Value = Profile> {
    (2..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        let base: Vec<u32> = (0..m as u32).collect();
        proptest::collection::vec(Just(base).prop_shuffle(), n)
            .prop_map(move |rows| profile_from_rows(m, &rows))
    })
}

/// A profile plus a nonempty candidate subset of its roster.
pub fn profiles_with_subset(
    max_m: usize,
    max_n: usize,
) -> impl Strategy<Value = (Profile, Vec<Candidate>)> {
    profiles(max_m, max_n).prop_flat_map(|p| {
        let m = p.candidate_count();
        (Just(p), 1u32..(1 << m)).prop_map(|(p, mask)| {
            let keep: Vec<Candidate> = p
                .candidates()
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, c)| c.clone())
                .collect();
            (p, keep)
        })
    })
}
