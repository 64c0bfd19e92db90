//! Canned counterexamples and sanity cases, each a self-contained bundle
//! of concrete profiles plus structured expectations that
//! [`verify_witness`] re-derives from scratch. The built-in suite pins the
//! behaviors the rest of the crate is calibrated against: if an engine
//! change flips one of these, something substantive broke.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::axioms::check::{
    coherent_iia_related, modified_iia_related, replay_witness, AxiomError, AxiomId,
    BetweennessMode, Witness, WitnessDetail,
};
use crate::ballots::{margin, restrict, Candidate, Profile};
use crate::graphs::{mcgarvey, MarginGraph};
use crate::methods::{
    defeat, global_choice, local_choice, DefeatRelation, MethodId, ALL_METHODS,
};

/// One structured check against the case's named profiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// The rule's verdict on one ordered pair.
    Defeats {
        method: MethodId,
        profile: String,
        x: Candidate,
        y: Candidate,
        expected: bool,
    },
    /// The rule's full defeat relation, as sorted ordered pairs.
    RelationEquals {
        method: MethodId,
        profile: String,
        expected: Vec<(Candidate, Candidate)>,
    },
    /// The rule's undefeated set.
    Undefeated {
        method: MethodId,
        profile: String,
        expected: Vec<Candidate>,
    },
    /// Undefeated within a subset under full-profile defeats.
    GlobalChoice {
        method: MethodId,
        profile: String,
        subset: Vec<Candidate>,
        expected: Vec<Candidate>,
    },
    /// Undefeated of the restricted profile.
    LocalChoice {
        method: MethodId,
        profile: String,
        subset: Vec<Candidate>,
        expected: Vec<Candidate>,
    },
    /// Whether the coherent-independence relatedness predicate accepts the
    /// ordered profile pair at (x, y).
    CoherentRelated {
        first: String,
        second: String,
        x: Candidate,
        y: Candidate,
        expected: bool,
    },
    /// Same for the betweenness-based relatedness predicates.
    BetweenRelated {
        mode: BetweennessMode,
        first: String,
        second: String,
        x: Candidate,
        y: Candidate,
        expected: bool,
    },
    /// The named candidates are adjacent on every ballot (one is a clone
    /// of the other: no voter ranks anybody strictly between them).
    ClonePair {
        profile: String,
        x: Candidate,
        y: Candidate,
    },
    /// A recorded axiom violation replays: the instance assembled from the
    /// named profiles, candidates, and detail must reproduce the violation
    /// through [`replay_witness`].
    AxiomViolation {
        axiom: AxiomId,
        method: MethodId,
        profiles: Vec<String>,
        candidates: Vec<Candidate>,
        detail: WitnessDetail,
    },
    /// On this profile, every registry rule that both decides all pair
    /// restrictions by majority and leaves somebody undefeated on every
    /// restriction must break subset consistency of the restricted-profile
    /// choice; at least one rule must qualify, or the claim is vacuous.
    MajorityAlphaClash { profile: String },
    /// The unanimity-plus-edge-advantage rule flips its (x, y) verdict
    /// between two profiles with identical {x, y} restrictions and equal
    /// rosters, breaking fixed-roster independence.
    EdgeAdvantageFiia {
        first: String,
        second: String,
        x: Candidate,
        y: Candidate,
    },
    /// The same rule keeps subset consistency of the restricted-profile
    /// choice on every profile of a small exhaustive domain.
    EdgeAdvantageLocalAlpha {
        candidates: Vec<Candidate>,
        max_voters: u32,
    },
}

/// A named, self-contained bundle of profiles and expectations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCase {
    pub name: String,
    /// One line on what the case demonstrates.
    pub description: String,
    pub profiles: Vec<(String, Profile)>,
    pub expectations: Vec<Expectation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectationReport {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub case: String,
    pub passed: bool,
    pub expectations: Vec<ExpectationReport>,
}

/// Re-derives every expectation of a case from its profiles. Structural
/// problems (an unresolvable profile name, an ill-shaped violation record)
/// are errors; a substantive mismatch is a failed expectation in the
/// report.
pub fn verify_witness(case: &WitnessCase) -> Result<WitnessReport, AxiomError> {
    let mut reports = Vec::with_capacity(case.expectations.len());
    for e in &case.expectations {
        reports.push(verify_expectation(case, e)?);
    }
    Ok(WitnessReport {
        case: case.name.clone(),
        passed: reports.iter().all(|r| r.passed),
        expectations: reports,
    })
}

fn named_profile<'a>(case: &'a WitnessCase, name: &str) -> Result<&'a Profile, AxiomError> {
    case.profiles
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, p)| p)
        .ok_or_else(|| AxiomError::UnknownProfile(name.to_string()))
}

fn verify_expectation(
    case: &WitnessCase,
    e: &Expectation,
) -> Result<ExpectationReport, AxiomError> {
    let (label, passed) = match e {
        Expectation::Defeats {
            method,
            profile,
            x,
            y,
            expected,
        } => {
            let p = named_profile(case, profile)?;
            let got = defeat(*method, p).defeats(x, y);
            (
                format!(
                    "{method}: {x} {} {y} in {profile}",
                    if *expected { "defeats" } else { "does not defeat" }
                ),
                got == *expected,
            )
        }
        Expectation::RelationEquals {
            method,
            profile,
            expected,
        } => {
            let p = named_profile(case, profile)?;
            let got = defeat(*method, p).pair_list();
            (
                format!("{method}: defeat relation of {profile} has {} pairs", expected.len()),
                &got == expected,
            )
        }
        Expectation::Undefeated {
            method,
            profile,
            expected,
        } => {
            let p = named_profile(case, profile)?;
            let got = defeat(*method, p).undefeated();
            (
                format!("{method}: undefeated in {profile} = {}", name_list(expected)),
                &got == expected,
            )
        }
        Expectation::GlobalChoice {
            method,
            profile,
            subset,
            expected,
        } => {
            let p = named_profile(case, profile)?;
            let got = global_choice(*method, p, subset).map_err(AxiomError::Method)?;
            (
                format!(
                    "{method}: global choice from {{{}}} in {profile} = {}",
                    name_list(subset),
                    name_list(expected)
                ),
                &got == expected,
            )
        }
        Expectation::LocalChoice {
            method,
            profile,
            subset,
            expected,
        } => {
            let p = named_profile(case, profile)?;
            let got = local_choice(*method, p, subset).map_err(AxiomError::Method)?;
            (
                format!(
                    "{method}: local choice from {{{}}} in {profile} = {}",
                    name_list(subset),
                    name_list(expected)
                ),
                &got == expected,
            )
        }
        Expectation::CoherentRelated {
            first,
            second,
            x,
            y,
            expected,
        } => {
            let p = named_profile(case, first)?;
            let q = named_profile(case, second)?;
            let got = coherent_iia_related(p, q, x, y)?;
            (
                format!(
                    "coherent relatedness of ({first}, {second}) at ({x}, {y}) is {expected}"
                ),
                got == *expected,
            )
        }
        Expectation::BetweenRelated {
            mode,
            first,
            second,
            x,
            y,
            expected,
        } => {
            let p = named_profile(case, first)?;
            let q = named_profile(case, second)?;
            let got = modified_iia_related(p, q, x, y, *mode)?;
            let which = match mode {
                BetweennessMode::Modified => "between-set",
                BetweennessMode::Intensity => "between-count",
            };
            (
                format!(
                    "{which} relatedness of ({first}, {second}) at ({x}, {y}) is {expected}"
                ),
                got == *expected,
            )
        }
        Expectation::ClonePair { profile, x, y } => {
            let p = named_profile(case, profile)?;
            let xi = require_member(p, x)?;
            let yi = require_member(p, y)?;
            let adjacent = (0..p.voter_count()).all(|v| {
                let pos = p.positions(v);
                pos[xi].abs_diff(pos[yi]) == 1
            });
            (
                format!("{x} and {y} are adjacent on every ballot of {profile}"),
                adjacent,
            )
        }
        Expectation::AxiomViolation {
            axiom,
            method,
            profiles,
            candidates,
            detail,
        } => {
            let mut resolved = Vec::with_capacity(profiles.len());
            for name in profiles {
                resolved.push(named_profile(case, name)?.clone());
            }
            let w = Witness {
                profiles: resolved,
                candidates: candidates.clone(),
                detail: detail.clone(),
            };
            (
                format!("{method} violates {axiom} on the recorded instance"),
                replay_witness(*axiom, *method, &w)?,
            )
        }
        Expectation::MajorityAlphaClash { profile } => {
            let p = named_profile(case, profile)?;
            let (qualifiers, all_clash) = majority_alpha_clash(p);
            (
                format!(
                    "all {qualifiers} majority-binary available rules break subset \
                     consistency on {profile}"
                ),
                qualifiers > 0 && all_clash,
            )
        }
        Expectation::EdgeAdvantageFiia {
            first,
            second,
            x,
            y,
        } => {
            let p = named_profile(case, first)?;
            let q = named_profile(case, second)?;
            let related = p.candidates() == q.candidates()
                && p.voter_count() == q.voter_count()
                && restrict(p, &[x.clone(), y.clone()])? == restrict(q, &[x.clone(), y.clone()])?;
            let flips = unanimity_edge_defeats(p, x, y) != unanimity_edge_defeats(q, x, y);
            (
                format!(
                    "unanimity-edge rule flips ({x}, {y}) across fixed-roster \
                     related ({first}, {second})"
                ),
                related && flips,
            )
        }
        Expectation::EdgeAdvantageLocalAlpha {
            candidates,
            max_voters,
        } => {
            let clean = edge_advantage_local_alpha_clean(candidates, *max_voters)?;
            (
                format!(
                    "unanimity-edge rule keeps subset consistency on exhaustive \
                     {{{}}}, <= {max_voters} voters",
                    name_list(candidates)
                ),
                clean,
            )
        }
    };
    Ok(ExpectationReport { label, passed })
}

fn name_list(cs: &[Candidate]) -> String {
    let mut s = String::new();
    for (i, c) in cs.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(c.as_str());
    }
    s
}

fn require_member(p: &Profile, c: &Candidate) -> Result<usize, AxiomError> {
    p.index_of(c).ok_or_else(|| {
        AxiomError::Ballots(crate::ballots::BallotError::UnknownCandidate(
            c.as_str().to_string(),
        ))
    })
}

/// x defeats y iff every voter ranks x above y and some third candidate z
/// is unanimously below x but not unanimously below y. The rule exists to
/// show that subset consistency of the restricted-profile choice does not
/// force fixed-roster independence.
fn unanimity_edge_defeats(p: &Profile, x: &Candidate, y: &Candidate) -> bool {
    let n = p.voter_count() as i64;
    let unanimous = |a: &Candidate, b: &Candidate| {
        margin(p, a, b).expect("distinct roster members") == n
    };
    if !unanimous(x, y) {
        return false;
    }
    p.candidates()
        .iter()
        .any(|z| z != x && z != y && unanimous(x, z) && !unanimous(y, z))
}

fn unanimity_edge_relation(p: &Profile) -> DefeatRelation {
    let roster = p.candidates();
    let mut pairs = alloc::collections::BTreeSet::new();
    for (i, x) in roster.iter().enumerate() {
        for (j, y) in roster.iter().enumerate() {
            if i != j && unanimity_edge_defeats(p, x, y) {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(roster.to_vec(), pairs)
}

fn unanimity_edge_undefeated(p: &Profile, subset: &[Candidate]) -> Vec<Candidate> {
    let q = restrict(p, subset).expect("subset of the roster");
    unanimity_edge_relation(&q).undefeated()
}

fn edge_advantage_local_alpha_clean(
    roster: &[Candidate],
    max_voters: u32,
) -> Result<bool, AxiomError> {
    let domain = crate::ballots::ProfileDomain::exhaustive_multiset(
        roster.to_vec(),
        1..=max_voters,
    )
    .map_err(|_| AxiomError::MalformedWitness("bad domain for the subset-consistency sweep"))?;
    let profiles = crate::ballots::enumerate_profiles(&domain).map_err(|_| {
        AxiomError::MalformedWitness("subset-consistency sweep exceeds its budget")
    })?;
    for p in profiles {
        let full: u32 = (1 << roster.len()) - 1;
        for outer in 1..=full {
            let outer_names = mask_names(roster, outer);
            let chosen = unanimity_edge_undefeated(&p, &outer_names);
            for inner in 1..=outer {
                if inner & !outer != 0 {
                    continue;
                }
                let inner_names = mask_names(roster, inner);
                let inner_chosen = unanimity_edge_undefeated(&p, &inner_names);
                for y in &inner_names {
                    if chosen.contains(y) && !inner_chosen.contains(y) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn mask_names(roster: &[Candidate], mask: u32) -> Vec<Candidate> {
    roster
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask & (1 << i) != 0)
        .map(|(_, c)| c.clone())
        .collect()
}

/// Returns how many registry rules decide every pair restriction of `p` by
/// majority while leaving somebody undefeated on every restriction, and
/// whether each of them breaks subset consistency of the restricted-profile
/// choice somewhere inside `p`'s roster.
fn majority_alpha_clash(p: &Profile) -> (usize, bool) {
    let roster = p.candidates().to_vec();
    let full: u32 = (1 << roster.len()) - 1;
    let mut qualifiers = 0usize;
    let mut all_clash = true;
    'methods: for method in ALL_METHODS {
        let mut restrictions = alloc::collections::BTreeMap::new();
        for mask in 1..=full {
            let names = mask_names(&roster, mask);
            let q = restrict(p, &names).expect("nonempty subset of the roster");
            let rel = defeat(method, &q);
            if rel.undefeated().is_empty() {
                continue 'methods; // not available on this profile
            }
            if names.len() == 2
                && (rel.defeats(&names[0], &names[1])
                    != (margin(&q, &names[0], &names[1]).expect("distinct") > 0)
                    || rel.defeats(&names[1], &names[0])
                        != (margin(&q, &names[1], &names[0]).expect("distinct") > 0))
            {
                continue 'methods; // not majority-binary on this profile
            }
            restrictions.insert(mask, rel.undefeated());
        }
        qualifiers += 1;
        let mut clashes = false;
        'subsets: for outer in 1..=full {
            for inner in 1..=outer {
                if inner & !outer != 0 {
                    continue;
                }
                let inner_names = mask_names(&roster, inner);
                for y in &inner_names {
                    if restrictions[&outer].contains(y) && !restrictions[&inner].contains(y) {
                        clashes = true;
                        break 'subsets;
                    }
                }
            }
        }
        all_clash &= clashes;
    }
    (qualifiers, all_clash)
}

fn c(name: &str) -> Candidate {
    Candidate::new(name).expect("fixed names are valid")
}

fn profile(names: &[&str], ballots: &[&[&str]]) -> Profile {
    Profile::from_names(names, ballots).expect("fixed profiles are well formed")
}

/// Looks a built-in case up by name.
pub fn builtin_witness(name: &str) -> Result<WitnessCase, AxiomError> {
    builtin_witnesses()
        .into_iter()
        .find(|w| w.name == name)
        .ok_or_else(|| AxiomError::UnknownCase(name.to_string()))
}

/// The built-in suite, in a fixed order.
pub fn builtin_witnesses() -> Vec<WitnessCase> {
    vec![
        example6_split_cycle(),
        example9_split_cycle(),
        example12_borda(),
        example13_spoiler(),
        remark8_modified_iia(),
        prop13_cycle(),
        appendix_b_arrow_borda(),
        prop11_local_alpha(),
    ]
}

fn example6_split_cycle() -> WitnessCase {
    let graph = MarginGraph::from_names(
        &["a", "b", "c", "d"],
        &[
            ("a", "b", 5),
            ("b", "c", 7),
            ("c", "a", 3),
            ("c", "d", 3),
            ("b", "d", 3),
            ("a", "d", 3),
        ],
    )
    .expect("fixed graph is well formed")
    .scaled(2)
    .expect("factor 2 is positive");
    let p = mcgarvey(&graph).expect("even weights synthesize");
    WitnessCase {
        name: "example6_split_cycle".to_string(),
        description: "four candidates, one majority cycle: the cycle's weakest edge is \
                      discarded and a alone survives"
            .to_string(),
        profiles: vec![("P".to_string(), p)],
        expectations: vec![
            Expectation::RelationEquals {
                method: MethodId::SplitCycle,
                profile: "P".to_string(),
                expected: vec![
                    (c("a"), c("b")),
                    (c("a"), c("d")),
                    (c("b"), c("c")),
                    (c("b"), c("d")),
                    (c("c"), c("d")),
                ],
            },
            Expectation::Undefeated {
                method: MethodId::SplitCycle,
                profile: "P".to_string(),
                expected: vec![c("a")],
            },
        ],
    }
}

fn example9_split_cycle() -> WitnessCase {
    let p = profile(&["a", "b", "c"], &[
        &["a", "b", "c"],
        &["b", "a", "c"],
        &["c", "a", "b"],
    ]);
    let p2 = profile(&["a", "b", "c"], &[
        &["a", "b", "c"],
        &["b", "c", "a"],
        &["c", "a", "b"],
    ]);
    WitnessCase {
        name: "example9_split_cycle".to_string(),
        description: "a defeats b outright, yet one voter demoting a third candidate \
                      closes a cycle and erases every defeat; the pair is not \
                      coherent-related because an edge got reversed, not deleted"
            .to_string(),
        profiles: vec![("P".to_string(), p), ("P2".to_string(), p2)],
        expectations: vec![
            Expectation::Defeats {
                method: MethodId::SplitCycle,
                profile: "P".to_string(),
                x: c("a"),
                y: c("b"),
                expected: true,
            },
            Expectation::RelationEquals {
                method: MethodId::SplitCycle,
                profile: "P2".to_string(),
                expected: vec![],
            },
            Expectation::CoherentRelated {
                first: "P".to_string(),
                second: "P2".to_string(),
                x: c("a"),
                y: c("b"),
                expected: false,
            },
        ],
    }
}

fn example12_borda() -> WitnessCase {
    let p = profile(&["a", "b", "c", "x", "y"], &[
        &["x", "a", "b", "c", "y"],
        &["y", "x", "a", "b", "c"],
        &["y", "x", "c", "b", "a"],
        &["y", "x", "c", "b", "a"],
    ]);
    let p2 = profile(&["a", "b", "c", "x", "y"], &[
        &["a", "b", "c", "x", "y"],
        &["y", "a", "b", "c", "x"],
        &["y", "x", "c", "b", "a"],
        &["y", "x", "c", "b", "a"],
    ]);
    WitnessCase {
        name: "example12_borda".to_string(),
        description: "deleting margins not touching (x, y) flips the Borda verdict on \
                      (x, y), so positional scores ignore coherent independence"
            .to_string(),
        profiles: vec![("P".to_string(), p), ("P2".to_string(), p2)],
        expectations: vec![
            Expectation::CoherentRelated {
                first: "P".to_string(),
                second: "P2".to_string(),
                x: c("x"),
                y: c("y"),
                expected: true,
            },
            Expectation::Defeats {
                method: MethodId::Borda,
                profile: "P".to_string(),
                x: c("x"),
                y: c("y"),
                expected: true,
            },
            Expectation::Defeats {
                method: MethodId::Borda,
                profile: "P2".to_string(),
                x: c("y"),
                y: c("x"),
                expected: true,
            },
            Expectation::Defeats {
                method: MethodId::Borda,
                profile: "P2".to_string(),
                x: c("x"),
                y: c("y"),
                expected: false,
            },
            Expectation::AxiomViolation {
                axiom: AxiomId::CoherentIia,
                method: MethodId::Borda,
                profiles: vec!["P".to_string(), "P2".to_string()],
                candidates: vec![c("x"), c("y")],
                detail: WitnessDetail::None,
            },
            Expectation::Defeats {
                method: MethodId::SplitCycle,
                profile: "P".to_string(),
                x: c("y"),
                y: c("x"),
                expected: true,
            },
        ],
    }
}

fn example13_spoiler() -> WitnessCase {
    let p = profile(&["a", "b", "c"], &[
        &["c", "b", "a"],
        &["c", "b", "a"],
        &["a", "c", "b"],
        &["a", "c", "b"],
        &["a", "c", "b"],
    ]);
    let without_b = restrict(&p, &[c("a"), c("c")]).expect("a and c are in the roster");
    WitnessCase {
        name: "example13_spoiler".to_string(),
        description: "b enters as a clone of c, loses to a head to head, gets defeated, \
                      and still drags Borda's verdict from a over to c"
            .to_string(),
        profiles: vec![
            ("P".to_string(), p),
            ("P_without_b".to_string(), without_b),
        ],
        expectations: vec![
            Expectation::Defeats {
                method: MethodId::Borda,
                profile: "P_without_b".to_string(),
                x: c("a"),
                y: c("c"),
                expected: true,
            },
            Expectation::Defeats {
                method: MethodId::Borda,
                profile: "P".to_string(),
                x: c("c"),
                y: c("a"),
                expected: true,
            },
            Expectation::Undefeated {
                method: MethodId::Borda,
                profile: "P".to_string(),
                expected: vec![c("c")],
            },
            Expectation::ClonePair {
                profile: "P".to_string(),
                x: c("b"),
                y: c("c"),
            },
            Expectation::AxiomViolation {
                axiom: AxiomId::ImmunityToSpoilers,
                method: MethodId::Borda,
                profiles: vec!["P".to_string(), "P_without_b".to_string()],
                candidates: vec![c("a"), c("b")],
                detail: WitnessDetail::RemovedCandidate { candidate: c("b") },
            },
        ],
    }
}

fn remark8_modified_iia() -> WitnessCase {
    let p = profile(&["a", "b", "c", "d"], &[
        &["a", "b", "c", "d"],
        &["b", "c", "d", "a"],
        &["a", "b", "c", "d"],
        &["a", "b", "d", "c"],
    ]);
    let p2 = profile(&["a", "b", "c", "d"], &[
        &["a", "b", "c", "d"],
        &["b", "c", "d", "a"],
        &["c", "d", "a", "b"],
        &["d", "a", "b", "c"],
    ]);
    WitnessCase {
        name: "remark8_modified_iia".to_string(),
        description: "every voter keeps the same (a, b) order and the same candidates in \
                      between, yet rearranging the rest closes a four-cycle and kills \
                      the a-over-b defeat: betweenness-based independence fails even \
                      for margin-respecting rules"
            .to_string(),
        profiles: vec![("P".to_string(), p), ("P2".to_string(), p2)],
        expectations: vec![
            Expectation::BetweenRelated {
                mode: BetweennessMode::Modified,
                first: "P".to_string(),
                second: "P2".to_string(),
                x: c("a"),
                y: c("b"),
                expected: true,
            },
            Expectation::BetweenRelated {
                mode: BetweennessMode::Intensity,
                first: "P".to_string(),
                second: "P2".to_string(),
                x: c("a"),
                y: c("b"),
                expected: true,
            },
            Expectation::Defeats {
                method: MethodId::SplitCycle,
                profile: "P".to_string(),
                x: c("a"),
                y: c("b"),
                expected: true,
            },
            Expectation::RelationEquals {
                method: MethodId::SplitCycle,
                profile: "P2".to_string(),
                expected: vec![],
            },
            Expectation::AxiomViolation {
                axiom: AxiomId::ModifiedIia,
                method: MethodId::SplitCycle,
                profiles: vec!["P".to_string(), "P2".to_string()],
                candidates: vec![c("a"), c("b")],
                detail: WitnessDetail::None,
            },
            Expectation::AxiomViolation {
                axiom: AxiomId::IntensityIia,
                method: MethodId::SplitCycle,
                profiles: vec!["P".to_string(), "P2".to_string()],
                candidates: vec![c("a"), c("b")],
                detail: WitnessDetail::None,
            },
        ],
    }
}

fn prop13_cycle() -> WitnessCase {
    let p = profile(&["x", "y", "z"], &[
        &["x", "y", "z"],
        &["y", "z", "x"],
        &["z", "x", "y"],
    ]);
    WitnessCase {
        name: "prop13_cycle".to_string(),
        description: "the perfect three-cycle: any rule that decides pairs by majority \
                      and always leaves a survivor must displace some subset winner, \
                      so those three demands cannot coexist"
            .to_string(),
        profiles: vec![("P".to_string(), p)],
        expectations: vec![
            Expectation::RelationEquals {
                method: MethodId::SplitCycle,
                profile: "P".to_string(),
                expected: vec![],
            },
            Expectation::MajorityAlphaClash {
                profile: "P".to_string(),
            },
            Expectation::AxiomViolation {
                axiom: AxiomId::LocalAlpha,
                method: MethodId::SplitCycle,
                profiles: vec!["P".to_string()],
                candidates: vec![c("y")],
                detail: WitnessDetail::Subsets {
                    inner: vec![c("x"), c("y")],
                    outer: vec![c("x"), c("y"), c("z")],
                },
            },
        ],
    }
}

fn appendix_b_arrow_borda() -> WitnessCase {
    let p = profile(&["w", "x", "y", "z"], &[
        &["x", "y", "z", "w"],
        &["x", "y", "z", "w"],
        &["z", "w", "x", "y"],
    ]);
    WitnessCase {
        name: "appendixB_arrow_borda".to_string(),
        description: "with y on the ballot Borda picks x alone from {w, x, z}; strike y \
                      from the ballots and the same menu ties x with z: the dead \
                      candidate still decides"
            .to_string(),
        profiles: vec![("P".to_string(), p)],
        expectations: vec![
            Expectation::GlobalChoice {
                method: MethodId::Borda,
                profile: "P".to_string(),
                subset: vec![c("w"), c("x"), c("z")],
                expected: vec![c("x")],
            },
            Expectation::LocalChoice {
                method: MethodId::Borda,
                profile: "P".to_string(),
                subset: vec![c("w"), c("x"), c("z")],
                expected: vec![c("x"), c("z")],
            },
        ],
    }
}

fn prop11_local_alpha() -> WitnessCase {
    let p = profile(&["x", "y", "z"], &[&["x", "z", "y"]]);
    let p2 = profile(&["x", "y", "z"], &[&["x", "y", "z"]]);
    WitnessCase {
        name: "prop11_local_alpha".to_string(),
        description: "the unanimity-plus-edge-advantage rule keeps subset consistency \
                      yet flips a verdict between two single-ballot profiles agreeing \
                      on (x, y): subset consistency does not buy fixed-roster \
                      independence"
            .to_string(),
        profiles: vec![("P".to_string(), p), ("P2".to_string(), p2)],
        expectations: vec![
            Expectation::EdgeAdvantageFiia {
                first: "P".to_string(),
                second: "P2".to_string(),
                x: c("x"),
                y: c("y"),
            },
            Expectation::EdgeAdvantageLocalAlpha {
                candidates: vec![c("x"), c("y"), c("z")],
                max_voters: 2,
            },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_suite_passes() {
        let suite = builtin_witnesses();
        assert_eq!(suite.len(), 8);
        for case in &suite {
            let report = verify_witness(case).unwrap();
            for check in &report.expectations {
                assert!(check.passed, "{}: {}", case.name, check.label);
            }
            assert!(report.passed);
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(builtin_witness("example12_borda").is_ok());
        assert!(matches!(
            builtin_witness("example99"),
            Err(AxiomError::UnknownCase(_))
        ));
    }

    #[test]
    fn unanimity_edge_rule_on_single_ballots() {
        let p = profile(&["x", "y", "z"], &[&["x", "z", "y"]]);
        let rel = unanimity_edge_relation(&p);
        assert_eq!(rel.pair_list(), vec![(c("x"), c("y"))]);
        let p2 = profile(&["x", "y", "z"], &[&["x", "y", "z"]]);
        let rel2 = unanimity_edge_relation(&p2);
        assert_eq!(rel2.pair_list(), vec![(c("x"), c("z"))]);
    }

    #[test]
    fn broken_case_reports_failure() {
        let mut case = builtin_witness("example9_split_cycle").unwrap();
        case.expectations.push(Expectation::Defeats {
            method: MethodId::SplitCycle,
            profile: "P2".to_string(),
            x: c("a"),
            y: c("b"),
            expected: true,
        });
        let report = verify_witness(&case).unwrap();
        assert!(!report.passed);
        assert!(report.expectations.iter().take(3).all(|r| r.passed));
        assert!(!report.expectations.last().unwrap().passed);
    }

    #[test]
    fn missing_profile_is_an_error() {
        let mut case = builtin_witness("example9_split_cycle").unwrap();
        case.expectations.push(Expectation::Defeats {
            method: MethodId::SplitCycle,
            profile: "P3".to_string(),
            x: c("a"),
            y: c("b"),
            expected: true,
        });
        assert!(matches!(
            verify_witness(&case),
            Err(AxiomError::UnknownProfile(_))
        ));
    }
}
