//! Executable axiom checks.
//!
//! Every axiom here is universally quantified over all profiles, so a
//! checker can only certify the domain it scanned: a clean sweep is
//! reported as [`CheckStatus::HoldsOnDomain`], never as a proof. A failed
//! instance is reported as a [`Witness`] that replays on its own through
//! [`replay_witness`], independent of the domain that produced it.
//!
//! Scan order is deterministic: profiles in domain enumeration order,
//! voters and candidate pairs in index order, rankings in lexicographic
//! order, candidate subsets in ascending bitmask order (bit `k` is roster
//! index `k`). The witness returned is always the first violation in that
//! order, so repeated runs agree byte for byte.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::ballots::{
    add_reversed_pair, condorcet_winner, enumerate_profiles, lex_permutations, lift_adjacent,
    margin, permute_candidates, permute_voters, replicate, restrict, Ballot, BallotError,
    Candidate, DomainError, DomainMode, Profile, ProfileDomain,
};
use crate::methods::{defeat, DefeatRelation, MethodError, MethodId};

/// The checkable axioms and conditions.
///
/// The first block is the defeat-axiom family (with monotonicity in both
/// its general and two-candidate forms and neutral reversal split into its
/// two directions); the second is the independence family; the third the
/// single-profile conditions and the choice-consistency family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomId {
    Anonymity,
    Neutrality,
    Availability,
    UpwardHomogeneity,
    Monotonicity,
    MonotonicityTwoCandidate,
    NeutralReversalUp,
    NeutralReversalDown,
    CoherentIia,
    WeakIia,
    Fiia,
    Viia,
    ModifiedIia,
    IntensityIia,
    Pareto,
    MajorityDefeat,
    CondorcetConsistency,
    BinaryMajoritarianism,
    ImmunityToSpoilers,
    StrongStability,
    LocalAlpha,
    GlobalAlpha,
    AlphaBar,
    Acyclicity,
}

pub const ALL_AXIOMS: [AxiomId; 24] = [
    AxiomId::Anonymity,
    AxiomId::Neutrality,
    AxiomId::Availability,
    AxiomId::UpwardHomogeneity,
    AxiomId::Monotonicity,
    AxiomId::MonotonicityTwoCandidate,
    AxiomId::NeutralReversalUp,
    AxiomId::NeutralReversalDown,
    AxiomId::CoherentIia,
    AxiomId::WeakIia,
    AxiomId::Fiia,
    AxiomId::Viia,
    AxiomId::ModifiedIia,
    AxiomId::IntensityIia,
    AxiomId::Pareto,
    AxiomId::MajorityDefeat,
    AxiomId::CondorcetConsistency,
    AxiomId::BinaryMajoritarianism,
    AxiomId::ImmunityToSpoilers,
    AxiomId::StrongStability,
    AxiomId::LocalAlpha,
    AxiomId::GlobalAlpha,
    AxiomId::AlphaBar,
    AxiomId::Acyclicity,
];

impl AxiomId {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::Anonymity => "anonymity",
            AxiomId::Neutrality => "neutrality",
            AxiomId::Availability => "availability",
            AxiomId::UpwardHomogeneity => "upward_homogeneity",
            AxiomId::Monotonicity => "monotonicity",
            AxiomId::MonotonicityTwoCandidate => "monotonicity_two_candidate",
            AxiomId::NeutralReversalUp => "neutral_reversal_up",
            AxiomId::NeutralReversalDown => "neutral_reversal_down",
            AxiomId::CoherentIia => "coherent_iia",
            AxiomId::WeakIia => "weak_iia",
            AxiomId::Fiia => "fiia",
            AxiomId::Viia => "viia",
            AxiomId::ModifiedIia => "modified_iia",
            AxiomId::IntensityIia => "intensity_iia",
            AxiomId::Pareto => "pareto",
            AxiomId::MajorityDefeat => "majority_defeat",
            AxiomId::CondorcetConsistency => "condorcet_consistency",
            AxiomId::BinaryMajoritarianism => "binary_majoritarianism",
            AxiomId::ImmunityToSpoilers => "immunity_to_spoilers",
            AxiomId::StrongStability => "strong_stability",
            AxiomId::LocalAlpha => "local_alpha",
            AxiomId::GlobalAlpha => "global_alpha",
            AxiomId::AlphaBar => "alpha_bar",
            AxiomId::Acyclicity => "acyclicity",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AxiomId {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, AxiomError> {
        ALL_AXIOMS
            .iter()
            .copied()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| AxiomError::UnknownAxiom(s.to_string()))
    }
}

/// Which notion of "ranked in between" two profiles must agree on to be
/// related for the betweenness-based independence conditions: the set of
/// candidates in between, or only how many there are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BetweennessMode {
    Modified,
    Intensity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    HoldsOnDomain,
    Counterexample,
    BudgetExceeded,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::HoldsOnDomain => "holds_on_domain",
            CheckStatus::Counterexample => "counterexample",
            CheckStatus::BudgetExceeded => "budget_exceeded",
        })
    }
}

/// The auxiliary datum that, together with the base profile, pins down a
/// violating instance of a transform or subset axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessDetail {
    /// Pair and single-profile axioms need nothing beyond the profiles and
    /// the distinguished candidates.
    None,
    /// The two voters whose ballots were exchanged.
    VoterSwap { first: usize, second: usize },
    /// The two candidates that were transposed on every ballot. With the
    /// transposition written s, the violated law is: s(x) defeats s(y) in
    /// the base profile iff x defeats y in the transposed one.
    CandidateSwap { first: Candidate, second: Candidate },
    /// The base profile was repeated this many times.
    Replicated { factor: u32 },
    /// `raised` swapped places with the candidate immediately above it on
    /// this voter's ballot.
    AdjacentLift { voter: usize, raised: Candidate },
    /// This ballot and its reversal were appended as two new voters.
    ReversalPair { ballot: Ballot },
    /// This candidate was deleted from the base profile.
    RemovedCandidate { candidate: Candidate },
    /// The inner/outer candidate subsets of a choice-consistency instance.
    Subsets {
        inner: Vec<Candidate>,
        outer: Vec<Candidate>,
    },
}

/// A self-contained violating instance.
///
/// `profiles[0]` is always the base profile. Transform axioms also record
/// the transformed profile as `profiles[1]` (redundantly with `detail`,
/// which suffices to rebuild it); pair axioms record the second profile of
/// the pair there. `candidates` holds the distinguished candidates in the
/// order the axiom statement names them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub profiles: Vec<Profile>,
    pub candidates: Vec<Candidate>,
    pub detail: WitnessDetail,
}

/// Outcome of scanning one axiom for one rule over one domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    pub method: MethodId,
    /// Human-readable domain summary; the domain itself is the caller's.
    pub domain: String,
    pub status: CheckStatus,
    /// Present iff `status` is `Counterexample`.
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomError {
    UnknownAxiom(String),
    UnknownCase(String),
    UnknownProfile(String),
    NotAPairAxiom(AxiomId),
    MalformedWitness(&'static str),
    Ballots(BallotError),
    Method(MethodError),
}

impl fmt::Display for AxiomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomError::UnknownAxiom(s) => write!(f, "unknown axiom '{s}'"),
            AxiomError::UnknownCase(s) => write!(f, "unknown witness case '{s}'"),
            AxiomError::UnknownProfile(s) => write!(f, "witness references unknown profile '{s}'"),
            AxiomError::NotAPairAxiom(a) => {
                write!(f, "axiom '{a}' does not quantify over profile pairs")
            }
            AxiomError::MalformedWitness(why) => write!(f, "malformed witness: {why}"),
            AxiomError::Ballots(e) => write!(f, "{e}"),
            AxiomError::Method(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AxiomError {}

impl From<BallotError> for AxiomError {
    fn from(e: BallotError) -> Self {
        AxiomError::Ballots(e)
    }
}

impl From<MethodError> for AxiomError {
    fn from(e: MethodError) -> Self {
        AxiomError::Method(e)
    }
}

/// Relatedness for coherent IIA: `q` plays the reduced profile. True iff
/// both profiles have the same electorate, `x`,`y` belong to `q`'s roster,
/// `q`'s roster is contained in `p`'s, both profiles restrict identically
/// to `{x,y}`, and every positive margin of `q` between other candidates is
/// matched or exceeded in `p` (margins may only be deleted or reduced,
/// never raised or reversed, on the way from `p` to `q`).
///
/// Mismatched electorates or rosters make the profiles unrelated, not
/// erroneous; only `x = y` is an error.
pub fn coherent_iia_related(
    p: &Profile,
    q: &Profile,
    x: &Candidate,
    y: &Candidate,
) -> Result<bool, BallotError> {
    if x == y {
        return Err(BallotError::SameCandidate(x.as_str().to_string()));
    }
    if p.voter_count() != q.voter_count() {
        return Ok(false);
    }
    if q.index_of(x).is_none() || q.index_of(y).is_none() {
        return Ok(false);
    }
    if q.candidates().iter().any(|c| p.index_of(c).is_none()) {
        return Ok(false);
    }
    if !restrictions_match(p, q, x, y) {
        return Ok(false);
    }
    for u in q.candidates() {
        for v in q.candidates() {
            if u == v || (u == x && v == y) || (u == y && v == x) {
                continue;
            }
            let mq = margin(q, u, v).expect("u and v are distinct roster members");
            if mq > 0 && margin(p, u, v).expect("q's roster is contained in p's") < mq {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Relatedness for the betweenness-based independence conditions: every
/// voter orders `x` vs `y` the same way in both profiles and, per voter,
/// the candidates ranked strictly between `x` and `y` agree as a set
/// (`Modified`) or merely in number (`Intensity`).
///
/// `x = y`, an unknown candidate, or mismatched electorates are errors.
pub fn modified_iia_related(
    p: &Profile,
    q: &Profile,
    x: &Candidate,
    y: &Candidate,
    mode: BetweennessMode,
) -> Result<bool, BallotError> {
    if x == y {
        return Err(BallotError::SameCandidate(x.as_str().to_string()));
    }
    let (pxi, pyi) = (require_index(p, x)?, require_index(p, y)?);
    let (qxi, qyi) = (require_index(q, x)?, require_index(q, y)?);
    if p.voter_count() != q.voter_count() {
        return Err(BallotError::VoterCountMismatch {
            left: p.voter_count(),
            right: q.voter_count(),
        });
    }
    for v in 0..p.voter_count() {
        let ppos = p.positions(v);
        let qpos = q.positions(v);
        if (ppos[pxi] < ppos[pyi]) != (qpos[qxi] < qpos[qyi]) {
            return Ok(false);
        }
        let (plo, phi) = order(ppos[pxi], ppos[pyi]);
        let (qlo, qhi) = order(qpos[qxi], qpos[qyi]);
        match mode {
            BetweennessMode::Intensity => {
                if phi - plo != qhi - qlo {
                    return Ok(false);
                }
            }
            BetweennessMode::Modified => {
                let pb: BTreeSet<&Candidate> = between_names(p, v, plo, phi);
                let qb: BTreeSet<&Candidate> = between_names(q, v, qlo, qhi);
                if pb != qb {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn require_index(p: &Profile, c: &Candidate) -> Result<usize, BallotError> {
    p.index_of(c)
        .ok_or_else(|| BallotError::UnknownCandidate(c.as_str().to_string()))
}

fn order(a: u32, b: u32) -> (u32, u32) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn between_names(p: &Profile, voter: usize, lo: u32, hi: u32) -> BTreeSet<&Candidate> {
    p.row(voter)[(lo as usize + 1)..hi as usize]
        .iter()
        .map(|&c| &p.candidates()[c as usize])
        .collect()
}

/// True when both profiles restrict to the same two-candidate profile on
/// `{x,y}` (voter by voter, so the electorates must have equal size).
fn restrictions_match(p: &Profile, q: &Profile, x: &Candidate, y: &Candidate) -> bool {
    let pair = [x.clone(), y.clone()];
    match (restrict(p, &pair), restrict(q, &pair)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Memoizing defeat evaluator for one rule. Pair and subset scans revisit
/// the same profiles many times; the cache makes each profile cost one
/// rule evaluation.
struct Evaluator {
    method: MethodId,
    cache: BTreeMap<Profile, Rc<DefeatRelation>>,
}

impl Evaluator {
    fn new(method: MethodId) -> Self {
        Evaluator {
            method,
            cache: BTreeMap::new(),
        }
    }

    fn defeats(&mut self, p: &Profile) -> Rc<DefeatRelation> {
        if let Some(r) = self.cache.get(p) {
            return r.clone();
        }
        let r = Rc::new(defeat(self.method, p));
        self.cache.insert(p.clone(), r.clone());
        r
    }

    fn undefeated(&mut self, p: &Profile) -> Vec<Candidate> {
        self.defeats(p).undefeated()
    }
}

/// Instance budget: every checked instance (a profile, a generated
/// transform, a scanned pair, or a subset pair) costs one unit.
struct Meter {
    left: u64,
}

impl Meter {
    fn take(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

enum Scan {
    Clean,
    Violation(Witness),
    Exhausted,
}

macro_rules! spend {
    ($meter:expr) => {
        if !$meter.take() {
            return Scan::Exhausted;
        }
    };
}

/// Checks one axiom for one rule over every profile of a domain.
///
/// The domain's budget bounds the enumeration size (a domain too large to
/// enumerate is an error) and separately meters the scanned instances;
/// a scan that runs out of instance budget returns a verdict with status
/// `BudgetExceeded` rather than an error. A counterexample reports the
/// first violating instance in deterministic scan order. The profile list
/// is materialized (pair axioms scan it quadratically), so memory grows
/// with the domain's profile count.
pub fn check_axiom(
    axiom: AxiomId,
    method: MethodId,
    domain: &ProfileDomain,
) -> Result<AxiomVerdict, DomainError> {
    let profiles: Vec<Profile> = enumerate_profiles(domain)?.collect();
    let mut eval = Evaluator::new(method);
    let mut meter = Meter {
        left: domain.budget(),
    };
    let scan = match axiom {
        AxiomId::Anonymity => scan_anonymity(&mut eval, &profiles, &mut meter),
        AxiomId::Neutrality => scan_neutrality(&mut eval, &profiles, &mut meter),
        AxiomId::Availability => scan_availability(&mut eval, &profiles, &mut meter),
        AxiomId::UpwardHomogeneity => scan_upward_homogeneity(&mut eval, &profiles, &mut meter),
        AxiomId::Monotonicity => scan_monotonicity(&mut eval, &profiles, &mut meter),
        AxiomId::MonotonicityTwoCandidate => {
            scan_monotonicity_two_candidate(&mut eval, &profiles, &mut meter)
        }
        AxiomId::NeutralReversalUp => scan_neutral_reversal(&mut eval, &profiles, true, &mut meter),
        AxiomId::NeutralReversalDown => {
            scan_neutral_reversal(&mut eval, &profiles, false, &mut meter)
        }
        AxiomId::CoherentIia => scan_coherent_iia(&mut eval, &profiles, &mut meter),
        AxiomId::WeakIia => scan_weak_iia(&mut eval, &profiles, &mut meter),
        AxiomId::Fiia => scan_fiia(&mut eval, &profiles, &mut meter),
        AxiomId::Viia => scan_viia(&mut eval, &profiles, &mut meter),
        AxiomId::ModifiedIia => {
            scan_betweenness(&mut eval, &profiles, domain, BetweennessMode::Modified, &mut meter)
        }
        AxiomId::IntensityIia => {
            scan_betweenness(&mut eval, &profiles, domain, BetweennessMode::Intensity, &mut meter)
        }
        AxiomId::Pareto => scan_pareto(&mut eval, &profiles, &mut meter),
        AxiomId::MajorityDefeat => scan_majority_defeat(&mut eval, &profiles, &mut meter),
        AxiomId::CondorcetConsistency => {
            scan_condorcet_consistency(&mut eval, &profiles, &mut meter)
        }
        AxiomId::BinaryMajoritarianism => {
            scan_binary_majoritarianism(&mut eval, &profiles, &mut meter)
        }
        AxiomId::ImmunityToSpoilers => scan_spoilers(&mut eval, &profiles, true, &mut meter),
        AxiomId::StrongStability => scan_spoilers(&mut eval, &profiles, false, &mut meter),
        AxiomId::LocalAlpha => scan_alpha(&mut eval, &profiles, true, &mut meter),
        AxiomId::GlobalAlpha => scan_alpha(&mut eval, &profiles, false, &mut meter),
        AxiomId::AlphaBar => scan_alpha_bar(&mut eval, &profiles, &mut meter),
        AxiomId::Acyclicity => scan_acyclicity(&mut eval, &profiles, &mut meter),
    };
    let (status, witness) = match scan {
        Scan::Clean => (CheckStatus::HoldsOnDomain, None),
        Scan::Violation(w) => {
            debug_assert_eq!(replay_witness(axiom, method, &w), Ok(true));
            (CheckStatus::Counterexample, Some(w))
        }
        Scan::Exhausted => (CheckStatus::BudgetExceeded, None),
    };
    Ok(AxiomVerdict {
        axiom,
        method,
        domain: domain.summary(),
        status,
        witness,
    })
}

/// First ordered pair (by roster index) on which the two relations
/// disagree. Both relations must share a universe.
fn first_difference(a: &DefeatRelation, b: &DefeatRelation) -> Option<(Candidate, Candidate)> {
    debug_assert_eq!(a.universe(), b.universe());
    a.index_pairs()
        .symmetric_difference(b.index_pairs())
        .next()
        .map(|&(i, j)| {
            (
                a.universe()[i as usize].clone(),
                a.universe()[j as usize].clone(),
            )
        })
}

fn scan_anonymity(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        let n = p.voter_count();
        for i in 0..n {
            for j in (i + 1)..n {
                spend!(meter);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, j);
                let q = permute_voters(p, &perm).expect("a voter swap is a valid permutation");
                let rp = eval.defeats(p);
                let rq = eval.defeats(&q);
                if rp != rq {
                    let (x, y) = first_difference(&rp, &rq).expect("relations differ");
                    return Scan::Violation(Witness {
                        profiles: vec![p.clone(), q],
                        candidates: vec![x, y],
                        detail: WitnessDetail::VoterSwap { first: i, second: j },
                    });
                }
            }
        }
    }
    Scan::Clean
}

fn scan_neutrality(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        let roster = p.candidates().to_vec();
        let m = roster.len();
        for u in 0..m {
            for v in (u + 1)..m {
                spend!(meter);
                let swap = [
                    (roster[u].clone(), roster[v].clone()),
                    (roster[v].clone(), roster[u].clone()),
                ];
                let q = permute_candidates(p, &swap).expect("a transposition is a permutation");
                let rp = eval.defeats(p);
                let rq = eval.defeats(&q);
                let image = |c: &Candidate| -> Candidate {
                    if c == &roster[u] {
                        roster[v].clone()
                    } else if c == &roster[v] {
                        roster[u].clone()
                    } else {
                        c.clone()
                    }
                };
                for x in &roster {
                    for y in &roster {
                        if x == y {
                            continue;
                        }
                        if rq.defeats(x, y) != rp.defeats(&image(x), &image(y)) {
                            return Scan::Violation(Witness {
                                profiles: vec![p.clone(), q],
                                candidates: vec![x.clone(), y.clone()],
                                detail: WitnessDetail::CandidateSwap {
                                    first: roster[u].clone(),
                                    second: roster[v].clone(),
                                },
                            });
                        }
                    }
                }
            }
        }
    }
    Scan::Clean
}

fn scan_availability(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        spend!(meter);
        if eval.undefeated(p).is_empty() {
            return Scan::Violation(Witness {
                profiles: vec![p.clone()],
                candidates: Vec::new(),
                detail: WitnessDetail::None,
            });
        }
    }
    Scan::Clean
}

fn scan_acyclicity(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        spend!(meter);
        if !eval.defeats(p).is_acyclic() {
            return Scan::Violation(Witness {
                profiles: vec![p.clone()],
                candidates: Vec::new(),
                detail: WitnessDetail::None,
            });
        }
    }
    Scan::Clean
}

fn scan_upward_homogeneity(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        spend!(meter);
        let q = replicate(p, 2).expect("factor 2 is positive");
        let rp = eval.defeats(p);
        let rq = eval.defeats(&q);
        if let Some(&(i, j)) = rp.index_pairs().difference(rq.index_pairs()).next() {
            let x = rp.universe()[i as usize].clone();
            let y = rp.universe()[j as usize].clone();
            return Scan::Violation(Witness {
                profiles: vec![p.clone(), q],
                candidates: vec![x, y],
                detail: WitnessDetail::Replicated { factor: 2 },
            });
        }
    }
    Scan::Clean
}

/// Core of the monotonicity scan: all single adjacent lifts of a defeater,
/// on the given profile only.
fn monotonicity_on_profile(eval: &mut Evaluator, p: &Profile, meter: &mut Meter) -> Scan {
    let pairs = eval.defeats(p).pair_list();
    for (x, y) in pairs {
        for voter in 0..p.voter_count() {
            let lifted = lift_adjacent(p, voter, &x).expect("x is in the roster");
            let Some(q) = lifted else { continue };
            spend!(meter);
            if !eval.defeats(&q).defeats(&x, &y) {
                return Scan::Violation(Witness {
                    profiles: vec![p.clone(), q],
                    candidates: vec![x.clone(), y],
                    detail: WitnessDetail::AdjacentLift { voter, raised: x },
                });
            }
        }
    }
    Scan::Clean
}

fn scan_monotonicity(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        match monotonicity_on_profile(eval, p, meter) {
            Scan::Clean => {}
            other => return other,
        }
    }
    Scan::Clean
}

/// The two-candidate form quantifies over two-candidate profiles only. So
/// that it has content on wider domains, every pair restriction of every
/// domain profile is scanned (a two-candidate domain profile is its own
/// restriction).
fn scan_monotonicity_two_candidate(
    eval: &mut Evaluator,
    profiles: &[Profile],
    meter: &mut Meter,
) -> Scan {
    for p in profiles {
        let roster = p.candidates().to_vec();
        let m = roster.len();
        for i in 0..m {
            for j in (i + 1)..m {
                let base = restrict(p, &[roster[i].clone(), roster[j].clone()])
                    .expect("roster members are distinct");
                match monotonicity_on_profile(eval, &base, meter) {
                    Scan::Clean => {}
                    other => return other,
                }
            }
        }
    }
    Scan::Clean
}

fn scan_neutral_reversal(
    eval: &mut Evaluator,
    profiles: &[Profile],
    upward: bool,
    meter: &mut Meter,
) -> Scan {
    for p in profiles {
        let roster = p.candidates();
        for perm in lex_permutations(roster.len()) {
            spend!(meter);
            let ballot = Ballot::new(perm.iter().map(|&i| roster[i as usize].clone()).collect())
                .expect("a permutation of the roster is a valid ballot");
            let q = add_reversed_pair(p, &ballot).expect("ballot covers the roster");
            let rp = eval.defeats(p);
            let rq = eval.defeats(&q);
            let (from, to) = if upward { (&rp, &rq) } else { (&rq, &rp) };
            if let Some(&(i, j)) = from.index_pairs().difference(to.index_pairs()).next() {
                let x = rp.universe()[i as usize].clone();
                let y = rp.universe()[j as usize].clone();
                return Scan::Violation(Witness {
                    profiles: vec![p.clone(), q],
                    candidates: vec![x, y],
                    detail: WitnessDetail::ReversalPair { ballot },
                });
            }
        }
    }
    Scan::Clean
}

fn scan_pareto(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        spend!(meter);
        let n = p.voter_count() as i64;
        let rel = eval.defeats(p);
        let roster = p.candidates();
        for x in roster {
            for y in roster {
                if x == y {
                    continue;
                }
                let unanimous = margin(p, x, y).expect("distinct roster members") == n;
                if unanimous && !rel.defeats(x, y) {
                    return Scan::Violation(Witness {
                        profiles: vec![p.clone()],
                        candidates: vec![x.clone(), y.clone()],
                        detail: WitnessDetail::None,
                    });
                }
            }
        }
    }
    Scan::Clean
}

fn scan_majority_defeat(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        spend!(meter);
        for (x, y) in eval.defeats(p).pair_list() {
            if margin(p, &x, &y).expect("defeat pairs are distinct roster members") <= 0 {
                return Scan::Violation(Witness {
                    profiles: vec![p.clone()],
                    candidates: vec![x, y],
                    detail: WitnessDetail::None,
                });
            }
        }
    }
    Scan::Clean
}

fn scan_condorcet_consistency(
    eval: &mut Evaluator,
    profiles: &[Profile],
    meter: &mut Meter,
) -> Scan {
    for p in profiles {
        spend!(meter);
        let Some(c) = condorcet_winner(p) else { continue };
        if eval.undefeated(p) != [c.clone()] {
            return Scan::Violation(Witness {
                profiles: vec![p.clone()],
                candidates: vec![c],
                detail: WitnessDetail::None,
            });
        }
    }
    Scan::Clean
}

fn scan_binary_majoritarianism(
    eval: &mut Evaluator,
    profiles: &[Profile],
    meter: &mut Meter,
) -> Scan {
    for p in profiles {
        if p.candidate_count() != 2 {
            continue;
        }
        spend!(meter);
        let rel = eval.defeats(p);
        for x in p.candidates() {
            for y in p.candidates() {
                if x == y {
                    continue;
                }
                let majority = margin(p, x, y).expect("distinct roster members") > 0;
                if rel.defeats(x, y) != majority {
                    return Scan::Violation(Witness {
                        profiles: vec![p.clone()],
                        candidates: vec![x.clone(), y.clone()],
                        detail: WitnessDetail::None,
                    });
                }
            }
        }
    }
    Scan::Clean
}

fn scan_spoilers(
    eval: &mut Evaluator,
    profiles: &[Profile],
    spoiler_form: bool,
    meter: &mut Meter,
) -> Scan {
    for p in profiles {
        let roster = p.candidates().to_vec();
        if roster.len() < 2 {
            continue;
        }
        for b in &roster {
            let keep: Vec<Candidate> = roster.iter().filter(|c| *c != b).cloned().collect();
            let without = restrict(p, &keep).expect("at least one candidate remains");
            for a in &roster {
                if a == b {
                    continue;
                }
                spend!(meter);
                let premise = if spoiler_form {
                    // a survives alone-with-the-rest, beats b head to head,
                    // and b is itself defeated
                    margin(p, a, b).expect("distinct") > 0
                        && !eval.undefeated(p).contains(b)
                } else {
                    // b fails to beat a head to head
                    margin(p, b, a).expect("distinct") <= 0
                };
                if premise
                    && eval.undefeated(&without).contains(a)
                    && !eval.undefeated(p).contains(a)
                {
                    return Scan::Violation(Witness {
                        profiles: vec![p.clone(), without.clone()],
                        candidates: vec![a.clone(), b.clone()],
                        detail: WitnessDetail::RemovedCandidate {
                            candidate: b.clone(),
                        },
                    });
                }
            }
        }
    }
    Scan::Clean
}

fn mask_candidates(roster: &[Candidate], mask: u32) -> Vec<Candidate> {
    roster
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask & (1 << i) != 0)
        .map(|(_, c)| c.clone())
        .collect()
}

/// Choice-consistency scan over nested subsets: an element chosen from the
/// outer set and belonging to the inner set must be chosen from the inner
/// set. `local` selects the restricted-profile choice function; otherwise
/// the full-profile defeat relation is intersected with each subset.
fn scan_alpha(eval: &mut Evaluator, profiles: &[Profile], local: bool, meter: &mut Meter) -> Scan {
    for p in profiles {
        let roster = p.candidates().to_vec();
        let full: u32 = (1 << roster.len()) - 1;
        for outer in 1..=full {
            let outer_names = mask_candidates(&roster, outer);
            let chosen_outer = choice_set(eval, p, &outer_names, local);
            for inner in 1..=outer {
                if inner & !outer != 0 {
                    continue;
                }
                spend!(meter);
                let inner_names = mask_candidates(&roster, inner);
                let mut offender = None;
                for y in &inner_names {
                    if chosen_outer.contains(y)
                        && offender.is_none()
                        && !choice_set(eval, p, &inner_names, local).contains(y)
                    {
                        offender = Some(y.clone());
                    }
                }
                if let Some(y) = offender {
                    return Scan::Violation(Witness {
                        profiles: vec![p.clone()],
                        candidates: vec![y],
                        detail: WitnessDetail::Subsets {
                            inner: inner_names,
                            outer: outer_names,
                        },
                    });
                }
            }
        }
    }
    Scan::Clean
}

/// The winner form of choice consistency: a full-profile winner inside a
/// subset must still win the election restricted to that subset.
fn scan_alpha_bar(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    for p in profiles {
        let roster = p.candidates().to_vec();
        let full: u32 = (1 << roster.len()) - 1;
        let winners = eval.undefeated(p);
        for inner in 1..=full {
            spend!(meter);
            let inner_names = mask_candidates(&roster, inner);
            for y in &inner_names {
                if winners.contains(y) && !choice_set(eval, p, &inner_names, true).contains(y) {
                    return Scan::Violation(Witness {
                        profiles: vec![p.clone()],
                        candidates: vec![y.clone()],
                        detail: WitnessDetail::Subsets {
                            inner: inner_names.clone(),
                            outer: roster.clone(),
                        },
                    });
                }
            }
        }
    }
    Scan::Clean
}

/// Undefeated candidates within `subset`: of the restricted profile when
/// `local`, of the full profile's relation intersected with the subset
/// otherwise.
fn choice_set(
    eval: &mut Evaluator,
    p: &Profile,
    subset: &[Candidate],
    local: bool,
) -> Vec<Candidate> {
    if local {
        let q = restrict(p, subset).expect("subset of the roster");
        return eval.undefeated(&q);
    }
    let rel = eval.defeats(p);
    subset
        .iter()
        .filter(|y| !subset.iter().any(|x| rel.defeats(x, y)))
        .cloned()
        .collect()
}

/// The pair-quantified independence conditions, each with its own
/// relatedness predicate and violation shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairKind {
    Coherent,
    Weak,
    Fiia,
    Viia,
    Between(BetweennessMode),
}

fn pair_axiom_kind(axiom: AxiomId) -> Option<PairKind> {
    match axiom {
        AxiomId::CoherentIia => Some(PairKind::Coherent),
        AxiomId::WeakIia => Some(PairKind::Weak),
        AxiomId::Fiia => Some(PairKind::Fiia),
        AxiomId::Viia => Some(PairKind::Viia),
        AxiomId::ModifiedIia => Some(PairKind::Between(BetweennessMode::Modified)),
        AxiomId::IntensityIia => Some(PairKind::Between(BetweennessMode::Intensity)),
        _ => None,
    }
}

fn pair_related(kind: PairKind, p: &Profile, q: &Profile, x: &Candidate, y: &Candidate) -> bool {
    match kind {
        PairKind::Coherent => coherent_iia_related(p, q, x, y).expect("x and y are distinct"),
        PairKind::Weak | PairKind::Viia => restrictions_match(p, q, x, y),
        PairKind::Fiia => p.candidates() == q.candidates() && restrictions_match(p, q, x, y),
        PairKind::Between(mode) => modified_iia_related(p, q, x, y, mode)
            .expect("x and y are shared, electorates match"),
    }
}

fn pair_violated(
    kind: PairKind,
    eval: &mut Evaluator,
    p: &Profile,
    q: &Profile,
    x: &Candidate,
    y: &Candidate,
) -> bool {
    match kind {
        PairKind::Coherent => eval.defeats(p).defeats(x, y) && !eval.defeats(q).defeats(x, y),
        PairKind::Weak => eval.defeats(q).defeats(x, y) && eval.defeats(p).defeats(y, x),
        PairKind::Fiia | PairKind::Viia | PairKind::Between(_) => {
            eval.defeats(p).defeats(x, y) != eval.defeats(q).defeats(x, y)
        }
    }
}

/// Scans one ordered profile pair over the shared candidates, in
/// lexicographic pair order. Profiles with different electorates are
/// unrelated under every pair axiom, so the pair is skipped for free.
fn scan_pair_instance(
    kind: PairKind,
    eval: &mut Evaluator,
    p: &Profile,
    q: &Profile,
    meter: &mut Meter,
) -> Scan {
    if p.voter_count() != q.voter_count() {
        return Scan::Clean;
    }
    let shared: Vec<&Candidate> = p
        .candidates()
        .iter()
        .filter(|c| q.index_of(c).is_some())
        .collect();
    for &x in &shared {
        for &y in &shared {
            if x == y {
                continue;
            }
            spend!(meter);
            if pair_related(kind, p, q, x, y) && pair_violated(kind, eval, p, q, x, y) {
                return Scan::Violation(Witness {
                    profiles: vec![p.clone(), q.clone()],
                    candidates: vec![x.clone(), y.clone()],
                    detail: WitnessDetail::None,
                });
            }
        }
    }
    Scan::Clean
}

fn scan_pairs_in_domain(
    kind: PairKind,
    eval: &mut Evaluator,
    profiles: &[Profile],
    meter: &mut Meter,
) -> Scan {
    for p in profiles {
        for q in profiles {
            match scan_pair_instance(kind, eval, p, q, meter) {
                Scan::Clean => {}
                other => return other,
            }
        }
    }
    Scan::Clean
}

fn scan_coherent_iia(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    scan_pairs_in_domain(PairKind::Coherent, eval, profiles, meter)
}

fn scan_weak_iia(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    scan_pairs_in_domain(PairKind::Weak, eval, profiles, meter)
}

fn scan_fiia(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    scan_pairs_in_domain(PairKind::Fiia, eval, profiles, meter)
}

fn scan_viia(eval: &mut Evaluator, profiles: &[Profile], meter: &mut Meter) -> Scan {
    match scan_pairs_in_domain(PairKind::Viia, eval, profiles, meter) {
        Scan::Clean => {}
        other => return other,
    }
    // the variable-candidate quantifier also ranges over candidate
    // deletions, realized by pairing each profile with its restrictions
    for p in profiles {
        let roster = p.candidates().to_vec();
        let full: u32 = (1 << roster.len()) - 1;
        for mask in 1..=full {
            if mask.count_ones() < 2 {
                continue;
            }
            let names = mask_candidates(&roster, mask);
            let q = restrict(p, &names).expect("subset of the roster");
            match scan_pair_instance(PairKind::Viia, eval, p, &q, meter) {
                Scan::Clean => {}
                other => return other,
            }
        }
    }
    Scan::Clean
}

/// Checks a pair axiom over an explicit list of ordered profile pairs
/// rather than a domain's pair space; the profiles need not share rosters
/// or electorates (unrelated pairs simply cannot violate). Non-pair axioms
/// are rejected.
pub fn check_axiom_on_pairs(
    axiom: AxiomId,
    method: MethodId,
    pairs: &[(Profile, Profile)],
    budget: u64,
) -> Result<AxiomVerdict, AxiomError> {
    let Some(kind) = pair_axiom_kind(axiom) else {
        return Err(AxiomError::NotAPairAxiom(axiom));
    };
    let mut eval = Evaluator::new(method);
    let mut meter = Meter { left: budget };
    let mut scan = Scan::Clean;
    for (p, q) in pairs {
        match scan_pair_instance(kind, &mut eval, p, q, &mut meter) {
            Scan::Clean => {}
            other => {
                scan = other;
                break;
            }
        }
    }
    let (status, witness) = match scan {
        Scan::Clean => (CheckStatus::HoldsOnDomain, None),
        Scan::Violation(w) => {
            debug_assert_eq!(replay_witness(axiom, method, &w), Ok(true));
            (CheckStatus::Counterexample, Some(w))
        }
        Scan::Exhausted => (CheckStatus::BudgetExceeded, None),
    };
    Ok(AxiomVerdict {
        axiom,
        method,
        domain: if pairs.len() == 1 {
            String::from("1 explicit profile pair")
        } else {
            alloc::format!("{} explicit profile pairs", pairs.len())
        },
        status,
        witness,
    })
}

// Decorrelates the derived-ballot stream from the domain's own sampling
// stream, which is seeded with the bare seed.
const BETWEENNESS_SALT: u64 = 0x9e3779b97f4a7c15;

/// Derived profiles tested per (profile, ordered pair) on sampled domains.
const DERIVED_PER_PAIR: usize = 3;

fn scan_betweenness(
    eval: &mut Evaluator,
    profiles: &[Profile],
    domain: &ProfileDomain,
    mode: BetweennessMode,
    meter: &mut Meter,
) -> Scan {
    // On exhaustive domains, related pairs are dense enough to find by
    // scanning; on sampled domains two independent draws are almost never
    // related, so partners are constructed instead: each voter's ballot is
    // rebuilt around the x-vs-y block, preserving exactly what the
    // relatedness predicate inspects.
    let DomainMode::Random { seed, .. } = *domain.mode() else {
        return scan_pairs_in_domain(PairKind::Between(mode), eval, profiles, meter);
    };
    let mut rng = ChaCha12Rng::seed_from_u64(seed ^ BETWEENNESS_SALT);
    for p in profiles {
        let roster = p.candidates().to_vec();
        for xi in 0..roster.len() {
            for yi in 0..roster.len() {
                if xi == yi {
                    continue;
                }
                let (x, y) = (&roster[xi], &roster[yi]);
                for _ in 0..DERIVED_PER_PAIR {
                    spend!(meter);
                    let q = derive_betweenness_partner(p, xi, yi, mode, &mut rng);
                    debug_assert_eq!(modified_iia_related(p, &q, x, y, mode), Ok(true));
                    if eval.defeats(p).defeats(x, y) != eval.defeats(&q).defeats(x, y) {
                        return Scan::Violation(Witness {
                            profiles: vec![p.clone(), q],
                            candidates: vec![x.clone(), y.clone()],
                            detail: WitnessDetail::None,
                        });
                    }
                }
            }
        }
    }
    Scan::Clean
}

/// Rebuilds each ballot around its x-vs-y block: the x-y order is kept; in
/// `Modified` mode the same candidates sit in between (reshuffled), in
/// `Intensity` mode a fresh set of the same size is drawn; all other
/// candidates are scattered above and below.
fn derive_betweenness_partner(
    p: &Profile,
    xi: usize,
    yi: usize,
    mode: BetweennessMode,
    rng: &mut ChaCha12Rng,
) -> Profile {
    let m = p.candidate_count();
    let mut rows = Vec::with_capacity(p.voter_count());
    for v in 0..p.voter_count() {
        let pos = p.positions(v);
        let (lo, hi) = order(pos[xi], pos[yi]);
        let row = p.row(v);
        let first = row[lo as usize];
        let second = row[hi as usize];
        let mut between: Vec<u32> = row[(lo as usize + 1)..hi as usize].to_vec();
        let mut outside: Vec<u32> = row[..lo as usize]
            .iter()
            .chain(&row[(hi as usize + 1)..])
            .copied()
            .collect();
        if mode == BetweennessMode::Intensity {
            let k = between.len();
            let mut pool = between;
            pool.extend(&outside);
            pool.shuffle(rng);
            outside = pool.split_off(k);
            between = pool;
        }
        between.shuffle(rng);
        let mut above = Vec::new();
        let mut below = Vec::new();
        for c in outside {
            if rng.gen_bool(0.5) {
                above.push(c);
            } else {
                below.push(c);
            }
        }
        above.shuffle(rng);
        below.shuffle(rng);
        let mut new_row = above;
        new_row.push(first);
        new_row.extend(between);
        new_row.push(second);
        new_row.extend(below);
        debug_assert_eq!(new_row.len(), m);
        rows.push(new_row);
    }
    Profile::from_rows(p.candidates().to_vec(), rows)
}

/// Re-runs a single recorded instance: `Ok(true)` means the violation
/// reproduces, `Ok(false)` means the instance satisfies the axiom. The
/// witness must have the shape the axiom's scanner produces.
pub fn replay_witness(axiom: AxiomId, method: MethodId, w: &Witness) -> Result<bool, AxiomError> {
    match axiom {
        AxiomId::Availability => {
            let p = witness_profile(w, 0)?;
            Ok(defeat(method, p).undefeated().is_empty())
        }
        AxiomId::Acyclicity => {
            let p = witness_profile(w, 0)?;
            Ok(!defeat(method, p).is_acyclic())
        }
        AxiomId::Anonymity => {
            let p = witness_profile(w, 0)?;
            let WitnessDetail::VoterSwap { first, second } = w.detail else {
                return Err(AxiomError::MalformedWitness("expected a voter swap"));
            };
            let n = p.voter_count();
            if first >= n || second >= n {
                return Err(AxiomError::MalformedWitness("swapped voter out of range"));
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(first, second);
            let q = permute_voters(p, &perm)?;
            check_recorded_transform(w, &q)?;
            let (x, y) = witness_pair(w)?;
            Ok(defeat(method, p).defeats(x, y) != defeat(method, &q).defeats(x, y))
        }
        AxiomId::Neutrality => {
            let p = witness_profile(w, 0)?;
            let WitnessDetail::CandidateSwap { first, second } = &w.detail else {
                return Err(AxiomError::MalformedWitness("expected a candidate swap"));
            };
            let swap = [
                (first.clone(), second.clone()),
                (second.clone(), first.clone()),
            ];
            let q = permute_candidates(p, &swap)?;
            check_recorded_transform(w, &q)?;
            let (x, y) = witness_pair(w)?;
            let image = |c: &Candidate| -> Candidate {
                if c == first {
                    second.clone()
                } else if c == second {
                    first.clone()
                } else {
                    c.clone()
                }
            };
            Ok(defeat(method, &q).defeats(x, y) != defeat(method, p).defeats(&image(x), &image(y)))
        }
        AxiomId::UpwardHomogeneity => {
            let p = witness_profile(w, 0)?;
            let WitnessDetail::Replicated { factor } = w.detail else {
                return Err(AxiomError::MalformedWitness("expected a replication factor"));
            };
            let q = replicate(p, factor)?;
            check_recorded_transform(w, &q)?;
            let (x, y) = witness_pair(w)?;
            Ok(defeat(method, p).defeats(x, y) && !defeat(method, &q).defeats(x, y))
        }
        AxiomId::Monotonicity | AxiomId::MonotonicityTwoCandidate => {
            let p = witness_profile(w, 0)?;
            if axiom == AxiomId::MonotonicityTwoCandidate && p.candidate_count() != 2 {
                return Err(AxiomError::MalformedWitness(
                    "two-candidate form needs a two-candidate base profile",
                ));
            }
            let WitnessDetail::AdjacentLift { voter, raised } = &w.detail else {
                return Err(AxiomError::MalformedWitness("expected an adjacent lift"));
            };
            let (x, y) = witness_pair(w)?;
            if raised != x {
                return Err(AxiomError::MalformedWitness("lifted candidate is not the defeater"));
            }
            let q = lift_adjacent(p, *voter, raised)?.ok_or(AxiomError::MalformedWitness(
                "lifted candidate was already on top",
            ))?;
            check_recorded_transform(w, &q)?;
            Ok(defeat(method, p).defeats(x, y) && !defeat(method, &q).defeats(x, y))
        }
        AxiomId::NeutralReversalUp | AxiomId::NeutralReversalDown => {
            let p = witness_profile(w, 0)?;
            let WitnessDetail::ReversalPair { ballot } = &w.detail else {
                return Err(AxiomError::MalformedWitness("expected a reversal ballot"));
            };
            let q = add_reversed_pair(p, ballot)?;
            check_recorded_transform(w, &q)?;
            let (x, y) = witness_pair(w)?;
            let (before, after) = if axiom == AxiomId::NeutralReversalUp {
                (p.clone(), q)
            } else {
                (q, p.clone())
            };
            Ok(defeat(method, &before).defeats(x, y) && !defeat(method, &after).defeats(x, y))
        }
        AxiomId::CoherentIia => {
            let (p, q) = witness_profile_pair(w)?;
            let (x, y) = witness_pair(w)?;
            if !coherent_iia_related(p, q, x, y)? {
                return Err(AxiomError::MalformedWitness("profiles are not related"));
            }
            Ok(defeat(method, p).defeats(x, y) && !defeat(method, q).defeats(x, y))
        }
        AxiomId::WeakIia => {
            let (p, q) = witness_profile_pair(w)?;
            let (x, y) = witness_pair(w)?;
            if !restrictions_match(p, q, x, y) {
                return Err(AxiomError::MalformedWitness("profiles are not related"));
            }
            Ok(defeat(method, q).defeats(x, y) && defeat(method, p).defeats(y, x))
        }
        AxiomId::Fiia => {
            let (p, q) = witness_profile_pair(w)?;
            let (x, y) = witness_pair(w)?;
            if p.candidates() != q.candidates() || !restrictions_match(p, q, x, y) {
                return Err(AxiomError::MalformedWitness("profiles are not related"));
            }
            Ok(defeat(method, p).defeats(x, y) != defeat(method, q).defeats(x, y))
        }
        AxiomId::Viia => {
            let (p, q) = witness_profile_pair(w)?;
            let (x, y) = witness_pair(w)?;
            let both = |c: &Candidate| p.index_of(c).is_some() && q.index_of(c).is_some();
            if !both(x) || !both(y) || !restrictions_match(p, q, x, y) {
                return Err(AxiomError::MalformedWitness("profiles are not related"));
            }
            Ok(defeat(method, p).defeats(x, y) != defeat(method, q).defeats(x, y))
        }
        AxiomId::ModifiedIia | AxiomId::IntensityIia => {
            let mode = if axiom == AxiomId::ModifiedIia {
                BetweennessMode::Modified
            } else {
                BetweennessMode::Intensity
            };
            let (p, q) = witness_profile_pair(w)?;
            let (x, y) = witness_pair(w)?;
            if !modified_iia_related(p, q, x, y, mode)? {
                return Err(AxiomError::MalformedWitness("profiles are not related"));
            }
            Ok(defeat(method, p).defeats(x, y) != defeat(method, q).defeats(x, y))
        }
        AxiomId::Pareto => {
            let p = witness_profile(w, 0)?;
            let (x, y) = witness_pair(w)?;
            let unanimous = margin(p, x, y)? == p.voter_count() as i64;
            Ok(unanimous && !defeat(method, p).defeats(x, y))
        }
        AxiomId::MajorityDefeat => {
            let p = witness_profile(w, 0)?;
            let (x, y) = witness_pair(w)?;
            Ok(defeat(method, p).defeats(x, y) && margin(p, x, y)? <= 0)
        }
        AxiomId::CondorcetConsistency => {
            let p = witness_profile(w, 0)?;
            let c = w
                .candidates
                .first()
                .ok_or(AxiomError::MalformedWitness("missing the majority champion"))?;
            if condorcet_winner(p).as_ref() != Some(c) {
                return Err(AxiomError::MalformedWitness(
                    "recorded candidate does not beat every rival head to head",
                ));
            }
            Ok(defeat(method, p).undefeated() != [c.clone()])
        }
        AxiomId::BinaryMajoritarianism => {
            let p = witness_profile(w, 0)?;
            if p.candidate_count() != 2 {
                return Err(AxiomError::MalformedWitness("profile is not two-candidate"));
            }
            let (x, y) = witness_pair(w)?;
            Ok(defeat(method, p).defeats(x, y) != (margin(p, x, y)? > 0))
        }
        AxiomId::ImmunityToSpoilers | AxiomId::StrongStability => {
            let p = witness_profile(w, 0)?;
            let WitnessDetail::RemovedCandidate { candidate: b } = &w.detail else {
                return Err(AxiomError::MalformedWitness("expected a removed candidate"));
            };
            let (a, b_claimed) = witness_pair(w)?;
            if b_claimed != b {
                return Err(AxiomError::MalformedWitness(
                    "removed candidate disagrees with the recorded pair",
                ));
            }
            let keep: Vec<Candidate> = p
                .candidates()
                .iter()
                .filter(|c| *c != b)
                .cloned()
                .collect();
            if keep.len() == p.candidate_count() {
                return Err(AxiomError::MalformedWitness("removed candidate not in roster"));
            }
            let without = restrict(p, &keep)?;
            check_recorded_transform(w, &without)?;
            let premise = if axiom == AxiomId::ImmunityToSpoilers {
                margin(p, a, b)? > 0 && !defeat(method, p).undefeated().contains(b)
            } else {
                margin(p, b, a)? <= 0
            };
            Ok(premise
                && defeat(method, &without).undefeated().contains(a)
                && !defeat(method, p).undefeated().contains(a))
        }
        AxiomId::LocalAlpha | AxiomId::GlobalAlpha | AxiomId::AlphaBar => {
            let p = witness_profile(w, 0)?;
            let WitnessDetail::Subsets { inner, outer } = &w.detail else {
                return Err(AxiomError::MalformedWitness("expected subset data"));
            };
            for c in inner {
                if !outer.contains(c) {
                    return Err(AxiomError::MalformedWitness("inner set not inside outer set"));
                }
            }
            for c in outer {
                if p.index_of(c).is_none() {
                    return Err(AxiomError::MalformedWitness("subset member not in roster"));
                }
            }
            let y = w
                .candidates
                .first()
                .ok_or(AxiomError::MalformedWitness("missing the displaced candidate"))?;
            let mut eval = Evaluator::new(method);
            let (chosen_outer, chosen_inner) = match axiom {
                AxiomId::LocalAlpha => (
                    choice_set(&mut eval, p, outer, true),
                    choice_set(&mut eval, p, inner, true),
                ),
                AxiomId::GlobalAlpha => (
                    choice_set(&mut eval, p, outer, false),
                    choice_set(&mut eval, p, inner, false),
                ),
                _ => (eval.undefeated(p), choice_set(&mut eval, p, inner, true)),
            };
            Ok(inner.contains(y) && chosen_outer.contains(y) && !chosen_inner.contains(y))
        }
    }
}

fn witness_profile(w: &Witness, idx: usize) -> Result<&Profile, AxiomError> {
    w.profiles
        .get(idx)
        .ok_or(AxiomError::MalformedWitness("missing profile"))
}

fn witness_profile_pair(w: &Witness) -> Result<(&Profile, &Profile), AxiomError> {
    Ok((witness_profile(w, 0)?, witness_profile(w, 1)?))
}

fn witness_pair(w: &Witness) -> Result<(&Candidate, &Candidate), AxiomError> {
    match w.candidates.as_slice() {
        [x, y, ..] if x != y => Ok((x, y)),
        _ => Err(AxiomError::MalformedWitness(
            "expected two distinct distinguished candidates",
        )),
    }
}

/// A transform witness may record the transformed profile alongside the
/// base one; if it does, it must match what the detail rebuilds.
fn check_recorded_transform(w: &Witness, rebuilt: &Profile) -> Result<(), AxiomError> {
    match w.profiles.get(1) {
        None => Ok(()),
        Some(recorded) if recorded == rebuilt => Ok(()),
        Some(_) => Err(AxiomError::MalformedWitness(
            "recorded transformed profile does not match the transform",
        )),
    }
}
