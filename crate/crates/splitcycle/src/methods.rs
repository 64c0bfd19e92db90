//! The method registry: collective choice rules that map a profile to a
//! defeat relation over its candidates, Split Cycle in four independent
//! formulations, choice sets derived from defeats, and resoluteness
//! comparison between rules.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::ballots::{restrict, BallotError, Candidate, DomainError, Profile, ProfileDomain};
use crate::graphs::{margin_graph, simple_cycles, widest_path_matrix, MarginGraph};

/// Every rule in the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MethodId {
    SimpleMajority,
    LeftCovering,
    RightCovering,
    Fishburn,
    Copeland,
    Borda,
    Plurality,
    Hare,
    WeightedCovering,
    BeatPath,
    SplitCycle,
    Pareto,
    PositiveNegative,
    Minimax,
    Null,
    GlobalSplit,
}

pub const ALL_METHODS: [MethodId; 16] = [
    MethodId::SimpleMajority,
    MethodId::LeftCovering,
    MethodId::RightCovering,
    MethodId::Fishburn,
    MethodId::Copeland,
    MethodId::Borda,
    MethodId::Plurality,
    MethodId::Hare,
    MethodId::WeightedCovering,
    MethodId::BeatPath,
    MethodId::SplitCycle,
    MethodId::Pareto,
    MethodId::PositiveNegative,
    MethodId::Minimax,
    MethodId::Null,
    MethodId::GlobalSplit,
];

impl MethodId {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodId::SimpleMajority => "simple_majority",
            MethodId::LeftCovering => "left_covering",
            MethodId::RightCovering => "right_covering",
            MethodId::Fishburn => "fishburn",
            MethodId::Copeland => "copeland",
            MethodId::Borda => "borda",
            MethodId::Plurality => "plurality",
            MethodId::Hare => "hare",
            MethodId::WeightedCovering => "weighted_covering",
            MethodId::BeatPath => "beat_path",
            MethodId::SplitCycle => "split_cycle",
            MethodId::Pareto => "pareto",
            MethodId::PositiveNegative => "positive_negative",
            MethodId::Minimax => "minimax",
            MethodId::Null => "null",
            MethodId::GlobalSplit => "global_split",
        }
    }

    pub fn descriptor(self) -> VccrDescriptor {
        let (margin, qualitative) = match self {
            MethodId::Borda => (true, false),
            MethodId::Plurality
            | MethodId::Hare
            | MethodId::Pareto
            | MethodId::PositiveNegative => (false, false),
            _ => (true, true),
        };
        VccrDescriptor {
            id: self,
            margin_based: margin,
            qualitative_margin_based: qualitative,
            acyclic_claimed: self != MethodId::SimpleMajority,
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodId {
    type Err = MethodError;

    fn from_str(s: &str) -> Result<Self, MethodError> {
        ALL_METHODS
            .iter()
            .copied()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| MethodError::UnknownMethod(s.to_string()))
    }
}

/// What a rule claims about itself: whether its output is determined by the
/// margin graph, by the qualitative margin graph (majority arcs plus the
/// relative order of margins), and whether its defeat relations are always
/// acyclic. Qualitative-margin based implies margin based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VccrDescriptor {
    pub id: MethodId,
    pub margin_based: bool,
    pub qualitative_margin_based: bool,
    pub acyclic_claimed: bool,
}

/// A defeat relation over a candidate universe: the output of a rule.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DefeatRelation {
    universe: Vec<Candidate>,
    pairs: BTreeSet<(u32, u32)>,
}

impl DefeatRelation {
    pub(crate) fn new(universe: Vec<Candidate>, pairs: BTreeSet<(u32, u32)>) -> Self {
        debug_assert!(universe.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(pairs
            .iter()
            .all(|&(i, j)| i != j && (i as usize) < universe.len() && (j as usize) < universe.len()));
        DefeatRelation { universe, pairs }
    }

    /// The candidates the relation speaks about, sorted.
    pub fn universe(&self) -> &[Candidate] {
        &self.universe
    }

    pub fn defeats(&self, x: &Candidate, y: &Candidate) -> bool {
        match (
            self.universe.binary_search(x),
            self.universe.binary_search(y),
        ) {
            (Ok(i), Ok(j)) => self.pairs.contains(&(i as u32, j as u32)),
            _ => false,
        }
    }

    pub(crate) fn index_pairs(&self) -> &BTreeSet<(u32, u32)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Defeat pairs as candidate names, sorted.
    pub fn pair_list(&self) -> Vec<(Candidate, Candidate)> {
        self.pairs
            .iter()
            .map(|&(i, j)| {
                (
                    self.universe[i as usize].clone(),
                    self.universe[j as usize].clone(),
                )
            })
            .collect()
    }

    /// True when one relation's pairs are a subset of the other's (both
    /// must share the universe).
    pub fn is_subrelation_of(&self, other: &DefeatRelation) -> bool {
        self.universe == other.universe && self.pairs.is_subset(&other.pairs)
    }

    /// Candidates no one defeats.
    pub fn undefeated(&self) -> Vec<Candidate> {
        let n = self.universe.len() as u32;
        (0..n)
            .filter(|&j| !(0..n).any(|i| self.pairs.contains(&(i, j))))
            .map(|j| self.universe[j as usize].clone())
            .collect()
    }

    /// True when the defeat pairs contain no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let n = self.universe.len();
        // 0 unvisited, 1 on the current path, 2 done
        let mut state = vec![0u8; n];
        fn visit(v: usize, pairs: &BTreeSet<(u32, u32)>, n: usize, state: &mut [u8]) -> bool {
            state[v] = 1;
            for w in 0..n {
                if pairs.contains(&(v as u32, w as u32)) {
                    if state[w] == 1 {
                        return false;
                    }
                    if state[w] == 0 && !visit(w, pairs, n, state) {
                        return false;
                    }
                }
            }
            state[v] = 2;
            true
        }
        (0..n).all(|v| state[v] != 0 || visit(v, &self.pairs, n, &mut state))
    }
}

/// Candidates no one defeats; the winners induced by a defeat relation.
pub fn undefeated(r: &DefeatRelation) -> Vec<Candidate> {
    r.undefeated()
}

/// Computes a rule's defeat relation on a profile.
pub fn defeat(method: MethodId, p: &Profile) -> DefeatRelation {
    match method {
        MethodId::Borda => borda_profile(p),
        MethodId::Plurality => from_scores(p.candidates().to_vec(), &plurality_scores(p)),
        MethodId::Hare => from_scores(p.candidates().to_vec(), &hare_scores(p)),
        MethodId::Pareto => pareto_profile(p),
        MethodId::PositiveNegative => {
            from_scores(p.candidates().to_vec(), &positive_negative_scores(p))
        }
        _ => defeat_graph(method, &margin_graph(p)).expect("margin-based method"),
    }
}

/// Computes a margin-based rule directly on a margin graph. Errors for the
/// rules that need ballots (plurality, hare, pareto, positive_negative).
pub fn defeat_graph(method: MethodId, g: &MarginGraph) -> Result<DefeatRelation, MethodError> {
    let rel = match method {
        MethodId::SimpleMajority => simple_majority_graph(g),
        MethodId::LeftCovering => covering_graph(g, CoveringSide::Left),
        MethodId::RightCovering => covering_graph(g, CoveringSide::Right),
        MethodId::Fishburn => fishburn_graph(g),
        MethodId::Copeland => from_scores(g.nodes().to_vec(), &copeland_scores(g)),
        MethodId::Borda => from_scores(g.nodes().to_vec(), &margin_sum_scores(g)),
        MethodId::WeightedCovering => weighted_covering_graph(g),
        MethodId::BeatPath => beat_path_graph(g),
        MethodId::SplitCycle => split_cycle_defeat_graph(g, Formulation::WidestPath),
        MethodId::Minimax => minimax_graph(g),
        MethodId::Null => DefeatRelation::new(g.nodes().to_vec(), BTreeSet::new()),
        MethodId::GlobalSplit => global_split_graph(g),
        MethodId::Plurality
        | MethodId::Hare
        | MethodId::Pareto
        | MethodId::PositiveNegative => return Err(MethodError::NotMarginBased(method)),
    };
    Ok(rel)
}

/// Defeat by strictly higher score.
fn from_scores(universe: Vec<Candidate>, scores: &[i64]) -> DefeatRelation {
    let n = scores.len();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && scores[i] > scores[j] {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(universe, pairs)
}

fn simple_majority_graph(g: &MarginGraph) -> DefeatRelation {
    let pairs = g
        .edges()
        .into_iter()
        .map(|(i, j, _)| (i as u32, j as u32))
        .collect();
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

/// z left-covers ... : every majority defeater of `i` also majority-defeats
/// `j`.
fn left_covers(g: &MarginGraph, i: usize, j: usize) -> bool {
    let n = g.node_count();
    (0..n).all(|z| g.weight(z, i) <= 0 || g.weight(z, j) > 0)
}

/// Every candidate `j` majority-beats is also majority-beaten by `i`.
fn right_covers(g: &MarginGraph, i: usize, j: usize) -> bool {
    let n = g.node_count();
    (0..n).all(|z| g.weight(j, z) <= 0 || g.weight(i, z) > 0)
}

enum CoveringSide {
    Left,
    Right,
}

fn covering_graph(g: &MarginGraph, side: CoveringSide) -> DefeatRelation {
    let n = g.node_count();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || g.weight(i, j) <= 0 {
                continue;
            }
            let covers = match side {
                CoveringSide::Left => left_covers(g, i, j),
                CoveringSide::Right => right_covers(g, i, j),
            };
            if covers {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

/// Strict left-covering, with no majority edge required.
fn fishburn_graph(g: &MarginGraph) -> DefeatRelation {
    let n = g.node_count();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && left_covers(g, i, j) && !left_covers(g, j, i) {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

fn copeland_scores(g: &MarginGraph) -> Vec<i64> {
    let n = g.node_count();
    (0..n)
        .map(|i| {
            let wins = (0..n).filter(|&j| g.weight(i, j) > 0).count() as i64;
            let losses = (0..n).filter(|&j| g.weight(i, j) < 0).count() as i64;
            wins - losses
        })
        .collect()
}

/// Summed margins order candidates exactly as Borda scores do.
fn margin_sum_scores(g: &MarginGraph) -> Vec<i64> {
    let n = g.node_count();
    (0..n)
        .map(|i| (0..n).map(|j| g.weight(i, j)).sum())
        .collect()
}

fn borda_profile(p: &Profile) -> DefeatRelation {
    from_scores(p.candidates().to_vec(), &borda_scores(p))
}

/// Canonical Borda weights: a candidate scores the number of candidates
/// ranked below it, summed over ballots.
pub fn borda_scores(p: &Profile) -> Vec<i64> {
    let m = p.candidate_count();
    let mut scores = vec![0i64; m];
    for v in 0..p.voter_count() {
        for (rank, &c) in p.row(v).iter().enumerate() {
            scores[c as usize] += (m - 1 - rank) as i64;
        }
    }
    scores
}

pub fn plurality_scores(p: &Profile) -> Vec<i64> {
    let mut scores = vec![0i64; p.candidate_count()];
    for v in 0..p.voter_count() {
        scores[p.row(v)[0] as usize] += 1;
    }
    scores
}

/// Iterated plurality survival: in each round the candidates strictly above
/// the lowest plurality score (among those still active) survive and score
/// a point; the rounds stop when all active candidates tie. A candidate's
/// score is the number of rounds survived, so first-round eliminees score 0.
pub fn hare_scores(p: &Profile) -> Vec<i64> {
    let m = p.candidate_count();
    let mut active = vec![true; m];
    let mut scores = vec![0i64; m];
    loop {
        let mut counts = vec![0u64; m];
        for v in 0..p.voter_count() {
            let top = p
                .row(v)
                .iter()
                .find(|&&c| active[c as usize])
                .expect("some candidate is active");
            counts[*top as usize] += 1;
        }
        let lowest = (0..m)
            .filter(|&i| active[i])
            .map(|i| counts[i])
            .min()
            .expect("some candidate is active");
        let all_tied = (0..m)
            .filter(|&i| active[i])
            .all(|i| counts[i] == lowest);
        if all_tied {
            return scores;
        }
        for i in 0..m {
            if active[i] && counts[i] > lowest {
                scores[i] += 1;
            } else {
                active[i] = false;
            }
        }
    }
}

fn weighted_covering_graph(g: &MarginGraph) -> DefeatRelation {
    let n = g.node_count();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || g.weight(i, j) <= 0 {
                continue;
            }
            if (0..n)
                .filter(|&z| z != i && z != j)
                .all(|z| g.weight(i, z) >= g.weight(j, z))
            {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

#[allow(clippy::needless_range_loop)]
fn beat_path_graph(g: &MarginGraph) -> DefeatRelation {
    let s = widest_path_matrix(g);
    let n = g.node_count();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && s[i][j] > s[j][i] {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

#[allow(clippy::needless_range_loop)]
fn pareto_profile(p: &Profile) -> DefeatRelation {
    let w = p.margin_matrix();
    let n = p.voter_count() as i64;
    let m = p.candidate_count();
    let mut pairs = BTreeSet::new();
    for i in 0..m {
        for j in 0..m {
            // a margin equal to the voter count means unanimity
            if i != j && w[i][j] == n {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(p.candidates().to_vec(), pairs)
}

pub fn positive_negative_scores(p: &Profile) -> Vec<i64> {
    let m = p.candidate_count();
    let mut scores = vec![0i64; m];
    for v in 0..p.voter_count() {
        let row = p.row(v);
        scores[row[0] as usize] += 1;
        scores[row[m - 1] as usize] -= 1;
    }
    scores
}

fn minimax_graph(g: &MarginGraph) -> DefeatRelation {
    let n = g.node_count();
    // largest majority loss; 0 for a candidate no one majority-beats
    let losses: Vec<i64> = (0..n)
        .map(|i| (0..n).map(|j| g.weight(j, i)).max().unwrap_or(0).max(0))
        .collect();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && losses[i] < losses[j] {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

/// Like Split Cycle but with one global threshold: `x` defeats `y` iff the
/// margin is positive and exceeds the splitting number of every majority
/// cycle anywhere in the graph, not just the cycles through `x` and `y`.
fn global_split_graph(g: &MarginGraph) -> DefeatRelation {
    let threshold = simple_cycles(g)
        .iter()
        .map(|c| crate::graphs::splitting_number(g, c).expect("cycle from this graph"))
        .max()
        .unwrap_or(0);
    let n = g.node_count();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let w = g.weight(i, j);
            if i != j && w > 0 && w > threshold {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

/// The four formulations of Split Cycle. They agree on every profile; the
/// registry uses `WidestPath`, and the others exist to check it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formulation {
    /// Per pair, find the smallest threshold `t` such that the subgraph of
    /// margins above `t` has no cycle through both candidates; defeat iff
    /// the margin exceeds that threshold.
    Threshold,
    /// Enumerate every simple cycle once; defeat iff the margin is positive
    /// and exceeds the splitting number of each cycle through the pair.
    AllCycles,
    /// Per pair `(x, y)`, walk the simple paths from `y` back to `x`; each
    /// closed up by the edge `x -> y` is a cycle whose splitting number the
    /// margin must exceed.
    EdgeCycles,
    /// Defeat iff the margin is positive and exceeds the widest-path
    /// strength from `y` to `x`.
    WidestPath,
}

pub const ALL_FORMULATIONS: [Formulation; 4] = [
    Formulation::Threshold,
    Formulation::AllCycles,
    Formulation::EdgeCycles,
    Formulation::WidestPath,
];

pub fn split_cycle_defeat(p: &Profile, f: Formulation) -> DefeatRelation {
    split_cycle_defeat_graph(&margin_graph(p), f)
}

pub fn split_cycle_defeat_graph(g: &MarginGraph, f: Formulation) -> DefeatRelation {
    match f {
        Formulation::Threshold => split_cycle_threshold(g),
        Formulation::AllCycles => split_cycle_all_cycles(g),
        Formulation::EdgeCycles => split_cycle_edge_cycles(g),
        Formulation::WidestPath => split_cycle_widest_path(g),
    }
}

#[allow(clippy::needless_range_loop)]
fn split_cycle_threshold(g: &MarginGraph) -> DefeatRelation {
    let n = g.node_count();
    // candidate thresholds: 0 and each distinct positive margin, ascending;
    // the subgraph of margins above a threshold only changes at these values
    let mut levels: Vec<i64> = vec![0];
    for (_, _, w) in g.edges() {
        levels.push(w);
    }
    levels.sort_unstable();
    levels.dedup();
    // cycle node sets of the subgraph with margins above each level,
    // computed on demand
    let mut masks_at: Vec<Option<Vec<u64>>> = vec![None; levels.len()];
    let cycle_masks = |g: &MarginGraph, level_idx: usize, masks_at: &mut Vec<Option<Vec<u64>>>| -> Vec<u64> {
        if masks_at[level_idx].is_none() {
            let level = levels[level_idx];
            let mut w = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    if g.weight(i, j) > level {
                        w[i][j] = g.weight(i, j);
                        w[j][i] = -g.weight(i, j);
                    }
                }
            }
            let sub = MarginGraph::from_matrix(g.nodes().to_vec(), w);
            let masks = simple_cycles(&sub)
                .iter()
                .map(|c| {
                    c.nodes().iter().fold(0u64, |acc, node| {
                        acc | 1 << g.index_of(node).expect("cycle node from this graph")
                    })
                })
                .collect();
            masks_at[level_idx] = Some(masks);
        }
        masks_at[level_idx].clone().expect("just filled")
    };
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || g.weight(i, j) <= 0 {
                continue;
            }
            let pair_mask = (1u64 << i) | (1 << j);
            let threshold = (0..levels.len())
                .find(|&k| {
                    cycle_masks(g, k, &mut masks_at)
                        .iter()
                        .all(|m| m & pair_mask != pair_mask)
                })
                .map(|k| levels[k])
                .expect("the top level has no cycles at all");
            if g.weight(i, j) > threshold {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

fn split_cycle_all_cycles(g: &MarginGraph) -> DefeatRelation {
    let n = g.node_count();
    let cycles: Vec<(u64, i64)> = simple_cycles(g)
        .iter()
        .map(|c| {
            let mask = c.nodes().iter().fold(0u64, |acc, node| {
                acc | 1 << g.index_of(node).expect("cycle node from this graph")
            });
            let split = crate::graphs::splitting_number(g, c).expect("cycle from this graph");
            (mask, split)
        })
        .collect();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let w = g.weight(i, j);
            if i == j || w <= 0 {
                continue;
            }
            let pair_mask = (1u64 << i) | (1 << j);
            if cycles
                .iter()
                .all(|&(mask, split)| mask & pair_mask != pair_mask || w > split)
            {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

fn split_cycle_edge_cycles(g: &MarginGraph) -> DefeatRelation {
    let n = g.node_count();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let w = g.weight(i, j);
            if i == j || w <= 0 {
                continue;
            }
            // cycles through the edge i -> j are exactly the simple paths
            // j ~> i closed up by that edge
            let mut ok = true;
            let mut visited = vec![false; n];
            visited[j] = true;
            path_dfs(g, j, i, &mut visited, i64::MAX, &mut |path_min| {
                // splitting number of the closed-up cycle
                if w <= w.min(path_min) {
                    ok = false;
                }
            });
            if ok {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

fn path_dfs<F: FnMut(i64)>(
    g: &MarginGraph,
    at: usize,
    target: usize,
    visited: &mut [bool],
    min_so_far: i64,
    report: &mut F,
) {
    for next in 0..g.node_count() {
        let w = g.weight(at, next);
        if w <= 0 {
            continue;
        }
        let strength = min_so_far.min(w);
        if next == target {
            report(strength);
        } else if !visited[next] {
            visited[next] = true;
            path_dfs(g, next, target, visited, strength, report);
            visited[next] = false;
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn split_cycle_widest_path(g: &MarginGraph) -> DefeatRelation {
    let s = widest_path_matrix(g);
    let n = g.node_count();
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let w = g.weight(i, j);
            if i != j && w > 0 && s[j][i] < w {
                pairs.insert((i as u32, j as u32));
            }
        }
    }
    DefeatRelation::new(g.nodes().to_vec(), pairs)
}

/// Winners of the whole election: the undefeated candidates.
pub fn winners(method: MethodId, p: &Profile) -> Vec<Candidate> {
    defeat(method, p).undefeated()
}

/// Global choice: the members of `subset` that no other member of `subset`
/// defeats, with defeats computed on the full profile.
pub fn global_choice(
    method: MethodId,
    p: &Profile,
    subset: &[Candidate],
) -> Result<Vec<Candidate>, MethodError> {
    let keep = validate_subset(p, subset)?;
    let rel = defeat(method, p);
    let chosen: Vec<Candidate> = keep
        .iter()
        .filter(|y| {
            !keep
                .iter()
                .any(|z| rel.defeats(z, y))
        })
        .cloned()
        .collect();
    if chosen.is_empty() {
        return Err(MethodError::EmptyChoice { method });
    }
    Ok(chosen)
}

/// Local choice: defeats are recomputed on the profile restricted to
/// `subset`, and the undefeated candidates of that restriction are chosen.
pub fn local_choice(
    method: MethodId,
    p: &Profile,
    subset: &[Candidate],
) -> Result<Vec<Candidate>, MethodError> {
    let keep = validate_subset(p, subset)?;
    let restricted = restrict(p, &keep)?;
    let chosen = defeat(method, &restricted).undefeated();
    if chosen.is_empty() {
        return Err(MethodError::EmptyChoice { method });
    }
    Ok(chosen)
}

fn validate_subset(p: &Profile, subset: &[Candidate]) -> Result<Vec<Candidate>, MethodError> {
    if subset.is_empty() {
        return Err(MethodError::EmptySubset);
    }
    let mut keep: Vec<Candidate> = Vec::new();
    for c in subset {
        if p.index_of(c).is_none() {
            return Err(MethodError::Ballots(BallotError::NotASubset(
                c.as_str().to_string(),
            )));
        }
        if !keep.contains(c) {
            keep.push(c.clone());
        }
    }
    keep.sort();
    Ok(keep)
}

/// How two rules' defeat relations compare across a set of profiles. "At
/// least as resolute" means defeating a superset of pairs on every profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResolutenessVerdict {
    /// Identical relations on every profile.
    Equal,
    /// The first rule's defeats contain the second's everywhere, strictly
    /// somewhere; the witness is a profile and pair only the first defeats.
    FirstStrictlyMoreResolute { extra: (Profile, Candidate, Candidate) },
    SecondStrictlyMoreResolute { extra: (Profile, Candidate, Candidate) },
    /// Each rule somewhere defeats a pair the other does not.
    Incomparable {
        first_extra: (Profile, Candidate, Candidate),
        second_extra: (Profile, Candidate, Candidate),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutenessReport {
    pub first: MethodId,
    pub second: MethodId,
    pub domain: String,
    pub verdict: ResolutenessVerdict,
}

pub fn compare_resoluteness(
    first: MethodId,
    second: MethodId,
    domain: &ProfileDomain,
) -> Result<ResolutenessReport, DomainError> {
    let profiles: Vec<Profile> = domain.iter()?.collect();
    Ok(compare_resoluteness_profiles(
        first,
        second,
        &profiles,
        domain.summary(),
    ))
}

/// The scan behind [`compare_resoluteness`], over an explicit profile list.
/// Witnesses are the first strict pairs in scan order.
pub fn compare_resoluteness_profiles(
    first: MethodId,
    second: MethodId,
    profiles: &[Profile],
    domain: String,
) -> ResolutenessReport {
    let mut first_extra: Option<(Profile, Candidate, Candidate)> = None;
    let mut second_extra: Option<(Profile, Candidate, Candidate)> = None;
    for p in profiles {
        let a = defeat(first, p);
        let b = defeat(second, p);
        if first_extra.is_none() {
            if let Some(&(i, j)) = a.index_pairs().difference(b.index_pairs()).next() {
                first_extra = Some((
                    p.clone(),
                    a.universe()[i as usize].clone(),
                    a.universe()[j as usize].clone(),
                ));
            }
        }
        if second_extra.is_none() {
            if let Some(&(i, j)) = b.index_pairs().difference(a.index_pairs()).next() {
                second_extra = Some((
                    p.clone(),
                    b.universe()[i as usize].clone(),
                    b.universe()[j as usize].clone(),
                ));
            }
        }
        if first_extra.is_some() && second_extra.is_some() {
            break;
        }
    }
    let verdict = match (first_extra, second_extra) {
        (None, None) => ResolutenessVerdict::Equal,
        (Some(extra), None) => ResolutenessVerdict::FirstStrictlyMoreResolute { extra },
        (None, Some(extra)) => ResolutenessVerdict::SecondStrictlyMoreResolute { extra },
        (Some(first_extra), Some(second_extra)) => ResolutenessVerdict::Incomparable {
            first_extra,
            second_extra,
        },
    };
    ResolutenessReport {
        first,
        second,
        domain,
        verdict,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodError {
    UnknownMethod(String),
    NotMarginBased(MethodId),
    EmptySubset,
    EmptyChoice { method: MethodId },
    Ballots(BallotError),
}

impl From<BallotError> for MethodError {
    fn from(e: BallotError) -> Self {
        MethodError::Ballots(e)
    }
}

impl fmt::Display for MethodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodError::UnknownMethod(s) => write!(f, "unknown method '{s}'"),
            MethodError::NotMarginBased(m) => {
                write!(f, "method '{m}' needs ballots, not just a margin graph")
            }
            MethodError::EmptySubset => f.write_str("choice from an empty candidate set"),
            MethodError::EmptyChoice { method } => {
                write!(f, "method '{method}' leaves no undefeated candidate here")
            }
            MethodError::Ballots(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MethodError {}
