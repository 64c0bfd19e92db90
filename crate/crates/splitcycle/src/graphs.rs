//! Margin graphs and the graph algorithms the voting rules build on:
//! simple cycle enumeration, splitting numbers, widest (maximin) paths,
//! profile synthesis from a target graph, and DOT rendering.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ballots::{Ballot, Candidate, Profile};

/// A weighted tournament-like graph: nodes plus an antisymmetric margin
/// matrix. Entry `[i][j]` is positive exactly when there is an edge from
/// node `i` to node `j`; zero entries mean a pairwise tie.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarginGraph {
    nodes: Vec<Candidate>,
    w: Vec<Vec<i64>>,
}

impl MarginGraph {
    /// Builds a graph from explicit edges. Weights must be positive, at
    /// most one direction per node pair, no self loops.
    pub fn from_edges(
        nodes: Vec<Candidate>,
        edges: &[(Candidate, Candidate, i64)],
    ) -> Result<Self, GraphError> {
        if nodes.is_empty() {
            return Err(GraphError::EmptyNodes);
        }
        let mut sorted = nodes;
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateNode(pair[0].as_str().to_string()));
            }
        }
        let n = sorted.len();
        let mut w = vec![vec![0i64; n]; n];
        for (from, to, weight) in edges {
            let i = index_of(&sorted, from)?;
            let j = index_of(&sorted, to)?;
            if i == j {
                return Err(GraphError::SelfLoop(from.as_str().to_string()));
            }
            if *weight <= 0 {
                return Err(GraphError::NonPositiveWeight {
                    from: from.as_str().to_string(),
                    to: to.as_str().to_string(),
                    weight: *weight,
                });
            }
            if w[i][j] != 0 || w[j][i] != 0 {
                return Err(GraphError::DuplicateEdge {
                    from: from.as_str().to_string(),
                    to: to.as_str().to_string(),
                });
            }
            w[i][j] = *weight;
            w[j][i] = -*weight;
        }
        Ok(MarginGraph { nodes: sorted, w })
    }

    /// Convenience constructor from string tokens.
    pub fn from_names(
        nodes: &[&str],
        edges: &[(&str, &str, i64)],
    ) -> Result<Self, GraphError> {
        let ns = nodes
            .iter()
            .map(|t| Candidate::new(t).map_err(|_| GraphError::BadNodeToken(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let es = edges
            .iter()
            .map(|(f, t, w)| {
                Ok((
                    Candidate::new(f).map_err(|_| GraphError::BadNodeToken(f.to_string()))?,
                    Candidate::new(t).map_err(|_| GraphError::BadNodeToken(t.to_string()))?,
                    *w,
                ))
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        MarginGraph::from_edges(ns, &es)
    }

    pub(crate) fn from_matrix(nodes: Vec<Candidate>, w: Vec<Vec<i64>>) -> Self {
        debug_assert!(nodes.windows(2).all(|p| p[0] < p[1]));
        debug_assert!((0..w.len()).all(|i| (0..w.len()).all(|j| w[i][j] == -w[j][i])));
        MarginGraph { nodes, w }
    }

    /// Nodes, sorted lexicographically.
    pub fn nodes(&self) -> &[Candidate] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn index_of(&self, c: &Candidate) -> Option<usize> {
        self.nodes.binary_search(c).ok()
    }

    /// The margin of node `i` over node `j` (negative when `j` beats `i`).
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.w[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.w
    }

    /// Positive-margin edges as `(from, to, weight)` index triples, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.nodes.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.w[i][j] > 0 {
                    out.push((i, j, self.w[i][j]));
                }
            }
        }
        out
    }

    /// Multiplies every margin by a positive factor.
    pub fn scaled(&self, factor: i64) -> Result<MarginGraph, GraphError> {
        if factor <= 0 {
            return Err(GraphError::NonPositiveWeight {
                from: String::from("*"),
                to: String::from("*"),
                weight: factor,
            });
        }
        let w = self
            .w
            .iter()
            .map(|row| row.iter().map(|x| x * factor).collect())
            .collect();
        Ok(MarginGraph {
            nodes: self.nodes.clone(),
            w,
        })
    }
}

fn index_of(nodes: &[Candidate], c: &Candidate) -> Result<usize, GraphError> {
    nodes
        .binary_search(c)
        .map_err(|_| GraphError::UnknownNode(c.as_str().to_string()))
}

/// The margin graph of a profile.
pub fn margin_graph(p: &Profile) -> MarginGraph {
    MarginGraph {
        nodes: p.candidates().to_vec(),
        w: p.margin_matrix(),
    }
}

/// The unweighted view: an arc wherever the margin is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityGraph {
    nodes: Vec<Candidate>,
    arcs: Vec<(u32, u32)>,
}

impl MajorityGraph {
    pub fn nodes(&self) -> &[Candidate] {
        &self.nodes
    }

    /// Arcs as `(from, to)` node-index pairs, sorted.
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }
}

pub fn majority_graph(g: &MarginGraph) -> MajorityGraph {
    MajorityGraph {
        nodes: g.nodes.clone(),
        arcs: g
            .edges()
            .into_iter()
            .map(|(i, j, _)| (i as u32, j as u32))
            .collect(),
    }
}

/// The majority graph together with the relative order of margins, but not
/// their magnitudes: arcs grouped into tiers of equal weight, weakest tier
/// first. Scaling all margins by a positive factor leaves this view fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualitativeMarginGraph {
    nodes: Vec<Candidate>,
    tiers: Vec<Vec<(u32, u32)>>,
}

impl QualitativeMarginGraph {
    pub fn nodes(&self) -> &[Candidate] {
        &self.nodes
    }

    pub fn tiers(&self) -> &[Vec<(u32, u32)>] {
        &self.tiers
    }

    pub fn arcs(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self.tiers.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }
}

pub fn qualitative_view(g: &MarginGraph) -> QualitativeMarginGraph {
    let mut edges = g.edges();
    edges.sort_by_key(|&(i, j, w)| (w, i, j));
    let mut tiers: Vec<Vec<(u32, u32)>> = Vec::new();
    let mut last: Option<i64> = None;
    for (i, j, w) in edges {
        if last != Some(w) {
            tiers.push(Vec::new());
            last = Some(w);
        }
        tiers.last_mut().expect("just pushed").push((i as u32, j as u32));
    }
    QualitativeMarginGraph {
        nodes: g.nodes.clone(),
        tiers,
    }
}

/// A directed simple cycle, stored in canonical rotation: the
/// lexicographically least node first, no repeat of the starting node at
/// the end.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    nodes: Vec<Candidate>,
}

impl Cycle {
    /// Requires at least three distinct nodes (margin graphs have no
    /// shorter cycles). The sequence is rotated into canonical form.
    pub fn new(nodes: Vec<Candidate>) -> Result<Self, GraphError> {
        if nodes.len() < 3 {
            return Err(GraphError::CycleTooShort(nodes.len()));
        }
        for c in &nodes {
            if nodes.iter().filter(|d| *d == c).count() > 1 {
                return Err(GraphError::RepeatedCycleNode(c.as_str().to_string()));
            }
        }
        let least = nodes
            .iter()
            .enumerate()
            .min_by_key(|(_, c)| *c)
            .map(|(i, _)| i)
            .expect("nonempty");
        let mut rotated = nodes;
        rotated.rotate_left(least);
        Ok(Cycle { nodes: rotated })
    }

    pub fn from_names(tokens: &[&str]) -> Result<Self, GraphError> {
        let nodes = tokens
            .iter()
            .map(|t| Candidate::new(t).map_err(|_| GraphError::BadNodeToken(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Cycle::new(nodes)
    }

    pub fn nodes(&self) -> &[Candidate] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, c: &Candidate) -> bool {
        self.nodes.contains(c)
    }

    /// The cycle's arcs, including the closing arc back to the start.
    pub fn arcs(&self) -> impl Iterator<Item = (&Candidate, &Candidate)> + '_ {
        let k = self.nodes.len();
        (0..k).map(move |i| (&self.nodes[i], &self.nodes[(i + 1) % k]))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.nodes {
            write!(f, "{c} -> ")?;
        }
        write!(f, "{}", self.nodes[0])
    }
}

/// All simple cycles of the positive-edge graph, by Johnson's algorithm:
/// for each start node `s` in ascending order, enumerate the cycles through
/// `s` that avoid nodes below `s`, using a blocked set with unblock lists
/// so each dead end is revisited only after it can reach `s` again. Each
/// cycle is found rooted at its least node, which is the canonical
/// rotation. Sorted by length, then node sequence.
pub fn simple_cycles(g: &MarginGraph) -> Vec<Cycle> {
    let n = g.node_count();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| g.w[i][j] > 0).collect())
        .collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        // the strongly connected part of {s..n-1} around s: forward and
        // backward reachable sets intersected
        let fwd = reach(s, &adj, false);
        let bwd = reach(s, &adj, true);
        let allowed: Vec<bool> = (0..n).map(|v| fwd[v] && bwd[v]).collect();
        if allowed.iter().filter(|&&x| x).count() < 3 {
            continue;
        }
        let mut blocked = vec![false; n];
        let mut unblock_list: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut stack = Vec::new();
        circuit(
            s,
            s,
            &adj,
            &allowed,
            &mut blocked,
            &mut unblock_list,
            &mut stack,
            &mut found,
        );
    }
    let mut cycles: Vec<Cycle> = found
        .into_iter()
        .map(|idx| Cycle {
            nodes: idx.iter().map(|&i| g.nodes[i].clone()).collect(),
        })
        .collect();
    cycles.sort_by(|a, b| (a.len(), &a.nodes).cmp(&(b.len(), &b.nodes)));
    cycles
}

/// Nodes reachable from `s` (following edges backward when asked), visiting
/// only nodes with index at least `s`.
fn reach(s: usize, adj: &[Vec<usize>], backward: bool) -> Vec<bool> {
    let n = adj.len();
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = vec![s];
    while let Some(v) = queue.pop() {
        for w in s..n {
            if seen[w] {
                continue;
            }
            let edge = if backward {
                adj[w].contains(&v)
            } else {
                adj[v].contains(&w)
            };
            if edge {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    seen
}

#[allow(clippy::too_many_arguments)]
fn circuit(
    v: usize,
    s: usize,
    adj: &[Vec<usize>],
    allowed: &[bool],
    blocked: &mut [bool],
    unblock_list: &mut [Vec<usize>],
    stack: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) -> bool {
    let mut closed = false;
    stack.push(v);
    blocked[v] = true;
    for &w in &adj[v] {
        if !allowed[w] {
            continue;
        }
        if w == s {
            if stack.len() >= 3 {
                found.push(stack.clone());
            }
            closed = true;
        } else if !blocked[w]
            && circuit(w, s, adj, allowed, blocked, unblock_list, stack, found)
        {
            closed = true;
        }
    }
    if closed {
        unblock(v, blocked, unblock_list);
    } else {
        for &w in &adj[v] {
            if allowed[w] && w != s && !unblock_list[w].contains(&v) {
                unblock_list[w].push(v);
            }
        }
    }
    stack.pop();
    closed
}

fn unblock(v: usize, blocked: &mut [bool], unblock_list: &mut [Vec<usize>]) {
    blocked[v] = false;
    let waiters = core::mem::take(&mut unblock_list[v]);
    for w in waiters {
        if blocked[w] {
            unblock(w, blocked, unblock_list);
        }
    }
}

/// The splitting number of a cycle: the smallest margin along it. Errors if
/// some arc of the cycle is not a positive-margin edge of the graph.
pub fn splitting_number(g: &MarginGraph, cycle: &Cycle) -> Result<i64, GraphError> {
    let mut weakest = i64::MAX;
    for (from, to) in cycle.arcs() {
        let i = index_of(&g.nodes, from)?;
        let j = index_of(&g.nodes, to)?;
        let w = g.w[i][j];
        if w <= 0 {
            return Err(GraphError::MissingCycleEdge {
                from: from.as_str().to_string(),
                to: to.as_str().to_string(),
            });
        }
        weakest = weakest.min(w);
    }
    Ok(weakest)
}

/// Maximin path strengths over positive-margin edges: entry `[i][j]` is the
/// largest, over paths from `i` to `j`, of the smallest margin along the
/// path; 0 when no path exists. Computed by the Floyd-Warshall recurrence
/// with (max, min) in place of (min, +).
#[allow(clippy::needless_range_loop)]
pub fn widest_path_matrix(g: &MarginGraph) -> Vec<Vec<i64>> {
    let n = g.node_count();
    let mut s = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && g.w[i][j] > 0 {
                s[i][j] = g.w[i][j];
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..n {
                if j == k || j == i {
                    continue;
                }
                let through = s[i][k].min(s[k][j]);
                if through > s[i][j] {
                    s[i][j] = through;
                }
            }
        }
    }
    s
}

/// The maximin strength of paths from `x` to `y`; 0 when there is none.
pub fn widest_path_strength(
    g: &MarginGraph,
    x: &Candidate,
    y: &Candidate,
) -> Result<i64, GraphError> {
    let i = index_of(&g.nodes, x)?;
    let j = index_of(&g.nodes, y)?;
    if i == j {
        return Err(GraphError::SelfLoop(x.as_str().to_string()));
    }
    Ok(widest_path_matrix(g)[i][j])
}

/// Synthesizes a profile whose margin graph is exactly `g` (zero margins
/// included). Requires at least two nodes and even weights. Each edge
/// `(a, b)` of weight `2k` contributes `k` ballot pairs that agree on
/// `a > b` and cancel everywhere else; an edgeless graph gets a single
/// canceling pair.
pub fn mcgarvey(g: &MarginGraph) -> Result<Profile, GraphError> {
    let n = g.node_count();
    if n < 2 {
        return Err(GraphError::TooFewNodes(n));
    }
    let mut ballots: Vec<Ballot> = Vec::new();
    for (i, j, w) in g.edges() {
        if w % 2 != 0 {
            return Err(GraphError::OddWeight {
                from: g.nodes[i].as_str().to_string(),
                to: g.nodes[j].as_str().to_string(),
                weight: w,
            });
        }
        let rest: Vec<Candidate> = (0..n)
            .filter(|&k| k != i && k != j)
            .map(|k| g.nodes[k].clone())
            .collect();
        let mut first = vec![g.nodes[i].clone(), g.nodes[j].clone()];
        first.extend(rest.iter().cloned());
        let mut second: Vec<Candidate> = rest.into_iter().rev().collect();
        second.push(g.nodes[i].clone());
        second.push(g.nodes[j].clone());
        let first = Ballot::new(first).expect("distinct by construction");
        let second = Ballot::new(second).expect("distinct by construction");
        for _ in 0..(w / 2) {
            ballots.push(first.clone());
            ballots.push(second.clone());
        }
    }
    if ballots.is_empty() {
        let lex = Ballot::new(g.nodes.clone()).expect("distinct by construction");
        ballots.push(lex.reversed());
        ballots.push(lex);
    }
    Ok(Profile::new(g.nodes.clone(), ballots).expect("ballots rank the roster"))
}

/// Renders the graph in DOT, optionally overlaying a defeat relation:
/// defeat edges with a positive margin are bold, defeats without one are
/// dashed. Output is deterministic byte for byte.
pub fn to_dot(
    g: &MarginGraph,
    defeats: Option<&[(Candidate, Candidate)]>,
) -> Result<String, GraphError> {
    let mut defeat_idx: Vec<(usize, usize)> = Vec::new();
    if let Some(pairs) = defeats {
        for (x, y) in pairs {
            let i = index_of(&g.nodes, x)?;
            let j = index_of(&g.nodes, y)?;
            if i == j {
                return Err(GraphError::SelfLoop(x.as_str().to_string()));
            }
            defeat_idx.push((i, j));
        }
    }
    defeat_idx.sort_unstable();
    defeat_idx.dedup();
    let mut out = String::from("digraph margins {\n  rankdir=LR;\n");
    for c in &g.nodes {
        out.push_str("  \"");
        out.push_str(c.as_str());
        out.push_str("\";\n");
    }
    for (i, j, w) in g.edges() {
        out.push_str("  \"");
        out.push_str(g.nodes[i].as_str());
        out.push_str("\" -> \"");
        out.push_str(g.nodes[j].as_str());
        out.push_str("\" [label=\"");
        out.push_str(&w.to_string());
        if defeat_idx.binary_search(&(i, j)).is_ok() {
            out.push_str("\", style=bold];\n");
        } else {
            out.push_str("\"];\n");
        }
    }
    for &(i, j) in &defeat_idx {
        if g.w[i][j] <= 0 {
            out.push_str("  \"");
            out.push_str(g.nodes[i].as_str());
            out.push_str("\" -> \"");
            out.push_str(g.nodes[j].as_str());
            out.push_str("\" [label=\"defeat\", style=dashed];\n");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    EmptyNodes,
    DuplicateNode(String),
    BadNodeToken(String),
    UnknownNode(String),
    SelfLoop(String),
    NonPositiveWeight { from: String, to: String, weight: i64 },
    DuplicateEdge { from: String, to: String },
    CycleTooShort(usize),
    RepeatedCycleNode(String),
    MissingCycleEdge { from: String, to: String },
    OddWeight { from: String, to: String, weight: i64 },
    TooFewNodes(usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyNodes => f.write_str("a graph needs at least one node"),
            GraphError::DuplicateNode(c) => write!(f, "duplicate node '{c}'"),
            GraphError::BadNodeToken(t) => {
                write!(f, "bad node token '{t}' (allowed: letters, digits, '_')")
            }
            GraphError::UnknownNode(c) => write!(f, "unknown node '{c}'"),
            GraphError::SelfLoop(c) => write!(f, "self loop on '{c}'"),
            GraphError::NonPositiveWeight { from, to, weight } => {
                write!(f, "edge {from} -> {to} has non-positive weight {weight}")
            }
            GraphError::DuplicateEdge { from, to } => {
                write!(f, "nodes {from} and {to} already joined by an edge")
            }
            GraphError::CycleTooShort(k) => write!(f, "a cycle needs at least 3 nodes, got {k}"),
            GraphError::RepeatedCycleNode(c) => write!(f, "cycle repeats node '{c}'"),
            GraphError::MissingCycleEdge { from, to } => {
                write!(f, "cycle arc {from} -> {to} is not an edge of the graph")
            }
            GraphError::OddWeight { from, to, weight } => {
                write!(
                    f,
                    "edge {from} -> {to} has odd weight {weight}; synthesis needs even margins"
                )
            }
            GraphError::TooFewNodes(n) => {
                write!(f, "synthesis needs at least 2 nodes, got {n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}
