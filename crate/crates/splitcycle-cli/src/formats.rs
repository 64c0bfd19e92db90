//! JSON wire formats: tabulation output, margin-graph files, axiom
//! verdicts with embedded witnesses, user witness files, and explicit
//! profile-pair files. Every list is emitted in sorted or declared order so
//! identical inputs serialize byte for byte.

use std::collections::BTreeSet;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use splitcycle::axioms::{
    AxiomId, AxiomVerdict, BetweennessMode, Expectation, Witness, WitnessCase, WitnessDetail,
    WitnessReport,
};
use splitcycle::ballots::{
    candidates, format_profile, margin, parse_profile, Ballot, Candidate, Profile,
};
use splitcycle::graphs::MarginGraph;
use splitcycle::methods::{winners, DefeatRelation, MethodId};

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: String,
    pub to: String,
}

/// Tabulation result for one rule on one profile.
#[derive(Debug, Serialize, Deserialize)]
pub struct DefeatJson {
    pub method: String,
    pub candidates: Vec<String>,
    /// Positive margins only, as `[from, to, margin]`; the rest follow by
    /// antisymmetry (absent both ways means tied).
    pub margins: Vec<(String, String, i64)>,
    pub defeats: Vec<EdgeJson>,
    pub winners: Vec<String>,
}

pub fn defeat_json(method: MethodId, p: &Profile, rel: &DefeatRelation) -> DefeatJson {
    let cs = p.candidates();
    let mut margins = Vec::new();
    for x in cs {
        for y in cs {
            if x != y {
                let m = margin(p, x, y).expect("roster members");
                if m > 0 {
                    margins.push((x.as_str().to_string(), y.as_str().to_string(), m));
                }
            }
        }
    }
    DefeatJson {
        method: method.as_str().to_string(),
        candidates: cs.iter().map(|c| c.as_str().to_string()).collect(),
        margins,
        defeats: rel
            .pair_list()
            .into_iter()
            .map(|(x, y)| EdgeJson {
                from: x.as_str().to_string(),
                to: y.as_str().to_string(),
            })
            .collect(),
        winners: winners(method, p)
            .iter()
            .map(|c| c.as_str().to_string())
            .collect(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeightedEdgeJson {
    pub from: String,
    pub to: String,
    pub weight: i64,
}

/// A margin graph as a file: nodes sorted, positive edges sorted by
/// endpoint names.
#[derive(Debug, Serialize, Deserialize)]
pub struct MarginGraphJson {
    pub nodes: Vec<String>,
    pub edges: Vec<WeightedEdgeJson>,
}

pub fn graph_to_json(g: &MarginGraph) -> MarginGraphJson {
    MarginGraphJson {
        nodes: g.nodes().iter().map(|c| c.as_str().to_string()).collect(),
        edges: g
            .edges()
            .into_iter()
            .map(|(i, j, w)| WeightedEdgeJson {
                from: g.nodes()[i].as_str().to_string(),
                to: g.nodes()[j].as_str().to_string(),
                weight: w,
            })
            .collect(),
    }
}

pub fn graph_from_json(file: &MarginGraphJson) -> Result<MarginGraph> {
    let tokens: Vec<&str> = file.nodes.iter().map(String::as_str).collect();
    let nodes = candidates(&tokens).map_err(|e| anyhow!("bad node list: {e}"))?;
    let edges: Vec<(Candidate, Candidate, i64)> = file
        .edges
        .iter()
        .map(|e| {
            Ok((
                Candidate::new(&e.from).map_err(|err| anyhow!("bad edge endpoint: {err}"))?,
                Candidate::new(&e.to).map_err(|err| anyhow!("bad edge endpoint: {err}"))?,
                e.weight,
            ))
        })
        .collect::<Result<_>>()?;
    MarginGraph::from_edges(nodes, &edges).map_err(|e| anyhow!("bad margin graph: {e}"))
}

/// Mirrors the checker's transform record so a witness survives a trip
/// through a file.
#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DetailJson {
    None,
    VoterSwap { first: usize, second: usize },
    CandidateSwap { first: String, second: String },
    Replicated { factor: u32 },
    AdjacentLift { voter: usize, raised: String },
    ReversalPair { ballot: Vec<String> },
    RemovedCandidate { candidate: String },
    Subsets { inner: Vec<String>, outer: Vec<String> },
}

fn name_of(c: &Candidate) -> String {
    c.as_str().to_string()
}

fn names_of(cs: &[Candidate]) -> Vec<String> {
    cs.iter().map(name_of).collect()
}

fn candidate(name: &str) -> Result<Candidate> {
    Candidate::new(name).map_err(|e| anyhow!("bad candidate name {name:?}: {e}"))
}

fn candidate_list(names: &[String]) -> Result<Vec<Candidate>> {
    names.iter().map(|n| candidate(n)).collect()
}

pub fn detail_to_json(d: &WitnessDetail) -> DetailJson {
    match d {
        WitnessDetail::None => DetailJson::None,
        WitnessDetail::VoterSwap { first, second } => DetailJson::VoterSwap {
            first: *first,
            second: *second,
        },
        WitnessDetail::CandidateSwap { first, second } => DetailJson::CandidateSwap {
            first: name_of(first),
            second: name_of(second),
        },
        WitnessDetail::Replicated { factor } => DetailJson::Replicated { factor: *factor },
        WitnessDetail::AdjacentLift { voter, raised } => DetailJson::AdjacentLift {
            voter: *voter,
            raised: name_of(raised),
        },
        WitnessDetail::ReversalPair { ballot } => DetailJson::ReversalPair {
            ballot: names_of(ballot.ranking()),
        },
        WitnessDetail::RemovedCandidate { candidate } => DetailJson::RemovedCandidate {
            candidate: name_of(candidate),
        },
        WitnessDetail::Subsets { inner, outer } => DetailJson::Subsets {
            inner: names_of(inner),
            outer: names_of(outer),
        },
    }
}

pub fn detail_from_json(d: &DetailJson) -> Result<WitnessDetail> {
    Ok(match d {
        DetailJson::None => WitnessDetail::None,
        DetailJson::VoterSwap { first, second } => WitnessDetail::VoterSwap {
            first: *first,
            second: *second,
        },
        DetailJson::CandidateSwap { first, second } => WitnessDetail::CandidateSwap {
            first: candidate(first)?,
            second: candidate(second)?,
        },
        DetailJson::Replicated { factor } => WitnessDetail::Replicated { factor: *factor },
        DetailJson::AdjacentLift { voter, raised } => WitnessDetail::AdjacentLift {
            voter: *voter,
            raised: candidate(raised)?,
        },
        DetailJson::ReversalPair { ballot } => {
            let tokens: Vec<&str> = ballot.iter().map(String::as_str).collect();
            WitnessDetail::ReversalPair {
                ballot: Ballot::from_names(&tokens).map_err(|e| anyhow!("bad ballot: {e}"))?,
            }
        }
        DetailJson::RemovedCandidate { candidate: c } => WitnessDetail::RemovedCandidate {
            candidate: candidate(c)?,
        },
        DetailJson::Subsets { inner, outer } => WitnessDetail::Subsets {
            inner: candidate_list(inner)?,
            outer: candidate_list(outer)?,
        },
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    /// Base profile first, in `.vote` text form.
    pub profiles: Vec<String>,
    pub candidates: Vec<String>,
    pub detail: DetailJson,
}

pub fn witness_to_json(w: &Witness) -> WitnessJson {
    WitnessJson {
        profiles: w.profiles.iter().map(format_profile).collect(),
        candidates: names_of(&w.candidates),
        detail: detail_to_json(&w.detail),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerdictJson {
    pub axiom: String,
    pub method: String,
    pub domain: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

pub fn verdict_to_json(v: &AxiomVerdict) -> VerdictJson {
    VerdictJson {
        axiom: v.axiom.as_str().to_string(),
        method: v.method.as_str().to_string(),
        domain: v.domain.clone(),
        status: v.status.to_string(),
        witness: v.witness.as_ref().map(witness_to_json),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NamedProfileJson {
    pub name: String,
    /// Inline `.vote` text.
    pub vote: String,
}

/// A user-supplied witness case: named profiles plus structured
/// expectations against them. `axiom`, `method`, `candidates`, and
/// `detail` describe the violating instance that a bare `violation`
/// expectation replays.
#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessFileJson {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
    pub axiom: String,
    pub method: String,
    pub candidates: Vec<String>,
    pub profiles: Vec<NamedProfileJson>,
    #[serde(default)]
    pub detail: Option<DetailJson>,
    pub expectations: Vec<ExpectationJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExpectationJson {
    Defeats {
        #[serde(default)]
        method: Option<String>,
        profile: String,
        from: String,
        to: String,
        expected: bool,
    },
    RelationEquals {
        #[serde(default)]
        method: Option<String>,
        profile: String,
        expected: Vec<(String, String)>,
    },
    Undefeated {
        #[serde(default)]
        method: Option<String>,
        profile: String,
        expected: Vec<String>,
    },
    GlobalChoice {
        #[serde(default)]
        method: Option<String>,
        profile: String,
        subset: Vec<String>,
        expected: Vec<String>,
    },
    LocalChoice {
        #[serde(default)]
        method: Option<String>,
        profile: String,
        subset: Vec<String>,
        expected: Vec<String>,
    },
    CoherentRelated {
        first: String,
        second: String,
        x: String,
        y: String,
        expected: bool,
    },
    BetweenRelated {
        mode: String,
        first: String,
        second: String,
        x: String,
        y: String,
        expected: bool,
    },
    /// Replays the file-level (axiom, method, profiles, candidates,
    /// detail) instance through the checker's replay path.
    Violation,
}

fn method_id(name: &str) -> Result<MethodId> {
    MethodId::from_str(name).map_err(|e| anyhow!("{e}"))
}

fn betweenness_mode(name: &str) -> Result<BetweennessMode> {
    match name {
        "modified" => Ok(BetweennessMode::Modified),
        "intensity" => Ok(BetweennessMode::Intensity),
        other => bail!("unknown betweenness mode {other:?} (expected modified or intensity)"),
    }
}

fn pair_names(pairs: &[(String, String)]) -> Result<Vec<(Candidate, Candidate)>> {
    pairs
        .iter()
        .map(|(x, y)| Ok((candidate(x)?, candidate(y)?)))
        .collect()
}

/// Builds the engine's witness case from a parsed file. The default method
/// for per-expectation checks is the file-level one.
pub fn witness_case_from_json(file: &WitnessFileJson) -> Result<WitnessCase> {
    let axiom = AxiomId::from_str(&file.axiom).map_err(|e| anyhow!("{e}"))?;
    let method = method_id(&file.method)?;
    let distinguished = candidate_list(&file.candidates)?;
    let detail = match &file.detail {
        Some(d) => detail_from_json(d)?,
        None => WitnessDetail::None,
    };
    let mut profiles = Vec::new();
    let mut seen = BTreeSet::new();
    for entry in &file.profiles {
        if !seen.insert(entry.name.clone()) {
            bail!("duplicate profile name {:?}", entry.name);
        }
        let p = parse_profile(&entry.vote)
            .with_context(|| format!("profile {:?}", entry.name))?;
        profiles.push((entry.name.clone(), p));
    }
    let all_names: Vec<String> = profiles.iter().map(|(n, _)| n.clone()).collect();
    let mut expectations = Vec::new();
    for e in &file.expectations {
        expectations.push(match e {
            ExpectationJson::Defeats {
                method: m,
                profile,
                from,
                to,
                expected,
            } => Expectation::Defeats {
                method: m.as_deref().map(method_id).transpose()?.unwrap_or(method),
                profile: profile.clone(),
                x: candidate(from)?,
                y: candidate(to)?,
                expected: *expected,
            },
            ExpectationJson::RelationEquals {
                method: m,
                profile,
                expected,
            } => Expectation::RelationEquals {
                method: m.as_deref().map(method_id).transpose()?.unwrap_or(method),
                profile: profile.clone(),
                expected: pair_names(expected)?,
            },
            ExpectationJson::Undefeated {
                method: m,
                profile,
                expected,
            } => Expectation::Undefeated {
                method: m.as_deref().map(method_id).transpose()?.unwrap_or(method),
                profile: profile.clone(),
                expected: candidate_list(expected)?,
            },
            ExpectationJson::GlobalChoice {
                method: m,
                profile,
                subset,
                expected,
            } => Expectation::GlobalChoice {
                method: m.as_deref().map(method_id).transpose()?.unwrap_or(method),
                profile: profile.clone(),
                subset: candidate_list(subset)?,
                expected: candidate_list(expected)?,
            },
            ExpectationJson::LocalChoice {
                method: m,
                profile,
                subset,
                expected,
            } => Expectation::LocalChoice {
                method: m.as_deref().map(method_id).transpose()?.unwrap_or(method),
                profile: profile.clone(),
                subset: candidate_list(subset)?,
                expected: candidate_list(expected)?,
            },
            ExpectationJson::CoherentRelated {
                first,
                second,
                x,
                y,
                expected,
            } => Expectation::CoherentRelated {
                first: first.clone(),
                second: second.clone(),
                x: candidate(x)?,
                y: candidate(y)?,
                expected: *expected,
            },
            ExpectationJson::BetweenRelated {
                mode,
                first,
                second,
                x,
                y,
                expected,
            } => Expectation::BetweenRelated {
                mode: betweenness_mode(mode)?,
                first: first.clone(),
                second: second.clone(),
                x: candidate(x)?,
                y: candidate(y)?,
                expected: *expected,
            },
            ExpectationJson::Violation => Expectation::AxiomViolation {
                axiom,
                method,
                profiles: all_names.clone(),
                candidates: distinguished.clone(),
                detail: detail.clone(),
            },
        });
    }
    Ok(WitnessCase {
        name: file
            .name
            .clone()
            .unwrap_or_else(|| "user witness".to_string()),
        description: file.description.clone().unwrap_or_default(),
        profiles,
        expectations,
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ExpectationReportJson {
    pub label: String,
    pub passed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub case: String,
    pub passed: bool,
    pub expectations: Vec<ExpectationReportJson>,
}

pub fn report_to_json(r: &WitnessReport) -> ReportJson {
    ReportJson {
        case: r.case.clone(),
        passed: r.passed,
        expectations: r
            .expectations
            .iter()
            .map(|e| ExpectationReportJson {
                label: e.label.clone(),
                passed: e.passed,
            })
            .collect(),
    }
}

/// Explicit ordered profile pairs for pair-axiom checks, each side inline
/// `.vote` text.
#[derive(Debug, Serialize, Deserialize)]
pub struct PairsFileJson {
    pub pairs: Vec<PairJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PairJson {
    pub first: String,
    pub second: String,
}

pub fn pairs_from_json(file: &PairsFileJson) -> Result<Vec<(Profile, Profile)>> {
    file.pairs
        .iter()
        .enumerate()
        .map(|(i, pair)| {
            let p = parse_profile(&pair.first).with_context(|| format!("pair {i}, first"))?;
            let q = parse_profile(&pair.second).with_context(|| format!("pair {i}, second"))?;
            Ok((p, q))
        })
        .collect()
}

/// Domain statistics for `enumerate`.
#[derive(Debug, Serialize, Deserialize)]
pub struct DomainStatsJson {
    pub candidates: Vec<String>,
    pub voters: VoterRangeJson,
    pub mode: String,
    /// Decimal string: counts can exceed what a JSON number represents.
    pub profiles: Option<String>,
    pub budget: u64,
    pub within_budget: bool,
    pub per_voter_count: Vec<PerVoterCountJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VoterRangeJson {
    pub min: u32,
    pub max: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PerVoterCountJson {
    pub voters: u32,
    pub profiles: Option<String>,
}
