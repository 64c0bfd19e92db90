//! Profiles of strict ranked ballots.
//!
//! A [`Profile`] is a roster of candidates plus one linear ballot per voter.
//! Voters are anonymous: they are identified only by ballot position. This
//! module provides the `.vote` text form ([`parse_profile`] /
//! [`format_profile`]), structural transforms, pairwise margins, and
//! enumeration of profile domains for the axiom checker.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// A candidate name: one or more characters from `[A-Za-z0-9_]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate(String);

impl Candidate {
    pub fn new(token: &str) -> Result<Self, BallotError> {
        if token.is_empty()
            || !token
                .bytes()
                .all(|b| b.is_ascii_alphanumeric() || b == b'_')
        {
            return Err(BallotError::BadCandidateToken(token.to_string()));
        }
        Ok(Candidate(token.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Builds a candidate roster from string tokens, for tests and callers that
/// construct profiles programmatically.
pub fn candidates(tokens: &[&str]) -> Result<Vec<Candidate>, BallotError> {
    tokens.iter().map(|t| Candidate::new(t)).collect()
}

/// One voter's strict ranking, best first. Every ballot in a profile ranks
/// the full roster exactly once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ballot(Vec<Candidate>);

impl Ballot {
    /// Requires a nonempty ranking with no repeated candidate. Whether the
    /// ranking covers a particular roster is checked where the ballot is
    /// used.
    pub fn new(ranking: Vec<Candidate>) -> Result<Self, BallotError> {
        if ranking.is_empty() {
            return Err(BallotError::EmptyBallot);
        }
        let mut seen = BTreeSet::new();
        for c in &ranking {
            if !seen.insert(c.clone()) {
                return Err(BallotError::DuplicateInBallot(c.as_str().to_string()));
            }
        }
        Ok(Ballot(ranking))
    }

    pub fn from_names(tokens: &[&str]) -> Result<Self, BallotError> {
        Ballot::new(candidates(tokens)?)
    }

    pub fn ranking(&self) -> &[Candidate] {
        &self.0
    }

    pub fn reversed(&self) -> Ballot {
        let mut r = self.0.clone();
        r.reverse();
        Ballot(r)
    }
}

impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            f.write_str(c.as_str())?;
        }
        Ok(())
    }
}

/// An election: a sorted candidate roster and one ballot per voter.
///
/// Internally each ballot is a permutation of roster indices, best first.
/// The roster is kept sorted so that profiles over the same candidates use
/// the same indexing and derived scans are deterministic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Profile {
    candidates: Vec<Candidate>,
    ballots: Vec<Vec<u32>>,
}

impl Profile {
    pub fn new(roster: Vec<Candidate>, ballots: Vec<Ballot>) -> Result<Self, BallotError> {
        if roster.is_empty() {
            return Err(BallotError::EmptyCandidates);
        }
        let mut sorted = roster;
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(BallotError::DuplicateCandidate(w[0].as_str().to_string()));
            }
        }
        if ballots.is_empty() {
            return Err(BallotError::NoVoters);
        }
        let rows = ballots
            .iter()
            .map(|b| ranking_to_row(&sorted, b.ranking()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Profile {
            candidates: sorted,
            ballots: rows,
        })
    }

    /// Convenience constructor from string tokens; `ballots` lists each
    /// voter's ranking best first.
    pub fn from_names(roster: &[&str], ballots: &[&[&str]]) -> Result<Self, BallotError> {
        let cs = candidates(roster)?;
        let bs = ballots
            .iter()
            .map(|b| Ballot::from_names(b))
            .collect::<Result<Vec<_>, _>>()?;
        Profile::new(cs, bs)
    }

    pub(crate) fn from_rows(candidates: Vec<Candidate>, rows: Vec<Vec<u32>>) -> Profile {
        debug_assert!(candidates.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(rows.iter().all(|r| {
            let mut s: Vec<u32> = r.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, v)| *v == i as u32)
        }));
        Profile { candidates, ballots: rows }
    }

    /// The roster, sorted lexicographically.
    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    pub fn voter_count(&self) -> usize {
        self.ballots.len()
    }

    pub fn index_of(&self, c: &Candidate) -> Option<usize> {
        self.candidates.binary_search(c).ok()
    }

    /// Voter `v`'s ballot, materialized as candidate names.
    pub fn ballot(&self, v: usize) -> Result<Ballot, BallotError> {
        let row = self
            .ballots
            .get(v)
            .ok_or(BallotError::NoSuchVoter(v))?;
        Ok(Ballot(
            row.iter()
                .map(|&i| self.candidates[i as usize].clone())
                .collect(),
        ))
    }

    pub fn ballots(&self) -> impl Iterator<Item = Ballot> + '_ {
        (0..self.voter_count()).map(|v| self.ballot(v).expect("voter in range"))
    }

    pub(crate) fn row(&self, v: usize) -> &[u32] {
        &self.ballots[v]
    }

    /// positions[i] is the rank of roster candidate `i` on voter `v`'s
    /// ballot, 0 meaning top.
    pub(crate) fn positions(&self, v: usize) -> Vec<u32> {
        let mut pos = vec![0u32; self.candidates.len()];
        for (rank, &c) in self.ballots[v].iter().enumerate() {
            pos[c as usize] = rank as u32;
        }
        pos
    }

    /// Pairwise margins indexed by the sorted roster: entry `[i][j]` is the
    /// number of voters ranking candidate `i` above `j` minus the number
    /// ranking `j` above `i`. The matrix is antisymmetric.
    pub fn margin_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.candidates.len();
        let mut w = vec![vec![0i64; m]; m];
        for v in 0..self.ballots.len() {
            let pos = self.positions(v);
            for i in 0..m {
                for j in (i + 1)..m {
                    if pos[i] < pos[j] {
                        w[i][j] += 1;
                        w[j][i] -= 1;
                    } else {
                        w[i][j] -= 1;
                        w[j][i] += 1;
                    }
                }
            }
        }
        w
    }

    /// The same ballots sorted lexicographically, forgetting voter order.
    /// Two profiles are the same anonymous election iff their anonymized
    /// forms are equal.
    pub fn anonymized(&self) -> Profile {
        let mut rows = self.ballots.clone();
        rows.sort();
        Profile {
            candidates: self.candidates.clone(),
            ballots: rows,
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_profile(self))
    }
}

fn ranking_to_row(roster: &[Candidate], ranking: &[Candidate]) -> Result<Vec<u32>, BallotError> {
    let mut seen = vec![false; roster.len()];
    let mut row = Vec::with_capacity(roster.len());
    for c in ranking {
        let i = roster
            .binary_search(c)
            .map_err(|_| BallotError::UnknownCandidate(c.as_str().to_string()))?;
        if seen[i] {
            return Err(BallotError::DuplicateInBallot(c.as_str().to_string()));
        }
        seen[i] = true;
        row.push(i as u32);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(BallotError::MissingFromBallot(
            roster[i].as_str().to_string(),
        ));
    }
    Ok(row)
}

/// The margin of `x` over `y`: voters preferring `x` minus voters preferring
/// `y`. Errors if either candidate is unknown or if `x == y`.
pub fn margin(p: &Profile, x: &Candidate, y: &Candidate) -> Result<i64, BallotError> {
    let i = p
        .index_of(x)
        .ok_or_else(|| BallotError::UnknownCandidate(x.as_str().to_string()))?;
    let j = p
        .index_of(y)
        .ok_or_else(|| BallotError::UnknownCandidate(y.as_str().to_string()))?;
    if i == j {
        return Err(BallotError::SameCandidate(x.as_str().to_string()));
    }
    let mut m = 0i64;
    for v in 0..p.voter_count() {
        let pos = p.positions(v);
        if pos[i] < pos[j] {
            m += 1;
        } else {
            m -= 1;
        }
    }
    Ok(m)
}

/// Restricts every ballot to the given nonempty subset of the roster,
/// preserving each voter's relative order. Pairwise margins among kept
/// candidates are unchanged.
pub fn restrict(p: &Profile, keep: &[Candidate]) -> Result<Profile, BallotError> {
    if keep.is_empty() {
        return Err(BallotError::EmptySubset);
    }
    let mut kept = vec![false; p.candidate_count()];
    for c in keep {
        let i = p
            .index_of(c)
            .ok_or_else(|| BallotError::NotASubset(c.as_str().to_string()))?;
        if kept[i] {
            return Err(BallotError::DuplicateCandidate(c.as_str().to_string()));
        }
        kept[i] = true;
    }
    Ok(restrict_by_flags(p, &kept))
}

pub(crate) fn restrict_by_flags(p: &Profile, kept: &[bool]) -> Profile {
    // new_index[i] = rank of old index i among kept indices; kept indices
    // stay sorted, so the restricted roster is sorted too.
    let mut new_index = vec![u32::MAX; kept.len()];
    let mut roster = Vec::new();
    for (i, &k) in kept.iter().enumerate() {
        if k {
            new_index[i] = roster.len() as u32;
            roster.push(p.candidates[i].clone());
        }
    }
    let rows = p
        .ballots
        .iter()
        .map(|row| {
            row.iter()
                .filter(|&&c| kept[c as usize])
                .map(|&c| new_index[c as usize])
                .collect()
        })
        .collect();
    Profile {
        candidates: roster,
        ballots: rows,
    }
}

/// Replaces each voter with `m` copies (the ballot list is repeated `m`
/// times in blocks). All margins scale by `m`.
pub fn replicate(p: &Profile, m: u32) -> Result<Profile, BallotError> {
    if m == 0 {
        return Err(BallotError::ZeroReplication);
    }
    let mut rows = Vec::with_capacity(p.ballots.len() * m as usize);
    for _ in 0..m {
        rows.extend(p.ballots.iter().cloned());
    }
    Ok(Profile {
        candidates: p.candidates.clone(),
        ballots: rows,
    })
}

/// Appends `b` and its reversal as two new voters. Each pair of opposite
/// ballots cancels pairwise, so all margins are unchanged.
pub fn add_reversed_pair(p: &Profile, b: &Ballot) -> Result<Profile, BallotError> {
    let row = ranking_to_row(&p.candidates, b.ranking())?;
    let mut rev = row.clone();
    rev.reverse();
    let mut rows = p.ballots.clone();
    rows.push(row);
    rows.push(rev);
    Ok(Profile {
        candidates: p.candidates.clone(),
        ballots: rows,
    })
}

/// Reorders voters: voter `i` of the result holds the ballot of voter
/// `perm[i]` in the input. `perm` must be a permutation of `0..voter_count`.
pub fn permute_voters(p: &Profile, perm: &[usize]) -> Result<Profile, BallotError> {
    let n = p.voter_count();
    if perm.len() != n {
        return Err(BallotError::BadVoterPermutation);
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v >= n || seen[v] {
            return Err(BallotError::BadVoterPermutation);
        }
        seen[v] = true;
    }
    let rows = perm.iter().map(|&v| p.ballots[v].clone()).collect();
    Ok(Profile {
        candidates: p.candidates.clone(),
        ballots: rows,
    })
}

/// Relabels candidates by a permutation of the roster, given as
/// `(candidate, image)` pairs; omitted candidates stay fixed. In the result,
/// voter `v` ranks `x` above `y` iff `v` ranked `image(x)` above `image(y)`
/// in the input, so margins are conjugated by the permutation.
pub fn permute_candidates(
    p: &Profile,
    mapping: &[(Candidate, Candidate)],
) -> Result<Profile, BallotError> {
    let m = p.candidate_count();
    let mut sigma: Vec<usize> = (0..m).collect();
    let mut moved_src = vec![false; m];
    let mut moved_dst = vec![false; m];
    for (from, to) in mapping {
        let i = p
            .index_of(from)
            .ok_or_else(|| BallotError::UnknownCandidate(from.as_str().to_string()))?;
        let j = p
            .index_of(to)
            .ok_or_else(|| BallotError::UnknownCandidate(to.as_str().to_string()))?;
        if moved_src[i] || moved_dst[j] {
            return Err(BallotError::BadCandidatePermutation);
        }
        moved_src[i] = true;
        moved_dst[j] = true;
        sigma[i] = j;
    }
    // pairs must extend by the identity to a bijection: every explicit
    // source must also be some explicit target and vice versa
    if moved_src != moved_dst {
        return Err(BallotError::BadCandidatePermutation);
    }
    let mut inverse = vec![0u32; m];
    for (i, &j) in sigma.iter().enumerate() {
        inverse[j] = i as u32;
    }
    let rows = p
        .ballots
        .iter()
        .map(|row| row.iter().map(|&c| inverse[c as usize]).collect())
        .collect();
    Ok(Profile {
        candidates: p.candidates.clone(),
        ballots: rows,
    })
}

/// Swaps `x` with the candidate immediately above it on one voter's ballot.
/// Returns `Ok(None)` when `x` is already that voter's top choice.
pub fn lift_adjacent(
    p: &Profile,
    voter: usize,
    x: &Candidate,
) -> Result<Option<Profile>, BallotError> {
    let i = p
        .index_of(x)
        .ok_or_else(|| BallotError::UnknownCandidate(x.as_str().to_string()))? as u32;
    if voter >= p.voter_count() {
        return Err(BallotError::NoSuchVoter(voter));
    }
    let rank = p.ballots[voter]
        .iter()
        .position(|&c| c == i)
        .expect("ballot ranks the full roster");
    if rank == 0 {
        return Ok(None);
    }
    let mut rows = p.ballots.clone();
    rows[voter].swap(rank - 1, rank);
    Ok(Some(Profile {
        candidates: p.candidates.clone(),
        ballots: rows,
    }))
}

/// The candidate with a positive margin over every other, if any.
pub fn condorcet_winner(p: &Profile) -> Option<Candidate> {
    let w = p.margin_matrix();
    let m = p.candidate_count();
    (0..m)
        .find(|&i| (0..m).all(|j| j == i || w[i][j] > 0))
        .map(|i| p.candidates[i].clone())
}

/// Parses the `.vote` text form:
///
/// ```text
/// # anything after '#' is a comment
/// candidates: a b c
/// 4: a > b > c
/// 2: b > c > a
/// 3: c > a > b
/// ```
///
/// The first significant line declares the roster; each later line is a
/// positive count, a colon, and a full ranking of the roster. The group
/// counts expand to voters in file order.
pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    let mut roster: Option<Vec<Candidate>> = None;
    let mut groups: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match &mut roster {
            None => {
                let rest = line.strip_prefix("candidates:").ok_or(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MissingCandidatesHeader,
                })?;
                let mut cs = Vec::new();
                for token in rest.split_whitespace() {
                    cs.push(Candidate::new(token).map_err(|_| ParseError {
                        line: line_no,
                        kind: ParseErrorKind::BadCandidateToken(token.to_string()),
                    })?);
                }
                if cs.is_empty() {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::NoCandidates,
                    });
                }
                cs.sort();
                for w in cs.windows(2) {
                    if w[0] == w[1] {
                        return Err(ParseError {
                            line: line_no,
                            kind: ParseErrorKind::DuplicateCandidate(w[0].as_str().to_string()),
                        });
                    }
                }
                roster = Some(cs);
            }
            Some(cs) => {
                if line.starts_with("candidates:") {
                    return Err(ParseError {
                        line: line_no,
                        kind: ParseErrorKind::SecondCandidatesHeader,
                    });
                }
                let (count_str, ranking_str) = line.split_once(':').ok_or(ParseError {
                    line: line_no,
                    kind: ParseErrorKind::MalformedLine,
                })?;
                let count_str = count_str.trim();
                let count: u32 = match count_str.parse() {
                    Ok(n) if n > 0 => n,
                    _ => {
                        return Err(ParseError {
                            line: line_no,
                            kind: ParseErrorKind::BadCount(count_str.to_string()),
                        })
                    }
                };
                let mut ranking = Vec::new();
                for token in ranking_str.split('>') {
                    let token = token.trim();
                    if token.is_empty() {
                        return Err(ParseError {
                            line: line_no,
                            kind: ParseErrorKind::MalformedLine,
                        });
                    }
                    ranking.push(Candidate::new(token).map_err(|_| ParseError {
                        line: line_no,
                        kind: ParseErrorKind::BadCandidateToken(token.to_string()),
                    })?);
                }
                let row = ranking_to_row(cs, &ranking).map_err(|e| ParseError {
                    line: line_no,
                    kind: match e {
                        BallotError::UnknownCandidate(c) => ParseErrorKind::UnknownCandidate(c),
                        BallotError::DuplicateInBallot(c) => ParseErrorKind::DuplicateInBallot(c),
                        BallotError::MissingFromBallot(c) => ParseErrorKind::MissingFromBallot(c),
                        _ => ParseErrorKind::MalformedLine,
                    },
                })?;
                groups.push((count, row));
            }
        }
    }
    let candidates = roster.ok_or(ParseError {
        line: last_line.max(1),
        kind: ParseErrorKind::MissingCandidatesHeader,
    })?;
    if groups.is_empty() {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::NoBallots,
        });
    }
    let mut rows = Vec::new();
    for (count, row) in groups {
        for _ in 0..count {
            rows.push(row.clone());
        }
    }
    Ok(Profile {
        candidates,
        ballots: rows,
    })
}

/// Renders a profile in the `.vote` text form, grouping identical ballots
/// and preserving their first-appearance order. Parsing the result gives
/// back the same anonymous election (the same ballot multiset).
pub fn format_profile(p: &Profile) -> String {
    let mut out = String::from("candidates:");
    for c in &p.candidates {
        out.push(' ');
        out.push_str(c.as_str());
    }
    out.push('\n');
    let mut groups: Vec<(&Vec<u32>, u32)> = Vec::new();
    for row in &p.ballots {
        match groups.iter_mut().find(|(r, _)| *r == row) {
            Some((_, n)) => *n += 1,
            None => groups.push((row, 1)),
        }
    }
    for (row, n) in groups {
        out.push_str(&n.to_string());
        out.push(':');
        for (rank, &c) in row.iter().enumerate() {
            out.push(' ');
            if rank > 0 {
                out.push_str("> ");
            }
            out.push_str(p.candidates[c as usize].as_str());
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BallotError {
    BadCandidateToken(String),
    DuplicateCandidate(String),
    UnknownCandidate(String),
    SameCandidate(String),
    DuplicateInBallot(String),
    MissingFromBallot(String),
    EmptyBallot,
    EmptyCandidates,
    EmptySubset,
    NotASubset(String),
    NoVoters,
    NoSuchVoter(usize),
    VoterCountMismatch { left: usize, right: usize },
    ZeroReplication,
    BadVoterPermutation,
    BadCandidatePermutation,
}

impl fmt::Display for BallotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BallotError::BadCandidateToken(t) => {
                write!(f, "bad candidate token '{t}' (allowed: letters, digits, '_')")
            }
            BallotError::DuplicateCandidate(c) => write!(f, "duplicate candidate '{c}'"),
            BallotError::UnknownCandidate(c) => write!(f, "unknown candidate '{c}'"),
            BallotError::SameCandidate(c) => {
                write!(f, "margin requires two distinct candidates, got '{c}' twice")
            }
            BallotError::DuplicateInBallot(c) => {
                write!(f, "ballot ranks candidate '{c}' more than once")
            }
            BallotError::MissingFromBallot(c) => {
                write!(f, "ballot does not rank candidate '{c}'")
            }
            BallotError::EmptyBallot => f.write_str("empty ballot"),
            BallotError::EmptyCandidates => f.write_str("a profile needs at least one candidate"),
            BallotError::EmptySubset => f.write_str("restriction to an empty candidate set"),
            BallotError::NotASubset(c) => {
                write!(f, "candidate '{c}' is not in the profile")
            }
            BallotError::NoVoters => f.write_str("a profile needs at least one voter"),
            BallotError::NoSuchVoter(v) => write!(f, "no voter {v}"),
            BallotError::VoterCountMismatch { left, right } => {
                write!(f, "profiles have different electorates ({left} vs {right} voters)")
            }
            BallotError::ZeroReplication => f.write_str("replication factor must be at least 1"),
            BallotError::BadVoterPermutation => {
                f.write_str("voter permutation must cover 0..voter_count exactly once")
            }
            BallotError::BadCandidatePermutation => {
                f.write_str("candidate mapping is not a permutation of the roster")
            }
        }
    }
}

impl core::error::Error for BallotError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingCandidatesHeader,
    SecondCandidatesHeader,
    NoCandidates,
    BadCandidateToken(String),
    DuplicateCandidate(String),
    MalformedLine,
    BadCount(String),
    UnknownCandidate(String),
    DuplicateInBallot(String),
    MissingFromBallot(String),
    NoBallots,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MissingCandidatesHeader => {
                f.write_str("expected a 'candidates:' header")
            }
            ParseErrorKind::SecondCandidatesHeader => {
                f.write_str("a profile has exactly one 'candidates:' header")
            }
            ParseErrorKind::NoCandidates => f.write_str("the candidates list is empty"),
            ParseErrorKind::BadCandidateToken(t) => {
                write!(f, "bad candidate token '{t}' (allowed: letters, digits, '_')")
            }
            ParseErrorKind::DuplicateCandidate(c) => write!(f, "duplicate candidate '{c}'"),
            ParseErrorKind::MalformedLine => {
                f.write_str("expected '<count>: c1 > c2 > ... > ck'")
            }
            ParseErrorKind::BadCount(s) => {
                write!(f, "count '{s}' is not a positive integer")
            }
            ParseErrorKind::UnknownCandidate(c) => write!(f, "unknown candidate '{c}'"),
            ParseErrorKind::DuplicateInBallot(c) => {
                write!(f, "ballot ranks candidate '{c}' more than once")
            }
            ParseErrorKind::MissingFromBallot(c) => {
                write!(f, "ballot does not rank candidate '{c}'")
            }
            ParseErrorKind::NoBallots => f.write_str("the profile has no ballots"),
        }
    }
}

impl core::error::Error for ParseError {}

/// How a [`ProfileDomain`] generates profiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainMode {
    /// Every ballot multiset, one sorted representative per multiset.
    ExhaustiveMultiset,
    /// Every ballot sequence (voters ordered).
    ExhaustiveSequence,
    /// Seeded uniform samples; each draws a voter count from the range,
    /// then independent uniform ballots.
    Random { samples: u64, seed: u64 },
}

/// A family of profiles over a fixed roster and voter-count range, used as
/// the universe an axiom is checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileDomain {
    candidates: Vec<Candidate>,
    min_voters: u32,
    max_voters: u32,
    mode: DomainMode,
    budget: u64,
}

pub const DEFAULT_BUDGET: u64 = 10_000_000;

impl ProfileDomain {
    fn new(
        roster: Vec<Candidate>,
        voters: RangeInclusive<u32>,
        mode: DomainMode,
    ) -> Result<Self, DomainError> {
        if roster.is_empty() {
            return Err(DomainError::EmptyCandidates);
        }
        let mut sorted = roster;
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(DomainError::DuplicateCandidate(w[0].as_str().to_string()));
            }
        }
        let (min, max) = (*voters.start(), *voters.end());
        if min == 0 || min > max {
            return Err(DomainError::BadVoterRange { min, max });
        }
        Ok(ProfileDomain {
            candidates: sorted,
            min_voters: min,
            max_voters: max,
            mode,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn exhaustive_multiset(
        roster: Vec<Candidate>,
        voters: RangeInclusive<u32>,
    ) -> Result<Self, DomainError> {
        ProfileDomain::new(roster, voters, DomainMode::ExhaustiveMultiset)
    }

    pub fn exhaustive_sequence(
        roster: Vec<Candidate>,
        voters: RangeInclusive<u32>,
    ) -> Result<Self, DomainError> {
        ProfileDomain::new(roster, voters, DomainMode::ExhaustiveSequence)
    }

    pub fn random(
        roster: Vec<Candidate>,
        voters: RangeInclusive<u32>,
        samples: u64,
        seed: u64,
    ) -> Result<Self, DomainError> {
        ProfileDomain::new(roster, voters, DomainMode::Random { samples, seed })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn voter_range(&self) -> RangeInclusive<u32> {
        self.min_voters..=self.max_voters
    }

    pub fn mode(&self) -> &DomainMode {
        &self.mode
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// How many profiles iteration would yield; `None` if the count
    /// overflows 128 bits (certainly over any budget).
    pub fn profile_count(&self) -> Option<u128> {
        match self.mode {
            DomainMode::Random { samples, .. } => Some(samples as u128),
            _ => {
                let types = factorial(self.candidates.len() as u64)?;
                let mut total: u128 = 0;
                for n in self.min_voters..=self.max_voters {
                    let here = match self.mode {
                        DomainMode::ExhaustiveMultiset => multiset_count(types, n)?,
                        DomainMode::ExhaustiveSequence => checked_pow(types, n)?,
                        DomainMode::Random { .. } => unreachable!(),
                    };
                    total = total.checked_add(here)?;
                }
                Some(total)
            }
        }
    }

    /// One-line description used in axiom verdicts and reports.
    pub fn summary(&self) -> String {
        let mut names = String::new();
        for (i, c) in self.candidates.iter().enumerate() {
            if i > 0 {
                names.push_str(", ");
            }
            names.push_str(c.as_str());
        }
        let voters = match (self.min_voters, self.max_voters) {
            (1, 1) => String::from("1 voter"),
            (min, max) if min == max => alloc::format!("{min} voters"),
            (min, max) => alloc::format!("{min}..={max} voters"),
        };
        match self.mode {
            DomainMode::ExhaustiveMultiset => {
                alloc::format!("exhaustive multisets over {{{names}}}, {voters}")
            }
            DomainMode::ExhaustiveSequence => {
                alloc::format!("exhaustive sequences over {{{names}}}, {voters}")
            }
            DomainMode::Random { samples, seed } => {
                alloc::format!("{samples} random profiles over {{{names}}}, {voters}, seed {seed}")
            }
        }
    }

    /// Starts iteration, refusing domains whose profile count exceeds the
    /// budget.
    pub fn iter(&self) -> Result<DomainIter, DomainError> {
        let required = self.profile_count();
        match required {
            Some(n) if n <= self.budget as u128 => {}
            _ => {
                return Err(DomainError::BudgetExceeded {
                    required,
                    budget: self.budget,
                })
            }
        }
        let types = lex_permutations(self.candidates.len());
        let state = match self.mode {
            DomainMode::ExhaustiveMultiset => IterState::Exhaustive {
                multiset: true,
                cursor: Some(vec![0; self.min_voters as usize]),
            },
            DomainMode::ExhaustiveSequence => IterState::Exhaustive {
                multiset: false,
                cursor: Some(vec![0; self.min_voters as usize]),
            },
            DomainMode::Random { samples, seed } => IterState::Random {
                remaining: samples,
                rng: Box::new(ChaCha12Rng::seed_from_u64(seed)),
            },
        };
        Ok(DomainIter {
            candidates: self.candidates.clone(),
            types,
            min_voters: self.min_voters,
            max_voters: self.max_voters,
            state,
        })
    }
}

/// Iterates a domain's profiles. Exhaustive modes scan voter counts in
/// ascending order and, within a count, ballot-type index vectors in
/// lexicographic order (multiset mode keeps the vectors nondecreasing, one
/// representative per multiset). Ballot types are the lexicographic
/// permutations of the sorted roster. The order, and random mode's streams,
/// are deterministic for a given domain.
pub struct DomainIter {
    candidates: Vec<Candidate>,
    types: Vec<Vec<u32>>,
    min_voters: u32,
    max_voters: u32,
    state: IterState,
}

enum IterState {
    Exhaustive {
        multiset: bool,
        cursor: Option<Vec<usize>>,
    },
    Random {
        remaining: u64,
        rng: Box<ChaCha12Rng>,
    },
}

impl Iterator for DomainIter {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        match &mut self.state {
            IterState::Exhaustive { multiset, cursor } => {
                let cur = cursor.take()?;
                let rows = cur
                    .iter()
                    .map(|&t| self.types[t].clone())
                    .collect::<Vec<_>>();
                let profile = Profile::from_rows(self.candidates.clone(), rows);
                *cursor = advance(cur, self.types.len(), self.max_voters, *multiset);
                Some(profile)
            }
            IterState::Random { remaining, rng } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let n = if self.min_voters == self.max_voters {
                    self.min_voters
                } else {
                    rng.gen_range(self.min_voters..=self.max_voters)
                };
                let m = self.candidates.len() as u32;
                let rows = (0..n)
                    .map(|_| {
                        let mut row: Vec<u32> = (0..m).collect();
                        row.shuffle(rng);
                        row
                    })
                    .collect();
                Some(Profile::from_rows(self.candidates.clone(), rows))
            }
        }
    }
}

fn advance(
    mut cur: Vec<usize>,
    types: usize,
    max_voters: u32,
    multiset: bool,
) -> Option<Vec<usize>> {
    let top = types - 1;
    for i in (0..cur.len()).rev() {
        if cur[i] < top {
            cur[i] += 1;
            if multiset {
                let v = cur[i];
                for slot in cur.iter_mut().skip(i + 1) {
                    *slot = v;
                }
            } else {
                for slot in cur.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
            }
            return Some(cur);
        }
    }
    let n = cur.len() as u32 + 1;
    if n > max_voters {
        None
    } else {
        Some(vec![0; n as usize])
    }
}

/// Iterates the profiles of a domain; errors if the domain's size exceeds
/// its budget.
pub fn enumerate_profiles(d: &ProfileDomain) -> Result<DomainIter, DomainError> {
    d.iter()
}

/// All ballots over a sorted roster, as rank rows in lexicographic order.
pub(crate) fn lex_permutations(m: usize) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = (0..m as u32).collect();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn factorial(m: u64) -> Option<u128> {
    let mut f: u128 = 1;
    for k in 2..=m as u128 {
        f = f.checked_mul(k)?;
    }
    Some(f)
}

/// C(types + n - 1, n): ballot multisets of size n over `types` ballot
/// kinds.
fn multiset_count(types: u128, n: u32) -> Option<u128> {
    let mut num: u128 = 1;
    for i in 1..=n as u128 {
        num = num.checked_mul(types.checked_add(i)?.checked_sub(1)?)?;
        num /= i; // exact: the partial product is C(types+i-1, i) * i!
    }
    Some(num)
}

fn checked_pow(base: u128, n: u32) -> Option<u128> {
    let mut p: u128 = 1;
    for _ in 0..n {
        p = p.checked_mul(base)?;
    }
    Some(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainError {
    EmptyCandidates,
    DuplicateCandidate(String),
    BadVoterRange { min: u32, max: u32 },
    BudgetExceeded { required: Option<u128>, budget: u64 },
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::EmptyCandidates => f.write_str("a domain needs at least one candidate"),
            DomainError::DuplicateCandidate(c) => write!(f, "duplicate candidate '{c}'"),
            DomainError::BadVoterRange { min, max } => {
                write!(f, "bad voter range {min}..={max} (need 1 <= min <= max)")
            }
            DomainError::BudgetExceeded { required, budget } => match required {
                Some(n) => write!(f, "domain holds {n} profiles, over the budget of {budget}"),
                None => write!(f, "domain size overflows, over the budget of {budget}"),
            },
        }
    }
}

impl core::error::Error for DomainError {}
