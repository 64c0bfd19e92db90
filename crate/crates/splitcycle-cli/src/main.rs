//! Command-line surface for the election engine.
//!
//! Subcommands: `tabulate` (rules on a ballot file), `axioms` (check one
//! axiom over a domain or explicit pairs), `witness` (replay canned or
//! user cases), `synth` (ballot file realizing a margin-graph JSON),
//! `export-dot` (graph rendering), `enumerate` (domain statistics).
//!
//! Exit codes: 0 pass/holds, 1 counterexample or failed expectation,
//! 2 usage or input error, 3 budget exceeded. Identical invocations on
//! identical files produce byte-identical stdout; diagnostics go to
//! stderr.

mod formats;

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use splitcycle::axioms::{
    builtin_witness, check_axiom, check_axiom_on_pairs, verify_witness, AxiomId, AxiomVerdict,
    CheckStatus, WitnessCase,
};
use splitcycle::ballots::{
    candidates, format_profile, parse_profile, Candidate, DomainError, Profile, ProfileDomain,
    DEFAULT_BUDGET,
};
use splitcycle::graphs::{margin_graph, mcgarvey, to_dot};
use splitcycle::methods::{defeat, MethodId, ALL_METHODS};

use formats::{
    defeat_json, graph_from_json, graph_to_json, pairs_from_json, report_to_json,
    verdict_to_json, witness_case_from_json, DomainStatsJson, MarginGraphJson, PairsFileJson,
    PerVoterCountJson, VoterRangeJson, WitnessFileJson,
};

#[derive(Parser)]
#[command(
    name = "splitcycle",
    version,
    about = "Ranked-ballot elections: tabulate rules, check axioms, replay witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one or more rules on a ballot file
    Tabulate(TabulateArgs),
    /// Check an axiom for a rule over a profile domain or explicit pairs
    Axioms(AxiomsArgs),
    /// Replay a built-in witness case or a witness file
    Witness(WitnessArgs),
    /// Synthesize a ballot file realizing a margin-graph JSON
    Synth(SynthArgs),
    /// Render a ballot file's margin graph as DOT
    ExportDot(ExportDotArgs),
    /// Describe a profile domain without scanning it
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Args)]
struct TabulateArgs {
    /// Rule to evaluate; repeatable, in output order (default: all)
    #[arg(long = "method", action = ArgAction::Append)]
    methods: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Ballot file (.vote)
    file: PathBuf,
}

#[derive(Args)]
struct AxiomsArgs {
    #[arg(long)]
    axiom: String,
    #[arg(long)]
    method: String,
    /// Domain roster, comma separated
    #[arg(long = "domain-candidates")]
    domain_candidates: Option<String>,
    /// Voter counts as min..max (or a single count)
    #[arg(long = "domain-voters")]
    domain_voters: Option<String>,
    #[arg(long = "domain-mode", value_enum, default_value = "multiset")]
    domain_mode: DomainModeArg,
    /// Sample count for the random mode
    #[arg(long)]
    samples: Option<u64>,
    /// Seed for the random mode
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instance budget for the scan
    #[arg(long)]
    budget: Option<u64>,
    /// Expected roster for explicit pairs, comma separated
    #[arg(long)]
    candidates: Option<String>,
    /// JSON file of explicit ordered profile pairs; replaces the domain
    #[arg(long = "pairs-from")]
    pairs_from: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DomainModeArg {
    /// Every ballot multiset (anonymous elections)
    Multiset,
    /// Every ballot sequence (voter identity matters)
    Sequence,
    /// Seeded uniform samples
    Random,
}

#[derive(Args)]
struct WitnessArgs {
    /// Built-in case name, or a path to a witness JSON file
    case: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct SynthArgs {
    /// Margin-graph JSON file; all weights must be even
    graph: PathBuf,
}

#[derive(Args)]
struct ExportDotArgs {
    /// Overlay this rule's defeat relation
    #[arg(long)]
    method: Option<String>,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    /// Ballot file (.vote)
    file: PathBuf,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long = "domain-candidates")]
    domain_candidates: String,
    #[arg(long = "domain-voters")]
    domain_voters: String,
    #[arg(long = "domain-mode", value_enum, default_value = "multiset")]
    domain_mode: DomainModeArg,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget: Option<u64>,
}

/// Restore the default SIGPIPE disposition so piping into a consumer that
/// exits early (`... | head`) kills the process quietly instead of
/// panicking on a failed stdout write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Cmd::Tabulate(args) => tabulate(args),
        Cmd::Axioms(args) => axioms(args),
        Cmd::Witness(args) => witness(args),
        Cmd::Synth(args) => synth(args),
        Cmd::ExportDot(args) => export_dot(args),
        Cmd::Enumerate(args) => enumerate(args),
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_profile(path: &Path) -> Result<Profile> {
    let text = read_to_string(path)?;
    parse_profile(&text).with_context(|| format!("parsing {}", path.display()))
}

fn method_id(name: &str) -> Result<MethodId> {
    MethodId::from_str(name).map_err(|e| anyhow!("{e}"))
}

fn comma_names(list: &str) -> Result<Vec<Candidate>> {
    let tokens: Vec<&str> = list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    candidates(&tokens).map_err(|e| anyhow!("bad candidate list {list:?}: {e}"))
}

fn parse_voters(text: &str) -> Result<RangeInclusive<u32>> {
    let parse_end = |s: &str| -> Result<u32> {
        s.trim()
            .parse::<u32>()
            .map_err(|_| anyhow!("bad voter count {s:?} in {text:?}"))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        Ok(parse_end(lo)?..=parse_end(hi)?)
    } else {
        let n = parse_end(text)?;
        Ok(n..=n)
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn tabulate(args: TabulateArgs) -> Result<i32> {
    let p = load_profile(&args.file)?;
    let methods: Vec<MethodId> = if args.methods.is_empty() {
        ALL_METHODS.to_vec()
    } else {
        args.methods
            .iter()
            .map(|m| method_id(m))
            .collect::<Result<_>>()?
    };
    match args.format {
        Format::Json => {
            let out: Vec<_> = methods
                .iter()
                .map(|&m| defeat_json(m, &p, &defeat(m, &p)))
                .collect();
            print_json(&out)?;
        }
        Format::Table => {
            println!("profile ({} voters):", p.voter_count());
            for line in format_profile(&p).lines().skip(1) {
                println!("  {line}");
            }
            for &m in &methods {
                let json = defeat_json(m, &p, &defeat(m, &p));
                println!("method {m}");
                for (x, y, w) in &json.margins {
                    println!("  margin {x} > {y}: {w}");
                }
                for e in &json.defeats {
                    println!("  defeat {} -> {}", e.from, e.to);
                }
                println!("  winners: {}", json.winners.join(" "));
            }
        }
        Format::Dot => bail!("tabulate formats are json and table; use export-dot for dot"),
    }
    Ok(0)
}

fn verdict_exit(status: CheckStatus) -> i32 {
    match status {
        CheckStatus::HoldsOnDomain => 0,
        CheckStatus::Counterexample => 1,
        CheckStatus::BudgetExceeded => 3,
    }
}

fn build_domain(
    roster: Vec<Candidate>,
    voters: RangeInclusive<u32>,
    mode: DomainModeArg,
    samples: Option<u64>,
    seed: u64,
    budget: Option<u64>,
) -> Result<ProfileDomain> {
    let domain = match mode {
        DomainModeArg::Multiset => ProfileDomain::exhaustive_multiset(roster, voters),
        DomainModeArg::Sequence => ProfileDomain::exhaustive_sequence(roster, voters),
        DomainModeArg::Random => {
            let samples =
                samples.ok_or_else(|| anyhow!("--domain-mode random requires --samples"))?;
            ProfileDomain::random(roster, voters, samples, seed)
        }
    }
    .map_err(|e| anyhow!("bad domain: {e}"))?;
    Ok(match budget {
        Some(b) => domain.with_budget(b),
        None => domain,
    })
}

fn axioms(args: AxiomsArgs) -> Result<i32> {
    let axiom = AxiomId::from_str(&args.axiom).map_err(|e| anyhow!("{e}"))?;
    let method = method_id(&args.method)?;
    let verdict: AxiomVerdict = if let Some(pairs_path) = &args.pairs_from {
        let file: PairsFileJson = serde_json::from_str(&read_to_string(pairs_path)?)
            .with_context(|| format!("parsing {}", pairs_path.display()))?;
        let pairs = pairs_from_json(&file)?;
        if let Some(list) = &args.candidates {
            let mut roster = comma_names(list)?;
            roster.sort();
            for (i, (p, q)) in pairs.iter().enumerate() {
                if p.candidates() != roster.as_slice() {
                    bail!("pair {i}: first profile's roster differs from --candidates");
                }
                if !q.candidates().iter().all(|c| roster.contains(c)) {
                    bail!("pair {i}: second profile's roster is not within --candidates");
                }
            }
        }
        check_axiom_on_pairs(axiom, method, &pairs, args.budget.unwrap_or(DEFAULT_BUDGET))
            .map_err(|e| anyhow!("{e}"))?
    } else {
        let roster = comma_names(
            args.domain_candidates
                .as_deref()
                .ok_or_else(|| anyhow!("either --pairs-from or --domain-candidates is required"))?,
        )?;
        let voters = parse_voters(
            args.domain_voters
                .as_deref()
                .ok_or_else(|| anyhow!("--domain-voters is required with a domain"))?,
        )?;
        let domain = build_domain(
            roster,
            voters,
            args.domain_mode,
            args.samples,
            args.seed,
            args.budget,
        )?;
        match check_axiom(axiom, method, &domain) {
            Ok(v) => v,
            Err(DomainError::BudgetExceeded { required, budget }) => {
                match required {
                    Some(r) => eprintln!("domain holds {r} profiles, over the budget of {budget}"),
                    None => eprintln!("domain profile count overflows; budget is {budget}"),
                }
                return Ok(3);
            }
            Err(e) => bail!("bad domain: {e}"),
        }
    };
    print_json(&verdict_to_json(&verdict))?;
    Ok(verdict_exit(verdict.status))
}

fn witness(args: WitnessArgs) -> Result<i32> {
    let path = Path::new(&args.case);
    let case: WitnessCase = if path.is_file() {
        let file: WitnessFileJson = serde_json::from_str(&read_to_string(path)?)
            .with_context(|| format!("parsing {}", path.display()))?;
        witness_case_from_json(&file)?
    } else {
        builtin_witness(&args.case).map_err(|e| anyhow!("{e}"))?
    };
    let report = verify_witness(&case).map_err(|e| anyhow!("{e}"))?;
    match args.format {
        Format::Json => print_json(&report_to_json(&report))?,
        Format::Table => {
            println!("case {}", report.case);
            for e in &report.expectations {
                println!("  {} {}", if e.passed { "pass" } else { "FAIL" }, e.label);
            }
            println!("{}", if report.passed { "pass" } else { "FAIL" });
        }
        Format::Dot => bail!("witness formats are json and table"),
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn synth(args: SynthArgs) -> Result<i32> {
    let file: MarginGraphJson = serde_json::from_str(&read_to_string(&args.graph)?)
        .with_context(|| format!("parsing {}", args.graph.display()))?;
    let g = graph_from_json(&file)?;
    let p = mcgarvey(&g).map_err(|e| anyhow!("cannot synthesize: {e}"))?;
    print!("{}", format_profile(&p));
    Ok(0)
}

fn export_dot(args: ExportDotArgs) -> Result<i32> {
    let p = load_profile(&args.file)?;
    let g = margin_graph(&p);
    match args.format {
        Format::Dot => {
            let defeats = match &args.method {
                Some(name) => Some(defeat(method_id(name)?, &p).pair_list()),
                None => None,
            };
            let text = to_dot(&g, defeats.as_deref()).map_err(|e| anyhow!("{e}"))?;
            print!("{text}");
        }
        Format::Json => {
            if args.method.is_some() {
                bail!("--method only applies to the dot format");
            }
            print_json(&graph_to_json(&g))?;
        }
        Format::Table => bail!("export-dot formats are dot and json"),
    }
    Ok(0)
}

fn enumerate(args: EnumerateArgs) -> Result<i32> {
    let roster = comma_names(&args.domain_candidates)?;
    let voters = parse_voters(&args.domain_voters)?;
    let domain = build_domain(
        roster,
        voters.clone(),
        args.domain_mode,
        args.samples,
        args.seed,
        args.budget,
    )?;
    let count = domain.profile_count();
    let per_voter_count = match args.domain_mode {
        // samples are drawn across the whole range, not per count
        DomainModeArg::Random => Vec::new(),
        _ => voters
            .map(|n| {
                let slice = build_domain(
                    domain.candidates().to_vec(),
                    n..=n,
                    args.domain_mode,
                    args.samples,
                    args.seed,
                    None,
                )?;
                Ok(PerVoterCountJson {
                    voters: n,
                    profiles: slice.profile_count().map(|c| c.to_string()),
                })
            })
            .collect::<Result<_>>()?,
    };
    let stats = DomainStatsJson {
        candidates: domain
            .candidates()
            .iter()
            .map(|c| c.as_str().to_string())
            .collect(),
        voters: VoterRangeJson {
            min: *domain.voter_range().start(),
            max: *domain.voter_range().end(),
        },
        mode: match args.domain_mode {
            DomainModeArg::Multiset => "multiset".to_string(),
            DomainModeArg::Sequence => "sequence".to_string(),
            DomainModeArg::Random => "random".to_string(),
        },
        profiles: count.map(|c| c.to_string()),
        budget: domain.budget(),
        within_budget: count.is_some_and(|c| c <= domain.budget() as u128),
        per_voter_count,
    };
    print_json(&stats)?;
    Ok(0)
}
