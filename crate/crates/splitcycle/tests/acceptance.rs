//! Acceptance gate: nine end-to-end checks of the engine against worked
//! elections, exhaustive small domains, and seeded samples, each with a
//! wall-clock ceiling. One line per criterion; any failure exits nonzero.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use splitcycle::axioms::{
    builtin_witnesses, check_axiom, replay_witness, verify_witness, AxiomId, CheckStatus,
};
use splitcycle::ballots::{
    candidates, enumerate_profiles, format_profile, margin, parse_profile, Candidate, Profile,
    ProfileDomain,
};
use splitcycle::graphs::{margin_graph, mcgarvey, MarginGraph};
use splitcycle::methods::{
    borda_scores, defeat, split_cycle_defeat, winners, Formulation, MethodId, ALL_FORMULATIONS,
};

fn example6_graph() -> MarginGraph {
    MarginGraph::from_names(
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
}

fn example6_profile() -> Profile {
    // odd figure weights, so synthesize the doubled graph; the defeat
    // relation only compares margins against cycle minima and is unmoved
    // by uniform scaling
    mcgarvey(&example6_graph().scaled(2).unwrap()).expect("even weights synthesize")
}

fn q_profile() -> Profile {
    parse_profile("candidates: a b c\n4: a > b > c\n2: b > c > a\n3: c > a > b\n").unwrap()
}

fn pair_set(rel: &splitcycle::methods::DefeatRelation) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = rel
        .pair_list()
        .into_iter()
        .map(|(x, y)| (x.as_str().to_string(), y.as_str().to_string()))
        .collect();
    v.sort();
    v
}

fn named(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = pairs
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    v.sort();
    v
}

fn abc() -> Vec<Candidate> {
    candidates(&["a", "b", "c"]).unwrap()
}

fn abcd() -> Vec<Candidate> {
    candidates(&["a", "b", "c", "d"]).unwrap()
}

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

fn suite_failures(method: MethodId, d: &ProfileDomain) -> Vec<String> {
    let mut bad = Vec::new();
    for axiom in SUITE {
        match check_axiom(axiom, method, d) {
            Ok(v) if v.status == CheckStatus::HoldsOnDomain => {}
            Ok(v) => bad.push(format!("{axiom}: {}", v.status)),
            Err(e) => bad.push(format!("{axiom}: {e}")),
        }
    }
    bad
}

fn criterion1() -> Result<String, String> {
    let p = example6_profile();
    let rel = defeat(MethodId::SplitCycle, &p);
    let expected = named(&[("a", "b"), ("b", "c"), ("a", "d"), ("b", "d"), ("c", "d")]);
    if pair_set(&rel) != expected {
        return Err(format!("defeat pairs {:?}", pair_set(&rel)));
    }
    let w = winners(MethodId::SplitCycle, &p);
    if w.len() != 1 || w[0].as_str() != "a" {
        return Err(format!("winners {w:?}"));
    }
    Ok("five defeat pairs and sole winner a".to_string())
}

fn criterion2() -> Result<String, String> {
    let exhaustive = ProfileDomain::exhaustive_multiset(abc(), 1..=4).unwrap();
    let mut checked = 0u64;
    let mut run = |p: &Profile| -> Result<(), String> {
        let reference = split_cycle_defeat(p, Formulation::WidestPath);
        for f in ALL_FORMULATIONS {
            if split_cycle_defeat(p, f) != reference {
                return Err(format!("{f:?} disagrees on {}", format_profile(p)));
            }
        }
        checked += 1;
        Ok(())
    };
    for p in enumerate_profiles(&exhaustive).unwrap() {
        run(&p)?;
    }
    let sampled = ProfileDomain::random(
        candidates(&["a", "b", "c", "d", "e"]).unwrap(),
        9..=9,
        1000,
        0xC0FFEE,
    )
    .unwrap();
    for p in enumerate_profiles(&sampled).unwrap() {
        run(&p)?;
    }
    Ok(format!("four formulations agree on {checked} profiles"))
}

fn criterion3() -> Result<String, String> {
    let d = ProfileDomain::exhaustive_multiset(abc(), 1..=3).unwrap();
    let bad = suite_failures(MethodId::SplitCycle, &d);
    if bad.is_empty() {
        Ok("eight verdicts hold on the exhaustive domain".to_string())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion4() -> Result<String, String> {
    let d = ProfileDomain::exhaustive_multiset(abc(), 1..=3).unwrap();
    for method in [MethodId::Null, MethodId::GlobalSplit] {
        let bad = suite_failures(method, &d);
        if !bad.is_empty() {
            return Err(format!("{method}: {}", bad.join("; ")));
        }
        for p in enumerate_profiles(&d).unwrap() {
            let sc = defeat(MethodId::SplitCycle, &p);
            if !defeat(method, &p).is_subrelation_of(&sc) {
                return Err(format!("{method} exceeds split_cycle on {}", format_profile(&p)));
            }
        }
    }
    let six = example6_profile();
    let (a, d6) = (Candidate::new("a").unwrap(), Candidate::new("d").unwrap());
    if !defeat(MethodId::SplitCycle, &six).defeats(&a, &d6) {
        return Err("split_cycle misses (a,d) on the four-candidate election".to_string());
    }
    if defeat(MethodId::GlobalSplit, &six).defeats(&a, &d6) {
        return Err("global_split is not strictly coarser at (a,d)".to_string());
    }
    let q = q_profile();
    let b = Candidate::new("b").unwrap();
    if !defeat(MethodId::SplitCycle, &q).defeats(&a, &b) {
        return Err("split_cycle misses (a,b) on the nine-voter election".to_string());
    }
    if !defeat(MethodId::Null, &q).is_empty() {
        return Err("null defeated someone".to_string());
    }
    Ok("refinements pass the suite, stay inside split_cycle, and are strictly coarser".to_string())
}

fn criterion5() -> Result<String, String> {
    let cases = builtin_witnesses();
    let total = cases.len();
    for case in cases {
        let report = verify_witness(&case).map_err(|e| format!("{}: {e}", case.name))?;
        if !report.passed {
            let failed: Vec<&str> = report
                .expectations
                .iter()
                .filter(|e| !e.passed)
                .map(|e| e.label.as_str())
                .collect();
            return Err(format!("{}: {}", case.name, failed.join("; ")));
        }
    }
    Ok(format!("{total} canned cases verified"))
}

fn criterion6() -> Result<String, String> {
    let mut checked = 0u64;
    let mut run = |p: &Profile| -> Result<(), String> {
        let rel = defeat(MethodId::Borda, p);
        let cs = p.candidates();
        let sums: Vec<i64> = cs
            .iter()
            .map(|x| {
                cs.iter()
                    .filter(|y| *y != x)
                    .map(|y| margin(p, x, y).unwrap())
                    .sum()
            })
            .collect();
        let scores = borda_scores(p);
        for (i, x) in cs.iter().enumerate() {
            for (j, y) in cs.iter().enumerate() {
                if i != j && rel.defeats(x, y) != (sums[i] > sums[j]) {
                    return Err(format!("margin sums disagree on {}", format_profile(p)));
                }
                if i != j && rel.defeats(x, y) != (scores[i] > scores[j]) {
                    return Err(format!("positional scores disagree on {}", format_profile(p)));
                }
            }
        }
        checked += 1;
        Ok(())
    };
    let exhaustive = ProfileDomain::exhaustive_multiset(abc(), 1..=3).unwrap();
    for p in enumerate_profiles(&exhaustive).unwrap() {
        run(&p)?;
    }
    let sampled = ProfileDomain::random(abcd(), 3..=9, 1000, 0xB0DA).unwrap();
    for p in enumerate_profiles(&sampled).unwrap() {
        run(&p)?;
    }
    Ok(format!("defeat matches margin sums on {checked} profiles"))
}

fn criterion7() -> Result<String, String> {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5EED);
    let names = ["a", "b", "c", "d", "e"];
    for trial in 0..500 {
        let m = rng.gen_range(2..=5usize);
        let mut edges = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let w = 2 * rng.gen_range(0..=3i64);
                if w == 0 {
                    continue;
                }
                if rng.gen_bool(0.5) {
                    edges.push((names[i], names[j], w));
                } else {
                    edges.push((names[j], names[i], w));
                }
            }
        }
        let g = MarginGraph::from_names(&names[..m], &edges).unwrap();
        let p = mcgarvey(&g).map_err(|e| format!("trial {trial}: {e}"))?;
        if margin_graph(&p).matrix() != g.matrix() {
            return Err(format!("trial {trial}: roundtrip drifted"));
        }
    }
    Ok("500 synthesized elections reproduce their graphs".to_string())
}

fn criterion8() -> Result<String, String> {
    let exhaustive = ProfileDomain::exhaustive_multiset(abc(), 1..=3).unwrap();
    let sampled = ProfileDomain::random(abcd(), 3..=9, 1000, 0xCC).unwrap();
    for d in [&exhaustive, &sampled] {
        for axiom in [AxiomId::CondorcetConsistency, AxiomId::MajorityDefeat] {
            let v = check_axiom(axiom, MethodId::SplitCycle, d)
                .map_err(|e| format!("{axiom}: {e}"))?;
            if v.status != CheckStatus::HoldsOnDomain {
                return Err(format!("{axiom} on {}: {}", v.domain, v.status));
            }
        }
    }
    Ok("no violations across the exhaustive domain and 1000 samples".to_string())
}

fn criterion9() -> Result<String, String> {
    let hunts: [(AxiomId, MethodId, ProfileDomain); 4] = [
        (
            AxiomId::CoherentIia,
            MethodId::Borda,
            ProfileDomain::exhaustive_multiset(abc(), 1..=2).unwrap(),
        ),
        (
            AxiomId::NeutralReversalUp,
            MethodId::Plurality,
            ProfileDomain::exhaustive_multiset(abc(), 1..=1).unwrap(),
        ),
        (
            AxiomId::Monotonicity,
            MethodId::Hare,
            ProfileDomain::exhaustive_multiset(abc(), 10..=10).unwrap(),
        ),
        (
            AxiomId::LocalAlpha,
            MethodId::SplitCycle,
            ProfileDomain::exhaustive_multiset(abc(), 1..=3).unwrap(),
        ),
    ];
    let mut notes = Vec::new();
    for (axiom, method, domain) in &hunts {
        let v = check_axiom(*axiom, *method, domain).map_err(|e| format!("{axiom}: {e}"))?;
        if v.status != CheckStatus::Counterexample {
            return Err(format!("{axiom} for {method}: {} instead of a counterexample", v.status));
        }
        let w = v.witness.as_ref().expect("counterexamples carry witnesses");
        match replay_witness(*axiom, *method, w) {
            Ok(true) => {}
            other => return Err(format!("{axiom} for {method}: witness replay said {other:?}")),
        }
        notes.push(format!("{axiom}/{method}"));
    }
    Ok(format!("found and replayed: {}", notes.join(", ")))
}

type Criterion = fn() -> Result<String, String>;

fn main() {
    let checks: Vec<(&str, Duration, Criterion)> = vec![
        ("four-candidate cycle election", Duration::from_secs(1), criterion1),
        ("formulation equivalence", Duration::from_secs(60), criterion2),
        ("defeat axiom suite", Duration::from_secs(300), criterion3),
        ("resolute refinements", Duration::from_secs(300), criterion4),
        ("witness suite", Duration::from_secs(5), criterion5),
        ("positional/margin agreement", Duration::from_secs(30), criterion6),
        ("synthesis roundtrip", Duration::from_secs(30), criterion7),
        ("majority guarantees", Duration::from_secs(60), criterion8),
        ("counterexample search", Duration::from_secs(600), criterion9),
    ];
    let mut failures = 0;
    for (i, (label, limit, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let timely = elapsed <= *limit;
        match outcome {
            Ok(note) if timely => {
                println!("criterion {}: PASS [{:>8.2?}] {label}: {note}", i + 1, elapsed);
            }
            Ok(note) => {
                failures += 1;
                println!(
                    "criterion {}: FAIL [{:>8.2?}] {label}: over the {:?} ceiling ({note})",
                    i + 1,
                    elapsed,
                    limit
                );
            }
            Err(reason) => {
                failures += 1;
                println!("criterion {}: FAIL [{:>8.2?}] {label}: {reason}", i + 1, elapsed);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} criteria failed");
        std::process::exit(1);
    }
}
