use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bkl_braid::braid::{mixed_from_word, MixedLetter};
use bkl_braid::normal::{normalize_mixed_with, reduce_observed};
use bkl_braid::oracle::presentation_relations;
use bkl_braid::random::{letter_word, mixed_word, positive_word, seeded, word_pair};
use bkl_braid::verify::{
    expected_families, fixture_holds, lemma_fixtures, verify_confluence, RelationPair, VerifyConfig,
};
use bkl_braid::{
    braid_eq_oracle, equal, invert_band, is_irreducible, match_at, minimal_positive_oracle,
    normalize, normalize_mixed, BraidContext, Letter, NormalForm, RuleId, Strategy, Word,
};
use rayon::prelude::*;

const CLOSURE_STRANDS: std::ops::RangeInclusive<usize> = 2..=6;
const CLOSURE_LIMIT: Duration = Duration::from_secs(10);
const FIXTURE_STRANDS: std::ops::RangeInclusive<usize> = 2..=5;
const FIXTURE_LIMIT: Duration = Duration::from_secs(60);
const CONFLUENCE_BOUNDS: [(usize, usize); 3] = [(2, 2), (3, 1), (4, 0)];
const COVERAGE_BOUNDS: [(usize, usize); 2] = [(4, 1), (6, 1)];
const CONFLUENCE_LIMIT: Duration = Duration::from_secs(300);
const ORACLE_STRANDS: [usize; 4] = [2, 3, 4, 5];
const ORACLE_PAIRS: usize = 1000;
const ORACLE_MAX_LEN: usize = 12;
const ORACLE_MIN_EQUAL: usize = 300;
const ORACLE_LIMIT: Duration = Duration::from_secs(120);
const DESCENT_WORDS: usize = 400;
const STRATEGY_WORDS: usize = 500;
const STRATEGY_MIN_POLICIES: usize = 3;
const SHAPE_WORDS: usize = 400;
const MINIMALITY_MAX_TAIL: usize = 6;
const MINIMALITY_BUDGET: usize = 200_000;
const INVERSE_STRANDS: std::ops::RangeInclusive<usize> = 2..=6;

fn ctx(n: usize) -> BraidContext {
    BraidContext::new(n).unwrap()
}

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn within(start: Instant, limit: Duration, detail: String) -> Check {
    let took = start.elapsed();
    if took <= limit {
        Ok(format!("{detail}; {:.2?} (limit {:?})", took, limit))
    } else {
        Err(format!("{detail}; took {:.2?}, limit {:?}", took, limit))
    }
}

fn presentation_closure() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for n in CLOSURE_STRANDS {
        let c = ctx(n);
        for (l, r) in presentation_relations(c) {
            count += 1;
            if !equal(c, &mixed_from_word(&l), &mixed_from_word(&r)) {
                return Err(format!("n={n}: {l} != {r}"));
            }
        }
    }
    within(
        start,
        CLOSURE_LIMIT,
        format!("{count} relation instances, n=2..6"),
    )
}

fn fixture_suite() -> Check {
    let start = Instant::now();
    let mut by_kind: BTreeMap<String, usize> = BTreeMap::new();
    for n in FIXTURE_STRANDS {
        let c = ctx(n);
        for fx in lemma_fixtures(c) {
            if !fixture_holds(c, &fx) {
                return Err(format!("n={n} {}: {} != {}", fx.kind, fx.lhs, fx.rhs));
            }
            *by_kind.entry(fx.kind.to_string()).or_default() += 1;
        }
    }
    let total: usize = by_kind.values().sum();
    let kinds: Vec<String> = by_kind.iter().map(|(k, c)| format!("{k}={c}")).collect();
    within(
        start,
        FIXTURE_LIMIT,
        format!("{total} identities [{}]", kinds.join(" ")),
    )
}

fn confluence() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut hits: BTreeMap<RelationPair, usize> = BTreeMap::new();
    for (n, m) in CONFLUENCE_BOUNDS.into_iter().chain(COVERAGE_BOUNDS) {
        let report = verify_confluence(ctx(n), VerifyConfig::new(m))
            .map_err(|e| format!("n={n} m={m}: {e}"))?;
        if let Some(f) = report.failures.first() {
            return Err(format!(
                "n={n} m={m}: {} non-joinable, first {} at {}: {} vs {}",
                report.failures.len(),
                f.family,
                f.w,
                f.u_form,
                f.v_form
            ));
        }
        for c in &report.checklist {
            *hits.entry(c.family).or_default() += c.hits;
        }
        let reached = report.checklist.iter().filter(|c| c.reachable()).count();
        let mut part = format!(
            "n={n},m={m}: {} ambiguities, {reached}/{} families",
            report.ambiguities,
            report.checklist.len()
        );
        if (n, m) == COVERAGE_BOUNDS[0] {
            let missing: Vec<String> = report
                .checklist
                .iter()
                .filter(|c| !c.reachable())
                .map(|c| c.family.to_string())
                .collect();
            part += &format!(" (unreachable here: {})", missing.join(" "));
        }
        parts.push(part);
    }
    let unreachable: Vec<String> = expected_families()
        .into_iter()
        .filter(|f| hits.get(f).copied().unwrap_or(0) == 0)
        .map(|f| f.to_string())
        .collect();
    if !unreachable.is_empty() {
        parts.push(format!(
            "unreachable at all bounds: {}",
            unreachable.join(" ")
        ));
    }
    within(start, CONFLUENCE_LIMIT, parts.join("; "))
}

fn oracle_agreement() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for n in ORACLE_STRANDS {
        let c = ctx(n);
        let mut rng = seeded(0xACCE_0000 + n as u64);
        let pairs: Vec<_> = (0..ORACLE_PAIRS)
            .map(|_| word_pair(c, &mut rng, ORACLE_MAX_LEN))
            .collect();
        let verdicts: Vec<(bool, bool)> = pairs
            .par_iter()
            .map(|(u, v)| (equal(c, u, v), braid_eq_oracle(c, u, v)))
            .collect();
        if let Some(i) = verdicts.iter().position(|(a, b)| a != b) {
            return Err(format!("n={n}: disagreement on {:?}", pairs[i]));
        }
        let eq = verdicts.iter().filter(|(a, _)| *a).count();
        if eq < ORACLE_MIN_EQUAL {
            return Err(format!(
                "n={n}: only {eq} equal pairs, need {ORACLE_MIN_EQUAL}"
            ));
        }
        parts.push(format!("n={n}: {ORACLE_PAIRS} pairs ({eq} equal)"));
    }
    within(start, ORACLE_LIMIT, parts.join(", "))
}

fn descent() -> Check {
    let mut steps = 0usize;
    let mut words = 0usize;
    for n in 2..=6 {
        let c = ctx(n);
        let mut rng = seeded(0xDE5C + n as u64);
        let mut corpus: Vec<Word> = (0..DESCENT_WORDS)
            .map(|_| letter_word(c, &mut rng, 14))
            .collect();
        corpus.extend(
            presentation_relations(c)
                .into_iter()
                .flat_map(|(l, r)| [l, r]),
        );
        for w in corpus {
            words += 1;
            let mut bad = None;
            reduce_observed(c, &w, Strategy::DEFAULT, |before, m, after| {
                steps += 1;
                if after >= before && bad.is_none() {
                    bad = Some(format!("{} step {before} -> {after}", m.rule));
                }
            });
            if let Some(b) = bad {
                return Err(format!("n={n}: {b}"));
            }
        }
    }
    Ok(format!(
        "{words} words, {steps} rewrite steps, each strictly decreasing"
    ))
}

fn strategy_independence() -> Check {
    let policies = Strategy::all();
    if policies.len() < STRATEGY_MIN_POLICIES {
        return Err(format!("only {} policies", policies.len()));
    }
    let mut rng = seeded(0x57A7);
    let words: Vec<(usize, Vec<MixedLetter>)> = (0..STRATEGY_WORDS)
        .map(|i| {
            let n = 2 + i % 3;
            (n, mixed_word(ctx(n), &mut rng, 12))
        })
        .collect();
    let bad = words.par_iter().find_any(|(n, w)| {
        let c = ctx(*n);
        let first = normalize_mixed_with(c, w, policies[0]);
        policies[1..]
            .iter()
            .any(|&p| normalize_mixed_with(c, w, p) != first)
    });
    match bad {
        Some((n, w)) => Err(format!("n={n}: policies disagree on {w:?}")),
        None => Ok(format!(
            "{STRATEGY_WORDS} words over n=2..4, {} policies, zero discrepancies",
            policies.len()
        )),
    }
}

fn shape_ok(c: BraidContext, nf: &NormalForm) -> Result<(), String> {
    let w = nf.to_word();
    if !nf.tail.is_positive() || nf.tail.iter().any(|x| x.is_delta()) {
        return Err(format!("tail of {nf} not positive"));
    }
    if !is_irreducible(c, &w) {
        return Err(format!("{nf} reducible"));
    }
    if match_at(c, &nf.tail, 0, RuleId::E7).is_some() {
        return Err(format!("tail of {nf} starts with a δ-divisor"));
    }
    Ok(())
}

fn normal_form_shape() -> Check {
    let mut checked = 0;
    let mut minimal = 0;
    for n in 2..=6 {
        let c = ctx(n);
        let mut rng = seeded(0x5BA9 + n as u64);
        for i in 0..SHAPE_WORDS {
            let nf = if i % 2 == 0 {
                normalize_mixed(c, &mixed_word(c, &mut rng, 12))
            } else {
                let len = i % 9;
                normalize(c, &positive_word(c, &mut rng, len))
            };
            shape_ok(c, &nf).map_err(|e| format!("n={n}: {e}"))?;
            checked += 1;
            if n <= 4 && nf.tail.len() <= MINIMALITY_MAX_TAIL {
                let m = minimal_positive_oracle(c, &nf.tail, MINIMALITY_BUDGET)
                    .map_err(|e| format!("n={n}: {e}"))?;
                if m != nf.tail {
                    return Err(format!("n={n}: tail {} but class minimum {m}", nf.tail));
                }
                minimal += 1;
            }
        }
    }
    Ok(format!(
        "{checked} normal forms well-shaped; {minimal} tails (len <= {MINIMALITY_MAX_TAIL}, n <= 4) are class minima"
    ))
}

fn inverse_elimination() -> Check {
    let mut count = 0;
    for n in INVERSE_STRANDS {
        let c = ctx(n);
        for g in c.band_letters() {
            let gw = Word::from_iter([g]);
            let inv = invert_band(c, g);
            for w in [inv.concat(&gw), gw.concat(&inv)] {
                let nf = normalize(c, &w);
                if !nf.is_identity() {
                    return Err(format!("n={n}: {w} normalizes to {nf}"));
                }
            }
            if inv.first() != Some(&Letter::DeltaInv) {
                return Err(format!("n={n}: inverse of {g} is {inv}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} band letters over n=2..6"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("presentation closure", presentation_closure),
        ("identity fixtures", fixture_suite),
        ("bounded confluence", confluence),
        ("oracle agreement", oracle_agreement),
        ("termination and descent", descent),
        ("strategy independence", strategy_independence),
        ("normal-form shape and minimality", normal_form_shape),
        ("inverse elimination", inverse_elimination),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
