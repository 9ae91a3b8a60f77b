//! Token grammar, rendering and the command implementations behind the
//! `bkl-braid` binary.
//!
//! Words are whitespace-separated tokens:
//!
//! | token            | meaning                    |
//! |------------------|----------------------------|
//! | `a(t,s)`         | band generator, any order  |
//! | `a(t,s)^-1`      | its inverse                |
//! | `s<i>`, `s<i>^-1`| Artin generator `σ_i^{±1}` |
//! | `D`, `D^-1`      | `δ`, `δ⁻¹`                 |
//! | `D^k`            | `δ^k`, any integer `k`     |
//! | `e`              | identity (no letters)      |
//!
//! Every command returns an [`Outcome`]: text for stdout/stderr and an exit
//! code (0 success or equal, 1 unequal, 2 usage or parse error, 3 internal
//! disagreement or verification failure).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{
    eliminate_inverses, make_band, mixed_from_word, mixed_inverse, render_mixed, ArtinLetter,
    BandLetter, BraidContext, Letter, MixedLetter, Sign,
};
use crate::error::{Error, Result};
use crate::normal::{normalize_mixed, NormalForm};
use crate::oracle::{braid_eq_oracle, mixed_to_artin};
use crate::random::{seeded, word_pair};
use crate::verify::{
    fixture_holds, lemma_fixtures, strategy_sweep, verify_confluence, ConfluenceReport,
    VerifyConfig,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEQUAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;

/// Parses a word. Artin letters become band letters, `D^k` expands to `|k|`
/// δ-letters and `e` contributes nothing.
pub fn parse_word(ctx: BraidContext, input: &str) -> Result<Vec<MixedLetter>> {
    let mut out = Vec::new();
    let mut index = 0;
    let mut rest = input;
    let mut offset = 0;
    while let Some(skip) = rest.find(|c: char| !c.is_whitespace()) {
        let start = offset + skip;
        let tail = &input[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let token = &tail[..len];
        let column = input[..start].chars().count() + 1;
        let fail = |message: String| Error::Parse {
            index,
            column,
            message,
        };
        parse_token(ctx, token, &mut out).map_err(|e| match e {
            Error::Parse { message, .. } => fail(message),
            other => fail(other.to_string()),
        })?;
        index += 1;
        offset = start + len;
        rest = &input[offset..];
    }
    Ok(out)
}

fn parse_token(ctx: BraidContext, token: &str, out: &mut Vec<MixedLetter>) -> Result<()> {
    let bad = || Error::Parse {
        index: 0,
        column: 0,
        message: format!("unknown token `{token}`"),
    };
    let (body, inverse) = match token.strip_suffix("^-1") {
        Some(b) if b != "D" => (b, true),
        _ => (token, false),
    };
    if token == "e" {
        return Ok(());
    }
    if let Some(exp) = token.strip_prefix('D') {
        let k: i64 = match exp {
            "" => 1,
            _ => exp
                .strip_prefix('^')
                .and_then(|x| x.parse().ok())
                .ok_or_else(bad)?,
        };
        let d = if k >= 0 {
            Letter::Delta
        } else {
            Letter::DeltaInv
        };
        out.extend(std::iter::repeat_n(
            MixedLetter::Letter(d),
            k.unsigned_abs() as usize,
        ));
        return Ok(());
    }
    let number = |x: &str| x.parse::<usize>().map_err(|_| bad());
    let letter = if let Some(inner) = body.strip_prefix("a(").and_then(|x| x.strip_suffix(')')) {
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        MixedLetter::from(make_band(ctx, number(a)?, number(b)?)?)
    } else if let Some(i) = body.strip_prefix('s') {
        let a = ArtinLetter::new(ctx, number(i)?, Sign::Pos)?;
        MixedLetter::from(BandLetter::new(a.i + 1, a.i))
    } else {
        return Err(bad());
    };
    out.push(if inverse { letter.inverse() } else { letter });
    Ok(())
}

pub fn render_artin(w: &[ArtinLetter]) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn tail_tokens(nf: &NormalForm) -> Vec<String> {
    nf.tail.iter().map(|x| x.to_string()).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    #[value(name = "json-like")]
    JsonLike,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Artin,
    Band,
}

#[derive(Debug, Parser)]
#[command(
    name = "bkl-braid",
    version,
    about = "Braid group normal forms in band generators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Number of strands.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form `D^k A` of a word.
    Normalize {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Decide whether two words represent the same braid.
    Equal {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
        /// Also run the free-group oracle and fail on disagreement.
        #[arg(long)]
        crosscheck: bool,
    },
    /// Rewrite a word letterwise in Artin or band generators.
    Convert {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        to: Target,
        word: String,
        #[arg(long)]
        normalize: bool,
    },
    /// Print the inverse of a word in band generators and δ.
    Invert {
        #[command(flatten)]
        common: Common,
        word: String,
        #[arg(long)]
        normalize: bool,
    },
    /// Check all critical pairs of the rewriting system at bounded size.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        max_wildcard: usize,
        /// Cap on enumerated rule instances.
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
    },
    /// Randomized oracle, strategy and fixture checks.
    Selftest {
        /// Strand count or inclusive range such as `2..5`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => num(s)?..=num(s)?,
    };
    if range.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(range)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with(stdout, EXIT_OK)
    }

    fn with(stdout: String, code: i32) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data") + "\n"
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli.command)
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Normalize { common, word } => {
            with_ctx(&common, |ctx| cmd_normalize(ctx, &word, common.format))
        }
        Command::Equal {
            common,
            left,
            right,
            crosscheck,
        } => with_ctx(&common, |ctx| {
            cmd_equal(ctx, &left, &right, crosscheck, common.format)
        }),
        Command::Convert {
            common,
            to,
            word,
            normalize,
        } => with_ctx(&common, |ctx| {
            cmd_convert(ctx, to, &word, normalize, common.format)
        }),
        Command::Invert {
            common,
            word,
            normalize,
        } => with_ctx(&common, |ctx| {
            cmd_invert(ctx, &word, normalize, common.format)
        }),
        Command::Verify {
            common,
            max_wildcard,
            budget,
        } => with_ctx(&common, |ctx| {
            Ok(cmd_verify(ctx, max_wildcard, budget, common.format))
        }),
        Command::Selftest {
            n,
            trials,
            seed,
            format,
        } => cmd_selftest(n, trials, seed, format),
    };
    result.unwrap_or_else(Outcome::usage)
}

fn with_ctx(common: &Common, f: impl FnOnce(BraidContext) -> Result<Outcome>) -> Result<Outcome> {
    f(BraidContext::new(common.n)?)
}

#[derive(Serialize)]
struct NormalizeRecord<'a> {
    command: &'static str,
    n: u8,
    input: &'a str,
    delta_exp: i64,
    tail: Vec<String>,
    normal_form: String,
}

pub fn cmd_normalize(ctx: BraidContext, input: &str, format: Format) -> Result<Outcome> {
    let nf = normalize_mixed(ctx, &parse_word(ctx, input)?);
    Ok(Outcome::ok(match format {
        Format::Text => format!("{nf}\n"),
        Format::JsonLike => json(&NormalizeRecord {
            command: "normalize",
            n: ctx.n(),
            input,
            delta_exp: nf.delta_exp,
            tail: tail_tokens(&nf),
            normal_form: nf.to_string(),
        }),
    }))
}

#[derive(Serialize)]
struct EqualRecord<'a> {
    command: &'static str,
    n: u8,
    left: &'a str,
    right: &'a str,
    left_form: String,
    right_form: String,
    equal: bool,
    oracle: Option<bool>,
}

pub fn cmd_equal(
    ctx: BraidContext,
    left: &str,
    right: &str,
    crosscheck: bool,
    format: Format,
) -> Result<Outcome> {
    let u = parse_word(ctx, left)?;
    let v = parse_word(ctx, right)?;
    let (fu, fv) = (normalize_mixed(ctx, &u), normalize_mixed(ctx, &v));
    let equal = fu == fv;
    let oracle = crosscheck.then(|| braid_eq_oracle(ctx, &u, &v));
    let disagree = oracle.is_some_and(|o| o != equal);
    let stdout = match format {
        Format::Text => {
            let mut s = String::from(if equal { "equal\n" } else { "unequal\n" });
            writeln!(s, "  {fu}\n  {fv}").unwrap();
            if let Some(o) = oracle {
                writeln!(s, "oracle: {}", if o { "equal" } else { "unequal" }).unwrap();
            }
            s
        }
        Format::JsonLike => json(&EqualRecord {
            command: "equal",
            n: ctx.n(),
            left,
            right,
            left_form: fu.to_string(),
            right_form: fv.to_string(),
            equal,
            oracle,
        }),
    };
    let mut out = Outcome::with(stdout, if equal { EXIT_OK } else { EXIT_UNEQUAL });
    if disagree {
        out.code = EXIT_FAILURE;
        out.stderr = format!(
            "internal disagreement: engine says {}, oracle says {}\n",
            if equal { "equal" } else { "unequal" },
            if equal { "unequal" } else { "equal" }
        );
    }
    Ok(out)
}

#[derive(Serialize)]
struct ConvertRecord<'a> {
    command: &'static str,
    n: u8,
    to: &'static str,
    input: &'a str,
    output: String,
}

pub fn cmd_convert(
    ctx: BraidContext,
    to: Target,
    input: &str,
    normalize: bool,
    format: Format,
) -> Result<Outcome> {
    let w = parse_word(ctx, input)?;
    let output = match (to, normalize) {
        (Target::Band, true) => normalize_mixed(ctx, &w).to_string(),
        (Target::Band, false) => eliminate_inverses(ctx, &w).to_string(),
        (Target::Artin, true) => {
            let nf = mixed_from_word(&normalize_mixed(ctx, &w).to_word());
            render_artin(&mixed_to_artin(ctx, &nf))
        }
        (Target::Artin, false) => render_artin(&mixed_to_artin(ctx, &w)),
    };
    Ok(Outcome::ok(match format {
        Format::Text => format!("{output}\n"),
        Format::JsonLike => json(&ConvertRecord {
            command: "convert",
            n: ctx.n(),
            to: match to {
                Target::Artin => "artin",
                Target::Band => "band",
            },
            input,
            output,
        }),
    }))
}

pub fn cmd_invert(
    ctx: BraidContext,
    input: &str,
    normalize: bool,
    format: Format,
) -> Result<Outcome> {
    let inv = mixed_inverse(&parse_word(ctx, input)?);
    let output = if normalize {
        normalize_mixed(ctx, &inv).to_string()
    } else {
        eliminate_inverses(ctx, &inv).to_string()
    };
    Ok(Outcome::ok(match format {
        Format::Text => format!("{output}\n"),
        Format::JsonLike => json(&ConvertRecord {
            command: "invert",
            n: ctx.n(),
            to: "band",
            input,
            output,
        }),
    }))
}

#[derive(Serialize)]
struct FamilyRecord {
    family: String,
    count: usize,
}

#[derive(Serialize)]
struct ChecklistRecord {
    family: String,
    hits: usize,
    status: &'static str,
}

#[derive(Serialize)]
struct FailureRecord {
    family: String,
    w: String,
    u: String,
    v: String,
    u_form: String,
    v_form: String,
}

#[derive(Serialize)]
struct FixtureFailure {
    kind: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct VerifyRecord {
    command: &'static str,
    n: u8,
    max_wildcard: usize,
    budget: usize,
    coverage: &'static str,
    instances: usize,
    instances_enumerated: usize,
    max_degree: usize,
    ambiguities: usize,
    families: Vec<FamilyRecord>,
    checklist: Vec<ChecklistRecord>,
    extra_families: Vec<FamilyRecord>,
    failures: Vec<FailureRecord>,
    fixtures: usize,
    fixture_failures: Vec<FixtureFailure>,
    passed: bool,
}

pub fn cmd_verify(
    ctx: BraidContext,
    max_wildcard: usize,
    budget: usize,
    format: Format,
) -> Outcome {
    let config = VerifyConfig {
        max_wildcard,
        max_instances: budget,
    };
    let report = match verify_confluence(ctx, config) {
        Ok(r) => r,
        Err(partial) => *partial.report,
    };
    let fixtures = lemma_fixtures(ctx);
    let fixture_failures: Vec<FixtureFailure> = fixtures
        .par_iter()
        .filter(|fx| !fixture_holds(ctx, fx))
        .map(|fx| FixtureFailure {
            kind: fx.kind.to_string(),
            lhs: fx.lhs.to_string(),
            rhs: fx.rhs.to_string(),
        })
        .collect();
    let passed = report.passed() && report.complete() && fixture_failures.is_empty();
    let record = verify_record(&report, budget, fixtures.len(), fixture_failures, passed);
    let stdout = match format {
        Format::Text => verify_text(&record),
        Format::JsonLike => json(&record),
    };
    Outcome::with(stdout, if passed { EXIT_OK } else { EXIT_FAILURE })
}

fn verify_record(
    report: &ConfluenceReport,
    budget: usize,
    fixtures: usize,
    fixture_failures: Vec<FixtureFailure>,
    passed: bool,
) -> VerifyRecord {
    VerifyRecord {
        command: "verify",
        n: report.n,
        max_wildcard: report.max_wildcard,
        budget,
        coverage: if report.complete() {
            "complete"
        } else {
            "partial"
        },
        instances: report.instances,
        instances_enumerated: report.instances_enumerated,
        max_degree: report.max_degree,
        ambiguities: report.ambiguities,
        families: report
            .counts
            .iter()
            .map(|(k, &count)| FamilyRecord {
                family: k.to_string(),
                count,
            })
            .collect(),
        checklist: report
            .checklist
            .iter()
            .map(|c| ChecklistRecord {
                family: c.family.to_string(),
                hits: c.hits,
                status: if c.reachable() { "hit" } else { "unreachable" },
            })
            .collect(),
        extra_families: report
            .extra_families
            .iter()
            .map(|&(k, count)| FamilyRecord {
                family: k.to_string(),
                count,
            })
            .collect(),
        failures: report
            .failures
            .iter()
            .map(|f| FailureRecord {
                family: f.family.to_string(),
                w: f.w.to_string(),
                u: f.u.to_string(),
                v: f.v.to_string(),
                u_form: f.u_form.to_string(),
                v_form: f.v_form.to_string(),
            })
            .collect(),
        fixtures,
        fixture_failures,
        passed,
    }
}

fn verify_text(r: &VerifyRecord) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "n={} max-wildcard={} instances={} max-degree={} ambiguities={}",
        r.n, r.max_wildcard, r.instances, r.max_degree, r.ambiguities
    )
    .unwrap();
    if r.coverage == "partial" {
        writeln!(
            s,
            "coverage: PARTIAL ({} of {} instances, budget {})",
            r.instances, r.instances_enumerated, r.budget
        )
        .unwrap();
    } else {
        writeln!(s, "coverage: complete").unwrap();
    }
    writeln!(s, "families:").unwrap();
    for f in &r.families {
        writeln!(s, "  {:<10} {}", f.family, f.count).unwrap();
    }
    let hit = r.checklist.iter().filter(|c| c.hits > 0).count();
    writeln!(
        s,
        "checklist: {hit} of {} listed families hit",
        r.checklist.len()
    )
    .unwrap();
    let missing: Vec<&str> = r
        .checklist
        .iter()
        .filter(|c| c.hits == 0)
        .map(|c| c.family.as_str())
        .collect();
    if !missing.is_empty() {
        writeln!(s, "  unreachable at these bounds: {}", missing.join(" ")).unwrap();
    }
    writeln!(
        s,
        "fixtures: {} checked, {} failed",
        r.fixtures,
        r.fixture_failures.len()
    )
    .unwrap();
    for f in &r.fixture_failures {
        writeln!(s, "  {}: {} = {}", f.kind, f.lhs, f.rhs).unwrap();
    }
    writeln!(s, "failures: {}", r.failures.len()).unwrap();
    for f in &r.failures {
        writeln!(
            s,
            "  {} w={} u={} v={}: {} vs {}",
            f.family, f.w, f.u, f.v, f.u_form, f.v_form
        )
        .unwrap();
    }
    writeln!(s, "result: {}", if r.passed { "pass" } else { "FAIL" }).unwrap();
    s
}

/// Greedily drops letters while `bad` keeps holding.
fn shrink<T: Clone>(mut items: Vec<T>, bad: impl Fn(&[T]) -> bool) -> Vec<T> {
    let mut i = 0;
    while i < items.len() {
        let mut fewer = items.clone();
        fewer.remove(i);
        if bad(&fewer) {
            items = fewer;
        } else {
            i += 1;
        }
    }
    items
}

#[derive(Serialize)]
struct SelftestRun {
    n: usize,
    oracle_pairs: usize,
    oracle_disagreements: usize,
    sweep_words: usize,
    sweep_discrepancies: usize,
    fixtures: usize,
    fixture_failures: usize,
}

#[derive(Serialize)]
struct SelftestRecord {
    command: &'static str,
    seed: u64,
    trials: usize,
    runs: Vec<SelftestRun>,
    counterexamples: Vec<String>,
    passed: bool,
}

/// Oracle agreement on `trials` word pairs, a strategy sweep over `trials`
/// words and every fixture, for each strand count in the range.
pub fn cmd_selftest(
    range: RangeInclusive<usize>,
    trials: usize,
    seed: u64,
    format: Format,
) -> Result<Outcome> {
    let mut runs = Vec::new();
    let mut counterexamples = Vec::new();
    for n in range {
        let ctx = BraidContext::new(n)?;
        let mut rng = seeded(seed ^ (n as u64).rotate_left(32));
        let pairs: Vec<_> = (0..trials).map(|_| word_pair(ctx, &mut rng, 12)).collect();
        let disagree = |u: &[MixedLetter], v: &[MixedLetter]| {
            (normalize_mixed(ctx, u) == normalize_mixed(ctx, v)) != braid_eq_oracle(ctx, u, v)
        };
        let bad_pairs: Vec<_> = pairs
            .par_iter()
            .filter(|(u, v)| disagree(u, v))
            .cloned()
            .collect();
        if let Some((u, v)) = bad_pairs.first() {
            let u = shrink(u.clone(), |x| disagree(x, v));
            let v = shrink(v.clone(), |y| disagree(&u, y));
            counterexamples.push(format!(
                "n={n} oracle disagreement: {} vs {}",
                render_mixed(&u),
                render_mixed(&v)
            ));
        }

        let sweep = strategy_sweep(ctx, trials, seed.wrapping_add(n as u64), 10);
        if let Some(d) = sweep.discrepancies.first() {
            let w = shrink(d.word.clone(), |w| !strategies_agree(ctx, w));
            counterexamples.push(format!("n={n} strategy discrepancy: {}", render_mixed(&w)));
        }

        let fixtures = lemma_fixtures(ctx);
        let bad_fixtures: Vec<_> = fixtures
            .iter()
            .filter(|fx| !fixture_holds(ctx, fx))
            .collect();
        if let Some(fx) = bad_fixtures.first() {
            counterexamples.push(format!(
                "n={n} {} fixture: {} = {}",
                fx.kind, fx.lhs, fx.rhs
            ));
        }
        runs.push(SelftestRun {
            n,
            oracle_pairs: pairs.len(),
            oracle_disagreements: bad_pairs.len(),
            sweep_words: sweep.trials,
            sweep_discrepancies: sweep.discrepancies.len(),
            fixtures: fixtures.len(),
            fixture_failures: bad_fixtures.len(),
        });
    }
    let passed = counterexamples.is_empty();
    let record = SelftestRecord {
        command: "selftest",
        seed,
        trials,
        runs,
        counterexamples,
        passed,
    };
    let stdout = match format {
        Format::JsonLike => json(&record),
        Format::Text => {
            let mut s = String::new();
            for r in &record.runs {
                writeln!(
                    s,
                    "n={}: oracle {}/{} agree, strategies {}/{} agree, fixtures {}/{} hold",
                    r.n,
                    r.oracle_pairs - r.oracle_disagreements,
                    r.oracle_pairs,
                    r.sweep_words - r.sweep_discrepancies,
                    r.sweep_words,
                    r.fixtures - r.fixture_failures,
                    r.fixtures
                )
                .unwrap();
            }
            for c in &record.counterexamples {
                writeln!(s, "counterexample: {c}").unwrap();
            }
            writeln!(s, "result: {}", if passed { "pass" } else { "FAIL" }).unwrap();
            s
        }
    };
    Ok(Outcome::with(
        stdout,
        if passed { EXIT_OK } else { EXIT_FAILURE },
    ))
}

fn strategies_agree(ctx: BraidContext, w: &[MixedLetter]) -> bool {
    let mut forms = crate::normal::Strategy::all()
        .into_iter()
        .map(|s| crate::normal::normalize_mixed_with(ctx, w, s));
    let first = forms.next().expect("at least one strategy");
    forms.all(|f| f == first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::tests::{b, ctx};

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("bkl-braid").chain(args.iter().copied()))
    }

    #[test]
    fn grammar() {
        let c = ctx(4);
        let w = parse_word(c, " a(3,1)  a(1,3)^-1 s2 s1^-1 D D^-1 D^-2 e ").unwrap();
        assert_eq!(
            w,
            vec![
                MixedLetter::from(b(3, 1)),
                MixedLetter::BandInverse(b(3, 1)),
                MixedLetter::from(b(3, 2)),
                MixedLetter::BandInverse(b(2, 1)),
                MixedLetter::Letter(Letter::Delta),
                MixedLetter::Letter(Letter::DeltaInv),
                MixedLetter::Letter(Letter::DeltaInv),
                MixedLetter::Letter(Letter::DeltaInv),
            ]
        );
        assert!(parse_word(c, "").unwrap().is_empty());
    }

    #[test]
    fn parse_errors_carry_position() {
        let c = ctx(3);
        assert_eq!(
            parse_word(c, "a(2,1) x"),
            Err(Error::Parse {
                index: 1,
                column: 8,
                message: "unknown token `x`".into()
            })
        );
        match parse_word(c, "a(2,1)  a(4,1)") {
            Err(Error::Parse {
                index,
                column,
                message,
            }) => {
                assert_eq!((index, column), (1, 9));
                assert!(message.contains("(4,1)"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_word(c, "s3").is_err());
        assert!(parse_word(c, "a(2,2)").is_err());
        assert!(parse_word(c, "D^x").is_err());
        assert!(parse_word(c, "a(2,1)^-2").is_err());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            out(&["normalize", "--n", "3", "a(3,2) a(2,1)"]).stdout,
            "D^1 e\n"
        );
        assert_eq!(out(&["normalize", "--n", "3", ""]).stdout, "e\n");
        assert_eq!(
            out(&["normalize", "--n", "3", "a(2,1) a(2,1) a(3,1)"]).stdout,
            "D^1 a(3,2)\n"
        );
        let bad = out(&["normalize", "--n", "3", "a(2,1) q"]);
        assert_eq!(bad.code, EXIT_USAGE);
        assert!(bad.stderr.contains("token 1"));
        assert_eq!(out(&["normalize", "--n", "1", "e"]).code, EXIT_USAGE);
    }

    #[test]
    fn equal_examples() {
        let eq = out(&["equal", "--n", "4", "s1 s2 s1", "s2 s1 s2", "--crosscheck"]);
        assert_eq!(eq.code, EXIT_OK);
        assert!(eq.stdout.starts_with("equal"));
        assert!(eq.stdout.contains("oracle: equal"));
        let ne = out(&["equal", "--n", "3", "a(2,1)", "a(3,1)"]);
        assert_eq!(ne.code, EXIT_UNEQUAL);
        assert!(ne.stdout.starts_with("unequal"));
        assert_eq!(out(&["equal", "--n", "3", "D D^-1", ""]).code, EXIT_OK);
    }

    #[test]
    fn convert_examples() {
        assert_eq!(
            out(&["convert", "--n", "4", "--to", "artin", "a(3,1)"]).stdout,
            "s2 s1 s2^-1\n"
        );
        assert_eq!(
            out(&["convert", "--n", "4", "--to", "band", "s2"]).stdout,
            "a(3,2)\n"
        );
        assert_eq!(
            out(&["convert", "--n", "3", "--to", "band", "s1^-1"]).stdout,
            "D^-1 a(3,2)\n"
        );
        assert_eq!(
            out(&[
                "convert",
                "--n",
                "3",
                "--to",
                "band",
                "--normalize",
                "s2 s1"
            ])
            .stdout,
            "D^1 e\n"
        );
    }

    #[test]
    fn invert_round_trip() {
        let o = out(&["invert", "--n", "4", "a(3,1) D", "--normalize"]);
        let back = normalize_mixed(ctx(4), &parse_word(ctx(4), o.stdout.trim()).unwrap());
        let direct = normalize_mixed(
            ctx(4),
            &mixed_inverse(&[
                MixedLetter::from(BandLetter::new(3, 1)),
                Letter::Delta.into(),
            ]),
        );
        assert_eq!(back, direct);
    }

    #[test]
    fn structured_output_is_stable() {
        let a = out(&[
            "normalize",
            "--n",
            "3",
            "--format",
            "json-like",
            "a(2,1) a(2,1) a(3,1)",
        ]);
        let b = out(&[
            "normalize",
            "--n",
            "3",
            "--format",
            "json-like",
            "a(2,1) a(2,1) a(3,1)",
        ]);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(v["delta_exp"], 1);
        assert_eq!(v["tail"][0], "a(3,2)");
        let keys: Vec<_> = a
            .stdout
            .lines()
            .filter_map(|l| l.trim().split(':').next())
            .collect();
        assert_eq!(&keys[1..4], ["\"command\"", "\"n\"", "\"input\""]);
    }

    #[test]
    fn verify_examples() {
        for (n, m) in [("3", "1"), ("2", "2"), ("4", "0")] {
            let o = out(&["verify", "--n", n, "--max-wildcard", m]);
            assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
            assert!(o.stdout.contains("result: pass"));
        }
        let partial = out(&["verify", "--n", "4", "--max-wildcard", "0", "--budget", "3"]);
        assert_eq!(partial.code, EXIT_FAILURE);
        assert!(partial.stdout.contains("PARTIAL"));
    }

    #[test]
    fn selftest_examples() {
        let o = out(&["selftest", "--n", "3", "--trials", "100", "--seed", "7"]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
        assert_eq!(
            out(&["selftest", "--n", "2", "--trials", "10", "--seed", "0"]).code,
            EXIT_OK
        );
        let range = out(&[
            "selftest",
            "--n",
            "2..4",
            "--trials",
            "20",
            "--format",
            "json-like",
        ]);
        assert_eq!(range.code, EXIT_OK);
        assert_eq!(
            range,
            out(&[
                "selftest",
                "--n",
                "2..4",
                "--trials",
                "20",
                "--format",
                "json-like"
            ])
        );
        assert_eq!(out(&["selftest", "--n", "5..2"]).code, EXIT_USAGE);
    }

    #[test]
    fn shrink_keeps_failure() {
        let small = shrink((0..20).collect::<Vec<i32>>(), |x| {
            x.contains(&7) && x.contains(&13)
        });
        assert_eq!(small, vec![7, 13]);
    }
}
