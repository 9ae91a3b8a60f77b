//! Bounded certification of the rewriting system: concrete rule instances,
//! their overlaps (critical pairs), joinability, identity fixtures and a
//! strategy sweep.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::braid::{
    chain_product, descending_product, prime_transform, star_transform, BandLetter, BraidContext,
    Letter, MixedLetter, RangeConstraint, Word,
};
use crate::normal::{normalize, normalize_mixed_with, reduce_observed, NormalForm, Strategy};
use crate::random::{mixed_word, seeded};
use crate::rules::{matches_at, rhs_of, RuleId};

/// One concrete instance `lhs → rhs` of a rule schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleInstance {
    pub rule: RuleId,
    pub lhs: Word,
    pub rhs: Word,
    pub params: Vec<(&'static str, u8)>,
}

impl fmt::Display for RuleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.rule, self.lhs, self.rhs)
    }
}

fn bands(ctx: BraidContext) -> Vec<BandLetter> {
    ctx.band_letters().collect()
}

fn word_of(parts: &[&[Letter]]) -> Word {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn schema_lhs(ctx: BraidContext, rule: RuleId, max_wildcard: usize) -> Vec<Word> {
    let n = ctx.n();
    let mut out = Vec::new();
    let one = |g: BandLetter| [Letter::Band(g)];
    match rule {
        RuleId::E1 => {
            for a in bands(ctx) {
                for b in bands(ctx).into_iter().filter(|b| a.s() > b.t()) {
                    out.push(Word::from_iter([a, b]));
                }
            }
        }
        RuleId::E2 => {
            for a in bands(ctx) {
                for b in bands(ctx) {
                    let (k, l, i, j) = (a.t(), a.s(), b.t(), b.s());
                    if k > i && j > l {
                        for v in RangeConstraint::new(j - 1, 1).words(max_wildcard) {
                            out.push(word_of(&[&one(a), &v, &one(b)]));
                        }
                    }
                }
            }
        }
        RuleId::E3 => {
            for a in bands(ctx) {
                for b in bands(ctx).into_iter().filter(|b| b.t() == a.s()) {
                    out.push(Word::from_iter([a, b]));
                }
            }
        }
        RuleId::E4 => {
            for (t3, t2, t1) in triples(n) {
                for v in RangeConstraint::new(t2 - 1, 1).words(max_wildcard) {
                    out.push(word_of(&[
                        &one(BandLetter::new(t3, t1)),
                        &v,
                        &one(BandLetter::new(t3, t2)),
                    ]));
                }
            }
        }
        RuleId::E5 | RuleId::E6 => {
            for (t3, t2, t1) in triples(n) {
                let tops: Vec<u8> = if rule == RuleId::E5 {
                    (t3 + 1..=n).collect()
                } else {
                    vec![t3]
                };
                let vs = RangeConstraint::new(t2 - 1, 1).words(max_wildcard);
                let ws = RangeConstraint::new(t3 - 1, t1).words(max_wildcard);
                for &t in &tops {
                    for s in 1..t2 {
                        for v in &vs {
                            for w in &ws {
                                out.push(word_of(&[
                                    &one(BandLetter::new(t, s)),
                                    v,
                                    &one(BandLetter::new(t2, t1)),
                                    w,
                                    &one(BandLetter::new(t3, t1)),
                                ]));
                            }
                        }
                    }
                }
            }
        }
        RuleId::E7 => {
            let mut partial = vec![Word::from_iter([BandLetter::new(2, 1)])];
            for i in 2..n {
                let vs = RangeConstraint::new(i, 1).words(max_wildcard);
                let anchor = one(BandLetter::new(i + 1, 1));
                partial = partial
                    .iter()
                    .flat_map(|p| vs.iter().map(move |v| word_of(&[p, v, &anchor])))
                    .collect();
            }
            out = partial;
        }
        RuleId::E8Pos | RuleId::E8Neg => {
            let d = if rule == RuleId::E8Pos {
                Letter::Delta
            } else {
                Letter::DeltaInv
            };
            for g in bands(ctx) {
                out.push(Word::from(vec![Letter::Band(g), d]));
            }
        }
        RuleId::E9Pos => out.push(Word::from(vec![Letter::Delta, Letter::DeltaInv])),
        RuleId::E9Neg => out.push(Word::from(vec![Letter::DeltaInv, Letter::Delta])),
    }
    out
}

fn triples(n: u8) -> impl Iterator<Item = (u8, u8, u8)> {
    (3..=n).flat_map(|t3| (2..t3).flat_map(move |t2| (1..t2).map(move |t1| (t3, t2, t1))))
}

/// Every instance of every schema with wildcards of length at most
/// `max_wildcard`, sorted by left-hand side and deduplicated by
/// `(lhs, rhs)`.
pub fn enumerate_instances(ctx: BraidContext, max_wildcard: usize) -> Vec<RuleInstance> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for rule in RuleId::ALL {
        for lhs in schema_lhs(ctx, rule, max_wildcard) {
            let full: Vec<_> = matches_at(ctx, &lhs, 0, rule)
                .into_iter()
                .filter(|m| m.len == lhs.len())
                .collect();
            assert!(
                !full.is_empty(),
                "{rule} does not match its own instance {lhs}"
            );
            for m in full {
                let rhs = rhs_of(ctx, &m);
                if seen.insert((lhs.clone(), rhs.clone())) {
                    out.push(RuleInstance {
                        rule,
                        lhs: lhs.clone(),
                        rhs,
                        params: m.params(),
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.lhs, a.rule, &a.rhs).cmp(&(&b.lhs, b.rule, &b.rhs)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AmbiguityKind {
    /// A proper suffix of `f.lhs` is a proper prefix of `g.lhs`.
    Intersection,
    /// `g.lhs` occurs inside `f.lhs`.
    Inclusion,
}

impl fmt::Display for AmbiguityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmbiguityKind::Intersection => "intersection",
            AmbiguityKind::Inclusion => "inclusion",
        })
    }
}

/// An overlap of two instances: `w` with its two one-step reducts.
/// `offset` is where `g.lhs` starts inside `w`.
#[derive(Clone, Debug)]
pub struct Ambiguity<'a> {
    pub kind: AmbiguityKind,
    pub f: &'a RuleInstance,
    pub g: &'a RuleInstance,
    pub offset: usize,
    pub w: Word,
    pub u: Word,
    pub v: Word,
}

impl Ambiguity<'_> {
    pub fn family(&self) -> FamilyKey {
        FamilyKey {
            f: self.f.rule,
            g: self.g.rule,
            kind: self.kind,
        }
    }
}

struct OverlapIndex<'a> {
    instances: &'a [RuleInstance],
    by_prefix: HashMap<&'a [Letter], Vec<usize>>,
    by_lhs: HashMap<&'a [Letter], Vec<usize>>,
}

impl<'a> OverlapIndex<'a> {
    fn new(instances: &'a [RuleInstance]) -> Self {
        let mut by_prefix: HashMap<&[Letter], Vec<usize>> = HashMap::new();
        let mut by_lhs: HashMap<&[Letter], Vec<usize>> = HashMap::new();
        for (idx, r) in instances.iter().enumerate() {
            for l in 1..r.lhs.len() {
                by_prefix.entry(&r.lhs[..l]).or_default().push(idx);
            }
            by_lhs.entry(&r.lhs[..]).or_default().push(idx);
        }
        Self {
            instances,
            by_prefix,
            by_lhs,
        }
    }

    fn for_each_with(&self, fi: usize, mut visit: impl FnMut(Ambiguity<'a>)) {
        let f = &self.instances[fi];
        let fl = &f.lhs[..];
        for l in 1..fl.len() {
            let start = fl.len() - l;
            for &gi in self.by_prefix.get(&fl[start..]).into_iter().flatten() {
                let g = &self.instances[gi];
                let b = &g.lhs[l..];
                visit(Ambiguity {
                    kind: AmbiguityKind::Intersection,
                    f,
                    g,
                    offset: start,
                    w: word_of(&[fl, b]),
                    u: word_of(&[&f.rhs, b]),
                    v: word_of(&[&fl[..start], &g.rhs]),
                });
            }
        }
        for start in 0..fl.len() {
            for end in start + 1..=fl.len() {
                let whole = start == 0 && end == fl.len();
                for &gi in self.by_lhs.get(&fl[start..end]).into_iter().flatten() {
                    if whole && gi <= fi {
                        continue;
                    }
                    let g = &self.instances[gi];
                    visit(Ambiguity {
                        kind: AmbiguityKind::Inclusion,
                        f,
                        g,
                        offset: start,
                        w: f.lhs.clone(),
                        u: f.rhs.clone(),
                        v: word_of(&[&fl[..start], &g.rhs, &fl[end..]]),
                    });
                }
            }
        }
    }
}

/// Every intersection and inclusion ambiguity between ordered pairs of
/// instances, self-pairs included. Two distinct instances with the same
/// left-hand side count once, as an inclusion.
pub fn find_ambiguities(instances: &[RuleInstance]) -> Vec<Ambiguity<'_>> {
    let index = OverlapIndex::new(instances);
    let mut out = Vec::new();
    for fi in 0..instances.len() {
        index.for_each_with(fi, |a| out.push(a));
    }
    out
}

/// Both reducts lie below `w` and share a normal form. Panics if a reduct
/// or any later rewrite is not below `w`.
pub fn check_joinable(ctx: BraidContext, amb: &Ambiguity<'_>) -> bool {
    joint_forms(ctx, amb).is_none_or(|(a, b)| a == b)
}

fn joint_forms(ctx: BraidContext, amb: &Ambiguity<'_>) -> Option<(NormalForm, NormalForm)> {
    if amb.u == amb.v {
        return None;
    }
    let reach = |x: &Word| {
        assert!(*x < amb.w, "reduct {x} not below {}", amb.w);
        let last = reduce_observed(ctx, x, Strategy::DEFAULT, |_, _, after| {
            assert!(*after < amb.w, "{after} not below {}", amb.w);
        });
        crate::normal::split_irreducible(&last)
    };
    Some((reach(&amb.u), reach(&amb.v)))
}

/// A concrete ambiguity family: the ordered rule pair and the overlap kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyKey {
    pub f: RuleId,
    pub g: RuleId,
    pub kind: AmbiguityKind,
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            AmbiguityKind::Intersection => "∧",
            AmbiguityKind::Inclusion => "∨",
        };
        write!(fm, "{}{op}{}", self.f, self.g)
    }
}

/// A family at the granularity of relation numbers (δ-variants merged).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationPair {
    pub f: u8,
    pub g: u8,
    pub kind: AmbiguityKind,
}

impl fmt::Display for RelationPair {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            AmbiguityKind::Intersection => "∧",
            AmbiguityKind::Inclusion => "∨",
        };
        write!(fm, "E{}{op}E{}", self.f, self.g)
    }
}

impl From<FamilyKey> for RelationPair {
    fn from(k: FamilyKey) -> Self {
        RelationPair {
            f: k.f.family(),
            g: k.g.family(),
            kind: k.kind,
        }
    }
}

const INTERSECTIONS: &[(u8, &[u8])] = &[
    (1, &[1, 2, 3, 4, 5, 6, 7, 8]),
    (2, &[1, 2, 3, 4, 5, 6, 8]),
    (3, &[1, 2, 3, 4, 5, 6, 7, 8]),
    (4, &[1, 2, 3, 4, 5, 6, 8]),
    (5, &[1, 2, 3, 4, 5, 6, 8]),
    (6, &[1, 2, 3, 4, 5, 6, 8]),
    (7, &[2, 4, 5, 6, 8]),
];

const INCLUSIONS: &[(u8, &[u8])] = &[
    (2, &[1, 2]),
    (4, &[1, 2, 3]),
    (5, &[1, 2, 3, 4]),
    (6, &[1, 2, 3, 4]),
    (7, &[2]),
];

/// The ambiguity families the correctness argument works through; each one
/// should be hit by some concrete overlap.
pub fn expected_families() -> Vec<RelationPair> {
    let expand = |table: &[(u8, &[u8])], kind| {
        table
            .iter()
            .flat_map(move |&(f, gs)| gs.iter().map(move |&g| RelationPair { f, g, kind }))
            .collect::<Vec<_>>()
    };
    let mut out = expand(INTERSECTIONS, AmbiguityKind::Intersection);
    out.extend(expand(INCLUSIONS, AmbiguityKind::Inclusion));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    pub family: RelationPair,
    /// Concrete ambiguities found; zero means unreachable at these bounds.
    pub hits: usize,
}

impl FamilyCheck {
    pub fn reachable(&self) -> bool {
        self.hits > 0
    }
}

/// A non-joinable ambiguity, detached from the instance list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub family: FamilyKey,
    pub w: Word,
    pub u: Word,
    pub v: Word,
    pub u_form: NormalForm,
    pub v_form: NormalForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_wildcard: usize,
    /// Cap on enumerated instances; above it only the smallest are checked.
    pub max_instances: usize,
}

impl VerifyConfig {
    pub fn new(max_wildcard: usize) -> Self {
        Self {
            max_wildcard,
            max_instances: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub n: u8,
    pub max_wildcard: usize,
    /// Longest left-hand side among the checked instances.
    pub max_degree: usize,
    pub instances: usize,
    pub instances_enumerated: usize,
    pub ambiguities: usize,
    pub counts: BTreeMap<FamilyKey, usize>,
    pub checklist: Vec<FamilyCheck>,
    /// Families found that the checklist does not name.
    pub extra_families: Vec<(RelationPair, usize)>,
    pub failures: Vec<Failure>,
}

impl ConfluenceReport {
    pub fn complete(&self) -> bool {
        self.instances == self.instances_enumerated
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn relation_counts(&self) -> BTreeMap<RelationPair, usize> {
        let mut out = BTreeMap::new();
        for (&k, &c) in &self.counts {
            *out.entry(RelationPair::from(k)).or_default() += c;
        }
        out
    }
}

#[derive(Debug, Error)]
#[error("instance cap {cap} exceeded: checked {cap} of {total} instances")]
pub struct PartialCoverage {
    pub cap: usize,
    pub total: usize,
    pub report: Box<ConfluenceReport>,
}

#[derive(Default)]
struct Tally {
    ambiguities: usize,
    counts: BTreeMap<FamilyKey, usize>,
    failures: Vec<Failure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.ambiguities += other.ambiguities;
        for (k, c) in other.counts {
            *self.counts.entry(k).or_default() += c;
        }
        self.failures.extend(other.failures);
        self
    }
}

/// Checks every ambiguity among the bounded instances. If the instance cap
/// is exceeded, the smallest `max_instances` instances are still checked and
/// the partial report travels inside the error.
pub fn verify_confluence(
    ctx: BraidContext,
    config: VerifyConfig,
) -> Result<ConfluenceReport, PartialCoverage> {
    let mut instances = enumerate_instances(ctx, config.max_wildcard);
    let total = instances.len();
    instances.truncate(config.max_instances);
    let index = OverlapIndex::new(&instances);
    let tally = (0..instances.len())
        .into_par_iter()
        .map(|fi| {
            let mut t = Tally::default();
            index.for_each_with(fi, |amb| {
                t.ambiguities += 1;
                *t.counts.entry(amb.family()).or_default() += 1;
                if let Some((a, b)) = joint_forms(ctx, &amb) {
                    if a != b {
                        t.failures.push(Failure {
                            family: amb.family(),
                            w: amb.w,
                            u: amb.u,
                            v: amb.v,
                            u_form: a,
                            v_form: b,
                        });
                    }
                }
            });
            t
        })
        .reduce(Tally::default, Tally::merge);

    let mut failures = tally.failures;
    failures.sort_by(|a, b| (&a.w, a.family, &a.u, &a.v).cmp(&(&b.w, b.family, &b.u, &b.v)));
    let mut report = ConfluenceReport {
        n: ctx.n(),
        max_wildcard: config.max_wildcard,
        max_degree: instances.iter().map(|r| r.lhs.len()).max().unwrap_or(0),
        instances: instances.len(),
        instances_enumerated: total,
        ambiguities: tally.ambiguities,
        counts: tally.counts,
        checklist: Vec::new(),
        extra_families: Vec::new(),
        failures,
    };
    let by_relation = report.relation_counts();
    let expected = expected_families();
    report.checklist = expected
        .iter()
        .map(|&family| FamilyCheck {
            family,
            hits: by_relation.get(&family).copied().unwrap_or(0),
        })
        .collect();
    report.extra_families = by_relation
        .into_iter()
        .filter(|(k, _)| !expected.contains(k))
        .collect();

    if report.complete() {
        Ok(report)
    } else {
        Err(PartialCoverage {
            cap: config.max_instances,
            total,
            report: Box::new(report),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixtureKind {
    /// `(t_m,…,t_1) = (t_k,…,t_1,t_m,…,t_{k+1})`
    Rotation,
    /// `(t3,t2)(t2,t1) = (t2,t1)(t3,t1)`
    Triangle,
    /// `(t,s)(t2,t1)(t3,t1) = (t3,t2)(t,s)(t2,t1)`
    SlideOuter,
    /// `(t3,s)(t2,t1)(t3,t1) = (t2,s)(t3,s)(t2,t1)`
    SlideInner,
    /// `(t,s)δ^{±1} = δ^{±1}(t±1,s±1)`
    DeltaShift,
    /// `(2,1)V_2(3,1)…V_{n-1}(n,1) = δV_2'…V_{n-1}'`
    DeltaPrefix,
    /// `(n,…,t,s-1,…,1)(t-1,…,s)(t,s) = δ`
    DeltaFactor,
    /// `δ = (n,n-1,…,1)`
    DeltaExpansion,
    /// `V(t2,t1) = (t2,t1)V'`
    Prime,
    /// `W(t1,t0) = (t1,t0)W^⋆`
    Star,
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureKind::Rotation => "rotation",
            FixtureKind::Triangle => "triangle",
            FixtureKind::SlideOuter => "slide-outer",
            FixtureKind::SlideInner => "slide-inner",
            FixtureKind::DeltaShift => "delta-shift",
            FixtureKind::DeltaPrefix => "delta-prefix",
            FixtureKind::DeltaFactor => "delta-factor",
            FixtureKind::DeltaExpansion => "delta-expansion",
            FixtureKind::Prime => "prime",
            FixtureKind::Star => "star",
        })
    }
}

/// An identity that must hold in `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub kind: FixtureKind,
    pub lhs: Word,
    pub rhs: Word,
}

fn subsets_desc(n: u8) -> Vec<Vec<u8>> {
    (1u64..1 << n)
        .map(|mask| (1..=n).rev().filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn shift(ctx: BraidContext, g: BandLetter, up: bool) -> BandLetter {
    let n = ctx.n();
    let f = |x: u8| if up { x % n + 1 } else { (x + n - 2) % n + 1 };
    BandLetter::new(f(g.t()), f(g.s()))
}

/// All identity fixtures for `ctx`: descending sequences of every length,
/// every admissible parameter tuple, and wildcards of length at most one.
pub fn lemma_fixtures(ctx: BraidContext) -> Vec<Fixture> {
    let n = ctx.n();
    let mut out = Vec::new();
    let mut add = |kind, lhs: Word, rhs: Word| out.push(Fixture { kind, lhs, rhs });
    let b = |t: u8, s: u8| Letter::Band(BandLetter::new(t, s));
    let chain = |seq: &[u8]| chain_product(ctx, seq).expect("valid chain");

    for seq in subsets_desc(n).into_iter().filter(|s| s.len() >= 2) {
        let m = seq.len();
        let lhs = descending_product(ctx, &seq).expect("decreasing");
        for k in 1..m {
            // seq is t_m … t_1; the rotation is t_k … t_1 t_m … t_{k+1}
            let rotated: Vec<u8> = seq[m - k..].iter().chain(&seq[..m - k]).copied().collect();
            add(FixtureKind::Rotation, lhs.clone(), chain(&rotated));
        }
    }
    for (t3, t2, t1) in triples(n) {
        add(
            FixtureKind::Triangle,
            Word::from(vec![b(t3, t2), b(t2, t1)]),
            Word::from(vec![b(t2, t1), b(t3, t1)]),
        );
        for s in 1..t2 {
            for t in t3 + 1..=n {
                add(
                    FixtureKind::SlideOuter,
                    Word::from(vec![b(t, s), b(t2, t1), b(t3, t1)]),
                    Word::from(vec![b(t3, t2), b(t, s), b(t2, t1)]),
                );
            }
            add(
                FixtureKind::SlideInner,
                Word::from(vec![b(t3, s), b(t2, t1), b(t3, t1)]),
                Word::from(vec![b(t2, s), b(t3, s), b(t2, t1)]),
            );
        }
    }
    for g in ctx.band_letters() {
        add(
            FixtureKind::DeltaShift,
            Word::from(vec![Letter::Band(g), Letter::Delta]),
            Word::from(vec![Letter::Delta, Letter::Band(shift(ctx, g, true))]),
        );
        add(
            FixtureKind::DeltaShift,
            Word::from(vec![Letter::Band(g), Letter::DeltaInv]),
            Word::from(vec![Letter::DeltaInv, Letter::Band(shift(ctx, g, false))]),
        );
        let (t, s) = (g.t(), g.s());
        let head: Vec<u8> = (t..=n).rev().chain((1..s).rev()).collect();
        let mid: Vec<u8> = (s..t).rev().collect();
        add(
            FixtureKind::DeltaFactor,
            word_of(&[&chain(&head), &chain(&mid), &[b(t, s)]]),
            Word::from(vec![Letter::Delta]),
        );
    }
    let full: Vec<u8> = (1..=n).rev().collect();
    add(
        FixtureKind::DeltaExpansion,
        Word::from(vec![Letter::Delta]),
        chain(&full),
    );

    let mut prefixes = vec![(Word::from(vec![b(2, 1)]), Word::from(vec![Letter::Delta]))];
    for i in 2..n {
        let vs = RangeConstraint::new(i, 1).words(1);
        prefixes = prefixes
            .iter()
            .flat_map(|(l, r)| {
                vs.iter().map(move |v| {
                    let primed = prime_transform(v, i + 1, 1).expect("in range");
                    (word_of(&[l, v, &[b(i + 1, 1)]]), word_of(&[r, &primed]))
                })
            })
            .collect();
    }
    for (l, r) in prefixes {
        add(FixtureKind::DeltaPrefix, l, r);
    }

    for (t2, t1) in (2..=n).flat_map(|t2| (1..t2).map(move |t1| (t2, t1))) {
        for v in RangeConstraint::new(t2 - 1, t1)
            .words(2)
            .into_iter()
            .skip(1)
        {
            let primed = prime_transform(&v, t2, t1).expect("in range");
            add(
                FixtureKind::Prime,
                word_of(&[&v, &[b(t2, t1)]]),
                word_of(&[&[b(t2, t1)], &primed]),
            );
        }
        let (t1, t0) = (t2, t1);
        for w in RangeConstraint::new(n, t1).words(2).into_iter().skip(1) {
            let starred = star_transform(&w, t1, t0).expect("band word");
            add(
                FixtureKind::Star,
                word_of(&[&w, &[b(t1, t0)]]),
                word_of(&[&[b(t1, t0)], &starred]),
            );
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub word: Vec<MixedLetter>,
    pub forms: Vec<(Strategy, NormalForm)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub trials: usize,
    pub strategies: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// Normalizes `trials` seeded random mixed words of length at most
/// `max_len` under every selection strategy and reports disagreements.
pub fn strategy_sweep(ctx: BraidContext, trials: usize, seed: u64, max_len: usize) -> SweepReport {
    let mut rng = seeded(seed);
    let words: Vec<_> = (0..trials)
        .map(|_| mixed_word(ctx, &mut rng, max_len))
        .collect();
    let strategies = Strategy::all();
    let discrepancies = words
        .into_par_iter()
        .filter_map(|word| {
            let forms: Vec<_> = strategies
                .iter()
                .map(|&s| (s, normalize_mixed_with(ctx, &word, s)))
                .collect();
            let split = forms.iter().any(|(_, f)| *f != forms[0].1);
            split.then_some(Discrepancy { word, forms })
        })
        .collect();
    SweepReport {
        trials,
        strategies: strategies.len(),
        discrepancies,
    }
}

/// Checks a fixture by normalizing both sides.
pub fn fixture_holds(ctx: BraidContext, fx: &Fixture) -> bool {
    normalize(ctx, &fx.lhs) == normalize(ctx, &fx.rhs)
}
