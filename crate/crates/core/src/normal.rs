//! Reduction to the S-irreducible normal form `δ^k·A`.

use std::fmt;

use crate::braid::{eliminate_inverses, BraidContext, Letter, MixedLetter, Word};
use crate::rules::{build_match, candidates, rhs_of, RuleId, RuleMatch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionPolicy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RulePolicy {
    Lowest,
    Highest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WildcardPolicy {
    Shortest,
    Longest,
}

/// How [`rewrite_step_with`] picks one redex when several exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strategy {
    pub position: PositionPolicy,
    pub rule: RulePolicy,
    pub wildcard: WildcardPolicy,
}

impl Strategy {
    /// Leftmost position, lowest rule, shortest wildcards.
    pub const DEFAULT: Strategy = Strategy {
        position: PositionPolicy::Leftmost,
        rule: RulePolicy::Lowest,
        wildcard: WildcardPolicy::Shortest,
    };

    /// All eight combinations of the three policy axes.
    pub fn all() -> Vec<Strategy> {
        let mut out = Vec::with_capacity(8);
        for position in [PositionPolicy::Leftmost, PositionPolicy::Rightmost] {
            for rule in [RulePolicy::Lowest, RulePolicy::Highest] {
                for wildcard in [WildcardPolicy::Shortest, WildcardPolicy::Longest] {
                    out.push(Strategy {
                        position,
                        rule,
                        wildcard,
                    });
                }
            }
        }
        out
    }
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::DEFAULT
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.position {
            PositionPolicy::Leftmost => "leftmost",
            PositionPolicy::Rightmost => "rightmost",
        };
        let r = match self.rule {
            RulePolicy::Lowest => "lowest",
            RulePolicy::Highest => "highest",
        };
        let w = match self.wildcard {
            WildcardPolicy::Shortest => "shortest",
            WildcardPolicy::Longest => "longest",
        };
        write!(f, "{p}/{r}/{w}")
    }
}

/// `δ^delta_exp · tail` with a positive, irreducible tail.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub delta_exp: i64,
    pub tail: Word,
}

impl NormalForm {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.tail.is_empty()
    }

    /// The irreducible word `δ^k A` spelled out letter by letter.
    pub fn to_word(&self) -> Word {
        let d = if self.delta_exp >= 0 {
            Letter::Delta
        } else {
            Letter::DeltaInv
        };
        let mut out: Word =
            std::iter::repeat_n(d, self.delta_exp.unsigned_abs() as usize).collect();
        out.extend_from(&self.tail);
        out
    }
}

/// Renders as `D^k a(t,s) …`, omitting `D^0` and writing an empty tail as `e`.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.delta_exp != 0 {
            write!(f, "D^{} ", self.delta_exp)?;
        }
        self.tail.fmt(f)
    }
}

fn select_at(ctx: BraidContext, w: &[Letter], pos: usize, strategy: Strategy) -> Option<RuleMatch> {
    let pick = |rule: RuleId| {
        let cands = candidates(ctx, w, pos, rule);
        let c = match strategy.wildcard {
            WildcardPolicy::Shortest => cands.first(),
            WildcardPolicy::Longest => cands.last(),
        }?;
        Some(build_match(w, pos, rule, c))
    };
    match strategy.rule {
        RulePolicy::Lowest => RuleId::ALL.iter().find_map(|&r| pick(r)),
        RulePolicy::Highest => RuleId::ALL.iter().rev().find_map(|&r| pick(r)),
    }
}

/// The redex chosen by `strategy`, if the word is reducible.
pub fn select_match(ctx: BraidContext, w: &[Letter], strategy: Strategy) -> Option<RuleMatch> {
    match strategy.position {
        PositionPolicy::Leftmost => (0..w.len()).find_map(|p| select_at(ctx, w, p, strategy)),
        PositionPolicy::Rightmost => (0..w.len())
            .rev()
            .find_map(|p| select_at(ctx, w, p, strategy)),
    }
}

/// Replaces the span of `m` by its right-hand side.
///
/// Panics if the result is not strictly deg-lex smaller than `w`.
pub fn apply_match(ctx: BraidContext, w: &[Letter], m: &RuleMatch) -> Word {
    let rhs = rhs_of(ctx, m);
    let mut out = Vec::with_capacity(w.len() - m.len + rhs.len());
    out.extend_from_slice(&w[..m.start]);
    out.extend_from_slice(&rhs);
    out.extend_from_slice(&w[m.end()..]);
    let out = Word::from(out);
    assert!(
        crate::braid::deglex_compare(&out, w).is_lt(),
        "rewrite by {} did not decrease {} -> {}",
        m.rule,
        Word::from(w),
        out
    );
    out
}

pub fn rewrite_step(ctx: BraidContext, w: &[Letter]) -> Option<Word> {
    rewrite_step_with(ctx, w, Strategy::DEFAULT)
}

pub fn rewrite_step_with(ctx: BraidContext, w: &[Letter], strategy: Strategy) -> Option<Word> {
    select_match(ctx, w, strategy).map(|m| apply_match(ctx, w, &m))
}

/// Rewrites to an irreducible word, calling `observe(before, redex, after)`
/// on every step.
pub fn reduce_observed(
    ctx: BraidContext,
    w: &[Letter],
    strategy: Strategy,
    mut observe: impl FnMut(&Word, &RuleMatch, &Word),
) -> Word {
    let mut cur = Word::from(w);
    while let Some(m) = select_match(ctx, &cur, strategy) {
        let next = apply_match(ctx, &cur, &m);
        observe(&cur, &m, &next);
        cur = next;
    }
    cur
}

pub fn reduce(ctx: BraidContext, w: &[Letter], strategy: Strategy) -> Word {
    reduce_observed(ctx, w, strategy, |_, _, _| {})
}

/// Splits an irreducible word into its leading δ-run and positive tail.
pub fn split_irreducible(w: &[Letter]) -> NormalForm {
    let run = w.iter().take_while(|x| x.is_delta()).count();
    let delta_exp = w[..run]
        .iter()
        .map(|x| if *x == Letter::Delta { 1i64 } else { -1 })
        .sum();
    let tail = Word::from(&w[run..]);
    assert!(tail.is_positive(), "δ-letter left inside tail {tail}");
    NormalForm { delta_exp, tail }
}

pub fn normalize(ctx: BraidContext, w: &[Letter]) -> NormalForm {
    normalize_with(ctx, w, Strategy::DEFAULT)
}

pub fn normalize_with(ctx: BraidContext, w: &[Letter], strategy: Strategy) -> NormalForm {
    split_irreducible(&reduce(ctx, w, strategy))
}

/// Normalizes a word that may contain inverse band letters.
pub fn normalize_mixed(ctx: BraidContext, w: &[MixedLetter]) -> NormalForm {
    normalize(ctx, &eliminate_inverses(ctx, w))
}

pub fn normalize_mixed_with(
    ctx: BraidContext,
    w: &[MixedLetter],
    strategy: Strategy,
) -> NormalForm {
    normalize_with(ctx, &eliminate_inverses(ctx, w), strategy)
}

pub fn is_irreducible(ctx: BraidContext, w: &[Letter]) -> bool {
    (0..w.len()).all(|p| {
        RuleId::ALL
            .iter()
            .all(|&r| candidates(ctx, w, p, r).is_empty())
    })
}

/// Decides equality in `B_n` by comparing normal forms.
pub fn equal(ctx: BraidContext, u: &[MixedLetter], v: &[MixedLetter]) -> bool {
    normalize_mixed(ctx, u) == normalize_mixed(ctx, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::mixed_from_word;
    use crate::braid::tests::{b, ctx, w};

    fn with_prefix(prefix: &[Letter], tail: &Word) -> Word {
        let mut x = Word::from(prefix);
        x.extend_from(tail);
        x
    }

    #[test]
    fn rewrite_step_examples() {
        let c = ctx(3);
        assert_eq!(
            rewrite_step(c, &w(&[(3, 2), (2, 1)])),
            Some(w(&[(2, 1), (3, 1)]))
        );
        assert_eq!(
            rewrite_step(c, &w(&[(2, 1), (3, 1)])),
            Some(Word::from(vec![Letter::Delta]))
        );
        assert_eq!(rewrite_step(c, &Word::new()), None);
    }

    #[test]
    fn normalize_examples() {
        let c = ctx(3);
        assert_eq!(
            normalize(c, &w(&[(3, 2), (2, 1)])),
            NormalForm {
                delta_exp: 1,
                tail: Word::new()
            }
        );
        assert_eq!(normalize(c, &Word::new()), NormalForm::identity());
        assert_eq!(
            normalize(c, &w(&[(2, 1), (2, 1), (3, 1)])),
            NormalForm {
                delta_exp: 1,
                tail: w(&[(3, 2)])
            }
        );
    }

    #[test]
    fn normalize_mixed_examples() {
        let c = ctx(3);
        let inv = MixedLetter::BandInverse(b(2, 1));
        let pos = MixedLetter::from(b(2, 1));
        assert_eq!(
            normalize_mixed(c, &[inv]),
            NormalForm {
                delta_exp: -1,
                tail: w(&[(3, 2)])
            }
        );
        assert_eq!(normalize_mixed(c, &[pos, inv]), NormalForm::identity());
        assert_eq!(
            normalize_mixed(c, &[MixedLetter::Letter(Letter::Delta), inv]),
            NormalForm {
                delta_exp: 0,
                tail: w(&[(3, 2)])
            }
        );
    }

    #[test]
    fn irreducibility_examples() {
        let c = ctx(3);
        assert!(!is_irreducible(c, &w(&[(2, 1), (3, 1)])));
        assert!(is_irreducible(
            c,
            &with_prefix(&[Letter::Delta], &w(&[(3, 2)]))
        ));
        assert!(is_irreducible(c, &Word::new()));
    }

    #[test]
    fn equality_examples() {
        let c = ctx(3);
        let m = |x: &Word| mixed_from_word(x);
        assert!(equal(
            c,
            &m(&w(&[(3, 2), (2, 1)])),
            &m(&w(&[(2, 1), (3, 1)]))
        ));
        assert!(!equal(c, &m(&w(&[(2, 1)])), &m(&w(&[(3, 1)]))));
        let x = m(&w(&[(3, 1), (2, 1), (3, 2)]));
        assert!(equal(c, &x, &x));
    }

    #[test]
    fn n2_collapses_to_delta_powers() {
        let c = ctx(2);
        for len in 0..6 {
            let word: Word = std::iter::repeat_n(b(2, 1), len).collect();
            assert_eq!(
                normalize(c, &word),
                NormalForm {
                    delta_exp: len as i64,
                    tail: Word::new()
                }
            );
        }
        let mixed = [MixedLetter::BandInverse(b(2, 1)); 3];
        assert_eq!(normalize_mixed(c, &mixed).delta_exp, -3);
    }

    #[test]
    fn display_normal_forms() {
        assert_eq!(NormalForm::identity().to_string(), "e");
        assert_eq!(
            NormalForm {
                delta_exp: 1,
                tail: Word::new()
            }
            .to_string(),
            "D^1 e"
        );
        assert_eq!(
            NormalForm {
                delta_exp: -2,
                tail: w(&[(3, 2)])
            }
            .to_string(),
            "D^-2 a(3,2)"
        );
        assert_eq!(
            NormalForm {
                delta_exp: 0,
                tail: w(&[(3, 2), (2, 1)])
            }
            .to_string(),
            "a(3,2) a(2,1)"
        );
    }

    #[test]
    fn strategies_are_distinct() {
        let all = Strategy::all();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], Strategy::DEFAULT);
        let names: std::collections::HashSet<_> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(names.len(), 8);
    }
}
