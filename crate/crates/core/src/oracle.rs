//! Independent checks for the rewriting engine.
//!
//! Equality is decided through the Artin action of `B_n` on the free group
//! `F_n = ⟨x_1, …, x_n⟩`, which is faithful. The permutation image is a cheap
//! necessary condition, and [`minimal_positive_oracle`] enumerates the class of
//! a positive word under the defining relations to find its deg-lex minimum.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::braid::{
    band_to_artin, delta_word, ArtinLetter, BandLetter, BraidContext, Letter, MixedLetter, Sign,
    Word,
};
use crate::error::{Error, Result};

/// A freely reduced word in `x_1^{±1} … x_n^{±1}`; `k` is `x_k`, `-k` its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<i16>);

impl FreeWord {
    pub fn symbols(&self) -> &[i16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generator(k: i16) -> Self {
        Self(vec![k])
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|x| -x).collect())
    }

    fn push_reduced(buf: &mut Vec<i16>, x: i16) {
        if buf.last() == Some(&-x) {
            buf.pop();
        } else {
            buf.push(x);
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&x| {
                if x > 0 {
                    format!("x{x}")
                } else {
                    format!("x{}^-1", -x)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Cancels adjacent `x x⁻¹` pairs until none remain.
pub fn free_reduce(symbols: &[i16]) -> FreeWord {
    let mut buf = Vec::with_capacity(symbols.len());
    for &x in symbols {
        if x != 0 {
            FreeWord::push_reduced(&mut buf, x);
        }
    }
    FreeWord(buf)
}

/// An endomorphism of `F_n` given by the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(n: u8) -> Self {
        Self {
            images: (1..=n as i16).map(FreeWord::generator).collect(),
        }
    }

    /// Image of `x_j`, `1 ≤ j ≤ n`.
    pub fn image(&self, j: usize) -> &FreeWord {
        &self.images[j - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Substitutes the basis images into `w`.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut buf = Vec::new();
        for &x in &w.0 {
            let img = &self.images[x.unsigned_abs() as usize - 1];
            if x > 0 {
                for &y in &img.0 {
                    FreeWord::push_reduced(&mut buf, y);
                }
            } else {
                for &y in img.0.iter().rev() {
                    FreeWord::push_reduced(&mut buf, -y);
                }
            }
        }
        FreeWord(buf)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }
}

/// `σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`; `σ_i⁻¹: x_i ↦ x_{i+1},
/// x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`; other generators fixed.
pub fn artin_action(ctx: BraidContext, a: ArtinLetter) -> FreeAutomorphism {
    let mut out = FreeAutomorphism::identity(ctx.n());
    let i = a.i as i16;
    let (xi, xj) = match a.sign {
        Sign::Pos => (vec![i, i + 1, -i], vec![i]),
        Sign::Neg => (vec![i + 1], vec![-(i + 1), i, i + 1]),
    };
    out.images[i as usize - 1] = FreeWord(xi);
    out.images[i as usize] = FreeWord(xj);
    out
}

/// Spells a mixed word in Artin letters.
pub fn mixed_to_artin(ctx: BraidContext, w: &[MixedLetter]) -> Vec<ArtinLetter> {
    let band_seq = |g: BandLetter| band_to_artin(ctx, g);
    let inverse_seq = |seq: Vec<ArtinLetter>| -> Vec<ArtinLetter> {
        seq.into_iter().rev().map(|a| a.inverse()).collect()
    };
    let delta_seq = || -> Vec<ArtinLetter> {
        delta_word(ctx)
            .iter()
            .flat_map(|x| band_seq(x.band().expect("positive")))
            .collect()
    };
    let mut out = Vec::new();
    for x in w {
        match *x {
            MixedLetter::Letter(Letter::Band(g)) => out.extend(band_seq(g)),
            MixedLetter::BandInverse(g) => out.extend(inverse_seq(band_seq(g))),
            MixedLetter::Letter(Letter::Delta) => out.extend(delta_seq()),
            MixedLetter::Letter(Letter::DeltaInv) => out.extend(inverse_seq(delta_seq())),
        }
    }
    out
}

/// The automorphism of a word of Artin letters, `φ_{g1} ∘ … ∘ φ_{gm}`.
pub fn artin_word_action(ctx: BraidContext, w: &[ArtinLetter]) -> FreeAutomorphism {
    let mut acc = FreeAutomorphism::identity(ctx.n());
    for &a in w {
        acc = acc.compose(&artin_action(ctx, a));
    }
    acc
}

pub fn braid_action(ctx: BraidContext, w: &[MixedLetter]) -> FreeAutomorphism {
    artin_word_action(ctx, &mixed_to_artin(ctx, w))
}

/// Equality in `B_n` decided by the free-group action.
pub fn braid_eq_oracle(ctx: BraidContext, u: &[MixedLetter], v: &[MixedLetter]) -> bool {
    permutation_of(ctx, u) == permutation_of(ctx, v) && braid_action(ctx, u) == braid_action(ctx, v)
}

/// A permutation of `{1, …, n}`, acting on the right: `i·(uv) = (i·u)·v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: u8) -> Self {
        Self((1..=n).collect())
    }

    pub fn transposition(n: u8, a: u8, b: u8) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a as usize - 1, b as usize - 1);
        p
    }

    /// `i ↦ i+1 (mod n)`.
    pub fn rotation(n: u8) -> Self {
        Self((1..=n).map(|i| i % n + 1).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x as usize > n || std::mem::replace(&mut seen[x as usize - 1], true) {
                return None;
            }
        }
        Some(Self(images))
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Self(self.0.iter().map(|&i| other.apply(i)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize - 1] = i as u8 + 1;
        }
        Self(out)
    }
}

pub fn permutation_of(ctx: BraidContext, w: &[MixedLetter]) -> Permutation {
    let n = ctx.n();
    let rotation = Permutation::rotation(n);
    w.iter().fold(Permutation::identity(n), |acc, x| {
        let step = match *x {
            MixedLetter::Letter(Letter::Band(g)) | MixedLetter::BandInverse(g) => {
                Permutation::transposition(n, g.t(), g.s())
            }
            MixedLetter::Letter(Letter::Delta) => rotation.clone(),
            MixedLetter::Letter(Letter::DeltaInv) => rotation.inverse(),
        };
        acc.then(&step)
    })
}

/// True for `(t,s),(r,q)` with `(t-r)(t-q)(s-r)(s-q) > 0`: disjoint,
/// non-interlacing strand pairs.
pub fn commute(a: BandLetter, b: BandLetter) -> bool {
    let d = |x: u8, y: u8| x as i32 - y as i32;
    d(a.t(), b.t()) * d(a.t(), b.s()) * d(a.s(), b.t()) * d(a.s(), b.s()) > 0
}

/// The three spellings `(t3,t2)(t2,t1)`, `(t2,t1)(t3,t1)`, `(t3,t1)(t3,t2)`.
pub fn triangle_words(t3: u8, t2: u8, t1: u8) -> [[BandLetter; 2]; 3] {
    let g = BandLetter::new;
    [
        [g(t3, t2), g(t2, t1)],
        [g(t2, t1), g(t3, t1)],
        [g(t3, t1), g(t3, t2)],
    ]
}

/// If `a b` is one of the triangle spellings, returns `(t3, t2, t1)`.
fn triangle_of(a: BandLetter, b: BandLetter) -> Option<(u8, u8, u8)> {
    if a.s() == b.t() {
        Some((a.t(), a.s(), b.s()))
    } else if a.s() == b.s() && b.t() > a.t() {
        Some((b.t(), a.t(), a.s()))
    } else if a.t() == b.t() && a.s() < b.s() {
        Some((a.t(), b.s(), a.s()))
    } else {
        None
    }
}

/// All instances of the defining relations of `B_n` as word pairs: the
/// triangle relations `(t3,t2,t1) = (t2,t1,t3) = (t1,t3,t2)` and the
/// commutations of non-interlacing generators.
pub fn presentation_relations(ctx: BraidContext) -> Vec<(Word, Word)> {
    let n = ctx.n();
    let mut out = Vec::new();
    for t3 in 3..=n {
        for t2 in 2..t3 {
            for t1 in 1..t2 {
                let forms = triangle_words(t3, t2, t1).map(Word::from_iter);
                for (x, y) in [(0, 1), (1, 2), (0, 2)] {
                    out.push((forms[x].clone(), forms[y].clone()));
                }
            }
        }
    }
    let letters: Vec<_> = ctx.band_letters().collect();
    for &a in &letters {
        for &b in &letters {
            if a.t() > b.t() && commute(a, b) {
                out.push((Word::from_iter([a, b]), Word::from_iter([b, a])));
            }
        }
    }
    out
}

/// Every positive word reachable from `w` by one application of a defining
/// relation at some position.
fn positive_neighbours(w: &[BandLetter]) -> Vec<Vec<BandLetter>> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[p], w[p + 1]);
        if commute(a, b) {
            let mut x = w.to_vec();
            x.swap(p, p + 1);
            out.push(x);
        } else if let Some((t3, t2, t1)) = triangle_of(a, b) {
            for form in triangle_words(t3, t2, t1) {
                if form != [a, b] {
                    let mut x = w.to_vec();
                    x[p] = form[0];
                    x[p + 1] = form[1];
                    out.push(x);
                }
            }
        }
    }
    out
}

/// The class of a positive word under the defining relations, which all
/// preserve length. Fails once more than `budget` words have been seen.
pub fn positive_class(ctx: BraidContext, w: &Word, budget: usize) -> Result<Vec<Word>> {
    let start = w
        .bands()
        .filter(|b| b.iter().all(|&g| ctx.contains(g)))
        .ok_or_else(|| Error::ConstraintViolation {
            letter: w.to_string(),
            hi: ctx.n(),
            lo: 1,
        })?;
    let mut seen: HashSet<Vec<BandLetter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for next in positive_neighbours(&cur) {
            if !seen.contains(&next) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().map(Word::from_iter).collect())
}

/// The deg-lex minimum of the class of a positive word.
pub fn minimal_positive_oracle(ctx: BraidContext, w: &Word, budget: usize) -> Result<Word> {
    Ok(positive_class(ctx, w, budget)?
        .into_iter()
        .min()
        .unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::tests::{b, ctx, w};
    use crate::braid::{mixed_from_word, MixedLetter as M};

    fn s(i: u8, sign: Sign) -> ArtinLetter {
        ArtinLetter { i, sign }
    }

    #[test]
    fn free_reduction() {
        assert_eq!(free_reduce(&[1, 2, -2]).symbols(), &[1]);
        assert!(free_reduce(&[1, -1]).is_empty());
        assert_eq!(free_reduce(&[1, 2, 1]).symbols(), &[1, 2, 1]);
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]).symbols(), &[3]);
    }

    #[test]
    fn artin_action_examples() {
        let c = ctx(2);
        let f = artin_action(c, s(1, Sign::Pos));
        assert_eq!(f.image(1).symbols(), &[1, 2, -1]);
        assert_eq!(f.image(2).symbols(), &[1]);
        let g = artin_action(c, s(1, Sign::Neg));
        assert_eq!(f.compose(&g), FreeAutomorphism::identity(2));
        assert_eq!(g.compose(&f), FreeAutomorphism::identity(2));
        assert_eq!(artin_word_action(c, &[]), FreeAutomorphism::identity(2));
    }

    #[test]
    fn oracle_examples() {
        let c = ctx(3);
        let a = |i| s(i, Sign::Pos);
        assert_eq!(
            artin_word_action(c, &[a(1), a(2), a(1)]),
            artin_word_action(c, &[a(2), a(1), a(2)])
        );
        assert_ne!(artin_word_action(c, &[a(1)]), artin_word_action(c, &[a(2)]));
        assert!(braid_eq_oracle(
            c,
            &mixed_from_word(&w(&[(3, 2), (2, 1)])),
            &[M::Letter(Letter::Delta)]
        ));
        assert!(!braid_eq_oracle(
            c,
            &[M::from(b(2, 1))],
            &[M::from(b(3, 2))]
        ));
        // same permutation, different braid
        assert!(!braid_eq_oracle(
            c,
            &[M::from(b(2, 1))],
            &[M::BandInverse(b(2, 1))]
        ));
    }

    #[test]
    fn permutation_examples() {
        let c = ctx(3);
        assert_eq!(
            permutation_of(c, &[M::from(b(3, 1))]),
            Permutation::transposition(3, 1, 3)
        );
        assert_eq!(
            permutation_of(c, &[M::Letter(Letter::Delta)]).images(),
            &[2, 3, 1]
        );
        // δ equals its band spelling
        assert_eq!(
            permutation_of(c, &mixed_from_word(&delta_word(c))),
            permutation_of(c, &[M::Letter(Letter::Delta)])
        );
        assert_eq!(permutation_of(c, &[]), Permutation::identity(3));
        assert!(Permutation::from_images(vec![1, 1, 2]).is_none());
    }

    #[test]
    fn delta_and_band_inverse_expansions_are_consistent() {
        for n in 2..=6 {
            let c = ctx(n);
            let delta = [M::Letter(Letter::Delta)];
            assert!(braid_eq_oracle(c, &delta, &mixed_from_word(&delta_word(c))));
            for g in c.band_letters() {
                let word = [M::from(g), M::BandInverse(g)];
                assert_eq!(braid_action(c, &word), FreeAutomorphism::identity(n as u8));
            }
        }
    }

    #[test]
    fn presentation_holds_in_the_action() {
        for n in 2..=5 {
            let c = ctx(n);
            for (l, r) in presentation_relations(c) {
                assert!(
                    braid_eq_oracle(c, &mixed_from_word(&l), &mixed_from_word(&r)),
                    "{l} = {r}"
                );
            }
        }
        // n = 4: 4 triangles × 3 pairs + commuting pairs {(4,3),(2,1)}, {(4,1),(3,2)}
        assert_eq!(presentation_relations(ctx(4)).len(), 12 + 2);
    }

    #[test]
    fn minimal_positive_examples() {
        let c = ctx(3);
        let class = positive_class(c, &w(&[(3, 2), (2, 1)]), 100).unwrap();
        let mut class: Vec<_> = class.into_iter().collect();
        class.sort();
        assert_eq!(
            class,
            vec![
                w(&[(2, 1), (3, 1)]),
                w(&[(3, 1), (3, 2)]),
                w(&[(3, 2), (2, 1)])
            ]
        );
        assert_eq!(
            minimal_positive_oracle(c, &w(&[(3, 2), (2, 1)]), 100).unwrap(),
            w(&[(2, 1), (3, 1)])
        );
        assert_eq!(
            minimal_positive_oracle(c, &w(&[(3, 1)]), 100).unwrap(),
            w(&[(3, 1)])
        );
        assert_eq!(
            minimal_positive_oracle(c, &Word::new(), 100).unwrap(),
            Word::new()
        );
        assert_eq!(
            minimal_positive_oracle(ctx(4), &w(&[(4, 3), (3, 2), (2, 1), (4, 3)]), 2),
            Err(Error::BudgetExceeded { budget: 2 })
        );
        assert!(minimal_positive_oracle(c, &Word::from(vec![Letter::Delta]), 10).is_err());
    }

    #[test]
    fn commute_matches_relation_two() {
        assert!(commute(b(4, 3), b(2, 1)));
        assert!(commute(b(4, 1), b(3, 2)));
        assert!(!commute(b(4, 2), b(3, 1)));
        assert!(!commute(b(3, 2), b(2, 1)));
    }
}
