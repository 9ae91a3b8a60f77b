//! Seeded random words for sweeps and self-tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{delta_conjugate, BandLetter, BraidContext, Letter, MixedLetter, Sign, Word};
use crate::oracle::{commute, triangle_words};

pub type WordRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> WordRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn band(ctx: BraidContext, rng: &mut WordRng) -> BandLetter {
    let t = rng.gen_range(2..=ctx.n());
    let s = rng.gen_range(1..t);
    BandLetter::new(t, s)
}

/// A uniformly chosen mixed letter: either δ-letter, a band letter or an
/// inverse band letter.
pub fn mixed_letter(ctx: BraidContext, rng: &mut WordRng) -> MixedLetter {
    match rng.gen_range(0..8) {
        0 => MixedLetter::Letter(Letter::Delta),
        1 => MixedLetter::Letter(Letter::DeltaInv),
        2 | 3 => MixedLetter::BandInverse(band(ctx, rng)),
        _ => MixedLetter::from(band(ctx, rng)),
    }
}

pub fn mixed_word(ctx: BraidContext, rng: &mut WordRng, max_len: usize) -> Vec<MixedLetter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| mixed_letter(ctx, rng)).collect()
}

/// A word over `{δ, δ⁻¹} ∪ band letters`, without inverse band letters.
pub fn letter_word(ctx: BraidContext, rng: &mut WordRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| match rng.gen_range(0..6) {
            0 => Letter::Delta,
            1 => Letter::DeltaInv,
            _ => Letter::Band(band(ctx, rng)),
        })
        .collect()
}

pub fn positive_word(ctx: BraidContext, rng: &mut WordRng, len: usize) -> Word {
    (0..len).map(|_| band(ctx, rng)).collect()
}

/// Applies up to `moves` random value-preserving edits: free insertion or
/// cancellation of `x x⁻¹`, a defining relation on two adjacent positive
/// letters, or moving a band letter across a δ-letter. The result stays within
/// `max_len` letters.
pub fn equivalent_variant(
    ctx: BraidContext,
    rng: &mut WordRng,
    w: &[MixedLetter],
    max_len: usize,
    moves: usize,
) -> Vec<MixedLetter> {
    let mut cur = w.to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..4) {
            0 if cur.len() + 2 <= max_len => {
                let x = mixed_letter(ctx, rng);
                let p = rng.gen_range(0..=cur.len());
                cur.splice(p..p, [x, x.inverse()]);
            }
            1 => {
                let spots: Vec<usize> = (0..cur.len().saturating_sub(1))
                    .filter(|&p| cur[p + 1] == cur[p].inverse())
                    .collect();
                if let Some(&p) = spots.choose(rng) {
                    cur.drain(p..p + 2);
                }
            }
            2 => {
                let spots: Vec<usize> = (0..cur.len().saturating_sub(1))
                    .filter(|&p| {
                        matches!(
                            (cur[p], cur[p + 1]),
                            (
                                MixedLetter::Letter(Letter::Band(_)),
                                MixedLetter::Letter(Letter::Band(_))
                            )
                        )
                    })
                    .collect();
                if let Some(&p) = spots.choose(rng) {
                    let (
                        MixedLetter::Letter(Letter::Band(a)),
                        MixedLetter::Letter(Letter::Band(b)),
                    ) = (cur[p], cur[p + 1])
                    else {
                        unreachable!()
                    };
                    if commute(a, b) {
                        cur.swap(p, p + 1);
                    } else if let Some(form) = triangle_alternative(a, b, rng) {
                        cur[p] = form[0].into();
                        cur[p + 1] = form[1].into();
                    }
                }
            }
            _ => {
                // g δ^{±1} = δ^{±1} g' and the same for g⁻¹
                let spots: Vec<usize> = (0..cur.len().saturating_sub(1))
                    .filter(|&p| {
                        !matches!(cur[p], MixedLetter::Letter(l) if l.is_delta())
                            && matches!(cur[p + 1], MixedLetter::Letter(l) if l.is_delta())
                    })
                    .collect();
                if let Some(&p) = spots.choose(rng) {
                    let dir = if cur[p + 1] == MixedLetter::Letter(Letter::Delta) {
                        Sign::Pos
                    } else {
                        Sign::Neg
                    };
                    let moved = match cur[p] {
                        MixedLetter::Letter(Letter::Band(g)) => {
                            MixedLetter::from(delta_conjugate(ctx, g, dir))
                        }
                        MixedLetter::BandInverse(g) => {
                            MixedLetter::BandInverse(delta_conjugate(ctx, g, dir))
                        }
                        other => other,
                    };
                    cur[p] = cur[p + 1];
                    cur[p + 1] = moved;
                }
            }
        }
    }
    cur
}

fn triangle_alternative(
    a: BandLetter,
    b: BandLetter,
    rng: &mut WordRng,
) -> Option<[BandLetter; 2]> {
    let (t3, t2, t1) = if a.s() == b.t() {
        (a.t(), a.s(), b.s())
    } else if a.s() == b.s() && b.t() > a.t() {
        (b.t(), a.t(), a.s())
    } else if a.t() == b.t() && a.s() < b.s() {
        (a.t(), b.s(), a.s())
    } else {
        return None;
    };
    let others: Vec<_> = triangle_words(t3, t2, t1)
        .into_iter()
        .filter(|f| *f != [a, b])
        .collect();
    others.choose(rng).copied()
}

/// A pair of mixed words of length at most `max_len`. Half of the pairs are
/// independent samples; the other half are equal by construction.
pub fn word_pair(
    ctx: BraidContext,
    rng: &mut WordRng,
    max_len: usize,
) -> (Vec<MixedLetter>, Vec<MixedLetter>) {
    let u = mixed_word(ctx, rng, max_len);
    if rng.gen_bool(0.5) {
        (u, mixed_word(ctx, rng, max_len))
    } else {
        let v = equivalent_variant(ctx, rng, &u, max_len, 6);
        (u, v)
    }
}
