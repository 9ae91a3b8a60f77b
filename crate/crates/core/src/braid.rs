//! Alphabet of the Birman-Ko-Lee-Garside presentation.
//!
//! A band letter `a(t,s)` (written `(t,s)` in the notation helpers) is stored
//! with `t > s`; the Garside letter `δ` and its inverse are separate letters.
//! Letters are ordered `δ⁻¹ < δ < a(t,s)`, band letters by `(t, s)`, and words
//! by degree first, then letterwise.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 64;

/// The strand count `n` of the ambient braid group `B_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidContext {
    n: u8,
}

impl BraidContext {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(Error::InvalidStrandCount(n));
        }
        Ok(Self { n: n as u8 })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn contains(&self, g: BandLetter) -> bool {
        g.t <= self.n
    }

    /// All band letters of the context in ascending order.
    pub fn band_letters(&self) -> impl Iterator<Item = BandLetter> {
        let n = self.n;
        (2..=n).flat_map(|t| (1..t).map(move |s| BandLetter { t, s }))
    }

    /// Number of band letters, `n(n-1)/2`.
    pub fn band_count(&self) -> usize {
        let n = self.n as usize;
        n * (n - 1) / 2
    }
}

/// A band generator `a(t,s)` with `t > s ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandLetter {
    t: u8,
    s: u8,
}

impl BandLetter {
    /// Builds the letter on strands `a` and `b` in either order.
    ///
    /// Panics if `a == b` or either index is zero; use [`make_band`] for
    /// checked construction against a context.
    pub fn new(a: u8, b: u8) -> Self {
        assert!(a != b && a > 0 && b > 0, "invalid band letter ({a},{b})");
        Self {
            t: a.max(b),
            s: a.min(b),
        }
    }

    pub fn t(&self) -> u8 {
        self.t
    }

    pub fn s(&self) -> u8 {
        self.s
    }
}

impl fmt::Display for BandLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.t, self.s)
    }
}

/// `make_band(ctx, a, b)`: checked band letter, accepting `(i,j)` or `(j,i)`.
pub fn make_band(ctx: BraidContext, a: usize, b: usize) -> Result<BandLetter> {
    let n = ctx.n as usize;
    if a == b || a == 0 || b == 0 || a > n || b > n {
        return Err(Error::InvalidGenerator { n: ctx.n, a, b });
    }
    Ok(BandLetter::new(a as u8, b as u8))
}

/// One letter of the enriched alphabet. The derived order is the generator
/// order: `DeltaInv < Delta < Band(..)`, band letters by `(t, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    DeltaInv,
    Delta,
    Band(BandLetter),
}

impl Letter {
    pub fn band(self) -> Option<BandLetter> {
        match self {
            Letter::Band(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_delta(self) -> bool {
        !matches!(self, Letter::Band(_))
    }
}

impl From<BandLetter> for Letter {
    fn from(g: BandLetter) -> Self {
        Letter::Band(g)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::DeltaInv => f.write_str("D^-1"),
            Letter::Delta => f.write_str("D"),
            Letter::Band(g) => g.fmt(f),
        }
    }
}

/// A finite word over the enriched alphabet. `Ord` is the deg-lex order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: impl Into<Letter>) {
        self.0.push(letter.into());
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    /// True when every letter is a band letter.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|x| !x.is_delta())
    }

    /// Band letters of a positive word; `None` if a δ-letter occurs.
    pub fn bands(&self) -> Option<Vec<BandLetter>> {
        self.0.iter().map(|x| x.band()).collect()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Self(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Self(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl FromIterator<BandLetter> for Word {
    fn from_iter<I: IntoIterator<Item = BandLetter>>(iter: I) -> Self {
        Self(iter.into_iter().map(Letter::Band).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (idx, x) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            x.fmt(f)?;
        }
        Ok(())
    }
}

/// Compares by length, then letterwise from the left.
pub fn deglex_compare(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Letters `(k,l)` with `hi ≥ k > l ≥ lo`. Empty when `hi ≤ lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeConstraint {
    pub hi: u8,
    pub lo: u8,
}

impl RangeConstraint {
    pub fn new(hi: u8, lo: u8) -> Self {
        Self { hi, lo }
    }

    pub fn admits(&self, g: BandLetter) -> bool {
        self.hi >= g.t && g.s >= self.lo
    }

    pub fn admits_word(&self, w: &[Letter]) -> bool {
        w.iter()
            .all(|x| matches!(x, Letter::Band(g) if self.admits(*g)))
    }

    /// The admissible letters in ascending order.
    pub fn letters(&self) -> Vec<BandLetter> {
        let mut out = Vec::new();
        for t in self.lo.saturating_add(1)..=self.hi {
            for s in self.lo.max(1)..t {
                out.push(BandLetter { t, s });
            }
        }
        out
    }

    /// Every word of length at most `max_len` over the admissible letters.
    pub fn words(&self, max_len: usize) -> Vec<Word> {
        let alphabet = self.letters();
        let mut out = vec![Word::new()];
        let mut frontier = vec![Word::new()];
        for _ in 0..max_len {
            if alphabet.is_empty() {
                break;
            }
            let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
            for w in &frontier {
                for &g in &alphabet {
                    let mut x = w.clone();
                    x.push(g);
                    next.push(x);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    fn check(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|x| match x {
            Letter::Band(g) => !self.admits(*g),
            _ => true,
        }) {
            Some(bad) => Err(Error::ConstraintViolation {
                letter: bad.to_string(),
                hi: self.hi,
                lo: self.lo,
            }),
            None => Ok(()),
        }
    }
}

/// The product `(t_m,t_{m-1})(t_{m-1},t_{m-2})…(t_2,t_1)` for a strictly
/// decreasing index sequence. One index (or none) gives the empty word.
pub fn descending_product(ctx: BraidContext, seq: &[u8]) -> Result<Word> {
    if seq.windows(2).any(|p| p[0] <= p[1]) {
        return Err(Error::InvalidSequence(seq.to_vec()));
    }
    chain_product(ctx, seq)
}

/// Like [`descending_product`] but only requires neighbouring indices to
/// differ, as in `(t_k,…,t_1,t_m,…,t_{k+1})`.
pub fn chain_product(ctx: BraidContext, seq: &[u8]) -> Result<Word> {
    let mut out = Word::new();
    for p in seq.windows(2) {
        out.push(
            make_band(ctx, p[0] as usize, p[1] as usize)
                .map_err(|_| Error::InvalidSequence(seq.to_vec()))?,
        );
    }
    if seq.len() == 1 && (seq[0] == 0 || seq[0] > ctx.n) {
        return Err(Error::InvalidSequence(seq.to_vec()));
    }
    Ok(out)
}

/// The Garside word `δ = (n,n-1)(n-1,n-2)…(2,1)` spelled in band letters.
pub fn delta_word(ctx: BraidContext) -> Word {
    (1..ctx.n)
        .rev()
        .map(|s| BandLetter { t: s + 1, s })
        .collect()
}

/// `V'` with respect to `(t2,t1)`: `(k,t1) ↦ (t2,k)`, other letters fixed.
/// Realizes `V·(t2,t1) = (t2,t1)·V'`. Letters must lie in `[t2-1, t1]`.
pub fn prime_transform(v: &[Letter], t2: u8, t1: u8) -> Result<Word> {
    RangeConstraint::new(t2.saturating_sub(1), t1).check(v)?;
    Ok(v.iter()
        .map(|x| {
            let g = x.band().expect("checked");
            if g.s == t1 {
                BandLetter::new(t2, g.t)
            } else {
                g
            }
        })
        .collect())
}

/// `W^⋆` with respect to `(t1,t0)`: `(k,t1) ↦ (k,t0)`, other letters fixed.
/// Realizes `W·(t1,t0) = (t1,t0)·W^⋆` when every letter has lower index
/// `≥ t1`; letters with any other lower index are passed through unchanged.
pub fn star_transform(w: &[Letter], t1: u8, t0: u8) -> Result<Word> {
    if t1 <= t0 || t0 == 0 {
        return Err(Error::InvalidSequence(vec![t1, t0]));
    }
    RangeConstraint::new(u8::MAX, 1).check(w)?;
    Ok(w.iter()
        .map(|x| {
            let g = x.band().expect("checked");
            if g.s == t1 {
                BandLetter::new(g.t, t0)
            } else {
                g
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// The letter `g'` with `g·δ^{±1} = δ^{±1}·g'`: both indices shift by one
/// (mod n, into `1..=n`) and the pair is re-sorted.
pub fn delta_conjugate(ctx: BraidContext, g: BandLetter, direction: Sign) -> BandLetter {
    let n = ctx.n;
    let shift = |x: u8| match direction {
        Sign::Pos => x % n + 1,
        Sign::Neg => (x + n - 2) % n + 1,
    };
    BandLetter::new(shift(g.t), shift(g.s))
}

/// `(t,s)⁻¹ = δ⁻¹·(n,…,t,s-1,…,1)·(t-1,…,s)`.
pub fn invert_band(ctx: BraidContext, g: BandLetter) -> Word {
    let outer: Vec<u8> = (g.t..=ctx.n).rev().chain((1..g.s).rev()).collect();
    let inner: Vec<u8> = (g.s..g.t).rev().collect();
    let mut out = Word::from(vec![Letter::DeltaInv]);
    out.extend_from(&descending_product(ctx, &outer).expect("decreasing"));
    out.extend_from(&descending_product(ctx, &inner).expect("decreasing"));
    out
}

/// A classical Artin generator `σ_i^{±1}`, `1 ≤ i ≤ n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub i: u8,
    pub sign: Sign,
}

impl ArtinLetter {
    pub fn new(ctx: BraidContext, i: usize, sign: Sign) -> Result<Self> {
        if i == 0 || i >= ctx.n as usize {
            return Err(Error::InvalidArtin { n: ctx.n, i });
        }
        Ok(Self { i: i as u8, sign })
    }

    pub fn inverse(self) -> Self {
        Self {
            i: self.i,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "s{}", self.i),
            Sign::Neg => write!(f, "s{}^-1", self.i),
        }
    }
}

/// `σ_i ↦ a(i+1,i)`, `σ_i⁻¹ ↦ invert_band(a(i+1,i))`.
pub fn artin_to_band(ctx: BraidContext, w: &[ArtinLetter]) -> Result<Word> {
    let mut out = Word::new();
    for a in w {
        if a.i == 0 || a.i >= ctx.n {
            return Err(Error::InvalidArtin {
                n: ctx.n,
                i: a.i as usize,
            });
        }
        let g = BandLetter::new(a.i + 1, a.i);
        match a.sign {
            Sign::Pos => out.push(g),
            Sign::Neg => out.extend_from(&invert_band(ctx, g)),
        }
    }
    Ok(out)
}

/// `a(t,s) = σ_{t-1}…σ_{s+1} σ_s σ_{s+1}⁻¹…σ_{t-1}⁻¹`.
pub fn band_to_artin(_ctx: BraidContext, g: BandLetter) -> Vec<ArtinLetter> {
    let up = (g.s + 1..g.t)
        .rev()
        .map(|i| ArtinLetter { i, sign: Sign::Pos });
    let down = (g.s + 1..g.t).map(|i| ArtinLetter { i, sign: Sign::Neg });
    up.chain(std::iter::once(ArtinLetter {
        i: g.s,
        sign: Sign::Pos,
    }))
    .chain(down)
    .collect()
}

/// A letter of a word that may also contain inverse band letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MixedLetter {
    Letter(Letter),
    BandInverse(BandLetter),
}

impl MixedLetter {
    pub fn inverse(self) -> MixedLetter {
        match self {
            MixedLetter::Letter(Letter::Delta) => MixedLetter::Letter(Letter::DeltaInv),
            MixedLetter::Letter(Letter::DeltaInv) => MixedLetter::Letter(Letter::Delta),
            MixedLetter::Letter(Letter::Band(g)) => MixedLetter::BandInverse(g),
            MixedLetter::BandInverse(g) => MixedLetter::Letter(Letter::Band(g)),
        }
    }
}

impl From<Letter> for MixedLetter {
    fn from(x: Letter) -> Self {
        MixedLetter::Letter(x)
    }
}

impl From<BandLetter> for MixedLetter {
    fn from(g: BandLetter) -> Self {
        MixedLetter::Letter(Letter::Band(g))
    }
}

impl fmt::Display for MixedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixedLetter::Letter(x) => x.fmt(f),
            MixedLetter::BandInverse(g) => write!(f, "{g}^-1"),
        }
    }
}

pub fn mixed_from_word(w: &[Letter]) -> Vec<MixedLetter> {
    w.iter().map(|&x| MixedLetter::Letter(x)).collect()
}

/// Formal inverse of a mixed word.
pub fn mixed_inverse(w: &[MixedLetter]) -> Vec<MixedLetter> {
    w.iter().rev().map(|x| x.inverse()).collect()
}

/// Replaces every inverse band letter using [`invert_band`].
pub fn eliminate_inverses(ctx: BraidContext, w: &[MixedLetter]) -> Word {
    let mut out = Word::new();
    for x in w {
        match *x {
            MixedLetter::Letter(l) => out.push(l),
            MixedLetter::BandInverse(g) => out.extend_from(&invert_band(ctx, g)),
        }
    }
    out
}

pub fn render_mixed(w: &[MixedLetter]) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
