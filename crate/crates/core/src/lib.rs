//! Normal forms and the word problem for the braid group `B_n` in the
//! Birman-Ko-Lee generators `a(t,s)` enriched by the Garside letter `δ`.
//!
//! The crate implements a Gröbner-Shirshov rewriting system (nine rule
//! schemata with range-constrained wildcards) whose irreducible words are
//! exactly the normal forms `δ^k·A`, `A` positive. Around it:
//!
//! - [`braid`]: alphabet, deg-lex order, notation builders, Artin/BKL
//!   conversion and inverse elimination;
//! - [`rules`] and [`normal`]: the matchers and the normalizer;
//! - [`verify`]: bounded critical-pair enumeration and fixture identities;
//! - [`oracle`]: an exact free-group-action equality test and a brute-force
//!   minimality check for positive words;
//! - [`cli`]: token grammar, rendering and the command implementations used
//!   by the `bkl-braid` binary.
//!
//! ```
//! use bkl_braid::{BraidContext, BandLetter, Word, normalize};
//!
//! let ctx = BraidContext::new(3).unwrap();
//! let w: Word = [BandLetter::new(3, 2), BandLetter::new(2, 1)].into_iter().collect();
//! assert_eq!(normalize(ctx, &w).to_string(), "D^1 e");
//! ```

pub mod braid;
pub mod cli;
pub mod error;
pub mod normal;
pub mod oracle;
pub mod random;
pub mod rules;
pub mod verify;

pub use braid::{
    artin_to_band, band_to_artin, chain_product, deglex_compare, delta_conjugate, delta_word,
    descending_product, eliminate_inverses, invert_band, make_band, prime_transform,
    star_transform, ArtinLetter, BandLetter, BraidContext, Letter, MixedLetter, RangeConstraint,
    Sign, Word,
};
pub use error::{Error, Result};
pub use normal::{
    equal, is_irreducible, normalize, normalize_mixed, normalize_with, rewrite_step, NormalForm,
    Strategy,
};
pub use oracle::{braid_eq_oracle, minimal_positive_oracle, permutation_of};
pub use rules::{match_at, matches_at, rhs_of, RuleId, RuleMatch};
