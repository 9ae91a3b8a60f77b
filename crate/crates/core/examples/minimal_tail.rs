//! The positive tail of a normal form is the deg-lex least positive word in
//! its class.

use bkl_braid::oracle::positive_class;
use bkl_braid::random::{positive_word, seeded};
use bkl_braid::{minimal_positive_oracle, normalize, BraidContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = BraidContext::new(4)?;
    let mut rng = seeded(11);
    for len in 1..=6 {
        let w = positive_word(ctx, &mut rng, len);
        let nf = normalize(ctx, &w);
        let class = positive_class(ctx, &w, 100_000)?;
        let min = minimal_positive_oracle(ctx, &w, 100_000)?;
        println!("{w}");
        println!("  class of {} words, least {min}", class.len());
        println!("  normal form {nf}");
        if nf.delta_exp == 0 {
            assert_eq!(nf.tail, min);
        }
    }
    Ok(())
}
