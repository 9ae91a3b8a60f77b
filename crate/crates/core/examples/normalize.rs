//! Normalizes a word and prints every rewrite step.
//!
//! cargo run --example normalize -- 4 "a(4,3) a(3,2) a(2,1) a(3,1)^-1"

use bkl_braid::braid::eliminate_inverses;
use bkl_braid::cli::parse_word;
use bkl_braid::normal::reduce_observed;
use bkl_braid::{normalize, BraidContext, Strategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(4), |a| a.parse())?;
    let input = args
        .next()
        .unwrap_or_else(|| "a(4,3) a(3,2) a(2,1) a(3,1)^-1".to_string());
    let ctx = BraidContext::new(n)?;

    let word = eliminate_inverses(ctx, &parse_word(ctx, &input)?);
    println!("input      {input}");
    println!("positive   {word}");
    reduce_observed(ctx, &word, Strategy::DEFAULT, |_, m, after| {
        println!("  {:<4} @{:<2} {after}", m.rule.to_string(), m.start);
    });
    println!("normal     {}", normalize(ctx, &word));
    Ok(())
}
