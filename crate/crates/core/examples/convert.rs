//! Moves between Artin generators, band generators and δ, and inverts.

use bkl_braid::braid::{mixed_from_word, mixed_inverse};
use bkl_braid::cli::{parse_word, render_artin};
use bkl_braid::oracle::mixed_to_artin;
use bkl_braid::{
    band_to_artin, delta_word, eliminate_inverses, invert_band, normalize_mixed, BraidContext,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = BraidContext::new(5)?;

    println!("band letters as Artin words (n=5):");
    for g in ctx.band_letters() {
        println!("  {g:<7} = {}", render_artin(&band_to_artin(ctx, g)));
    }

    println!("δ = {}", delta_word(ctx));
    println!(
        "  = {}",
        render_artin(&mixed_to_artin(ctx, &mixed_from_word(&delta_word(ctx))))
    );

    println!("positive inverses:");
    for g in ctx.band_letters().take(4) {
        println!("  {g}^-1 = {}", invert_band(ctx, g));
    }

    let w = parse_word(ctx, "s1 s3^-1 s2 a(5,2)")?;
    let inv = mixed_inverse(&w);
    println!("w        = s1 s3^-1 s2 a(5,2)");
    println!("in bands = {}", eliminate_inverses(ctx, &w));
    println!("w^-1     = {}", normalize_mixed(ctx, &inv));
    let both = [w, inv].concat();
    println!("w w^-1   = {}", normalize_mixed(ctx, &both));
    Ok(())
}
