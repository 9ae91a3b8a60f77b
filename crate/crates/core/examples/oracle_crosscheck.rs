//! Compares the rewriting engine with the free-group action on random pairs.

use bkl_braid::oracle::braid_action;
use bkl_braid::random::{seeded, word_pair};
use bkl_braid::{braid_eq_oracle, equal, permutation_of, BraidContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = BraidContext::new(4)?;
    let act = braid_action(ctx, &bkl_braid::cli::parse_word(ctx, "a(3,1)")?);
    println!("a(3,1) acts on F_4 by");
    for (j, img) in act.images().iter().enumerate() {
        println!("  x{} -> {img}", j + 1);
    }

    for n in 2..=6 {
        let ctx = BraidContext::new(n)?;
        let mut rng = seeded(n as u64);
        let (mut agree, mut same, mut perm_only) = (0, 0, 0);
        for _ in 0..2000 {
            let (u, v) = word_pair(ctx, &mut rng, 12);
            let e = equal(ctx, &u, &v);
            let o = braid_eq_oracle(ctx, &u, &v);
            agree += usize::from(e == o);
            same += usize::from(e);
            perm_only += usize::from(!e && permutation_of(ctx, &u) == permutation_of(ctx, &v));
        }
        println!(
            "n={n}: {agree}/2000 agree, {same} equal, {perm_only} unequal with equal permutations"
        );
    }
    Ok(())
}
