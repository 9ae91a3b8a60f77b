//! Instantiates the identity families the rewriting rules are built from
//! and checks each one with the normalizer.

use std::collections::BTreeMap;

use bkl_braid::verify::{fixture_holds, lemma_fixtures};
use bkl_braid::BraidContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = BraidContext::new(4)?;
    let mut seen: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for fx in lemma_fixtures(ctx) {
        let entry = seen.entry(fx.kind.to_string()).or_default();
        if entry.0 == 0 {
            println!("{:<16} {} = {}", fx.kind.to_string(), fx.lhs, fx.rhs);
        }
        entry.0 += 1;
        entry.1 += usize::from(fixture_holds(ctx, &fx));
    }
    for (kind, (total, ok)) in seen {
        println!("{kind:<16} {ok}/{total} hold");
    }
    Ok(())
}
