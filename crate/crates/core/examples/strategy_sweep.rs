//! Normal forms do not depend on which redex the rewriter picks.

use bkl_braid::verify::strategy_sweep;
use bkl_braid::{BraidContext, Strategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("policies:");
    for s in Strategy::all() {
        println!("  {s}");
    }
    for n in 2..=6 {
        let report = strategy_sweep(BraidContext::new(n)?, 300, 7, 14);
        println!(
            "n={n}: {} words x {} policies, {} discrepancies",
            report.trials,
            report.strategies,
            report.discrepancies.len()
        );
    }
    Ok(())
}
