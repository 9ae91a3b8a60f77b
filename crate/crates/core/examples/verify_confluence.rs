//! Enumerates critical pairs at a bounded size and checks they join.
//!
//! cargo run --release --example verify_confluence -- 5 1

use bkl_braid::verify::{enumerate_instances, verify_confluence, VerifyConfig};
use bkl_braid::BraidContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(4), |a| a.parse())?;
    let m: usize = args.next().map_or(Ok(1), |a| a.parse())?;
    let ctx = BraidContext::new(n)?;

    let instances = enumerate_instances(ctx, m);
    println!("{} rule instances, e.g.", instances.len());
    for r in instances.iter().step_by(instances.len().div_ceil(6).max(1)) {
        println!("  {r}");
    }

    let report = match verify_confluence(ctx, VerifyConfig::new(m)) {
        Ok(r) => r,
        Err(partial) => {
            println!("{partial}");
            *partial.report
        }
    };
    println!("{} ambiguities by family:", report.ambiguities);
    for (family, count) in &report.counts {
        println!("  {:<10} {count}", family.to_string());
    }
    let missing: Vec<String> = report
        .checklist
        .iter()
        .filter(|c| !c.reachable())
        .map(|c| c.family.to_string())
        .collect();
    println!(
        "listed families hit: {}/{}",
        report.checklist.len() - missing.len(),
        report.checklist.len()
    );
    if !missing.is_empty() {
        println!("  unreachable at n={n}, m={m}: {}", missing.join(" "));
    }
    println!("non-joinable: {}", report.failures.len());
    for f in report.failures.iter().take(5) {
        println!("  {} {}: {} vs {}", f.family, f.w, f.u_form, f.v_form);
    }
    Ok(())
}
