//! Decides equality of braid words by comparing normal forms.

use bkl_braid::cli::parse_word;
use bkl_braid::{braid_eq_oracle, normalize_mixed, BraidContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (3, "s1 s2 s1", "s2 s1 s2"),
        (4, "s1 s3", "s3 s1"),
        (4, "s1 s2", "s2 s1"),
        (4, "a(4,1) a(3,2) a(3,2)^-1", "a(4,1)"),
        (5, "D^5", "D D D D D"),
        (5, "a(5,3) D", "D a(4,1)"),
        (3, "a(2,1) a(2,1)^-1 D D^-1", "e"),
        (6, "s5 s4 s3 s2 s1", "D"),
        (6, "s1 s2 s3 s4 s5", "D"),
    ];
    for (n, u, v) in cases {
        let ctx = BraidContext::new(n)?;
        let (pu, pv) = (parse_word(ctx, u)?, parse_word(ctx, v)?);
        let (fu, fv) = (normalize_mixed(ctx, &pu), normalize_mixed(ctx, &pv));
        let verdict = if fu == fv { "equal" } else { "unequal" };
        println!("n={n}  {u}  vs  {v}");
        println!("      {fu}  |  {fv}  -> {verdict}");
        assert_eq!(fu == fv, braid_eq_oracle(ctx, &pu, &pv));
    }
    Ok(())
}
