//! Predicted two-sided ideals of `H_{1,c}(S_n)` with the slice scan attached.

use srak::cherednik::typea_report;
use srak::coeffs::Rational;

fn main() -> srak::Result<()> {
    for (n, p, q) in [(5, 1, 2), (4, 1, 4), (6, 2, 3), (3, 2, 7)] {
        let c = Rational::new(p, q);
        let r = typea_report(n, &c, Some(6))?;
        print!("n = {n}, c = {c}: ");
        if r.simple {
            println!("simple");
            continue;
        }
        println!("{} ideals, finite-dimensional module: {}", r.num_ideals, r.finite_dimensional);
        for leaf in &r.chain {
            println!("  J_{} <- {} ({}, dim {})", leaf.j, leaf.subgroup, leaf.label, leaf.leaf_dim);
        }
        if let Some(s) = &r.slice_evidence {
            println!("  slice S_{}: {:?}", r.m, s.verdict);
        }
    }
    Ok(())
}
