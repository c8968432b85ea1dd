//! The completion of `H_{t,c}(S_3)` at a point with stabilizer `S_2`, truncated at x-order 4,
//! and the checks on its image in the centralizer algebra.

use std::sync::Arc;

use srak::completion::{be_iso, corner_extract, equivariance_check, generic_base_point, mod_param_baseline, verify_homomorphism};
use srak::groups::{symplectic_reflections, FiniteSymplecticGroup, SymmetricRep};

fn main() -> srak::Result<()> {
    let g = Arc::new(FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection)?);
    let s = symplectic_reflections(&g).reflections[0].element;
    let b = generic_base_point(&g, &[g.identity(), s])?;
    let iso = be_iso(g, &b, None, 4)?;
    println!("b = {b:?}, |W_b| = {}, cosets {}", iso.subgroup().len(), iso.context().size());
    let slice = iso.context().algebra().slice().sra();
    for (name, image) in iso.generator_images() {
        println!("{name} -> (0,0) entry {}", slice.format(&image.entry(0, 0).value));
    }
    let report = verify_homomorphism(&iso)?;
    for c in &report.checks {
        println!("  {}: {}", c.relation, if c.passed { "ok" } else { "FAILED" });
    }
    println!("baseline {}, equivariance {}", mod_param_baseline(&iso)?.passed(), equivariance_check(&iso).passed());
    let x = iso.ambient().x(0);
    println!("corner of x1: {}", slice.format(&corner_extract(&iso, &x)?.value));
    Ok(())
}
