//! The centralizer algebra `Z(S_3, S_2, A)` for `A = ℚ S_2`: matrix units, Morita data and the
//! smash product isomorphism.

use std::sync::Arc;

use srak::centralizer;
use srak::groups::{symplectic_reflections, FiniteSymplecticGroup, SymmetricRep};

fn main() -> srak::Result<()> {
    let g = Arc::new(FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection)?);
    let s = symplectic_reflections(&g).reflections[0].element;
    let h = g.subgroup_generated(&[s]);
    let report = centralizer::selftest(g, &h)?;
    println!("cosets {}, dim over Q {}", report.cosets, report.rational_dim);
    for (name, count, ok) in &report.matrix_units.checks {
        println!("  {name}: {count} instances, {}", if *ok { "ok" } else { "FAILED" });
    }
    println!("Morita witness {}, corner recovery {}", report.morita_witness, report.corner_roundtrip);
    let smash = &report.smash;
    println!("smash product: {} -> {}, rank {}, multiplicative {}", smash.source_dim, smash.target_dim, smash.image_rank, smash.multiplicative);
    Ok(())
}
