//! Build `S_3` on `h ⊕ h*`, list its conjugacy classes and symplectic reflections.

use srak::cherednik::{convention_solve, root_data};
use srak::groups::{reflection_weight, symplectic_reflections, FiniteSymplecticGroup, SymmetricRep};

fn main() -> srak::Result<()> {
    let g = FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection)?;
    println!("|S_3| = {}, dim V = {}", g.order(), g.dim());
    for (i, class) in g.conjugacy_classes().iter().enumerate() {
        println!("class {i}: {class:?}");
    }
    let refl = symplectic_reflections(&g);
    for (i, orbit) in refl.orbits.iter().enumerate() {
        println!("reflection orbit {i}: {} elements, weight {}", orbit.len(), reflection_weight(&g, &refl, i)?);
    }
    for r in root_data(&g)? {
        println!("s = g{}: alpha = {:?}, coroot = {:?}", r.element, r.alpha, r.coroot);
    }
    println!("relation normalization mu = {:?}", convention_solve(&g)?);
    Ok(())
}
