//! The center of `H_{0,c}(S_2)` up to degree 4, the Satake check and the Poisson bracket.

use std::sync::Arc;

use srak::cherednik::{build_cherednik, param_values, Representation};
use srak::coeffs::Rational;
use srak::groups::{FiniteSymplecticGroup, SymmetricRep};

fn main() -> srak::Result<()> {
    let g = Arc::new(FiniteSymplecticGroup::symmetric(2, SymmetricRep::Reflection)?);
    let h = build_cherednik(g, Representation::Trivial)?.specialize(&param_values(Some(Rational::zero()), &[]));
    let sra = h.sra();
    let center = sra.center_basis(4);
    println!("graded dims {:?}", center.graded_dims);
    for (z, d) in center.basis.iter().zip(&center.degrees) {
        println!("  degree {d}: {}", sra.format(z));
    }
    let b = &center.basis;
    let bracket = sra.poisson_bracket(&b[1], &b[3])?;
    println!("{{{}, {}}} = {}", sra.format(&b[1]), sra.format(&b[3]), sra.format(&bracket));
    let report = sra.poisson_checks(b)?;
    println!("Poisson axioms hold: {}", report.passed());

    let at_zero = sra.specialize_params(&param_values(None, &[Some(Rational::zero())]));
    let z0 = at_zero.center_basis(4);
    for s in at_zero.satake_check(&z0) {
        println!("Satake degree {}: center {} corner rank {} invariants {}", s.degree, s.center_dim, s.corner_rank, s.invariant_dim);
    }
    Ok(())
}
