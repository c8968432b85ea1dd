//! Dunkl operators on the polynomial representation and the Euler grading element.

use std::sync::Arc;

use srak::cherednik::{build_cherednik, module_relation_check, param_values, solve_dunkl_sign, Representation};
use srak::coeffs::Rational;
use srak::groups::{FiniteSymplecticGroup, SymmetricRep};

fn main() -> srak::Result<()> {
    let g = Arc::new(FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection)?);
    let h = build_cherednik(g, Representation::Trivial)?;
    let report = module_relation_check(&h, 4)?;
    println!("relations on polynomials of degree <= 4: {} checked, {} failures", report.checked, report.failures.len());
    println!("sign of the reflection term in the Dunkl operator: {}", solve_dunkl_sign(&h)?);

    let h1 = h.specialize(&param_values(Some(Rational::one()), &[]));
    let euler = h1.euler_element();
    println!("h = {}", h1.sra().format(&euler));
    for i in 0..h1.dim_h() {
        println!("[h, x{}] = {}", i + 1, h1.sra().format(&h1.sra().commutator(&euler, &h1.x(i))));
    }
    Ok(())
}
