//! Trace obstruction lattice for `S_n` and the values of `c` it flags.

use srak::cherednik::convention_solve;
use srak::coeffs::Rational;
use srak::groups::{reflection_weight, symplectic_reflections, FiniteSymplecticGroup, SymmetricRep};
use srak::sra::{simplicity_lattice, sn_reflection_characters, trace_gate_candidate};

fn main() -> srak::Result<()> {
    for n in [2, 3, 4] {
        let g = FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection)?;
        let m = reflection_weight(&g, &symplectic_reflections(&g), 0)?;
        let traces: Vec<Vec<Rational>> =
            sn_reflection_characters(n)?.into_iter().map(|(_, chi)| vec![Rational::from_int(chi)]).collect();
        let lattice = simplicity_lattice(std::slice::from_ref(&m), &traces)?;
        let mu = convention_solve(&g)?[0].clone();
        let flagged: Vec<String> = (1..=12)
            .map(|k| Rational::new(k, 6))
            .filter(|c| trace_gate_candidate(&lattice, &[c * &mu]))
            .map(|c| c.to_string())
            .collect();
        println!("S_{n}: m = {m}, lattice {lattice:?}, flagged among k/6: {flagged:?}");
    }
    Ok(())
}
