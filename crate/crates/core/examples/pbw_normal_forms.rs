//! Multiply in `H_{t,c}(S_2)` and `H_{t,c}(S_3)` and print PBW normal forms.

use std::sync::Arc;

use srak::cherednik::{build_cherednik, Representation};
use srak::groups::{FiniteSymplecticGroup, SymmetricRep};
use srak::sra::{parse_element, pbw_dimension};

fn main() -> srak::Result<()> {
    for n in [2, 3] {
        let g = Arc::new(FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection)?);
        let h = build_cherednik(g, Representation::Trivial)?;
        let sra = h.sra();
        println!("S_{n}: generators {:?}", sra.generator_names());
        let names = sra.generator_names();
        let (xn, yn) = (&names[0], &names[h.dim_h()]);
        let (x, y) = (h.x(0), h.y(0));
        println!("  {yn}*{xn} = {}", sra.format(&sra.mul(&y, &x)));
        println!("  {yn}^2*{xn}^2 = {}", sra.format(&sra.mul(&sra.pow(&y, 2), &sra.pow(&x, 2))));
        let src = if n == 2 { "y*s*x - s" } else { "y1*s1*x2 + t*x1" };
        println!("  {src} = {}", sra.format(&parse_element(sra, src)?));
        println!("  dims of the degree 0..4 parts: {:?}", (0..=4).map(|d| pbw_dimension(sra, d)).collect::<Vec<_>>());
    }
    Ok(())
}
