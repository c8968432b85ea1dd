//! Gram matrices of the contravariant form and a scan for finite-dimensional quotients.

use std::sync::Arc;

use srak::cherednik::{build_cherednik, contravariant_gram, finite_dim_scan, param_values, Representation};
use srak::coeffs::Rational;
use srak::groups::{FiniteSymplecticGroup, SymmetricRep};

fn main() -> srak::Result<()> {
    let s2 = Arc::new(FiniteSymplecticGroup::symmetric(2, SymmetricRep::Reflection)?);
    let h = build_cherednik(s2.clone(), Representation::Trivial)?.specialize(&param_values(Some(Rational::one()), &[]));
    for d in 0..=4 {
        println!("B_{d} = {}", contravariant_gram(&h, d)?[0][0]);
    }
    let points: Vec<Vec<Rational>> = [(1, 2), (3, 2), (1, 3), (-5, 2)].iter().map(|&(p, q)| vec![Rational::new(p, q)]).collect();
    for p in finite_dim_scan(s2, &points, 8)? {
        println!("S_2, c = {}: {:?}, dims {:?}", p.c[0], p.verdict, p.dims);
    }
    let s3 = Arc::new(FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection)?);
    for p in finite_dim_scan(s3, &[vec![Rational::new(1, 3)], vec![Rational::new(1, 2)]], 6)? {
        let ranks: Vec<_> = p.per_tau.iter().map(|t| (t.tau.clone(), t.ranks.clone())).collect();
        println!("S_3, c = {}: {:?}, ranks {ranks:?}", p.c[0], p.verdict);
    }
    Ok(())
}
