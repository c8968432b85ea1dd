use super::FiniteSymplecticGroup;
use crate::coeffs::matrix::row_space_basis;
use crate::coeffs::{RatMatrix, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct LeafData {
    pub subgroup: Vec<usize>,
    /// Basis of `V^Γ̲`.
    pub fixed: Vec<Vec<Rational>>,
    /// Basis of the `Γ̲`-stable complement (the nontrivial isotypic part).
    pub complement: Vec<Vec<Rational>>,
    /// `N_Γ(Γ̲)`.
    pub normalizer: Vec<usize>,
    /// `|N_Γ(Γ̲)| / |Γ̲|`.
    pub quotient_order: usize,
}

/// Fixed space, complement and normalizer of a subgroup given by element indices.
pub fn leaf_data(group: &FiniteSymplecticGroup, subgroup: &[usize]) -> Result<LeafData> {
    let mut sub = subgroup.to_vec();
    sub.sort_unstable();
    sub.dedup();
    if !group.is_subgroup(&sub) {
        return Err(Error::NotSubgroup("leaf subgroup is not closed".into()));
    }
    let n = group.dim();
    let id = RatMatrix::identity(n);
    let mut stacked = Vec::new();
    let mut avg = RatMatrix::zeros(n, n);
    for &g in &sub {
        let m = group.element(g);
        stacked.extend(m.sub(&id).to_rows());
        avg = avg.add(m);
    }
    let avg = avg.scale(&Rational::new(1, sub.len() as i64));
    let fixed = if stacked.is_empty() {
        id.to_rows()
    } else {
        RatMatrix::from_rows(stacked)?.nullspace()
    };
    let complement = row_space_basis(&id.sub(&avg).transpose().to_rows());
    let normalizer = group.normalizer(&sub);
    let quotient_order = normalizer.len() / sub.len();
    Ok(LeafData { subgroup: sub, fixed, complement, normalizer, quotient_order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{SymmetricRep, symplectic_reflections};

    fn restricted_form_rank(g: &FiniteSymplecticGroup, basis: &[Vec<Rational>]) -> usize {
        let rows: Vec<Vec<Rational>> =
            basis.iter().map(|a| basis.iter().map(|b| g.omega_eval(a, b)).collect()).collect();
        crate::coeffs::matrix::rank_of(&rows)
    }

    #[test]
    fn trivial_and_full_subgroups() {
        let g = FiniteSymplecticGroup::symmetric(2, SymmetricRep::Reflection).unwrap();
        let l = leaf_data(&g, &[0]).unwrap();
        assert_eq!((l.fixed.len(), l.complement.len(), l.normalizer.len()), (2, 0, 2));
        let l = leaf_data(&g, &[0, 1]).unwrap();
        assert_eq!((l.fixed.len(), l.complement.len()), (0, 2));
    }

    #[test]
    fn s3_with_a_transposition() {
        let g = FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection).unwrap();
        let s = symplectic_reflections(&g).reflections[0].element;
        let l = leaf_data(&g, &[0, s]).unwrap();
        assert_eq!(l.fixed.len(), 2);
        assert_eq!(l.complement.len(), 2);
        assert_eq!(l.quotient_order, 1);
        assert_eq!(restricted_form_rank(&g, &l.fixed), 2);
        assert_eq!(restricted_form_rank(&g, &l.complement), 2);
        for a in &l.fixed {
            for b in &l.complement {
                assert!(g.omega_eval(a, b).is_zero());
            }
        }
        let mut all = l.fixed.clone();
        all.extend(l.complement.clone());
        assert_eq!(crate::coeffs::matrix::rank_of(&all), 4);
        assert!(leaf_data(&g, &[s]).is_err());
    }
}
