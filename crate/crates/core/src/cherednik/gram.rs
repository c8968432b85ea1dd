//! Contravariant forms on standard modules and the finite-dimensionality scan.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::module::{dunkl_apply, ModuleVector, Representation};
use super::{build_cherednik, CherednikAlgebra};
use crate::coeffs::poly::exponents_of_degree;
use crate::coeffs::{MPoly, ParamPoly, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::groups::FiniteSymplecticGroup;

fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// `D^a (x^b)` evaluated at the origin, for all `a` of degree `|b|`.
///
/// Dunkl operators commute, so `D^a` is computed along the chain removing the last nonzero
/// exponent first, memoized per starting monomial.
fn dunkl_table(alg: &CherednikAlgebra, b: &[u32]) -> Result<HashMap<Vec<u32>, ModuleVector>> {
    let n = alg.dim_h();
    let d: u32 = b.iter().sum();
    let mut table: HashMap<Vec<u32>, ModuleVector> = HashMap::new();
    table.insert(vec![0; n], ModuleVector::basis(alg.arity(), b.to_vec(), 1, 0));
    for k in 1..=d {
        for a in exponents_of_degree(n, k) {
            let i = a.iter().rposition(|&e| e > 0).expect("positive degree");
            let mut prev = a.clone();
            prev[i] -= 1;
            let v = dunkl_apply(alg, &unit_vec(n, i), &table[&prev])?;
            table.insert(a, v);
        }
    }
    Ok(table)
}

/// The matrix `B[a][b] = (D^a x^b)(0)` of the contravariant pairing on degree `d`, rows and
/// columns indexed by [`exponents_of_degree`]. Entries lie in the parameter ring.
///
/// With respect to orthonormal coordinates the form is symmetric; in general the two arguments
/// differ by the invertible map identifying `h*` with `h`, which leaves the rank unchanged.
/// Only one-dimensional `τ` is supported.
pub fn contravariant_gram(alg: &CherednikAlgebra, d: u32) -> Result<Vec<Vec<ParamPoly>>> {
    if alg.tau().dim() != 1 {
        return Err(Error::Representation("the Gram matrix needs a one-dimensional τ".into()));
    }
    let monos = exponents_of_degree(alg.dim_h(), d);
    let columns: Vec<Vec<ParamPoly>> = monos
        .iter()
        .map(|b| {
            let table = dunkl_table(alg, b)?;
            Ok(monos.iter().map(|a| table[a].at_origin().remove(0)).collect())
        })
        .collect::<Result<_>>()?;
    Ok((0..monos.len()).map(|i| columns.iter().map(|col| col[i].clone()).collect()).collect())
}

fn numeric(m: &[Vec<ParamPoly>]) -> Result<RatMatrix> {
    let rows = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| p.as_constant().ok_or_else(|| Error::InvalidArgument(format!("entry {p} depends on a free parameter"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(RatMatrix::zeros(0, 0));
    }
    RatMatrix::from_rows(rows)
}

/// Rank over ℚ of a Gram matrix whose parameters are all fixed.
pub fn gram_rank(m: &[Vec<ParamPoly>]) -> Result<usize> {
    Ok(numeric(m)?.rank())
}

/// Result of [`singular_vector_check`] at the first degree where the form degenerates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularCheck {
    pub degree: u32,
    pub kernel_dim: usize,
    /// Every kernel vector is killed by all `D_{y_i}`.
    pub annihilated: bool,
}

/// Find the first degree `1 ≤ d ≤ max_degree` where the Gram matrix is singular and check that
/// its kernel consists of singular vectors. `None` when the form is nondegenerate throughout.
pub fn singular_vector_check(alg: &CherednikAlgebra, max_degree: u32) -> Result<Option<SingularCheck>> {
    let n = alg.dim_h();
    for d in 1..=max_degree {
        let gram = numeric(&contravariant_gram(alg, d)?)?;
        let kernel = gram.nullspace();
        if kernel.is_empty() {
            continue;
        }
        let monos = exponents_of_degree(n, d);
        let mut annihilated = true;
        for v in &kernel {
            let mut poly = MPoly::zero(n);
            for (e, k) in monos.iter().zip(v) {
                poly.add_term(e.clone(), ParamPoly::constant(alg.arity(), k.clone()));
            }
            let g = ModuleVector { comps: vec![poly] };
            for i in 0..n {
                if !dunkl_apply(alg, &unit_vec(n, i), &g)?.is_zero() {
                    annihilated = false;
                }
            }
        }
        return Ok(Some(SingularCheck { degree: d, kernel_dim: kernel.len(), annihilated }));
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Finite,
    Infinite,
    /// Ranks still falling at the cutoff.
    Inconclusive,
}

/// Ranks of the contravariant form for one lowest weight.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TauScan {
    pub tau: String,
    pub ranks: Vec<usize>,
    pub verdict: Verdict,
    /// `dim L(τ) = Σ ranks` when finite.
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanPoint {
    pub c: Vec<Rational>,
    pub per_tau: Vec<TauScan>,
    pub verdict: Verdict,
    /// Dimensions of the finite-dimensional `L(τ)` found.
    pub dims: Vec<usize>,
}

fn classify(ranks: &[usize]) -> Verdict {
    match ranks {
        [.., 0] => Verdict::Finite,
        [.., prev, last] if last < prev => Verdict::Inconclusive,
        _ => Verdict::Infinite,
    }
}

fn scan_tau(alg: &CherednikAlgebra, cutoff: u32) -> Result<TauScan> {
    let mut ranks = Vec::new();
    for d in 0..=cutoff {
        let r = gram_rank(&contravariant_gram(alg, d)?)?;
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    let verdict = classify(&ranks);
    let dim = (verdict == Verdict::Finite).then(|| ranks.iter().sum());
    Ok(TauScan { tau: alg.tau().name(), ranks, verdict, dim })
}

/// Scan `c` values (one rational per reflection orbit) at `t = 1` for finite-dimensional
/// `L(triv)` and `L(sign)` by the ranks of the contravariant form up to `cutoff`. Once a rank
/// vanishes all higher ones do, so the scan stops there. Points are processed in parallel and
/// reported in input order.
pub fn finite_dim_scan(group: Arc<FiniteSymplecticGroup>, points: &[Vec<Rational>], cutoff: u32) -> Result<Vec<ScanPoint>> {
    let base = build_cherednik(group, Representation::Trivial)?;
    for p in points {
        if p.len() != base.num_orbits() {
            return Err(Error::InvalidArgument(format!("{} values for {} orbits", p.len(), base.num_orbits())));
        }
    }
    points
        .par_iter()
        .map(|c| {
            let mut values = BTreeMap::from([(0, Rational::one())]);
            for (i, v) in c.iter().enumerate() {
                values.insert(i + 1, v.clone());
            }
            let alg = base.specialize(&values);
            let per_tau = [Representation::Trivial, Representation::Sign]
                .into_iter()
                .map(|tau| scan_tau(&alg.with_tau(tau)?, cutoff))
                .collect::<Result<Vec<_>>>()?;
            let dims: Vec<usize> = per_tau.iter().filter_map(|s| s.dim).collect();
            let verdict = if !dims.is_empty() {
                Verdict::Finite
            } else if per_tau.iter().any(|s| s.verdict == Verdict::Inconclusive) {
                Verdict::Inconclusive
            } else {
                Verdict::Infinite
            };
            Ok(ScanPoint { c: c.clone(), per_tau, verdict, dims })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::SymmetricRep;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn sym(n: usize) -> Arc<FiniteSymplecticGroup> {
        Arc::new(FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection).unwrap())
    }

    #[test]
    fn rank_one_gram_is_a_product() {
        // (x^d, x^d) = Π_{k ≤ d} (tk − 2c[k odd]) in rank one
        let alg = build_cherednik(sym(2), Representation::Trivial).unwrap();
        let at = |tv: i64, cv: Rational| alg.specialize(&BTreeMap::from([(0, Rational::from_int(tv)), (1, cv)]));
        let (tv, cv) = (3, q(2, 7));
        let spec = at(tv, cv.clone());
        let mut want = Rational::one();
        for d in 0..6u32 {
            if d > 0 {
                let mut f = Rational::from_int(tv * d as i64);
                if d % 2 == 1 {
                    f -= &(&cv * &Rational::from_int(2));
                }
                want *= &f;
            }
            let g = contravariant_gram(&spec, d).unwrap();
            assert_eq!(g[0][0].as_constant().unwrap(), want, "degree {d}");
        }
    }

    #[test]
    fn gram_symmetry_in_orthonormal_coordinates() {
        let g = Arc::new(FiniteSymplecticGroup::symmetric(3, SymmetricRep::Permutation).unwrap());
        let alg = build_cherednik(g, Representation::Trivial).unwrap();
        let alg = alg.specialize(&BTreeMap::from([(0, Rational::one()), (1, q(1, 5))]));
        for d in 0..4 {
            let m = contravariant_gram(&alg, d).unwrap();
            for (i, row) in m.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    assert_eq!(*entry, m[j][i]);
                }
            }
        }
    }

    #[test]
    fn rank_one_scan() {
        let pts = vec![vec![q(1, 2)], vec![q(-1, 2)], vec![q(1, 3)], vec![q(3, 2)]];
        let out = finite_dim_scan(sym(2), &pts, 6).unwrap();
        assert_eq!(out[0].verdict, Verdict::Finite);
        assert_eq!(out[0].dims, vec![1]);
        assert_eq!(out[1].dims, vec![1]);
        assert_eq!(out[1].per_tau[1].tau, "sign");
        assert_eq!(out[2].verdict, Verdict::Infinite);
        assert_eq!(out[3].dims, vec![3]);
    }

    #[test]
    fn s3_scan_at_one_third() {
        let out = finite_dim_scan(sym(3), &[vec![q(1, 3)], vec![q(1, 2)], vec![q(-2, 3)]], 6).unwrap();
        assert_eq!(out[0].dims, vec![1]);
        assert_ne!(out[1].verdict, Verdict::Finite);
        assert_eq!(out[2].dims, vec![4]);
    }

    #[test]
    fn singular_vectors_at_the_first_degenerate_degree() {
        let alg = build_cherednik(sym(3), Representation::Trivial).unwrap();
        let alg = alg.specialize(&BTreeMap::from([(0, Rational::one()), (1, q(1, 3))]));
        let check = singular_vector_check(&alg, 4).unwrap().unwrap();
        assert_eq!(check.degree, 1);
        assert_eq!(check.kernel_dim, 2);
        assert!(check.annihilated);
    }

    #[test]
    fn free_parameters_block_the_rank() {
        let alg = build_cherednik(sym(2), Representation::Trivial).unwrap();
        assert!(gram_rank(&contravariant_gram(&alg, 1).unwrap()).is_err());
        assert!(contravariant_gram(&alg.with_tau(Representation::Matrices(vec![RatMatrix::identity(2); 2])).unwrap(), 1).is_err());
    }
}
