//! The centralizer algebra `Z(G, H, A) = End_A(Fu_H(G, A))` for finite `H ⊂ G` and an algebra
//! `A ⊇ ℚH`, realized as `k × k` matrices over `A` with `k = |H\G|`.
//!
//! A function `f ∈ Fu_H(G, A)` is the column of its values at the coset representatives
//! `g_1, .., g_k`; operators act by matrices on the left.

mod algebra;
mod constructions;

pub use algebra::{check_automorphisms, Algebra, CoefficientAlgebra, FdAlgebra, FdBimodule};
pub use constructions::{
    corner_maps_roundtrip, corner_recover, derivation_lift, DerivationLift, equivariant_action, selftest, smash_iso, BimoduleTransport,
    CentralizerSelftest, EquivariantActions, MatrixUnitImages, MatrixUnitReport, MoritaWitness, SmashIsoReport,
};

use std::sync::Arc;

use crate::coeffs::Rational;
use crate::error::{Error, Result};
use crate::groups::FiniteSymplecticGroup;

/// A `k × k` matrix over the coefficient algebra, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralizerElement<E> {
    pub k: usize,
    pub entries: Vec<E>,
}

impl<E: Clone> CentralizerElement<E> {
    pub fn entry(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.k + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.entries[i * self.k + j]
    }

    pub fn map<F: Clone>(&self, f: impl Fn(&E) -> F) -> CentralizerElement<F> {
        CentralizerElement { k: self.k, entries: self.entries.iter().map(f).collect() }
    }
}

#[derive(Clone, Debug)]
pub struct Centralizer<A: CoefficientAlgebra> {
    group: Arc<FiniteSymplecticGroup>,
    subgroup: Vec<usize>,
    in_subgroup: Vec<bool>,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
    /// `g = factor[g] · reps[coset_of[g]]` with `factor[g] ∈ H`.
    factor: Vec<usize>,
    algebra: A,
}

/// Build `Z(G, H, A)`. Each right coset `Hg` is represented by its element of smallest index,
/// so the coset of `H` itself comes first with representative `1`.
pub fn build_centralizer<A: CoefficientAlgebra>(
    group: Arc<FiniteSymplecticGroup>,
    subgroup: &[usize],
    algebra: A,
) -> Result<Centralizer<A>> {
    if !group.is_subgroup(subgroup) {
        return Err(Error::NotSubgroup("not a subgroup".into()));
    }
    let order = group.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for g in 0..order {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(g);
        for &h in subgroup {
            coset_of[group.mul(h, g)] = idx;
        }
    }
    build_with_reps(group, subgroup, algebra, reps)
}

/// Build `Z(G, H, A)` with explicitly chosen coset representatives, one per right coset.
pub fn build_with_reps<A: CoefficientAlgebra>(
    group: Arc<FiniteSymplecticGroup>,
    subgroup: &[usize],
    algebra: A,
    reps: Vec<usize>,
) -> Result<Centralizer<A>> {
    if !group.is_subgroup(subgroup) {
        return Err(Error::NotSubgroup("not a subgroup".into()));
    }
    let order = group.order();
    let mut in_subgroup = vec![false; order];
    for &h in subgroup {
        in_subgroup[h] = true;
    }
    let mut coset_of = vec![usize::MAX; order];
    let mut factor = vec![usize::MAX; order];
    for (idx, &r) in reps.iter().enumerate() {
        for &h in subgroup {
            let g = group.mul(h, r);
            if coset_of[g] != usize::MAX {
                return Err(Error::InvalidArgument("two representatives share a coset".into()));
            }
            coset_of[g] = idx;
            factor[g] = h;
        }
    }
    if coset_of.contains(&usize::MAX) {
        return Err(Error::InvalidArgument("representatives miss a coset".into()));
    }
    let mut subgroup = subgroup.to_vec();
    subgroup.sort_unstable();
    Ok(Centralizer { group, subgroup, in_subgroup, reps, coset_of, factor, algebra })
}

impl<A: CoefficientAlgebra> Centralizer<A> {
    pub fn group(&self) -> &FiniteSymplecticGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteSymplecticGroup> {
        self.group.clone()
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn contains(&self, g: usize) -> bool {
        self.in_subgroup[g]
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    /// Number of cosets.
    pub fn size(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Index of the coset `Hg`.
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    /// The `h ∈ H` with `g = h · g_{coset(g)}`.
    pub fn coset_factor(&self, g: usize) -> usize {
        self.factor[g]
    }

    /// Dimension over ℚ when the coefficient algebra is spanned by a basis.
    pub fn rational_dim(&self) -> usize {
        self.size() * self.size() * self.algebra.spanning_set().len()
    }

    /// The element `E_{ij} ⊗ a`.
    pub fn matrix_unit(&self, i: usize, j: usize, a: &A::Elem) -> CentralizerElement<A::Elem> {
        let mut m = self.zero_element();
        *m.entry_mut(i, j) = a.clone();
        m
    }

    pub fn zero_element(&self) -> CentralizerElement<A::Elem> {
        let k = self.size();
        CentralizerElement { k, entries: vec![self.algebra.zero(); k * k] }
    }

    pub fn one_element(&self) -> CentralizerElement<A::Elem> {
        self.diagonal(&self.algebra.one())
    }

    fn diagonal(&self, a: &A::Elem) -> CentralizerElement<A::Elem> {
        let mut m = self.zero_element();
        for i in 0..self.size() {
            *m.entry_mut(i, i) = a.clone();
        }
        m
    }

    /// `(g.f)(g_1) = f(g_1 g)`: row `i` has `ι(h)` in column `j` where `g_i g = h g_j`.
    pub fn embed_group(&self, g: usize) -> CentralizerElement<A::Elem> {
        let mut m = self.zero_element();
        for (i, &r) in self.reps.iter().enumerate() {
            let p = self.group.mul(r, g);
            *m.entry_mut(i, self.coset_of[p]) = self.algebra.embed_subgroup(self.factor[p]);
        }
        m
    }

    /// `diag(a, .., a)` for `a ∈ A^H`; invariance is checked against conjugation by `ι(H)`.
    pub fn embed_invariant(&self, a: &A::Elem) -> Result<CentralizerElement<A::Elem>> {
        for &h in &self.subgroup {
            let ih = self.algebra.embed_subgroup(h);
            if self.algebra.mul(&ih, a) != self.algebra.mul(a, &ih) {
                return Err(Error::NotInvariant);
            }
        }
        Ok(self.diagonal(a))
    }

    /// The projection `e(x)` onto functions supported on coset `x`.
    pub fn idempotent(&self, x: usize) -> Result<CentralizerElement<A::Elem>> {
        if x >= self.size() {
            return Err(Error::UnknownCoset(x));
        }
        Ok(self.matrix_unit(x, x, &self.algebra.one()))
    }

    /// Index of the coset `x g`.
    pub fn coset_times(&self, x: usize, g: usize) -> usize {
        self.coset_of[self.group.mul(self.reps[x], g)]
    }

    /// Average over `H` of `ι(h) a ι(h)^{-1}`.
    pub fn reynolds(&self, a: &A::Elem) -> A::Elem {
        let alg = &self.algebra;
        let mut acc = alg.zero();
        for &h in &self.subgroup {
            let conj = alg.mul(&alg.mul(&alg.embed_subgroup(h), a), &alg.embed_subgroup(self.group.inv(h)));
            acc = alg.add(&acc, &conj);
        }
        alg.scale(&acc, &Rational::new(1, self.subgroup.len() as i64))
    }

    // matrix arithmetic

    pub fn add(&self, a: &CentralizerElement<A::Elem>, b: &CentralizerElement<A::Elem>) -> CentralizerElement<A::Elem> {
        CentralizerElement { k: a.k, entries: a.entries.iter().zip(&b.entries).map(|(x, y)| self.algebra.add(x, y)).collect() }
    }

    pub fn sub(&self, a: &CentralizerElement<A::Elem>, b: &CentralizerElement<A::Elem>) -> CentralizerElement<A::Elem> {
        CentralizerElement { k: a.k, entries: a.entries.iter().zip(&b.entries).map(|(x, y)| self.algebra.sub(x, y)).collect() }
    }

    pub fn scale(&self, a: &CentralizerElement<A::Elem>, q: &Rational) -> CentralizerElement<A::Elem> {
        a.map(|x| self.algebra.scale(x, q))
    }

    pub fn mul(&self, a: &CentralizerElement<A::Elem>, b: &CentralizerElement<A::Elem>) -> CentralizerElement<A::Elem> {
        let k = a.k;
        let alg = &self.algebra;
        let mut out = self.zero_element();
        for i in 0..k {
            for l in 0..k {
                let x = a.entry(i, l);
                if alg.is_zero(x) {
                    continue;
                }
                for j in 0..k {
                    let y = b.entry(l, j);
                    if alg.is_zero(y) {
                        continue;
                    }
                    let e = out.entry_mut(i, j);
                    *e = alg.add(e, &alg.mul(x, y));
                }
            }
        }
        out
    }

    /// Left multiplication by `a ∈ A` on every entry.
    pub fn left_scalar(&self, a: &A::Elem, m: &CentralizerElement<A::Elem>) -> CentralizerElement<A::Elem> {
        m.map(|x| self.algebra.mul(a, x))
    }

    pub fn is_zero_element(&self, a: &CentralizerElement<A::Elem>) -> bool {
        a.entries.iter().all(|x| self.algebra.is_zero(x))
    }
}

impl<A: CoefficientAlgebra> Algebra for Centralizer<A> {
    type Elem = CentralizerElement<A::Elem>;

    fn zero(&self) -> Self::Elem {
        self.zero_element()
    }

    fn one(&self) -> Self::Elem {
        self.one_element()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Centralizer::add(self, a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.map(|x| self.algebra.neg(x))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Centralizer::mul(self, a, b)
    }

    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem {
        Centralizer::scale(self, a, q)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.is_zero_element(a)
    }

    fn spanning_set(&self) -> Vec<Self::Elem> {
        let basis = self.algebra.spanning_set();
        let k = self.size();
        let mut out = Vec::with_capacity(k * k * basis.len());
        for i in 0..k {
            for j in 0..k {
                for b in &basis {
                    out.push(self.matrix_unit(i, j, b));
                }
            }
        }
        out
    }

    fn truncation_order(&self) -> Option<u32> {
        self.algebra.truncation_order()
    }
}

#[cfg(test)]
mod tests;
