//! Completions of rational Cherednik algebras at a point `b ∈ h`, truncated in the x-adic
//! filtration, and the isomorphism with a centralizer algebra over the slice algebra of the
//! stabilizer `W_b`.
//!
//! Elements of the truncated completion `H̲^{∧0}` are PBW normal forms of the slice algebra
//! with every monomial of x-degree `≥ N` dropped. Each element remembers the order `N` up to
//! which it is exact; a product `a·b` is exact up to `min(N_a, N_b − ydeg(a))` because moving
//! a `y` past an `x` lowers the x-degree by one.

mod iso;

pub use iso::{
    be_iso, be_iso_for, corner_extract, equivariance_check, generic_base_point, mod_param_baseline, verify_homomorphism,
    BEIsoData, BaselineReport, EquivarianceReport, HomomorphismReport, RelationCheck,
};

use std::collections::BTreeMap;

use num_integer::binomial;

use crate::centralizer::{Algebra, CoefficientAlgebra};
use crate::cherednik::CherednikAlgebra;
use crate::coeffs::poly::exponents_of_degree;
use crate::coeffs::{ParamPoly, Rational};
use crate::error::{Error, Result};
use crate::sra::SRAElement;

/// An element of the slice algebra known modulo x-degree `order`.
#[derive(Clone, Debug)]
pub struct TruncatedCompletionElement {
    pub order: u32,
    pub value: SRAElement,
}

impl TruncatedCompletionElement {
    /// Drop every term of x-degree `≥ m` (the order becomes `min(order, m)`).
    pub fn truncate(&self, m: u32) -> Self {
        let order = self.order.min(m);
        TruncatedCompletionElement { order, value: truncate_value(&self.value, order) }
    }

    /// Largest total y-degree of a term.
    pub fn y_degree(&self) -> u32 {
        let n = self.value.dim() / 2;
        self.value.terms().map(|((e, _), _)| e[n..].iter().sum()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn mul_param(&self, p: &ParamPoly) -> Self {
        TruncatedCompletionElement { order: self.order, value: self.value.mul_param(p) }
    }

    pub fn specialize(&self, values: &BTreeMap<usize, Rational>) -> Self {
        TruncatedCompletionElement { order: self.order, value: self.value.specialize(values) }
    }
}

/// Equality as far as both sides are known, i.e. modulo the smaller order.
impl PartialEq for TruncatedCompletionElement {
    fn eq(&self, other: &Self) -> bool {
        let m = self.order.min(other.order);
        truncate_value(&self.value, m) == truncate_value(&other.value, m)
    }
}

fn x_degree(e: &[u32]) -> u32 {
    e[..e.len() / 2].iter().sum()
}

fn truncate_value(v: &SRAElement, order: u32) -> SRAElement {
    let mut out = SRAElement::zero(v.dim(), v.arity());
    for ((e, g), c) in v.terms() {
        if x_degree(e) < order {
            out.add_term(e.clone(), *g, c.clone());
        }
    }
    out
}

/// The slice algebra `H̲` of a subgroup `W̲ ⊂ W` completed at `0` and truncated at x-order `N`,
/// as a coefficient algebra for `Z(W, W̲, ·)`.
#[derive(Clone, Debug)]
pub struct TruncatedCompletion {
    slice: CherednikAlgebra,
    /// Index in `W̲` of each element of `W`, `None` outside `W̲`.
    local_index: Vec<Option<usize>>,
    order: u32,
}

impl TruncatedCompletion {
    /// `ambient_of[i]` is the index in `W` of element `i` of the slice group.
    pub fn new(slice: CherednikAlgebra, ambient_of: &[usize], ambient_order: usize, order: u32) -> Result<Self> {
        if ambient_of.len() != slice.group().order() {
            return Err(Error::Dimension("one ambient index per slice group element is required".into()));
        }
        let mut local_index = vec![None; ambient_order];
        for (i, &g) in ambient_of.iter().enumerate() {
            local_index[g] = Some(i);
        }
        Ok(TruncatedCompletion { slice, local_index, order })
    }

    pub fn slice(&self) -> &CherednikAlgebra {
        &self.slice
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Wrap a slice algebra element, truncating at the full order.
    pub fn element(&self, value: SRAElement) -> TruncatedCompletionElement {
        TruncatedCompletionElement { order: self.order, value: truncate_value(&value, self.order) }
    }

    pub fn constant(&self, p: ParamPoly) -> TruncatedCompletionElement {
        self.element(self.slice.sra().scalar(p))
    }

    /// `x̲_α` for `α = Σ α_k x_k`.
    pub fn linear_x(&self, alpha: &[Rational]) -> TruncatedCompletionElement {
        let n = self.slice.dim_h();
        let mut v = vec![Rational::zero(); 2 * n];
        v[..n].clone_from_slice(alpha);
        self.element(self.slice.sra().vector(&v))
    }

    /// `y̲_a` for `a = Σ a_k y_k`.
    pub fn linear_y(&self, a: &[Rational]) -> TruncatedCompletionElement {
        let n = self.slice.dim_h();
        let mut v = vec![Rational::zero(); 2 * n];
        v[n..].clone_from_slice(a);
        self.element(self.slice.sra().vector(&v))
    }

    /// `(β + x̲_α)^{-1} = Σ_{k<N} (−x̲_α)^k / β^{k+1}`, exact to order `N`.
    pub fn inverse_shifted_linear(&self, alpha: &[Rational], beta: &Rational) -> Result<TruncatedCompletionElement> {
        if beta.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let binv = beta.recip()?;
        let step = self.scale(&self.linear_x(alpha), &-&binv);
        let mut power = self.scale(&self.one(), &binv);
        let mut acc = self.zero();
        for _ in 0..self.order {
            acc = self.add(&acc, &power);
            power = self.mul(&power, &step);
        }
        Ok(acc)
    }

    /// The group element of `W̲` given by its index in `W`.
    pub fn group_element(&self, g: usize) -> Result<TruncatedCompletionElement> {
        let local = self.local_index.get(g).copied().flatten().ok_or_else(|| Error::NotSubgroup(format!("element {g} is not in the slice group")))?;
        Ok(self.element(self.slice.sra().group_element(local)))
    }

    /// Move an x/y-polynomial of another algebra on the same `V` into the slice algebra.
    pub fn polynomial(&self, a: &SRAElement) -> Result<TruncatedCompletionElement> {
        let mut out = self.slice.sra().zero();
        for ((e, g), c) in a.terms() {
            if *g != 0 {
                return Err(Error::InvalidArgument("element has a group part".into()));
            }
            out.add_term(e.clone(), 0, c.clone());
        }
        Ok(self.element(out))
    }
}

impl Algebra for TruncatedCompletion {
    type Elem = TruncatedCompletionElement;

    fn zero(&self) -> Self::Elem {
        self.element(self.slice.sra().zero())
    }

    fn one(&self) -> Self::Elem {
        self.element(self.slice.sra().one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let order = a.order.min(b.order);
        TruncatedCompletionElement { order, value: truncate_value(&a.value.add(&b.value), order) }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        TruncatedCompletionElement { order: a.order, value: a.value.neg() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let order = a.order.min(b.order.saturating_sub(a.y_degree()));
        let left = truncate_value(&a.value, order);
        TruncatedCompletionElement { order, value: truncate_value(&self.slice.sra().mul(&left, &b.value), order) }
    }

    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem {
        TruncatedCompletionElement { order: a.order, value: a.value.scale(q) }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.value.is_zero()
    }

    /// Monomials `x^m y^k u` with `|m| < N`, `|k| ≤ 1` and `u ∈ W̲`.
    fn spanning_set(&self) -> Vec<Self::Elem> {
        let n = self.slice.dim_h();
        let sra = self.slice.sra();
        let mut out = Vec::new();
        for d in 0..self.order {
            for m in exponents_of_degree(n, d) {
                for k in std::iter::once(None).chain((0..n).map(Some)) {
                    for u in 0..self.slice.group().order() {
                        let mut e = m.clone();
                        e.resize(2 * n, 0);
                        if let Some(k) = k {
                            e[n + k] = 1;
                        }
                        out.push(self.element(sra.basis_element(e, u)));
                    }
                }
            }
        }
        out
    }

    fn truncation_order(&self) -> Option<u32> {
        Some(self.order)
    }
}

impl CoefficientAlgebra for TruncatedCompletion {
    fn embed_subgroup(&self, h: usize) -> Self::Elem {
        self.group_element(h).expect("element of the slice group")
    }
}

/// Shift the x-variables by `b`: every `x_α` becomes `x_α + ⟨b, α⟩`, y-variables and group parts
/// stay. On PBW normal forms this is a substitution in the leading x-monomial. It is an algebra
/// automorphism when every group element occurring fixes `b`.
pub fn recenter(a: &SRAElement, b: &[Rational]) -> Result<SRAElement> {
    let n = a.dim() / 2;
    if b.len() != n {
        return Err(Error::Dimension(format!("base point has {} coordinates, expected {n}", b.len())));
    }
    let mut out = SRAElement::zero(a.dim(), a.arity());
    for ((e, g), c) in a.terms() {
        // expand Π (x_i + b_i)^{e_i}
        let mut partial: Vec<(Vec<u32>, Rational)> = vec![(Vec::new(), Rational::one())];
        for i in 0..n {
            let mut next = Vec::new();
            for (m, q) in &partial {
                for k in 0..=e[i] {
                    let coeff = &Rational::from_int(binomial(e[i] as i64, k as i64)) * &b[i].pow(e[i] - k);
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut m2 = m.clone();
                    m2.push(k);
                    next.push((m2, q * &coeff));
                }
            }
            partial = next;
        }
        for (mut m, q) in partial {
            m.extend_from_slice(&e[n..]);
            out.add_term(m, *g, c.scale(&q));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
