//! Sparse multivariate polynomials over an exact coefficient ring.

use std::collections::BTreeMap;
use std::fmt::Debug;

use super::Rational;
use crate::error::{Error, Result};

/// Coefficient arithmetic needed by [`MPoly`]. There is deliberately no `zero()`:
/// some coefficient types carry their own shape (for instance the variable arity of
/// [`super::ParamPoly`]), so fresh values are always built from existing ones.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

pub type Exponents = Vec<u32>;

/// Total degree of an exponent vector.
pub fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// A polynomial in `nvars` commuting variables, stored as exponent vector → coefficient
/// with no zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<R: Coeff> {
    nvars: usize,
    terms: BTreeMap<Exponents, R>,
}

impl<R: Coeff> MPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: R) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The linear form `sum_i coeffs[i] * x_i`, each coefficient given as `unit.scale(coeffs[i])`.
    pub fn linear(coeffs: &[Rational], unit: &R) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, a) in coeffs.iter().enumerate() {
            if !a.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, unit.scale(a));
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&R> {
        self.terms.get(exps)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| degree(e)).max()
    }

    pub fn add_term(&mut self, exps: Exponents, c: R) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    /// Panics on arity mismatch; use [`MPoly::try_add`] at API boundaries.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("polynomial arity mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("polynomial arity mismatch")
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_coeffs(|c| c.scale(q))
    }

    pub fn mul_coeff(&self, k: &R) -> Self {
        self.map_coeffs(|c| c.mul(k))
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Keep only the terms of total degree below `order`.
    pub fn truncate(&self, order: u32) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| degree(e) < order)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| degree(e) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c.scale(&Rational::from_int(e[i] as i64)));
            }
        }
        out
    }

    /// Directional derivative `sum_i v[i] d/dx_i`.
    pub fn directional_derivative(&self, v: &[Rational]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (i, a) in v.iter().enumerate() {
            if !a.is_zero() {
                out = out.add(&self.derivative(i).scale(a));
            }
        }
        out
    }

    /// Substitute each variable `x_j` by the polynomial `images[j]` (an algebra endomorphism).
    pub fn substitute(&self, images: &[MPoly<R>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let n = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = MPoly::zero(n);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(n, c.clone());
            for (j, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.mul(&images[j]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact division by a nonzero linear form `sum_i l[i] x_i`; fails if a remainder is left.
    pub fn div_linear(&self, l: &[Rational]) -> Result<Self> {
        let pivot = l
            .iter()
            .position(|a| !a.is_zero())
            .ok_or_else(|| Error::InexactDivision("division by the zero form".into()))?;
        let inv = l[pivot].recip()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        loop {
            // pick the term with the largest exponent in the pivot variable
            let top = rem
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| a[pivot].cmp(&b[pivot]).then_with(|| b.cmp(a)))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = top else { break };
            if e[pivot] == 0 {
                return Err(Error::InexactDivision("nonzero remainder".into()));
            }
            let mut qe = e.clone();
            qe[pivot] -= 1;
            let qc = c.scale(&inv);
            for (i, a) in l.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut me = qe.clone();
                me[i] += 1;
                rem.add_term(me, qc.scale(a).neg());
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }
}

/// All exponent vectors with `nvars` entries and total degree exactly `d`, in lexicographic order.
pub fn exponents_of_degree(nvars: usize, d: u32) -> Vec<Exponents> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n - 1, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn linear_division_is_exact() {
        // (x0^2 - x1^2) / (x0 - x1) = x0 + x1
        let mut f = MPoly::zero(2);
        f.add_term(vec![2, 0], q(1));
        f.add_term(vec![0, 2], q(-1));
        let got = f.div_linear(&[q(1), q(-1)]).unwrap();
        let mut want = MPoly::zero(2);
        want.add_term(vec![1, 0], q(1));
        want.add_term(vec![0, 1], q(1));
        assert_eq!(got, want);
        let mut g = MPoly::zero(2);
        g.add_term(vec![1, 0], q(1));
        g.add_term(vec![0, 0], q(1));
        assert!(g.div_linear(&[q(1), q(0)]).is_err());
    }

    #[test]
    fn exponent_enumeration_counts() {
        assert_eq!(exponents_of_degree(2, 3).len(), 4);
        assert_eq!(exponents_of_degree(4, 2).len(), 10);
        assert_eq!(exponents_of_degree(0, 0).len(), 1);
    }

    #[test]
    fn derivative_of_power() {
        let f = MPoly::monomial(1, vec![3], q(2));
        assert_eq!(f.derivative(0), MPoly::monomial(1, vec![2], q(6)));
    }
}
