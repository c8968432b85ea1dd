use std::collections::BTreeMap;
use std::fmt;

use super::poly::{degree, Coeff, Exponents, MPoly};
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial in the algebra parameters `t = c0, c1, ..., cr`.
///
/// Variable 0 is always `t`; variable `i >= 1` is `c_i`. The arity (`r + 1`) is fixed per
/// algebra instance and mixing arities is a structural error.
#[derive(Clone, PartialEq)]
pub struct ParamPoly(MPoly<Rational>);

impl ParamPoly {
    pub fn zero(arity: usize) -> Self {
        ParamPoly(MPoly::zero(arity))
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, q: Rational) -> Self {
        ParamPoly(MPoly::constant(arity, q))
    }

    /// The variable with the given index (0 is `t`).
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index out of range");
        let mut e = vec![0; arity];
        e[index] = 1;
        ParamPoly(MPoly::monomial(arity, e, Rational::one()))
    }

    pub fn t(arity: usize) -> Self {
        Self::var(arity, 0)
    }

    /// `c_i` for `i >= 1`.
    pub fn c(arity: usize, i: usize) -> Self {
        assert!(i >= 1);
        Self::var(arity, i)
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = MPoly::zero(arity);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        ParamPoly(p)
    }

    pub fn arity(&self) -> usize {
        self.0.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.0.terms()
    }

    pub fn as_mpoly(&self) -> &MPoly<Rational> {
        &self.0
    }

    /// The constant term (coefficient of the empty monomial).
    pub fn constant_term(&self) -> Rational {
        let zero = vec![0; self.arity()];
        self.0.coeff(&zero).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(q)` when the polynomial is the constant `q`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.0.num_terms() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.0.terms().next().unwrap();
                (degree(e) == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(ParamPoly(self.0.try_add(&other.0)?))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(ParamPoly(self.0.try_mul(&other.0)?))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ParamPoly(self.0.scale(q))
    }

    /// Exact quotient by `t`.
    pub fn div_t(&self) -> Result<Self> {
        let mut out = MPoly::zero(self.arity());
        for (e, c) in self.0.terms() {
            if e[0] == 0 {
                return Err(Error::NotDivisibleByT);
            }
            let mut e2 = e.clone();
            e2[0] -= 1;
            out.add_term(e2, c.clone());
        }
        Ok(ParamPoly(out))
    }

    /// Substitute the given variables by rationals; unnamed variables stay symbolic.
    pub fn specialize(&self, values: &BTreeMap<usize, Rational>) -> Self {
        if values.is_empty() {
            return self.clone();
        }
        let mut out = MPoly::zero(self.arity());
        for (e, c) in self.0.terms() {
            let mut coeff = c.clone();
            let mut e2 = e.clone();
            for (&var, val) in values {
                if var < e2.len() && e2[var] > 0 {
                    coeff = &coeff * &val.pow(e2[var]);
                    e2[var] = 0;
                }
            }
            out.add_term(e2, coeff);
        }
        ParamPoly(out)
    }

    /// The same polynomial viewed with `extra` additional trailing variables.
    pub fn extend_arity(&self, extra: usize) -> Self {
        let arity = self.arity() + extra;
        Self::from_terms(
            arity,
            self.0.terms().map(|(e, c)| {
                let mut e2 = e.clone();
                e2.resize(arity, 0);
                (e2, c.clone())
            }),
        )
    }

    /// Multiply every monomial by `var^(k * weight(monomial))`, where the weight is the sum of
    /// `weights[i] * e[i]`: the substitution `x_i -> var^weights[i] x_i`.
    pub fn rescale_by_var(&self, var: usize, weights: &[u32]) -> Self {
        Self::from_terms(
            self.arity(),
            self.0.terms().map(|(e, c)| {
                let mut e2 = e.clone();
                let w: u32 = e.iter().zip(weights).map(|(a, b)| a * b).sum();
                e2[var] += w;
                (e2, c.clone())
            }),
        )
    }

    /// Multiply by a monomial given as an exponent vector.
    pub fn shift(&self, exps: &[u32]) -> Self {
        Self::from_terms(
            self.arity(),
            self.0.terms().map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone())),
        )
    }

    /// Weighted degree of every monomial, `None` for zero; used by homogeneity checks.
    pub fn weighted_degrees(&self, weights: &[u32]) -> Vec<u32> {
        self.0.terms().map(|(e, _)| e.iter().zip(weights).map(|(a, b)| a * b).sum()).collect()
    }

    /// Terms sorted for display: graded lexicographic, larger first, with `t < c1 < ... < cr`.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.0.terms().collect();
        v.sort_by(|(a, _), (b, _)| grlex_cmp(b, a));
        v
    }

    /// Canonical term list `[[exponents, "p/q"], ...]` for reports.
    pub fn to_term_list(&self) -> Vec<(Exponents, Rational)> {
        self.sorted_terms().into_iter().map(|(e, c)| (e.clone(), c.clone())).collect()
    }
}

/// Graded lexicographic comparison where later variables are more significant.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    degree(a).cmp(&degree(b)).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

pub fn param_name(index: usize) -> String {
    if index == 0 {
        "t".to_string()
    } else {
        format!("c{index}")
    }
}

pub(crate) fn format_monomial(e: &[u32], name: impl Fn(usize) -> String) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(name(i)),
            _ => parts.push(format!("{}^{}", name(i), k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.sorted_terms() {
            let mono = format_monomial(e, param_name);
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl Coeff for ParamPoly {
    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        ParamPoly(self.0.add(&other.0))
    }
    fn mul(&self, other: &Self) -> Self {
        ParamPoly(self.0.mul(&other.0))
    }
    fn neg(&self) -> Self {
        ParamPoly(self.0.neg())
    }
    fn scale(&self, q: &Rational) -> Self {
        ParamPoly::scale(self, q)
    }
}

impl std::ops::Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        Coeff::add(self, rhs)
    }
}

impl std::ops::Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        Coeff::sub(self, rhs)
    }
}

impl std::ops::Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        Coeff::mul(self, rhs)
    }
}

impl std::ops::Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        Coeff::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const AR: usize = 2;

    fn t() -> ParamPoly {
        ParamPoly::t(AR)
    }
    fn c1() -> ParamPoly {
        ParamPoly::c(AR, 1)
    }
    fn k(n: i64, d: i64) -> ParamPoly {
        ParamPoly::constant(AR, Rational::new(n, d))
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&(&t() + &c1()) + &(-&t()), c1());
        assert_eq!(&ParamPoly::zero(AR) + &c1(), c1());
        assert_eq!(&(&k(2, 3) * &c1()) + &(&k(1, 3) * &c1()), c1());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!((&t() * &c1()).to_string(), "t*c1");
        let p = &(&t() + &k(1, 1)) * &(&t() - &k(1, 1));
        assert_eq!(p, &(&t() * &t()) - &k(1, 1));
        assert!((&p * &ParamPoly::zero(AR)).is_zero());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = ParamPoly::t(2);
        let b = ParamPoly::t(3);
        assert!(matches!(a.try_add(&b), Err(Error::ArityMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn div_t_examples() {
        let p = &(&t() * &t()) + &(&t() * &c1());
        assert_eq!(p.div_t().unwrap(), &t() + &c1());
        assert_eq!(t().div_t().unwrap(), ParamPoly::one(AR));
        assert_eq!(c1().div_t(), Err(Error::NotDivisibleByT));
    }

    #[test]
    fn specialize_examples() {
        let p = &t() - &(&k(2, 1) * &c1());
        let vals = BTreeMap::from([(0, Rational::one()), (1, Rational::new(1, 2))]);
        assert!(p.specialize(&vals).is_zero());
        assert_eq!(p.specialize(&BTreeMap::new()), p);
        assert!((&t() * &c1()).specialize(&BTreeMap::from([(0, Rational::zero())])).is_zero());
    }

    #[test]
    fn display_is_graded_lex() {
        let p = &(&(&t() * &t()) + &c1()) + &k(-1, 2);
        assert_eq!(p.to_string(), "t^2 + c1 - 1/2");
    }

    fn arb_poly() -> impl Strategy<Value = ParamPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..5).prop_map(|ts| {
            ParamPoly::from_terms(AR, ts.into_iter().map(|((a, b), n, d)| (vec![a, b], Rational::new(n, d))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn div_t_inverts_mul_t(p in arb_poly()) {
            prop_assert_eq!((&t() * &p).div_t().unwrap(), p);
        }

        #[test]
        fn specialization_is_a_homomorphism(a in arb_poly(), b in arb_poly(), v in -3i64..4) {
            let vals = BTreeMap::from([(1usize, Rational::new(v, 2))]);
            prop_assert_eq!((&a * &b).specialize(&vals), &a.specialize(&vals) * &b.specialize(&vals));
        }
    }
}
