//! Standard modules `M(τ) = ℚ[h] ⊗ τ` with `x` acting by multiplication, `W` diagonally and
//! `y` by Dunkl operators.

use super::CherednikAlgebra;
use crate::coeffs::poly::exponents_of_degree;
use crate::coeffs::{MPoly, ParamPoly, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::groups::{dot, FiniteSymplecticGroup};

/// Sign in front of the reflection sum of the Dunkl operator,
/// `D_y = t∂_y + DUNKL_SIGN · Σ_s c(s)⟨y, α_s⟩ (1 − s)/α_s ⊗ τ(s)`.
///
/// Fixed by [`solve_dunkl_sign`]; a regression test keeps the two in agreement.
pub const DUNKL_SIGN: i64 = -1;

/// A representation of `W` over ℚ.
#[derive(Clone, Debug, PartialEq)]
pub enum Representation {
    Trivial,
    /// `w ↦ det(w|_h)`.
    Sign,
    /// One matrix per group element, in group index order.
    Matrices(Vec<RatMatrix>),
}

impl Representation {
    pub fn dim(&self) -> usize {
        match self {
            Representation::Trivial | Representation::Sign => 1,
            Representation::Matrices(ms) => ms.first().map(|m| m.rows()).unwrap_or(0),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Representation::Trivial => "triv".into(),
            Representation::Sign => "sign".into(),
            Representation::Matrices(ms) => format!("matrix(dim {})", ms.first().map(|m| m.rows()).unwrap_or(0)),
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "triv" | "trivial" => Ok(Representation::Trivial),
            "sign" => Ok(Representation::Sign),
            other => Err(Error::Representation(format!("unknown representation {other:?}"))),
        }
    }

    pub fn matrix(&self, group: &FiniteSymplecticGroup, g: usize) -> RatMatrix {
        match self {
            Representation::Trivial => RatMatrix::identity(1),
            Representation::Sign => {
                let det = group.h_matrix(g).map(|a| a.determinant().expect("square")).unwrap_or_else(Rational::one);
                RatMatrix::from_rows(vec![vec![det]]).expect("1x1")
            }
            Representation::Matrices(ms) => ms[g].clone(),
        }
    }

    /// Check the homomorphism property on all pairs.
    pub fn validate(&self, group: &FiniteSymplecticGroup) -> Result<()> {
        let Representation::Matrices(ms) = self else { return Ok(()) };
        if ms.len() != group.order() {
            return Err(Error::Representation(format!("{} matrices for a group of order {}", ms.len(), group.order())));
        }
        let d = self.dim();
        if d == 0 || ms.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Representation("matrices must be square of one size".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if ms[a].mul(&ms[b])? != ms[group.mul(a, b)] {
                    return Err(Error::Representation(format!("not multiplicative on ({a}, {b})")));
                }
            }
        }
        Ok(())
    }
}

/// `Σ_u f_u ⊗ e_u`, one polynomial in `x_1..x_n` per basis vector of `τ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector {
    pub comps: Vec<MPoly<ParamPoly>>,
}

impl ModuleVector {
    pub fn zero(nvars: usize, tau_dim: usize) -> Self {
        ModuleVector { comps: vec![MPoly::zero(nvars); tau_dim] }
    }

    /// `x^exps ⊗ e_u`.
    pub fn basis(arity: usize, exps: Vec<u32>, tau_dim: usize, u: usize) -> Self {
        let n = exps.len();
        let mut v = Self::zero(n, tau_dim);
        v.comps[u] = MPoly::monomial(n, exps, ParamPoly::one(arity));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleVector { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ModuleVector { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn mul_coeff(&self, k: &ParamPoly) -> Self {
        ModuleVector { comps: self.comps.iter().map(|p| p.mul_coeff(k)).collect() }
    }

    /// Value at the origin, one coefficient per component.
    pub fn at_origin(&self) -> Vec<ParamPoly> {
        self.comps
            .iter()
            .map(|p| {
                let zero = vec![0; p.nvars()];
                p.coeff(&zero).cloned().unwrap_or_else(|| ParamPoly::zero(coeff_arity(p)))
            })
            .collect()
    }
}

fn coeff_arity(p: &MPoly<ParamPoly>) -> usize {
    p.terms().next().map(|(_, c)| c.arity()).unwrap_or(1)
}

fn substitution(alg: &CherednikAlgebra, g: usize) -> Vec<MPoly<ParamPoly>> {
    let n = alg.dim_h();
    let m = alg.group().element(g);
    let unit = ParamPoly::one(alg.arity());
    (0..n)
        .map(|j| {
            let col: Vec<Rational> = (0..n).map(|k| m[(k, j)].clone()).collect();
            MPoly::linear(&col, &unit)
        })
        .collect()
}

/// `w · f`: the substitution `x_j ↦ w(x_j)` on a polynomial.
pub fn act_on_poly(alg: &CherednikAlgebra, g: usize, f: &MPoly<ParamPoly>) -> MPoly<ParamPoly> {
    if g == alg.group().identity() || f.is_zero() {
        return f.clone();
    }
    f.substitute(&substitution(alg, g))
}

fn apply_tau(tau: &RatMatrix, comps: &[MPoly<ParamPoly>]) -> Vec<MPoly<ParamPoly>> {
    (0..tau.rows())
        .map(|v| {
            let mut acc = MPoly::zero(comps.first().map(|p| p.nvars()).unwrap_or(0));
            for (u, f) in comps.iter().enumerate() {
                let k = &tau[(v, u)];
                if !k.is_zero() {
                    acc = acc.add(&f.scale(k));
                }
            }
            acc
        })
        .collect()
}

/// `w · (f ⊗ u) = (w·f) ⊗ τ(w)u`.
pub fn act_group(alg: &CherednikAlgebra, g: usize, v: &ModuleVector) -> ModuleVector {
    let moved: Vec<_> = v.comps.iter().map(|f| act_on_poly(alg, g, f)).collect();
    ModuleVector { comps: apply_tau(&alg.tau().matrix(alg.group(), g), &moved) }
}

/// Multiplication by the linear form `Σ a_i x_i`.
pub fn act_x(alg: &CherednikAlgebra, a: &[Rational], v: &ModuleVector) -> ModuleVector {
    let l = MPoly::linear(a, &ParamPoly::one(alg.arity()));
    ModuleVector { comps: v.comps.iter().map(|f| f.mul(&l)).collect() }
}

fn dunkl_with_sign(alg: &CherednikAlgebra, y: &[Rational], v: &ModuleVector, sign: i64) -> Result<ModuleVector> {
    let t = alg.t();
    let mut comps: Vec<MPoly<ParamPoly>> = v.comps.iter().map(|f| f.directional_derivative(y).mul_coeff(&t)).collect();
    for r in alg.reflections() {
        let pair = dot(y, &r.alpha);
        if pair.is_zero() {
            continue;
        }
        let k = alg.c(r.orbit).scale(&(&pair * &Rational::from_int(sign)));
        if k.is_zero() {
            continue;
        }
        let quotients = v
            .comps
            .iter()
            .map(|f| f.sub(&act_on_poly(alg, r.element, f)).div_linear(&r.alpha))
            .collect::<Result<Vec<_>>>()?;
        let moved = apply_tau(&alg.tau().matrix(alg.group(), r.element), &quotients);
        for (c, m) in comps.iter_mut().zip(moved) {
            *c = c.add(&m.mul_coeff(&k));
        }
    }
    Ok(ModuleVector { comps })
}

/// The Dunkl operator `D_y` for `y = Σ y_a e_a ∈ h`.
pub fn dunkl_apply(alg: &CherednikAlgebra, y: &[Rational], v: &ModuleVector) -> Result<ModuleVector> {
    dunkl_with_sign(alg, y, v, DUNKL_SIGN)
}

/// Outcome of [`module_relation_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleRelationReport {
    pub max_degree: u32,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ModuleRelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn relation_check_with_sign(alg: &CherednikAlgebra, max_degree: u32, sign: i64) -> Result<ModuleRelationReport> {
    let n = alg.dim_h();
    let d_tau = alg.tau().dim();
    let dunkl = |a: usize, v: &ModuleVector| dunkl_with_sign(alg, &unit_vec(n, a), v, sign);
    let mut failures = Vec::new();
    let mut checked = 0;
    let gens = alg.group().generating_set();
    for d in 0..=max_degree {
        for exps in exponents_of_degree(n, d) {
            for u in 0..d_tau {
                let v = ModuleVector::basis(alg.arity(), exps.clone(), d_tau, u);
                let dv: Vec<ModuleVector> = (0..n).map(|a| dunkl(a, &v)).collect::<Result<_>>()?;
                for a in 0..n {
                    for b in 0..n {
                        // [D_a, x_b] = tδ_ab − Σ c(s)⟨x_b, α_s^∨⟩⟨y_a, α_s⟩ s
                        let xb = unit_vec(n, b);
                        let lhs = dunkl(a, &act_x(alg, &xb, &v))?.sub(&act_x(alg, &xb, &dv[a]));
                        let mut rhs = if a == b { v.mul_coeff(&alg.t()) } else { ModuleVector::zero(n, d_tau) };
                        for r in alg.reflections() {
                            let k = &r.coroot[b] * &r.alpha[a];
                            if !k.is_zero() {
                                rhs = rhs.sub(&act_group(alg, r.element, &v).mul_coeff(&alg.c(r.orbit).scale(&k)));
                            }
                        }
                        checked += 1;
                        if lhs != rhs {
                            failures.push(format!("[D_{a}, x_{b}] on degree {d}"));
                        }
                        if b < a {
                            checked += 1;
                            if dunkl(a, &dv[b])? != dunkl(b, &dv[a])? {
                                failures.push(format!("[D_{a}, D_{b}] on degree {d}"));
                            }
                        }
                    }
                }
                for &g in &gens {
                    let wv = act_group(alg, g, &v);
                    let m = alg.group().element(g);
                    for a in 0..n {
                        // w D_y = D_{w y} w, with w y read off the y-block
                        let wy: Vec<Rational> = (0..n).map(|k| m[(n + k, n + a)].clone()).collect();
                        checked += 1;
                        if act_group(alg, g, &dv[a]) != dunkl_with_sign(alg, &wy, &wv, sign)? {
                            failures.push(format!("w D_{a} w^-1 for element {g} on degree {d}"));
                        }
                        let wx: Vec<Rational> = (0..n).map(|k| m[(k, a)].clone()).collect();
                        checked += 1;
                        if act_group(alg, g, &act_x(alg, &unit_vec(n, a), &v)) != act_x(alg, &wx, &wv) {
                            failures.push(format!("w x_{a} w^-1 for element {g} on degree {d}"));
                        }
                    }
                }
            }
        }
    }
    Ok(ModuleRelationReport { max_degree, checked, failures })
}

/// Verify the defining relations of `H_{t,c}` as operators on `M(τ)` on every basis vector of
/// degree at most `max_degree`.
pub fn module_relation_check(alg: &CherednikAlgebra, max_degree: u32) -> Result<ModuleRelationReport> {
    relation_check_with_sign(alg, max_degree, DUNKL_SIGN)
}

/// The unique sign in `{+1, −1}` for which the Dunkl operators satisfy the relations through
/// degree 2, or an error if neither or both do.
pub fn solve_dunkl_sign(alg: &CherednikAlgebra) -> Result<i64> {
    let good: Vec<i64> = [1, -1]
        .into_iter()
        .map(|s| relation_check_with_sign(alg, 2, s).map(|r| (s, r.passed())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(s, ok)| ok.then_some(s))
        .collect();
    match good.as_slice() {
        [s] => Ok(*s),
        _ => Err(Error::Convention(format!("Dunkl sign undetermined: {good:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cherednik::build_cherednik;
    use crate::groups::SymmetricRep;

    fn sym(n: usize, tau: Representation) -> CherednikAlgebra {
        let g = Arc::new(FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection).unwrap());
        build_cherednik(g, tau).unwrap()
    }

    #[test]
    fn frozen_sign_matches_the_solved_sign() {
        assert_eq!(solve_dunkl_sign(&sym(2, Representation::Trivial)).unwrap(), DUNKL_SIGN);
        assert_eq!(solve_dunkl_sign(&sym(3, Representation::Sign)).unwrap(), DUNKL_SIGN);
    }

    #[test]
    fn relations_hold_on_low_degrees() {
        for tau in [Representation::Trivial, Representation::Sign] {
            let report = module_relation_check(&sym(3, tau), 3).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn rank_one_dunkl_on_monomials() {
        // D x^k = (t k − 2c[k odd]) x^{k−1} for the trivial representation
        let alg = sym(2, Representation::Trivial);
        let y = [Rational::one()];
        for k in 1..6u32 {
            let v = ModuleVector::basis(alg.arity(), vec![k], 1, 0);
            let got = dunkl_apply(&alg, &y, &v).unwrap();
            let two_c = if k % 2 == 1 { ParamPoly::c(2, 1).scale(&Rational::from_int(2)) } else { ParamPoly::zero(2) };
            let coeff = &ParamPoly::t(2).scale(&Rational::from_int(k as i64)) - &two_c;
            let want = ModuleVector::basis(alg.arity(), vec![k - 1], 1, 0).mul_coeff(&coeff);
            assert_eq!(got, want, "k = {k}");
        }
    }

    #[test]
    fn sign_representation_is_multiplicative() {
        let g = FiniteSymplecticGroup::symmetric(4, SymmetricRep::Reflection).unwrap();
        let sign = Representation::Sign;
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(sign.matrix(&g, a).mul(&sign.matrix(&g, b)).unwrap(), sign.matrix(&g, g.mul(a, b)));
            }
        }
        let bad = Representation::Matrices(vec![RatMatrix::identity(1); 3]);
        assert!(bad.validate(&g).is_err());
    }
}
