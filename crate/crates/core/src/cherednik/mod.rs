//! Rational Cherednik algebras `H_{t,c}(h, W)` for `W ⊂ GL(h)` rational, realized inside the
//! PBW engine on `V = h* ⊕ h`, together with the Dunkl realization of standard modules.

mod gram;
mod module;
mod typea;

pub use gram::{contravariant_gram, finite_dim_scan, gram_rank, singular_vector_check, ScanPoint, TauScan, Verdict};
pub use module::{dunkl_apply, module_relation_check, solve_dunkl_sign, ModuleVector, Representation, DUNKL_SIGN};
pub use typea::{leaf_support_label, typea_report, LeafLabel, TypeAReport};

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeffs::matrix::row_space_basis;
use crate::coeffs::{ParamPoly, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::groups::{dot, symplectic_reflections, FiniteSymplecticGroup};
use crate::sra::{SRAElement, SRAlgebra};

/// Root data of one reflection: `α_s ∈ h*` and `α_s^∨ ∈ h` with `⟨α_s, α_s^∨⟩ = 2`, in the
/// coordinates `x_1..x_n` (for `h*`) and `y_1..y_n` (for `h`).
#[derive(Clone, Debug, PartialEq)]
pub struct CherednikReflection {
    pub element: usize,
    pub orbit: usize,
    pub alpha: Vec<Rational>,
    pub coroot: Vec<Rational>,
    /// Nontrivial eigenvalue of `s` on `h*`.
    pub lambda: Rational,
}

#[derive(Clone, Debug)]
pub struct CherednikAlgebra {
    group: Arc<FiniteSymplecticGroup>,
    dim_h: usize,
    reflections: Vec<CherednikReflection>,
    mu: Vec<Rational>,
    tau: Representation,
    /// Parameter index (`c_k` is index `k`) attached to each reflection orbit.
    param_of_orbit: Vec<usize>,
    sra: SRAlgebra,
}

/// Root data for every reflection of a doubled group, checking `λ_s = −1`.
pub fn root_data(group: &FiniteSymplecticGroup) -> Result<Vec<CherednikReflection>> {
    let n = group.dim_h().ok_or_else(|| Error::RootData("group does not act on h ⊕ h*".into()))?;
    let refl = symplectic_reflections(group);
    let id = RatMatrix::identity(n);
    refl.reflections
        .iter()
        .map(|r| {
            let m = group.element(r.element);
            let x_block = sub_block(m, 0, n);
            let y_block = sub_block(m, n, n);
            let dx = x_block.sub(&id);
            let dy = y_block.sub(&id);
            if dx.rank() != 1 || dy.rank() != 1 {
                return Err(Error::RootData(format!("element {} is not a reflection of h", r.element)));
            }
            let lambda = &x_block.trace() - &Rational::from_int(n as i64 - 1);
            if lambda != Rational::from_int(-1) {
                return Err(Error::RootData(format!("eigenvalue {lambda} is not -1")));
            }
            let alpha = row_space_basis(&dx.transpose().to_rows()).remove(0);
            let beta = row_space_basis(&dy.transpose().to_rows()).remove(0);
            let pairing = dot(&alpha, &beta);
            if pairing.is_zero() {
                return Err(Error::RootData("root and coroot pair to zero".into()));
            }
            let scale = &Rational::from_int(2) * &pairing.recip()?;
            let coroot: Vec<Rational> = beta.iter().map(|b| b * &scale).collect();
            // α_s vanishes on the reflecting hyperplane of h
            for fixed in dy.nullspace() {
                if !dot(&alpha, &fixed).is_zero() {
                    return Err(Error::RootData("root does not vanish on the fixed hyperplane".into()));
                }
            }
            Ok(CherednikReflection { element: r.element, orbit: r.orbit, alpha, coroot, lambda })
        })
        .collect()
}

fn sub_block(m: &RatMatrix, offset: usize, n: usize) -> RatMatrix {
    let mut b = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = m[(offset + i, offset + j)].clone();
        }
    }
    b
}

/// Solve for `μ_i` with `c(s) = μ_i c_i` in the relations `[v_j, v_i] = tω + Σ c(s) ω_s s`
/// reproducing `[y, x] = t⟨y,x⟩ − Σ c_i ⟨x, α_s^∨⟩⟨y, α_s⟩ s`, one scalar per orbit.
///
/// The scalars are determined by equating the two commutator tables on every pair of basis
/// vectors; `[x, x'] = [y, y'] = 0` and the `t`-term are checked along the way. Orbits where
/// every coefficient vanishes on both sides would leave `μ` free; that cannot happen for a
/// reflection, so it is reported as an error.
pub fn convention_solve(group: &FiniteSymplecticGroup) -> Result<Vec<Rational>> {
    let n = group.dim_h().ok_or_else(|| Error::RootData("group does not act on h ⊕ h*".into()))?;
    let roots = root_data(group)?;
    let refl = symplectic_reflections(group);
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); 2 * n];
        v[i] = Rational::one();
        v
    };
    for a in 0..n {
        for b in 0..n {
            let want = if a == b { Rational::one() } else { Rational::zero() };
            if group.omega_eval(&unit(n + a), &unit(b)) != want {
                return Err(Error::Convention("ω(y, x) is not the pairing".into()));
            }
            for r in &refl.reflections {
                for (i, j) in [(a, b), (n + a, n + b)] {
                    if !refl.omega_s_eval(r.element, &unit(i), &unit(j))?.is_zero() {
                        return Err(Error::Convention("ω_s does not vanish on h* or on h".into()));
                    }
                }
            }
        }
    }
    let mut mu: Vec<Option<Rational>> = vec![None; refl.num_orbits()];
    for r in &roots {
        for a in 0..n {
            for b in 0..n {
                let eq1 = refl.omega_s_eval(r.element, &unit(n + a), &unit(b))?;
                let cher = -&(&r.coroot[b] * &r.alpha[a]);
                match (eq1.is_zero(), cher.is_zero()) {
                    (true, true) => continue,
                    (true, false) | (false, true) => {
                        return Err(Error::Convention(format!("pair (y{}, x{}) vanishes on one side only", a + 1, b + 1)))
                    }
                    (false, false) => {
                        let m = &cher * &eq1.recip()?;
                        match &mu[r.orbit] {
                            Some(prev) if *prev != m => {
                                return Err(Error::Convention(format!("orbit {} needs both {prev} and {m}", r.orbit)))
                            }
                            _ => mu[r.orbit] = Some(m),
                        }
                    }
                }
            }
        }
    }
    mu.into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::Convention(format!("orbit {i} leaves the factor undetermined"))))
        .collect()
}

impl CherednikAlgebra {
    pub fn group(&self) -> &FiniteSymplecticGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteSymplecticGroup> {
        self.group.clone()
    }

    pub fn dim_h(&self) -> usize {
        self.dim_h
    }

    pub fn reflections(&self) -> &[CherednikReflection] {
        &self.reflections
    }

    pub fn num_orbits(&self) -> usize {
        self.mu.len()
    }

    /// Parameter index of each orbit; `i + 1` unless built with [`build_cherednik_with_parameters`].
    pub fn param_of_orbit(&self) -> &[usize] {
        &self.param_of_orbit
    }

    /// The conversion factors `μ_i` found by [`convention_solve`].
    pub fn mu(&self) -> &[Rational] {
        &self.mu
    }

    pub fn tau(&self) -> &Representation {
        &self.tau
    }

    /// The underlying PBW algebra, with `x_i` at index `i` and `y_i` at `n + i`.
    pub fn sra(&self) -> &SRAlgebra {
        &self.sra
    }

    pub fn arity(&self) -> usize {
        self.sra.arity()
    }

    /// Effective `t`.
    pub fn t(&self) -> ParamPoly {
        self.sra.t_coeff()
    }

    /// Effective Cherednik parameter `c(s)` for reflections in orbit `i`.
    pub fn c(&self, orbit: usize) -> ParamPoly {
        ParamPoly::c(self.arity(), self.param_of_orbit[orbit]).specialize(self.sra.values())
    }

    pub fn x(&self, i: usize) -> SRAElement {
        self.sra.generator(i)
    }

    pub fn y(&self, i: usize) -> SRAElement {
        self.sra.generator(self.dim_h + i)
    }

    /// The same algebra with parameter values fixed (0 is `t`, `i ≥ 1` is `c_i`).
    pub fn specialize(&self, values: &BTreeMap<usize, Rational>) -> Self {
        CherednikAlgebra { sra: self.sra.specialize_params(values), ..self.clone() }
    }

    /// Same algebra with another lowest-weight representation.
    pub fn with_tau(&self, tau: Representation) -> Result<Self> {
        tau.validate(&self.group)?;
        Ok(CherednikAlgebra { tau, ..self.clone() })
    }

    /// `t⟨y_a, x_b⟩ − Σ_s c(s)⟨x_b, α_s^∨⟩⟨y_a, α_s⟩ s`.
    pub fn relation_rhs(&self, a: usize, b: usize) -> SRAElement {
        let sra = &self.sra;
        let mut out = if a == b { sra.scalar(self.t()) } else { sra.zero() };
        for r in &self.reflections {
            let k = &r.coroot[b] * &r.alpha[a];
            if !k.is_zero() {
                out = out.sub(&sra.group_element(r.element).mul_param(&self.c(r.orbit).scale(&k)));
            }
        }
        out
    }

    /// `h = Σ x_i y_i + dim(h)/2 − Σ_s 2c(s)/(1 − λ_s) s`; satisfies `[h, x] = t x`,
    /// `[h, y] = −t y`.
    pub fn euler_element(&self) -> SRAElement {
        let sra = &self.sra;
        let mut h = sra.scalar(ParamPoly::constant(self.arity(), Rational::new(self.dim_h as i64, 2)));
        for i in 0..self.dim_h {
            h = h.add(&sra.mul(&self.x(i), &self.y(i)));
        }
        for r in &self.reflections {
            let w = &Rational::from_int(2) * &(&Rational::one() - &r.lambda).recip().expect("λ is -1");
            h = h.sub(&sra.group_element(r.element).mul_param(&self.c(r.orbit).scale(&w)));
        }
        h
    }

    /// Pairs `(y_a, x_b)` where the PBW commutator differs from the Cherednik relation.
    pub fn relation_failures(&self) -> Vec<(usize, usize)> {
        let n = self.dim_h;
        let mut bad = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.sra.commutator(&self.y(a), &self.x(b)) != self.relation_rhs(a, b) {
                    bad.push((a, b));
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if !self.sra.commutator(&self.x(i), &self.x(j)).is_zero()
                    || !self.sra.commutator(&self.y(i), &self.y(j)).is_zero()
                {
                    bad.push((i, j));
                }
            }
        }
        bad
    }
}

/// Build `H_{t,c}(h, W)` with symbolic `t, c_1, .., c_r` (one per reflection orbit) and the
/// given lowest-weight representation. The relations are spot-checked on all generator pairs.
pub fn build_cherednik(group: Arc<FiniteSymplecticGroup>, tau: Representation) -> Result<CherednikAlgebra> {
    let orbits = symplectic_reflections(&group).num_orbits();
    let params: Vec<usize> = (1..=orbits).collect();
    build_cherednik_with_parameters(group, tau, 1 + orbits, &params)
}

/// As [`build_cherednik`], but orbit `i` uses the parameter `c_{param_of_orbit[i]}` out of
/// `arity − 1` symbolic ones. Several orbits may share a parameter, which is how the algebra of
/// a parabolic subgroup inherits the parameters of the ambient group.
pub fn build_cherednik_with_parameters(
    group: Arc<FiniteSymplecticGroup>,
    tau: Representation,
    arity: usize,
    param_of_orbit: &[usize],
) -> Result<CherednikAlgebra> {
    let dim_h = group.dim_h().ok_or_else(|| Error::RootData("group does not act on h ⊕ h*".into()))?;
    let reflections = root_data(&group)?;
    let mu = convention_solve(&group)?;
    tau.validate(&group)?;
    if param_of_orbit.len() != mu.len() || param_of_orbit.iter().any(|&k| k == 0 || k >= arity) {
        return Err(Error::InvalidArgument("one parameter index in 1..arity per orbit is required".into()));
    }
    let refl = symplectic_reflections(&group);
    let orbit_coeffs = mu.iter().zip(param_of_orbit).map(|(m, &k)| ParamPoly::c(arity, k).scale(m)).collect();
    let sra = SRAlgebra::with_coefficients(group.clone(), refl, arity, ParamPoly::t(arity), orbit_coeffs)?;
    let alg = CherednikAlgebra { group, dim_h, reflections, mu, tau, param_of_orbit: param_of_orbit.to_vec(), sra };
    if let Some((a, b)) = alg.relation_failures().first() {
        return Err(Error::RootData(format!("relation check fails on the pair ({a}, {b})")));
    }
    Ok(alg)
}

/// The same algebra with `ω_s` negated for one reflection inside the PBW engine, root data and
/// parameters untouched. The result no longer satisfies the Cherednik relations; it exists so
/// that checks can be shown to fail.
pub fn flip_omega_s(alg: &CherednikAlgebra, element: usize) -> Result<CherednikAlgebra> {
    let mut refl = symplectic_reflections(&alg.group);
    let r = refl.get_mut(element).ok_or(Error::NotAReflection)?;
    r.omega_s = r.omega_s.scale(&Rational::from_int(-1));
    let arity = alg.arity();
    let orbit_coeffs = alg.mu.iter().zip(&alg.param_of_orbit).map(|(m, &k)| ParamPoly::c(arity, k).scale(m)).collect();
    let sra = SRAlgebra::with_coefficients(alg.group.clone(), refl, arity, ParamPoly::t(arity), orbit_coeffs)?
        .specialize_params(alg.sra.values());
    Ok(CherednikAlgebra { sra, ..alg.clone() })
}

/// Parameter map `{t, c_1, ..}` from optional values.
pub fn param_values(t: Option<Rational>, c: &[Option<Rational>]) -> BTreeMap<usize, Rational> {
    let mut out = BTreeMap::new();
    if let Some(t) = t {
        out.insert(0, t);
    }
    for (i, ci) in c.iter().enumerate() {
        if let Some(v) = ci {
            out.insert(i + 1, v.clone());
        }
    }
    out
}
