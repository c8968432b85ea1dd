//! The homomorphism `ϑ^b : H_{t,c}(h, W) → Z(W, W_b, H̲^{∧0})` on generators, and its checks.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::{recenter, TruncatedCompletion, TruncatedCompletionElement};
use crate::centralizer::{build_centralizer, Algebra, Centralizer, CentralizerElement};
use crate::cherednik::{build_cherednik, build_cherednik_with_parameters, CherednikAlgebra, Representation};
use crate::coeffs::matrix::row_space_basis;
use crate::coeffs::{ParamPoly, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::groups::{dot, symplectic_reflections, FiniteSymplecticGroup};
use crate::sra::SRAElement;

type Image = CentralizerElement<TruncatedCompletionElement>;

/// Images of the generators of `H_{t,c}(h, W)` in `Z(W, W_b, H̲^{∧0})` truncated at order `N`.
#[derive(Clone, Debug)]
pub struct BEIsoData {
    ambient: CherednikAlgebra,
    b: Vec<Rational>,
    ctx: Centralizer<TruncatedCompletion>,
    group_images: Vec<Image>,
    x_images: Vec<Image>,
    y_images: Vec<Image>,
}

impl BEIsoData {
    pub fn order(&self) -> u32 {
        self.ctx.algebra().order()
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.b
    }

    /// `W_b`, as indices in `W`.
    pub fn subgroup(&self) -> &[usize] {
        self.ctx.subgroup()
    }

    /// The algebra `H_{t,c}(h, W)` being mapped.
    pub fn ambient(&self) -> &CherednikAlgebra {
        &self.ambient
    }

    pub fn context(&self) -> &Centralizer<TruncatedCompletion> {
        &self.ctx
    }

    pub fn x_image(&self, i: usize) -> &Image {
        &self.x_images[i]
    }

    pub fn y_image(&self, i: usize) -> &Image {
        &self.y_images[i]
    }

    pub fn group_image(&self, g: usize) -> &Image {
        &self.group_images[g]
    }

    /// Images of `x_1.., y_1..` followed by the group generators, with their names.
    pub fn generator_images(&self) -> Vec<(String, &Image)> {
        let names = self.ambient.sra().generator_names();
        let n = self.ambient.dim_h();
        let mut out: Vec<(String, &Image)> = (0..n)
            .map(|i| (names[i].clone(), &self.x_images[i]))
            .chain((0..n).map(|i| (names[n + i].clone(), &self.y_images[i])))
            .collect();
        for g in self.ambient.group().generating_set() {
            out.push((self.ambient.sra().group_element_name(g), &self.group_images[g]));
        }
        out
    }

    /// `ϑ(a)` for an element in PBW normal form, as the ordered product of generator images.
    pub fn theta(&self, a: &SRAElement) -> Result<Image> {
        let n = self.ambient.dim_h();
        if a.dim() != 2 * n || a.arity() != self.ambient.arity() {
            return Err(Error::AlgebraMismatch);
        }
        let ctx = &self.ctx;
        let mut out = ctx.zero_element();
        for ((e, g), c) in a.terms() {
            let mut acc = ctx.one_element();
            for (idx, &k) in e.iter().enumerate() {
                let gen = if idx < n { &self.x_images[idx] } else { &self.y_images[idx - n] };
                for _ in 0..k {
                    acc = ctx.mul(&acc, gen);
                }
            }
            acc = ctx.mul(&acc, &self.group_images[*g]);
            out = ctx.add(&out, &acc.map(|x| x.mul_param(c)));
        }
        Ok(out)
    }

    /// Image of the generator `v_idx` (`x_1.., y_1..`).
    fn image(&self, idx: usize) -> &Image {
        let n = self.ambient.dim_h();
        if idx < n {
            &self.x_images[idx]
        } else {
            &self.y_images[idx - n]
        }
    }

    fn commutator(&self, a: &Image, b: &Image) -> Image {
        self.ctx.sub(&self.ctx.mul(a, b), &self.ctx.mul(b, a))
    }

    fn compare(&self, relation: String, lhs: &Image, rhs: &Image, target: u32) -> RelationCheck {
        let diff = self.ctx.sub(lhs, rhs);
        let k = diff.k;
        let mut first_failure = None;
        'outer: for i in 0..k {
            for j in 0..k {
                let d = diff.entry(i, j);
                if d.order < target {
                    first_failure = Some(format!("entry ({i}, {j}) is only known to order {}", d.order));
                    break 'outer;
                }
                let r = d.truncate(target);
                if !r.is_zero() {
                    let sra = self.ctx.algebra().slice().sra();
                    first_failure = Some(format!("entry ({i}, {j}) differs by {}", sra.format(&r.value)));
                    break 'outer;
                }
            }
        }
        RelationCheck { relation, order: target, passed: first_failure.is_none(), first_failure }
    }
}

/// `y_b = (0, .., 0, b) ∈ V` for `b ∈ h`.
fn point_of_h(b: &[Rational]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); b.len()];
    v.extend_from_slice(b);
    v
}

/// `X α` and `A a` for `M_w = diag(X, A)`.
fn act_blocks(m: &RatMatrix, v: &[Rational], offset: usize) -> Vec<Rational> {
    let n = v.len();
    (0..n).map(|k| (0..n).map(|j| &m[(offset + k, offset + j)] * &v[j]).fold(Rational::zero(), |a, b| &a + &b)).collect()
}

/// Build the images of `ϑ^b` at order `N`, with `W̲ = W_b` the stabilizer of `b ∈ h`.
/// With `c = None` the parameters stay symbolic; `t` is always symbolic.
pub fn be_iso(group: Arc<FiniteSymplecticGroup>, b: &[Rational], c: Option<&[Rational]>, order: u32) -> Result<BEIsoData> {
    let mut ambient = build_cherednik(group.clone(), Representation::Trivial)?;
    if let Some(c) = c {
        if c.len() != ambient.num_orbits() {
            return Err(Error::LengthMismatch(format!("{} values for {} parameters", c.len(), ambient.num_orbits())));
        }
        let values: BTreeMap<usize, Rational> = c.iter().enumerate().map(|(i, q)| (i + 1, q.clone())).collect();
        ambient = ambient.specialize(&values);
    }
    be_iso_for(ambient, b, order)
}

/// As [`be_iso`] for an already built (possibly specialized) algebra `H_{t,c}(h, W)`.
pub fn be_iso_for(ambient: CherednikAlgebra, b: &[Rational], order: u32) -> Result<BEIsoData> {
    if order == 0 {
        return Err(Error::InvalidArgument("truncation order must be positive".into()));
    }
    let group = ambient.group_arc();
    let n = ambient.dim_h();
    if b.len() != n {
        return Err(Error::Dimension(format!("base point has {} coordinates, expected {n}", b.len())));
    }
    let subgroup = group.stabilizer_of_vector(&point_of_h(b));
    for r in ambient.reflections() {
        if !subgroup.contains(&r.element) && dot(&r.alpha, b).is_zero() {
            return Err(Error::BadBasePoint(format!("b lies on the hyperplane of reflection {}", r.element)));
        }
    }
    let (sub, ambient_of) = group.restrict(&subgroup)?;
    let orbit_of: HashMap<usize, usize> = ambient.reflections().iter().map(|r| (r.element, r.orbit)).collect();
    let sub_refl = symplectic_reflections(&sub);
    let mut params = vec![0; sub_refl.num_orbits()];
    for r in &sub_refl.reflections {
        params[r.orbit] = ambient.param_of_orbit()[orbit_of[&ambient_of[r.element]]];
    }
    let slice = build_cherednik_with_parameters(Arc::new(sub), Representation::Trivial, ambient.arity(), &params)?
        .specialize(ambient.sra().values());
    let completion = TruncatedCompletion::new(slice, &ambient_of, group.order(), order)?;
    let ctx = build_centralizer(group.clone(), &subgroup, completion)?;
    let comp = ctx.algebra();

    let group_images: Vec<Image> = (0..group.order()).map(|g| ctx.embed_group(g)).collect();
    let unit = |j: usize| {
        let mut v = vec![Rational::zero(); n];
        v[j] = Rational::one();
        v
    };
    let mut x_images = Vec::with_capacity(n);
    let mut y_images = Vec::with_capacity(n);
    // the denominators (x̲_{α_s} + ⟨b, α_s⟩)^{-1} for reflections outside W_b
    let mut outside = Vec::new();
    for r in ambient.reflections() {
        if ctx.contains(r.element) {
            continue;
        }
        let inv = comp.inverse_shifted_linear(&r.alpha, &dot(&r.alpha, b))?;
        let weight = &Rational::from_int(2) * &(&Rational::one() - &r.lambda).recip()?;
        outside.push((r, inv, ambient.c(r.orbit).scale(&weight)));
    }
    for j in 0..n {
        let mut xm = ctx.zero_element();
        let mut ym = ctx.zero_element();
        for (i, &w) in ctx.representatives().iter().enumerate() {
            let m = group.element(w);
            let wa = act_blocks(m, &unit(j), 0);
            *xm.entry_mut(i, i) = comp.add(&comp.linear_x(&wa), &comp.constant(ParamPoly::constant(ambient.arity(), dot(b, &wa))));
            let wy = act_blocks(m, &unit(j), n);
            *ym.entry_mut(i, i) = comp.linear_y(&wy);
            for (r, inv, coeff) in &outside {
                let pairing = dot(&r.alpha, &wy);
                if pairing.is_zero() {
                    continue;
                }
                let term = inv.mul_param(&coeff.scale(&pairing));
                let p = group.mul(r.element, w);
                let col = ctx.coset_of(p);
                let moved = comp.mul(&term, &comp.group_element(ctx.coset_factor(p))?);
                *ym.entry_mut(i, col) = comp.add(ym.entry(i, col), &moved);
                *ym.entry_mut(i, i) = comp.sub(ym.entry(i, i), &term);
            }
        }
        x_images.push(xm);
        y_images.push(ym);
    }
    Ok(BEIsoData { ambient, b: b.to_vec(), ctx, group_images, x_images, y_images })
}

/// Outcome of one defining relation, compared modulo the given x-adic order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub order: u32,
    pub passed: bool,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomomorphismReport {
    pub order: u32,
    pub checks: Vec<RelationCheck>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Check the defining relations on the images, modulo x-adic order `N − 1`: every commutator
/// of two generators and every conjugation by a group generator must map to the image of the
/// corresponding normal form computed in the ambient PBW engine. For the Cherednik algebra
/// these are `[x, x'] = [y, y'] = 0`, `w v w⁻¹ = w(v)` and
/// `[y, x] = t⟨y, x⟩ − Σ_s c(s)⟨x, α_s^∨⟩⟨y, α_s⟩ s`.
pub fn verify_homomorphism(iso: &BEIsoData) -> Result<HomomorphismReport> {
    let target = iso.order().saturating_sub(1);
    let n = iso.ambient.dim_h();
    let sra = iso.ambient.sra();
    let names = sra.generator_names();
    let mut checks = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (p, q) in [(i, j), (n + i, n + j)] {
                let lhs = iso.commutator(iso.image(p), iso.image(q));
                let rhs = iso.theta(&sra.commutator(&sra.generator(p), &sra.generator(q)))?;
                checks.push(iso.compare(format!("[{}, {}]", names[p], names[q]), &lhs, &rhs, target));
            }
        }
    }
    for w in iso.ambient.group().generating_set() {
        let gw = &iso.group_images[w];
        let gw_inv = &iso.group_images[iso.ambient.group().inv(w)];
        let wname = sra.group_element_name(w);
        for (idx, name) in names.iter().enumerate() {
            let lhs = iso.ctx.mul(&iso.ctx.mul(gw, iso.image(idx)), gw_inv);
            let rhs = iso.theta(&sra.conjugate_by_group(w, &sra.generator(idx)))?;
            checks.push(iso.compare(format!("{wname} {name} {wname}^-1"), &lhs, &rhs, target));
        }
    }
    for a in 0..n {
        for bi in 0..n {
            let lhs = iso.commutator(&iso.y_images[a], &iso.x_images[bi]);
            let rhs = iso.theta(&sra.commutator(&sra.generator(n + a), &sra.generator(bi)))?;
            checks.push(iso.compare(format!("[{}, {}]", names[n + a], names[bi]), &lhs, &rhs, target));
        }
    }
    Ok(HomomorphismReport { order: target, checks })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BaselineReport {
    /// At `t = c = 0` the images are the undeformed ones shifted by `b`.
    pub theta0_agrees: bool,
    /// The x-images involve no `c`.
    pub x_images_c_independent: bool,
    /// Setting `c = 0` alone already gives the undeformed y-images.
    pub y_corrections_carry_c: bool,
}

impl BaselineReport {
    pub fn passed(&self) -> bool {
        self.theta0_agrees && self.x_images_c_independent && self.y_corrections_carry_c
    }
}

/// Compare with the undeformed map: `w ↦ w`, `x_α ↦ diag(x̲_{g_i α} + ⟨b, g_i α⟩)` and
/// `y_a ↦ diag(y̲_{g_i a})`, computed here by conjugation in the ambient algebra and recentering.
pub fn mod_param_baseline(iso: &BEIsoData) -> Result<BaselineReport> {
    let n = iso.ambient.dim_h();
    let arity = iso.ambient.arity();
    let sra = iso.ambient.sra();
    let comp = iso.ctx.algebra();
    let all_zero: BTreeMap<usize, Rational> = (0..arity).map(|i| (i, Rational::zero())).collect();
    let c_zero: BTreeMap<usize, Rational> = (1..arity).map(|i| (i, Rational::zero())).collect();
    let undeformed = |idx: usize| -> Result<Image> {
        let mut m = iso.ctx.zero_element();
        for (i, &w) in iso.ctx.representatives().iter().enumerate() {
            let conj = sra.conjugate_by_group(w, &sra.generator(idx));
            let shifted = if idx < n { recenter(&conj, &iso.b)? } else { conj };
            *m.entry_mut(i, i) = comp.polynomial(&shifted)?;
        }
        Ok(m)
    };
    let mut report = BaselineReport { theta0_agrees: true, x_images_c_independent: true, y_corrections_carry_c: true };
    for idx in 0..2 * n {
        let img = if idx < n { &iso.x_images[idx] } else { &iso.y_images[idx - n] };
        let base = undeformed(idx)?;
        report.theta0_agrees &= img.map(|e| e.specialize(&all_zero)) == base;
        if idx < n {
            report.x_images_c_independent &= img.map(|e| e.specialize(&c_zero)) == *img;
        } else {
            report.y_corrections_carry_c &= img.map(|e| e.specialize(&c_zero)) == base;
        }
    }
    for g in 0..iso.ambient.group().order() {
        report.theta0_agrees &= iso.group_images[g].map(|e| e.specialize(&all_zero)) == iso.ctx.embed_group(g);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivarianceReport {
    /// `(generator, weight, passed)`.
    pub checks: Vec<(String, u32, bool)>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.2)
    }
}

/// The rescaling `y ↦ λ²y`, `c ↦ λ²c`, `t ↦ λ²t` (x and group elements fixed) applied to the
/// coefficients of each image must return `λ^{weight}` times the image, with `λ` an extra formal
/// parameter; the weights are `0` for x and group elements and `2` for y.
pub fn equivariance_check(iso: &BEIsoData) -> EquivarianceReport {
    let n = iso.ambient.dim_h();
    let arity = iso.ambient.arity();
    let mut weights = vec![2u32; arity];
    weights.push(0);
    let lambda_power = |k: u32| {
        let mut e = vec![0u32; arity + 1];
        e[arity] = k;
        e
    };
    let mut checks = Vec::new();
    for (idx, (name, img)) in iso.generator_images().into_iter().enumerate() {
        let weight = if (n..2 * n).contains(&idx) { 2 } else { 0 };
        let mut ok = true;
        for entry in &img.entries {
            for ((e, _), p) in entry.value.terms() {
                let ydeg: u32 = e[n..].iter().sum();
                let p = p.extend_arity(1);
                let rescaled = p.rescale_by_var(arity, &weights).shift(&lambda_power(2 * ydeg));
                ok &= rescaled == p.shift(&lambda_power(weight));
            }
        }
        checks.push((name, weight, ok));
    }
    EquivarianceReport { checks }
}

/// The corner `e(W_b) ϑ(a) e(W_b)`, an element of the truncated slice completion.
pub fn corner_extract(iso: &BEIsoData, a: &SRAElement) -> Result<TruncatedCompletionElement> {
    Ok(iso.theta(a)?.entry(0, 0).clone())
}

/// A point of `h` whose stabilizer is exactly `subgroup`, searched among integer combinations of
/// a basis of the common fixed space.
pub fn generic_base_point(group: &FiniteSymplecticGroup, subgroup: &[usize]) -> Result<Vec<Rational>> {
    let n = group.dim_h().ok_or_else(|| Error::RootData("group does not act on h ⊕ h*".into()))?;
    let mut rows = Vec::new();
    for &u in subgroup {
        let m = group.element(u);
        for k in 0..n {
            rows.push((0..n).map(|j| &m[(n + k, n + j)] - &if k == j { Rational::one() } else { Rational::zero() }).collect::<Vec<_>>());
        }
    }
    let fixed = if rows.iter().all(|r| r.iter().all(Rational::is_zero)) {
        (0..n).map(|j| (0..n).map(|k| if k == j { Rational::one() } else { Rational::zero() }).collect()).collect()
    } else {
        RatMatrix::from_rows(row_space_basis(&rows))?.nullspace()
    };
    let mut want = subgroup.to_vec();
    want.sort_unstable();
    for base in 2..64i64 {
        let mut b = vec![Rational::zero(); n];
        let mut scale = Rational::one();
        for v in &fixed {
            for (bk, vk) in b.iter_mut().zip(v) {
                *bk = &*bk + &(&scale * vk);
            }
            scale = &scale * &Rational::from_int(base);
        }
        if group.stabilizer_of_vector(&point_of_h(&b)) == want {
            return Ok(b);
        }
    }
    Err(Error::BadBasePoint("no point with exactly this stabilizer was found".into()))
}
