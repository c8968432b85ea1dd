//! Matrix units, Morita witnesses, corner recovery, the smash-product isomorphism, bimodule
//! transport, equivariant actions and derivations.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{build_centralizer, build_with_reps, check_automorphisms, Algebra, Centralizer, CentralizerElement, CoefficientAlgebra, FdAlgebra, FdBimodule};
use crate::coeffs::matrix::RowReducer;
use crate::coeffs::{RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::groups::FiniteSymplecticGroup;

/// Named pass/fail checks with the number of instances examined.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixUnitReport {
    pub checks: Vec<(String, usize, bool)>,
}

impl MatrixUnitReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, _, ok)| *ok)
    }

    fn push(&mut self, name: &str, count: usize, ok: bool) {
        self.checks.push((name.to_string(), count, ok));
    }
}

/// `1 = Σ_i L_i e(H) R_i` with `L_i = g_i^{-1}` and `R_i = g_i` over the representatives.
#[derive(Clone, Debug, PartialEq)]
pub struct MoritaWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl<A: CoefficientAlgebra> Centralizer<A> {
    /// Exhaustive matrix-unit relations: `Σ e(x) = 1`, `e(x)e(y) = δ_{xy} e(x)`,
    /// `g^{-1} e(x) g = e(xg)`, multiplicativity of `G ↪ Z` and `a e(x) = e(x) a` for `a` in the
    /// Reynolds image of the spanning set.
    pub fn matrix_unit_check(&self) -> MatrixUnitReport {
        let k = self.size();
        let order = self.group().order();
        let mut report = MatrixUnitReport { checks: Vec::new() };
        let idem: Vec<_> = (0..k).map(|x| self.idempotent(x).expect("coset")).collect();
        let sum = idem.iter().fold(self.zero_element(), |acc, e| self.add(&acc, e));
        report.push("idempotents sum to one", 1, sum == self.one_element());
        let mut ok = true;
        for x in 0..k {
            for y in 0..k {
                let p = self.mul(&idem[x], &idem[y]);
                ok &= if x == y { p == idem[x] } else { self.is_zero_element(&p) };
            }
        }
        report.push("idempotents are orthogonal", k * k, ok);
        let embedded: Vec<_> = (0..order).map(|g| self.embed_group(g)).collect();
        let mut ok = embedded[self.group().identity()] == self.one_element();
        for a in 0..order {
            for b in 0..order {
                ok &= self.mul(&embedded[a], &embedded[b]) == embedded[self.group().mul(a, b)];
            }
        }
        report.push("group embedding is multiplicative", order * order, ok);
        let mut ok = true;
        for g in 0..order {
            let inv = &embedded[self.group().inv(g)];
            for x in 0..k {
                ok &= self.mul(&self.mul(inv, &idem[x]), &embedded[g]) == idem[self.coset_times(x, g)];
            }
        }
        report.push("conjugation permutes idempotents", order * k, ok);
        let mut ok = true;
        let mut count = 0;
        for b in self.algebra().spanning_set() {
            let a = self.embed_invariant(&self.reynolds(&b)).expect("averaged element is invariant");
            for e in &idem {
                count += 1;
                ok &= self.mul(&a, e) == self.mul(e, &a);
            }
        }
        report.push("invariants commute with idempotents", count, ok);
        report
    }

    pub fn morita_witness(&self) -> MoritaWitness {
        MoritaWitness { left: self.representatives().iter().map(|&g| self.group().inv(g)).collect(), right: self.representatives().to_vec() }
    }

    pub fn verify_morita(&self, w: &MoritaWitness) -> bool {
        let e = self.idempotent(0).expect("coset of H");
        let sum = w.left.iter().zip(&w.right).fold(self.zero_element(), |acc, (&l, &r)| {
            self.add(&acc, &self.mul(&self.mul(&self.embed_group(l), &e), &self.embed_group(r)))
        });
        sum == self.one_element()
    }

    /// Embedding of `Z` built with the representatives `reps` into this one is conjugation by
    /// `diag(ι(h_i))` where `reps[i] = h_i g_i`; checks that on every group element.
    pub fn representatives_independent(&self, reps: Vec<usize>) -> Result<bool>
    where
        A: Clone,
    {
        let other = build_with_reps(self.group_arc(), self.subgroup(), self.algebra().clone(), reps)?;
        let k = self.size();
        let mut d = self.zero_element();
        let mut d_inv = self.zero_element();
        for i in 0..k {
            let r = other.representatives()[i];
            let x = self.coset_of(r);
            let h = self.coset_factor(r);
            *d.entry_mut(i, x) = self.algebra().embed_subgroup(h);
            *d_inv.entry_mut(x, i) = self.algebra().embed_subgroup(self.group().inv(h));
        }
        Ok((0..self.group().order()).all(|g| other.embed_group(g) == self.mul(&self.mul(&d, &self.embed_group(g)), &d_inv)))
    }
}

/// Images in an algebra `B` of the group elements and of `e(H)` under a unital embedding of
/// `Z(G, H, ℚH)`.
#[derive(Clone, Debug)]
pub struct MatrixUnitImages<E> {
    pub group_images: Vec<E>,
    pub e: E,
}

impl<F: Clone> MatrixUnitImages<CentralizerElement<F>> {
    /// The tautological images inside `Z(G, H, A)`.
    pub fn from_centralizer<A: CoefficientAlgebra<Elem = F>>(ctx: &Centralizer<A>) -> Self {
        MatrixUnitImages {
            group_images: (0..ctx.group().order()).map(|g| ctx.embed_group(g)).collect(),
            e: ctx.idempotent(0).expect("coset of H"),
        }
    }
}

fn validate_images<A: CoefficientAlgebra, B: Algebra>(ctx: &Centralizer<A>, b: &B, im: &MatrixUnitImages<B::Elem>) -> Result<()> {
    let g = ctx.group();
    if im.group_images.len() != g.order() || im.group_images[g.identity()] != b.one() {
        return Err(Error::MatrixUnits("matrix-unit relations fail".into()));
    }
    for x in 0..g.order() {
        for y in 0..g.order() {
            if b.mul(&im.group_images[x], &im.group_images[y]) != im.group_images[g.mul(x, y)] {
                return Err(Error::MatrixUnits("matrix-unit relations fail".into()));
            }
        }
    }
    if b.mul(&im.e, &im.e) != im.e {
        return Err(Error::MatrixUnits("matrix-unit relations fail".into()));
    }
    for &h in ctx.subgroup() {
        if b.mul(&im.group_images[h], &im.e) != b.mul(&im.e, &im.group_images[h]) {
            return Err(Error::MatrixUnits("matrix-unit relations fail".into()));
        }
    }
    let conj: Vec<B::Elem> = ctx
        .representatives()
        .iter()
        .map(|&r| b.mul(&b.mul(&im.group_images[g.inv(r)], &im.e), &im.group_images[r]))
        .collect();
    let mut sum = b.zero();
    for (i, ci) in conj.iter().enumerate() {
        sum = b.add(&sum, ci);
        for (j, cj) in conj.iter().enumerate() {
            if i != j && !b.is_zero(&b.mul(ci, cj)) {
                return Err(Error::MatrixUnits("matrix-unit relations fail".into()));
            }
        }
    }
    if sum != b.one() {
        return Err(Error::MatrixUnits("matrix-unit relations fail".into()));
    }
    Ok(())
}

/// The image of `b` under `B ≅ Z(G, H, eBe)`: the matrix `(e ι(g_i) b ι(g_j)^{-1} e)_{ij}`.
pub fn corner_recover<A: CoefficientAlgebra, B: Algebra>(
    ctx: &Centralizer<A>,
    b_alg: &B,
    images: &MatrixUnitImages<B::Elem>,
    b: &B::Elem,
) -> Result<CentralizerElement<B::Elem>> {
    validate_images(ctx, b_alg, images)?;
    let g = ctx.group();
    let k = ctx.size();
    let reps = ctx.representatives();
    let mut entries = Vec::with_capacity(k * k);
    for &ri in reps {
        let left = b_alg.mul(&images.e, &images.group_images[ri]);
        for &rj in reps {
            let right = b_alg.mul(&images.group_images[g.inv(rj)], &images.e);
            entries.push(b_alg.mul(&b_alg.mul(&left, b), &right));
        }
    }
    Ok(CentralizerElement { k, entries })
}

/// Check that `φ ↦ (g ↦ e g φ)` and `f ↦ |H|^{-1} Σ_g g^{-1} f(g)` are mutually inverse
/// between `Be` and `Fu_H(G, eBe)` on `φ = s e` and on `f` with values `e s e` at one
/// representative, for every sample `s`.
pub fn corner_maps_roundtrip<A: CoefficientAlgebra, B: Algebra>(
    ctx: &Centralizer<A>,
    b_alg: &B,
    images: &MatrixUnitImages<B::Elem>,
    samples: &[B::Elem],
) -> Result<bool> {
    validate_images(ctx, b_alg, images)?;
    let g = ctx.group();
    let e = &images.e;
    let im = &images.group_images;
    let inv_h = Rational::new(1, ctx.subgroup().len() as i64);
    let to_functions = |phi: &B::Elem| -> Vec<B::Elem> { (0..g.order()).map(|x| b_alg.mul(&b_alg.mul(e, &im[x]), phi)).collect() };
    let from_functions = |f: &[B::Elem]| -> B::Elem {
        let mut acc = b_alg.zero();
        for (x, fx) in f.iter().enumerate() {
            acc = b_alg.add(&acc, &b_alg.mul(&im[g.inv(x)], fx));
        }
        b_alg.scale(&acc, &inv_h)
    };
    for s in samples {
        let phi = b_alg.mul(s, e);
        if from_functions(&to_functions(&phi)) != phi {
            return Ok(false);
        }
        let ese = b_alg.mul(&b_alg.mul(e, s), e);
        for (i, _) in ctx.representatives().iter().enumerate() {
            // f(h g_j) = ι(h) e δ_{ij} e s e
            let f: Vec<B::Elem> = (0..g.order())
                .map(|x| {
                    if ctx.coset_of(x) == i {
                        b_alg.mul(&im[ctx.coset_factor(x)], &ese)
                    } else {
                        b_alg.zero()
                    }
                })
                .collect();
            if to_functions(&from_functions(&f)) != f {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SmashIsoReport {
    pub source_dim: usize,
    pub target_dim: usize,
    pub image_rank: usize,
    pub matrix_units_hit: bool,
    pub unital: bool,
    pub conjugation: bool,
    pub multiplicative: bool,
}

impl SmashIsoReport {
    pub fn passed(&self) -> bool {
        self.source_dim == self.target_dim
            && self.image_rank == self.target_dim
            && self.matrix_units_hit
            && self.unital
            && self.conjugation
            && self.multiplicative
    }
}

fn flatten(m: &CentralizerElement<Vec<Rational>>) -> Vec<Rational> {
    m.entries.iter().flatten().cloned().collect()
}

/// `ϑ: (ℚ[G] ⊗ A₀)^H # G → Z(G, H, A₀ # H)`, with `ϑ(g) f = f(· g)` and `ϑ(F) f = F(·) f(·)`.
///
/// `F ∈ Fu_H(G, A₀)` is given by its values at the representatives. The report compares
/// dimensions, the rank of the images of a spanning set, and checks relations exhaustively.
pub fn smash_iso(
    group: Arc<FiniteSymplecticGroup>,
    subgroup: &[usize],
    a0: &FdAlgebra,
    action: &BTreeMap<usize, RatMatrix>,
) -> Result<SmashIsoReport> {
    let smash = FdAlgebra::smash(a0, &group, subgroup, action)?;
    let ctx = build_centralizer(group.clone(), subgroup, smash.clone())?;
    let k = ctx.size();
    let m = subgroup.len();
    let id_pos = {
        let mut s = subgroup.to_vec();
        s.sort_unstable();
        s.iter().position(|&h| h == group.identity()).expect("identity in H")
    };
    let incl = |a: &[Rational]| a0.smash_inclusion(a, m, id_pos);
    let theta_f = |values: &[Vec<Rational>]| -> CentralizerElement<Vec<Rational>> {
        let mut out = ctx.zero_element();
        for (i, v) in values.iter().enumerate() {
            *out.entry_mut(i, i) = incl(v);
        }
        out
    };
    // spanning set of Fu_H(G, A₀): value b at representative i, zero elsewhere
    let mut fs: Vec<Vec<Vec<Rational>>> = Vec::new();
    for i in 0..k {
        for b in 0..a0.dim() {
            let mut vals = vec![a0.zero(); k];
            vals[i] = a0.basis_element(b);
            fs.push(vals);
        }
    }
    let translate = |g: usize, f: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        (0..k)
            .map(|j| {
                let p = group.mul(ctx.representatives()[j], g);
                action[&ctx.coset_factor(p)].mul_vec(&f[ctx.coset_of(p)])
            })
            .collect()
    };
    let embedded: Vec<_> = (0..group.order()).map(|g| ctx.embed_group(g)).collect();
    let cols = k * k * smash.dim();
    let mut reducer = RowReducer::new(cols);
    for f in &fs {
        let tf = theta_f(f);
        for eg in &embedded {
            reducer.insert(flatten(&ctx.mul(&tf, eg)));
        }
    }
    let image_rank = reducer.rank();
    let matrix_units_hit = (0..k).all(|i| (0..k).all(|j| reducer.contains(&flatten(&ctx.matrix_unit(i, j, &smash.one())))));
    let ones = vec![a0.one(); k];
    let unital = theta_f(&ones) == ctx.one_element() && embedded[group.identity()] == ctx.one_element();
    let mut conjugation = true;
    for g in 0..group.order() {
        let inv = &embedded[group.inv(g)];
        for f in &fs {
            let lhs = ctx.mul(&ctx.mul(&embedded[g], &theta_f(f)), inv);
            conjugation &= lhs == theta_f(&translate(g, f));
        }
    }
    let mut multiplicative = true;
    for f in &fs {
        for f2 in &fs {
            let prod: Vec<_> = f.iter().zip(f2).map(|(a, b)| a0.mul(a, b)).collect();
            multiplicative &= ctx.mul(&theta_f(f), &theta_f(f2)) == theta_f(&prod);
        }
    }
    Ok(SmashIsoReport {
        source_dim: group.order() * k * a0.dim(),
        target_dim: ctx.rational_dim(),
        image_rank,
        matrix_units_hit,
        unital,
        conjugation,
        multiplicative,
    })
}

/// `Z(G, H, M) = Mat_k(M)` as a bimodule over `Z(G, H, A)`.
#[derive(Clone, Debug)]
pub struct BimoduleTransport<'a> {
    ctx: &'a Centralizer<FdAlgebra>,
    module: FdBimodule,
}

impl<'a> BimoduleTransport<'a> {
    pub fn new(ctx: &'a Centralizer<FdAlgebra>, module: FdBimodule) -> Result<Self> {
        module.validate(ctx.algebra())?;
        Ok(BimoduleTransport { ctx, module })
    }

    pub fn dim(&self) -> usize {
        self.ctx.size() * self.ctx.size() * self.module.dim
    }

    /// `E_{ij} ⊗ m_b` for all `i, j` and basis vectors `m_b`.
    pub fn basis(&self) -> Vec<CentralizerElement<Vec<Rational>>> {
        let k = self.ctx.size();
        let d = self.module.dim;
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                for b in 0..d {
                    let mut m = self.zero();
                    m.entries[i * k + j][b] = Rational::one();
                    out.push(m);
                }
            }
        }
        out
    }

    pub fn zero(&self) -> CentralizerElement<Vec<Rational>> {
        let k = self.ctx.size();
        CentralizerElement { k, entries: vec![vec![Rational::zero(); self.module.dim]; k * k] }
    }

    fn add_into(acc: &mut [Rational], v: &[Rational]) {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += b;
        }
    }

    pub fn act_left(&self, phi: &CentralizerElement<Vec<Rational>>, mu: &CentralizerElement<Vec<Rational>>) -> CentralizerElement<Vec<Rational>> {
        let k = self.ctx.size();
        let mut out = self.zero();
        for i in 0..k {
            for l in 0..k {
                for j in 0..k {
                    let v = self.module.act_left(phi.entry(i, l), mu.entry(l, j));
                    Self::add_into(out.entry_mut(i, j), &v);
                }
            }
        }
        out
    }

    pub fn act_right(&self, mu: &CentralizerElement<Vec<Rational>>, phi: &CentralizerElement<Vec<Rational>>) -> CentralizerElement<Vec<Rational>> {
        let k = self.ctx.size();
        let mut out = self.zero();
        for i in 0..k {
            for l in 0..k {
                for j in 0..k {
                    let v = self.module.act_right(mu.entry(i, l), phi.entry(l, j));
                    Self::add_into(out.entry_mut(i, j), &v);
                }
            }
        }
        out
    }

    /// Bimodule axioms on all pairs from the given samples of `Z` and the module basis.
    pub fn check_axioms(&self, z_samples: &[CentralizerElement<Vec<Rational>>]) -> bool {
        let one = self.ctx.one_element();
        let basis = self.basis();
        basis.iter().all(|mu| self.act_left(&one, mu) == *mu && self.act_right(mu, &one) == *mu)
            && z_samples.iter().all(|a| {
                z_samples.iter().all(|b| {
                    let ab = self.ctx.mul(a, b);
                    basis.iter().all(|mu| {
                        self.act_left(&ab, mu) == self.act_left(a, &self.act_left(b, mu))
                            && self.act_right(mu, &ab) == self.act_right(&self.act_right(mu, a), b)
                            && self.act_right(&self.act_left(a, mu), b) == self.act_left(a, &self.act_right(mu, b))
                    })
                })
            })
    }

    /// `e(H) · μ · e(H)`, read as an element of `M`.
    pub fn corner(&self, mu: &CentralizerElement<Vec<Rational>>) -> Vec<Rational> {
        let e = self.ctx.idempotent(0).expect("coset of H");
        self.act_right(&self.act_left(&e, mu), &e).entry(0, 0).clone()
    }

    /// The corner of `Z(G, H, M)` is `M` with its original bimodule structure.
    pub fn corner_roundtrip(&self) -> bool {
        let a_basis = self.ctx.algebra().spanning_set();
        let d = self.module.dim;
        let lift = |m: &[Rational]| {
            let mut mu = self.zero();
            *mu.entry_mut(0, 0) = m.to_vec();
            mu
        };
        let corner_all_zero = self.basis().iter().all(|mu| {
            let c = self.corner(mu);
            let is_00 = mu.entries.iter().skip(1).all(|v| v.iter().all(Rational::is_zero));
            is_00 || c.iter().all(Rational::is_zero)
        });
        corner_all_zero
            && (0..d).all(|b| {
                let mut m = vec![Rational::zero(); d];
                m[b] = Rational::one();
                a_basis.iter().all(|a| {
                    let za = self.ctx.matrix_unit(0, 0, a);
                    self.corner(&self.act_left(&za, &lift(&m))) == self.module.act_left(a, &m)
                        && self.corner(&self.act_right(&lift(&m), &za)) == self.module.act_right(&m, a)
                })
            })
    }
}

/// Per-element data `(σ, c)` of an action `(h̃.φ)_{im} = c_i α(φ_{σ(i)σ(m)}) c_m^{-1}`.
#[derive(Clone, Debug, PartialEq)]
struct ActionDatum {
    sigma: Vec<usize>,
    c: Vec<Vec<Rational>>,
    c_inv: Vec<Vec<Rational>>,
}

/// The two `H̃`-actions on `Z(G, H, A)` induced by `(h̃.f)(g) = h̃.f(h̃^{-1} g h̃)` and by
/// `(h̃.f)(g) = h̃.f(h̃^{-1} g)`; the second is trivial on `H`.
#[derive(Clone, Debug)]
pub struct EquivariantActions {
    automorphisms: BTreeMap<usize, RatMatrix>,
    first: BTreeMap<usize, ActionDatum>,
    second: BTreeMap<usize, ActionDatum>,
}

/// Build both actions of `H̃ ⊇ H` for an action of `H̃` on `A` by automorphisms restricting to
/// conjugation by `ι(H)`.
pub fn equivariant_action(
    ctx: &Centralizer<FdAlgebra>,
    h_tilde: &[usize],
    action: &BTreeMap<usize, RatMatrix>,
) -> Result<EquivariantActions> {
    let g = ctx.group();
    if !g.is_subgroup(h_tilde) || ctx.subgroup().iter().any(|h| !h_tilde.contains(h)) {
        return Err(Error::NotSubgroup("not a subgroup".into()));
    }
    for &x in h_tilde {
        for &h in ctx.subgroup() {
            if !ctx.contains(g.conj(x, h)) {
                return Err(Error::NotNormal("subgroup is not normal".into()));
            }
        }
    }
    let a = ctx.algebra();
    check_automorphisms(a, g, h_tilde, action)?;
    for &h in ctx.subgroup() {
        let ih = a.embed_subgroup(h);
        let ih_inv = a.embed_subgroup(g.inv(h));
        for b in a.spanning_set() {
            if action[&h].mul_vec(&b) != a.mul(&a.mul(&ih, &b), &ih_inv) {
                return Err(Error::NotAutomorphism("not an action by automorphisms".into()));
            }
        }
    }
    let datum = |x: usize, twisted: bool| -> ActionDatum {
        let xinv = g.inv(x);
        let mut sigma = Vec::new();
        let mut c = Vec::new();
        let mut c_inv = Vec::new();
        for &r in ctx.representatives() {
            let moved = if twisted { g.mul(g.mul(xinv, r), x) } else { g.mul(xinv, r) };
            sigma.push(ctx.coset_of(moved));
            let u = ctx.coset_factor(moved);
            c.push(action[&x].mul_vec(&a.embed_subgroup(u)));
            c_inv.push(action[&x].mul_vec(&a.embed_subgroup(g.inv(u))));
        }
        ActionDatum { sigma, c, c_inv }
    };
    Ok(EquivariantActions {
        automorphisms: action.clone(),
        first: h_tilde.iter().map(|&x| (x, datum(x, true))).collect(),
        second: h_tilde.iter().map(|&x| (x, datum(x, false))).collect(),
    })
}

impl EquivariantActions {
    fn apply(
        &self,
        ctx: &Centralizer<FdAlgebra>,
        d: &ActionDatum,
        x: usize,
        phi: &CentralizerElement<Vec<Rational>>,
    ) -> CentralizerElement<Vec<Rational>> {
        let a = ctx.algebra();
        let alpha = &self.automorphisms[&x];
        let k = ctx.size();
        let mut out = ctx.zero_element();
        for i in 0..k {
            for m in 0..k {
                let moved = alpha.mul_vec(phi.entry(d.sigma[i], d.sigma[m]));
                *out.entry_mut(i, m) = a.mul(&a.mul(&d.c[i], &moved), &d.c_inv[m]);
            }
        }
        out
    }

    pub fn act_first(&self, ctx: &Centralizer<FdAlgebra>, x: usize, phi: &CentralizerElement<Vec<Rational>>) -> Result<CentralizerElement<Vec<Rational>>> {
        let d = self.first.get(&x).ok_or_else(|| Error::NotSubgroup(format!("{x} is not in the acting group")))?;
        Ok(self.apply(ctx, d, x, phi))
    }

    pub fn act_second(&self, ctx: &Centralizer<FdAlgebra>, x: usize, phi: &CentralizerElement<Vec<Rational>>) -> Result<CentralizerElement<Vec<Rational>>> {
        let d = self.second.get(&x).ok_or_else(|| Error::NotSubgroup(format!("{x} is not in the acting group")))?;
        Ok(self.apply(ctx, d, x, phi))
    }

    pub fn elements(&self) -> Vec<usize> {
        self.first.keys().copied().collect()
    }
}

/// An `ℚH`-linear derivation of `A` extended entry-wise to `Z(G, H, A)`.
#[derive(Clone, Debug)]
pub struct DerivationLift {
    matrix: RatMatrix,
}

/// Check the Leibniz rule on basis pairs and `D(ι(h)) = 0`, then lift entry-wise.
pub fn derivation_lift(ctx: &Centralizer<FdAlgebra>, d: &RatMatrix) -> Result<DerivationLift> {
    let a = ctx.algebra();
    if d.rows() != a.dim() || d.cols() != a.dim() {
        return Err(Error::Dimension("derivation matrix has the wrong size".into()));
    }
    let basis = a.spanning_set();
    for x in &basis {
        for y in &basis {
            let lhs = d.mul_vec(&a.mul(x, y));
            let rhs = a.add(&a.mul(&d.mul_vec(x), y), &a.mul(x, &d.mul_vec(y)));
            if lhs != rhs {
                return Err(Error::NotDerivation("Leibniz rule or H-linearity fails".into()));
            }
        }
    }
    for &h in ctx.subgroup() {
        if !a.is_zero(&d.mul_vec(&a.embed_subgroup(h))) {
            return Err(Error::NotDerivation("Leibniz rule or H-linearity fails".into()));
        }
    }
    Ok(DerivationLift { matrix: d.clone() })
}

impl DerivationLift {
    pub fn apply(&self, phi: &CentralizerElement<Vec<Rational>>) -> CentralizerElement<Vec<Rational>> {
        phi.map(|x| self.matrix.mul_vec(x))
    }
}

/// Summary of the exhaustive centralizer checks for a pair `H ≤ G` with `A = ℚH`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralizerSelftest {
    pub cosets: usize,
    pub rational_dim: usize,
    pub matrix_units: MatrixUnitReport,
    pub morita_witness: bool,
    pub representatives_independent: bool,
    pub corner_roundtrip: bool,
    pub smash: SmashIsoReport,
}

impl CentralizerSelftest {
    pub fn passed(&self) -> bool {
        self.matrix_units.passed() && self.morita_witness && self.representatives_independent && self.corner_roundtrip && self.smash.passed()
    }
}

pub fn selftest(group: Arc<FiniteSymplecticGroup>, subgroup: &[usize]) -> Result<CentralizerSelftest> {
    let qh = FdAlgebra::group_algebra(&group, subgroup)?;
    let ctx = build_centralizer(group.clone(), subgroup, qh)?;
    let matrix_units = ctx.matrix_unit_check();
    let morita_witness = ctx.verify_morita(&ctx.morita_witness());
    // the largest element of each coset as the alternative choice
    let mut alt = vec![0; ctx.size()];
    for g in 0..group.order() {
        alt[ctx.coset_of(g)] = g;
    }
    let representatives_independent = ctx.representatives_independent(alt)?;
    let images = MatrixUnitImages::from_centralizer(&ctx);
    let mut corner_roundtrip = true;
    for b in ctx.spanning_set() {
        let rec = corner_recover(&ctx, &ctx, &images, &b)?;
        for i in 0..ctx.size() {
            for j in 0..ctx.size() {
                corner_roundtrip &= rec.entry(i, j) == &ctx.matrix_unit(0, 0, b.entry(i, j));
            }
        }
    }
    let trivial: BTreeMap<usize, RatMatrix> = subgroup.iter().map(|&h| (h, RatMatrix::identity(1))).collect();
    let smash = smash_iso(group, subgroup, &FdAlgebra::rationals(&[]), &trivial)?;
    Ok(CentralizerSelftest {
        cosets: ctx.size(),
        rational_dim: ctx.rational_dim(),
        matrix_units,
        morita_witness,
        representatives_independent,
        corner_roundtrip,
        smash,
    })
}
