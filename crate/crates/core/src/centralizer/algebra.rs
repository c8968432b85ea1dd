//! Coefficient algebras for the centralizer construction.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::coeffs::{RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::groups::FiniteSymplecticGroup;

/// An associative unital ℚ-algebra with exact, total operations.
pub trait Algebra {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// A ℚ-spanning set, used by exhaustive checks. Truncated algebras span their truncation.
    fn spanning_set(&self) -> Vec<Self::Elem>;

    /// Truncation order for degree-truncated algebras.
    fn truncation_order(&self) -> Option<u32> {
        None
    }
}

/// An algebra containing `ℚH` for a subgroup `H` of an ambient group.
pub trait CoefficientAlgebra: Algebra {
    /// Image of `h ∈ H`, given by its index in the ambient group.
    fn embed_subgroup(&self, h: usize) -> Self::Elem;
}

/// A finite-dimensional algebra given by structure constants in a fixed basis, together with
/// the images of the elements of a subgroup.
#[derive(Clone, Debug, PartialEq)]
pub struct FdAlgebra {
    name: String,
    dim: usize,
    /// `products[i * dim + j]` is `b_i b_j` as a sparse coordinate list.
    products: Vec<Vec<(usize, Rational)>>,
    unit: Vec<Rational>,
    subgroup_images: BTreeMap<usize, Vec<Rational>>,
    truncation: Option<u32>,
}

fn unit_coords(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

impl FdAlgebra {
    /// From a dense product rule on basis indices. Associativity and the unit are checked.
    pub fn from_products(
        name: &str,
        dim: usize,
        unit: Vec<Rational>,
        product: impl Fn(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(Error::Dimension(format!("product of b{i} and b{j} has the wrong length")));
                }
                products.push(p.into_iter().enumerate().filter(|(_, q)| !q.is_zero()).collect());
            }
        }
        let alg = FdAlgebra { name: name.into(), dim, products, unit, subgroup_images: BTreeMap::new(), truncation: None };
        let basis: Vec<_> = (0..dim).map(|i| unit_coords(dim, i)).collect();
        for a in &basis {
            if alg.mul(&alg.unit, a) != *a || alg.mul(a, &alg.unit) != *a {
                return Err(Error::InvalidArgument(format!("{name}: unit is not two-sided")));
            }
            for b in &basis {
                for c in &basis {
                    if alg.mul(&alg.mul(a, b), c) != alg.mul(a, &alg.mul(b, c)) {
                        return Err(Error::InvalidArgument(format!("{name}: product is not associative")));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// `ℚ`, with every listed subgroup element mapped to `1`.
    pub fn rationals(subgroup: &[usize]) -> Self {
        let mut a = Self::from_products("Q", 1, vec![Rational::one()], |_, _| vec![Rational::one()]).expect("Q");
        a.subgroup_images = subgroup.iter().map(|&h| (h, vec![Rational::one()])).collect();
        a
    }

    /// `ℚ[x]/(x^order)` in the basis `1, x, .., x^{order−1}`, with `H` mapped to `1`.
    pub fn truncated_polynomials(order: u32, subgroup: &[usize]) -> Self {
        let k = order as usize;
        let mut a = Self::from_products(&format!("Q[x]/(x^{order})"), k, unit_coords(k, 0), |i, j| {
            if i + j < k {
                unit_coords(k, i + j)
            } else {
                vec![Rational::zero(); k]
            }
        })
        .expect("truncated polynomials");
        a.subgroup_images = subgroup.iter().map(|&h| (h, unit_coords(k, 0))).collect();
        a.truncation = Some(order);
        a
    }

    /// `Mat_d(ℚ)` in the basis `E_{ij}` (row-major), with `H` acting through `rho`.
    pub fn matrices(d: usize, rho: &BTreeMap<usize, RatMatrix>) -> Result<Self> {
        let mut a = Self::from_products(&format!("Mat_{d}(Q)"), d * d, Self::flatten(&RatMatrix::identity(d)), |p, q| {
            let (i, j) = (p / d, p % d);
            let (k, l) = (q / d, q % d);
            if j == k {
                unit_coords(d * d, i * d + l)
            } else {
                vec![Rational::zero(); d * d]
            }
        })?;
        for (&h, m) in rho {
            if m.rows() != d || m.cols() != d {
                return Err(Error::Dimension(format!("representation matrix for {h} is not {d}x{d}")));
            }
            a.subgroup_images.insert(h, Self::flatten(m));
        }
        Ok(a)
    }

    fn flatten(m: &RatMatrix) -> Vec<Rational> {
        m.entries().to_vec()
    }

    /// The group algebra `ℚH` of a subgroup, in the basis of its elements in ambient order.
    pub fn group_algebra(group: &FiniteSymplecticGroup, subgroup: &[usize]) -> Result<Self> {
        if !group.is_subgroup(subgroup) {
            return Err(Error::NotSubgroup("not a subgroup".into()));
        }
        let mut elems = subgroup.to_vec();
        elems.sort_unstable();
        let pos: BTreeMap<usize, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let k = elems.len();
        let mut a = Self::from_products(&format!("QH(order {k})"), k, unit_coords(k, pos[&group.identity()]), |i, j| {
            unit_coords(k, pos[&group.mul(elems[i], elems[j])])
        })?;
        a.subgroup_images = elems.iter().map(|&h| (h, unit_coords(k, pos[&h]))).collect();
        Ok(a)
    }

    /// The smash product `A₀ # H` in the basis `b_i ⊗ h` (index `i * |H| + position of h`),
    /// with `H` acting on `A₀` by the given automorphisms `action[h]`. `A₀` sits inside as
    /// `a ⊗ 1` and `H` as `1 ⊗ h`.
    pub fn smash(
        a0: &FdAlgebra,
        group: &FiniteSymplecticGroup,
        subgroup: &[usize],
        action: &BTreeMap<usize, RatMatrix>,
    ) -> Result<Self> {
        if !group.is_subgroup(subgroup) {
            return Err(Error::NotSubgroup("not a subgroup".into()));
        }
        check_automorphisms(a0, group, subgroup, action)?;
        let mut elems = subgroup.to_vec();
        elems.sort_unstable();
        let pos: BTreeMap<usize, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let (d, m) = (a0.dim, elems.len());
        let idx = |i: usize, h: usize| i * m + pos[&h];
        let mut unit = vec![Rational::zero(); d * m];
        for (i, q) in a0.unit.iter().enumerate() {
            unit[idx(i, group.identity())] = q.clone();
        }
        let mut a = Self::from_products(&format!("{} # H", a0.name), d * m, unit, |p, q| {
            let (i, h) = (p / m, elems[p % m]);
            let (j, h2) = (q / m, elems[q % m]);
            // (b_i ⊗ h)(b_j ⊗ h') = b_i (h.b_j) ⊗ hh'
            let moved = action[&h].col(j);
            let prod = a0.mul(&unit_coords(d, i), &moved);
            let mut out = vec![Rational::zero(); d * m];
            for (k, c) in prod.into_iter().enumerate() {
                out[idx(k, group.mul(h, h2))] = c;
            }
            out
        })?;
        a.subgroup_images = elems
            .iter()
            .map(|&h| {
                let mut v = vec![Rational::zero(); d * m];
                for (i, q) in a0.unit.iter().enumerate() {
                    v[idx(i, h)] = q.clone();
                }
                (h, v)
            })
            .collect();
        a.truncation = a0.truncation;
        Ok(a)
    }

    /// `a ↦ a ⊗ 1` into a smash product built from this algebra over a subgroup of order `m`.
    pub fn smash_inclusion(&self, a: &[Rational], m: usize, identity_pos: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim * m];
        for (i, q) in a.iter().enumerate() {
            v[i * m + identity_pos] = q.clone();
        }
        v
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_element(&self, i: usize) -> Vec<Rational> {
        unit_coords(self.dim, i)
    }

    pub fn with_subgroup_images(mut self, images: BTreeMap<usize, Vec<Rational>>) -> Self {
        self.subgroup_images = images;
        self
    }

    pub fn subgroup_images(&self) -> &BTreeMap<usize, Vec<Rational>> {
        &self.subgroup_images
    }

    /// Matrix of `v ↦ a v` in the basis.
    pub fn left_matrix(&self, a: &[Rational]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&a.to_vec(), &unit_coords(self.dim, j));
            for (i, q) in col.into_iter().enumerate() {
                m[(i, j)] = q;
            }
        }
        m
    }

    /// Matrix of `v ↦ v a` in the basis.
    pub fn right_matrix(&self, a: &[Rational]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&unit_coords(self.dim, j), &a.to_vec());
            for (i, q) in col.into_iter().enumerate() {
                m[(i, j)] = q;
            }
        }
        m
    }
}

/// Check that each `action[h]` is an algebra automorphism and that `h ↦ action[h]` is a
/// homomorphism on the subgroup.
pub fn check_automorphisms(
    a: &FdAlgebra,
    group: &FiniteSymplecticGroup,
    subgroup: &[usize],
    action: &BTreeMap<usize, RatMatrix>,
) -> Result<()> {
    for &h in subgroup {
        let m = action.get(&h).ok_or_else(|| Error::NotAutomorphism(format!("no automorphism given for {h}")))?;
        if m.rows() != a.dim || m.cols() != a.dim || m.mul_vec(&a.unit) != a.unit {
            return Err(Error::NotAutomorphism("not an action by automorphisms".into()));
        }
        for i in 0..a.dim {
            for j in 0..a.dim {
                let lhs = m.mul_vec(&a.mul(&a.basis_element(i), &a.basis_element(j)));
                let rhs = a.mul(&m.col(i), &m.col(j));
                if lhs != rhs {
                    return Err(Error::NotAutomorphism("not an action by automorphisms".into()));
                }
            }
        }
        for &h2 in subgroup {
            if m.mul(&action[&h2])? != action[&group.mul(h, h2)] {
                return Err(Error::NotAutomorphism("not an action by automorphisms".into()));
            }
        }
    }
    Ok(())
}

impl Algebra for FdAlgebra {
    type Elem = Vec<Rational>;

    fn zero(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.dim]
    }

    fn one(&self) -> Vec<Rational> {
        self.unit.clone()
    }

    fn add(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(&self, a: &Vec<Rational>) -> Vec<Rational> {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.products[i * self.dim + j] {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    fn scale(&self, a: &Vec<Rational>, q: &Rational) -> Vec<Rational> {
        a.iter().map(|x| x * q).collect()
    }

    fn spanning_set(&self) -> Vec<Vec<Rational>> {
        (0..self.dim).map(|i| unit_coords(self.dim, i)).collect()
    }

    fn truncation_order(&self) -> Option<u32> {
        self.truncation
    }
}

impl CoefficientAlgebra for FdAlgebra {
    fn embed_subgroup(&self, h: usize) -> Vec<Rational> {
        self.subgroup_images
            .get(&h)
            .cloned()
            .unwrap_or_else(|| panic!("{} has no image for group element {h}", self.name))
    }
}

/// A finite-dimensional bimodule over an [`FdAlgebra`]: for each basis element `b_i` of the
/// algebra, the matrices of `m ↦ b_i m` and `m ↦ m b_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct FdBimodule {
    pub dim: usize,
    pub left: Vec<RatMatrix>,
    pub right: Vec<RatMatrix>,
}

impl FdBimodule {
    /// `A` acting on itself.
    pub fn regular(a: &FdAlgebra) -> Self {
        let basis = a.spanning_set();
        FdBimodule {
            dim: a.dim(),
            left: basis.iter().map(|b| a.left_matrix(b)).collect(),
            right: basis.iter().map(|b| a.right_matrix(b)).collect(),
        }
    }

    pub fn zero(a: &FdAlgebra) -> Self {
        FdBimodule { dim: 0, left: vec![RatMatrix::zeros(0, 0); a.dim()], right: vec![RatMatrix::zeros(0, 0); a.dim()] }
    }

    pub fn direct_sum(&self, other: &FdBimodule) -> Self {
        FdBimodule {
            dim: self.dim + other.dim,
            left: self.left.iter().zip(&other.left).map(|(a, b)| RatMatrix::block_diag(a, b)).collect(),
            right: self.right.iter().zip(&other.right).map(|(a, b)| RatMatrix::block_diag(a, b)).collect(),
        }
    }

    fn combine(mats: &[RatMatrix], dim: usize, a: &[Rational]) -> RatMatrix {
        let mut out = RatMatrix::zeros(dim, dim);
        for (m, q) in mats.iter().zip(a) {
            if !q.is_zero() {
                out = out.add(&m.scale(q));
            }
        }
        out
    }

    /// `a · m`.
    pub fn act_left(&self, a: &[Rational], m: &[Rational]) -> Vec<Rational> {
        Self::combine(&self.left, self.dim, a).mul_vec(m)
    }

    /// `m · a`.
    pub fn act_right(&self, m: &[Rational], a: &[Rational]) -> Vec<Rational> {
        Self::combine(&self.right, self.dim, a).mul_vec(m)
    }

    /// Module axioms on all basis pairs: `L(ab) = L(a)L(b)`, `R(ab) = R(b)R(a)`, `L(1) = R(1) = 1`,
    /// and commuting left and right actions.
    pub fn validate(&self, a: &FdAlgebra) -> Result<()> {
        if self.left.len() != a.dim() || self.right.len() != a.dim() {
            return Err(Error::BimoduleAxioms("bimodule axioms fail".into()));
        }
        let id = RatMatrix::identity(self.dim);
        let one = a.one();
        if Self::combine(&self.left, self.dim, &one) != id || Self::combine(&self.right, self.dim, &one) != id {
            return Err(Error::BimoduleAxioms("bimodule axioms fail".into()));
        }
        let basis = a.spanning_set();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let xy = a.mul(x, y);
                let l = Self::combine(&self.left, self.dim, &xy);
                let r = Self::combine(&self.right, self.dim, &xy);
                if l != self.left[i].mul(&self.left[j])? || r != self.right[j].mul(&self.right[i])? {
                    return Err(Error::BimoduleAxioms("bimodule axioms fail".into()));
                }
                if self.left[i].mul(&self.right[j])? != self.right[j].mul(&self.left[i])? {
                    return Err(Error::BimoduleAxioms("bimodule axioms fail".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::SymmetricRep;

    #[test]
    fn builtin_algebras_are_associative() {
        let g = FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection).unwrap();
        let all: Vec<usize> = (0..g.order()).collect();
        let qg = FdAlgebra::group_algebra(&g, &all).unwrap();
        assert_eq!(qg.dim(), 6);
        let s = (1..g.order()).find(|&x| g.mul(x, x) == g.identity()).unwrap();
        assert_eq!(qg.mul(&qg.embed_subgroup(s), &qg.embed_subgroup(s)), qg.one());
        let t = FdAlgebra::truncated_polynomials(3, &[0]);
        let x = t.basis_element(1);
        assert!(t.is_zero(&t.mul(&x, &t.mul(&x, &x))));
        let m = FdAlgebra::matrices(2, &BTreeMap::new()).unwrap();
        assert_eq!(m.dim(), 4);
    }

    #[test]
    fn non_associative_products_are_rejected() {
        // b0 unit, b1 b1 = b1 + b0 is associative; b1 b1 = b0 with b1 b0 = 0 breaks the unit
        let bad = FdAlgebra::from_products("bad", 2, vec![Rational::one(), Rational::zero()], |i, j| match (i, j) {
            (0, k) => unit_coords(2, k),
            (1, 0) => vec![Rational::zero(); 2],
            _ => unit_coords(2, 0),
        });
        assert!(bad.is_err());
    }

    #[test]
    fn smash_with_the_sign_action() {
        // Q[x]/(x^2) # S_2 with s.x = −x: (1 ⊗ s)(x ⊗ 1) = −(x ⊗ s)
        let g = FiniteSymplecticGroup::symmetric(2, SymmetricRep::Reflection).unwrap();
        let a0 = FdAlgebra::truncated_polynomials(2, &[]);
        let action = BTreeMap::from([
            (0, RatMatrix::identity(2)),
            (1, RatMatrix::from_int_rows(&[&[1, 0], &[0, -1]])),
        ]);
        let a = FdAlgebra::smash(&a0, &g, &[0, 1], &action).unwrap();
        let s = a.embed_subgroup(1);
        let x = a0.smash_inclusion(&a0.basis_element(1), 2, 0);
        assert_eq!(a.mul(&s, &x), a.neg(&a.mul(&x, &s)));
        let bad = BTreeMap::from([(0, RatMatrix::identity(2)), (1, RatMatrix::from_int_rows(&[&[1, 1], &[0, 1]]))]);
        assert!(matches!(FdAlgebra::smash(&a0, &g, &[0, 1], &bad).unwrap_err(), Error::NotAutomorphism(_)));
    }

    #[test]
    fn regular_bimodule_axioms() {
        let t = FdAlgebra::truncated_polynomials(3, &[0]);
        let m = FdBimodule::regular(&t);
        m.validate(&t).unwrap();
        m.direct_sum(&m).validate(&t).unwrap();
        let mut broken = m.clone();
        broken.left[1] = RatMatrix::identity(3);
        assert!(matches!(broken.validate(&t).unwrap_err(), Error::BimoduleAxioms(_)));
    }
}
