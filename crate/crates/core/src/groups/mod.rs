//! Finite groups of rational matrices acting symplectically on `V`.
//!
//! Elements are stored once, in a canonical order: the identity first, then every other
//! element sorted by its reduced entries in row-major order. All group operations go through
//! the multiplication table, so elements are referred to by index everywhere else.

mod leaf;
mod reflections;
mod spec;

pub use leaf::{leaf_data, LeafData};
pub use reflections::{reflection_weight, symplectic_reflections, Reflection, ReflectionData};
pub use spec::{GroupSpec, SymmetricRep};

use std::collections::{HashMap, VecDeque};

use crate::coeffs::{RatMatrix, Rational};
use crate::error::{Error, Result};

/// Default closure bound: large enough for `S_8`.
pub const DEFAULT_MAX_ORDER: usize = 20160;

#[derive(Clone, Debug)]
pub struct FiniteSymplecticGroup {
    omega: RatMatrix,
    elements: Vec<RatMatrix>,
    index: HashMap<RatMatrix, usize>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// Action on `h` when the group was obtained by doubling `W ⊂ GL(h)` onto `h* ⊕ h`.
    h_action: Option<Vec<RatMatrix>>,
}

impl FiniteSymplecticGroup {
    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn omega(&self) -> &RatMatrix {
        &self.omega
    }

    /// `ω(x, y) = xᵀ Ω y`.
    pub fn omega_eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.omega.mul_vec(y))
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, g: usize) -> &RatMatrix {
        &self.elements[g]
    }

    pub fn elements(&self) -> &[RatMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &RatMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g a g⁻¹`.
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Dimension of `h` when the group came from the doubling construction.
    pub fn dim_h(&self) -> Option<usize> {
        self.h_action.as_ref().map(|_| self.dim() / 2)
    }

    /// The matrix of `g` on `h` (doubled groups only).
    pub fn h_matrix(&self, g: usize) -> Option<&RatMatrix> {
        self.h_action.as_ref().map(|v| &v[g])
    }

    /// Apply `g` to a vector of `V`.
    pub fn act(&self, g: usize, v: &[Rational]) -> Vec<Rational> {
        self.elements[g].mul_vec(v)
    }

    /// Close the generators under multiplication.
    pub fn generate(generators: &[RatMatrix], omega: &RatMatrix, max_order: usize) -> Result<Self> {
        let n = omega.rows();
        if !omega.is_square() || omega.transpose() != omega.scale(&Rational::from_int(-1)) {
            return Err(Error::InvalidArgument("form must be square and skew-symmetric".into()));
        }
        if omega.rank() != n {
            return Err(Error::InvalidArgument("form must be non-degenerate".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != n || g.cols() != n {
                return Err(Error::Dimension(format!("generator {i} has the wrong size")));
            }
            if g.transpose().mul(omega)?.mul(g)? != *omega {
                return Err(Error::NotSymplectic(i));
            }
        }
        let id = RatMatrix::identity(n);
        let mut seen: HashMap<RatMatrix, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut found = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let m = found[i].mul(g)?;
                if !seen.contains_key(&m) {
                    seen.insert(m.clone(), ());
                    found.push(m);
                    if found.len() > max_order {
                        return Err(Error::GroupTooLarge(max_order));
                    }
                    queue.push_back(found.len() - 1);
                }
            }
        }
        Ok(Self::from_closed_set(found, omega.clone(), None))
    }

    /// Double `W ⊂ GL(h)` onto `V = h* ⊕ h` (basis `x_1..x_n, y_1..y_n`), acting by `A^{-T}` on
    /// `h*` and `A` on `h`, with `ω((a,α),(b,β)) = ⟨β,a⟩ − ⟨α,b⟩`.
    pub fn from_h_generators(dim_h: usize, generators: &[RatMatrix], max_order: usize) -> Result<Self> {
        let mut doubled = Vec::new();
        for (i, a) in generators.iter().enumerate() {
            if a.rows() != dim_h || a.cols() != dim_h {
                return Err(Error::Dimension(format!("generator {i} is not {dim_h}x{dim_h}")));
            }
            let a_inv_t = a.inverse().map_err(|_| Error::InvalidArgument(format!("generator {i} is singular")))?.transpose();
            doubled.push(RatMatrix::block_diag(&a_inv_t, a));
        }
        let omega = doubled_form(dim_h);
        let mut group = Self::generate(&doubled, &omega, max_order)?;
        let h_action = group.elements.iter().map(|m| h_block(m, dim_h)).collect();
        group.h_action = Some(h_action);
        Ok(group)
    }

    /// `S_n` acting on its reflection (`dim n−1`) or permutation (`dim n`) representation,
    /// doubled onto `h* ⊕ h`.
    pub fn symmetric(n: usize, rep: SymmetricRep) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("S_n needs n >= 1".into()));
        }
        let gens = symmetric_generators_on_h(n, rep);
        let dim_h = match rep {
            SymmetricRep::Reflection => n - 1,
            SymmetricRep::Permutation => n,
        };
        let mut order = 1usize;
        for k in 2..=n {
            order *= k;
        }
        Self::from_h_generators(dim_h, &gens, order.max(DEFAULT_MAX_ORDER))
    }

    fn from_closed_set(mut found: Vec<RatMatrix>, omega: RatMatrix, h_action: Option<Vec<RatMatrix>>) -> Self {
        let id = found.remove(0);
        found.sort();
        found.insert(0, id);
        let index: HashMap<RatMatrix, usize> = found.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let table = multiplication_table(&found, &index);
        let inverse: Vec<usize> = (0..found.len())
            .map(|a| (0..found.len()).find(|&b| table[a][b] == 0).expect("closed finite set has inverses"))
            .collect();
        let mut class_of = vec![usize::MAX; found.len()];
        let mut classes = Vec::new();
        for a in 0..found.len() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..found.len()).map(|g| table[table[g][a]][inverse[g]]).collect();
            cls.sort_unstable();
            cls.dedup();
            for &x in &cls {
                class_of[x] = classes.len();
            }
            classes.push(cls);
        }
        FiniteSymplecticGroup { omega, elements: found, index, table, inverse, classes, class_of, h_action }
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for g in 1..self.order() {
            if span.len() == self.order() {
                break;
            }
            if !span.contains(&g) {
                gens.push(g);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Whether `subset` (indices) is closed under products and contains the identity.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let set: std::collections::HashSet<usize> = subset.iter().copied().collect();
        set.contains(&0) && subset.iter().all(|&a| subset.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// The subgroup generated by the given elements, sorted by index.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = vec![0usize];
        let mut in_set = vec![false; self.order()];
        in_set[0] = true;
        let mut i = 0;
        while i < members.len() {
            for &g in gens {
                let p = self.mul(members[i], g);
                if !in_set[p] {
                    in_set[p] = true;
                    members.push(p);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// A new group object for a subgroup, with the same form; returns it together with the map
    /// from the subgroup's own indices to indices in `self`.
    pub fn restrict(&self, subset: &[usize]) -> Result<(FiniteSymplecticGroup, Vec<usize>)> {
        if !self.is_subgroup(subset) {
            return Err(Error::NotSubgroup("subset is not closed under multiplication".into()));
        }
        let found: Vec<RatMatrix> = std::iter::once(self.elements[0].clone())
            .chain(subset.iter().filter(|&&g| g != 0).map(|&g| self.elements[g].clone()))
            .collect();
        let mut sub = Self::from_closed_set(found, self.omega.clone(), None);
        if self.h_action.is_some() {
            sub.h_action = Some(sub.elements.iter().map(|m| h_block(m, self.dim() / 2)).collect());
        }
        let map = sub.elements.iter().map(|m| self.index[m]).collect();
        Ok((sub, map))
    }

    /// `{γ : γ·b = b}` for `b ∈ V*`, with `Γ` acting on `V*` contragrediently.
    pub fn stabilizer(&self, b: &[Rational]) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.elements[g].transpose().mul_vec(b) == b).collect()
    }

    /// `{γ : γ v = v}` for a vector `v ∈ V`.
    pub fn stabilizer_of_vector(&self, v: &[Rational]) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.act(g, v) == v).collect()
    }

    /// `N_G(K)` for a subgroup `K`.
    pub fn normalizer(&self, subgroup: &[usize]) -> Vec<usize> {
        let set: std::collections::HashSet<usize> = subgroup.iter().copied().collect();
        (0..self.order()).filter(|&g| subgroup.iter().all(|&k| set.contains(&self.conj(g, k)))).collect()
    }
}

/// `generate_group`: closure of the generators with its table and classes.
pub fn generate_group(generators: &[RatMatrix], omega: &RatMatrix, max_order: usize) -> Result<FiniteSymplecticGroup> {
    FiniteSymplecticGroup::generate(generators, omega, max_order)
}

/// `stabilizer(G, b)` for `b ∈ V*`.
pub fn stabilizer(group: &FiniteSymplecticGroup, b: &[Rational]) -> Vec<usize> {
    group.stabilizer(b)
}

/// The form `[[0, −I], [I, 0]]` on `h* ⊕ h` in the basis `x_1..x_n, y_1..y_n`.
pub fn doubled_form(dim_h: usize) -> RatMatrix {
    let mut omega = RatMatrix::zeros(2 * dim_h, 2 * dim_h);
    for i in 0..dim_h {
        omega[(i, dim_h + i)] = Rational::from_int(-1);
        omega[(dim_h + i, i)] = Rational::one();
    }
    omega
}

/// The lower-right `dim_h × dim_h` block: the action on `h`.
fn h_block(m: &RatMatrix, dim_h: usize) -> RatMatrix {
    let mut a = RatMatrix::zeros(dim_h, dim_h);
    for i in 0..dim_h {
        for j in 0..dim_h {
            a[(i, j)] = m[(dim_h + i, dim_h + j)].clone();
        }
    }
    a
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

fn multiplication_table(elements: &[RatMatrix], index: &HashMap<RatMatrix, usize>) -> Vec<Vec<usize>> {
    let n = elements.first().map(|m| m.rows()).unwrap_or(0);
    // Identify elements by their image of one probe vector when that is injective; this turns
    // each table entry into a matrix-vector product.
    let probe: Vec<Rational> = (0..n).map(|i| Rational::from_int((i * i + 7 * i + 13) as i64 * (1 << i.min(20)))).collect();
    let images: Vec<Vec<Rational>> = elements.iter().map(|m| m.mul_vec(&probe)).collect();
    let by_image: HashMap<&Vec<Rational>, usize> = images.iter().enumerate().map(|(i, v)| (v, i)).collect();
    if by_image.len() == elements.len() {
        elements
            .iter()
            .map(|a| images.iter().map(|bv| by_image[&a.mul_vec(bv)]).collect())
            .collect()
    } else {
        elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.mul(b).expect("square matrices")]).collect())
            .collect()
    }
}

/// Generators of `S_n` on `h`: adjacent transpositions, in the basis `e_i − e_{i+1}` for the
/// reflection representation or `e_i` for the permutation representation.
pub fn symmetric_generators_on_h(n: usize, rep: SymmetricRep) -> Vec<RatMatrix> {
    (0..n.saturating_sub(1)).map(|k| permutation_on_h(&transposition(n, k, k + 1), rep)).collect()
}

fn transposition(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(a, b);
    p
}

/// The matrix of the permutation `p` (sending `e_i` to `e_{p[i]}`) on `h`.
pub fn permutation_on_h(p: &[usize], rep: SymmetricRep) -> RatMatrix {
    let n = p.len();
    match rep {
        SymmetricRep::Permutation => {
            let mut m = RatMatrix::zeros(n, n);
            for (i, &pi) in p.iter().enumerate() {
                m[(pi, i)] = Rational::one();
            }
            m
        }
        SymmetricRep::Reflection => {
            // image of e_i − e_{i+1} is e_{p(i)} − e_{p(i+1)} = ±Σ of consecutive differences
            let mut m = RatMatrix::zeros(n - 1, n - 1);
            for i in 0..n - 1 {
                let (a, b) = (p[i], p[i + 1]);
                let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
                for j in lo..hi {
                    m[(j, i)] = Rational::from_int(sign);
                }
            }
            m
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_identity(n: usize) -> RatMatrix {
        RatMatrix::identity(n).scale(&Rational::from_int(-1))
    }

    #[test]
    fn minus_identity_generates_order_two() {
        let g = generate_group(&[minus_identity(2)], &doubled_form(1), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.element(0), &RatMatrix::identity(2));
    }

    #[test]
    fn non_symplectic_generator_is_rejected() {
        let m = RatMatrix::from_int_rows(&[&[2, 0], &[0, 1]]);
        assert_eq!(generate_group(&[m], &doubled_form(1), 10).unwrap_err(), Error::NotSymplectic(0));
    }

    #[test]
    fn closure_bound_is_enforced() {
        // a symplectic shear has infinite order
        let m = RatMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(generate_group(&[m], &doubled_form(1), 50).unwrap_err(), Error::GroupTooLarge(50));
    }

    /// Independent closure: repeatedly multiply every pair until nothing new appears.
    fn brute_force_order(gens: &[RatMatrix]) -> usize {
        let mut set: Vec<RatMatrix> = gens.to_vec();
        loop {
            let mut added = false;
            let snapshot = set.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let p = a.mul(b).unwrap();
                    if !set.contains(&p) {
                        set.push(p);
                        added = true;
                    }
                }
            }
            if !added {
                return set.len();
            }
        }
    }

    #[test]
    fn s3_reflection_closure_matches_brute_force() {
        let g = FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection).unwrap();
        let gens: Vec<RatMatrix> = symmetric_generators_on_h(3, SymmetricRep::Reflection)
            .iter()
            .map(|a| RatMatrix::block_diag(&a.inverse().unwrap().transpose(), a))
            .collect();
        assert_eq!(g.order(), brute_force_order(&gens));
        assert_eq!(g.order(), 6);
        assert_eq!(g.conjugacy_classes().len(), 3);
        for m in g.elements() {
            assert_eq!(&m.transpose().mul(g.omega()).unwrap().mul(m).unwrap(), g.omega());
        }
    }

    #[test]
    fn table_is_consistent_with_matrices() {
        let g = FiniteSymplecticGroup::symmetric(4, SymmetricRep::Reflection).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.conjugacy_classes().len(), 5);
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).mul(g.element(b)).unwrap());
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn stabilizer_examples() {
        let g = FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection).unwrap();
        assert_eq!(g.stabilizer(&vec![Rational::zero(); 4]).len(), 6);
        let generic: Vec<Rational> = [1, 5, 0, 0].iter().map(|&x| Rational::from_int(x)).collect();
        assert_eq!(g.stabilizer(&generic), vec![0]);
        // b = e1 − e2 + 2(e2 − e3) = (1, 1, −2) lies on the hyperplane of (12) only
        let wall: Vec<Rational> = [1, 2, 0, 0].iter().map(|&x| Rational::from_int(x)).collect();
        assert_eq!(g.stabilizer(&wall).len(), 2);
    }

    #[test]
    fn stabilizer_is_scale_invariant() {
        let g = FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection).unwrap();
        for b in [[1, 2, 0, 0], [1, 0, 0, 0], [3, -1, 2, 0], [0, 0, 0, 0]] {
            let b: Vec<Rational> = b.iter().map(|&x| Rational::from_int(x)).collect();
            let tb: Vec<Rational> = b.iter().map(|x| x * &Rational::new(-3, 2)).collect();
            let zb: Vec<Rational> = vec![Rational::zero(); 4];
            assert_eq!(g.stabilizer(&b), g.stabilizer(&tb));
            let s0 = g.stabilizer(&zb);
            assert!(g.stabilizer(&b).iter().all(|x| s0.contains(x)));
        }
    }
}
