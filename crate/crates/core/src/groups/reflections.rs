use std::collections::HashMap;

use super::FiniteSymplecticGroup;
use crate::coeffs::matrix::row_space_basis;
use crate::coeffs::{RatMatrix, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Reflection {
    /// Index of the element in the group.
    pub element: usize,
    /// Basis of `im(s − 1)` (two vectors).
    pub image_basis: Vec<Vec<Rational>>,
    /// Projection onto `im(s − 1)` along `ker(s − 1)`.
    pub projection: RatMatrix,
    /// `ω_s = P_sᵀ Ω P_s`, so `ω_s(x, y) = ω(P_s x, P_s y)`.
    pub omega_s: RatMatrix,
    /// Conjugation orbit, numbered from 0 in order of first appearance.
    pub orbit: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReflectionData {
    pub reflections: Vec<Reflection>,
    /// Orbit `i` as positions in `reflections`.
    pub orbits: Vec<Vec<usize>>,
    position: HashMap<usize, usize>,
}

impl ReflectionData {
    pub fn len(&self) -> usize {
        self.reflections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reflections.is_empty()
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    /// The reflection record of a group element, if it is one.
    pub fn get(&self, element: usize) -> Option<&Reflection> {
        self.position.get(&element).map(|&p| &self.reflections[p])
    }

    pub fn get_mut(&mut self, element: usize) -> Option<&mut Reflection> {
        self.position.get(&element).copied().map(move |p| &mut self.reflections[p])
    }

    pub fn orbit_of(&self, element: usize) -> Option<usize> {
        self.get(element).map(|r| r.orbit)
    }

    /// `ω_s(x, y)`; fails when `s` is not a symplectic reflection.
    pub fn omega_s_eval(&self, s: usize, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let r = self.get(s).ok_or(Error::NotAReflection)?;
        Ok(super::dot(x, &r.omega_s.mul_vec(y)))
    }
}

/// All elements with `rank(γ − 1) = 2`, split into conjugation orbits.
pub fn symplectic_reflections(group: &FiniteSymplecticGroup) -> ReflectionData {
    let n = group.dim();
    let id = RatMatrix::identity(n);
    let mut reflections = Vec::new();
    let mut orbit_of_class: HashMap<usize, usize> = HashMap::new();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for g in 0..group.order() {
        let m = group.element(g);
        let defect = m.sub(&id);
        if defect.rank() != 2 {
            continue;
        }
        let image_basis = row_space_basis(&defect.transpose().to_rows());
        let projection = id.sub(&average_of_powers(m));
        let omega_s = projection.transpose().mul(group.omega()).unwrap().mul(&projection).unwrap();
        let next = orbit_of_class.len();
        let orbit = *orbit_of_class.entry(group.class_of(g)).or_insert(next);
        if orbit == orbits.len() {
            orbits.push(Vec::new());
        }
        orbits[orbit].push(reflections.len());
        reflections.push(Reflection { element: g, image_basis, projection, omega_s, orbit });
    }
    let position = reflections.iter().enumerate().map(|(p, r)| (r.element, p)).collect();
    ReflectionData { reflections, orbits, position }
}

/// `(1/k) Σ_{j<k} m^j` where `k` is the order of `m`: the projection onto the fixed space.
fn average_of_powers(m: &RatMatrix) -> RatMatrix {
    let n = m.rows();
    let id = RatMatrix::identity(n);
    let mut sum = id.clone();
    let mut power = m.clone();
    let mut k = 1i64;
    while power != id {
        sum = sum.add(&power);
        power = power.mul(m).unwrap();
        k += 1;
    }
    sum.scale(&Rational::new(1, k))
}

/// The scalar `m_i` with `Σ_{s ∈ S_i} ω_s = m_i ω`.
pub fn reflection_weight(group: &FiniteSymplecticGroup, data: &ReflectionData, orbit: usize) -> Result<Rational> {
    let members = data
        .orbits
        .get(orbit)
        .ok_or_else(|| Error::InvalidArgument(format!("no reflection orbit {orbit}")))?;
    let n = group.dim();
    let mut sum = RatMatrix::zeros(n, n);
    for &p in members {
        sum = sum.add(&data.reflections[p].omega_s);
    }
    let omega = group.omega();
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !omega[(i, j)].is_zero())
        .expect("form is non-degenerate");
    let m = &sum[(i, j)] * &omega[(i, j)].recip()?;
    if omega.scale(&m) != sum {
        return Err(Error::ReducibleAction(orbit));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{doubled_form, generate_group, SymmetricRep, DEFAULT_MAX_ORDER};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn s2() -> FiniteSymplecticGroup {
        FiniteSymplecticGroup::symmetric(2, SymmetricRep::Reflection).unwrap()
    }

    fn s3() -> FiniteSymplecticGroup {
        FiniteSymplecticGroup::symmetric(3, SymmetricRep::Reflection).unwrap()
    }

    #[test]
    fn minus_identity_is_the_only_reflection_of_s2() {
        let g = s2();
        let r = symplectic_reflections(&g);
        assert_eq!(r.len(), 1);
        assert_eq!(r.num_orbits(), 1);
        let s = r.reflections[0].element;
        assert_eq!(g.element(s), &RatMatrix::identity(2).scale(&q(-1)));
        for (x, y) in [([q(1), q(0)], [q(0), q(1)]), ([q(2), q(-3)], [q(5), q(7)])] {
            assert_eq!(r.omega_s_eval(s, &x, &y).unwrap(), g.omega_eval(&x, &y));
        }
        assert_eq!(reflection_weight(&g, &r, 0).unwrap(), q(1));
    }

    #[test]
    fn trivial_group_has_no_reflections() {
        let g = generate_group(&[], &doubled_form(2), DEFAULT_MAX_ORDER).unwrap();
        assert!(symplectic_reflections(&g).is_empty());
        assert_eq!(symplectic_reflections(&g).omega_s_eval(0, &vec![q(1); 4], &vec![q(1); 4]), Err(Error::NotAReflection));
    }

    /// Count elements of rank defect 2 directly and sum their forms built from scratch.
    #[test]
    fn s3_reflections_match_rank_enumeration() {
        let g = s3();
        let r = symplectic_reflections(&g);
        let by_rank = (0..6).filter(|&i| g.element(i).sub(&RatMatrix::identity(4)).rank() == 2).count();
        assert_eq!(by_rank, 3);
        assert_eq!(r.len(), 3);
        assert_eq!(r.num_orbits(), 1);
        // projection oracle: P = (1 − s)/2 for an involution
        for refl in &r.reflections {
            let s = g.element(refl.element);
            let p = RatMatrix::identity(4).sub(s).scale(&Rational::new(1, 2));
            assert_eq!(p, refl.projection);
            let (a, b) = (&refl.image_basis[0], &refl.image_basis[1]);
            assert_eq!(r.omega_s_eval(refl.element, a, b).unwrap(), g.omega_eval(a, b));
            let fixed = s.sub(&RatMatrix::identity(4)).nullspace();
            for k in &fixed {
                for v in [a, b, k] {
                    assert!(r.omega_s_eval(refl.element, k, v).unwrap().is_zero());
                }
            }
        }
        assert_eq!(reflection_weight(&g, &r, 0).unwrap(), Rational::new(3, 2));
    }

    #[test]
    fn conjugation_invariance_of_forms() {
        let g = s3();
        let r = symplectic_reflections(&g);
        let vs: Vec<Vec<Rational>> = vec![vec![q(1), q(2), q(-1), q(3)], vec![q(0), q(-2), q(5), q(1)]];
        for refl in &r.reflections {
            for h in 0..g.order() {
                let conj = g.conj(h, refl.element);
                assert_eq!(r.orbit_of(conj), Some(refl.orbit));
                let (x, y) = (&vs[0], &vs[1]);
                let lhs = r.omega_s_eval(conj, &g.act(h, x), &g.act(h, y)).unwrap();
                assert_eq!(lhs, r.omega_s_eval(refl.element, x, y).unwrap());
            }
            let s = g.element(refl.element);
            let defect = s.sub(&RatMatrix::identity(4));
            assert_eq!(defect.rank() + defect.nullspace().len(), 4);
        }
    }

    #[test]
    fn reducible_product_action_has_no_weight() {
        // S2 x S2 acting by -1 on two separate symplectic planes
        let a = RatMatrix::block_diag(&RatMatrix::identity(2).scale(&q(-1)), &RatMatrix::identity(2));
        let b = RatMatrix::block_diag(&RatMatrix::identity(2), &RatMatrix::identity(2).scale(&q(-1)));
        let omega = RatMatrix::block_diag(&doubled_form(1), &doubled_form(1));
        let g = generate_group(&[a, b], &omega, DEFAULT_MAX_ORDER).unwrap();
        let r = symplectic_reflections(&g);
        assert_eq!(r.len(), 2);
        assert_eq!(reflection_weight(&g, &r, 0), Err(Error::ReducibleAction(0)));
    }
}
