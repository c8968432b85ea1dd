use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use crate::coeffs::param::{format_monomial, grlex_cmp};
use crate::coeffs::poly::{degree, Exponents};
use crate::coeffs::{ParamPoly, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::groups::{symplectic_reflections, FiniteSymplecticGroup, ReflectionData};

/// An ordered monomial in `v_1..v_{2n}` (as exponents) followed by a group element.
pub type Key = (Exponents, usize);

/// An element of `H(V, Γ)` in PBW normal form: monomial on the left, group element on the right.
#[derive(Clone, PartialEq, Debug)]
pub struct SRAElement {
    dim: usize,
    arity: usize,
    terms: BTreeMap<Key, ParamPoly>,
}

impl SRAElement {
    pub fn zero(dim: usize, arity: usize) -> Self {
        SRAElement { dim, arity, terms: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &[u32], g: usize) -> ParamPoly {
        self.terms.get(&(mono.to_vec(), g)).cloned().unwrap_or_else(|| ParamPoly::zero(self.arity))
    }

    pub fn add_term(&mut self, mono: Exponents, g: usize, c: ParamPoly) {
        debug_assert_eq!(mono.len(), self.dim);
        if c.is_zero() {
            return;
        }
        let key = (mono, g);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((m, g), c) in &other.terms {
            out.add_term(m.clone(), *g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(q))
    }

    pub fn mul_param(&self, p: &ParamPoly) -> Self {
        self.map_coeffs(|c| c * p)
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        let mut out = SRAElement::zero(self.dim, self.arity);
        for ((m, g), c) in &self.terms {
            out.add_term(m.clone(), *g, f(c));
        }
        out
    }

    /// Substitute parameter values in every coefficient.
    pub fn specialize(&self, values: &BTreeMap<usize, Rational>) -> Self {
        self.map_coeffs(|c| c.specialize(values))
    }

    /// Highest `V`-degree present (`None` for zero).
    pub fn v_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(m, _)| degree(m)).max()
    }

    /// Filtration degree with `deg v = 1`, `deg g = 0` and every parameter of degree 2.
    pub fn filtration_degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .flat_map(|((m, _), c)| c.terms().map(move |(e, _)| degree(m) + 2 * degree(e)))
            .max()
    }

    /// The part of `V`-degree exactly `d`.
    pub fn v_homogeneous_part(&self, d: u32) -> Self {
        let mut out = SRAElement::zero(self.dim, self.arity);
        for ((m, g), c) in &self.terms {
            if degree(m) == d {
                out.add_term(m.clone(), *g, c.clone());
            }
        }
        out
    }

    /// Coordinates over ℚ, keyed by `(monomial, group element, parameter exponents)`.
    pub fn rational_coordinates(&self) -> BTreeMap<(Exponents, usize, Exponents), Rational> {
        let mut out = BTreeMap::new();
        for ((m, g), c) in &self.terms {
            for (e, q) in c.terms() {
                out.insert((m.clone(), *g, e.clone()), q.clone());
            }
        }
        out
    }
}

/// One factor of a word passed to [`SRAlgebra::normalize`].
#[derive(Clone, Debug, PartialEq)]
pub enum WordItem {
    Vector(Vec<Rational>),
    Group(usize),
    Scalar(ParamPoly),
}

type Expansion = Arc<Vec<(Exponents, usize, ParamPoly)>>;

/// `H_{t,c}(V, Γ)` with `[v_j, v_i] = t ω(v_j, v_i) + Σ_s c(s) ω_s(v_j, v_i) s`.
///
/// Parameters are polynomial: `t` and the orbit parameters `c(s)` are [`ParamPoly`] values in
/// the variables `t = c0, c1, ..., cr`. Specializing a variable substitutes it everywhere,
/// including in the commutator table, so computations happen in `H_{t,c}` for the given values.
pub struct SRAlgebra {
    group: Arc<FiniteSymplecticGroup>,
    reflections: ReflectionData,
    arity: usize,
    base_t: ParamPoly,
    base_c: Vec<ParamPoly>,
    values: BTreeMap<usize, Rational>,
    /// `kappa[j][i]` for `i < j`.
    kappa: Vec<Vec<SRAElement>>,
    memo: RwLock<HashMap<(Exponents, usize), Expansion>>,
}

impl Clone for SRAlgebra {
    fn clone(&self) -> Self {
        Self::assemble(
            self.group.clone(),
            self.reflections.clone(),
            self.arity,
            self.base_t.clone(),
            self.base_c.clone(),
            self.values.clone(),
        )
    }
}

impl std::fmt::Debug for SRAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SRAlgebra")
            .field("dim", &self.dim())
            .field("order", &self.group.order())
            .field("reflections", &self.reflections.len())
            .field("values", &self.values)
            .finish()
    }
}

impl SRAlgebra {
    /// Generic parameters: `t` and one `c_i` per reflection orbit.
    pub fn new(group: Arc<FiniteSymplecticGroup>) -> Self {
        let reflections = symplectic_reflections(&group);
        let arity = 1 + reflections.num_orbits();
        let base_c = (1..arity).map(|i| ParamPoly::c(arity, i)).collect();
        Self::assemble(group, reflections, arity, ParamPoly::t(arity), base_c, BTreeMap::new())
    }

    /// Explicit parameter functions: `t` is replaced by `t_coeff` and `c(s)` for `s ∈ S_i` by
    /// `orbit_coeffs[i]`, all polynomials of the given arity. The reflection data may be
    /// supplied modified (for mutation tests).
    pub fn with_coefficients(
        group: Arc<FiniteSymplecticGroup>,
        reflections: ReflectionData,
        arity: usize,
        t_coeff: ParamPoly,
        orbit_coeffs: Vec<ParamPoly>,
    ) -> Result<Self> {
        if orbit_coeffs.len() != reflections.num_orbits() {
            return Err(Error::LengthMismatch(format!(
                "{} orbit parameters for {} orbits",
                orbit_coeffs.len(),
                reflections.num_orbits()
            )));
        }
        if t_coeff.arity() != arity || orbit_coeffs.iter().any(|c| c.arity() != arity) {
            return Err(Error::ArityMismatch { left: arity, right: t_coeff.arity() });
        }
        Ok(Self::assemble(group, reflections, arity, t_coeff, orbit_coeffs, BTreeMap::new()))
    }

    fn assemble(
        group: Arc<FiniteSymplecticGroup>,
        reflections: ReflectionData,
        arity: usize,
        base_t: ParamPoly,
        base_c: Vec<ParamPoly>,
        values: BTreeMap<usize, Rational>,
    ) -> Self {
        let dim = group.dim();
        let t = base_t.specialize(&values);
        let cs: Vec<ParamPoly> = base_c.iter().map(|c| c.specialize(&values)).collect();
        let zero_mono = vec![0u32; dim];
        let unit = |i: usize| -> Vec<Rational> {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::one();
            v
        };
        let mut kappa = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut row = Vec::with_capacity(j);
            for i in 0..j {
                let (vj, vi) = (unit(j), unit(i));
                let mut k = SRAElement::zero(dim, arity);
                k.add_term(zero_mono.clone(), 0, t.scale(&group.omega_eval(&vj, &vi)));
                for r in &reflections.reflections {
                    let w = crate::groups::dot(&vj, &r.omega_s.mul_vec(&vi));
                    if !w.is_zero() {
                        k.add_term(zero_mono.clone(), r.element, cs[r.orbit].scale(&w));
                    }
                }
                row.push(k);
            }
            kappa.push(row);
        }
        SRAlgebra { group, reflections, arity, base_t, base_c, values, kappa, memo: RwLock::new(HashMap::new()) }
    }

    /// The same algebra with the given parameter values substituted (on top of existing ones).
    pub fn specialize_params(&self, values: &BTreeMap<usize, Rational>) -> Self {
        let mut merged = self.values.clone();
        merged.extend(values.iter().map(|(k, v)| (*k, v.clone())));
        self.with_values(merged)
    }

    /// The same presentation with exactly these parameter values fixed (others symbolic).
    pub fn with_values(&self, values: BTreeMap<usize, Rational>) -> Self {
        Self::assemble(
            self.group.clone(),
            self.reflections.clone(),
            self.arity,
            self.base_t.clone(),
            self.base_c.clone(),
            values,
        )
    }

    pub fn group(&self) -> &FiniteSymplecticGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteSymplecticGroup> {
        self.group.clone()
    }

    pub fn reflections(&self) -> &ReflectionData {
        &self.reflections
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &BTreeMap<usize, Rational> {
        &self.values
    }

    /// Parameter variables that are still symbolic.
    pub fn free_params(&self) -> Vec<usize> {
        (0..self.arity).filter(|v| !self.values.contains_key(v)).collect()
    }

    /// The effective `t` (after specialization).
    pub fn t_coeff(&self) -> ParamPoly {
        self.base_t.specialize(&self.values)
    }

    /// The effective `c(s)` for reflections in orbit `i`.
    pub fn orbit_coeff(&self, i: usize) -> ParamPoly {
        self.base_c[i].specialize(&self.values)
    }

    /// `κ(v_j, v_i)` as a degree-0 element.
    pub fn kappa(&self, j: usize, i: usize) -> SRAElement {
        use std::cmp::Ordering::*;
        match j.cmp(&i) {
            Greater => self.kappa[j][i].clone(),
            Less => self.kappa[i][j].neg(),
            Equal => self.zero(),
        }
    }

    pub fn zero(&self) -> SRAElement {
        SRAElement::zero(self.dim(), self.arity)
    }

    pub fn one(&self) -> SRAElement {
        self.scalar(ParamPoly::one(self.arity))
    }

    pub fn scalar(&self, p: ParamPoly) -> SRAElement {
        let mut e = self.zero();
        e.add_term(vec![0; self.dim()], 0, p);
        e
    }

    pub fn param(&self, var: usize) -> SRAElement {
        self.scalar(ParamPoly::var(self.arity, var).specialize(&self.values))
    }

    /// The basis vector `v_i` as an element.
    pub fn generator(&self, i: usize) -> SRAElement {
        let mut m = vec![0; self.dim()];
        m[i] = 1;
        let mut e = self.zero();
        e.add_term(m, 0, ParamPoly::one(self.arity));
        e
    }

    /// The linear element `Σ v[i] v_i`.
    pub fn vector(&self, v: &[Rational]) -> SRAElement {
        let mut e = self.zero();
        for (i, a) in v.iter().enumerate() {
            if !a.is_zero() {
                let mut m = vec![0; self.dim()];
                m[i] = 1;
                e.add_term(m, 0, ParamPoly::constant(self.arity, a.clone()));
            }
        }
        e
    }

    pub fn group_element(&self, g: usize) -> SRAElement {
        let mut e = self.zero();
        e.add_term(vec![0; self.dim()], g, ParamPoly::one(self.arity));
        e
    }

    /// A normal monomial times a group element, coefficient 1.
    pub fn basis_element(&self, mono: Exponents, g: usize) -> SRAElement {
        let mut e = self.zero();
        e.add_term(mono, g, ParamPoly::one(self.arity));
        e
    }

    /// `e = |Γ|⁻¹ Σ γ`.
    pub fn spherical_idempotent(&self) -> SRAElement {
        let mut e = self.zero();
        let w = Rational::new(1, self.group.order() as i64);
        for g in 0..self.group.order() {
            e.add_term(vec![0; self.dim()], g, ParamPoly::constant(self.arity, w.clone()));
        }
        e
    }

    fn check(&self, a: &SRAElement) -> Result<()> {
        if a.dim != self.dim() || a.arity != self.arity {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// The normal form of `v^m · v_i` (no group element on the left).
    fn mono_times_letter(&self, m: &Exponents, i: usize) -> Expansion {
        let key = (m.clone(), i);
        if let Some(hit) = self.memo.read().unwrap().get(&key) {
            return hit.clone();
        }
        let result = Arc::new(self.compute_mono_times_letter(m, i));
        self.memo.write().unwrap().insert(key, result.clone());
        result
    }

    fn compute_mono_times_letter(&self, m: &Exponents, i: usize) -> Vec<(Exponents, usize, ParamPoly)> {
        let last = m.iter().rposition(|&k| k > 0);
        let j = match last {
            Some(j) if j > i => j,
            _ => {
                let mut out = m.clone();
                out[i] += 1;
                return vec![(out, 0, ParamPoly::one(self.arity))];
            }
        };
        // v^m v_i = w v_j v_i = (w v_i) v_j + w κ(v_j, v_i)
        let mut w = m.clone();
        w[j] -= 1;
        let mut acc = SRAElement::zero(self.dim(), self.arity);
        for (m1, g1, c1) in self.mono_times_letter(&w, i).iter() {
            let col = self.group.element(*g1).col(j);
            for (k, a) in col.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (m2, h, c2) in self.mono_times_letter(m1, k).iter() {
                    acc.add_term(m2.clone(), self.group.mul(*h, *g1), (c1 * c2).scale(a));
                }
            }
        }
        for ((_, g), c) in &self.kappa[j][i].terms {
            acc.add_term(w.clone(), *g, c.clone());
        }
        acc.terms.into_iter().map(|((m, g), c)| (m, g, c)).collect()
    }

    /// `a · v_i`.
    pub fn mul_letter(&self, a: &SRAElement, i: usize) -> SRAElement {
        let mut out = self.zero();
        for ((m, g), c) in &a.terms {
            if *g == 0 {
                for (m2, h, c2) in self.mono_times_letter(m, i).iter() {
                    out.add_term(m2.clone(), *h, c * c2);
                }
                continue;
            }
            let col = self.group.element(*g).col(i);
            for (k, q) in col.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                for (m2, h, c2) in self.mono_times_letter(m, k).iter() {
                    out.add_term(m2.clone(), self.group.mul(*h, *g), (c * c2).scale(q));
                }
            }
        }
        out
    }

    /// `a · g`.
    pub fn mul_group(&self, a: &SRAElement, g: usize) -> SRAElement {
        let mut out = self.zero();
        for ((m, h), c) in &a.terms {
            out.add_term(m.clone(), self.group.mul(*h, g), c.clone());
        }
        out
    }

    /// Normal-form product.
    pub fn multiply(&self, a: &SRAElement, b: &SRAElement) -> Result<SRAElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Normal-form product; panics if either element belongs to a different algebra shape.
    pub fn mul(&self, a: &SRAElement, b: &SRAElement) -> SRAElement {
        assert!(a.dim == self.dim() && b.dim == self.dim(), "algebra mismatch");
        let mut out = self.zero();
        let mut iter = b.terms.iter().peekable();
        while let Some(((m2, _), _)) = iter.peek() {
            let m2 = m2.clone();
            let mut cur = a.clone();
            for (letter, &k) in m2.iter().enumerate() {
                for _ in 0..k {
                    cur = self.mul_letter(&cur, letter);
                }
            }
            while let Some(((m, g2), c2)) = iter.peek() {
                if *m != m2 {
                    break;
                }
                for ((m3, h), c3) in &cur.terms {
                    out.add_term(m3.clone(), self.group.mul(*h, *g2), c3 * c2);
                }
                iter.next();
            }
        }
        out
    }

    pub fn commutator(&self, a: &SRAElement, b: &SRAElement) -> SRAElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn pow(&self, a: &SRAElement, k: u32) -> SRAElement {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    /// Multiply out a word left to right. Zero vectors give zero.
    pub fn normalize(&self, word: &[WordItem]) -> Result<SRAElement> {
        let mut cur = self.one();
        for item in word {
            cur = match item {
                WordItem::Vector(v) => {
                    if v.len() != self.dim() {
                        return Err(Error::Dimension(format!("vector of length {} in V of dim {}", v.len(), self.dim())));
                    }
                    self.mul(&cur, &self.vector(v))
                }
                WordItem::Group(g) => {
                    if *g >= self.group.order() {
                        return Err(Error::InvalidArgument(format!("no group element {g}")));
                    }
                    self.mul_group(&cur, *g)
                }
                WordItem::Scalar(p) => cur.mul_param(p),
            };
        }
        Ok(cur)
    }

    /// `e a e`.
    pub fn spherical_corner(&self, a: &SRAElement) -> SRAElement {
        let e = self.spherical_idempotent();
        self.mul(&self.mul(&e, a), &e)
    }

    /// Apply the group action `γ` to the `V`-part: `γ a γ⁻¹`.
    pub fn conjugate_by_group(&self, g: usize, a: &SRAElement) -> SRAElement {
        let left = self.group_element(g);
        let right = self.group_element(self.group.inv(g));
        self.mul(&self.mul(&left, a), &right)
    }

    /// Names of the basis vectors of `V`: `x, y` in rank one, `x1.., y1..` for doubled groups,
    /// `v1..` otherwise.
    pub fn generator_names(&self) -> Vec<String> {
        let dim = self.dim();
        match self.group.dim_h() {
            Some(1) => vec!["x".into(), "y".into()],
            Some(n) => (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect(),
            None => (1..=dim).map(|i| format!("v{i}")).collect(),
        }
    }

    /// Names of group elements: `s` or `s1, s2, ..` for reflections (in element order), `g<k>`
    /// for other non-identity elements.
    pub fn group_element_name(&self, g: usize) -> String {
        if g == 0 {
            return "1".into();
        }
        let refl = &self.reflections.reflections;
        match refl.iter().position(|r| r.element == g) {
            Some(_) if refl.len() == 1 => "s".into(),
            Some(p) => format!("s{}", p + 1),
            None => format!("g{g}"),
        }
    }

    /// Group element named by [`SRAlgebra::group_element_name`].
    pub fn group_element_by_name(&self, name: &str) -> Option<usize> {
        (0..self.group.order()).find(|&g| self.group_element_name(g) == name)
    }

    /// Canonical text form: monomials by decreasing graded-lex order, then group elements in
    /// canonical order.
    pub fn format(&self, a: &SRAElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let names = self.generator_names();
        let mut keys: Vec<&Key> = a.terms.keys().collect();
        keys.sort_by(|(m1, g1), (m2, g2)| grlex_cmp(m2, m1).then(g1.cmp(g2)));
        let mut out = String::new();
        for (idx, key) in keys.into_iter().enumerate() {
            let c = &a.terms[key];
            let mut basis = format_monomial(&key.0, |i| names[i].clone());
            if key.1 != 0 {
                if !basis.is_empty() {
                    basis.push('*');
                }
                basis.push_str(&self.group_element_name(key.1));
            }
            let (negative, coeff) = match c.as_constant() {
                Some(q) => (q.is_negative(), ParamPoly::constant(self.arity, q.abs())),
                None if c.terms().count() == 1 => {
                    let (_, q) = c.terms().next().unwrap();
                    (q.is_negative(), if q.is_negative() { -c } else { c.clone() })
                }
                None => (false, c.clone()),
            };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff_text = if coeff.terms().count() > 1 { format!("({coeff})") } else { coeff.to_string() };
            match (coeff_text.as_str(), basis.is_empty()) {
                (_, true) => out.push_str(&coeff_text),
                ("1", false) => out.push_str(&basis),
                (_, false) => {
                    let _ = write!(out, "{coeff_text}*{basis}");
                }
            }
        }
        out
    }

    /// Matrix of `γ` acting on `V`, for callers that need it alongside the algebra.
    pub fn group_matrix(&self, g: usize) -> &RatMatrix {
        self.group.element(g)
    }
}

/// Number of normal-form basis elements of `V`-degree exactly `d`: `C(d + 2n − 1, 2n − 1)·|Γ|`.
pub fn pbw_dimension(algebra: &SRAlgebra, d: u32) -> u64 {
    let dim = algebra.dim() as u64;
    binomial(d as u64 + dim - 1, dim - 1) * algebra.group().order() as u64
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
