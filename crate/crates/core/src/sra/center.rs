use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{SRAElement, SRAlgebra};
use crate::coeffs::matrix::{rank_of, RowReducer};
use crate::coeffs::param::grlex_cmp;
use crate::coeffs::poly::{degree, exponents_of_degree, Exponents, MPoly};
use crate::coeffs::{ParamPoly, Rational};
use crate::error::{Error, Result};

/// Degree-truncated center of an algebra.
#[derive(Clone, Debug)]
pub struct CenterBasis {
    /// Highest degree searched.
    pub cutoff: u32,
    /// `true` when some parameters were symbolic: degrees are then weighted with parameters of
    /// degree 2, and `basis` lists generators not coming from lower degrees by parameter
    /// multiplication.
    pub weighted: bool,
    pub basis: Vec<SRAElement>,
    /// Degree of each basis element (its pivot degree).
    pub degrees: Vec<u32>,
    /// Number of basis elements per degree `0..=cutoff`.
    pub graded_dims: Vec<usize>,
    /// `dim_ℚ` of the space of central elements found in each degree (weighted mode: including
    /// parameter multiples of lower generators).
    pub rational_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeDegree {
    pub degree: u32,
    pub center_dim: usize,
    /// Rank of `{e·z}` over ℚ.
    pub corner_rank: usize,
    /// `dim (SV)^Γ` in this degree, from the Reynolds operator.
    pub invariant_dim: usize,
    /// Whether every `e·z` equals `z·e` and `e·z·e`.
    pub in_corner: bool,
}

impl SatakeDegree {
    pub fn passed(&self) -> bool {
        self.in_corner && self.center_dim == self.corner_rank && self.center_dim == self.invariant_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCheck {
    pub generator_degree: u32,
    pub multiplier_degree: u32,
    /// `dim (H·z₀ ∩ Z)` in the window.
    pub intersection_dim: usize,
    /// `dim (Z·z₀)` in the window.
    pub ideal_dim: usize,
}

impl IdealCheck {
    pub fn passed(&self) -> bool {
        self.intersection_dim == self.ideal_dim
    }
}

/// Outcome of the Poisson axioms over all pairs and triples of a family of central elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonReport {
    pub elements: usize,
    pub antisymmetry: bool,
    pub leibniz: bool,
    pub jacobi: bool,
    /// The bracket in degree `d₁ + d₂ − 2` is the classical bracket of the symbols.
    pub leading_terms: bool,
}

impl PoissonReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry && self.leibniz && self.jacobi && self.leading_terms
    }
}

type Column = (Exponents, usize, Exponents);

fn param_monomials(free: &[usize], arity: usize, weight: u32) -> Vec<Exponents> {
    exponents_of_degree(free.len(), weight)
        .into_iter()
        .map(|small| {
            let mut e = vec![0; arity];
            for (k, &v) in free.iter().enumerate() {
                e[v] = small[k];
            }
            e
        })
        .collect()
}

impl SRAlgebra {
    fn column_element(&self, col: &Column) -> SRAElement {
        let mut e = self.zero();
        let coeff = ParamPoly::from_terms(self.arity(), [(col.2.clone(), Rational::one())]);
        e.add_term(col.0.clone(), col.1, coeff);
        e
    }

    /// `[E, v_i]` for all `i` and `[E, g]` for the group generators, concatenated with a
    /// condition index.
    fn centrality_conditions(&self, e: &SRAElement, gens: &[usize]) -> Vec<SRAElement> {
        let mut out: Vec<SRAElement> = (0..self.dim()).map(|i| self.commutator(e, &self.generator(i))).collect();
        for &g in gens {
            out.push(self.commutator(e, &self.group_element(g)));
        }
        out
    }

    /// Whether `z` commutes with every `v_i` and every group generator.
    pub fn is_central(&self, z: &SRAElement) -> bool {
        self.centrality_conditions(z, &self.group().generating_set()).iter().all(SRAElement::is_zero)
    }

    /// Central elements up to degree `d`, by an exact null-space computation on PBW
    /// coefficients. With symbolic parameters the search is graded (`deg v = 1`, parameters of
    /// degree 2); with all parameters fixed it is filtered by `V`-degree.
    pub fn center_basis(&self, d: u32) -> CenterBasis {
        let free = self.free_params();
        let weighted = !free.is_empty();
        let order = self.group().order();
        let mut columns: Vec<Column> = Vec::new();
        // columns are grouped so that the preferred pivots come first
        let mut blocks: Vec<(u32, Vec<Column>)> = Vec::new();
        if weighted {
            for k in 0..=d {
                let mut cols = Vec::new();
                for pw in 0..=k / 2 {
                    let a = k - 2 * pw;
                    let mut monos = exponents_of_degree(self.dim(), a);
                    monos.sort_by(|x, y| grlex_cmp(y, x));
                    for p in param_monomials(&free, self.arity(), pw) {
                        for m in &monos {
                            for g in 0..order {
                                cols.push((m.clone(), g, p.clone()));
                            }
                        }
                    }
                }
                blocks.push((k, cols));
            }
        } else {
            let mut cols = Vec::new();
            for a in (0..=d).rev() {
                let mut monos = exponents_of_degree(self.dim(), a);
                monos.sort_by(|x, y| grlex_cmp(y, x));
                for m in monos {
                    for g in 0..order {
                        cols.push((m.clone(), g, vec![0; self.arity()]));
                    }
                }
            }
            blocks.push((d, cols));
        }
        let gens = self.group().generating_set();
        let mut basis = Vec::new();
        let mut degrees = Vec::new();
        let mut graded_dims = vec![0usize; d as usize + 1];
        let mut rational_dims = vec![0usize; d as usize + 1];
        for (k, cols) in blocks {
            let kernel = self.kernel_of_conditions(&cols, &gens);
            let rref = if kernel.is_empty() {
                Vec::new()
            } else {
                let (m, piv) = crate::coeffs::RatMatrix::from_rows(kernel).unwrap().rref();
                (0..piv.len()).map(|i| (piv[i], m.row(i).to_vec())).collect::<Vec<_>>()
            };
            for (pivot, row) in rref {
                let pcol = &cols[pivot];
                let deg = if weighted { k } else { degree(&pcol.0) };
                rational_dims[deg as usize] += 1;
                if weighted && degree(&pcol.2) > 0 {
                    continue;
                }
                let mut z = self.zero();
                for (j, a) in row.iter().enumerate() {
                    if !a.is_zero() {
                        z = z.add(&self.column_element(&cols[j]).scale(a));
                    }
                }
                graded_dims[deg as usize] += 1;
                degrees.push(deg);
                basis.push(z);
            }
            columns.extend(cols);
        }
        if !weighted {
            // present the filtered basis by increasing degree
            let mut idx: Vec<usize> = (0..basis.len()).collect();
            idx.sort_by_key(|&i| degrees[i]);
            basis = idx.iter().map(|&i| basis[i].clone()).collect();
            degrees = idx.iter().map(|&i| degrees[i]).collect();
        }
        CenterBasis { cutoff: d, weighted, basis, degrees, graded_dims, rational_dims }
    }

    fn kernel_of_conditions(&self, cols: &[Column], gens: &[usize]) -> Vec<Vec<Rational>> {
        // commutators depend only on (mono, g); the parameter monomial is a shift
        let mut distinct: Vec<(Exponents, usize)> = cols.iter().map(|c| (c.0.clone(), c.1)).collect();
        distinct.sort();
        distinct.dedup();
        let conds: HashMap<(Exponents, usize), Vec<SRAElement>> = distinct
            .par_iter()
            .map(|(m, g)| ((m.clone(), *g), self.centrality_conditions(&self.basis_element(m.clone(), *g), gens)))
            .collect();
        let mut row_index: BTreeMap<(usize, Exponents, usize, Exponents), usize> = BTreeMap::new();
        let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
        for (j, col) in cols.iter().enumerate() {
            for (ci, cond) in conds[&(col.0.clone(), col.1)].iter().enumerate() {
                for ((m, g), c) in cond.terms() {
                    for (e, q) in c.terms() {
                        let shifted: Exponents = e.iter().zip(&col.2).map(|(a, b)| a + b).collect();
                        let next = row_index.len();
                        let r = *row_index.entry((ci, m.clone(), *g, shifted)).or_insert(next);
                        entries.push((r, j, q.clone()));
                    }
                }
            }
        }
        let mut rows = vec![vec![Rational::zero(); cols.len()]; row_index.len()];
        for (r, j, q) in entries {
            rows[r][j] += &q;
        }
        let mut red = RowReducer::new(cols.len());
        for row in rows {
            red.insert(row);
        }
        red.nullspace()
    }

    /// Satake comparison per degree: `z ↦ e·z` is injective on the center basis found and its
    /// image has the dimension of `(SV)^Γ` in that degree.
    pub fn satake_check(&self, center: &CenterBasis) -> Vec<SatakeDegree> {
        let e = self.spherical_idempotent();
        (0..=center.cutoff)
            .map(|k| {
                let zs: Vec<&SRAElement> =
                    center.basis.iter().zip(&center.degrees).filter(|(_, &dk)| dk == k).map(|(z, _)| z).collect();
                let images: Vec<SRAElement> = zs.iter().map(|z| self.mul(&e, z)).collect();
                let in_corner = zs
                    .iter()
                    .zip(&images)
                    .all(|(z, ez)| self.mul(z, &e) == *ez && self.mul(ez, &e) == *ez);
                SatakeDegree {
                    degree: k,
                    center_dim: zs.len(),
                    corner_rank: rational_rank(&images),
                    invariant_dim: self.invariant_dimension(k),
                    in_corner,
                }
            })
            .collect()
    }

    /// `dim S^k(V)^Γ` as the rank of the Reynolds operator on degree-`k` monomials.
    pub fn invariant_dimension(&self, k: u32) -> usize {
        let dim = self.dim();
        let group = self.group();
        let images: Vec<Vec<MPoly<Rational>>> = (0..group.order())
            .map(|g| {
                let m = group.element(g);
                (0..dim).map(|j| MPoly::linear(&m.col(j), &Rational::one())).collect()
            })
            .collect();
        let monos = exponents_of_degree(dim, k);
        let index: HashMap<&Exponents, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let rows: Vec<Vec<Rational>> = monos
            .iter()
            .map(|m| {
                let f = MPoly::monomial(dim, m.clone(), Rational::one());
                let mut row = vec![Rational::zero(); monos.len()];
                for img in &images {
                    for (e, c) in f.substitute(img).terms() {
                        row[index[e]] += c;
                    }
                }
                row
            })
            .collect();
        rank_of(&rows)
    }

    /// For central `z₀` of degree `p` in a fully specialized algebra: compares
    /// `span{b·z₀ : deg b ≤ k} ∩ Z` with `span{z·z₀ : z ∈ Z, deg z ≤ k}`, where `Z` is the
    /// center up to degree `k + p` (so `center.cutoff ≥ k + p` is required).
    pub fn ideal_check(&self, center: &CenterBasis, z0: &SRAElement, k: u32) -> Result<IdealCheck> {
        if center.weighted {
            return Err(Error::InvalidArgument("ideal check needs all parameters fixed".into()));
        }
        let p = z0.v_degree().unwrap_or(0);
        if center.cutoff < k + p {
            return Err(Error::InvalidArgument(format!("center cutoff {} below {}", center.cutoff, k + p)));
        }
        let order = self.group().order();
        let products: Vec<SRAElement> = (0..=k)
            .flat_map(|a| exponents_of_degree(self.dim(), a))
            .flat_map(|m| (0..order).map(move |g| (m.clone(), g)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|(m, g)| self.mul(&self.basis_element(m.clone(), *g), z0))
            .collect();
        let window: Vec<SRAElement> =
            center.basis.iter().zip(&center.degrees).filter(|(_, &dk)| dk <= k + p).map(|(z, _)| z.clone()).collect();
        let ideal: Vec<SRAElement> = center
            .basis
            .iter()
            .zip(&center.degrees)
            .filter(|(_, &dk)| dk <= k)
            .map(|(z, _)| self.mul(z, z0))
            .collect();
        let ra = rational_rank(&products);
        let rz = rational_rank(&window);
        let both: Vec<SRAElement> = products.iter().chain(window.iter()).cloned().collect();
        let intersection_dim = ra + rz - rational_rank(&both);
        Ok(IdealCheck { generator_degree: p, multiplier_degree: k, intersection_dim, ideal_dim: rational_rank(&ideal) })
    }

    /// `{z₁, z₂}`: lift to generic `t` with the same coefficients, commute, divide by `t`, set
    /// `t = 0`. The algebra must have `t` specialized to 0.
    pub fn poisson_bracket(&self, z1: &SRAElement, z2: &SRAElement) -> Result<SRAElement> {
        if self.values().get(&0).map(|v| !v.is_zero()).unwrap_or(true) {
            return Err(Error::InvalidArgument("Poisson bracket needs t = 0".into()));
        }
        let mut generic = self.values().clone();
        generic.remove(&0);
        let lifted = self.with_values(generic);
        let comm = lifted.commutator(z1, z2);
        let mut out = self.zero();
        let zero_t = BTreeMap::from([(0usize, Rational::zero())]);
        for ((m, g), c) in comm.terms() {
            let q = c.div_t().map_err(|_| Error::NotCentral)?;
            out.add_term(m.clone(), *g, q.specialize(&zero_t));
        }
        Ok(out)
    }

    /// Antisymmetry and leading terms on all pairs; Leibniz and Jacobi on all triples.
    pub fn poisson_checks(&self, elements: &[SRAElement]) -> Result<PoissonReport> {
        let k = elements.len();
        let mut table = vec![vec![self.zero(); k]; k];
        for i in 0..k {
            for j in 0..k {
                table[i][j] = self.poisson_bracket(&elements[i], &elements[j])?;
            }
        }
        let mut r = PoissonReport { elements: k, antisymmetry: true, leibniz: true, jacobi: true, leading_terms: true };
        for i in 0..k {
            for j in 0..k {
                r.antisymmetry &= table[i][j] == table[j][i].neg();
                if let (Some(f), Some(g), Some(d1), Some(d2)) = (
                    self.symbol(&elements[i]),
                    self.symbol(&elements[j]),
                    elements[i].v_degree(),
                    elements[j].v_degree(),
                ) {
                    if d1 + d2 >= 2 {
                        r.leading_terms &= self.polynomial_part(&table[i][j], d1 + d2 - 2) == self.classical_bracket(&f, &g);
                    }
                }
                for l in 0..k {
                    let prod = self.mul(&elements[j], &elements[l]);
                    let lhs = self.poisson_bracket(&elements[i], &prod)?;
                    let rhs = self.mul(&table[i][j], &elements[l]).add(&self.mul(&elements[j], &table[i][l]));
                    r.leibniz &= lhs == rhs;
                    let inner = |a: usize, b: usize, c: usize| self.poisson_bracket(&elements[a], &table[b][c]);
                    let jac = inner(i, j, l)?.add(&inner(j, l, i)?).add(&inner(l, i, j)?);
                    r.jacobi &= jac.is_zero();
                }
            }
        }
        Ok(r)
    }

    /// The top `V`-degree component of `a` as a commutative polynomial (group part must be
    /// trivial there, as it is for central elements).
    pub fn symbol(&self, a: &SRAElement) -> Option<MPoly<ParamPoly>> {
        let d = a.v_degree()?;
        let mut f = MPoly::zero(self.dim());
        for ((m, g), c) in a.terms() {
            if degree(m) == d {
                if *g != 0 {
                    return None;
                }
                f.add_term(m.clone(), c.clone());
            }
        }
        Some(f)
    }

    /// The part of `V`-degree `d` with trivial group part, as a commutative polynomial.
    pub fn polynomial_part(&self, a: &SRAElement, d: u32) -> MPoly<ParamPoly> {
        let mut f = MPoly::zero(self.dim());
        for ((m, g), c) in a.terms() {
            if degree(m) == d && *g == 0 {
                f.add_term(m.clone(), c.clone());
            }
        }
        f
    }

    /// `{f, g} = Σ_{i,j} ω(v_i, v_j) ∂_i f ∂_j g` on `S(V)`.
    pub fn classical_bracket(&self, f: &MPoly<ParamPoly>, g: &MPoly<ParamPoly>) -> MPoly<ParamPoly> {
        let dim = self.dim();
        let omega = self.group().omega();
        let mut out = MPoly::zero(dim);
        for i in 0..dim {
            let fi = f.derivative(i);
            if fi.is_zero() {
                continue;
            }
            for j in 0..dim {
                let w = &omega[(i, j)];
                if !w.is_zero() {
                    out = out.add(&fi.mul(&g.derivative(j)).scale(w));
                }
            }
        }
        out
    }
}

/// Rank over ℚ of a family of elements, expanded in `(monomial, g, parameter monomial)`.
pub fn rational_rank(elements: &[SRAElement]) -> usize {
    let mut index: HashMap<(Exponents, usize, Exponents), usize> = HashMap::new();
    let coords: Vec<BTreeMap<(Exponents, usize, Exponents), Rational>> =
        elements.iter().map(|e| e.rational_coordinates()).collect();
    for c in &coords {
        for k in c.keys() {
            let next = index.len();
            index.entry(k.clone()).or_insert(next);
        }
    }
    let mut red = RowReducer::new(index.len());
    for c in coords {
        let mut row = vec![Rational::zero(); index.len()];
        for (k, q) in c {
            row[index[&k]] = q;
        }
        red.insert(row);
    }
    red.rank()
}
