use crate::coeffs::Rational;
use crate::error::{Error, Result};

/// Trace data of one module: its dimension and the trace `n_i` of a reflection from each orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceDatum {
    pub dim: Rational,
    pub traces: Vec<Rational>,
}

impl TraceDatum {
    pub fn new(dim: i64, traces: &[i64]) -> Self {
        TraceDatum { dim: Rational::from_int(dim), traces: traces.iter().map(|&x| Rational::from_int(x)).collect() }
    }
}

/// `dim·t + Σ_i n_i m_i c_i` for every datum, with `c` in the normalization of the defining
/// relations of [`super::SRAlgebra`]. A nonzero value rules out a finite-dimensional module
/// with those traces.
pub fn trace_obstruction(data: &[TraceDatum], m: &[Rational], c: &[Rational], t: &Rational) -> Result<Vec<Rational>> {
    if m.len() != c.len() {
        return Err(Error::LengthMismatch(format!("{} weights for {} parameters", m.len(), c.len())));
    }
    data.iter()
        .map(|d| {
            if d.traces.len() != m.len() {
                return Err(Error::LengthMismatch(format!("{} traces for {} orbits", d.traces.len(), m.len())));
            }
            let mut acc = &d.dim * t;
            for ((n, mi), ci) in d.traces.iter().zip(m).zip(c) {
                acc += &(&(n * mi) * ci);
            }
            Ok(acc)
        })
        .collect()
}

/// The vectors `(m_i n_i(M'))_i` over the irreducibles `M'`, zero vectors dropped, duplicates
/// merged, in input order.
pub fn simplicity_lattice(m: &[Rational], irreducible_traces: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for traces in irreducible_traces {
        if traces.len() != m.len() {
            return Err(Error::LengthMismatch(format!("{} traces for {} orbits", traces.len(), m.len())));
        }
        let v: Vec<Rational> = traces.iter().zip(m).map(|(n, mi)| n * mi).collect();
        if v.iter().any(|x| !x.is_zero()) && !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Whether `H_{1,c}` survives the trace gate as a candidate for having finite-dimensional
/// modules: some `λ` in the lattice has `Σ λ_i c_i ∈ ℤ`. An empty lattice never passes, so the
/// algebra is then always simple by this criterion.
pub fn trace_gate_candidate(lattice: &[Vec<Rational>], c: &[Rational]) -> bool {
    lattice.iter().any(|lambda| {
        let mut acc = Rational::zero();
        for (l, ci) in lambda.iter().zip(c) {
            acc += &(l * ci);
        }
        acc.is_integer()
    })
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of shape `lambda` by the hook length formula.
pub fn hook_length_dim(lambda: &[usize]) -> u64 {
    let n: usize = lambda.iter().sum();
    let conj: Vec<usize> = (0..lambda.first().copied().unwrap_or(0))
        .map(|j| lambda.iter().filter(|&&r| r > j).count())
        .collect();
    let mut num: u128 = 1;
    for k in 1..=n as u128 {
        num *= k;
    }
    let mut den: u128 = 1;
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            let hook = (row - j - 1) + (col - i - 1) + 1;
            den *= hook as u128;
        }
    }
    (num / den) as u64
}

/// `(dim λ, χ^λ(transposition))` for each partition `λ ⊢ n`, using
/// `χ(τ) = dim · 2 Σ contents / (n(n − 1))`.
pub fn sn_reflection_characters(n: usize) -> Result<Vec<(u64, i64)>> {
    if !(2..=10).contains(&n) {
        return Err(Error::InvalidArgument(format!("character table supported for 2 <= n <= 10, got {n}")));
    }
    Ok(partitions(n)
        .into_iter()
        .map(|lambda| {
            let dim = hook_length_dim(&lambda);
            let contents: i64 = lambda
                .iter()
                .enumerate()
                .flat_map(|(i, &row)| (0..row).map(move |j| j as i64 - i as i64))
                .sum();
            let chi = (dim as i64) * 2 * contents / ((n * (n - 1)) as i64);
            (dim, chi)
        })
        .collect())
}
