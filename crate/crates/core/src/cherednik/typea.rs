//! Two-sided ideals of `H_{1,c}(S_n)` and their associated varieties.

use std::sync::Arc;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::gram::{finite_dim_scan, ScanPoint};
use crate::coeffs::Rational;
use crate::error::{Error, Result};
use crate::groups::{FiniteSymplecticGroup, SymmetricRep};

/// One member `J_j` of the ideal chain together with its support.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeafLabel {
    pub j: usize,
    /// The parabolic `S_m^{×j}`, e.g. `S_2 x S_2`.
    pub subgroup: String,
    /// The support `π(V^Γ)` with `Γ` the subgroup above.
    pub label: String,
    pub leaf_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TypeAReport {
    pub n: usize,
    pub c: Rational,
    pub simple: bool,
    /// Denominator of `c` in lowest terms.
    pub m: u64,
    /// Number of proper nonzero two-sided ideals, `⌊n/m⌋` when not simple.
    pub num_ideals: usize,
    /// `J_1 ⊋ J_2 ⊋ ..`, largest first.
    pub chain: Vec<LeafLabel>,
    /// A finite-dimensional module exists (exactly when `m = n`); it is then unique.
    pub finite_dimensional: bool,
    /// Scan of the slice algebra `H_{1,c}(ℚ^{m−1}, S_m)` at the same `c`, when requested.
    pub slice_evidence: Option<ScanPoint>,
}

/// The support of `J_j` for `c` with denominator `m`: `π(V^{S_m^{×j}})` of dimension
/// `2(n−1) − 2j(m−1)`.
pub fn leaf_support_label(n: usize, m: usize, j: usize) -> Result<LeafLabel> {
    if m < 2 || j * m > n {
        return Err(Error::InvalidArgument(format!("S_{m}^{j} does not embed in S_{n}")));
    }
    let subgroup = if j == 0 { "1".to_string() } else { vec![format!("S_{m}"); j].join(" x ") };
    Ok(LeafLabel {
        j,
        label: format!("pi(V^({subgroup}))"),
        subgroup,
        leaf_dim: 2 * (n - 1) - 2 * j * (m - 1),
    })
}

/// Largest `m` for which the slice scan is attempted.
const SLICE_MAX_M: usize = 5;

/// Ideal structure of `H_{1,c}(S_n)` on the reflection representation: not simple exactly when
/// `c = q/m` in lowest terms with `1 < m ≤ n`, in which case there are `⌊n/m⌋` proper ideals in
/// one chain. With `slice_cutoff`, the rank scan of the slice algebra for `S_m` is attached.
pub fn typea_report(n: usize, c: &Rational, slice_cutoff: Option<u32>) -> Result<TypeAReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("type A needs n ≥ 2".into()));
    }
    let m = c.denom().to_u64().ok_or_else(|| Error::InvalidArgument("denominator too large".into()))?;
    let simple = m < 2 || m as usize > n;
    let (num_ideals, chain) = if simple {
        (0, Vec::new())
    } else {
        let s = n / m as usize;
        let chain = (1..=s).map(|j| leaf_support_label(n, m as usize, j)).collect::<Result<_>>()?;
        (s, chain)
    };
    let finite_dimensional = m as usize == n;
    let slice_evidence = match slice_cutoff {
        Some(cutoff) if !simple && (m as usize) <= SLICE_MAX_M => {
            let g = Arc::new(FiniteSymplecticGroup::symmetric(m as usize, SymmetricRep::Reflection)?);
            finite_dim_scan(g, &[vec![c.clone()]], cutoff)?.pop()
        }
        _ => None,
    };
    Ok(TypeAReport { n, c: c.clone(), simple, m, num_ideals, chain, finite_dimensional, slice_evidence })
}
