use std::sync::Arc;

use serde_json::json;

use super::commands::{
    centralizer_records, A_BE, A_CENTER, A_DUNKL, A_EULER, A_FINITE, A_PBW, A_PLUMBING, A_RELATIONS,
};
use super::{CliError, Record};
use crate::cherednik::{
    build_cherednik, finite_dim_scan, flip_omega_s, module_relation_check, param_values, solve_dunkl_sign,
    CherednikAlgebra, Representation, Verdict, DUNKL_SIGN,
};
use crate::coeffs::Rational;
use crate::completion::{be_iso_for, verify_homomorphism};
use crate::groups::{FiniteSymplecticGroup, SymmetricRep};
use crate::sra::{pbw_dimension, SRAElement, SRAlgebra};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SelftestOptions {
    /// Negate one `ω_s` before the PBW and completion checks, which must then fail.
    pub perturb: bool,
}

fn sym(n: usize) -> crate::Result<Arc<FiniteSymplecticGroup>> {
    Ok(Arc::new(FiniteSymplecticGroup::symmetric(n, SymmetricRep::Reflection)?))
}

/// Generators, group elements and products of two generators.
fn probe_elements(alg: &SRAlgebra) -> Vec<SRAElement> {
    let mut out: Vec<SRAElement> = (0..alg.dim()).map(|i| alg.generator(i)).collect();
    out.extend((1..alg.group().order()).map(|g| alg.group_element(g)));
    let gens = alg.dim();
    for i in 0..gens {
        for j in i..gens {
            out.push(alg.mul(&alg.generator(i), &alg.generator(j)));
        }
    }
    out
}

/// `(ab)c = a(bc)` over all probe triples; returns the number checked and the first failure.
pub(crate) fn associativity(alg: &SRAlgebra) -> (usize, Option<String>) {
    let probes = probe_elements(alg);
    let mut count = 0;
    for a in &probes {
        for b in &probes {
            let ab = alg.mul(a, b);
            for c in &probes {
                count += 1;
                if alg.mul(&ab, c) != alg.mul(a, &alg.mul(b, c)) {
                    return (count, Some(format!("({})({})({})", alg.format(a), alg.format(b), alg.format(c))));
                }
            }
        }
    }
    (count, None)
}

fn associativity_record(label: &str, alg: &SRAlgebra) -> Record {
    let (count, failure) = associativity(alg);
    Record::check(format!("associativity ({label})"), A_PBW, failure.is_none(), json!({ "triples": count, "first_failure": failure }))
}

fn euler_grading(alg: &CherednikAlgebra) -> bool {
    let h = alg.euler_element();
    let t = alg.t();
    (0..alg.dim_h()).all(|i| {
        alg.sra().commutator(&h, &alg.x(i)) == alg.x(i).mul_param(&t)
            && alg.sra().commutator(&h, &alg.y(i)) == alg.y(i).neg().mul_param(&t)
    })
}

/// The desk-scale checks over `S_2` and `S_3` in their reflection representations.
pub fn selftest_records(options: &SelftestOptions) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    out.push(Record::check("report plumbing", A_PLUMBING, true, json!({ "perturbed": options.perturb })));

    let s2 = build_cherednik(sym(2)?, Representation::Trivial)?;
    let s3 = build_cherednik(sym(3)?, Representation::Trivial)?;
    out.push(associativity_record("S_2", s2.sra()));
    let s3_pbw = if options.perturb { flip_omega_s(&s3, s3.reflections()[0].element)? } else { s3.clone() };
    out.push(associativity_record("S_3", s3_pbw.sra()));

    // the degree d part has dimension |W| · C(2n + d − 1, d)
    let dims: Vec<u64> = (0..=3).map(|d| pbw_dimension(s3.sra(), d)).collect();
    out.push(Record::check("PBW dimensions (S_3)", A_PBW, dims == [6, 24, 60, 120], json!({ "dims": dims })));

    for (label, alg) in [("S_2", &s2), ("S_3", &s3)] {
        out.push(Record::check(format!("Euler grading ({label})"), A_EULER, euler_grading(alg), json!({})));
        let failures = alg.relation_failures();
        out.push(Record::check(
            format!("commutation relations ({label})"),
            A_RELATIONS,
            failures.is_empty(),
            json!({ "failures": failures, "mu": alg.mu().iter().map(ToString::to_string).collect::<Vec<_>>() }),
        ));
    }

    let s3_sign = build_cherednik(sym(3)?, Representation::Sign)?;
    for (label, alg) in [("S_2, trivial", &s2), ("S_3, sign", &s3_sign)] {
        let m = module_relation_check(alg, 3)?;
        out.push(Record::check(format!("Dunkl operators satisfy the relations ({label})"), A_DUNKL, m.passed(), json!({ "checked": m.checked, "failures": m.failures })));
    }
    let sign = solve_dunkl_sign(&s2)?;
    out.push(Record::check("Dunkl sign convention", A_DUNKL, sign == DUNKL_SIGN, json!({ "solved": sign })));

    let scan = finite_dim_scan(sym(2)?, &[vec![Rational::new(1, 2)]], 8)?;
    let point = &scan[0];
    let ok = point.verdict == Verdict::Finite && point.dims == [1];
    out.push(Record::check("finite-dimensional module at c = 1/2 (S_2)", A_FINITE, ok, serde_json::to_value(point).expect("json")));

    let g3 = sym(3)?;
    let s2_in_s3 = g3.subgroup_generated(&[s3.reflections()[0].element]);
    out.extend(centralizer_records(g3.clone(), &s2_in_s3)?);
    out.extend(centralizer_records(g3.clone(), &[g3.identity()])?);
    let g2 = sym(2)?;
    out.extend(centralizer_records(g2.clone(), &(0..g2.order()).collect::<Vec<_>>())?);

    let ambient = if options.perturb { flip_omega_s(&s2, s2.reflections()[0].element)? } else { s2.clone() };
    let iso = be_iso_for(ambient, &[Rational::one()], 4)?;
    let hom = verify_homomorphism(&iso)?;
    let first = hom.checks.iter().find(|c| !c.passed).cloned();
    out.push(Record::check("completion isomorphism (S_2, b = 1, order 4)", A_BE, hom.passed(), json!({ "relations": hom.checks.len(), "first_failure": first })));

    let z = SRAlgebra::new(g2).specialize_params(&param_values(Some(Rational::zero()), &[]));
    let center = z.center_basis(4);
    let central = center.basis.iter().all(|e| z.is_central(e));
    out.push(Record::check(
        "center of H_{0,c}(S_2) to degree 4",
        A_CENTER,
        central && !center.basis.is_empty(),
        json!({ "graded_dims": center.graded_dims, "weighted": center.weighted }),
    ));
    Ok(out)
}
