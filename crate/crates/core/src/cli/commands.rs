use std::sync::Arc;

use serde_json::{json, Value};

use super::{at, parse_params, parse_rational, parse_vector, CliError, JobSpec, Record};
use crate::centralizer;
use crate::cherednik::{
    build_cherednik, contravariant_gram, convention_solve, finite_dim_scan, gram_rank, root_data, typea_report,
    Representation,
};
use crate::coeffs::{ParamPoly, Rational};
use crate::completion::{be_iso, equivariance_check, mod_param_baseline, verify_homomorphism};
use crate::groups::{permutation_on_h, reflection_weight, symplectic_reflections, FiniteSymplecticGroup, GroupSpec, SymmetricRep};
use crate::sra::{parse_element, simplicity_lattice, sn_reflection_characters, trace_gate_candidate, SRAlgebra};

pub(crate) const A_GROUP: &str = "symplectic reflections and their orbits";
pub(crate) const A_PBW: &str = "PBW basis and flatness";
pub(crate) const A_CENTER: &str = "center at t = 0 and the Satake map";
pub(crate) const A_POISSON: &str = "Poisson bracket on the center";
pub(crate) const A_CENTRALIZER: &str = "centralizer construction and matrix units";
pub(crate) const A_MORITA: &str = "Morita equivalence with the coefficient algebra";
pub(crate) const A_SMASH: &str = "smash product isomorphism";
pub(crate) const A_RELATIONS: &str = "Cherednik relations";
pub(crate) const A_EULER: &str = "Euler grading element";
pub(crate) const A_DUNKL: &str = "Dunkl representation";
pub(crate) const A_GRAM: &str = "contravariant form on standard modules";
pub(crate) const A_FINITE: &str = "finite-dimensional representations";
pub(crate) const A_TYPEA: &str = "two-sided ideals in type A";
pub(crate) const A_BE: &str = "completion isomorphism at a point of h";
pub(crate) const A_TORUS: &str = "torus equivariance of the completion isomorphism";
pub(crate) const A_TRACE: &str = "trace obstruction to finite-dimensional modules";
pub(crate) const A_PLUMBING: &str = "plumbing";

pub(crate) fn dispatch(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    match job.command.trim() {
        "group analyze" => group_analyze(job),
        "sra normalize" => sra_normalize(job),
        "sra mul" => sra_mul(job),
        "sra center" => sra_center(job),
        "sra poisson" => sra_poisson(job),
        "centralizer selftest" => centralizer_selftest(job),
        "cherednik gram" => cherednik_gram(job),
        "cherednik scan" => cherednik_scan(job),
        "cherednik typea" => cherednik_typea(job),
        "be-iso verify" => be_iso_verify(job),
        "simplicity lattice" => simplicity(job),
        "selftest" => super::selftest_records(&super::SelftestOptions::default()),
        other => Err(CliError::parse("command", format!("unknown command {other:?}"))),
    }
}

struct LoadedGroup {
    group: Arc<FiniteSymplecticGroup>,
    symmetric: Option<(usize, SymmetricRep)>,
}

fn load_group(job: &JobSpec) -> Result<LoadedGroup, CliError> {
    let src = job.group.as_deref().ok_or_else(|| CliError::parse("group", "a group is required"))?;
    let spec = if src.trim_start().starts_with("symmetric:") {
        at("group", src.parse::<GroupSpec>())?
    } else {
        let text = std::fs::read_to_string(src).map_err(|e| CliError::parse(src, e))?;
        at(src, GroupSpec::from_json(&text))?
    };
    let group = Arc::new(spec.build()?);
    Ok(LoadedGroup { group, symmetric: spec.as_symmetric() })
}

fn subgroup_of(job: &JobSpec, loaded: &LoadedGroup) -> Result<Vec<usize>, CliError> {
    let g = &loaded.group;
    let spec = job.subgroup.as_deref().unwrap_or("trivial").trim();
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "trivial" | "1" => Ok(vec![g.identity()]),
        "all" => Ok((0..g.order()).collect()),
        "elements" => {
            let gens = arg
                .split(',')
                .map(|p| {
                    let i: usize = p.trim().parse().map_err(|_| CliError::parse("subgroup", format!("bad element index {p:?}")))?;
                    if i >= g.order() {
                        return Err(CliError::parse("subgroup", format!("element index {i} out of range")));
                    }
                    Ok(i)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(g.subgroup_generated(&gens))
        }
        "stabilizer" => {
            let b = parse_vector("subgroup", arg)?;
            let n = g.dim_h().ok_or_else(|| CliError::parse("subgroup", "stabilizers need a group acting on h"))?;
            if b.len() != n {
                return Err(CliError::parse("subgroup", format!("expected {n} coordinates")));
            }
            let mut v = vec![Rational::zero(); n];
            v.extend(b);
            Ok(g.stabilizer_of_vector(&v))
        }
        "parabolic" => {
            let (n, rep) = loaded.symmetric.ok_or_else(|| CliError::parse("subgroup", "parabolic subgroups need a symmetric builtin"))?;
            let k: usize = arg.trim().parse().map_err(|_| CliError::parse("subgroup", format!("bad size {arg:?}")))?;
            if k == 0 || k > n {
                return Err(CliError::parse("subgroup", format!("S_{k} is not a parabolic of S_{n}")));
            }
            let mut gens = Vec::new();
            for i in 0..k.saturating_sub(1) {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(i, i + 1);
                let m = permutation_on_h(&p, rep);
                let idx = (0..g.order()).find(|&x| g.h_matrix(x) == Some(&m)).expect("transposition is in the group");
                gens.push(idx);
            }
            Ok(g.subgroup_generated(&gens))
        }
        _ => Err(CliError::parse("subgroup", format!("unknown subgroup spec {spec:?}"))),
    }
}

/// Parameter values `{0: t, i: c_i}` from the job; unset and `generic` entries stay symbolic.
fn param_map(job: &JobSpec, orbits: usize, default_t: Option<Rational>) -> Result<std::collections::BTreeMap<usize, Rational>, CliError> {
    let mut values = std::collections::BTreeMap::new();
    match job.t.as_deref() {
        Some("generic") => {}
        Some(t) => {
            values.insert(0, parse_rational("t", t)?);
        }
        None => {
            if let Some(t) = default_t {
                values.insert(0, t);
            }
        }
    }
    if let Some(c) = job.c.as_deref() {
        let parsed = parse_params("c", c)?;
        if parsed.len() == 1 && orbits > 1 {
            for i in 1..=orbits {
                if let Some(v) = &parsed[0] {
                    values.insert(i, v.clone());
                }
            }
        } else if parsed.len() != orbits {
            return Err(CliError::parse("c", format!("{} values for {orbits} reflection orbits", parsed.len())));
        } else {
            for (i, v) in parsed.into_iter().enumerate() {
                if let Some(v) = v {
                    values.insert(i + 1, v);
                }
            }
        }
    }
    Ok(values)
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn group_analyze(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let loaded = load_group(job)?;
    let g = &loaded.group;
    let refl = symplectic_reflections(g);
    let mut out = vec![Record::info("group", A_GROUP, json!({ "order": g.order(), "dim": g.dim(), "dim_h": g.dim_h() }))];
    let classes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    out.push(Record::info("conjugacy classes", A_GROUP, json!({ "count": classes.len(), "sizes": classes })));
    let mut orbits = Vec::new();
    for (i, members) in refl.orbits.iter().enumerate() {
        let weight = reflection_weight(g, &refl, i).map(|m| m.to_string()).unwrap_or_else(|e| e.to_string());
        orbits.push(json!({ "orbit": i, "size": members.len(), "weight": weight }));
    }
    out.push(Record::info("reflection orbits", A_GROUP, json!({ "reflections": refl.len(), "orbits": orbits })));
    if g.dim_h().is_some() {
        let roots = root_data(g);
        out.push(Record::check(
            "reflections of h have eigenvalue -1",
            A_RELATIONS,
            roots.is_ok(),
            json!({ "error": roots.as_ref().err().map(ToString::to_string) }),
        ));
        if roots.is_ok() {
            let mu = convention_solve(g)?;
            out.push(Record::info("conversion factors", A_RELATIONS, json!({ "mu": strings(&mu) })));
        }
    }
    Ok(out)
}

fn sra_algebra(job: &JobSpec, default_t: Option<Rational>) -> Result<SRAlgebra, CliError> {
    let loaded = load_group(job)?;
    let alg = SRAlgebra::new(loaded.group);
    let orbits = alg.reflections().num_orbits();
    let values = param_map(job, orbits, default_t)?;
    Ok(alg.specialize_params(&values))
}

fn sra_normalize(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let alg = sra_algebra(job, None)?;
    if job.elements.is_empty() {
        return Err(CliError::parse("elements", "at least one element is required"));
    }
    job.elements
        .iter()
        .enumerate()
        .map(|(i, src)| {
            let e = at(&format!("elements[{i}]"), parse_element(&alg, src))?;
            Ok(Record::info(format!("normal form {}", i + 1), A_PBW, json!({ "input": src, "normal_form": alg.format(&e) })))
        })
        .collect()
}

fn sra_mul(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let alg = sra_algebra(job, None)?;
    if job.elements.len() != 2 {
        return Err(CliError::parse("elements", "exactly two factors are required"));
    }
    let a = at("elements[0]", parse_element(&alg, &job.elements[0]))?;
    let b = at("elements[1]", parse_element(&alg, &job.elements[1]))?;
    let p = alg.multiply(&a, &b)?;
    Ok(vec![Record::info("product", A_PBW, json!({ "a": alg.format(&a), "b": alg.format(&b), "product": alg.format(&p) }))])
}

fn center_algebra(job: &JobSpec) -> Result<SRAlgebra, CliError> {
    let alg = sra_algebra(job, Some(Rational::zero()))?;
    if alg.values().get(&0).map(|t| !t.is_zero()).unwrap_or(true) {
        return Err(CliError::parse("t", "the center is computed at t = 0"));
    }
    Ok(alg)
}

fn sra_center(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let alg = center_algebra(job)?;
    let d = job.degree.unwrap_or(4);
    let center = alg.center_basis(d);
    let basis: Vec<String> = center.basis.iter().map(|e| alg.format(e)).collect();
    let mut out = vec![Record::info(
        "center basis",
        A_CENTER,
        json!({
            "cutoff": d,
            "weighted": center.weighted,
            "graded_dims": center.graded_dims,
            "rational_dims": center.rational_dims,
            "basis": basis,
        }),
    )];
    let central = center.basis.iter().all(|z| alg.is_central(z));
    out.push(Record::check("basis elements are central", A_CENTER, central, json!({ "elements": center.basis.len() })));
    if !center.weighted {
        for s in alg.satake_check(&center) {
            out.push(Record::check(
                format!("Satake map in degree {}", s.degree),
                A_CENTER,
                s.passed(),
                json!({
                    "center_dim": s.center_dim,
                    "corner_rank": s.corner_rank,
                    "invariant_dim": s.invariant_dim,
                    "in_corner": s.in_corner,
                }),
            ));
        }
    }
    Ok(out)
}

fn sra_poisson(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let alg = center_algebra(job)?;
    let d = job.degree.unwrap_or(4);
    let center = alg.center_basis(d);
    let r = alg.poisson_checks(&center.basis)?;
    let data = json!({ "cutoff": d, "elements": r.elements });
    Ok(vec![
        Record::check("antisymmetry", A_POISSON, r.antisymmetry, data.clone()),
        Record::check("Leibniz rule", A_POISSON, r.leibniz, data.clone()),
        Record::check("Jacobi identity", A_POISSON, r.jacobi, data.clone()),
        Record::check("leading terms are classical brackets", A_POISSON, r.leading_terms, data),
    ])
}

fn centralizer_selftest(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let loaded = load_group(job)?;
    let h = subgroup_of(job, &loaded)?;
    Ok(centralizer_records(loaded.group, &h)?)
}

pub(crate) fn centralizer_records(g: Arc<FiniteSymplecticGroup>, h: &[usize]) -> crate::Result<Vec<Record>> {
    let order = g.order();
    let r = centralizer::selftest(g, h)?;
    let label = format!("|G| = {order}, |H| = {}", h.len());
    Ok(vec![
        Record::info(format!("cosets ({label})"), A_CENTRALIZER, json!({ "cosets": r.cosets, "rational_dim": r.rational_dim })),
        Record::check(format!("matrix units ({label})"), A_CENTRALIZER, r.matrix_units.passed(), serde_json::to_value(&r.matrix_units).expect("json")),
        Record::check(format!("Morita witness ({label})"), A_MORITA, r.morita_witness, Value::Null),
        Record::check(format!("choice of representatives ({label})"), A_CENTRALIZER, r.representatives_independent, Value::Null),
        Record::check(format!("corner recovery ({label})"), A_MORITA, r.corner_roundtrip, Value::Null),
        Record::check(format!("smash product ({label})"), A_SMASH, r.smash.passed(), serde_json::to_value(&r.smash).expect("json")),
    ])
}

fn tau_of(job: &JobSpec) -> Result<Representation, CliError> {
    match job.tau.as_deref() {
        None => Ok(Representation::Trivial),
        Some(name) => at("tau", Representation::from_name(name)),
    }
}

fn cherednik_gram(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let loaded = load_group(job)?;
    let alg = build_cherednik(loaded.group, tau_of(job)?)?;
    let values = param_map(job, alg.num_orbits(), Some(Rational::one()))?;
    let alg = alg.specialize(&values);
    let d = job.degree.unwrap_or(3);
    let mut out = Vec::new();
    for k in 0..=d {
        let gram = contravariant_gram(&alg, k)?;
        let shown: Vec<Vec<String>> = gram.iter().map(|row| row.iter().map(ParamPoly::to_string).collect()).collect();
        let rank = gram_rank(&gram).ok();
        out.push(Record::info(format!("degree {k}"), A_GRAM, json!({ "size": gram.len(), "rank": rank, "matrix": shown })));
    }
    Ok(out)
}

/// Builtin parameter lists for scans.
pub(crate) fn builtin_c_list(name: &str) -> Option<Vec<Rational>> {
    let pm = |xs: &[(i64, i64)]| xs.iter().flat_map(|&(p, q)| [Rational::new(p, q), Rational::new(-p, q)]).collect();
    match name {
        "half_integers" => Some(pm(&[(1, 2), (3, 2), (5, 2)])),
        "thirds" => Some(pm(&[(1, 3), (2, 3), (4, 3)])),
        "rank_one_survey" => Some(pm(&[(1, 2), (3, 2), (5, 2), (1, 3), (1, 4), (2, 3)])),
        _ => None,
    }
}

fn c_points(job: &JobSpec, orbits: usize) -> Result<Vec<Vec<Rational>>, CliError> {
    if let Some(c) = job.c.as_deref() {
        if job.c_list.is_none() {
            let v = parse_vector("c", c)?;
            return Ok(vec![v]);
        }
    }
    let src = job.c_list.as_deref().ok_or_else(|| CliError::parse("c_list", "a parameter list is required"))?;
    if let Some(list) = builtin_c_list(src) {
        return Ok(list.into_iter().map(|q| vec![q; orbits]).collect());
    }
    let text = std::fs::read_to_string(src).map_err(|e| CliError::parse(src, e))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = parse_vector(&format!("{src}:{}", i + 1), line)?;
        if v.len() != orbits {
            return Err(CliError::parse(format!("{src}:{}", i + 1), format!("expected {orbits} values")));
        }
        out.push(v);
    }
    Ok(out)
}

fn cherednik_scan(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let loaded = load_group(job)?;
    let orbits = symplectic_reflections(&loaded.group).num_orbits();
    let points = c_points(job, orbits)?;
    let cutoff = job.cutoff.unwrap_or(8);
    let scan = finite_dim_scan(loaded.group, &points, cutoff)?;
    Ok(scan
        .into_iter()
        .map(|p| {
            let name = format!("c = {}", strings(&p.c).join(","));
            Record::info(name, A_FINITE, serde_json::to_value(&p).expect("json"))
        })
        .collect())
}

fn cherednik_typea(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let n = job.n.ok_or_else(|| CliError::parse("n", "n is required"))?;
    let c = parse_rational("c", job.c.as_deref().ok_or_else(|| CliError::parse("c", "c is required"))?)?;
    let r = typea_report(n, &c, job.cutoff)?;
    let mut out = vec![Record::info(
        "ideal count",
        A_TYPEA,
        json!({ "n": n, "c": c.to_string(), "simple": r.simple, "m": r.m, "num_ideals": r.num_ideals, "finite_dimensional": r.finite_dimensional }),
    )];
    for leaf in &r.chain {
        out.push(Record::info(format!("J_{}", leaf.j), A_TYPEA, serde_json::to_value(leaf).expect("json")));
    }
    if let Some(s) = &r.slice_evidence {
        out.push(Record::info("slice evidence", A_FINITE, serde_json::to_value(s).expect("json")));
    }
    Ok(out)
}

fn be_iso_verify(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let loaded = load_group(job)?;
    let orbits = symplectic_reflections(&loaded.group).num_orbits();
    let b = parse_vector("b", job.b.as_deref().ok_or_else(|| CliError::parse("b", "a base point is required"))?)?;
    let c = match job.c.as_deref() {
        None | Some("generic") => None,
        Some(s) => {
            let v = parse_vector("c", s)?;
            Some(if v.len() == 1 { vec![v[0].clone(); orbits] } else { v })
        }
    };
    let order = job.order.unwrap_or(4);
    let iso = be_iso(loaded.group, &b, c.as_deref(), order)?;
    let mut out = vec![Record::info(
        "setup",
        A_BE,
        json!({ "b": strings(&b), "stabilizer_order": iso.subgroup().len(), "cosets": iso.context().size(), "order": order }),
    )];
    let report = verify_homomorphism(&iso)?;
    for c in report.checks {
        out.push(Record::check(c.relation, A_BE, c.passed, json!({ "modulo_order": c.order, "first_failure": c.first_failure })));
    }
    let base = mod_param_baseline(&iso)?;
    out.push(Record::check("undeformed baseline", A_BE, base.passed(), serde_json::to_value(&base).expect("json")));
    let eq = equivariance_check(&iso);
    out.push(Record::check("torus equivariance", A_TORUS, eq.passed(), serde_json::to_value(&eq).expect("json")));
    Ok(out)
}

fn simplicity(job: &JobSpec) -> Result<Vec<Record>, CliError> {
    let loaded = load_group(job)?;
    let (n, _) = loaded.symmetric.ok_or_else(|| CliError::Compute(crate::Error::InvalidArgument("character data is available for symmetric groups only".into())))?;
    let g = &loaded.group;
    let refl = symplectic_reflections(g);
    let m = reflection_weight(g, &refl, 0)?;
    let mu = convention_solve(g)?;
    let traces: Vec<Vec<Rational>> = sn_reflection_characters(n)?.into_iter().map(|(_, chi)| vec![Rational::from_int(chi)]).collect();
    let lattice = simplicity_lattice(std::slice::from_ref(&m), &traces)?;
    let shown: Vec<Vec<String>> = lattice.iter().map(|v| strings(v)).collect();
    let mut out = vec![Record::info("trace lattice", A_TRACE, json!({ "m": m.to_string(), "mu": strings(&mu), "lattice": shown }))];
    if job.c.is_some() || job.c_list.is_some() {
        for point in c_points(job, 1)? {
            let converted = &point[0] * &mu[0];
            let candidate = trace_gate_candidate(&lattice, std::slice::from_ref(&converted));
            out.push(Record::info(
                format!("c = {}", point[0]),
                A_TRACE,
                json!({ "relation_normalization": converted.to_string(), "candidate_non_simple": candidate }),
            ));
        }
    }
    Ok(out)
}
