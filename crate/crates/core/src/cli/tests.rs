use super::*;

fn job(text: &str) -> JobSpec {
    JobSpec::from_json(text).unwrap()
}

fn record<'a>(r: &'a Report, name: &str) -> &'a Record {
    r.records.iter().find(|x| x.name == name).unwrap_or_else(|| panic!("no record {name}"))
}

#[test]
fn unknown_fields_are_rejected() {
    let err = JobSpec::from_json(r#"{"command": "selftest", "colour": "red"}"#).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("colour"));
}

#[test]
fn zero_denominator_is_a_parse_error() {
    let j = job(r#"{"command": "sra normalize", "group": "symmetric:2:reflection", "c": "1/0", "elements": ["x"]}"#);
    let err = run(&j).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("c[0]"), "{err}");
}

#[test]
fn bad_elements_report_their_position() {
    let j = job(r#"{"command": "sra normalize", "group": "symmetric:2:reflection", "elements": ["x", "x**"]}"#);
    let err = run(&j).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("elements[1]"), "{err}");
}

#[test]
fn unknown_command() {
    let err = run(&JobSpec::new("frobnicate")).unwrap_err();
    assert!(matches!(err, CliError::Parse { ref location, .. } if location == "command"));
}

#[test]
fn reports_are_byte_identical() {
    let j = job(r#"{"command": "cherednik scan", "group": "symmetric:2:reflection", "c_list": "half_integers", "cutoff": 6}"#);
    let a = run(&j).unwrap().to_json();
    let b = run(&j).unwrap().to_json();
    assert_eq!(a, b);
    assert!(!a.contains("wall_clock_ms"));
    let mut timed = j.clone();
    timed.timing = true;
    assert!(run(&timed).unwrap().to_json().contains("wall_clock_ms"));
}

#[test]
fn half_integer_scan_of_s2() {
    let j = job(r#"{"command": "cherednik scan", "group": "symmetric:2:reflection", "c_list": "half_integers"}"#);
    let r = run(&j).unwrap();
    assert_eq!(r.records.len(), 6);
    for rec in &r.records {
        let c: Rational = rec.data["c"][0].as_str().unwrap().parse().unwrap();
        assert_eq!(rec.data["verdict"], "finite", "{}", rec.name);
        // the finite-dimensional quotient at c = ±k/2 has dimension k
        let (k, _) = (&c.abs() * &Rational::from_int(2)).to_i64_pair().unwrap();
        assert_eq!(rec.data["dims"][0].as_u64().unwrap() as i64, k, "{}", rec.name);
    }
}

#[test]
fn mul_and_normalize() {
    let j = job(r#"{"command": "sra mul", "group": "symmetric:2:reflection", "t": "1", "c": "generic", "elements": ["y", "x"]}"#);
    let r = run(&j).unwrap();
    assert_eq!(r.exit_code(), 0);
    let p = r.records[0].data["product"].as_str().unwrap();
    assert!(p.contains("x*y"), "{p}");
    let j = job(r#"{"command": "sra normalize", "group": "symmetric:2:reflection", "t": "0", "c": "0", "elements": ["y*x - x*y"]}"#);
    assert_eq!(run(&j).unwrap().records[0].data["normal_form"], "0");
}

#[test]
fn typea_five_at_one_half() {
    let mut j = JobSpec::new("cherednik typea");
    j.n = Some(5);
    j.c = Some("1/2".into());
    let r = run(&j).unwrap();
    let head = record(&r, "ideal count");
    assert_eq!(head.data["num_ideals"], 2);
    assert_eq!(head.data["finite_dimensional"], false);
    assert_eq!(r.records.len(), 3);
}

#[test]
fn group_analyze_s3() {
    let j = job(r#"{"command": "group analyze", "group": "symmetric:3:reflection"}"#);
    let r = run(&j).unwrap();
    assert!(r.passed);
    assert_eq!(record(&r, "group").data["order"], 6);
    assert_eq!(record(&r, "conjugacy classes").data["count"], 3);
    assert_eq!(record(&r, "conversion factors").data["mu"][0], "-2");
}

#[test]
fn centralizer_subgroups() {
    for sub in ["trivial", "all", "parabolic:2", "stabilizer:1,1", "elements:1"] {
        let mut j = JobSpec::new("centralizer selftest");
        j.group = Some("symmetric:3:reflection".into());
        j.subgroup = Some(sub.into());
        let r = run(&j).unwrap();
        assert!(r.passed, "{sub}: {}", r.summary());
    }
    let mut j = JobSpec::new("centralizer selftest");
    j.group = Some("symmetric:3:reflection".into());
    j.subgroup = Some("parabolic:7".into());
    assert_eq!(run(&j).unwrap_err().exit_code(), 2);
}

#[test]
fn be_iso_verify_reports() {
    let j = job(r#"{"command": "be-iso verify", "group": "symmetric:3:reflection", "b": "1,-1", "order": 2}"#);
    let r = run(&j).unwrap();
    assert!(r.passed, "{}", r.summary());
    let j = job(r#"{"command": "be-iso verify", "group": "symmetric:2:reflection", "b": "1", "order": 3}"#);
    let r = run(&j).unwrap();
    assert!(r.passed, "{}", r.summary());
    let j = job(r#"{"command": "be-iso verify", "group": "symmetric:2:reflection", "b": "1,2"}"#);
    assert_eq!(run(&j).unwrap_err().exit_code(), 3);
    let j = job(r#"{"command": "be-iso verify", "group": "symmetric:2:reflection", "b": "1", "order": 0}"#);
    assert_eq!(run(&j).unwrap_err().exit_code(), 3);
}

#[test]
fn simplicity_lattice_for_s3() {
    let j = job(r#"{"command": "simplicity lattice", "group": "symmetric:3:reflection", "c": "1/3"}"#);
    let r = run(&j).unwrap();
    assert_eq!(r.records.len(), 2);
    assert_eq!(r.records[0].data["mu"][0], "-2");
}

#[test]
fn selftest_passes_and_perturbation_is_caught() {
    let ok = selftest(&SelftestOptions::default()).unwrap();
    assert!(ok.passed, "{}", ok.summary());
    let bad = selftest(&SelftestOptions { perturb: true }).unwrap();
    assert!(!bad.passed);
    assert_eq!(record(&bad, "associativity (S_3)").verdict, Status::Fail);
    assert_eq!(record(&bad, "completion isomorphism (S_2, b = 1, order 4)").verdict, Status::Fail);
    assert_eq!(record(&bad, "associativity (S_2)").verdict, Status::Pass);
}

#[test]
fn thread_variable_is_validated() {
    assert!(configure_threads().is_ok());
}
