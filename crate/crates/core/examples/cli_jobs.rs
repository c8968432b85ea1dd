//! Build job descriptions in code, run them and print the reports the binary would emit.

use srak::cli::{run, selftest, JobSpec, SelftestOptions};

fn main() {
    let mut job = JobSpec::new("cherednik scan");
    job.group = Some("symmetric:2:reflection".into());
    job.c_list = Some("half_integers".into());
    job.cutoff = Some(6);
    match run(&job) {
        Ok(report) => print!("{}", report.summary()),
        Err(e) => eprintln!("{e} (exit {})", e.exit_code()),
    }

    let job = JobSpec::from_json(r#"{"command": "sra mul", "group": "symmetric:2:reflection", "elements": ["y", "x"]}"#)
        .expect("valid job");
    print!("{}", run(&job).expect("runs").to_json());

    let bad = JobSpec::from_json(r#"{"command": "sra mul", "group": "symmetric:2:reflection", "c": "1/0", "elements": ["y", "x"]}"#)
        .expect("valid job");
    if let Err(e) = run(&bad) {
        println!("{e} (exit {})", e.exit_code());
    }

    let report = selftest(&SelftestOptions::default()).expect("selftest runs");
    println!("selftest: {} records, passed {}", report.records.len(), report.passed);
}
