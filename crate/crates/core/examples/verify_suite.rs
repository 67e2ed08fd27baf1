//! Runs the verification suite in-process and summarises it by group.

use std::collections::BTreeMap;

use airy_deriv::cli::{run_suite, Status, SuiteConfig};

fn main() {
    let result = run_suite(&SuiteConfig::default());
    let mut groups: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in &result.records {
        let g = r.check.split('.').next().unwrap_or("");
        let e = groups.entry(g).or_default();
        e.0 += 1;
        if r.status == Status::Fail {
            e.1 += 1;
        }
    }
    for (g, (total, failed)) in groups {
        println!("{g:<16} {total:>5} checks  {failed} failed");
    }
    println!("overall: {}", if result.passed { "pass" } else { "fail" });
}
