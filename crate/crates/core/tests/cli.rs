use std::process::{Command, Output};

use airy_deriv::airy_pq::pq_recurrence;
use airy_deriv::ratcore::Poly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_airy-deriv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tables_json_round_trips_to_polynomials() {
    let o = run(&["--format", "json", "tables", "--n-max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    let pq = pq_recurrence(20);
    let table1: Vec<_> = rows.iter().filter(|r| r["table"] == 1).collect();
    assert_eq!(table1.len(), 21);
    for r in table1 {
        let n = r["n"].as_u64().unwrap() as usize;
        let p: Poly = r["P"].as_str().unwrap().parse().unwrap();
        let q: Poly = r["Q"].as_str().unwrap().parse().unwrap();
        assert_eq!((p, q), (pq[n].p.clone(), pq[n].q.clone()), "n={n}");
    }
    assert_eq!(rows.iter().filter(|r| r["table"] == 2).count(), 21);
}

#[test]
fn tables_csv_has_header_and_default_sizes() {
    let o = run(&["--format", "csv", "tables"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("table,n,P,Q,R,S,T"));
    assert_eq!(lines.count(), 16 + 13);
    assert!(text.lines().any(|l| l.starts_with("1,10,") && l.ends_with(",20x^3+80,,,")));
}

#[test]
fn eval_matches_library_and_rejects_out_of_range_x() {
    let o = run(&["--format", "json", "eval", "--n", "4", "--x", "-0.75", "--target", "Bi"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let pq = pq_recurrence(4);
    let want =
        airy_deriv::airy_numeric::airy_derivative(airy_deriv::airy_numeric::AiryFn::Bi, 4, -0.75, &pq[4]).unwrap();
    assert_eq!(v["value"].as_f64().unwrap(), want);

    assert_eq!(run(&["eval", "--n", "3", "--x", "8.5"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--n", "3", "--x", "1", "--target", "Ci"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["--n-max", "201", "tables"]).status.code(), Some(2));
    assert_eq!(run(&["--tol", "0", "tables"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["plotdata", "--steps", "1"]).status.code(), Some(2));
}

#[test]
fn injected_fault_fails_and_names_the_check() {
    let o = run(&["--n-max", "15", "verify", "--inject-fault", "table2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("table2.recurrence family=R n=11"), "{err}");
    assert!(!err.contains("table1"));
}

#[test]
fn verify_json_is_deterministic() {
    let a = run(&["--format", "json", "--n-max", "15", "verify"]);
    let b = run(&["--format", "json", "--n-max", "15", "verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let recs: Vec<serde_json::Value> = serde_json::from_slice(&a.stdout).unwrap();
    assert!(recs.len() > 200);
    assert!(recs.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn zeros_csv_rows_are_all_negative_and_simple() {
    let o = run(&["--format", "csv", "--n-max", "25", "zeros"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let mut count = 0;
    for row in rdr.records() {
        let row = row.unwrap();
        let (deg, real, neg) = (&row[2], &row[3], &row[4]);
        assert_eq!(deg, real);
        assert_eq!(deg, neg);
        assert_eq!(&row[5], "true");
        count += 1;
    }
    assert!(count > 50);
}

#[test]
fn plotdata_marks_poles_with_empty_cells() {
    let o = run(&["plotdata", "--curve", "tau", "--a-min", "0", "--a-max", "1", "--steps", "7"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 7);
    // a = 1/3 and a = 2/3 fall on grid points 2 and 4.
    assert!(rows[2].ends_with(','), "{}", rows[2]);
    assert!(rows[4].ends_with(','), "{}", rows[4]);
    let v5: f64 = rows[5].split(',').nth(1).unwrap().parse().unwrap();
    assert!(v5.abs() < 1e-9, "tau(5/6) = {v5}");

    let o = run(&["plotdata", "--curve", "F", "--a-min", "0.16666666666666666", "--a-max", "1", "--steps", "2"]);
    let first = stdout(&o).lines().nth(1).unwrap().to_string();
    let v: f64 = first.split(',').nth(1).unwrap().parse().unwrap();
    assert!((v - 1.0).abs() < 1e-12);
}
