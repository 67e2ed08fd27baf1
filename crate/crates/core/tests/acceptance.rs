//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines are always printed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use airy_deriv::airy_numeric::{derivative_oracle_error, product_fd_error, wronskian_residual, AiryFn, Product};
use airy_deriv::airy_pq::{
    gtilde, gtilde_via_2f1, laplace_fourth_order_check, laplace_seqs, p_closed, pq_large_x_terms, pq_maurone_phares,
    pq_parity_reconstruct, pq_recurrence, pq_small_x_leading, q_closed, reduce, z_large_x_terms, z_recurrence,
    z_small_x_leading, PQPair,
};
use airy_deriv::airy_rst::{
    h_coeff, h_via_3f2, r_closed, rst_convolution, rst_recurrence, rst_small_x_leading, s_closed, t_closed,
};
use airy_deriv::certs::{sequence_closed, sequence_sum, telescoping_check, Sequence};
use airy_deriv::cli::{golden_table1, golden_table2, DEFAULT_SEED};
use airy_deriv::family::Family;
use airy_deriv::hyper::{
    sweep_2f1, sweep_3f2, sweep_constant, sweep_two_param, Id2F1, Id3F2, IdentityReport, TwoParam,
};
use airy_deriv::ratcore::{int, sturm_count, Poly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_table1() -> Outcome {
    let golden = golden_table1(None);
    let pq = pq_recurrence(golden.len() - 1);
    for (n, (gp, gq)) in golden.iter().enumerate() {
        ensure(&pq[n].p == gp && &pq[n].q == gq, || format!("recurrence row {n}"))?;
        let qc = if n == 0 { Poly::zero() } else { q_closed(n - 1) };
        ensure(&p_closed(n) == gp && &qc == gq, || format!("closed row {n}"))?;
        let mp = pq_maurone_phares(n);
        ensure(&mp.p == gp && &mp.q == gq, || format!("Maurone-Phares row {n}"))?;
    }
    Ok(format!("{} rows, 3 routes", golden.len()))
}

fn c2_table2() -> Outcome {
    let golden = golden_table2(None);
    let rst = rst_recurrence(golden.len() - 1);
    let pq = pq_recurrence(golden.len() - 1);
    for (n, (gr, gs, gt)) in golden.iter().enumerate() {
        ensure(&rst[n].r == gr && &rst[n].s == gs && &rst[n].t == gt, || format!("recurrence row {n}"))?;
        let closed = (r_closed(n), s_closed(n), t_closed(n));
        ensure(matches!(closed, (Ok(ref r), Ok(ref s), Ok(ref t)) if r == gr && s == gs && t == gt), || {
            format!("closed row {n}")
        })?;
        let c = rst_convolution(n, &pq).map_err(|e| e.to_string())?;
        ensure(&c.r == gr && &c.s == gs && &c.t == gt, || format!("convolution row {n}"))?;
    }
    Ok(format!("{} rows, 3 routes", golden.len()))
}

fn c3_coefficients() -> Outcome {
    for m in 0..=40 {
        for n in 0..=40 {
            let v = gtilde_via_2f1(m, n).map_err(|e| e.to_string())?;
            ensure(v == gtilde(m, n), || format!("gtilde({m},{n})"))?;
        }
    }
    for m in 0..=20 {
        for n in 0..=20 {
            let v = h_via_3f2(m, n).map_err(|e| e.to_string())?;
            ensure(v == h_coeff(m, n), || format!("h({m},{n})"))?;
        }
    }
    Ok("41x41 gtilde, 21x21 h".into())
}

fn three_term_ok(ys: &[Poly], a: i64, b: i64, c: i64) -> Option<usize> {
    let x = Poly::x();
    (0..ys.len() - 3).find(|&n| {
        let rhs = &(&x * &ys[n + 1]).scale(&int(a)) + &ys[n].scale(&int(b * n as i64 + c));
        ys[n + 3] != rhs
    })
}

fn c4_recurrences() -> Outcome {
    let pq = pq_recurrence(60);
    let cols = [
        ("P", pq.iter().map(|e| e.p.clone()).collect::<Vec<_>>()),
        ("Q", pq.iter().map(|e| e.q.clone()).collect()),
        ("Z", z_recurrence(60)),
    ];
    for (name, ys) in &cols {
        if let Some(n) = three_term_ok(ys, 1, 1, 1) {
            return Err(format!("{name} three-term fails at n={n}"));
        }
    }
    let rst = rst_recurrence(40);
    let cols = [
        ("R", rst.iter().map(|e| e.r.clone()).collect::<Vec<_>>()),
        ("S", rst.iter().map(|e| e.s.clone()).collect()),
        ("T", rst.iter().map(|e| e.t.clone()).collect()),
    ];
    for (name, ys) in &cols {
        if let Some(n) = three_term_ok(ys, 4, 4, 2) {
            return Err(format!("{name} third-order fails at n={n}"));
        }
    }
    let s = laplace_seqs(12);
    let x = Poly::x();
    for (mu, nu) in [(&s.mu, &s.nu), (&s.mu_t, &s.nu_t)] {
        for k in 0..=10 {
            let kk = k as i64;
            ensure(mu[k + 2] == nu[k].scale(&int(2 * kk + 2)), || format!("mu second order at k={k}"))?;
            let rhs = &mu[k + 1].scale(&int(2 * kk + 3)) + &(&x * &mu[k]).scale(&int(2 * kk + 2));
            ensure(nu[k + 2] == rhs, || format!("nu second order at k={k}"))?;
        }
    }
    ensure(laplace_fourth_order_check(12), || "fourth order".into())?;
    for n in 0..=12 {
        let PQPair { p, q, .. } = pq_parity_reconstruct(n);
        ensure(p == pq[n].p && q == pq[n].q, || format!("parity reconstruction n={n}"))?;
    }
    Ok("P/Q/Z n<=57, R/S/T n<=37, Laplace k<=12, parity n<=12".into())
}

fn c5_expansions() -> Outcome {
    let n_max = 40;
    let pq = pq_recurrence(n_max);
    let z = z_recurrence(n_max);
    let rst = rst_recurrence(n_max);
    let mut count = 0;
    let mut check = |e: &airy_deriv::airy_pq::Expansion, p: &Poly| {
        count += 1;
        ensure(e.matches(p), || format!("{:?} {:?} expansion n={}", e.end, e.family, e.index))
    };
    for n in 0..=n_max {
        let [p, q] = pq_small_x_leading(n);
        check(&p, &pq[n].p)?;
        check(&q, &pq[n].q)?;
        check(&z_small_x_leading(n), &z[n])?;
        let [r, s, t] = rst_small_x_leading(n);
        check(&r, &rst[n].r)?;
        check(&s, &rst[n].s)?;
        check(&t, &rst[n].t)?;
    }
    for n in 0..=(n_max - 1) / 2 {
        let [pe, po, qe, qo] = pq_large_x_terms(n);
        check(&pe, &pq[2 * n].p)?;
        check(&po, &pq[2 * n + 1].p)?;
        check(&qe, &pq[2 * n].q)?;
        check(&qo, &pq[2 * n + 1].q)?;
    }
    for n in 0..=(n_max - 3) / 2 {
        let [ze, zo] = z_large_x_terms(n);
        check(&ze, &z[2 * n + 2])?;
        check(&zo, &z[2 * n + 3])?;
    }
    Ok(format!("{count} expansion prefixes"))
}

fn report_ok(r: &IdentityReport, exact_points: usize, random_points: usize) -> Result<(), String> {
    ensure(r.failures.is_empty(), || format!("{}: {}", r.identity_id, r.failures.join("; ")))?;
    ensure(r.exact_total == exact_points && r.exact_passes == exact_points, || {
        format!("{}: exact {}/{} of {exact_points}", r.identity_id, r.exact_passes, r.exact_total)
    })?;
    let floats = r.checks.iter().filter(|c| c.exact.is_none()).count();
    ensure(floats >= random_points, || format!("{}: only {floats} random points", r.identity_id))?;
    ensure(r.verdict && r.max_rel_err <= r.tolerance, || {
        format!("{}: max rel err {:.3e} > {:.0e}", r.identity_id, r.max_rel_err, r.tolerance)
    })
}

fn c6_2f1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut worst = 0f64;
    for id in Id2F1::ALL {
        let r = sweep_2f1(id, &mut rng, 20, 50);
        report_ok(&r, 21, 50)?;
        worst = worst.max(r.max_rel_err);
    }
    Ok(format!("5 identities, worst rel err {worst:.2e}"))
}

fn c7_3f2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 7);
    let mut worst = 0f64;
    for id in Id3F2::ALL {
        let r = sweep_3f2(id, &mut rng, 12, 50);
        report_ok(&r, 13, 50)?;
        worst = worst.max(r.max_rel_err);
    }
    for id in TwoParam::ALL {
        let r = sweep_two_param(id, &mut rng, 12, 50);
        ensure(r.failures.is_empty() && r.verdict, || format!("{}: {:?}", r.identity_id, r.failures))?;
        ensure(r.checks.len() >= 63, || format!("{}: {} points", r.identity_id, r.checks.len()))?;
        worst = worst.max(r.max_rel_err);
    }
    let c = sweep_constant(&mut rng, 20);
    ensure(c.checks.len() == 20 && c.checks.iter().all(|p| (p.lhs + 2.0).abs() <= 1e-8), || {
        format!("constant check, max deviation {:.3e}", c.max_rel_err)
    })?;
    Ok(format!("10 identities plus constant, worst rel err {worst:.2e}"))
}

fn c8_certificates() -> Outcome {
    for n in 0..=30 {
        ensure(telescoping_check(n).map_err(|e| e.to_string())?, || format!("telescoping n={n}"))?;
    }
    for seq in Sequence::ALL {
        for n in 0..=25 {
            let s = sequence_sum(seq, n).map_err(|e| e.to_string())?;
            ensure(s == sequence_closed(seq, n), || format!("{seq} n={n}"))?;
        }
    }
    Ok("telescoping n<=30, sequences n<=25".into())
}

fn c9_numeric() -> Outcome {
    let pq = pq_recurrence(10);
    let rst = rst_recurrence(6);
    let xs: Vec<f64> = (0..=40).map(|i| -2.0 + 0.1 * i as f64).collect();
    let mut worst_ai = 0f64;
    for which in [AiryFn::Ai, AiryFn::Bi] {
        for n in 0..=10 {
            for &x in &xs {
                let e = derivative_oracle_error(which, n, x, &pq[n]).map_err(|e| e.to_string())?;
                ensure(e <= 1e-7, || format!("{which:?}^({n})({x}) rel err {e:.3e}"))?;
                worst_ai = worst_ai.max(e);
            }
        }
    }
    let mut worst_prod = 0f64;
    for which in Product::ALL {
        for n in 0..=6 {
            for &x in &xs {
                let e = product_fd_error(which, n, x, &rst[n]).map_err(|e| e.to_string())?;
                ensure(e <= 1e-5, || format!("{which:?}^({n})({x}) rel err {e:.3e}"))?;
                worst_prod = worst_prod.max(e);
            }
        }
    }
    let mut worst_w = 0f64;
    for i in 0..=600 {
        let x = -6.0 + 0.02 * i as f64;
        let w = wronskian_residual(x).map_err(|e| e.to_string())?.abs();
        ensure(w <= 1e-10, || format!("Wronskian at {x}: {w:.3e}"))?;
        worst_w = worst_w.max(w);
    }
    Ok(format!("Ai/Bi {worst_ai:.2e}, products {worst_prod:.2e}, Wronskian {worst_w:.2e}"))
}

fn c10_zeros() -> Outcome {
    let pq = pq_recurrence(60);
    let z = z_recurrence(60);
    let rst = rst_recurrence(40);
    let mut checked = 0;
    for fam in Family::ALL {
        let polys: Vec<&Poly> = match fam {
            Family::P => pq.iter().map(|e| &e.p).collect(),
            Family::Q => pq.iter().map(|e| &e.q).collect(),
            Family::Z => z.iter().collect(),
            Family::R => rst.iter().map(|e| &e.r).collect(),
            Family::S => rst.iter().map(|e| &e.s).collect(),
            Family::T => rst.iter().map(|e| &e.t).collect(),
        };
        for (n, p) in polys.into_iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let r = reduce(fam, n, p).map_err(|e| e.to_string())?;
            let d = r.degree().expect("nonzero");
            if d == 0 {
                continue;
            }
            let c = sturm_count(&r).map_err(|e| e.to_string())?;
            ensure(c.real == d && c.negative == d && c.all_simple, || {
                format!("{fam}_{n}: degree {d}, real {}, negative {}, simple {}", c.real, c.negative, c.all_simple)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} reduced polynomials"))
}

fn c11_verify() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_airy-deriv")).arg("verify").output().map_err(|e| e.to_string())?;
    let last = String::from_utf8_lossy(&out.stdout).lines().last().unwrap_or("").to_string();
    ensure(out.status.code() == Some(0), || format!("exit {:?}: {last}", out.status.code()))?;
    Ok(last)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("1 table 1 reproduction", c1_table1, Duration::from_secs(1)),
        ("2 table 2 reproduction", c2_table2, Duration::from_secs(1)),
        ("3 coefficient equivalences", c3_coefficients, Duration::from_secs(5)),
        ("4 recurrence invariants", c4_recurrences, Duration::from_secs(5)),
        ("5 expansion prefixes", c5_expansions, Duration::MAX),
        ("6 2F1 identities", c6_2f1, Duration::MAX),
        ("7 3F2 identities", c7_3f2, Duration::MAX),
        ("8 certificates", c8_certificates, Duration::from_secs(10)),
        ("9 numeric derivatives", c9_numeric, Duration::MAX),
        ("10 zeros real negative simple", c10_zeros, Duration::from_secs(60)),
        ("11 default verify suite", c11_verify, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let dt = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if dt > budget => Err(format!("{detail}; took {dt:.2?}, budget {budget:.0?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({dt:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({dt:.2?}): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
