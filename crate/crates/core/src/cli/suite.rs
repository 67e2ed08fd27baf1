use std::fmt::Display;

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::airy_numeric::{
    derivative_oracle_error, genfun_check, lambda_closed_conditioning, lambda_tail, product_fd_error,
    wronskian_residual, AiryFn, Product,
};
use crate::airy_pq::{
    gtilde, gtilde_via_2f1, laplace_fourth_order_check, p_closed, pq_large_x_terms, pq_maurone_phares,
    pq_parity_reconstruct, pq_recurrence, pq_small_x_leading, q_closed, reduce, z_lambda_check, z_large_x_terms,
    z_recurrence, z_small_x_leading, Expansion, PQPair,
};
use crate::airy_rst::{
    h_coeff, h_via_3f2, r_closed, rst_convolution, rst_recurrence, rst_small_x_leading, s_closed,
    satisfies_rst_recurrence, t_closed, RSTTriple,
};
use crate::certs::{annihilation_check, sequence_closed, sequence_sum, t_reduction_check, telescoping_check, Sequence};
use crate::error::Result;
use crate::family::Family;
use crate::golden::{TABLE1, TABLE2};
use crate::hyper::{sweep_2f1, sweep_3f2, sweep_constant, sweep_two_param, Id2F1, Id3F2, IdentityReport, TwoParam};
use crate::ratcore::{sturm_count, Poly};

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of the verification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub family: Option<String>,
    pub n: Option<i64>,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub rel_err: Option<f64>,
}

/// All records of a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub records: Vec<CheckRecord>,
    pub passed: bool,
}

impl SuiteResult {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}

/// Deliberate corruptions used to exercise the failure path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Alter the golden `Q_10` of the first table.
    Table1,
    /// Alter the golden `R_11` of the second table.
    Table2,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub seed: u64,
    /// Replaces every floating tolerance when set.
    pub tol: Option<f64>,
    pub fault: Option<Fault>,
}

pub const DEFAULT_SEED: u64 = 20_240_611;

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n_max: 40, seed: DEFAULT_SEED, tol: None, fault: None }
    }
}

struct Recorder {
    records: Vec<CheckRecord>,
    tol: Option<f64>,
}

impl Recorder {
    fn push(&mut self, check: &str, family: Option<Family>, n: Option<usize>, ok: bool) -> &mut CheckRecord {
        self.records.push(CheckRecord {
            check: check.to_string(),
            family: family.map(|f| f.to_string()),
            n: n.map(|v| v as i64),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: None,
            rhs: None,
            rel_err: None,
        });
        self.records.last_mut().unwrap()
    }

    fn equal<T: PartialEq + Display>(
        &mut self,
        check: &str,
        family: Option<Family>,
        n: Option<usize>,
        lhs: &T,
        rhs: &T,
    ) {
        let ok = lhs == rhs;
        let r = self.push(check, family, n, ok);
        r.lhs = Some(lhs.to_string());
        r.rhs = Some(rhs.to_string());
    }

    fn flag(&mut self, check: &str, family: Option<Family>, n: Option<usize>, ok: Result<bool>) {
        match ok {
            Ok(ok) => {
                self.push(check, family, n, ok);
            }
            Err(e) => {
                self.push(check, family, n, false).lhs = Some(e.to_string());
            }
        }
    }

    fn within(&mut self, check: &str, n: Option<usize>, err: Result<f64>, default_tol: f64) {
        let tol = self.tol.unwrap_or(default_tol);
        match err {
            Ok(e) => {
                self.push(check, None, n, e <= tol).rel_err = Some(e);
            }
            Err(e) => {
                self.push(check, None, n, false).lhs = Some(e.to_string());
            }
        }
    }

    /// The closed form loses about `cond` relative accuracy to cancellation,
    /// so the bound is never tighter than a small multiple of it.
    fn lambda(&mut self, n: usize, big_n: usize, t: f64) {
        let name = format!("numeric.lambda_tail[N={big_n},t={t}]");
        let tol = self.tol.unwrap_or(1e-10);
        match lambda_tail(n, big_n, t) {
            Ok((c, s)) => {
                let bound = tol.max(64.0 * lambda_closed_conditioning(n, big_n, t, s));
                let e = (c - s).abs() / s.abs();
                let r = self.push(&name, None, Some(n), e <= bound);
                r.lhs = Some(format!("{c:e}"));
                r.rhs = Some(format!("{s:e}"));
                r.rel_err = Some(e);
            }
            Err(e) => {
                self.push(&name, None, Some(n), false).lhs = Some(e.to_string());
            }
        }
    }

    fn identity(&mut self, prefix: &str, report: &IdentityReport) {
        let tol = self.tol.unwrap_or(report.tolerance);
        for (i, c) in report.checks.iter().enumerate() {
            let r = self.push(&format!("{prefix}[{}]", c.point), None, Some(i), c.passes(tol));
            r.lhs = Some(format!("{:e}", c.lhs));
            r.rhs = Some(format!("{:e}", c.rhs));
            r.rel_err = Some(c.rel_err);
        }
        for f in &report.failures {
            self.push(prefix, None, None, false).lhs = Some(f.clone());
        }
    }
}

fn parse(s: &str) -> Poly {
    s.parse().expect("golden table entries are well formed")
}

/// Table 1 rows with an optional corruption.
pub fn golden_table1(fault: Option<Fault>) -> Vec<(Poly, Poly)> {
    let mut rows: Vec<(Poly, Poly)> = TABLE1.iter().map(|(p, q)| (parse(p), parse(q))).collect();
    if fault == Some(Fault::Table1) {
        rows[10].1 = parse("20x^3+81");
    }
    rows
}

/// Table 2 rows with an optional corruption.
pub fn golden_table2(fault: Option<Fault>) -> Vec<(Poly, Poly, Poly)> {
    let mut rows: Vec<(Poly, Poly, Poly)> = TABLE2.iter().map(|(r, s, t)| (parse(r), parse(s), parse(t))).collect();
    if fault == Some(Fault::Table2) {
        rows[11].0 = parse("11776x^4+27665x");
    }
    rows
}

fn table1(rec: &mut Recorder, pq: &[PQPair], fault: Option<Fault>) {
    for (n, (gp, gq)) in golden_table1(fault).iter().enumerate() {
        rec.equal("table1.recurrence", Some(Family::P), Some(n), &pq[n].p, gp);
        rec.equal("table1.recurrence", Some(Family::Q), Some(n), &pq[n].q, gq);
        rec.equal("table1.closed", Some(Family::P), Some(n), &p_closed(n), gp);
        let qc = if n == 0 { Poly::zero() } else { q_closed(n - 1) };
        rec.equal("table1.closed", Some(Family::Q), Some(n), &qc, gq);
        let mp = pq_maurone_phares(n);
        rec.equal("table1.maurone_phares", Some(Family::P), Some(n), &mp.p, gp);
        rec.equal("table1.maurone_phares", Some(Family::Q), Some(n), &mp.q, gq);
    }
}

fn table2(rec: &mut Recorder, pq: &[PQPair], rst: &[RSTTriple], fault: Option<Fault>) {
    for (n, (gr, gs, gt)) in golden_table2(fault).iter().enumerate() {
        let e = &rst[n];
        rec.equal("table2.recurrence", Some(Family::R), Some(n), &e.r, gr);
        rec.equal("table2.recurrence", Some(Family::S), Some(n), &e.s, gs);
        rec.equal("table2.recurrence", Some(Family::T), Some(n), &e.t, gt);
        for (fam, got, want) in
            [(Family::R, r_closed(n), gr), (Family::S, s_closed(n), gs), (Family::T, t_closed(n), gt)]
        {
            match got {
                Ok(p) => rec.equal("table2.closed", Some(fam), Some(n), &p, want),
                Err(err) => rec.flag("table2.closed", Some(fam), Some(n), Err(err)),
            }
        }
        match rst_convolution(n, pq) {
            Ok(c) => {
                rec.equal("table2.convolution", Some(Family::R), Some(n), &c.r, gr);
                rec.equal("table2.convolution", Some(Family::S), Some(n), &c.s, gs);
                rec.equal("table2.convolution", Some(Family::T), Some(n), &c.t, gt);
            }
            Err(err) => rec.flag("table2.convolution", None, Some(n), Err(err)),
        }
    }
}

fn routes(rec: &mut Recorder, pq: &[PQPair], rst: &[RSTTriple], n_max: usize) {
    for n in 0..=n_max {
        let qc = if n == 0 { Poly::zero() } else { q_closed(n - 1) };
        let ok = p_closed(n) == pq[n].p && qc == pq[n].q;
        let mp = pq_maurone_phares(n);
        rec.flag("pq.closed_route", None, Some(n), Ok(ok));
        rec.flag("pq.maurone_phares_route", None, Some(n), Ok(mp == pq[n]));
        let positive = pq[n].p.coeffs().iter().chain(pq[n].q.coeffs()).all(|c| c.is_integer() && !c.is_negative());
        rec.flag("pq.nonnegative_integer_coeffs", None, Some(n), Ok(positive));
    }
    for m in 0..=n_max {
        let ok = (0..=n_max).all(|n| gtilde_via_2f1(m, n).map(|v| v == gtilde(m, n)).unwrap_or(false));
        rec.flag("gtilde.via_2f1", None, Some(m), Ok(ok));
    }
    for m in 0..=20 {
        let ok = (0..=20).all(|n| h_via_3f2(m, n).map(|v| v == h_coeff(m, n)).unwrap_or(false));
        rec.flag("h.via_3f2", None, Some(m), Ok(ok));
    }
    let n_rst = n_max.min(rst.len() - 1);
    for n in 0..=n_rst {
        let closed = (|| -> Result<bool> {
            Ok(r_closed(n)? == rst[n].r && s_closed(n)? == rst[n].s && t_closed(n)? == rst[n].t)
        })();
        rec.flag("rst.closed_route", None, Some(n), closed);
        rec.flag("rst.convolution_route", None, Some(n), rst_convolution(n, pq).map(|c| c == rst[n]));
    }
}

fn recurrences(rec: &mut Recorder, pq: &[PQPair], rst: &[RSTTriple], n_max: usize) {
    let x = Poly::x();
    let z = z_recurrence(n_max);
    let cols: [(Family, Vec<Poly>); 3] = [
        (Family::P, pq.iter().map(|e| e.p.clone()).collect()),
        (Family::Q, pq.iter().map(|e| e.q.clone()).collect()),
        (Family::Z, z),
    ];
    for (fam, ys) in &cols {
        for n in 0..ys.len().saturating_sub(3) {
            let rhs = &(&x * &ys[n + 1]) + &ys[n].scale(&crate::ratcore::int(n as i64 + 1));
            rec.flag("recurrence.three_term", Some(*fam), Some(n), Ok(ys[n + 3] == rhs));
        }
    }
    for n in 0..pq.len() - 1 {
        let ok =
            &pq[n + 1].q - &pq[n].q.derivative() == pq[n].p && &pq[n + 1].p - &pq[n].p.derivative() == &x * &pq[n].q;
        rec.flag("recurrence.pq_cross", None, Some(n), Ok(ok));
    }
    for (fam, pick) in [
        (Family::R, (|e: &RSTTriple| e.r.clone()) as fn(&RSTTriple) -> Poly),
        (Family::S, |e: &RSTTriple| e.s.clone()),
        (Family::T, |e: &RSTTriple| e.t.clone()),
    ] {
        let ys: Vec<Poly> = rst.iter().map(pick).collect();
        rec.flag("recurrence.rst_third_order", Some(fam), None, Ok(satisfies_rst_recurrence(&ys).is_none()));
    }
    rec.flag("laplace.fourth_order", None, Some(12), Ok(laplace_fourth_order_check(12)));
    for n in 0..=12 {
        rec.flag("laplace.parity_reconstruct", None, Some(n), Ok(pq_parity_reconstruct(n) == pq[n]));
    }
    rec.flag("z.lambda", None, Some(n_max), Ok(z_lambda_check(n_max)));
}

fn expansions(rec: &mut Recorder, pq: &[PQPair], rst: &[RSTTriple], n_max: usize) {
    let z = z_recurrence(n_max);
    let mut check = |name: &str, e: &Expansion, p: &Poly| {
        rec.flag(name, Some(e.family), Some(e.index), Ok(e.matches(p)));
    };
    for n in 0..=n_max {
        let [p, q] = pq_small_x_leading(n);
        check("expansion.small_x", &p, &pq[n].p);
        check("expansion.small_x", &q, &pq[n].q);
        check("expansion.small_x", &z_small_x_leading(n), &z[n]);
    }
    for n in 0..=(n_max - 1) / 2 {
        let [pe, po, qe, qo] = pq_large_x_terms(n);
        check("expansion.large_x", &pe, &pq[2 * n].p);
        check("expansion.large_x", &po, &pq[2 * n + 1].p);
        check("expansion.large_x", &qe, &pq[2 * n].q);
        check("expansion.large_x", &qo, &pq[2 * n + 1].q);
    }
    for n in 0..=(n_max.saturating_sub(3)) / 2 {
        let [ze, zo] = z_large_x_terms(n);
        check("expansion.large_x", &ze, &z[2 * n + 2]);
        check("expansion.large_x", &zo, &z[2 * n + 3]);
    }
    for (n, e) in rst.iter().enumerate() {
        let [r, s, t] = rst_small_x_leading(n);
        check("expansion.small_x", &r, &e.r);
        check("expansion.small_x", &s, &e.s);
        check("expansion.small_x", &t, &e.t);
    }
}

fn zeros(rec: &mut Recorder, pq: &[PQPair], rst: &[RSTTriple], n_max: usize) {
    let z = z_recurrence(n_max);
    for fam in Family::ALL {
        for n in 0..=n_max {
            let p = match fam {
                Family::P => &pq[n].p,
                Family::Q => &pq[n].q,
                Family::Z => &z[n],
                Family::R => &rst[n].r,
                Family::S => &rst[n].s,
                Family::T => &rst[n].t,
            };
            if p.is_zero() {
                continue;
            }
            let outcome = reduce(fam, n, p).and_then(|r| {
                if r.degree() == Some(0) {
                    return Ok(None);
                }
                let c = sturm_count(&r)?;
                let d = r.degree().unwrap();
                Ok(Some(c.real == d && c.negative == d && c.all_simple))
            });
            match outcome {
                Ok(None) => {}
                Ok(Some(ok)) => rec.flag("zeros.real_negative_simple", Some(fam), Some(n), Ok(ok)),
                Err(e) => rec.flag("zeros.real_negative_simple", Some(fam), Some(n), Err(e)),
            }
        }
    }
}

fn hypergeometric(rec: &mut Recorder, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for id in Id2F1::ALL {
        rec.identity(&format!("hyper.2F1.{id}"), &sweep_2f1(id, &mut rng, 20, 50));
    }
    for id in Id3F2::ALL {
        rec.identity(&format!("hyper.3F2.{id}"), &sweep_3f2(id, &mut rng, 12, 50));
    }
    for id in TwoParam::ALL {
        rec.identity(&format!("hyper.3F2.{id}"), &sweep_two_param(id, &mut rng, 12, 50));
    }
    rec.identity("hyper.constant_minus_two", &sweep_constant(&mut rng, 20));
}

fn certificates(rec: &mut Recorder) {
    for n in 0..=30 {
        rec.flag("certs.telescoping", None, Some(n), telescoping_check(n));
    }
    for seq in Sequence::ALL {
        let name = format!("certs.sequence.{seq}");
        for n in 0..=25 {
            match sequence_sum(seq, n) {
                Ok(s) => rec.equal(&name, None, Some(n), &s, &sequence_closed(seq, n)),
                Err(e) => rec.flag(&name, None, Some(n), Err(e)),
            }
        }
        rec.flag(
            &format!("certs.annihilation.{seq}"),
            None,
            Some(24),
            (0..25).try_fold(true, |acc, n| Ok(acc && annihilation_check(seq, n)?)),
        );
    }
    for n in 0..=10 {
        for d in 0..=1 {
            rec.flag(&format!("certs.t_reduction.delta{d}"), None, Some(n), t_reduction_check(n, d));
        }
    }
}

fn numeric(rec: &mut Recorder, pq: &[PQPair], rst: &[RSTTriple]) {
    for i in 0..=100 {
        let x = -6.0 + 0.12 * i as f64;
        rec.within("numeric.wronskian", Some(i), wronskian_residual(x).map(f64::abs), 1e-10);
    }
    let xs = [-2.0, -1.5, -1.0, -0.3, 0.0, 0.4, 1.0, 1.7, 2.0];
    for which in [AiryFn::Ai, AiryFn::Bi] {
        for n in 0..=10 {
            for &x in &xs {
                rec.within(
                    &format!("numeric.derivative.{which}[x={x}]"),
                    Some(n),
                    derivative_oracle_error(which, n, x, &pq[n]),
                    1e-7,
                );
            }
        }
    }
    for p in Product::ALL {
        for n in 0..=6 {
            for &x in &xs {
                rec.within(
                    &format!("numeric.product_fd.{p}[x={x}]"),
                    Some(n),
                    product_fd_error(p, n, x, &rst[n]),
                    1e-5,
                );
            }
        }
    }
    for &(x, t) in &[(0.5, 0.3), (-1.0, 0.2), (1.5, -0.7), (-3.0, 0.9)] {
        let both = genfun_check(x, t, 25).and_then(|e25| Ok((e25, genfun_check(x, t, 35)?)));
        let name = format!("numeric.genfun[x={x},t={t}]");
        rec.within(&name, Some(35), both.clone().map(|(_, (p, q))| p.max(q)), 1e-9);
        let monotone = both.map(|((p25, q25), (p35, q35))| p35 <= p25 && q35 <= q25);
        rec.flag(&format!("numeric.genfun_decreasing[x={x},t={t}]"), None, Some(35), monotone);
    }
    for n in 0..=5 {
        for big_n in [0usize, 4, 8, 12] {
            for t in [0.1, 0.25, 0.5, 0.9] {
                rec.lambda(n, big_n, t);
            }
        }
    }
}

/// Runs every suite and collects the records in a fixed order.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut rec = Recorder { records: Vec::new(), tol: cfg.tol };
    let n_max = cfg.n_max.max(15);
    let pq = pq_recurrence(n_max);
    let rst = rst_recurrence(n_max);
    table1(&mut rec, &pq, cfg.fault);
    table2(&mut rec, &pq, &rst, cfg.fault);
    routes(&mut rec, &pq, &rst, n_max);
    recurrences(&mut rec, &pq, &rst, n_max);
    expansions(&mut rec, &pq, &rst, n_max);
    zeros(&mut rec, &pq, &rst, n_max);
    hypergeometric(&mut rec, cfg.seed);
    certificates(&mut rec);
    numeric(&mut rec, &pq, &rst);
    let passed = rec.records.iter().all(|r| r.status == Status::Pass);
    SuiteResult { records: rec.records, passed }
}
