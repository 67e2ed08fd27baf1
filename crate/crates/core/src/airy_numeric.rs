//! Double-precision evaluation of the Airy atoms `f`, `g`, of `Ai`, `Bi`,
//! and of their derivatives through the `P/Q` and `R/S/T` polynomials.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use twofloat::TwoFloat;

use crate::airy_pq::{pq_recurrence, PQPair};
use crate::airy_rst::RSTTriple;
use crate::error::{Error, Result};
use crate::hyper::gamma;

/// Largest `|x|` accepted by the series routes.
pub const X_MAX: f64 = 8.0;

/// Default truncation tolerance for the atom series.
pub const ATOM_TOL: f64 = 1e-17;

/// `f`, `g`, `f'`, `g'` at `x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AiryQuad {
    pub x: f64,
    pub f: f64,
    pub g: f64,
    pub fp: f64,
    pub gp: f64,
}

impl AiryQuad {
    pub fn wronskian(&self) -> f64 {
        self.f * self.gp - self.g * self.fp
    }
}

/// `c1 = 3^{-2/3}/Gamma(2/3)` and `c2 = 3^{-1/3}/Gamma(1/3)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AiryConsts {
    pub c1: f64,
    pub c2: f64,
}

impl AiryConsts {
    pub fn new() -> Self {
        AiryConsts {
            c1: 3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0).expect("regular point"),
            c2: 3f64.powf(-1.0 / 3.0) / gamma(1.0 / 3.0).expect("regular point"),
        }
    }
}

impl Default for AiryConsts {
    fn default() -> Self {
        Self::new()
    }
}

fn check_domain(x: f64) -> Result<()> {
    if x.is_finite() && x.abs() <= X_MAX {
        Ok(())
    } else {
        Err(Error::DomainExceeded(x))
    }
}

/// Sums `first + first*r(0) + first*r(0)*r(1) + ...` until a term drops
/// below `tol * (|sum| + 1)`.
fn ratio_series(first: f64, ratio: impl Fn(f64) -> f64, tol: f64) -> f64 {
    let mut sum = first;
    let mut term = first;
    let mut k = 0.0;
    while term.abs() >= tol * (sum.abs() + 1.0) {
        term *= ratio(k);
        sum += term;
        k += 1.0;
    }
    sum
}

fn ratio_series_dd(first: TwoFloat, ratio: impl Fn(f64) -> TwoFloat) -> TwoFloat {
    let mut sum = first;
    let mut term = first;
    let mut k = 0.0;
    while term.abs() >= 1e-32 * (sum.abs() + 1.0) {
        term *= ratio(k);
        sum += term;
        k += 1.0;
    }
    sum
}

/// `f g' - g f' - 1` with the atoms summed in double-double.
///
/// In plain double the residual is limited to about `eps |f g'|`, which
/// passes `1e-8` near `x = 6`.
pub fn wronskian_residual(x: f64) -> Result<f64> {
    check_domain(x)?;
    let xd = TwoFloat::from(x);
    let x3 = xd * xd * xd;
    let f = ratio_series_dd(TwoFloat::from(1.0), |k| x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0)));
    let g = ratio_series_dd(xd, |k| x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0)));
    let fp = ratio_series_dd(xd * xd / 2.0, |k| x3 / ((3.0 * k + 3.0) * (3.0 * k + 5.0)));
    let gp = ratio_series_dd(TwoFloat::from(1.0), |k| x3 / ((3.0 * k + 1.0) * (3.0 * k + 3.0)));
    Ok(f64::from(f * gp - g * fp - 1.0))
}

/// Airy atoms from their Maclaurin series.
pub fn airy_atoms(x: f64, tol: f64) -> Result<AiryQuad> {
    check_domain(x)?;
    let x3 = x * x * x;
    Ok(AiryQuad {
        x,
        f: ratio_series(1.0, |k| x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0)), tol),
        g: ratio_series(x, |k| x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0)), tol),
        fp: ratio_series(x * x / 2.0, |k| x3 / ((3.0 * k + 3.0) * (3.0 * k + 5.0)), tol),
        gp: ratio_series(1.0, |k| x3 / ((3.0 * k + 1.0) * (3.0 * k + 3.0)), tol),
    })
}

/// `Ai`, `Bi` and their first derivatives at one point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AiryValues {
    pub ai: f64,
    pub bi: f64,
    pub aip: f64,
    pub bip: f64,
}

pub fn ai_bi(x: f64) -> Result<AiryValues> {
    let q = airy_atoms(x, ATOM_TOL)?;
    let c = AiryConsts::new();
    let s3 = 3f64.sqrt();
    Ok(AiryValues {
        ai: c.c1 * q.f - c.c2 * q.g,
        bi: s3 * (c.c1 * q.f + c.c2 * q.g),
        aip: c.c1 * q.fp - c.c2 * q.gp,
        bip: s3 * (c.c1 * q.fp + c.c2 * q.gp),
    })
}

/// `Ai` or `Bi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AiryFn {
    Ai,
    Bi,
}

impl AiryValues {
    fn pick(&self, which: AiryFn) -> (f64, f64) {
        match which {
            AiryFn::Ai => (self.ai, self.aip),
            AiryFn::Bi => (self.bi, self.bip),
        }
    }
}

fn check_index(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("polynomials are for n={got}, asked for n={expected}")))
    }
}

/// `P_n(x) y(x) + Q_n(x) y'(x)` for `y = Ai` or `Bi`.
pub fn airy_derivative(which: AiryFn, n: usize, x: f64, pq: &PQPair) -> Result<f64> {
    check_index(n, pq.n)?;
    let (y, yp) = ai_bi(x)?.pick(which);
    Ok(pq.p.eval_f64(x) * y + pq.q.eval_f64(x) * yp)
}

/// `Ai^{(n)}(x)` from `P_n`, `Q_n`.
pub fn ai_derivative(n: usize, x: f64, pq: &PQPair) -> Result<f64> {
    airy_derivative(AiryFn::Ai, n, x, pq)
}

/// `n`-th derivative of `x^{3k+s} (c)_k 3^k / (3k+s)!` summed over `k`.
fn atom_derivative(c: f64, s: usize, n: usize, x: f64) -> f64 {
    let k0 = (n.saturating_sub(s)).div_ceil(3);
    // coefficient of x^{3k0+s-n}
    let mut coef = 1.0;
    for j in 0..k0 {
        coef *= (c + j as f64) * 3.0;
    }
    for j in 1..=(3 * k0 + s - n) {
        coef /= j as f64;
    }
    let p0 = 3 * k0 + s - n;
    let x3 = x * x * x;
    let mut term = coef * x.powi(p0 as i32);
    let mut sum = term;
    let mut k = k0 as f64;
    let mut p = p0 as f64;
    loop {
        term *= (c + k) * 3.0 * x3 / ((p + 1.0) * (p + 2.0) * (p + 3.0));
        sum += term;
        k += 1.0;
        p += 3.0;
        if term.abs() < ATOM_TOL * (sum.abs() + 1.0) && k > x.abs() {
            return sum;
        }
    }
}

/// `Ai^{(n)}(x)` or `Bi^{(n)}(x)` from the term-differentiated Maclaurin
/// series, independent of the polynomials.
pub fn maclaurin_derivative(which: AiryFn, n: usize, x: f64) -> Result<f64> {
    check_domain(x)?;
    let c = AiryConsts::new();
    let f = atom_derivative(1.0 / 3.0, 0, n, x);
    let g = atom_derivative(2.0 / 3.0, 1, n, x);
    Ok(match which {
        AiryFn::Ai => c.c1 * f - c.c2 * g,
        AiryFn::Bi => 3f64.sqrt() * (c.c1 * f + c.c2 * g),
    })
}

/// Relative deviation of [`airy_derivative`] from [`maclaurin_derivative`],
/// measured against `max(|oracle|, |P_n y| + |Q_n y'|)`.
pub fn derivative_oracle_error(which: AiryFn, n: usize, x: f64, pq: &PQPair) -> Result<f64> {
    check_index(n, pq.n)?;
    let (y, yp) = ai_bi(x)?.pick(which);
    let (a, b) = (pq.p.eval_f64(x) * y, pq.q.eval_f64(x) * yp);
    let oracle = maclaurin_derivative(which, n, x)?;
    Ok(scaled_err((a + b) - oracle, oracle.abs().max(a.abs() + b.abs())))
}

/// `diff / scale`, with exact agreement at zero counted as no error.
fn scaled_err(diff: f64, scale: f64) -> f64 {
    if diff == 0.0 {
        0.0
    } else {
        diff.abs() / scale
    }
}

/// Products whose derivatives the `R/S/T` polynomials describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Product {
    AiAi,
    AiBi,
    BiBi,
}

impl Product {
    pub const ALL: [Product; 3] = [Product::AiAi, Product::AiBi, Product::BiBi];

    /// The product itself at `x`.
    pub fn value(self, x: f64) -> Result<f64> {
        let v = ai_bi(x)?;
        Ok(match self {
            Product::AiAi => v.ai * v.ai,
            Product::AiBi => v.ai * v.bi,
            Product::BiBi => v.bi * v.bi,
        })
    }
}

/// The four summands `R uv`, `S uv'`, `S u'v`, `T u'v'`.
fn product_terms(which: Product, n: usize, x: f64, rst: &RSTTriple) -> Result<[f64; 4]> {
    check_index(n, rst.n)?;
    let v = ai_bi(x)?;
    let ((u, up), (w, wp)) = match which {
        Product::AiAi => ((v.ai, v.aip), (v.ai, v.aip)),
        Product::AiBi => ((v.ai, v.aip), (v.bi, v.bip)),
        Product::BiBi => ((v.bi, v.bip), (v.bi, v.bip)),
    };
    let (r, s, t) = (rst.r.eval_f64(x), rst.s.eval_f64(x), rst.t.eval_f64(x));
    Ok([r * u * w, s * u * wp, s * up * w, t * up * wp])
}

/// `R_n u v + S_n (u v' + u' v) + T_n u' v'` for the chosen pair `(u, v)`.
pub fn product_derivative(which: Product, n: usize, x: f64, rst: &RSTTriple) -> Result<f64> {
    Ok(product_terms(which, n, x, rst)?.iter().sum())
}

/// Sum of the magnitudes of the summands in [`product_derivative`].
///
/// Used as an error scale where the derivative itself vanishes.
pub fn product_derivative_scale(which: Product, n: usize, x: f64, rst: &RSTTriple) -> Result<f64> {
    Ok(product_terms(which, n, x, rst)?.iter().map(|t| t.abs()).sum())
}

/// Relative deviation of the Richardson estimate from [`product_derivative`],
/// measured against `max(|exact|, scale)`.
pub fn product_fd_error(which: Product, n: usize, x: f64, rst: &RSTTriple) -> Result<f64> {
    let exact = product_derivative(which, n, x, rst)?;
    let scale = product_derivative_scale(which, n, x, rst)?;
    let fd = richardson_derivative(&|y| which.value(y), n, x, richardson_step(n))?;
    Ok(scaled_err(fd - exact, exact.abs().max(scale)))
}

/// Base step for [`richardson_derivative`] at derivative order `n`.
///
/// Higher orders need larger steps: rounding in an `n`-th difference grows
/// like `eps / h^n`.
pub fn richardson_step(n: usize) -> f64 {
    const STEPS: [f64; 9] = [1e-4, 0.03, 0.05, 0.05, 0.08, 0.12, 0.12, 0.15, 0.2];
    STEPS[n.min(STEPS.len() - 1)]
}

/// `n`-th central difference of `func` at `x` with step `h`, divided by `h^n`.
fn central_difference(func: &dyn Fn(f64) -> Result<f64>, n: usize, x: f64, h: f64) -> Result<f64> {
    let mut acc = 0.0;
    let mut c = 1.0;
    for j in 0..=n {
        let off = (n as f64 / 2.0 - j as f64) * h;
        acc += c * func(x + off)?;
        c *= -((n - j) as f64) / (j as f64 + 1.0);
    }
    Ok(acc / h.powi(n as i32))
}

/// `n`-th derivative by central differences at `h`, `h/2`, `h/4` with two
/// levels of Richardson extrapolation.
pub fn richardson_derivative(func: &dyn Fn(f64) -> Result<f64>, n: usize, x: f64, h: f64) -> Result<f64> {
    if n == 0 {
        return func(x);
    }
    let d0 = central_difference(func, n, x, h)?;
    let d1 = central_difference(func, n, x, h / 2.0)?;
    let d2 = central_difference(func, n, x, h / 4.0)?;
    let e0 = (4.0 * d1 - d0) / 3.0;
    let e1 = (4.0 * d2 - d1) / 3.0;
    Ok((16.0 * e1 - e0) / 15.0)
}

/// Absolute deviations of the truncated generating functions of `P_n` and
/// `Q_n` from their closed forms in the atoms.
pub fn genfun_check(x: f64, t: f64, n_max: usize) -> Result<(f64, f64)> {
    if t.abs() > 1.0 {
        return Err(Error::DomainExceeded(t));
    }
    let a = airy_atoms(x, ATOM_TOL)?;
    let b = airy_atoms(x + t, ATOM_TOL)?;
    let table = pq_recurrence(n_max);
    let (mut sp, mut sq) = (0.0, 0.0);
    let mut w = 1.0;
    for (n, pair) in table.iter().enumerate() {
        if n > 0 {
            w *= t / n as f64;
        }
        sp += pair.p.eval_f64(x) * w;
        sq += pair.q.eval_f64(x) * w;
    }
    let p_closed = a.gp * b.f - a.fp * b.g;
    let q_closed = a.f * b.g - a.g * b.f;
    Ok(((sp - p_closed).abs(), (sq - q_closed).abs()))
}

/// `Lambda_{n,N}(t)` by the closed form and by its tail series.
pub fn lambda_tail(n: usize, big_n: usize, t: f64) -> Result<(f64, f64)> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::DomainExceeded(t));
    }
    let a = n as f64 + 0.5;
    let mut partial = 0.0;
    let mut term = 1.0;
    for k in 0..=big_n {
        partial += term;
        term *= (a + k as f64) * t / (k as f64 + 1.0);
    }
    let scale = t.powi(-(big_n as i32 + 1));
    let via_closed = ((1.0 - t).powf(-a) - partial) * scale;

    // term is now (a)_{N+1} t^{N+1}/(N+1)!
    let mut k = big_n as f64 + 1.0;
    let mut tail_term = term * scale;
    let mut via_series = 0.0;
    for _ in 0..crate::hyper::TERM_CAP {
        via_series += tail_term;
        let ratio = (a + k) * t / (k + 1.0);
        tail_term *= ratio;
        k += 1.0;
        if ratio < 1.0 && tail_term * ratio / (1.0 - ratio) <= 1e-17 * via_series {
            return Ok((via_closed, via_series));
        }
    }
    Err(Error::TermCapReached(crate::hyper::TERM_CAP))
}

/// Rounding-error estimate for the closed form of [`lambda_tail`], relative to its value.
pub fn lambda_closed_conditioning(n: usize, big_n: usize, t: f64, value: f64) -> f64 {
    (1.0 - t).powf(-(n as f64 + 0.5)) * t.powi(-(big_n as i32 + 1)) / value.abs() * f64::EPSILON
}

impl fmt::Display for AiryFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Either kind of evaluation target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Target {
    Single(AiryFn),
    Pair(Product),
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "ai" => Target::Single(AiryFn::Ai),
            "bi" => Target::Single(AiryFn::Bi),
            "aiai" => Target::Pair(Product::AiAi),
            "aibi" => Target::Pair(Product::AiBi),
            "bibi" => Target::Pair(Product::BiBi),
            _ => return Err(Error::Parse(format!("unknown target {s}"))),
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Single(a) => a.fmt(f),
            Target::Pair(p) => p.fmt(f),
        }
    }
}
