use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use super::gamma::{cos_pi, gamma, rgamma, sin_pi, POLE_RADIUS};
use super::pfq::{pfq_exact, pfq_numeric, HyperSpec};
use crate::error::{Error, Result};
use crate::ratcore::{factorial, int, poch, rat, to_f64, Rational};

/// Summation tolerance used by every floating left-hand side.
const SERIES_TOL: f64 = 1e-17;

/// Tolerance for the `2F1` values at `-1/3`.
pub const TOL_2F1: f64 = 1e-9;
/// Tolerance for the `3F2` values at `3/4` and the constant check.
pub const TOL_3F2: f64 = 1e-8;

/// The five `2F1(a, a+1/2; c | -1/3)` evaluations, named by `c + 2a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Id2F1 {
    A,
    B52,
    B72,
    Cm12,
    C12,
}

/// The eight single-parameter `3F2(... | 3/4)` evaluations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Id3F2 {
    Ta,
    Tb,
    Sa,
    Sb,
    Ra,
    Rb,
    RPa,
    RPb,
}

/// The two-parameter `3F2(... | 3/4)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwoParam {
    CosCase,
    SinCase,
}

impl Id2F1 {
    pub const ALL: [Id2F1; 5] = [Id2F1::A, Id2F1::B52, Id2F1::B72, Id2F1::Cm12, Id2F1::C12];

    /// Lower parameter is `offset - 2a`.
    fn offset(self) -> Rational {
        match self {
            Id2F1::A => rat(3, 2),
            Id2F1::B52 => rat(5, 2),
            Id2F1::B72 => rat(7, 2),
            Id2F1::Cm12 => rat(-1, 2),
            Id2F1::C12 => rat(1, 2),
        }
    }
}

impl Id3F2 {
    pub const ALL: [Id3F2; 8] =
        [Id3F2::Ta, Id3F2::Tb, Id3F2::Sa, Id3F2::Sb, Id3F2::Ra, Id3F2::Rb, Id3F2::RPa, Id3F2::RPb];

    /// Parameters as `(c0, c1)` pairs meaning `c0 + c1 a`: three upper, two lower.
    fn params(self) -> ([(Rational, i64); 3], [(Rational, i64); 2]) {
        let h = |p, q| rat(p, q);
        let a = (int(0), 1);
        match self {
            Id3F2::Ta => ([a, (h(-1, 2), 3), (h(3, 2), -3)], [(int(0), 3), (h(1, 2), 0)]),
            Id3F2::Tb => ([a, (h(-3, 2), 3), (h(7, 2), -3)], [(int(-1), 3), (h(3, 2), 0)]),
            Id3F2::Sa => ([a, (h(1, 2), -3), (h(1, 2), 3)], [(int(0), 3), (h(1, 2), 0)]),
            Id3F2::Sb => ([a, (h(-1, 2), 3), (h(5, 2), -3)], [(int(-1), 3), (h(3, 2), 0)]),
            Id3F2::Ra => ([a, (h(3, 2), 3), (h(-1, 2), -3)], [(int(0), 3), (h(1, 2), 0)]),
            Id3F2::Rb => ([a, (h(1, 2), 3), (h(3, 2), -3)], [(int(-1), 3), (h(3, 2), 0)]),
            Id3F2::RPa => ([a, (h(1, 2), 3), (h(1, 2), -3)], [(int(-1), 3), (h(1, 2), 0)]),
            Id3F2::RPb => ([a, (h(-1, 2), 3), (h(5, 2), -3)], [(int(-2), 3), (h(3, 2), 0)]),
        }
    }

    fn spec_exact(self, a: &Rational) -> HyperSpec<Rational> {
        let (u, l) = self.params();
        let ev = |(c, k): &(Rational, i64)| c + a * int(*k);
        HyperSpec::new(u.iter().map(ev).collect(), l.iter().map(ev).collect(), rat(3, 4))
    }

    fn spec_f64(self, a: f64) -> HyperSpec<f64> {
        let (u, l) = self.params();
        let ev = |(c, k): &(Rational, i64)| to_f64(c) + a * *k as f64;
        HyperSpec::new(u.iter().map(ev).collect(), l.iter().map(ev).collect(), 0.75)
    }
}

macro_rules! display_debug {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(self, f)
            }
        }
    };
}
display_debug!(Id2F1);
display_debug!(Id3F2);
display_debug!(TwoParam);

/// Outcome of one identity at one point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointCheck {
    pub identity: String,
    pub point: String,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
    /// `Some(equal)` when both sides were computed exactly.
    pub exact: Option<bool>,
}

impl PointCheck {
    pub fn passes(&self, tol: f64) -> bool {
        match self.exact {
            Some(eq) => eq,
            None => self.rel_err <= tol,
        }
    }

    fn exact(identity: String, point: String, lhs: &Rational, rhs: &Rational) -> Self {
        let eq = lhs == rhs;
        PointCheck {
            identity,
            point,
            lhs: to_f64(lhs),
            rhs: to_f64(rhs),
            rel_err: if eq { 0.0 } else { rel_err(to_f64(lhs), to_f64(rhs)) },
            exact: Some(eq),
        }
    }

    fn float(identity: String, point: String, lhs: f64, rhs: f64) -> Self {
        PointCheck { identity, point, lhs, rhs, rel_err: rel_err(lhs, rhs), exact: None }
    }
}

/// `|lhs - rhs| / |rhs|`, falling back to the absolute difference at `rhs = 0`.
pub fn rel_err(lhs: f64, rhs: f64) -> f64 {
    let d = (lhs - rhs).abs();
    if rhs == 0.0 {
        d
    } else {
        d / rhs.abs()
    }
}

/// Refuses arguments near a pole of `Gamma` or a vanishing lower parameter.
fn guard_nonpositive(x: f64) -> Result<()> {
    let r = x.round();
    if r <= 0.0 && (x - r).abs() < POLE_RADIUS {
        Err(Error::PoleProximity(x))
    } else {
        Ok(())
    }
}

/// Refuses near-zero denominators.
fn guard_zero(x: f64) -> Result<()> {
    if x.abs() < POLE_RADIUS {
        Err(Error::PoleProximity(x))
    } else {
        Ok(())
    }
}

fn g(x: f64) -> Result<f64> {
    guard_nonpositive(x)?;
    gamma(x)
}

fn pow_int(b: i64, e: usize) -> Rational {
    Rational::from_integer(BigInt::from(b).pow(e as u32))
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Right side of a `2F1` identity at `a = -n/2`, as Pochhammer ratios.
pub fn rhs_2f1_exact(id: Id2F1, n: usize) -> Rational {
    let nn = int(n as i64);
    let six = pow_int(6, n);
    let p = |a: i64, b: i64, k: usize| poch(&rat(a, b), k);
    match id {
        Id2F1::A => six * p(2, 3, n) * fact(2 * n + 1) / fact(3 * n + 1),
        Id2F1::B52 => six / (&nn + int(1)) * (int(2) * p(5, 3, n) - p(4, 3, n)) * fact(2 * n + 3) / fact(3 * n + 3),
        Id2F1::B72 => {
            six * int(6) / ((&nn + int(1)) * (&nn + int(2))) * (p(5, 3, n + 1) - p(4, 3, n + 1)) * fact(2 * n + 5)
                / fact(3 * n + 5)
        }
        Id2F1::Cm12 => {
            // Gamma(-1-4a)/Gamma(-1-6a) at a -> 0 is the residue ratio 3/2.
            let ratio = if n == 0 { rat(3, 2) } else { fact(2 * n - 2) / fact(3 * n - 2) };
            let mix = (int(2) - int(3) * &nn) / (int(2) * (int(1) - int(3) * &nn));
            six * rat(1, 3) * (p(1, 3, n) + mix * p(2, 3, n)) * ratio
        }
        Id2F1::C12 => six * rat(1, 2) * (p(1, 3, n) + p(2, 3, n)) * fact(2 * n) / fact(3 * n),
    }
}

/// Right side of a `2F1` identity from its gamma closed form.
pub fn rhs_2f1_float(id: Id2F1, a: f64) -> Result<f64> {
    let s = 6f64.powf(-2.0 * a);
    Ok(match id {
        Id2F1::A => g(2.0 / 3.0 - 2.0 * a)? * g(2.0 - 4.0 * a)? * rgamma(2.0 - 6.0 * a) * s / g(2.0 / 3.0)?,
        Id2F1::B52 => {
            guard_zero(1.0 - 2.0 * a)?;
            let brace = 2.0 * g(5.0 / 3.0 - 2.0 * a)? / g(5.0 / 3.0)? - g(4.0 / 3.0 - 2.0 * a)? / g(4.0 / 3.0)?;
            s / (1.0 - 2.0 * a) * brace * g(4.0 - 4.0 * a)? * rgamma(4.0 - 6.0 * a)
        }
        Id2F1::B72 => {
            guard_zero(1.0 - 2.0 * a)?;
            guard_zero(2.0 - 2.0 * a)?;
            let brace = g(8.0 / 3.0 - 2.0 * a)? / g(5.0 / 3.0)? - g(7.0 / 3.0 - 2.0 * a)? / g(4.0 / 3.0)?;
            6.0 * s / ((1.0 - 2.0 * a) * (2.0 - 2.0 * a)) * brace * g(6.0 - 4.0 * a)? * rgamma(6.0 - 6.0 * a)
        }
        Id2F1::Cm12 => {
            guard_zero(1.0 + 6.0 * a)?;
            let brace = g(1.0 / 3.0 - 2.0 * a)? / g(1.0 / 3.0)?
                + (1.0 + 3.0 * a) / (1.0 + 6.0 * a) * g(2.0 / 3.0 - 2.0 * a)? / g(2.0 / 3.0)?;
            s / 3.0 * brace * g(-1.0 - 4.0 * a)? * rgamma(-1.0 - 6.0 * a)
        }
        Id2F1::C12 => {
            let brace = g(1.0 / 3.0 - 2.0 * a)? / g(1.0 / 3.0)? + g(2.0 / 3.0 - 2.0 * a)? / g(2.0 / 3.0)?;
            s / 2.0 * brace * g(1.0 - 4.0 * a)? * rgamma(1.0 - 6.0 * a)
        }
    })
}

/// Both sides of a `2F1` identity at the terminating point `a = -n/2`, exactly.
pub fn verify_2f1_exact(id: Id2F1, n: usize) -> Result<PointCheck> {
    let a = rat(-(n as i64), 2);
    let spec = HyperSpec::new(vec![a.clone(), &a + rat(1, 2)], vec![id.offset() - int(2) * &a], rat(-1, 3));
    let lhs = pfq_exact(&spec)?;
    Ok(PointCheck::exact(id.to_string(), format!("a={a}"), &lhs, &rhs_2f1_exact(id, n)))
}

/// Both sides of a `2F1` identity at real `a`, in double precision.
pub fn verify_2f1_value(id: Id2F1, a: f64) -> Result<PointCheck> {
    let c = to_f64(&id.offset()) - 2.0 * a;
    guard_nonpositive(c)?;
    let lhs = pfq_numeric(&HyperSpec::new(vec![a, a + 0.5], vec![c], -1.0 / 3.0), SERIES_TOL)?;
    let rhs = rhs_2f1_float(id, a)?;
    Ok(PointCheck::float(id.to_string(), format!("a={a}"), lhs, rhs))
}

/// Right side of a `3F2` identity at `a = -n`, read off the small-`x`
/// coefficients of `T`, `S`, `R` rather than the gamma form.
pub fn rhs_3f2_exact(id: Id3F2, n: usize) -> Rational {
    let nn = int(n as i64);
    let sg = sign(n);
    let nf = fact(n);
    let p = |a: i64, k: usize| poch(&rat(a, 6), k);
    let even = |top: Rational| &sg * pow_int(3, 3 * n) * top * &nf / fact(3 * n);
    let odd = |top: Rational, den: Rational| &sg * pow_int(3, 3 * n + 1) * top * &nf / (den * fact(3 * n + 1));
    let tb = || odd(p(5, 2 * n + 1), int(3) * &nn + rat(5, 2));
    match id {
        Id3F2::Ta => even(p(5, 2 * n)),
        Id3F2::Tb => tb(),
        Id3F2::Sa => even(p(3, 2 * n)),
        Id3F2::Sb => odd(p(3, 2 * n + 1), int(3) * &nn + rat(3, 2)),
        Id3F2::Ra => even(p(1, 2 * n)),
        Id3F2::Rb => odd(p(1, 2 * n + 1), int(3) * &nn + rat(1, 2)),
        Id3F2::RPa => odd(p(1, 2 * n + 1), int(1)) + even(p(5, 2 * n)) / (int(6) * &nn + int(2)),
        Id3F2::RPb => {
            let head = &sg * pow_int(3, 3 * n + 2) * p(1, 2 * n + 2) * &nf / fact(3 * n + 2);
            (head + (int(3) * &nn + rat(5, 2)) * tb() / (int(6) * &nn + int(4))) / (int(3) * &nn + rat(3, 2))
        }
    }
}

/// `Gamma(3a) / (3^{3a} Gamma(a))`.
fn g3(a: f64) -> Result<f64> {
    Ok(g(3.0 * a)? * rgamma(a) * 3f64.powf(-3.0 * a))
}

/// Right side of a `3F2` identity from gamma and trigonometric factors.
pub fn rhs_3f2_float(id: Id3F2, a: f64) -> Result<f64> {
    let t_part = || -> Result<f64> { Ok(g(1.0 / 6.0)? * sin_pi(a + 1.0 / 6.0) * rgamma(2.0 * a + 1.0 / 6.0)) };
    let r_part = || -> Result<f64> { Ok(g(5.0 / 6.0)? * sin_pi(1.0 / 6.0 - a) * rgamma(2.0 * a + 5.0 / 6.0)) };
    let s_part = || -> Result<f64> { Ok(PI.sqrt() * cos_pi(a) * rgamma(2.0 * a + 0.5)) };
    let lin = |x: f64| -> Result<f64> {
        guard_zero(x)?;
        Ok(x)
    };
    let base = g3(a)?;
    Ok(match id {
        Id3F2::Ta => 2.0 * base * t_part()?,
        Id3F2::Tb => (5.0 - 12.0 * a) / (lin(1.0 - 3.0 * a)? * lin(5.0 - 6.0 * a)?) * 2.0 * base * t_part()?,
        Id3F2::Sa => 4.0 * base * s_part()?,
        Id3F2::Sb => (1.0 - 4.0 * a) / (lin(1.0 - 2.0 * a)? * lin(1.0 - 3.0 * a)?) * 4.0 * base * s_part()?,
        Id3F2::Ra => 2.0 * base * r_part()?,
        Id3F2::Rb => (1.0 - 12.0 * a) / (lin(1.0 - 3.0 * a)? * lin(1.0 - 6.0 * a)?) * 2.0 * base * r_part()?,
        Id3F2::RPa => base / lin(1.0 - 3.0 * a)? * (t_part()? + (1.0 - 12.0 * a) * r_part()?),
        Id3F2::RPb => {
            let den = 3.0 * lin(1.0 - 2.0 * a)? * lin(1.0 - 3.0 * a)? * lin(2.0 - 3.0 * a)?;
            base / den * ((5.0 - 12.0 * a) * t_part()? + (1.0 - 12.0 * a) * (7.0 - 12.0 * a) * r_part()?)
        }
    })
}

/// Both sides of a `3F2` identity at the terminating point `a = -n`, exactly.
pub fn verify_3f2_exact(id: Id3F2, n: usize) -> Result<PointCheck> {
    let a = int(-(n as i64));
    let lhs = pfq_exact(&id.spec_exact(&a))?;
    Ok(PointCheck::exact(id.to_string(), format!("a={a}"), &lhs, &rhs_3f2_exact(id, n)))
}

/// Both sides of a `3F2` identity at real `a`, in double precision.
pub fn verify_3f2_value(id: Id3F2, a: f64) -> Result<PointCheck> {
    let spec = id.spec_f64(a);
    for &b in &spec.lower {
        guard_nonpositive(b)?;
    }
    let lhs = pfq_numeric(&spec, SERIES_TOL)?;
    let rhs = rhs_3f2_float(id, a)?;
    Ok(PointCheck::float(id.to_string(), format!("a={a}"), lhs, rhs))
}

impl TwoParam {
    pub const ALL: [TwoParam; 2] = [TwoParam::CosCase, TwoParam::SinCase];

    fn spec<T: Clone>(
        self,
        a: T,
        b: T,
        lift: impl Fn(i64, i64) -> T,
        ops: &dyn Fn(&T, i64, &T, i64, T) -> T,
    ) -> HyperSpec<T> {
        // ops(x, i, y, j, c) = i x + j y + c
        match self {
            TwoParam::CosCase => HyperSpec::new(
                vec![b.clone(), ops(&a, -3, &b, 0, lift(1, 2)), ops(&a, 3, &b, 0, lift(1, 2))],
                vec![ops(&a, 0, &b, 3, lift(0, 1)), lift(1, 2)],
                lift(3, 4),
            ),
            TwoParam::SinCase => HyperSpec::new(
                vec![b.clone(), ops(&a, -3, &b, 0, lift(1, 1)), ops(&a, 3, &b, 0, lift(1, 1))],
                vec![ops(&a, 0, &b, 3, lift(-1, 1)), lift(3, 2)],
                lift(3, 4),
            ),
        }
    }

    /// Gamma factors, excluding the trigonometric ones.
    fn gamma_part(self, a: f64, b: f64) -> Result<f64> {
        let p3 = 3f64.powf(-3.0 * b);
        match self {
            TwoParam::CosCase => Ok(4.0 * g(0.5 + a - b)? * g(3.0 * b)? * p3 * rgamma(0.5 + a + b) * rgamma(b)),
            TwoParam::SinCase => {
                guard_zero(a)?;
                Ok(4.0 * g(1.0 + a - b)? * g(3.0 * b - 1.0)? * p3 / a * rgamma(a + b) * rgamma(b))
            }
        }
    }

    fn trig_part(self, a: f64, b: f64) -> f64 {
        match self {
            TwoParam::CosCase => cos_pi(a) * cos_pi(b - a),
            TwoParam::SinCase => sin_pi(a) * sin_pi(b - a),
        }
    }

    /// True when a trigonometric factor vanishes exactly at rational `(a, b)`.
    fn trig_vanishes(self, a: &Rational, b: &Rational) -> bool {
        let half = rat(1, 2);
        match self {
            TwoParam::CosCase => (a - &half).is_integer() || (b - a - &half).is_integer(),
            TwoParam::SinCase => a.is_integer() || (b - a).is_integer(),
        }
    }
}

fn spec_f64(id: TwoParam, a: f64, b: f64) -> HyperSpec<f64> {
    id.spec(a, b, |p, q| p as f64 / q as f64, &|x, i, y, j, c| i as f64 * x + j as f64 * y + c)
}

fn spec_rat(id: TwoParam, a: &Rational, b: &Rational) -> HyperSpec<Rational> {
    id.spec(a.clone(), b.clone(), rat, &|x, i, y, j, c| x * int(i) + y * int(j) + c)
}

/// Both sides of a two-parameter identity at real `(a, b)`.
pub fn verify_3f2_two_param(id: TwoParam, a: f64, b: f64) -> Result<PointCheck> {
    let spec = spec_f64(id, a, b);
    for &l in &spec.lower {
        guard_nonpositive(l)?;
    }
    let lhs = pfq_numeric(&spec, SERIES_TOL)?;
    let rhs = id.gamma_part(a, b)? * id.trig_part(a, b);
    Ok(PointCheck::float(id.to_string(), format!("a={a},b={b}"), lhs, rhs))
}

/// Two-parameter identity at rational `(a, b)` where the series terminates.
///
/// The left side is exact. The right side is exactly zero when one of its
/// trigonometric factors vanishes; otherwise it has no rational form and is
/// evaluated in double precision.
pub fn verify_two_param_terminating(id: TwoParam, a: &Rational, b: &Rational) -> Result<PointCheck> {
    let lhs = pfq_exact(&spec_rat(id, a, b))?;
    let (af, bf) = (to_f64(a), to_f64(b));
    let gp = id.gamma_part(af, bf)?;
    let point = format!("a={a},b={b}");
    if id.trig_vanishes(a, b) {
        return Ok(PointCheck::exact(id.to_string(), point, &lhs, &Rational::zero()));
    }
    Ok(PointCheck::float(id.to_string(), point, to_f64(&lhs), gp * id.trig_part(af, bf)))
}

/// `F(a) = 3F2(a, 3a-1/2, 3/2-3a; 3a, 1/2 | 3/4)` by direct summation.
pub fn big_f(a: f64) -> Result<f64> {
    let spec = Id3F2::Ta.spec_f64(a);
    guard_nonpositive(spec.lower[0])?;
    pfq_numeric(&spec, SERIES_TOL)
}

/// `F0(a)` and `tau(a)` from their definitions.
pub fn f0_and_tau(a: f64) -> Result<(f64, f64)> {
    let f0 = g(1.0 / 6.0)? * g(a + 1.0 / 3.0)? * g(a + 2.0 / 3.0)? * sin_pi(a + 1.0 / 6.0) / (PI * 3f64.sqrt())
        * rgamma(2.0 * a + 1.0 / 6.0);
    let tau =
        big_f(a)? * 27f64.powf(a) * g(5.0 / 6.0)? * g(1.0 - 3.0 * a)? * rgamma(5.0 / 6.0 - 2.0 * a) * rgamma(1.0 - a);
    Ok((f0, tau))
}

/// The periodic comparison function `tau~(a)`.
pub fn tau_tilde(a: f64) -> Result<f64> {
    let den = 2.0 * sin_pi(a - 1.0 / 3.0) * sin_pi(a - 2.0 / 3.0);
    guard_zero(den)?;
    Ok(-sin_pi(a - 5.0 / 6.0) * sin_pi(2.0 * a - 5.0 / 6.0) / den)
}

/// `F(a) / (tau~(a) Gamma(5/6-2a) Gamma(1-a) / (3^{3a} Gamma(5/6) Gamma(1-3a)))`,
/// which should be the constant `-2`.
pub fn constant_ratio(a: f64) -> Result<f64> {
    let tt = tau_tilde(a)?;
    guard_zero(tt)?;
    let scale = g(5.0 / 6.0 - 2.0 * a)? * g(1.0 - a)? / (27f64.powf(a) * g(5.0 / 6.0)?) * rgamma(1.0 - 3.0 * a);
    guard_zero(scale)?;
    Ok(big_f(a)? / (tt * scale))
}

/// Aggregate verdict for one identity over many points.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub test_points: Vec<String>,
    pub max_rel_err: f64,
    pub exact_passes: usize,
    pub exact_total: usize,
    pub tolerance: f64,
    pub verdict: bool,
    pub checks: Vec<PointCheck>,
    /// Points rejected by evaluation errors, with the reason.
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn from_checks(identity_id: String, tolerance: f64, checks: Vec<PointCheck>, failures: Vec<String>) -> Self {
        let exact: Vec<&PointCheck> = checks.iter().filter(|c| c.exact.is_some()).collect();
        let exact_passes = exact.iter().filter(|c| c.exact == Some(true)).count();
        let exact_total = exact.len();
        let max_rel_err = checks.iter().filter(|c| c.exact.is_none()).map(|c| c.rel_err).fold(0.0, f64::max);
        let verdict = failures.is_empty() && exact_passes == exact_total && max_rel_err <= tolerance;
        IdentityReport {
            identity_id,
            test_points: checks.iter().map(|c| c.point.clone()).collect(),
            max_rel_err,
            exact_passes,
            exact_total,
            tolerance,
            verdict,
            checks,
            failures,
        }
    }
}

/// Draws points until `count` of them evaluate without a pole error.
fn random_points<R: Rng>(
    rng: &mut R,
    count: usize,
    mut draw: impl FnMut(&mut R) -> Result<PointCheck>,
) -> Vec<PointCheck> {
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count {
        attempts += 1;
        match draw(rng) {
            Ok(c) => out.push(c),
            Err(Error::PoleProximity(_)) | Err(Error::GammaPole(_)) | Err(Error::LowerParameterPole { .. }) => {}
            Err(_) => {}
        }
    }
    out
}

/// Exact points `a = -n/2` (`n <= n_exact`) plus `n_random` points in `(-3, 1/4)`.
pub fn sweep_2f1<R: Rng>(id: Id2F1, rng: &mut R, n_exact: usize, n_random: usize) -> IdentityReport {
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    for n in 0..=n_exact {
        match verify_2f1_exact(id, n) {
            Ok(c) => checks.push(c),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    checks.extend(random_points(rng, n_random, |r| verify_2f1_value(id, r.gen_range(-3.0..0.25))));
    IdentityReport::from_checks(format!("2F1/{id}"), TOL_2F1, checks, failures)
}

/// Range for random single-parameter `3F2` points.
pub const RANGE_3F2: (f64, f64) = (-1.5, 2.5);

/// Exact points `a = -n` (`n <= n_exact`) plus `n_random` points in [`RANGE_3F2`].
pub fn sweep_3f2<R: Rng>(id: Id3F2, rng: &mut R, n_exact: usize, n_random: usize) -> IdentityReport {
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    for n in 0..=n_exact {
        match verify_3f2_exact(id, n) {
            Ok(c) => checks.push(c),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    let (lo, hi) = RANGE_3F2;
    checks.extend(random_points(rng, n_random, |r| verify_3f2_value(id, r.gen_range(lo..hi))));
    IdentityReport::from_checks(format!("3F2/{id}"), TOL_3F2, checks, failures)
}

/// Second parameters used at the terminating two-parameter points.
const B_VALUES: [(i64, i64); 3] = [(1, 7), (2, 5), (5, 3)];

/// Terminating points (`1/2-3a = -n` or `1-3a = -n`, `n <= n_exact`)
/// plus `n_random` random `(a, b)`.
pub fn sweep_two_param<R: Rng>(id: TwoParam, rng: &mut R, n_exact: usize, n_random: usize) -> IdentityReport {
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    for n in 0..=n_exact {
        let a = match id {
            TwoParam::CosCase => rat(2 * n as i64 + 1, 6),
            TwoParam::SinCase => rat(n as i64 + 1, 3),
        };
        let (bp, bq) = B_VALUES[n % B_VALUES.len()];
        match verify_two_param_terminating(id, &a, &rat(bp, bq)) {
            Ok(c) => checks.push(c),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    checks.extend(random_points(rng, n_random, |r| {
        let a = r.gen_range(-1.0..1.0);
        let b = r.gen_range(0.05..2.0);
        verify_3f2_two_param(id, a, b)
    }));
    IdentityReport::from_checks(format!("3F2/{id}"), TOL_3F2, checks, failures)
}

/// The constant `-2` at `count` random points of [`RANGE_3F2`].
pub fn sweep_constant<R: Rng>(rng: &mut R, count: usize) -> IdentityReport {
    let (lo, hi) = RANGE_3F2;
    let checks = random_points(rng, count, |r| {
        let a: f64 = r.gen_range(lo..hi);
        let v = constant_ratio(a)?;
        Ok(PointCheck::float("tau/tau~".into(), format!("a={a}"), v, -2.0))
    });
    IdentityReport::from_checks("3F2/constant".into(), TOL_3F2, checks, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn listed_2f1_points() {
        let c = verify_2f1_exact(Id2F1::A, 1).unwrap();
        assert_eq!(c.exact, Some(true));
        assert_eq!(c.lhs, 1.0);
        assert_eq!(rhs_2f1_exact(Id2F1::A, 2), rat(20, 21));
        assert_eq!(verify_2f1_exact(Id2F1::A, 2).unwrap().exact, Some(true));
        assert_eq!(verify_2f1_exact(Id2F1::A, 0).unwrap().lhs, 1.0);
    }

    #[test]
    fn listed_3f2_points() {
        let c = verify_3f2_exact(Id3F2::Ta, 1).unwrap();
        assert_eq!(c.exact, Some(true));
        assert_eq!(rhs_3f2_exact(Id3F2::Ta, 1), rat(-55, 8));
        assert_eq!(verify_3f2_exact(Id3F2::Sa, 0).unwrap().lhs, 1.0);
        let t = verify_3f2_value(Id3F2::Ta, 1.0 / 6.0).unwrap();
        assert!((t.lhs - 1.0).abs() < 1e-14 && (t.rhs - 1.0).abs() < 1e-14);
    }

    #[test]
    fn two_param_examples() {
        let c = verify_3f2_two_param(TwoParam::CosCase, 0.0, 1.0 / 6.0).unwrap();
        assert!((c.lhs - 4f64.powf(1.0 / 6.0)).abs() < 1e-13);
        assert!(c.rel_err < 1e-12);
        for a in [0.13, 0.71, 1.37] {
            let two = verify_3f2_two_param(TwoParam::CosCase, a, a).unwrap();
            let one = verify_3f2_value(Id3F2::Sa, a).unwrap();
            assert!(rel_err(two.rhs, one.rhs) < 1e-12);
            assert!(rel_err(two.lhs, one.lhs) < 1e-12);
        }
        assert!(verify_3f2_two_param(TwoParam::SinCase, 0.0, 0.4).is_err());
    }

    #[test]
    fn tau_and_constant_values() {
        let (f0, _) = f0_and_tau(1.0 / 6.0).unwrap();
        assert!((f0 - 1.0).abs() < 1e-13);
        let (f0, tau) = f0_and_tau(5.0 / 6.0).unwrap();
        assert!(f0.abs() < 1e-14);
        assert!(tau.abs() < 1e-10);
        assert!((constant_ratio(0.2).unwrap() + 2.0).abs() < 1e-9);
    }

    #[test]
    fn sweeps_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for id in Id2F1::ALL {
            let r = sweep_2f1(id, &mut rng, 20, 50);
            assert!(r.verdict, "{id}: {:?} {:?}", r.max_rel_err, r.failures);
            assert_eq!(r.checks.len(), 71);
        }
        for id in Id3F2::ALL {
            let r = sweep_3f2(id, &mut rng, 12, 50);
            assert!(
                r.verdict,
                "{id}: {} {:?}",
                r.max_rel_err,
                r.checks.iter().filter(|c| !c.passes(TOL_3F2)).collect::<Vec<_>>()
            );
        }
        for id in TwoParam::ALL {
            let r = sweep_two_param(id, &mut rng, 12, 50);
            assert!(
                r.verdict,
                "{id}: {} {:?}",
                r.max_rel_err,
                r.checks.iter().filter(|c| !c.passes(TOL_3F2)).collect::<Vec<_>>()
            );
        }
        let r = sweep_constant(&mut rng, 20);
        assert!(r.verdict, "{}", r.max_rel_err);
        assert_eq!(r.checks.len(), 20);
    }
}
