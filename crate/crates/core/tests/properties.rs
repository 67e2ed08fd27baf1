use airy_deriv::airy_numeric::{lambda_closed_conditioning, lambda_tail};
use airy_deriv::airy_pq::{pq_recurrence, reduce};
use airy_deriv::family::Family;
use airy_deriv::hyper::{gamma, pfq_exact, pfq_numeric, HyperSpec};
use airy_deriv::ratcore::{int, poch, rat, series_reciprocal_power, sturm_count, to_f64, Poly, Rational, Series};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..8).prop_map(|(p, q)| rat(p, q))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..max_len).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_product_rule(a in poly(6), b in poly(6)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_reconstructs(a in poly(7), b in poly(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn reciprocal_power_inverts(tail in poly(4), m in 0usize..3) {
        // p(0) = 1 so the reciprocal series exists.
        let p = &Poly::one() + &tail.shift(1);
        let order = 8;
        let inv = series_reciprocal_power(&p, m, order).unwrap();
        let mut pow = Series::from_poly(&Poly::one(), order);
        for _ in 0..=m {
            pow = pow.mul(&Series::from_poly(&p, order));
        }
        let prod = pow.mul(&inv);
        for k in 0..=order {
            let want = if k == 0 { Rational::one() } else { Rational::zero() };
            prop_assert_eq!(prod.coeff(k), want);
        }
    }

    #[test]
    fn sturm_counts_distinct_linear_factors(roots in prop::collection::btree_set(-20i64..20, 1..6)) {
        let mut p = Poly::one();
        for &r in &roots {
            p = &p * &Poly::from_ints(&[-r, 1]);
        }
        let squared = &p * &p;
        let c = sturm_count(&squared).unwrap();
        prop_assert_eq!(c.real, roots.len());
        prop_assert_eq!(c.negative, roots.iter().filter(|&&r| r < 0).count());
        prop_assert!(!c.all_simple);
        prop_assert!(sturm_count(&p).unwrap().all_simple);
    }

    #[test]
    fn pochhammer_splits(a in small_rat(), j in 0usize..6, k in 0usize..6) {
        let lhs = poch(&a, j + k);
        let rhs = poch(&a, j) * poch(&(&a + int(j as i64)), k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn terminating_series_exact_vs_float(m in 0i64..8, b in small_rat(), c in 1i64..6, zp in -12i64..12, zq in 4i64..8) {
        let spec = HyperSpec::new(vec![int(-m), b.clone()], vec![rat(2 * c + 1, 2)], rat(zp, zq));
        let z = rat(zp, zq);
        let exact = to_f64(&pfq_exact(&spec).unwrap());
        let fspec = HyperSpec::new(vec![-(m as f64), to_f64(&b)], vec![c as f64 + 0.5], to_f64(&z));
        let approx = pfq_numeric(&fspec, 1e-16).unwrap();
        let scale = exact.abs().max(1.0) * 10f64.powi(m as i32);
        prop_assert!((exact - approx).abs() <= 1e-11 * scale, "{} vs {}", exact, approx);
    }

    #[test]
    fn gamma_functional_equation(x in -6.5f64..9.0) {
        prop_assume!((x - x.round()).abs() > 1e-3);
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn lambda_closed_matches_series(n in 0usize..5, big_n in 0usize..10, t in 0.05f64..0.95) {
        let (closed, series) = lambda_tail(n, big_n, t).unwrap();
        let bound = 1e-10f64.max(64.0 * lambda_closed_conditioning(n, big_n, t, series));
        prop_assert!((closed - series).abs() <= bound * series.abs(), "{} vs {}", closed, series);
        prop_assert!(series > 0.0);
    }

    #[test]
    fn evaluation_agrees_with_float(n in 0usize..30, x in -3.0f64..3.0) {
        let e = &pq_recurrence(n)[n];
        let xr = Rational::from_float(x).unwrap();
        let exact = to_f64(&e.p.eval(&xr));
        let scale: f64 = e.p.coeffs().iter().enumerate().map(|(k, c)| to_f64(c).abs() * x.abs().powi(k as i32)).sum();
        prop_assert!((exact - e.p.eval_f64(x)).abs() <= 1e-13 * scale.max(1.0));
    }
}

#[test]
fn reduced_p_has_negative_simple_roots_up_to_thirty() {
    let pq = pq_recurrence(30);
    for (n, e) in pq.iter().enumerate() {
        if e.p.is_zero() {
            continue;
        }
        let r = reduce(Family::P, n, &e.p).unwrap();
        let d = r.degree().unwrap();
        if d == 0 {
            continue;
        }
        let c = sturm_count(&r).unwrap();
        assert_eq!((c.real, c.negative, c.all_simple), (d, d, true), "n={n}");
    }
}
