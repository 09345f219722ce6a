use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use zagier_core::exact::*;
use zagier_core::formulas::Point;
use zagier_core::series::{bessel_cos_series, bessel_sin_series, g_term, trig_power_sums, SeriesConfig};
use zagier_core::specfun::hurwitz_zeta;
use zagier_core::sum::{compensated_sum, ordered_parallel_sum};

fn rational() -> impl Strategy<Value = BigRational> {
    (-200i64..200, 1i64..50).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection(n in 1usize..=20, x in rational()) {
        let lhs = zagier_eval(n, &(-&x - ratio(3, 1)));
        let rhs = zagier_eval(n, &x);
        prop_assert_eq!(lhs, if n % 2 == 0 { rhs } else { -rhs });
    }

    #[test]
    fn shift_is_exact(n in 1usize..=15, x in rational(), k in -5i64..=5) {
        prop_assert_eq!(zagier_shift(n, &x, k), zagier_eval(n, &(&x + ratio(k, 1))));
    }

    #[test]
    fn eval_matches_polynomial(n in 1usize..=25, x in rational()) {
        prop_assert_eq!(zagier_eval(n, &x), zagier_polynomial(n).eval(&x));
    }

    #[test]
    fn bernoulli_polynomial_difference(n in 1usize..=30, x in rational()) {
        // B_n(x + 1) - B_n(x) = n x^{n-1}
        let p = bernoulli_polynomial(n);
        let d = p.eval(&(&x + ratio(1, 1))) - p.eval(&x);
        let mut pow = ratio(1, 1);
        for _ in 1..n {
            pow *= &x;
        }
        prop_assert_eq!(d, pow * ratio(n as i64, 1));
    }

    #[test]
    fn chebyshev_recurrence(n in 1usize..=40, x in rational()) {
        let two_x = &x * ratio(2, 1);
        let u = chebyshev_u(n + 1).eval(&x);
        prop_assert_eq!(u, &two_x * chebyshev_u(n).eval(&x) - chebyshev_u(n - 1).eval(&x));
        let t = chebyshev_t(n + 1).eval(&x);
        prop_assert_eq!(t, &two_x * chebyshev_t(n).eval(&x) - chebyshev_t(n - 1).eval(&x));
    }

    #[test]
    fn jacobi_multiplicative(a in -500i64..500, b in -500i64..500, k in 0i64..200) {
        let n = 2 * k + 1;
        let ja = jacobi_symbol(a, n).unwrap();
        let jb = jacobi_symbol(b, n).unwrap();
        prop_assert_eq!(jacobi_symbol(a * b, n).unwrap(), ja * jb);
        prop_assert_eq!(jacobi_symbol(a + n, n).unwrap(), ja);
    }

    #[test]
    fn odd_closed_form_matches(k in 0u64..40) {
        prop_assert_eq!(odd_modified_closed_form(k), modified_bernoulli(2 * k as usize + 1));
    }

    #[test]
    fn point_display_roundtrip(x in rational()) {
        let p = Point::Rational(x.clone());
        let back: Point = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn trig_sums_split(x in 0.01f64..0.99) {
        let t = trig_power_sums(x).unwrap();
        let z = hurwitz_zeta(0.5, x).unwrap().value;
        prop_assert!((t.cos_sum_half + t.sin_sum_half - z).abs() < 1e-10);
        let r = trig_power_sums(1.0 - x).unwrap();
        prop_assert!((t.cos_sum_half - r.cos_sum_half).abs() < 1e-10);
        prop_assert!((t.sin_sum_half + r.sin_sum_half).abs() < 1e-10);
        for (k, (c, s)) in &t.higher {
            let (rc, rs) = r.higher[k];
            prop_assert!((c - rc).abs() < 1e-12 && (s + rs).abs() < 1e-12);
        }
    }

    #[test]
    fn g_term_positive_and_decreasing(y in 1.0f64..1e4, r in 0.25f64..6.0, x in 0.0f64..1.0) {
        let a = g_term(y, r, x).unwrap();
        let b = g_term(y + 1.0, r, x).unwrap();
        prop_assert!(a > 0.0 && b > 0.0 && b < a);
    }

    #[test]
    fn parallel_sum_matches_sequential(lo in 0usize..100, len in 0usize..5000, seed in 1u64..1000) {
        let f = |i: usize| ((i as f64 * 0.37 + seed as f64).sin() / (1.0 + i as f64)).powi(3);
        let seq: Vec<f64> = (lo..lo + len).map(f).collect();
        let par = ordered_parallel_sum(lo, lo + len, f);
        prop_assert!((par - compensated_sum(&seq)).abs() <= 1e-15 * (1.0 + seq.iter().map(|v| v.abs()).sum::<f64>()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn bessel_series_parity(n in 1usize..=5, x in 0.01f64..0.49) {
        let cfg = SeriesConfig::with_tol(1e-10);
        let a = bessel_cos_series(n, x, &cfg).unwrap().value;
        let b = bessel_cos_series(n, 1.0 - x, &cfg).unwrap().value;
        prop_assert!((a - b).abs() < 1e-9);
        let a = bessel_sin_series(n, x, &cfg).unwrap().value;
        let b = bessel_sin_series(n, 1.0 - x, &cfg).unwrap().value;
        prop_assert!((a + b).abs() < 1e-9);
    }
}
