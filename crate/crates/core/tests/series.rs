use std::f64::consts::{PI, SQRT_2, TAU};

use zagier_core::series::*;
use zagier_core::specfun::{bessel_y_int, hurwitz_zeta, BesselConfig};
use zagier_core::Error;

const L4: f64 = 2.0 * TAU;

fn cfg() -> SeriesConfig {
    SeriesConfig::with_tol(1e-10)
}

#[test]
fn half_power_sums_split_and_symmetry() {
    for x in [0.05, 0.1, 0.25, 0.3, 0.5, 0.61, 0.9] {
        let t = trig_power_sums(x).unwrap();
        let z = hurwitz_zeta(0.5, x).unwrap().value;
        assert!((t.cos_sum_half + t.sin_sum_half - z).abs() < 1e-10, "x = {x}");
        // shifted Hurwitz argument: zeta(1/2, x) = zeta(1/2, x + 1) + x^{-1/2}
        let ladder = hurwitz_zeta(0.5, x + 1.0).unwrap().value + x.powf(-0.5);
        assert!((t.cos_sum_half + t.sin_sum_half - ladder).abs() < 1e-10);
        let r = trig_power_sums(1.0 - x).unwrap();
        assert!((t.cos_sum_half - r.cos_sum_half).abs() < 1e-12);
        assert!((t.sin_sum_half + r.sin_sum_half).abs() < 1e-12);
        assert_eq!(t.higher.keys().copied().collect::<Vec<_>>(), vec![3, 5, 7]);
    }
    assert!(trig_power_sums(0.5).unwrap().sin_sum_half.abs() < 1e-14);
    assert!(trig_power_sums(0.0).is_err());
    assert!(trig_power_sums(1.0).is_err());
}

#[test]
fn higher_power_sums_match_direct_summation() {
    // absolutely convergent; the direct tail past 4e5 terms is below 1e-8 for s >= 5/2
    for x in [0.1, 0.37, 0.5, 0.8] {
        let t = trig_power_sums(x).unwrap();
        for k in [5u32, 7] {
            let s = k as f64 / 2.0;
            let (mut c, mut si) = (0.0, 0.0);
            for m in (1..=400_000usize).rev() {
                let w = (m as f64).powf(-s);
                c += (TAU * m as f64 * x).cos() * w;
                si += (TAU * m as f64 * x).sin() * w;
            }
            let (gc, gs) = t.higher[&k];
            assert!((gc - c).abs() < 1e-8, "C_{s}({x}) {gc} vs {c}");
            assert!((gs - si).abs() < 1e-8, "S_{s}({x}) {gs} vs {si}");
        }
        let s = 1.5;
        let direct: f64 = (1..=1_000_000usize).map(|m| (TAU * m as f64 * x).cos() * (m as f64).powf(-s)).sum();
        // tail of the cosine sum at 3/2 oscillates, bounded by M^{-3/2}/sin(pi x)
        assert!((t.higher[&3].0 - direct).abs() < 1e-7);
        assert!((cos_power_sum(1.5, x).unwrap() - t.higher[&3].0).abs() < 1e-15);
        assert!((sin_power_sum(2.5, x).unwrap() - t.higher[&5].1).abs() < 1e-15);
    }
    assert!(cos_power_sum(2.0, 0.3).is_err());
}

#[test]
fn algebraic_form_of_sine_half_sum() {
    for x in [0.1, 0.3, 0.5, 0.7, 0.95] {
        let rhs = series_007_rhs(x, 1e-13).unwrap();
        let s = sin_power_sum(0.5, x).unwrap();
        assert!((rhs - s).abs() < 1e-10, "x = {x}: {rhs} vs {s}");
    }
    // brute force of the algebraic sum at x = 0.3 with an integral tail
    let x: f64 = 0.3;
    let big_m = 200_000usize;
    let f = |m: f64| 1.0 / ((m + (m * m - x * x).sqrt()).sqrt() * (m * m - x * x).sqrt());
    let head: f64 = (1..=big_m).rev().map(|m| f(m as f64)).sum();
    // f(m) ~ (2m)^{-1/2} m^{-1}
    let tail = SQRT_2 / (big_m as f64).sqrt() - 0.5 * f(big_m as f64);
    let brute = 0.5 / x.sqrt() - x / SQRT_2 * (head + tail);
    assert!((brute - series_007_rhs(x, 1e-13).unwrap()).abs() < 1e-9);
}

#[test]
fn telescope_closed_form() {
    let t = telescope_sum(1e-13).unwrap();
    assert!((t.value - (SQRT_2 + 1.0) / 2.0).abs() < 1e-10, "{}", t.value);
    assert!(t.accelerated);
}

#[test]
fn g_term_domain_positivity_and_extremes() {
    for n in 1..=4usize {
        for x in [0.1f64, 0.5, 1.0] {
            let want = 2f64.powi(4 * n as i32)
                / ((2.0 + x + (x * (x + 4.0)).sqrt()).powi(2 * n as i32) * (x * (x + 4.0)).sqrt());
            let got = g_term(1.0, n as f64, x).unwrap();
            assert!((got - want).abs() <= 1e-14 * want, "n={n} x={x}");
        }
    }
    for y in [1.0, 2.0, 10.0, 1e3] {
        for r in [0.25, 0.5, 1.0, 3.5] {
            assert!(g_term(y, r, 0.3).unwrap() > 0.0);
        }
    }
    // y = 1e6: y+1+x - sqrt(.) ~ 2/y, so g ~ 4 y^{-3}
    let g = g_term(1e6, 1.0, 0.5).unwrap();
    let e: f64 = 1e6 - 0.5;
    let want = (2.0 / (e + 2.0 + (e * (e + 4.0)).sqrt())).powi(2) * 4.0 / (e * (e + 4.0)).sqrt();
    assert!((g - want).abs() <= 1e-14 * want);
    assert!((g * 0.25e18 - 1.0).abs() < 1e-5);
    assert!(g_term(0.2, 1.0, 0.1).is_err());
    assert!(g_term(2.0, 0.0, 0.1).is_err());
    assert!((hyperbolic_g(3.0, 1.0) - g_term(2.0 - 0.0, 1.0, 0.0).unwrap()).abs() < 1e-15);
}

#[test]
fn g_tail_sum_against_direct_and_combined_form() {
    for (r, x) in [(1.0, 0.5), (2.0, 0.1), (0.5, 0.9), (3.5, 1.0)] {
        let s = g_tail_sum(r, x, 1, 1e-13).unwrap();
        // direct sum: terms fall like m^{-2r-1}
        let big_m = 2_000_000usize;
        let head: f64 = (1..=big_m).rev().map(|m| g_term(m as f64, r, x).unwrap()).sum();
        // g(m, r, x) ~ 2^{2r} m^{-2r-1}
        let tail = 4f64.powf(r) / (2.0 * r * (big_m as f64).powf(2.0 * r));
        assert!((s.value - head - tail).abs() < 1e-9, "r={r} x={x}: {} vs {}", s.value, head + tail);
    }
    // at x = 1, 2^{-2n} g(m, n, 1) = ((sqrt(m+4)-sqrt(m))/2)^{4n} / sqrt(m(m+4))
    for n in 1..=3usize {
        let r = n as f64;
        let a = g_tail_sum(r, 1.0, 1, 1e-14).unwrap().value / 4f64.powi(n as i32);
        let direct: f64 = (1..=200_000usize)
            .rev()
            .map(|m| {
                let m = m as f64;
                ((m + 4.0).sqrt() - m.sqrt()).powi(4 * n as i32) / 16f64.powi(n as i32) / (m * (m + 4.0)).sqrt()
            })
            .sum();
        assert!((a - direct).abs() < 1e-10 * a.max(1.0), "n = {n}");
    }
    let s1 = g_tail_sum(1.0, 0.5, 1, 1e-12).unwrap();
    let s2 = g_tail_sum(1.0, 0.5, 1, 0.5e-12).unwrap();
    assert!((s1.value - s2.value).abs() < 2e-12);
    assert!(matches!(g_tail_sum(0.25, 0.5, 1, 1e-10), Err(Error::Domain(_))));
    assert!(g_tail_sum(1.0, 0.5, 0, 1e-10).is_err());
}

/// Cesàro (C,1) mean of `sum (-1)^n pi Y_nu(4 pi m) w(2 pi m x)` over 10^6 terms.
fn cesaro_oracle(nu: usize, weight: Weight, x: f64) -> f64 {
    let s = if (nu / 2) % 2 == 0 { 1.0 } else { -1.0 };
    cesaro_tail_mean(
        |m| {
            let y = bessel_y_int(nu, L4 * m as f64).unwrap().value;
            let t = (TAU * ((m as f64 * x) % 1.0)).sin_cos();
            let w = match weight {
                Weight::Cos => t.1,
                Weight::Sin => t.0,
            };
            s * PI * y * w
        },
        1_000_000,
        10_000,
    )
}

#[test]
fn bessel_cos_series_matches_cesaro_oracle() {
    let acc = bessel_cos_series(1, 0.5, &cfg()).unwrap();
    let oracle = cesaro_oracle(2, Weight::Cos, 0.5);
    assert!((acc.value - oracle).abs() < 1e-6, "{} vs {oracle}", acc.value);
    assert!(acc.accelerated);
    assert!(acc.terms_used <= 500);
}

#[test]
fn bessel_sin_series_matches_cesaro_oracle() {
    let acc = bessel_sin_series(1, 0.25, &cfg()).unwrap();
    let oracle = cesaro_oracle(3, Weight::Sin, 0.25);
    assert!((acc.value - oracle).abs() < 1e-6, "{} vs {oracle}", acc.value);
}

#[test]
fn parity_in_x() {
    for n in [1usize, 2, 4] {
        for x in [0.05, 0.2, 0.37] {
            let a = bessel_cos_series(n, x, &cfg()).unwrap().value;
            let b = bessel_cos_series(n, 1.0 - x, &cfg()).unwrap().value;
            assert!((a - b).abs() < 1e-10, "cos n={n} x={x}");
            let a = bessel_sin_series(n, x, &cfg()).unwrap().value;
            let b = bessel_sin_series(n, 1.0 - x, &cfg()).unwrap().value;
            assert!((a + b).abs() < 1e-10, "sin n={n} x={x}");
        }
    }
    for n in 0..4 {
        assert_eq!(bessel_sin_series(n, 0.5, &cfg()).unwrap().value, 0.0);
    }
}

#[test]
fn doubling_terms_stays_within_tolerance() {
    let bc = BesselConfig::default();
    for (nu, w, x) in [(2usize, Weight::Cos, 0.5), (4, Weight::Cos, 0.1), (3, Weight::Sin, 0.3), (7, Weight::Sin, 0.8)] {
        let c = SeriesConfig::with_tol(1e-9);
        let r = regularized_sum(nu, L4, w, x, &c).unwrap();
        let m = r.terms_used;
        let (v2, b2) = regularized_sum_fixed(nu, L4, w, x, 2 * m, 12, &bc).unwrap();
        assert!((r.value - v2).abs() < 2.0 * c.tol, "nu={nu} x={x}: {} vs {v2}", r.value);
        assert!(b2 <= r.tail_bound.max(c.tol));
    }
}

#[test]
fn regularized_bracket_decay() {
    let bc = BesselConfig::default();
    for n in 1..=4usize {
        let k = |hi: usize| {
            (1..=hi)
                .map(|m| regularized_term(2 * n, L4, m, &bc).abs() * (m as f64).powf(1.5))
                .fold(0.0, f64::max)
        };
        let k1 = k(5_000);
        let k2 = k(10_000);
        assert!(k1.is_finite() && k1 > 0.0);
        assert!((k2 - k1).abs() <= 1e-3 * k1, "n = {n}: {k1} vs {k2}");
        // the leading tail coefficient controls the large-m behaviour
        let c1 = tail_coefficients(2 * n, L4, 1)[0];
        let m = 10_000usize;
        let scaled = regularized_term(2 * n, L4, m, &bc) * (m as f64).powf(1.5);
        assert!((scaled - c1).abs() < 1e-2 * c1.abs().max(1e-3), "n = {n}");
    }
}

#[test]
fn accelerated_overlaps_plain_partial_sums() {
    let bc = BesselConfig::default();
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..20 {
        let n = 1 + (next() * 5.0) as usize;
        let x = 0.02 + 0.96 * next();
        let acc = bessel_cos_series(n, x, &cfg()).unwrap();
        // regularized partial sum; its tail is bounded by K sum_{m>M} m^{-3/2} < 2K/sqrt(M)
        let big_m = 4_000usize;
        let terms: Vec<f64> = (1..=big_m).map(|m| regularized_term(2 * n, L4, m, &bc)).collect();
        let k = terms.iter().enumerate().map(|(i, t)| t.abs() * ((i + 1) as f64).powf(1.5)).fold(0.0, f64::max);
        let head: f64 = terms.iter().enumerate().map(|(i, t)| t * (TAU * (((i + 1) as f64 * x) % 1.0)).cos()).sum();
        let plain = head - 0.5 * cos_power_sum(0.5, x).unwrap();
        let bound = 2.0 * k / (big_m as f64).sqrt() + acc.tail_bound + 1e-12;
        assert!((plain - acc.value).abs() <= bound, "n={n} x={x}: {plain} vs {}", acc.value);
        let _ = naive_partial_sum(2 * n, L4, Weight::Cos, x, 10, &bc);
    }
}

#[test]
fn naive_partial_sum_is_plain_bessel_sum() {
    let bc = BesselConfig::default();
    let direct: f64 = (1..=50usize)
        .map(|m| -PI * bessel_y_int(2, L4 * m as f64).unwrap().value * (TAU * ((m as f64 * 0.3) % 1.0)).cos())
        .sum();
    let got = naive_partial_sum(2, L4, Weight::Cos, 0.3, 50, &bc);
    assert!((got - direct).abs() < 1e-13);
}

#[test]
fn non_convergence_reports_best_value() {
    let c = SeriesConfig { max_terms: 10, ..SeriesConfig::default() };
    match bessel_cos_series(3, 0.3, &c) {
        Err(Error::NonConvergence { best, terms, .. }) => {
            assert_eq!(terms, 10);
            let good = bessel_cos_series(3, 0.3, &cfg()).unwrap().value;
            assert!((best - good).abs() < 1e-4, "{best} vs {good}");
        }
        other => panic!("expected non-convergence, got {other:?}"),
    }
}

#[test]
fn window_is_enforced() {
    for x in [0.0, 0.005, 0.995, 1.0, f64::NAN] {
        assert!(matches!(bessel_cos_series(1, x, &cfg()), Err(Error::OutsideWindow { .. })), "x = {x}");
        assert!(matches!(bessel_sin_series(1, x, &cfg()), Err(Error::OutsideWindow { .. })));
    }
    let wide = SeriesConfig { window: (1e-4, 1.0 - 1e-4), ..cfg() };
    assert!(bessel_cos_series(1, 0.005, &wide).is_ok());
    assert!(bessel_cos_series(0, 0.5, &cfg()).is_err());
}

#[test]
fn results_are_identical_across_thread_counts() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                (
                    bessel_cos_series(2, 0.3, &cfg()).unwrap().value,
                    bessel_sin_series(1, 0.7, &cfg()).unwrap().value,
                    naive_partial_sum(4, L4, Weight::Cos, 0.1, 3000, &BesselConfig::default()),
                )
            })
    };
    let one = run(1);
    for t in [2, 3, 8] {
        let other = run(t);
        assert_eq!(one.0.to_bits(), other.0.to_bits());
        assert_eq!(one.1.to_bits(), other.1.to_bits());
        assert_eq!(one.2.to_bits(), other.2.to_bits());
    }
}
