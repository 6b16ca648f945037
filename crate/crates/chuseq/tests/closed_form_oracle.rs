//! Cross-checks of the closed-form magnitude law and the gcd-term evaluator
//! against brute-force correlation, plus the numeric identities the closed
//! forms rest on. Wider sweeps of the same checks run in the acceptance
//! suite; these stay small enough for quick iteration.

use num_complex::Complex64;
use proptest::prelude::*;

use chuseq::numtheory::{gcd, unit_group};
use chuseq::sequence::{
    cross_correlation, cross_correlation_all_lags, cross_correlation_all_lags_fft, ChuSequence,
};
use chuseq::xcorr::{gcd_exponential_sum, magnitude_squared_gcd_sum, CrossCorrProfile};

#[test]
fn closed_form_matches_bruteforce_all_pairs() {
    for n in 2..=60u64 {
        let units = unit_group(n).unwrap();
        let seqs: Vec<ChuSequence> = units
            .members()
            .iter()
            .map(|&r| ChuSequence::new(n, r).unwrap())
            .collect();
        for a in &seqs {
            for b in &seqs {
                let profile = CrossCorrProfile::new(n, a.root(), b.root()).unwrap();
                let vector = cross_correlation_all_lags(a, b).unwrap();
                for (tau, value) in vector.values().iter().enumerate() {
                    let predicted = profile.magnitude_at(tau as i64);
                    assert!(
                        (value.norm() - predicted).abs() <= 1e-6 * n as f64,
                        "N={n} r={} s={} tau={tau}: brute {} vs closed {predicted}",
                        a.root(),
                        b.root(),
                        value.norm()
                    );
                }
            }
        }
    }
}

#[test]
fn gcd_sum_matches_bruteforce_squared() {
    for n in 2..=40u64 {
        let units = unit_group(n).unwrap();
        for &r in units.members() {
            for &s in units.members() {
                let a = ChuSequence::new(n, r).unwrap();
                let b = ChuSequence::new(n, s).unwrap();
                let vector = cross_correlation_all_lags(&a, &b).unwrap();
                for tau in 0..n as i64 {
                    let brute_sq = vector.value(tau).norm_sqr();
                    let alt = magnitude_squared_gcd_sum(n, r, s, tau).unwrap();
                    assert!(
                        (alt - brute_sq).abs() <= 1e-6 * (n * n) as f64,
                        "N={n} r={r} s={s} tau={tau}: gcd-sum {alt} vs brute {brute_sq}"
                    );
                    let residue = gcd_exponential_sum(n, r, s, tau, false).unwrap().im;
                    assert!(residue.abs() <= 1e-9 * (n * n) as f64);
                }
            }
        }
    }
}

#[test]
fn peak_count_and_location_law() {
    for n in 2..=60u64 {
        let units = unit_group(n).unwrap();
        for &r in units.members() {
            for &s in units.members() {
                let profile = CrossCorrProfile::new(n, r, s).unwrap();
                let a = ChuSequence::new(n, r).unwrap();
                let b = ChuSequence::new(n, s).unwrap();
                let vector = cross_correlation_all_lags(&a, &b).unwrap();
                let threshold = profile.peak_magnitude() / 2.0;
                let observed: Vec<u64> = (0..n)
                    .filter(|&tau| vector.values()[tau as usize].norm() > threshold)
                    .collect();
                assert_eq!(observed, profile.peak_lags(), "N={n} r={r} s={s}");
                assert_eq!(observed.len() as u64, profile.cofactor());
            }
        }
    }
}

#[test]
fn root_of_unity_sums_vanish() {
    // sum_{k<h} exp(j*2*pi*u*v*k/h) = 0 whenever the phasor is not 1
    for h in 1..=64u64 {
        for u in 1..h {
            if gcd(u as i64, h as i64) != 1 {
                continue;
            }
            for v in 1..h {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..h {
                    let angle =
                        2.0 * std::f64::consts::PI * ((u * v * k) % h) as f64 / h as f64;
                    acc += Complex64::new(angle.cos(), angle.sin());
                }
                assert!(acc.norm() < 1e-9 * h as f64, "h={h} u={u} v={v}");
            }
        }
    }
}

#[test]
fn fft_and_direct_agree_over_family() {
    for n in [16u64, 45, 64, 100, 143] {
        let units = unit_group(n).unwrap();
        let r = units.members()[0];
        let s = *units.members().last().unwrap();
        let a = ChuSequence::new(n, r).unwrap();
        let b = ChuSequence::new(n, s).unwrap();
        let direct = cross_correlation_all_lags(&a, &b).unwrap();
        let fast = cross_correlation_all_lags_fft(&a, &b).unwrap();
        for tau in 0..n as usize {
            assert!((direct.values()[tau] - fast.values()[tau]).norm() <= 1e-9 * n as f64);
        }
    }
}

fn length_and_root_pair() -> impl Strategy<Value = (u64, u64, u64)> {
    (2u64..=60).prop_flat_map(|n| {
        let units = unit_group(n).unwrap().members().to_vec();
        let count = units.len();
        (Just(n), 0..count, 0..count)
            .prop_map(move |(n, i, j)| (n, units[i], units[j]))
    })
}

proptest! {
    #[test]
    fn samples_have_unit_modulus((n, r, _s) in length_and_root_pair()) {
        let seq = ChuSequence::new(n, r).unwrap();
        for z in seq.samples() {
            prop_assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn energy_identity((n, r, s) in length_and_root_pair()) {
        let a = ChuSequence::new(n, r).unwrap();
        let b = ChuSequence::new(n, s).unwrap();
        let v = cross_correlation_all_lags(&a, &b).unwrap();
        let expect = (n * n) as f64;
        prop_assert!((v.energy() - expect).abs() <= 1e-6 * expect);
    }

    #[test]
    fn conjugate_symmetry((n, r, s) in length_and_root_pair(), lag in 0i64..60) {
        let lag = lag % n as i64;
        let a = ChuSequence::new(n, r).unwrap();
        let b = ChuSequence::new(n, s).unwrap();
        let forward = cross_correlation(&a, &b, lag).unwrap();
        let reverse = cross_correlation(&b, &a, -lag).unwrap();
        prop_assert!((forward - reverse.conj()).norm() <= 1e-9 * n as f64);
    }

    #[test]
    fn squared_magnitude_rounds_to_lattice((n, r, s) in length_and_root_pair(), lag in 0i64..60) {
        let lag = lag % n as i64;
        let a = ChuSequence::new(n, r).unwrap();
        let b = ChuSequence::new(n, s).unwrap();
        let profile = CrossCorrProfile::new(n, r, s).unwrap();
        let sq = cross_correlation(&a, &b, lag).unwrap().norm_sqr();
        let rounded = sq.round() as u64;
        prop_assert!(rounded == 0 || rounded == profile.peak_magnitude_sq());
    }

    #[test]
    fn gcd_sum_sign_choice_is_immaterial((n, r, s) in length_and_root_pair(), lag in 0i64..60) {
        let lag = lag % n as i64;
        let plus = gcd_exponential_sum(n, r, s, lag, true).unwrap();
        let minus = gcd_exponential_sum(n, r, s, lag, false).unwrap();
        prop_assert!((plus - minus).norm() <= 1e-9 * (n * n) as f64);
    }
}
