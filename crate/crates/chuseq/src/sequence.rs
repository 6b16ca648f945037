//! Chu sequence generation with exact integer phase bookkeeping, and periodic
//! auto/cross-correlation by direct summation — the ground-truth oracle that
//! every closed form in this crate is checked against.
//!
//! Phases are kept as integer exponents e_k in [0, 2N) with the k-th sample
//! being exp(j pi e_k / N). All phase arithmetic (generation and per-term
//! phase differences in correlations) happens on integers mod 2N, so there is
//! no accumulated trigonometric drift: each complex exponential is evaluated
//! exactly once from a reduced integer argument.

use std::f64::consts::PI;
use std::io::{self, Write};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::numtheory::gcd;
use crate::{Error, Result};

/// A Chu sequence of length `n` with root `r` coprime to `n`.
///
/// The stored phase exponents are `r*k^2 mod 2n` for even `n` and
/// `r*k*(k+1) mod 2n` for odd `n`; sample `k` is `exp(j*pi*e_k/n)`. Indices
/// are periodic mod `n`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChuSequence {
    n: u64,
    root: u64,
    phase: Vec<u64>,
}

impl ChuSequence {
    /// Builds the sequence, validating that `n >= 2` and `root` is a unit.
    pub fn new(n: u64, root: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::LengthTooSmall(n));
        }
        if root == 0 || root >= n {
            return Err(Error::RootOutOfRange { root, n });
        }
        if gcd(root as i64, n as i64) != 1 {
            return Err(Error::RootNotCoprime { root, n });
        }
        let two_n = 2 * n as u128;
        let r = root as u128;
        let even = n % 2 == 0;
        let phase = (0..n)
            .map(|k| {
                let k = k as u128;
                let q = if even { k * k } else { k * (k + 1) } % two_n;
                ((r * q) % two_n) as u64
            })
            .collect();
        Ok(Self { n, root, phase })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn len(&self) -> usize {
        self.phase.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phase.is_empty()
    }

    /// Integer phase exponents e_k in [0, 2n).
    pub fn phase_exponents(&self) -> &[u64] {
        &self.phase
    }

    /// Sample at index `k`, extended periodically for any integer `k`.
    pub fn sample(&self, k: i64) -> Complex64 {
        let idx = k.rem_euclid(self.n as i64) as usize;
        unit_phasor(self.phase[idx], self.n)
    }

    /// One period of complex samples.
    pub fn samples(&self) -> Vec<Complex64> {
        self.phase.iter().map(|&e| unit_phasor(e, self.n)).collect()
    }

    /// Writes the sequence as CSV with header `k,re,im` and 12-digit samples.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "k,re,im")?;
        for (k, &e) in self.phase.iter().enumerate() {
            let z = unit_phasor(e, self.n);
            writeln!(w, "{k},{},{}", fmt_sample(z.re), fmt_sample(z.im))?;
        }
        Ok(())
    }
}

/// exp(j*pi*e/n) for an integer exponent e in [0, 2n). Quarter turns come out
/// exact so that samples and CSV exports are bit-stable at the axes.
fn unit_phasor(e: u64, n: u64) -> Complex64 {
    if e == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if e == n {
        return Complex64::new(-1.0, 0.0);
    }
    if 2 * (e as u128) == n as u128 {
        return Complex64::new(0.0, 1.0);
    }
    if 2 * (e as u128) == 3 * n as u128 {
        return Complex64::new(0.0, -1.0);
    }
    let angle = PI * e as f64 / n as f64;
    Complex64::new(angle.cos(), angle.sin())
}

fn fmt_sample(x: f64) -> String {
    let s = format!("{x:.12}");
    if s == "-0.000000000000" {
        "0.000000000000".to_owned()
    } else {
        s
    }
}

/// All 2n phasors exp(j*pi*e/n); correlations index into this table so each
/// term costs one lookup and one add.
fn phasor_table(n: u64) -> Vec<Complex64> {
    (0..2 * n).map(|e| unit_phasor(e, n)).collect()
}

fn xcorr_at(a: &ChuSequence, b: &ChuSequence, tau: u64, table: &[Complex64]) -> Complex64 {
    let n = a.phase.len();
    let two_n = 2 * a.n;
    let t = tau as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let mut j = k + t;
        if j >= n {
            j -= n;
        }
        let (ea, eb) = (a.phase[k], b.phase[j]);
        let e = if ea >= eb { ea - eb } else { ea + two_n - eb };
        acc += table[e as usize];
    }
    acc
}

fn check_lengths(a: &ChuSequence, b: &ChuSequence) -> Result<()> {
    if a.n != b.n {
        return Err(Error::LengthMismatch(a.n, b.n));
    }
    Ok(())
}

fn normalize_lag(lag: i64, n: u64) -> u64 {
    lag.rem_euclid(n as i64) as u64
}

/// Periodic autocorrelation of `seq` at `lag` (any integer lag, reduced mod n).
pub fn autocorrelation(seq: &ChuSequence, lag: i64) -> Complex64 {
    let tau = normalize_lag(lag, seq.n);
    xcorr_at(seq, seq, tau, &phasor_table(seq.n))
}

/// Periodic cross-correlation sum_k a(k) * conj(b(k + lag)) with periodic
/// index wrap; lags are reduced mod n.
pub fn cross_correlation(a: &ChuSequence, b: &ChuSequence, lag: i64) -> Result<Complex64> {
    check_lengths(a, b)?;
    let tau = normalize_lag(lag, a.n);
    Ok(xcorr_at(a, b, tau, &phasor_table(a.n)))
}

/// Cross-correlation values at every lag in [0, n).
#[derive(Debug, Clone)]
pub struct CorrelationVector {
    n: u64,
    values: Vec<Complex64>,
}

impl CorrelationVector {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, lag: i64) -> Complex64 {
        self.values[normalize_lag(lag, self.n) as usize]
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }

    /// Total energy sum_tau |value(tau)|^2; equals n^2 for Chu pairs.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    /// Largest magnitude and the first lag attaining it.
    pub fn peak(&self) -> (u64, f64) {
        let mut best = (0u64, 0.0f64);
        for (tau, v) in self.values.iter().enumerate() {
            let m = v.norm();
            if m > best.1 {
                best = (tau as u64, m);
            }
        }
        best
    }
}

/// Direct O(n^2) evaluation of the cross-correlation at every lag.
pub fn cross_correlation_all_lags(a: &ChuSequence, b: &ChuSequence) -> Result<CorrelationVector> {
    check_lengths(a, b)?;
    let table = phasor_table(a.n);
    let values = (0..a.n).map(|tau| xcorr_at(a, b, tau, &table)).collect();
    Ok(CorrelationVector { n: a.n, values })
}

/// FFT route for the same vector: forward(A .* conj(B)) / n. Tolerance-equal
/// to the direct sum (within 1e-9*n per lag), never a semantic fork.
pub fn cross_correlation_all_lags_fft(
    a: &ChuSequence,
    b: &ChuSequence,
) -> Result<CorrelationVector> {
    check_lengths(a, b)?;
    let n = a.phase.len();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let mut fa = a.samples();
    let mut fb = b.samples();
    fft.process(&mut fa);
    fft.process(&mut fb);
    let mut values: Vec<Complex64> = fa.iter().zip(&fb).map(|(x, y)| x * y.conj()).collect();
    fft.process(&mut values);
    let scale = 1.0 / n as f64;
    for v in &mut values {
        *v *= scale;
    }
    Ok(CorrelationVector { n: a.n, values })
}
