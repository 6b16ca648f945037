//! Distribution of maximum cross-correlation magnitudes over the full Chu
//! family of a given length: how many roots r sit at peak sqrt(n*x) from a
//! reference root s, for each divisor x of n.
//!
//! Two independent routes are provided: a brute-force scan over the unit
//! group and a closed multiplicative formula over the prime factorization.
//! The counts do not depend on the reference root; `verify_uniformity`
//! checks that exhaustively.

use std::collections::BTreeMap;

use crate::numtheory::{divisors, factorize, gcd, unit_group, Factorization};
use crate::{Error, Result};

/// Sparse map from divisors x of n to the number of roots whose maximum
/// cross-correlation magnitude with the reference root is sqrt(n*x).
///
/// Only nonzero counts are stored; `count` returns 0 for everything else
/// (including non-divisors, which can never occur). The stored counts sum to
/// phi(n): every unit lands in exactly one bucket, with r = s counted at
/// x = n.
#[derive(Debug, Clone)]
pub struct MaxCorrDistribution {
    n: u64,
    reference_root: Option<u64>,
    counts: BTreeMap<u64, u64>,
}

impl MaxCorrDistribution {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The root the brute-force scan was taken against; `None` for the
    /// closed formula, which needs no reference.
    pub fn reference_root(&self) -> Option<u64> {
        self.reference_root
    }

    /// Nonzero counts keyed by divisor, ascending.
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count(&self, x: u64) -> u64 {
        self.counts.get(&x).copied().unwrap_or(0)
    }

    /// Sum of all counts; equals phi(n).
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Equality compares the counts only; the reference root is metadata.
impl PartialEq for MaxCorrDistribution {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.counts == other.counts
    }
}

impl Eq for MaxCorrDistribution {}

/// Counts gcd(r - s, n) over every unit r, including r = s at x = n.
pub fn distribution_bruteforce(n: u64, s: u64) -> Result<MaxCorrDistribution> {
    if n < 2 {
        return Err(Error::LengthTooSmall(n));
    }
    if s == 0 || s >= n {
        return Err(Error::RootOutOfRange { root: s, n });
    }
    if gcd(s as i64, n as i64) != 1 {
        return Err(Error::RootNotCoprime { root: s, n });
    }
    let mut counts = BTreeMap::new();
    for r in 1..n {
        if gcd(r as i64, n as i64) == 1 {
            let x = gcd(r as i64 - s as i64, n as i64);
            *counts.entry(x).or_insert(0) += 1;
        }
    }
    Ok(MaxCorrDistribution {
        n,
        reference_root: Some(s),
        counts,
    })
}

/// The per-divisor count as a product over prime factors: for each prime of
/// n dividing x with exponent t it contributes p^(c-t) - p^(c-t-1) (or 1 when
/// t = c), and for each prime of n missing from x it contributes p^c - 2p^(c-1).
fn closed_count(f: &Factorization, x: u64) -> u64 {
    let mut rest = x;
    let mut count = 1u64;
    for &(p, c) in f.factors() {
        let mut t = 0u32;
        while rest % p == 0 {
            rest /= p;
            t += 1;
        }
        count *= if t == 0 {
            p.pow(c) - 2 * p.pow(c - 1)
        } else if t == c {
            1
        } else {
            p.pow(c - t) - p.pow(c - t - 1)
        };
    }
    debug_assert_eq!(rest, 1, "x must divide n");
    count
}

/// Closed-form distribution over all divisors of n. No reference root is
/// taken: the counts are the same for every choice.
pub fn distribution_closed(n: u64) -> Result<MaxCorrDistribution> {
    if n < 2 {
        return Err(Error::LengthTooSmall(n));
    }
    let f = factorize(n)?;
    let mut counts = BTreeMap::new();
    for x in divisors(n)? {
        let c = closed_count(&f, x);
        if c > 0 {
            counts.insert(x, c);
        }
    }
    Ok(MaxCorrDistribution {
        n,
        reference_root: None,
        counts,
    })
}

/// Shortcut count formulas for the three special shapes of n: prime,
/// prime power, and squarefree. Returns 0 whenever x does not divide n.
/// Rejects any other shape of n.
pub fn special_case_count(n: u64, x: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::LengthTooSmall(n));
    }
    if x == 0 {
        return Err(Error::Zero);
    }
    let f = factorize(n)?;
    if !(f.is_prime_power() || f.is_squarefree()) {
        return Err(Error::NotSpecialForm(n));
    }
    if n % x != 0 {
        return Ok(0);
    }
    if f.is_prime() {
        return Ok(if x == n {
            1
        } else if x == 1 {
            n - 2
        } else {
            0
        });
    }
    if f.is_prime_power() {
        let (p, c) = f.factors()[0];
        if x == 1 {
            return Ok(p.pow(c) - 2 * p.pow(c - 1));
        }
        let mut t = 0u32;
        let mut rest = x;
        while rest % p == 0 {
            rest /= p;
            t += 1;
        }
        return Ok(if t == c {
            1
        } else {
            p.pow(c - t) - p.pow(c - t - 1)
        });
    }
    // squarefree: product of (p - 2) over primes of n not dividing x
    Ok(f.factors()
        .iter()
        .map(|&(p, _)| if x % p == 0 { 1 } else { p - 2 })
        .product())
}

/// Outcome of the reference-root independence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformityCheck {
    pub uniform: bool,
    /// First pair of units whose brute-force distributions disagree.
    pub counterexample: Option<(u64, u64)>,
}

/// Checks that the brute-force distribution is identical for every unit
/// reference root.
pub fn verify_uniformity(n: u64) -> Result<UniformityCheck> {
    let units = unit_group(n)?;
    let first = units.members()[0];
    let reference = distribution_bruteforce(n, first)?;
    for &s in &units.members()[1..] {
        if distribution_bruteforce(n, s)? != reference {
            return Ok(UniformityCheck {
                uniform: false,
                counterexample: Some((first, s)),
            });
        }
    }
    Ok(UniformityCheck {
        uniform: true,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::euler_phi;

    fn map(pairs: &[(u64, u64)]) -> BTreeMap<u64, u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn bruteforce_examples() {
        let d = distribution_bruteforce(7, 1).unwrap();
        assert_eq!(d.counts(), &map(&[(1, 5), (7, 1)]));

        let d = distribution_bruteforce(12, 1).unwrap();
        assert_eq!(d.counts(), &map(&[(2, 1), (4, 1), (6, 1), (12, 1)]));
        assert_eq!(d.count(1), 0);

        let d = distribution_bruteforce(15, 1).unwrap();
        assert_eq!(d.counts(), &map(&[(1, 3), (3, 3), (5, 1), (15, 1)]));
    }

    #[test]
    fn bruteforce_rejects_bad_inputs() {
        assert!(distribution_bruteforce(1, 1).is_err());
        assert!(distribution_bruteforce(12, 6).is_err());
        assert!(distribution_bruteforce(12, 0).is_err());
    }

    #[test]
    fn closed_examples() {
        let d = distribution_closed(509).unwrap();
        assert_eq!(d.counts(), &map(&[(1, 507), (509, 1)]));

        let d = distribution_closed(12).unwrap();
        assert_eq!(d.count(2), 1);
        assert_eq!(d.count(1), 0);

        // prime power: x = 1 bucket is p^c - 2p^(c-1)
        let d = distribution_closed(27).unwrap();
        assert_eq!(d.count(1), 27 - 2 * 9);

        let d = distribution_closed(8).unwrap();
        assert_eq!(d.counts(), &map(&[(2, 2), (4, 1), (8, 1)]));
    }

    #[test]
    fn closed_matches_bruteforce_small() {
        for n in 2..=120u64 {
            let closed = distribution_closed(n).unwrap();
            let brute = distribution_bruteforce(n, 1).unwrap();
            assert_eq!(closed, brute, "N={n}");
            assert_eq!(closed.total(), euler_phi(n).unwrap());
            assert_eq!(closed.count(n), 1);
        }
    }

    #[test]
    fn counts_live_on_the_divisor_lattice() {
        for n in 2..=120u64 {
            let divs = divisors(n).unwrap();
            for (&x, _) in distribution_bruteforce(n, 1).unwrap().counts() {
                assert!(divs.contains(&x), "N={n} x={x}");
            }
        }
    }

    #[test]
    fn special_case_examples() {
        assert_eq!(special_case_count(7, 1).unwrap(), 5);
        assert_eq!(special_case_count(15, 1).unwrap(), 3);
        assert_eq!(special_case_count(8, 2).unwrap(), 2);
        assert_eq!(special_case_count(7, 3).unwrap(), 0); // non-divisor
        assert_eq!(special_case_count(12, 1), Err(Error::NotSpecialForm(12)));
    }

    #[test]
    fn special_cases_match_closed() {
        for n in 2..=500u64 {
            let f = factorize(n).unwrap();
            if !(f.is_prime_power() || f.is_squarefree()) {
                continue;
            }
            let closed = distribution_closed(n).unwrap();
            for x in divisors(n).unwrap() {
                assert_eq!(
                    special_case_count(n, x).unwrap(),
                    closed.count(x),
                    "N={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn uniformity_examples() {
        assert!(verify_uniformity(12).unwrap().uniform);
        assert!(verify_uniformity(143).unwrap().uniform);
        assert!(verify_uniformity(2).unwrap().uniform);
    }
}
