//! Integer primitives behind every counting formula: factorization, gcd,
//! Euler's totient, divisor enumeration, and the group of units mod n.
//!
//! Everything here is deterministic trial-division arithmetic. Inputs are
//! desk-scale (the CLI caps lengths at 10^7), so there is no probabilistic
//! primality machinery and no sieving.

use std::fmt;

use crate::{Error, Result};

/// Prime-power decomposition of a positive integer.
///
/// Factors are listed as `(prime, exponent)` with strictly increasing primes
/// and exponents at least 1; their product reconstructs the input. The
/// factorization of 1 has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, c)| c == 1)
    }

    /// Number of divisors, i.e. the product of `(exponent + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, c)| c as u64 + 1).product()
    }
}

/// Renders as `p1^c1·p2^c2·…` with unit exponents omitted, e.g. `2^9`,
/// `3·13^2`, `509`; the empty factorization of 1 renders as `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, c)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "\u{b7}")?;
            }
            if c == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{c}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `n` by deterministic trial division up to sqrt(n).
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p: u64 = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut c = 0u32;
            while rest % p == 0 {
                rest /= p;
                c += 1;
            }
            factors.push((p, c));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Euler's totient: the number of integers in (0, n) coprime to n, with
/// `euler_phi(1) = 1`.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors
        .iter()
        .map(|&(p, c)| p.pow(c - 1) * (p - 1))
        .product())
}

/// All divisors of `n` in ascending order, including 1 and n.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, c) in f.factors() {
        let base = divs.clone();
        let mut power = 1u64;
        for _ in 0..c {
            power *= p;
            divs.extend(base.iter().map(|d| d * power));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Greatest common divisor on signed arguments via absolute values;
/// `gcd(0, b) = |b|`.
pub fn gcd(a: i64, b: i64) -> u64 {
    let mut a = a.unsigned_abs();
    let mut b = b.unsigned_abs();
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// The multiplicative group of units mod n: every r with 0 < r < n and
/// gcd(r, n) = 1, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    n: u64,
    members: Vec<u64>,
}

impl UnitGroup {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Membership test by gcd, without scanning the member list.
    pub fn contains(&self, r: u64) -> bool {
        r > 0 && r < self.n && gcd(r as i64, self.n as i64) == 1
    }
}

/// Enumerates the unit group of `n`; requires n >= 2.
pub fn unit_group(n: u64) -> Result<UnitGroup> {
    if n < 2 {
        return Err(Error::LengthTooSmall(n));
    }
    let members = (1..n).filter(|&r| gcd(r as i64, n as i64) == 1).collect();
    Ok(UnitGroup { n, members })
}
