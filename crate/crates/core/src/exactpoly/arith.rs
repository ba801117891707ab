//! Integer helpers: trial-division factorization, Euler's totient and the
//! bounded inverse-totient search used to enumerate cyclotomic candidates.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default trial-division bound.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Index `n >= 1` of the cyclotomic polynomial `φ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclotomicIndex(u64);

impl CyclotomicIndex {
    pub fn new(n: u64) -> Option<Self> {
        (n >= 1).then_some(CyclotomicIndex(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for CyclotomicIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Trial-division factorizer with a fixed search bound.
#[derive(Clone, Copy, Debug)]
pub struct Factorizer {
    pub bound: u64,
}

impl Default for Factorizer {
    fn default() -> Self {
        Factorizer {
            bound: DEFAULT_FACTOR_BOUND,
        }
    }
}

impl Factorizer {
    /// Prime factorization of `n >= 1`, primes ascending.
    ///
    /// A cofactor left after dividing out every prime up to `bound` is prime
    /// when it is below `bound^2`; anything larger is refused.
    pub fn factorize(&self, n: &BigUint) -> Result<Vec<(BigUint, u32)>> {
        let mut out = Vec::new();
        if n.is_zero() {
            return Err(Error::FactorizationLimit {
                cofactor: BigInt::zero(),
                bound: self.bound,
            });
        }
        let mut rest = n.clone();
        let mut d = 2u64;
        while d <= self.bound {
            if BigUint::from(d) * BigUint::from(d) > rest {
                break;
            }
            let (q, r) = rest.div_rem(&BigUint::from(d));
            if r.is_zero() {
                let mut e = 1;
                rest = q;
                loop {
                    let (q, r) = rest.div_rem(&BigUint::from(d));
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    e += 1;
                }
                out.push((BigUint::from(d), e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if !rest.is_one() {
            let b = BigUint::from(self.bound);
            if rest >= &b * &b {
                return Err(Error::FactorizationLimit {
                    cofactor: BigInt::from(rest),
                    bound: self.bound,
                });
            }
            out.push((rest, 1));
        }
        Ok(out)
    }

    pub fn factorize_u64(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        Ok(self
            .factorize(&BigUint::from(n))?
            .into_iter()
            .map(|(p, e)| (p.to_u64().expect("factor of a u64"), e))
            .collect())
    }
}

/// Factorization of a small positive integer by plain trial division.
pub(crate) fn factor_small(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`, ascending. `n = 1` gives the empty list.
pub fn distinct_prime_factors(n: &BigUint) -> Result<Vec<BigUint>> {
    distinct_prime_factors_with(n, &Factorizer::default())
}

pub fn distinct_prime_factors_with(n: &BigUint, f: &Factorizer) -> Result<Vec<BigUint>> {
    Ok(f.factorize(n)?.into_iter().map(|(p, _)| p).collect())
}

pub fn distinct_prime_factors_u64(n: u64) -> Vec<u64> {
    factor_small(n).into_iter().map(|(p, _)| p).collect()
}

pub fn totient(n: u64) -> u64 {
    factor_small(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor_small(n).len() == 1 && factor_small(n)[0].1 == 1
}

/// `Some((p, k))` with `n = p^k`, `k >= 1`.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    match factor_small(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Exponent of the prime `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Every `n` with `totient(n) <= bound`, ascending.
///
/// Uses `totient(n) >= sqrt(n / 2)`, so no such `n` exceeds `2 * bound^2`.
pub fn phi_inverse_candidates(bound: u64) -> Vec<CyclotomicIndex> {
    let cutoff = 2 * bound * bound;
    (1..=cutoff)
        .filter(|&n| totient(n) <= bound)
        .map(CyclotomicIndex)
        .collect()
}

/// Prime powers `2, 3, 4, 5, 7, 8, 9, ...` up to `bound`, ascending.
pub fn prime_powers_up_to(bound: u64) -> impl Iterator<Item = u64> {
    (2..=bound).filter(|&r| as_prime_power(r).is_some())
}

/// Largest prime power exactly dividing `n`, by value.
pub fn max_prime_power_divisor(n: &BigUint, f: &Factorizer) -> Result<BigUint> {
    f.factorize(n)?
        .into_iter()
        .map(|(p, e)| num_traits::pow(p, e as usize))
        .max()
        .ok_or(Error::OutOfRange {
            what: "N",
            min: 2,
            got: 1,
        })
}
