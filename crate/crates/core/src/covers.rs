//! Homology of cyclic branched covers from the Alexander polynomial.
//!
//! The `r`-fold cover has `|H_1| = |∏_{i<r} Δ(ζ_r^i)| = |Res(t^r - 1, Δ)|`,
//! infinite exactly when `Δ` shares a cyclotomic factor `φ_d`, `d | r`, with
//! `t^r - 1`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactpoly::arith::{
    as_prime_power, distinct_prime_factors_u64, is_prime, max_prime_power_divisor as mppd,
    prime_powers_up_to, totient, valuation, Factorizer,
};
use crate::exactpoly::cyclotomic::{
    cyclotomic_factor_extract, cyclotomic_of, CyclotomicFactorization,
};
use crate::exactpoly::{resultant, CyclotomicIndex, IntPolynomial};

/// Default ceiling for the witness search in [`classify_prime_power_covers`].
pub const DEFAULT_WITNESS_BOUND: u64 = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyOrder {
    Finite(BigUint),
    Infinite,
}

impl HomologyOrder {
    pub fn is_trivial(&self) -> bool {
        matches!(self, HomologyOrder::Finite(n) if n.is_one())
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            HomologyOrder::Finite(n) => Some(n),
            HomologyOrder::Infinite => None,
        }
    }
}

impl fmt::Display for HomologyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyOrder::Finite(n) => write!(f, "{n}"),
            HomologyOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// An Alexander polynomial (`Δ(1) = ±1`) with its cyclotomic part extracted.
#[derive(Clone, Debug)]
pub struct KnotPolynomial {
    delta: IntPolynomial,
    cyclotomic: CyclotomicFactorization,
}

impl KnotPolynomial {
    pub fn new(delta: IntPolynomial) -> Result<Self> {
        let at_one = delta.eval_i64(1);
        if !at_one.abs().is_one() {
            return Err(Error::NotAKnotPolynomial(at_one));
        }
        let cyclotomic = cyclotomic_factor_extract(&delta);
        Ok(KnotPolynomial { delta, cyclotomic })
    }

    pub fn delta(&self) -> &IntPolynomial {
        &self.delta
    }

    pub fn cyclotomic_part(&self) -> &CyclotomicFactorization {
        &self.cyclotomic
    }

    /// Signed Fox product `∏_{i<r} Δ(ζ_r^i)`.
    pub fn fox_product(&self, r: u64) -> Result<BigInt> {
        resultant(&IntPolynomial::t_pow_minus_one(r as usize), &self.delta)
    }

    pub fn cover_order(&self, r: u64) -> Result<HomologyOrder> {
        if r == 0 {
            return Err(Error::OutOfRange {
                what: "r",
                min: 1,
                got: 0,
            });
        }
        if self
            .cyclotomic
            .factors
            .iter()
            .any(|(n, _)| r.is_multiple_of(n.get()))
        {
            return Ok(HomologyOrder::Infinite);
        }
        let value = self.fox_product(r)?;
        debug_assert!(!num_traits::Zero::is_zero(&value));
        Ok(HomologyOrder::Finite(value.magnitude().clone()))
    }
}

pub fn cover_order(delta: &IntPolynomial, r: u64) -> Result<HomologyOrder> {
    KnotPolynomial::new(delta.clone())?.cover_order(r)
}

/// Cross-check that a prime-power cover is a rational homology sphere.
/// A `false` return means an arithmetic bug, never a property of the input.
pub fn assert_rational_homology_sphere(delta: &IntPolynomial, r: u64) -> Result<bool> {
    if as_prime_power(r).is_none() {
        return Err(Error::NotAPrimePower(r));
    }
    Ok(matches!(cover_order(delta, r)?, HomologyOrder::Finite(_)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub cyclotomic_factors: Vec<(CyclotomicIndex, u32)>,
    pub non_cyclotomic_remainder: IntPolynomial,
    pub all_prime_power_covers_trivial: bool,
    pub all_covers_trivial: bool,
    pub witness_cover: Option<(u64, HomologyOrder)>,
}

impl ClassificationReport {
    /// Whether some prime-power cover has nontrivial homology, the
    /// hypothesis under which infinite same-matrix families are built.
    pub fn supports_family(&self) -> bool {
        !self.all_prime_power_covers_trivial
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyConfig {
    pub witness_bound: u64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            witness_bound: DEFAULT_WITNESS_BOUND,
        }
    }
}

pub fn classify_prime_power_covers(delta: &IntPolynomial) -> Result<ClassificationReport> {
    classify_prime_power_covers_with(delta, &ClassifyConfig::default())
}

/// Decides whether every prime-power cyclic branched cover is a homology
/// sphere: true exactly when the non-cyclotomic part is a unit and every
/// cyclotomic factor `φ_n` has `n` divisible by three distinct primes.
pub fn classify_prime_power_covers_with(
    delta: &IntPolynomial,
    cfg: &ClassifyConfig,
) -> Result<ClassificationReport> {
    let kp = KnotPolynomial::new(delta.clone())?;
    let cf = kp.cyclotomic_part();
    let remainder_is_unit = cf.remainder.is_unit_monomial();
    let few_primes: Vec<u64> = cf
        .factors
        .iter()
        .map(|(n, _)| n.get())
        .filter(|&n| distinct_prime_factors_u64(n).len() < 3)
        .collect();
    let all_prime_power_covers_trivial = remainder_is_unit && few_primes.is_empty();
    let all_covers_trivial = delta.is_unit_monomial();

    let witness_cover = if all_prime_power_covers_trivial {
        None
    } else {
        // For φ_n with at most two distinct primes, r = p^{v_p(n)} leaves a
        // prime-power quotient n / p^{v_p(n)} and hence a nontrivial cover.
        let guided = few_primes
            .iter()
            .flat_map(|&n| {
                distinct_prime_factors_u64(n)
                    .into_iter()
                    .map(move |p| p.pow(valuation(n, p)))
            })
            .min();
        let ceiling = match guided {
            Some(g) if remainder_is_unit => g.min(cfg.witness_bound),
            _ => cfg.witness_bound,
        };
        let mut found = None;
        for r in prime_powers_up_to(ceiling) {
            let order = kp.cover_order(r)?;
            if !order.is_trivial() {
                found = Some((r, order));
                break;
            }
        }
        Some(found.ok_or(Error::WitnessSearchExhausted { bound: ceiling })?)
    };

    Ok(ClassificationReport {
        cyclotomic_factors: cf.factors.clone(),
        non_cyclotomic_remainder: cf.remainder.clone(),
        all_prime_power_covers_trivial,
        all_covers_trivial,
        witness_cover,
    })
}

/// Largest prime power dividing `n >= 2`.
pub fn max_prime_power_divisor(n: &BigUint) -> Result<BigUint> {
    max_prime_power_divisor_with(n, &Factorizer::default())
}

pub fn max_prime_power_divisor_with(n: &BigUint, f: &Factorizer) -> Result<BigUint> {
    if n < &BigUint::from(2u32) {
        return Err(Error::OutOfRange {
            what: "N",
            min: 2,
            got: n.to_u64().unwrap_or(0),
        });
    }
    mppd(n, f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIdentity {
    /// `∏_{i<p^k} φ_n(ζ^i) = Res(t^{p^k} - 1, φ_n)`, signed.
    pub value: BigInt,
    /// `|φ_m(1)|^b`.
    pub predicted_magnitude: BigUint,
    pub m: u64,
    /// Exponent used in the prediction: `totient(n) / totient(m)`.
    pub b: u64,
    /// `p^k - p^{k-1}` when `k >= v_p(n)`, else `p^k`. Equal to `b` when
    /// `k <= v_p(n)`; it overshoots when `k > v_p(n)`.
    pub b_stated: u64,
}

/// Evaluates `∏_{i<p^k} φ_n(ζ_{p^k}^i)` exactly and checks it against the
/// closed form `∏ (ω_m - 1)^b` over primitive `m`-th roots, `m = n / gcd(n, p^k)`.
///
/// The map `ω -> ω^{p^k}` sends primitive `n`-th roots onto primitive `m`-th
/// roots with fibres of size `totient(n) / totient(m)`, which is the exponent.
pub fn cyclotomic_product_identity(n: u64, p: u64, k: u32) -> Result<ProductIdentity> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            min: 2,
            got: n,
        });
    }
    if !is_prime(p) {
        return Err(Error::NotAPrime(p));
    }
    if k < 1 {
        return Err(Error::OutOfRange {
            what: "k",
            min: 1,
            got: 0,
        });
    }
    let pk = p.checked_pow(k).ok_or(Error::OutOfRange {
        what: "p^k fits in 64 bits; k",
        min: 1,
        got: k as u64,
    })?;
    let m = n / n.gcd(&pk);
    if m == 1 {
        return Err(Error::DegenerateCase { n, p, k });
    }
    let v = valuation(n, p);
    let b = totient(n) / totient(m);
    let b_stated = if k >= v { pk - pk / p } else { pk };
    let value = resultant(
        &IntPolynomial::t_pow_minus_one(pk as usize),
        &cyclotomic_of(n),
    )?;
    let base = cyclotomic_of(m).eval_i64(1).magnitude().clone();
    let predicted_magnitude = num_traits::pow(base, b as usize);
    if value.magnitude() != &predicted_magnitude {
        return Err(Error::IdentityViolation {
            n,
            p,
            k,
            value,
            predicted: predicted_magnitude.into(),
        });
    }
    Ok(ProductIdentity {
        value,
        predicted_magnitude,
        m,
        b,
        b_stated,
    })
}
