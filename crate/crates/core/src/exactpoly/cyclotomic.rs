use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::arith::{divisors, phi_inverse_candidates, CyclotomicIndex};
use super::poly::IntPolynomial;

fn cache() -> &'static Mutex<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, by exact division of `t^n - 1` by
/// `φ_d` for the proper divisors `d` of `n`.
pub fn cyclotomic(n: CyclotomicIndex) -> IntPolynomial {
    let n = n.get();
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut acc = IntPolynomial::t_pow_minus_one(n as usize);
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let phi_d = cyclotomic(CyclotomicIndex::new(d).unwrap());
        acc = acc
            .exact_quotient(&phi_d)
            .expect("proper-divisor cyclotomic divides t^n - 1");
    }
    cache().lock().unwrap().insert(n, acc.clone());
    acc
}

pub fn cyclotomic_of(n: u64) -> IntPolynomial {
    cyclotomic(CyclotomicIndex::new(n).expect("cyclotomic index must be positive"))
}

/// Cyclotomic part of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// `(n, multiplicity)` ascending in `n`.
    pub factors: Vec<(CyclotomicIndex, u32)>,
    /// What is left after removing every cyclotomic factor.
    pub remainder: IntPolynomial,
}

impl CyclotomicFactorization {
    pub fn multiplicity(&self, n: u64) -> u32 {
        self.factors
            .iter()
            .find(|(i, _)| i.get() == n)
            .map_or(0, |&(_, m)| m)
    }

    /// `remainder * ∏ φ_n^mult`.
    pub fn recombine(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(self.remainder.clone(), |acc, (n, m)| {
                &acc * &cyclotomic(*n).pow(*m)
            })
    }
}

/// Splits `f = remainder * ∏ φ_n^mult` by repeated exact division over every
/// `n` with `totient(n) <= deg f`.
pub fn cyclotomic_factor_extract(f: &IntPolynomial) -> CyclotomicFactorization {
    let mut remainder = f.clone();
    let mut factors = Vec::new();
    let deg = f.degree().unwrap_or(0) as u64;
    if deg == 0 {
        return CyclotomicFactorization { factors, remainder };
    }
    for n in phi_inverse_candidates(deg) {
        let rdeg = remainder.degree().unwrap_or(0) as u64;
        if super::arith::totient(n.get()) > rdeg {
            continue;
        }
        let phi = cyclotomic(n);
        let mut mult = 0;
        while let Some(q) = remainder.exact_quotient(&phi) {
            remainder = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((n, mult));
        }
    }
    CyclotomicFactorization { factors, remainder }
}

/// True when `φ_n` divides `f`.
pub fn cyclotomic_divides(n: u64, f: &IntPolynomial) -> bool {
    !f.is_zero() && f.exact_quotient(&cyclotomic_of(n)).is_some()
}
