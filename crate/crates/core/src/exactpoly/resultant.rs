use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::det::bareiss_det;
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Resultant `lc(f)^deg(g) * ∏ g(α)` over the roots `α` of `f`, computed
/// with the subresultant polynomial remainder sequence.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (ca, cb) = (f.content(), g.content());
    let mut a = f.div_scalar_exact(&ca);
    let mut b = g.div_scalar_exact(&cb);
    let (da, db) = (deg(&a), deg(&b));
    let scale = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut sign = 1i32;
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -1;
        }
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    while deg(&b) > 0 {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        b = r.div_scalar_exact(&(&gg * num_traits::pow(h.clone(), delta)));
        gg = a.leading_coeff().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(gg.clone(), delta);
            let den = num_traits::pow(h, delta - 1);
            debug_assert!(num.is_multiple_of(&den));
            num / den
        };
    }
    // b is a nonzero constant here
    let da = deg(&a);
    let lb = b.leading_coeff().unwrap().clone();
    let res = if da == 0 {
        BigInt::one()
    } else {
        let num = num_traits::pow(lb, da);
        let den = num_traits::pow(h, da - 1);
        debug_assert!(num.is_multiple_of(&den));
        num / den
    };
    let out = scale * res;
    Ok(if sign < 0 { -out } else { out })
}

fn deg(p: &IntPolynomial) -> usize {
    p.degree().unwrap_or(0)
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n): n shifted rows of
/// `f` followed by m shifted rows of `g`, coefficients in descending order.
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let (m, n) = (deg(f), deg(g));
    let size = m + n;
    let row = |p: &IntPolynomial, shift: usize| -> Vec<BigInt> {
        let mut r = vec![BigInt::zero(); size];
        let d = deg(p);
        for (i, c) in p.coeffs().iter().enumerate() {
            r[shift + d - i] = c.clone();
        }
        r
    };
    (0..n)
        .map(|s| row(f, s))
        .chain((0..m).map(|s| row(g, s)))
        .collect()
}

/// Resultant as the Bareiss determinant of the Sylvester matrix.
pub fn resultant_sylvester(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(bareiss_det(&sylvester_matrix(f, g)))
}
