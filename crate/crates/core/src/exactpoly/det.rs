//! Exact determinants: fraction-free Bareiss elimination over the integers and
//! polynomial-entry determinants by evaluation and interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Determinant of a square matrix with polynomial entries.
///
/// The determinant has degree at most the sum of the row-wise maximal entry
/// degrees; it is evaluated at that many plus one integer points and
/// recovered by Newton interpolation over the rationals.
pub fn poly_matrix_det(rows: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = rows.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let bound: usize = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(IntPolynomial::degree)
                .max()
                .unwrap_or(0)
        })
        .sum();
    let points: Vec<BigInt> = (0..=bound as i64)
        .map(|i| BigInt::from(if i % 2 == 0 { -i / 2 } else { (i + 1) / 2 }))
        .collect();
    let values: Vec<BigInt> = points
        .iter()
        .map(|x| {
            let m: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|e| e.eval(x)).collect())
                .collect();
            bareiss_det(&m)
        })
        .collect();
    interpolate(&points, &values)
}

/// Integer polynomial through `(x_i, y_i)`; the interpolant must have
/// integer coefficients.
pub(crate) fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> IntPolynomial {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    // Horner on the Newton form.
    let mut acc: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // acc * (t - x_i) + dd[i]
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        let xi = BigRational::from(xs[i].clone());
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xi;
        }
        next[0] += &dd[i];
        acc = next;
    }
    IntPolynomial::new(
        acc.into_iter()
            .map(|c| {
                assert!(
                    c.is_integer(),
                    "interpolant has non-integer coefficient {c}"
                );
                c.to_integer()
            })
            .collect(),
    )
}
