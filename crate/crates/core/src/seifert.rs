//! Seifert matrices: validation, the Alexander polynomial `det(V - tV^T)`,
//! block sums, mirrors, and the `(2, q)` torus-knot family.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::det::{bareiss_det, poly_matrix_det};
use crate::exactpoly::IntPolynomial;

/// Why a candidate matrix is not a knot's Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidityFailure {
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    OddDimension(usize),
    SkewDeterminant(BigInt),
}

impl fmt::Display for ValidityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidityFailure::NotSquare { row, len, expected } => {
                write!(
                    f,
                    "not square: row {row} has {len} entries, expected {expected}"
                )
            }
            ValidityFailure::OddDimension(d) => write!(f, "dimension {d} is odd"),
            ValidityFailure::SkewDeterminant(d) => {
                write!(f, "det(V - V^T) = {d}, expected 1")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub square: bool,
    pub even_dimension: bool,
    /// `det(V - V^T)`, when the matrix is square.
    pub skew_determinant: Option<BigInt>,
    pub failure: Option<ValidityFailure>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks squareness, even dimension and `det(V - V^T) = 1`.
pub fn validate(rows: &[Vec<BigInt>]) -> ValidityReport {
    let n = rows.len();
    if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return ValidityReport {
            square: false,
            even_dimension: n.is_multiple_of(2),
            skew_determinant: None,
            failure: Some(ValidityFailure::NotSquare {
                row,
                len: r.len(),
                expected: n,
            }),
        };
    }
    let skew: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| &rows[i][j] - &rows[j][i]).collect())
        .collect();
    let det = bareiss_det(&skew);
    let failure = if n % 2 == 1 {
        Some(ValidityFailure::OddDimension(n))
    } else if !det.is_one() {
        Some(ValidityFailure::SkewDeterminant(det.clone()))
    } else {
        None
    };
    ValidityReport {
        square: true,
        even_dimension: n.is_multiple_of(2),
        skew_determinant: Some(det),
        failure,
    }
}

/// A square integer matrix `V` of even size with `det(V - V^T) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        match validate(&rows).failure {
            None => Ok(SeifertMatrix { rows }),
            Some(f) => Err(Error::InvalidSeifertMatrix(f)),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    fn from_trusted(rows: Vec<Vec<BigInt>>) -> Self {
        debug_assert!(validate(&rows).is_valid());
        SeifertMatrix { rows }
    }

    /// The 0x0 matrix.
    pub fn unknot() -> Self {
        SeifertMatrix { rows: Vec::new() }
    }

    pub fn trefoil() -> Self {
        torus_2q(3).expect("q = 3")
    }

    /// `[[1, 1], [0, -1]]`, Alexander polynomial `-t^2 + 3t - 1`.
    pub fn figure_eight() -> Self {
        Self::from_i64_rows(&[vec![1, 1], vec![0, -1]]).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn genus(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Vec<Vec<BigInt>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect())
            .collect()
    }

    pub fn det(&self) -> BigInt {
        bareiss_det(&self.rows)
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix(")?;
        f.debug_list().entries(self.rows.iter()).finish()?;
        write!(f, ")")
    }
}

/// `det(a V + b V^T)` for linear polynomials `a`, `b` in `t`.
fn linear_pencil_det(v: &SeifertMatrix, a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let n = v.dim();
    let m: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &a.scale(&v.rows[i][j]) + &b.scale(&v.rows[j][i]))
                .collect()
        })
        .collect();
    poly_matrix_det(&m)
}

/// Alexander polynomial `det(V - t V^T)`, unnormalized.
pub fn alexander(v: &SeifertMatrix) -> IntPolynomial {
    linear_pencil_det(
        v,
        &IntPolynomial::one(),
        &IntPolynomial::from_i64s(&[0, -1]),
    )
}

/// `det(t V - V^T)`.
pub fn alexander_transposed(v: &SeifertMatrix) -> IntPolynomial {
    linear_pencil_det(
        v,
        &IntPolynomial::from_i64s(&[0, 1]),
        &IntPolynomial::from_i64s(&[-1]),
    )
}

/// Block-diagonal sum `V1 ⊕ V2`, the Seifert matrix of the connected sum.
pub fn connected_sum(v1: &SeifertMatrix, v2: &SeifertMatrix) -> SeifertMatrix {
    let (n1, n2) = (v1.dim(), v2.dim());
    let n = n1 + n2;
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n1 {
        rows[i][..n1].clone_from_slice(&v1.rows[i]);
    }
    for i in 0..n2 {
        rows[n1 + i][n1..].clone_from_slice(&v2.rows[i]);
    }
    SeifertMatrix::from_trusted(rows)
}

/// `-V^T`, the Seifert matrix of the reversed mirror image.
pub fn mirror(v: &SeifertMatrix) -> SeifertMatrix {
    let rows = v
        .transpose()
        .into_iter()
        .map(|r| r.into_iter().map(|x| -x).collect())
        .collect();
    SeifertMatrix::from_trusted(rows)
}

/// Standard Seifert matrix of the `(2, q)` torus knot: `1` on the diagonal,
/// `-1` on the superdiagonal. With this orientation the signature at
/// `ω = -1` is `+(q - 1)`.
pub fn torus_2q(q: i64) -> Result<SeifertMatrix> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::BadTorusParameter(q));
    }
    let n = (q - 1) as usize;
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        rows[i][i] = BigInt::one();
        if i + 1 < n {
            rows[i][i + 1] = -BigInt::one();
        }
    }
    Ok(SeifertMatrix::from_trusted(rows))
}

/// `n`-fold block sum of `V` with itself.
pub fn multiple(v: &SeifertMatrix, n: usize) -> SeifertMatrix {
    (0..n).fold(SeifertMatrix::unknot(), |acc, _| connected_sum(&acc, v))
}
