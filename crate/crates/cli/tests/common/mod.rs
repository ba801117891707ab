//! Random valid Seifert matrices.
//!
//! `V = P^T (S + J0) P` where `J0` is the block sum of `[[0, 1], [0, 0]]`,
//! `S` is symmetric and `P` is unimodular, so `V - V^T = P^T (J0 - J0^T) P`
//! has determinant 1.

#![allow(dead_code)]

use concordance::SeifertMatrix;
use num_bigint::BigInt;
use rand::Rng;

pub fn random_seifert<R: Rng>(rng: &mut R, max_genus: usize) -> SeifertMatrix {
    let g = rng.gen_range(1..=max_genus);
    let n = 2 * g;
    let mut v = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let s = rng.gen_range(-2..=2);
            v[i][j] += s;
            if i != j {
                v[j][i] += s;
            }
        }
    }
    for b in 0..g {
        v[2 * b][2 * b + 1] += 1;
    }
    // congruence by elementary unimodular moves: row_i += c row_j, col_i += c col_j
    for _ in 0..rng.gen_range(0..=n) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = rng.gen_range(-1..=1);
        for k in 0..n {
            v[i][k] += c * v[j][k];
        }
        for k in 0..n {
            v[k][i] += c * v[k][j];
        }
    }
    let rows: Vec<Vec<BigInt>> = v
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    SeifertMatrix::new(rows).expect("congruent to a valid Seifert matrix")
}
