//! Certified inertia of Hermitian matrices given as complex balls.

use super::ball::{Ball, ComplexBall};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Symmetric elimination with 1x1 and 2x2 diagonal pivots.
///
/// Each pivot is accepted only once its sign is certified: a 1x1 pivot must
/// exclude zero, a 2x2 pivot must have a certified negative determinant and
/// then contributes one positive and one negative eigenvalue. Returns `None`
/// when no pivot can be certified at the current precision (or the matrix is
/// singular).
pub fn certified_inertia(mut a: Vec<Vec<ComplexBall>>) -> Option<Inertia> {
    let n = a.len();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
    };
    while !active.is_empty() {
        let best = active
            .iter()
            .copied()
            .max_by(|&i, &j| {
                a[i][i]
                    .re
                    .mag_lower_ulps()
                    .cmp(&a[j][j].re.mag_lower_ulps())
            })
            .unwrap();
        if let Some(s) = a[best][best].re.sign() {
            if s > 0 {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            active.retain(|&i| i != best);
            pivot_1x1(&mut a, &active, best)?;
            continue;
        }
        if active.len() < 2 {
            return None;
        }
        let mut pair = None;
        let mut best_mag = None;
        for (x, &k) in active.iter().enumerate() {
            for &l in &active[x + 1..] {
                let m = a[k][l].norm_sqr().mag_lower_ulps();
                if best_mag.as_ref().is_none_or(|b| &m > b) {
                    best_mag = Some(m);
                    pair = Some((k, l));
                }
            }
        }
        let (k, l) = pair?;
        let det = &(&a[k][k].re * &a[l][l].re) - &a[k][l].norm_sqr();
        if det.sign() != Some(-1) {
            return None;
        }
        out.positive += 1;
        out.negative += 1;
        active.retain(|&i| i != k && i != l);
        pivot_2x2(&mut a, &active, k, l, &det)?;
    }
    Some(out)
}

fn pivot_1x1(a: &mut [Vec<ComplexBall>], rest: &[usize], k: usize) -> Option<()> {
    let d = a[k][k].re.clone();
    for (x, &i) in rest.iter().enumerate() {
        let aik = a[i][k].clone();
        // diagonal stays real
        let upd = aik.norm_sqr().div(&d)?;
        a[i][i] = ComplexBall::real(&a[i][i].re - &upd);
        for &j in &rest[x + 1..] {
            let akj = a[k][j].clone();
            let upd = (&aik * &akj).div_real(&d)?;
            let v = &a[i][j] - &upd;
            a[j][i] = v.conj();
            a[i][j] = v;
        }
    }
    Some(())
}

fn pivot_2x2(
    a: &mut [Vec<ComplexBall>],
    rest: &[usize],
    k: usize,
    l: usize,
    det: &Ball,
) -> Option<()> {
    let akk = a[k][k].re.clone();
    let all = a[l][l].re.clone();
    let akl = a[k][l].clone();
    let alk = a[l][k].clone();
    // (A_ik, A_il) B^{-1} (A_kj, A_lj)^T with B^{-1} = [[all, -akl], [-alk, akk]] / det
    let update = |a: &[Vec<ComplexBall>], i: usize, j: usize| -> Option<ComplexBall> {
        let (aik, ail) = (&a[i][k], &a[i][l]);
        let (akj, alj) = (&a[k][j], &a[l][j]);
        let t1 = (aik * akj).scale(&all);
        let t2 = &(aik * &akl) * alj;
        let t3 = &(ail * &alk) * akj;
        let t4 = (ail * alj).scale(&akk);
        let s = &(&(&t1 - &t2) - &t3) + &t4;
        s.div_real(det)
    };
    for (x, &i) in rest.iter().enumerate() {
        let u = update(a, i, i)?;
        a[i][i] = ComplexBall::real(&a[i][i].re - &u.re);
        for &j in &rest[x + 1..] {
            let u = update(a, i, j)?;
            let v = &a[i][j] - &u;
            a[j][i] = v.conj();
            a[i][j] = v;
        }
    }
    Some(())
}
