//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line with its runtime and limit.

mod common;

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use concordance::covers::{
    classify_prime_power_covers, cover_order, cyclotomic_product_identity, HomologyOrder,
    KnotPolynomial,
};
use concordance::exactpoly::arith::{prime_powers_up_to, valuation};
use concordance::exactpoly::{cyclotomic_of, resultant_sylvester, IntPolynomial};
use concordance::obstruction::{
    enumerate_character_sums, verify_separation, witness_schedule, FamilyParameters,
};
use concordance::seifert::{alexander, connected_sum, mirror, multiple, torus_2q};
use concordance::signatures::{
    at_jump, jump_step_check, signature_profile, tl_signature, verify_torus_lemma, UnitRootArg,
};
use concordance::SeifertMatrix;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<(), String>;

/// Runs one criterion, prints its line, and fails the test on error or
/// overrun.
fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let verdict = match (&outcome, elapsed <= limit) {
        (Ok(()), true) => "PASS".to_string(),
        (Ok(()), false) => format!("FAIL (over time limit {:.0?})", limit),
        (Err(e), _) => format!("FAIL ({e})"),
    };
    let line = format!(
        "acceptance {id}: {title}: {verdict} [{:.3}s / {}s]\n",
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    // bypass the harness capture so every line reaches the log
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(outcome.is_ok() && elapsed <= limit, "{}", line.trim_end());
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn finite(n: u64) -> HomologyOrder {
    HomologyOrder::Finite(BigUint::from(n))
}

#[test]
fn c1_fox_spot_values() {
    criterion(1, "Fox formula spot values", Duration::from_secs(1), || {
        let cases = [
            (SeifertMatrix::trefoil(), 2, finite(3)),
            (SeifertMatrix::trefoil(), 3, finite(4)),
            (SeifertMatrix::trefoil(), 4, finite(3)),
            (SeifertMatrix::trefoil(), 5, finite(1)),
            (SeifertMatrix::trefoil(), 6, HomologyOrder::Infinite),
            (SeifertMatrix::figure_eight(), 2, finite(5)),
            (SeifertMatrix::figure_eight(), 3, finite(16)),
        ];
        for (v, r, expected) in cases {
            let got = cover_order(&alexander(&v), r).map_err(|e| e.to_string())?;
            check(got == expected, || {
                format!("r = {r}: got {got}, expected {expected}")
            })?;
        }
        Ok(())
    });
}

#[test]
fn c2_prime_power_covers_finite() {
    criterion(
        2,
        "prime-power covers are rational homology spheres",
        Duration::from_secs(30),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(2);
            for i in 0..200 {
                let v = common::random_seifert(&mut rng, 4);
                let kp = KnotPolynomial::new(alexander(&v)).map_err(|e| e.to_string())?;
                for r in prime_powers_up_to(32) {
                    let order = kp.cover_order(r).map_err(|e| e.to_string())?;
                    check(order.finite().is_some(), || {
                        format!("matrix {i}, r = {r}: infinite")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn c3_classifier() {
    criterion(
        3,
        "prime-power cover classifier",
        Duration::from_secs(10),
        || {
            for n in [30u64, 42, 60, 66, 70] {
                let delta = cyclotomic_of(n);
                let report = classify_prime_power_covers(&delta).map_err(|e| e.to_string())?;
                check(report.all_prime_power_covers_trivial, || {
                    format!("φ_{n}: verdict false")
                })?;
                for r in prime_powers_up_to(27) {
                    let order = cover_order(&delta, r).map_err(|e| e.to_string())?;
                    check(order.is_trivial(), || {
                        format!("φ_{n}, r = {r}: order {order}")
                    })?;
                }
            }
            for n in [6u64, 12, 15, 45] {
                let delta = cyclotomic_of(n);
                let report = classify_prime_power_covers(&delta).map_err(|e| e.to_string())?;
                check(!report.all_prime_power_covers_trivial, || {
                    format!("φ_{n}: verdict true")
                })?;
                let (r, order) = report
                    .witness_cover
                    .ok_or_else(|| format!("φ_{n}: no witness"))?;
                // independent route: Sylvester determinant
                let res = resultant_sylvester(&IntPolynomial::t_pow_minus_one(r as usize), &delta)
                    .map_err(|e| e.to_string())?;
                check(
                    !res.is_zero()
                        && !res.abs().is_one()
                        && order == HomologyOrder::Finite(res.abs().to_biguint().unwrap()),
                    || format!("φ_{n}: witness r = {r} order {order} vs resultant {res}"),
                )?;
            }
            Ok(())
        },
    );
}

#[test]
fn c4_cyclotomic_product_identity() {
    criterion(
        4,
        "cyclotomic product identity with the stated exponent",
        Duration::from_secs(30),
        || {
            let mut failures = Vec::new();
            let mut checked = 0;
            for n in 1..=60u64 {
                for p in [2u64, 3, 5, 7] {
                    for k in 1..=3u32 {
                        let pk = p.pow(k);
                        let m = n / num_integer::gcd(n, pk);
                        if m < 2 {
                            continue;
                        }
                        checked += 1;
                        let id = cyclotomic_product_identity(n, p, k).map_err(|e| e.to_string())?;
                        let phi_m_at_one = cyclotomic_of(m).eval_i64(1).abs().to_biguint().unwrap();
                        let stated = if k >= valuation(n, p) {
                            pk - pk / p
                        } else {
                            pk
                        };
                        let predicted = num_traits::pow(phi_m_at_one, stated as usize);
                        if id.value.abs().to_biguint().unwrap() != predicted {
                            failures.push((n, p, k, id.value.abs(), predicted));
                        }
                    }
                }
            }
            match failures.first() {
                None => Ok(()),
                Some((n, p, k, got, want)) => Err(format!(
                    "{} of {checked} cases differ, first n={n} p={p} k={k}: \
                     |Res| = {got}, stated rule gives {want}",
                    failures.len()
                )),
            }
        },
    );
}

#[test]
fn c5_torus_lemma() {
    criterion(
        5,
        "torus knot signature lemma",
        Duration::from_secs(10),
        || {
            for q in [3u64, 5, 7, 9, 11] {
                let report = verify_torus_lemma(q).map_err(|e| e.to_string())?;
                check(report.min >= 2, || format!("q = {q}: min {}", report.min))?;
                check(report.sigma_minus_one == q as i64 - 1, || {
                    format!("q = {q}: σ(-1) = {}", report.sigma_minus_one)
                })?;
            }
            Ok(())
        },
    );
}

#[test]
fn c6_jump_structure() {
    criterion(
        6,
        "signature jump structure",
        Duration::from_secs(5),
        || {
            let trefoil =
                jump_step_check(&SeifertMatrix::trefoil(), 3).map_err(|e| e.to_string())?;
            let at: Vec<String> = trefoil.jumps.iter().map(|j| j.at.to_string()).collect();
            check(at == ["1/6", "5/6"], || format!("trefoil jumps at {at:?}"))?;
            for j in &trefoil.jumps {
                check(j.step_outward() == 2, || {
                    format!("trefoil step at {} is {}", j.at, j.step_outward())
                })?;
            }
            let t5 = torus_2q(5).map_err(|e| e.to_string())?;
            let rep = jump_step_check(&t5, 5).map_err(|e| e.to_string())?;
            let upper: Vec<i64> = rep
                .jumps
                .iter()
                .filter(|j| j.is_upper_half())
                .map(|j| j.step_outward())
                .collect();
            check(upper == [2, 2], || {
                format!("T(2,5) upper-half steps {upper:?}")
            })?;
            check(
                rep.sigma_minus_one == Some(4) && rep.cumulative_upper == 4,
                || {
                    format!(
                        "T(2,5): σ(-1) = {:?}, cumulative {}",
                        rep.sigma_minus_one, rep.cumulative_upper
                    )
                },
            )
        },
    );
}

fn regular_angle<R: Rng>(rng: &mut R, vs: &[&SeifertMatrix]) -> Result<UnitRootArg, String> {
    loop {
        let q = rng.gen_range(2..=24u64);
        let w = UnitRootArg::new(rng.gen_range(1..q) as i64, q).map_err(|e| e.to_string())?;
        let mut jump = false;
        for v in vs {
            jump |= at_jump(v, w).map_err(|e| e.to_string())?;
        }
        if !jump {
            return Ok(w);
        }
    }
}

#[test]
fn c7_property_suite() {
    criterion(
        7,
        "randomized invariant properties",
        Duration::from_secs(60),
        || {
            const CASES: usize = 500;
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let sig = |v: &SeifertMatrix, w| tl_signature(v, w).map_err(|e| e.to_string());
            for i in 0..CASES {
                let v = common::random_seifert(&mut rng, 3);
                let w = common::random_seifert(&mut rng, 2);
                let dv = alexander(&v);
                check(dv.eval_i64(1).is_one(), || {
                    format!("case {i}: Δ(1) = {}", dv.eval_i64(1))
                })?;

                let mut c = dv.coeffs().to_vec();
                c.resize(v.dim() + 1, BigInt::zero());
                c.reverse();
                check(IntPolynomial::new(c) == dv, || {
                    format!("case {i}: {dv} not palindromic")
                })?;

                let sum = connected_sum(&v, &w);
                check(alexander(&sum) == &dv * &alexander(&w), || {
                    format!("case {i}: Δ not multiplicative")
                })?;

                let a = regular_angle(&mut rng, &[&v, &w])?;
                let (sv, sw) = (sig(&v, a)?, sig(&w, a)?);
                check(sig(&sum, a)? == sv + sw, || {
                    format!("case {i}: signature not additive at {a}")
                })?;
                check(sig(&mirror(&v), a)? == -sv, || {
                    format!("case {i}: mirror at {a}")
                })?;
                let n = rng.gen_range(0..=3usize);
                check(sig(&multiple(&w, n), a)? == n as i64 * sw, || {
                    format!("case {i}: {n}-fold multiple at {a}")
                })?;

                let q = rng.gen_range(2..=10u64);
                let profile = signature_profile(&w, q).map_err(|e| e.to_string())?;
                for b in 1..q {
                    check(profile.get(b) == profile.get(q - b), || {
                        format!("case {i}: profile asymmetric at {b}/{q}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

/// Every value `n Σ σ(a_l)` one side can take, including the trivial 0.
fn side_values(profile: &[i64], terms: u64, n: i64) -> Vec<i64> {
    let (sums, _) = enumerate_character_sums(profile, terms);
    let mut v: Vec<i64> = sums.into_iter().map(|s| n * s).collect();
    v.push(0);
    v
}

#[test]
fn c8_witness_schedules() {
    criterion(
        8,
        "greedy witness schedules with enumeration oracle",
        Duration::from_secs(60),
        || {
            for (n0, count, expected) in [(0u64, 3usize, vec![1i64, 7, 43]), (10, 2, vec![11, 77])]
            {
                // L = 2 g p^k = 6
                let params = FamilyParameters::new(1, 3, 1, 3, n0).map_err(|e| e.to_string())?;
                check(params.terms() == 6, || "L != 6".into())?;
                let schedule = witness_schedule(&params, count).map_err(|e| e.to_string())?;
                let ns: Vec<i64> = schedule
                    .entries
                    .iter()
                    .map(|e| e.n.to_i64().unwrap())
                    .collect();
                check(ns == expected, || {
                    format!("N0 = {n0}: schedule {ns:?}, expected {expected:?}")
                })?;
                let report = verify_separation(&schedule).map_err(|e| e.to_string())?;
                let bf = report.brute_force.ok_or("no enumeration")?;
                check(bf.assignments == 729 && bf.collisions == 0, || {
                    format!("{bf:?}")
                })?;

                // oracle: direct signatures of T(2,3), full 3^6 enumeration per side
                let t = torus_2q(3).map_err(|e| e.to_string())?;
                let profile: Vec<i64> = (1..3)
                    .map(|a| tl_signature(&t, UnitRootArg::new(a, 3).unwrap()).unwrap())
                    .collect();
                for i in 0..ns.len() {
                    for j in i + 1..ns.len() {
                        let xs = side_values(&profile, 6, ns[i]);
                        let ys = side_values(&profile, 6, ns[j]);
                        for &x in &xs {
                            for &y in &ys {
                                let collide = (x, y) != (0, 0) && (x - y).abs() <= 2 * n0 as i64;
                                check(!collide, || {
                                    format!("n = {} vs {}: sums {x} and {y} collide", ns[i], ns[j])
                                })?;
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    );
}

fn run_witness(stdin: &str) -> Result<(i32, Value), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_knotconc"))
        .args(["--json", "witness", "--n0", "10", "--count", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    let v = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), v))
}

#[test]
fn c9_end_to_end_witness() {
    criterion(
        9,
        "end-to-end witness command",
        Duration::from_secs(5),
        || {
            let (status, v) = run_witness(r#"{"name": "trefoil", "matrix": [[1, -1], [0, 1]]}"#)?;
            check(status == 0, || format!("trefoil exit status {status}"))?;
            check(v["cover"]["r"] == 2, || format!("r = {}", v["cover"]["r"]))?;
            check(v["cover"]["order"] == 3, || {
                format!("order = {}", v["cover"]["order"])
            })?;
            check(v["q"] == 3, || format!("q = {}", v["q"]))?;
            let ns: Vec<u64> = v["schedule"]
                .as_array()
                .ok_or("no schedule")?
                .iter()
                .filter_map(|e| e["n"].as_u64())
                .collect();
            let unknot = run_witness(r#"{"name": "unknot", "matrix": []}"#)?;
            check(unknot.0 == 3, || format!("unknot exit status {}", unknot.0))?;
            check(
                unknot.1["error"]["kind"] == "hypothesis_not_satisfied",
                || format!("unknot error {}", unknot.1["error"]),
            )?;
            check(ns == [11, 77], || {
                format!(
                    "schedule {ns:?}, expected [11, 77] (L = {} for r = 2)",
                    v["terms"]
                )
            })
        },
    );
}
