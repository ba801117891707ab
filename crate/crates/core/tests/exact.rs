mod common;

use concordance::covers::{
    classify_prime_power_covers, cover_order, cyclotomic_product_identity, HomologyOrder,
    KnotPolynomial,
};
use concordance::exactpoly::arith::{
    as_prime_power, distinct_prime_factors_u64, prime_powers_up_to, totient, valuation,
};
use concordance::exactpoly::{cyclotomic_of, resultant, resultant_sylvester, IntPolynomial};
use concordance::seifert::alexander;
use concordance::signatures::ball::{root_of_unity, Ball, ComplexBall};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #[test]
    fn prs_matches_sylvester(f in poly_strategy(6), g in poly_strategy(6)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(resultant(&f, &g).unwrap(), resultant_sylvester(&f, &g).unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(f in poly_strategy(4), g in poly_strategy(4), h in poly_strategy(4)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let gh = &g * &h;
        let lhs = resultant(&f, &gh).unwrap();
        prop_assert_eq!(&lhs, &(resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap()));
        let lhs_s = resultant_sylvester(&f, &gh).unwrap();
        prop_assert_eq!(lhs_s, resultant_sylvester(&f, &g).unwrap() * resultant_sylvester(&f, &h).unwrap());
    }

    #[test]
    fn resultant_swaps_with_sign(f in poly_strategy(5), g in poly_strategy(5)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if m * n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(resultant(&f, &g).unwrap(), sign * resultant(&g, &f).unwrap());
    }
}

/// `∏_{i<r} Δ(ζ_r^i)` in ball arithmetic.
fn ball_fox_product(delta: &IntPolynomial, r: u64, prec: u32) -> ComplexBall {
    let mut prod = ComplexBall::real(Ball::from_i64(1, prec));
    for i in 0..r {
        let z = root_of_unity(i, r, prec);
        let mut acc = ComplexBall::zero(prec);
        for c in delta.coeffs().iter().rev() {
            acc = &(&acc * &z) + &ComplexBall::real(Ball::from_int(c, prec));
        }
        prod = &prod * &acc;
    }
    prod
}

#[test]
fn fox_orders_lie_in_certified_complex_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..40 {
        let v = common::random_seifert(&mut rng, 6);
        let delta = alexander(&v);
        for r in 2..=24 {
            let fox = KnotPolynomial::new(delta.clone())
                .unwrap()
                .fox_product(r)
                .unwrap();
            // |Δ(ζ)| <= Σ|c_i|, so the product needs about r log2 Σ|c_i| integer bits
            let norm1: BigInt = delta.coeffs().iter().map(|c| c.abs()).sum();
            let prec = 128 + r as u32 * (norm1.bits() as u32 + 1);
            let ball = ball_fox_product(&delta, r, prec);
            assert!(
                (&ball.re - &Ball::from_int(&fox, prec)).contains_zero(),
                "r = {r}, Δ = {delta}"
            );
            assert!(ball.im.contains_zero());
            assert!(
                ball.re.radius_f64() < 0.25,
                "radius {} for {fox}",
                ball.re.radius_f64()
            );
            let order = cover_order(&delta, r).unwrap();
            match order {
                HomologyOrder::Infinite => assert!(fox.is_zero()),
                HomologyOrder::Finite(n) => assert_eq!(BigInt::from(n), fox.abs()),
            }
        }
    }
}

#[test]
fn prime_power_covers_of_random_knots_are_finite() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let delta = alexander(&common::random_seifert(&mut rng, 4));
        for r in prime_powers_up_to(32) {
            assert!(cover_order(&delta, r).unwrap().finite().is_some());
        }
    }
}

/// `|Res(t^big - 1, φ_n)|` via `t^big ≡ t^(big mod n) (mod φ_n)`, reducing
/// to a small Sylvester determinant.
fn fox_cyclotomic_by_reduction(big: u64, n: u64) -> BigUint {
    let phi = cyclotomic_of(n);
    let small = IntPolynomial::t_pow_minus_one((big % n) as usize);
    let (_, rem) = small.divmod_exact(&phi).unwrap();
    if rem.is_zero() {
        return BigUint::zero();
    }
    resultant_sylvester(&phi, &rem)
        .unwrap()
        .abs()
        .to_biguint()
        .unwrap()
}

#[test]
fn product_identity_uses_fibre_size_exponent() {
    for n in 2..=60u64 {
        for p in [2u64, 3, 5, 7] {
            for k in 1..=3u32 {
                let pk = p.pow(k);
                let m = n / num_integer::gcd(n, pk);
                if m < 2 {
                    continue;
                }
                let id = cyclotomic_product_identity(n, p, k).unwrap();
                assert_eq!(id.m, m);
                let b = totient(n) / totient(m);
                assert_eq!(id.b, b);
                let res = fox_cyclotomic_by_reduction(pk, n);
                let phi_m_at_one: BigUint =
                    cyclotomic_of(m).eval_i64(1).abs().to_biguint().unwrap();
                assert_eq!(res, Pow::pow(&phi_m_at_one, b as u32));
                assert_eq!(BigInt::from(res), id.value.abs());
                if k <= valuation(n, p) {
                    assert_eq!(id.b_stated, id.b, "n={n} p={p} k={k}");
                }
            }
        }
    }
}

#[test]
fn classifier_on_single_cyclotomics() {
    for n in 2..=120u64 {
        if as_prime_power(n).is_some() {
            continue;
        }
        let report = classify_prime_power_covers(&cyclotomic_of(n)).unwrap();
        let three_primes = distinct_prime_factors_u64(n).len() >= 3;
        assert_eq!(
            report.all_prime_power_covers_trivial, three_primes,
            "n = {n}"
        );
        assert!(!report.all_covers_trivial);
        match &report.witness_cover {
            None => {
                for r in prime_powers_up_to(64) {
                    assert!(
                        fox_cyclotomic_by_reduction(r, n).is_one(),
                        "n = {n}, r = {r}"
                    );
                }
            }
            Some((r, order)) => {
                assert_eq!(
                    order,
                    &HomologyOrder::Finite(fox_cyclotomic_by_reduction(*r, n))
                );
                assert!(!order.is_trivial());
                // no smaller prime power works
                for s in prime_powers_up_to(*r - 1) {
                    assert!(cover_order(&cyclotomic_of(n), s).unwrap().is_trivial());
                }
            }
        }
    }
}

#[test]
fn classifier_needs_unit_remainder() {
    // φ_30 times the figure-eight polynomial
    let delta = &cyclotomic_of(30) * &IntPolynomial::from_i64s(&[-1, 3, -1]);
    let report = classify_prime_power_covers(&delta).unwrap();
    assert!(!report.all_prime_power_covers_trivial);
    assert_eq!(report.witness_cover.unwrap().0, 2);
}
