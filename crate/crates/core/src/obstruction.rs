//! Separation schedules for families of knots sharing one Seifert matrix.
//!
//! Family member `K_i` is `K` with every band tied into `J_i`, the `n_i`-fold
//! sum of a `(2, s)` torus knot. A concordance `K_i ~ K_j` forces
//!
//! ```text
//! c_i + Σ_l σ_{a_l/q}(J_i) = c_j + Σ_l σ_{b_l/q}(J_j),   |c_i|, |c_j| <= N0,
//! ```
//!
//! with `L = 2 g p^k` terms per side and at least one nonzero character value
//! on some side. Every nonzero term of side `i` lies in `[n_i S_min, n_i S_max]`
//! with `S_min >= 2`, so choosing each `n_{i+1}` to push the range of side
//! `i + 1` more than `2 N0` past side `i` rules the equality out.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::covers::{
    classify_prime_power_covers, max_prime_power_divisor, ClassificationReport, HomologyOrder,
    KnotPolynomial,
};
use crate::error::{Error, Result};
use crate::exactpoly::arith::{as_prime_power, is_prime};
use crate::seifert::{alexander, torus_2q, SeifertMatrix};
use crate::signatures::{signature_profile, torus_profile_extremes};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParameters {
    pub genus: u64,
    pub p: u64,
    pub k: u32,
    /// Character modulus, a prime power dividing the cover's homology order.
    pub q: u64,
    /// Bound on `|σ_1(τ(K, χ))|` over all characters.
    pub n0: u64,
    /// Odd `s` such that `J_i` are multiples of `T(2, s)`.
    pub torus: u64,
}

impl FamilyParameters {
    /// Parameters with the default torus knot: `T(2, q)` for odd `q`,
    /// `T(2, q + 1)` for even `q`.
    pub fn new(genus: u64, p: u64, k: u32, q: u64, n0: u64) -> Result<Self> {
        if genus < 1 {
            return Err(Error::OutOfRange {
                what: "genus",
                min: 1,
                got: genus,
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
        if q < 2 {
            return Err(Error::OutOfRange {
                what: "q",
                min: 2,
                got: q,
            });
        }
        let torus = if q % 2 == 1 { q } else { q + 1 };
        Ok(FamilyParameters {
            genus,
            p,
            k,
            q,
            n0,
            torus,
        })
    }

    /// Number of signature terms per side, `2 g p^k`.
    pub fn terms(&self) -> u64 {
        2 * self.genus * self.p.pow(self.k)
    }
}

/// `(S_min, S_max)` of `σ_{a/q}(T(2, q))` over `a = 1, ..., q - 1`.
pub fn profile_extremes(q: u64) -> Result<(i64, i64)> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::BadTorusParameter(q as i64));
    }
    torus_profile_extremes(q, q)
}

/// Range `[n S_min, L n S_max]` of `Σ_l n σ_{a_l/q}(T)` over assignments with
/// at least one nonzero `a_l`.
pub fn sum_range(n: &BigInt, params: &FamilyParameters, extremes: (i64, i64)) -> (BigInt, BigInt) {
    let (s_min, s_max) = extremes;
    let lo = n * s_min;
    let hi = n * BigInt::from(params.terms()) * s_max;
    (lo, hi)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScheduleEntry {
    pub n: BigInt,
    pub lo: BigInt,
    pub hi: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSchedule {
    pub params: FamilyParameters,
    pub s_min: i64,
    pub s_max: i64,
    /// `σ_{a/q}(T(2, s))` for `a = 1, ..., q - 1`.
    pub profile: Vec<i64>,
    pub entries: Vec<ScheduleEntry>,
}

impl WitnessSchedule {
    pub fn multiplicities(&self) -> Vec<BigInt> {
        self.entries.iter().map(|e| e.n.clone()).collect()
    }
}

/// Greedy schedule: each `n_i` is the least multiplicity whose lower end
/// clears the previous upper end by more than `2 N0`.
pub fn witness_schedule(params: &FamilyParameters, count: usize) -> Result<WitnessSchedule> {
    let t = torus_2q(params.torus as i64)?;
    let profile = signature_profile(&t, params.q)?;
    let values: Vec<i64> = profile.values().collect();
    let (s_min, s_max) = torus_profile_extremes(params.torus, params.q)?;
    debug_assert_eq!(values.len() as u64, params.q - 1);
    Ok(schedule_from_profile(params, values, (s_min, s_max), count))
}

/// Greedy schedule from an already computed profile.
pub fn schedule_from_profile(
    params: &FamilyParameters,
    profile: Vec<i64>,
    extremes: (i64, i64),
    count: usize,
) -> WitnessSchedule {
    let (s_min, s_max) = extremes;
    assert!(s_min >= 1, "signature profile must be positive");
    let gap = BigInt::from(2 * params.n0);
    let s = BigInt::from(s_min);
    let mut entries: Vec<ScheduleEntry> = Vec::with_capacity(count);
    for _ in 0..count {
        let floor = match entries.last() {
            None => &gap + 1,
            Some(prev) => &gap + &prev.hi + 1,
        };
        let n = Integer::div_ceil(&floor, &s).max(BigInt::one());
        let (lo, hi) = sum_range(&n, params, extremes);
        entries.push(ScheduleEntry { n, lo, hi });
    }
    WitnessSchedule {
        params: params.clone(),
        s_min,
        s_max,
        profile,
        entries,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceSummary {
    /// `q^L`, per side.
    pub assignments: u64,
    /// Min and max of `Σ_l σ_{a_l/q}(T)` over nonzero assignments.
    pub base_min: i64,
    pub base_max: i64,
    pub collisions: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub pairs_checked: usize,
    pub brute_force: Option<BruteForceSummary>,
}

/// Largest `L` and `q` for which [`verify_separation`] also enumerates.
pub const BRUTE_FORCE_MAX_TERMS: u64 = 8;
pub const BRUTE_FORCE_MAX_Q: u64 = 7;

/// Every value of `Σ_l σ(a_l)` over assignments `a ∈ Z_q^L` other than
/// `a = 0`, by full enumeration; `profile[a - 1] = σ(a)` and `σ(0) = 0`.
pub fn enumerate_character_sums(profile: &[i64], terms: u64) -> (BTreeSet<i64>, u64) {
    let q = profile.len() as u64 + 1;
    let l = terms as usize;
    let mut digits = vec![0u64; l];
    let mut sums = BTreeSet::new();
    let mut count = 0u64;
    loop {
        count += 1;
        if digits.iter().any(|&d| d != 0) {
            let s: i64 = digits
                .iter()
                .map(|&d| if d == 0 { 0 } else { profile[(d - 1) as usize] })
                .sum();
            sums.insert(s);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == l {
                return (sums, count);
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn fail(msg: String) -> Error {
    Error::SeparationFailure(msg)
}

/// Checks the schedule invariants and that no two members can satisfy the
/// concordance equality for any offsets in `[-N0, N0]`; small cases are
/// additionally confirmed by enumerating every character assignment.
pub fn verify_separation(schedule: &WitnessSchedule) -> Result<SeparationReport> {
    let params = &schedule.params;
    let gap = BigInt::from(2 * params.n0);
    let l = params.terms();
    let entries = &schedule.entries;
    if schedule.s_min < 1 {
        return Err(fail(format!("S_min = {} is not positive", schedule.s_min)));
    }
    for (i, e) in entries.iter().enumerate() {
        if e.n < BigInt::one() {
            return Err(fail(format!("entry {i}: multiplicity {} < 1", e.n)));
        }
        let (lo, hi) = sum_range(&e.n, params, (schedule.s_min, schedule.s_max));
        if e.lo != lo || e.hi != hi {
            return Err(fail(format!(
                "entry {i}: range [{}, {}] differs from [{lo}, {hi}]",
                e.lo, e.hi
            )));
        }
        if i == 0 && e.lo <= gap {
            return Err(fail(format!("entry 0: lower end {} <= 2 N0 = {gap}", e.lo)));
        }
        if i > 0 {
            let prev = &entries[i - 1];
            if e.n <= prev.n {
                return Err(fail(format!(
                    "entry {i}: multiplicity {} not above {}",
                    e.n, prev.n
                )));
            }
            if e.lo <= &gap + &prev.hi {
                return Err(fail(format!(
                    "entries {} and {i}: lower end {} <= 2 N0 + {}",
                    i - 1,
                    e.lo,
                    prev.hi
                )));
            }
        }
    }
    let mut pairs = 0;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            let (a, b) = (&entries[i], &entries[j]);
            // side i may be trivial (sum 0); side j nonzero
            let disjoint = b.lo > &a.hi + &gap && b.lo > gap && a.lo > gap;
            if !disjoint {
                return Err(fail(format!(
                    "entries {i} and {j} have overlapping padded ranges"
                )));
            }
            pairs += 1;
        }
    }

    let q = params.q;
    let brute_force = if l <= BRUTE_FORCE_MAX_TERMS && q <= BRUTE_FORCE_MAX_Q && !entries.is_empty()
    {
        if schedule.profile.len() as u64 != q - 1 {
            return Err(fail(format!(
                "profile has {} entries, expected {}",
                schedule.profile.len(),
                q - 1
            )));
        }
        let (base, assignments) = enumerate_character_sums(&schedule.profile, l);
        let n0 = params.n0 as i128;
        let side = |n: &BigInt| -> Result<Vec<i128>> {
            let n = n
                .to_i128()
                .ok_or_else(|| fail("multiplicity too large to enumerate".into()))?;
            let mut v: Vec<i128> = base.iter().map(|&s| n * s as i128).collect();
            v.push(0);
            v.sort_unstable();
            Ok(v)
        };
        let mut collisions = 0u64;
        for i in 0..entries.len() {
            let xs = side(&entries[i].n)?;
            for e in &entries[i + 1..] {
                let ys = side(&e.n)?;
                for &x in &xs {
                    for &y in &ys {
                        if (x, y) != (0, 0) && (x - y).abs() <= 2 * n0 {
                            collisions += 1;
                        }
                    }
                }
            }
        }
        if collisions > 0 {
            return Err(fail(format!(
                "{collisions} colliding character assignments"
            )));
        }
        Some(BruteForceSummary {
            assignments,
            base_min: *base.first().unwrap_or(&0),
            base_max: *base.last().unwrap_or(&0),
            collisions,
        })
    } else {
        None
    };
    Ok(SeparationReport {
        pairs_checked: pairs,
        brute_force,
    })
}

/// Manual choices replacing the automatically derived cover and modulus.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub p: Option<u64>,
    pub k: Option<u32>,
    pub q: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub matrix: SeifertMatrix,
    pub classification: ClassificationReport,
    /// Cover degree `r = p^k`.
    pub cover_degree: u64,
    pub cover_order: HomologyOrder,
    pub schedule: WitnessSchedule,
    pub separation: SeparationReport,
    /// Whether `q` divides the cover's homology order (always for derived `q`).
    pub q_divides_order: bool,
}

impl FamilyReport {
    pub const SHARED_MATRIX_NOTE: &'static str =
        "every family member is the input knot with its bands tied into J_i; the Seifert matrix is unchanged";
    pub const OVERAPPROXIMATION_NOTE: &'static str =
        "signature-sum ranges allow every character value on every lift; genuine characters form a subset, so the separation is conservative";
}

/// Family parameters for `V`: witness cover, its order and the modulus `q`.
pub fn family_parameters(
    v: &SeifertMatrix,
    n0: u64,
    overrides: &Overrides,
) -> Result<(FamilyParameters, ClassificationReport, u64, HomologyOrder)> {
    let delta = alexander(v);
    let classification = classify_prime_power_covers(&delta)?;
    if !classification.supports_family() {
        return Err(Error::HypothesisNotSatisfied(Box::new(classification)));
    }
    let (r0, _) = classification
        .witness_cover
        .clone()
        .expect("witness present when the hypothesis holds");
    let (p0, k0) = as_prime_power(r0).expect("witness covers are prime powers");
    let p = overrides.p.unwrap_or(p0);
    let k = overrides
        .k
        .unwrap_or(if overrides.p.is_some() { 1 } else { k0 });
    if !is_prime(p) {
        return Err(Error::NotAPrime(p));
    }
    let r = p.checked_pow(k).ok_or(Error::OutOfRange {
        what: "p^k fits in 64 bits; k",
        min: 1,
        got: k as u64,
    })?;
    let order = KnotPolynomial::new(delta)?.cover_order(r)?;
    let q = match overrides.q {
        Some(q) => {
            if as_prime_power(q).is_none() {
                return Err(Error::NotAPrimePower(q));
            }
            q
        }
        None => {
            let n = match &order {
                HomologyOrder::Finite(n) if !n.is_one() => n.clone(),
                _ => {
                    return Err(Error::PreconditionUnverifiable(format!(
                        "the {r}-fold cover has homology order {order}; no prime-power modulus"
                    )))
                }
            };
            max_prime_power_divisor(&n)?.to_u64().ok_or_else(|| {
                Error::PreconditionUnverifiable("modulus q exceeds 64 bits".into())
            })?
        }
    };
    let params = FamilyParameters::new(v.genus() as u64, p, k, q, n0)?;
    Ok((params, classification, r, order))
}

/// Bundles cover data, schedule and separation check for `V`.
pub fn family_report(v: &SeifertMatrix, schedule: &WitnessSchedule) -> Result<FamilyReport> {
    let params = &schedule.params;
    let delta = alexander(v);
    let classification = classify_prime_power_covers(&delta)?;
    if !classification.supports_family() {
        return Err(Error::HypothesisNotSatisfied(Box::new(classification)));
    }
    let r = params.p.pow(params.k);
    let order = KnotPolynomial::new(delta)?.cover_order(r)?;
    let q_divides_order = match &order {
        HomologyOrder::Finite(n) => (n % BigUint::from(params.q)).is_zero() && !n.is_one(),
        HomologyOrder::Infinite => false,
    };
    let separation = verify_separation(schedule)?;
    Ok(FamilyReport {
        matrix: v.clone(),
        classification,
        cover_degree: r,
        cover_order: order,
        schedule: schedule.clone(),
        separation,
        q_divides_order,
    })
}

/// Full pipeline: parameters, schedule of `count` members, separation.
pub fn build_family(
    v: &SeifertMatrix,
    n0: u64,
    count: usize,
    overrides: &Overrides,
) -> Result<FamilyReport> {
    let (params, _, _, _) = family_parameters(v, n0, overrides)?;
    let schedule = witness_schedule(&params, count)?;
    family_report(v, &schedule)
}
