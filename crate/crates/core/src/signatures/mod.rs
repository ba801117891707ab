//! Tristram–Levine signatures `sign((1 - ω)V + (1 - ω̄)V^T)` at rational
//! angles `ω = e^{2πi a/q}`, computed with certified ball arithmetic, plus
//! jump analysis at roots of unity.

pub mod ball;
pub mod hermitian;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactpoly::arith::divisors;
use crate::exactpoly::cyclotomic::{cyclotomic_divides, cyclotomic_factor_extract};
use crate::exactpoly::IntPolynomial;
use crate::seifert::{alexander, torus_2q, SeifertMatrix};

use ball::{root_of_unity, Ball, ComplexBall};
use hermitian::certified_inertia;

/// Reduced fraction `a/q`, `0 <= a < q`, standing for `e^{2πi a/q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnitRootArg {
    a: u64,
    q: u64,
}

impl UnitRootArg {
    pub fn new(a: i64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::OutOfRange {
                what: "denominator q",
                min: 1,
                got: 0,
            });
        }
        let a = a.rem_euclid(q as i64) as u64;
        if a == 0 {
            return Ok(UnitRootArg { a: 0, q: 1 });
        }
        let g = a.gcd(&q);
        Ok(UnitRootArg { a: a / g, q: q / g })
    }

    pub fn numerator(&self) -> u64 {
        self.a
    }

    pub fn denominator(&self) -> u64 {
        self.q
    }

    pub fn is_trivial(&self) -> bool {
        self.a == 0
    }

    /// Multiplicative order of `ω`.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// `ω = -1`
    pub fn minus_one() -> Self {
        UnitRootArg { a: 1, q: 2 }
    }
}

impl fmt::Display for UnitRootArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.q)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SignatureConfig {
    pub start_bits: u32,
    pub max_bits: u32,
}

impl Default for SignatureConfig {
    fn default() -> Self {
        SignatureConfig {
            start_bits: 128,
            max_bits: 4096,
        }
    }
}

/// Whether `ω` is a root of the Alexander polynomial, decided exactly:
/// `ω` is a primitive `d`-th root of unity and the question is `φ_d | Δ`.
pub fn at_jump(v: &SeifertMatrix, w: UnitRootArg) -> Result<bool> {
    at_jump_delta(&alexander(v), w)
}

fn at_jump_delta(delta: &IntPolynomial, w: UnitRootArg) -> Result<bool> {
    if w.is_trivial() {
        return Err(Error::TrivialAngle);
    }
    Ok(cyclotomic_divides(w.order(), delta))
}

fn hermitian_form(v: &SeifertMatrix, w: UnitRootArg, prec: u32) -> Vec<Vec<ComplexBall>> {
    let omega = root_of_unity(w.numerator(), w.denominator(), prec);
    let one_minus_c = &Ball::from_i64(1, prec) - &omega.re;
    let s = omega.im;
    let n = v.dim();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| {
                    // (1 - ω) V_jk + (1 - ω̄) V_kj
                    let sym = v.entry(j, k) + v.entry(k, j);
                    let skew = v.entry(k, j) - v.entry(j, k);
                    if j == k {
                        ComplexBall::real(one_minus_c.mul_int(&sym))
                    } else {
                        ComplexBall {
                            re: one_minus_c.mul_int(&sym),
                            im: s.mul_int(&skew),
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// Signature of `(1 - ω)V + (1 - ω̄)V^T`.
pub fn tl_signature(v: &SeifertMatrix, w: UnitRootArg) -> Result<i64> {
    tl_signature_with(v, w, &SignatureConfig::default())
}

pub fn tl_signature_with(v: &SeifertMatrix, w: UnitRootArg, cfg: &SignatureConfig) -> Result<i64> {
    if w.is_trivial() {
        return Err(Error::TrivialAngle);
    }
    if at_jump(v, w)? {
        return Err(Error::JumpPoint {
            a: w.numerator(),
            q: w.denominator(),
        });
    }
    certified_signature(v, w, cfg)
}

fn certified_signature(v: &SeifertMatrix, w: UnitRootArg, cfg: &SignatureConfig) -> Result<i64> {
    if v.dim() == 0 {
        return Ok(0);
    }
    let mut bits = cfg.start_bits;
    loop {
        if let Some(inertia) = certified_inertia(hermitian_form(v, w, bits)) {
            debug_assert_eq!(inertia.positive + inertia.negative, v.dim());
            return Ok(inertia.signature());
        }
        if bits >= cfg.max_bits {
            return Err(Error::SignatureUncertified { bits });
        }
        bits = (bits * 2).min(cfg.max_bits);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileEntry {
    Value(i64),
    Jump,
}

impl ProfileEntry {
    pub fn value(&self) -> Option<i64> {
        match self {
            ProfileEntry::Value(v) => Some(*v),
            ProfileEntry::Jump => None,
        }
    }
}

impl fmt::Display for ProfileEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileEntry::Value(v) => write!(f, "{v}"),
            ProfileEntry::Jump => write!(f, "jump"),
        }
    }
}

/// Signatures at `a/q` for `a = 1, ..., q - 1`. Angle zero is excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    pub q: u64,
    entries: Vec<ProfileEntry>,
}

impl SignatureProfile {
    /// Entry at `a`, `1 <= a < q`.
    pub fn get(&self, a: u64) -> ProfileEntry {
        self.entries[(a - 1) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, ProfileEntry)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, e)| (i as u64 + 1, *e))
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().filter_map(ProfileEntry::value)
    }

    pub fn has_jump(&self) -> bool {
        self.entries.contains(&ProfileEntry::Jump)
    }

    pub fn min(&self) -> Option<i64> {
        self.values().min()
    }

    pub fn max(&self) -> Option<i64> {
        self.values().max()
    }
}

pub fn signature_profile(v: &SeifertMatrix, q: u64) -> Result<SignatureProfile> {
    if q < 2 {
        return Err(Error::OutOfRange {
            what: "q",
            min: 2,
            got: q,
        });
    }
    let delta = alexander(v);
    let cfg = SignatureConfig::default();
    let entries = (1..q)
        .map(|a| {
            let w = UnitRootArg::new(a as i64, q)?;
            if at_jump_delta(&delta, w)? {
                Ok(ProfileEntry::Jump)
            } else {
                certified_signature(v, w, &cfg).map(ProfileEntry::Value)
            }
        })
        .collect::<Result<_>>()?;
    Ok(SignatureProfile { q, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusLemmaReport {
    pub q: u64,
    pub profile: SignatureProfile,
    pub min: i64,
    pub max: i64,
    pub sigma_minus_one: i64,
    pub min_at_least_two: bool,
    pub no_jumps: bool,
    pub sigma_minus_one_is_q_minus_one: bool,
}

impl TorusLemmaReport {
    pub fn holds(&self) -> bool {
        self.min_at_least_two && self.no_jumps && self.sigma_minus_one_is_q_minus_one
    }
}

/// Checks that `T(2, q)` has `σ_{a/q} >= 2` for every `a != 0`, no jump at
/// any `q`-th root of unity, and `σ_{-1} = q - 1`.
pub fn verify_torus_lemma(q: u64) -> Result<TorusLemmaReport> {
    let t = torus_2q(q as i64)?;
    let profile = signature_profile(&t, q)?;
    let no_jumps = !profile.has_jump();
    let sigma_minus_one = tl_signature(&t, UnitRootArg::minus_one())?;
    let min = profile.min().unwrap_or(0);
    let max = profile.max().unwrap_or(0);
    let report = TorusLemmaReport {
        q,
        min,
        max,
        sigma_minus_one,
        min_at_least_two: no_jumps && min >= 2,
        no_jumps,
        sigma_minus_one_is_q_minus_one: sigma_minus_one == q as i64 - 1,
        profile,
    };
    if !report.holds() {
        return Err(Error::LemmaViolation(format!(
            "q = {q}: min {min}, σ(-1) = {sigma_minus_one}, jumps present: {}",
            !no_jumps
        )));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpStep {
    /// The jump sits at `numerator / denominator`.
    pub at: UnitRootArg,
    /// Multiplicity of `φ_d` in the Alexander polynomial.
    pub multiplicity: u32,
    pub before: i64,
    pub after: i64,
}

impl JumpStep {
    /// Change moving counterclockwise across the jump.
    pub fn step_ccw(&self) -> i64 {
        self.after - self.before
    }

    /// Change moving away from angle zero: counterclockwise in the upper
    /// half circle, clockwise in the lower.
    pub fn step_outward(&self) -> i64 {
        if 2 * self.at.numerator() < self.at.denominator() {
            self.step_ccw()
        } else {
            -self.step_ccw()
        }
    }

    pub fn is_upper_half(&self) -> bool {
        2 * self.at.numerator() < self.at.denominator()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpStepReport {
    pub q: u64,
    pub jumps: Vec<JumpStep>,
    /// `σ(-1)`, when `-1` is not itself a jump.
    pub sigma_minus_one: Option<i64>,
    /// Sum of outward steps over the upper half circle.
    pub cumulative_upper: i64,
    pub simple_steps_are_two: bool,
    pub cumulative_matches: bool,
}

impl JumpStepReport {
    pub fn holds(&self) -> bool {
        self.simple_steps_are_two && self.cumulative_matches
    }
}

/// Locates the jumps of the signature function at `2q`-th roots of unity and
/// measures each step between the neighbouring `4q`-th-root angles.
///
/// Requires every root of the Alexander polynomial on the unit circle to be a
/// root of unity of order dividing `2q`; anything else is refused.
pub fn jump_step_check(v: &SeifertMatrix, q: u64) -> Result<JumpStepReport> {
    if q < 1 {
        return Err(Error::OutOfRange {
            what: "q",
            min: 1,
            got: q,
        });
    }
    let delta = alexander(v);
    let cf = cyclotomic_factor_extract(&delta);
    if !cf.remainder.is_unit_monomial() {
        return Err(Error::PreconditionUnverifiable(format!(
            "Alexander polynomial has a non-cyclotomic factor {}",
            cf.remainder.strip_t_power()
        )));
    }
    let orders = divisors(2 * q);
    if let Some((n, _)) = cf.factors.iter().find(|(n, _)| !orders.contains(&n.get())) {
        return Err(Error::PreconditionUnverifiable(format!(
            "cyclotomic factor φ_{n} has roots outside the {}-th roots of unity",
            2 * q
        )));
    }
    let cfg = SignatureConfig::default();
    let sig_at = |num: u64, den: u64| -> Result<i64> {
        if num == 0 || num == den {
            return Ok(0);
        }
        let w = UnitRootArg::new(num as i64, den)?;
        if at_jump_delta(&delta, w)? {
            return Err(Error::PreconditionUnverifiable(format!(
                "sample angle {w} is a jump"
            )));
        }
        certified_signature(v, w, &cfg)
    };
    let mut jumps = Vec::new();
    for a in 1..2 * q {
        let w = UnitRootArg::new(a as i64, 2 * q)?;
        if !at_jump_delta(&delta, w)? {
            continue;
        }
        let before = sig_at(2 * a - 1, 4 * q)?;
        let after = sig_at(2 * a + 1, 4 * q)?;
        jumps.push(JumpStep {
            at: w,
            multiplicity: cf.multiplicity(w.order()),
            before,
            after,
        });
    }
    let simple_steps_are_two = jumps
        .iter()
        .filter(|j| j.multiplicity == 1)
        .all(|j| j.step_ccw().abs() == 2);
    let cumulative_upper = jumps
        .iter()
        .filter(|j| j.is_upper_half())
        .map(JumpStep::step_outward)
        .sum();
    let sigma_minus_one = if at_jump_delta(&delta, UnitRootArg::minus_one())? {
        None
    } else {
        Some(certified_signature(v, UnitRootArg::minus_one(), &cfg)?)
    };
    let cumulative_matches = sigma_minus_one.is_none_or(|s| s == cumulative_upper);
    let report = JumpStepReport {
        q,
        jumps,
        sigma_minus_one,
        cumulative_upper,
        simple_steps_are_two,
        cumulative_matches,
    };
    if !report.holds() {
        return Err(Error::LemmaViolation(format!(
            "jump steps at denominator {}: {:?}",
            2 * q,
            report.jumps
        )));
    }
    Ok(report)
}

/// Extremes of `σ_{a/q}(T(2, s))` over `a = 1, ..., q - 1`, asserting the
/// profile has no jump and its minimum is at least 2.
pub fn torus_profile_extremes(s: u64, q: u64) -> Result<(i64, i64)> {
    let t = torus_2q(s as i64)?;
    let profile = signature_profile(&t, q)?;
    match (profile.has_jump(), profile.min(), profile.max()) {
        (false, Some(lo), Some(hi)) if lo >= 2 => Ok((lo, hi)),
        _ => Err(Error::LemmaViolation(format!(
            "T(2,{s}) profile at denominator {q} is not bounded below by 2: {:?}",
            profile.iter().collect::<Vec<_>>()
        ))),
    }
}
