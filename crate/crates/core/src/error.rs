use num_bigint::BigInt;
use thiserror::Error;

use crate::covers::ClassificationReport;
use crate::seifert::ValidityFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("divisor leading coefficient {0} is not a unit")]
    DivisorNotMonicUnit(BigInt),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("resultant of the zero polynomial")]
    ZeroPolynomial,

    #[error("cofactor {cofactor} survives trial division up to {bound}")]
    FactorizationLimit { cofactor: BigInt, bound: u64 },

    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifertMatrix(ValidityFailure),

    #[error("torus parameter q = {0} must be odd and at least 3")]
    BadTorusParameter(i64),

    #[error("not the Alexander polynomial of a knot: value at t = 1 is {0}, expected ±1")]
    NotAKnotPolynomial(BigInt),

    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),

    #[error("{0} is not a prime")]
    NotAPrime(u64),

    #[error("{what} must be at least {min}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("no nontrivial prime-power cover found for r <= {bound}")]
    WitnessSearchExhausted { bound: u64 },

    #[error(
        "cyclotomic product identity violated for n = {n}, p^k = {p}^{k}: |{value}| != {predicted}"
    )]
    IdentityViolation {
        n: u64,
        p: u64,
        k: u32,
        value: BigInt,
        predicted: BigInt,
    },

    #[error("cyclotomic product identity degenerates: p^k = {p}^{k} is a multiple of n = {n}")]
    DegenerateCase { n: u64, p: u64, k: u32 },

    #[error("angle {a}/{q} is a root of the Alexander polynomial; the signature jumps there")]
    JumpPoint { a: u64, q: u64 },

    #[error("angle 0 gives the zero form and has no signature")]
    TrivialAngle,

    #[error("signature not certified at {bits} bits of precision")]
    SignatureUncertified { bits: u32 },

    #[error("torus-knot signature lemma violated: {0}")]
    LemmaViolation(String),

    #[error("precondition cannot be verified: {0}")]
    PreconditionUnverifiable(String),

    #[error("witness schedule separation failure: {0}")]
    SeparationFailure(String),

    #[error("Alexander polynomial does not meet the family hypothesis")]
    HypothesisNotSatisfied(Box<ClassificationReport>),
}
