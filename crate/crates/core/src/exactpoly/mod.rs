//! Exact integer-polynomial arithmetic: cyclotomic polynomials, resultants,
//! cyclotomic factor extraction and the supporting integer routines.

pub mod arith;
pub mod cyclotomic;
pub mod det;
pub mod poly;
pub mod resultant;

pub use arith::{
    distinct_prime_factors, phi_inverse_candidates, totient, CyclotomicIndex, Factorizer,
};
pub use cyclotomic::{
    cyclotomic, cyclotomic_factor_extract, cyclotomic_of, CyclotomicFactorization,
};
pub use poly::{poly_add, poly_divmod_exact, poly_mul, IntPolynomial};
pub use resultant::{resultant, resultant_sylvester};
