//! Exact and certified invariants of knots given by Seifert matrices:
//! Alexander polynomials, homology of cyclic branched covers,
//! Tristram-Levine signatures, and separation schedules for families of
//! knots sharing a Seifert matrix.

pub mod covers;
pub mod error;
pub mod exactpoly;
pub mod obstruction;
pub mod seifert;
pub mod signatures;

pub use error::{Error, Result};
pub use exactpoly::IntPolynomial;
pub use seifert::SeifertMatrix;
