//! Exact coefficient arithmetic, monomials in `X, Y, Z`, and sparse
//! multivariate polynomials over `Z` or `Q`.
//!
//! The ground ring is either the integers (a PID) or the rationals (a
//! field); the choice is made statically through the [`Coeff`] trait, so the
//! Gröbner machinery upstream can ask for the divisibility and Bézout
//! operations it needs without runtime dispatch.  Monomials are fixed to the
//! three variables `X > Y > Z` and carry the lexicographic order.

mod coeff;
mod monomial;
mod parse;
mod poly;

pub use coeff::{Coeff, Domain};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::Polynomial;
