//! Free modules `L[X,Y,Z]^r` and matrices over the polynomial ring.
//!
//! Module terms are ordered term-over-position: monomials are compared first
//! in the lex order with `X > Y > Z`, and ties are broken in favour of the
//! smaller component index.  Matrices use 1-based row and column indices
//! throughout, matching the usual notation for the structured families they
//! represent.

mod matrix;
mod modvec;

pub use matrix::{assemble, augment, build_a, Block, PolyMatrix};
pub use modvec::{ModMonomial, ModuleVector};
