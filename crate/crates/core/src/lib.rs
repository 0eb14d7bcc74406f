//! Exact-arithmetic verification of the associated primes of the graded
//! components of a local cohomology module of Singh's hypersurface ring
//! `Z[X,Y,Z,U,V,W]/(XU+YV+ZW)`.
//!
//! The negatively graded components of the third local cohomology module of
//! this ring are cokernels of explicit matrices over `Z[X,Y,Z]`.  This crate
//! computes their associated primes along independent routes and checks that
//! the routes agree:
//!
//! * a closed form: the primes dividing some binomial coefficient
//!   `C(d-2, i)` (the set `pi_set(d-2)`), together with the base ideal
//!   `(X,Y,Z)`;
//! * Smith normal forms of the finitely many nonzero graded pieces of the
//!   cokernels of banded binomial matrices (module [`intlat`] + [`singh`]);
//! * Gröbner-basis elimination over `Z[X,Y,Z]` identifying the `X`-free part
//!   of the relevant image module (module [`groebner`]).
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, no
//! floating point anywhere.

pub mod error;
pub mod exactalg;
pub mod freemod;
pub mod groebner;
pub mod intlat;
pub mod selftest;
pub mod singh;

pub use error::{Error, Result};
