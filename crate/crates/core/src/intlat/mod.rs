//! Integer linear algebra: exact determinants, Smith normal form with
//! unimodular transforms, minor gcds, and the torsion primes of a
//! cokernel.  Everything is verified as it is computed; the Smith routine
//! asserts its own transform identity and divisor chain on every call.

mod matrix;
mod primes;
mod snf;

pub use matrix::IntMatrix;
pub use primes::{is_prime, prime_factors};
pub use snf::{minor_gcd, smith, torsion_primes, SmithNormalForm};
