use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Largest trial divisor attempted before giving up on a composite
/// cofactor.  Covers every value this crate factors with a wide margin.
const TRIAL_BOUND: u64 = 10_000_000;

/// Deterministic primality test by trial division with the 6k±1 wheel.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut p: u64 = 5;
    let mut step: u64 = 2;
    while (p as u128) * (p as u128) <= n as u128 {
        if n % p == 0 {
            return false;
        }
        p += step;
        step = 6 - step;
    }
    true
}

/// Complete factorization of `n` into prime powers, sign ignored.
///
/// Fails on zero, and on inputs whose smallest prime factor exceeds the
/// trial bound with a cofactor too large to certify prime.
pub fn prime_factors(n: &BigInt) -> Result<BTreeMap<u64, u32>> {
    if n.is_zero() {
        return Err(Error::ZeroInput("factoring zero".into()));
    }
    let mut rem = n.abs();
    let mut out = BTreeMap::new();
    let mut p: u64 = 2;
    let mut step: u64 = 4;
    while BigInt::from(p) * p <= rem {
        if p > TRIAL_BOUND {
            return Err(Error::Domain(format!(
                "cofactor of `{n}` resists trial division up to {TRIAL_BOUND}"
            )));
        }
        while (&rem % p).is_zero() {
            rem /= p;
            *out.entry(p).or_insert(0) += 1;
        }
        p = match p {
            2 => 3,
            3 => 5,
            _ => {
                step = 6 - step;
                p + step
            }
        };
    }
    if rem > BigInt::one() {
        let prime = rem.to_u64().ok_or_else(|| {
            Error::Domain(format!("prime cofactor of `{n}` exceeds 64 bits"))
        })?;
        *out.entry(prime).or_insert(0) += 1;
    }
    Ok(out)
}
