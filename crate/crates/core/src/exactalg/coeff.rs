use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Which ground ring the coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// The ring of integers (a principal ideal domain).
    Int,
    /// The field of rationals.
    Rat,
}

impl Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Int => write!(f, "Z"),
            Domain::Rat => write!(f, "Q"),
        }
    }
}

/// Exact coefficient arithmetic over `Z` or `Q`.
///
/// All operations are exact at any magnitude.  The PID-specific operations
/// (`reduction_step` with a nonzero remainder, `bezout`) drive the
/// Gröbner-basis layer: over a field every nonzero coefficient is a unit and
/// division always succeeds with remainder zero, while over the integers a
/// coefficient is rewritten into its canonical Euclidean remainder.
pub trait Coeff:
    Clone + Eq + Zero + One + Signed + Display + Debug + Send + Sync + 'static
{
    const DOMAIN: Domain;

    /// Parses a coefficient literal: an integer, or `a/b` over `Q`.
    fn parse_coeff(text: &str) -> Result<Self>;

    /// One Euclidean reduction step of `c` by `divisor`: returns `(q, r)`
    /// with `c = q * divisor + r` and `r` canonical, or `None` when the step
    /// would not change `c` (i.e. `q = 0`).
    ///
    /// Over `Q` the remainder is always `0`; over `Z` it is the
    /// representative of `c` modulo `|divisor|` in `[0, |divisor|)`.
    fn reduction_step(c: &Self, divisor: &Self) -> Option<(Self, Self)>;

    /// Multipliers `(ma, mb)` with `ma * a = mb * b = lcm(a, b)`, where the
    /// lcm is taken positive over `Z` and is `1` over a field.
    fn lcm_multipliers(a: &Self, b: &Self) -> (Self, Self);

    /// Bézout data `(g, u, v)` with `g = gcd(a, b) = u*a + v*b`, `g >= 0`.
    /// `None` over a field, where G-polynomials are not used.
    fn bezout(a: &Self, b: &Self) -> Option<(Self, Self, Self)>;

    /// The unit `u` such that `u * lc` is in canonical form: positive over
    /// `Z`, equal to `1` over `Q` (so scaling by `u` makes a vector monic).
    fn normalizing_unit(lc: &Self) -> Self;
}

impl Coeff for BigInt {
    const DOMAIN: Domain = Domain::Int;

    fn parse_coeff(text: &str) -> Result<Self> {
        if text.contains('/') {
            return Err(Error::Domain(format!(
                "rational coefficient `{text}` in integer domain"
            )));
        }
        text.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer `{text}`: {e}")))
    }

    fn reduction_step(c: &Self, divisor: &Self) -> Option<(Self, Self)> {
        debug_assert!(!divisor.is_zero());
        let modulus = divisor.abs();
        let r = c.mod_floor(&modulus);
        if &r == c {
            return None;
        }
        // c - r is an exact multiple of divisor.
        let q = (c - &r) / divisor;
        Some((q, r))
    }

    fn lcm_multipliers(a: &Self, b: &Self) -> (Self, Self) {
        debug_assert!(!a.is_zero() && !b.is_zero());
        let l = a.lcm(b);
        (&l / a, l / b)
    }

    fn bezout(a: &Self, b: &Self) -> Option<(Self, Self, Self)> {
        let ext = a.extended_gcd(b);
        debug_assert!(!ext.gcd.is_negative());
        debug_assert_eq!(ext.gcd, &ext.x * a + &ext.y * b);
        Some((ext.gcd, ext.x, ext.y))
    }

    fn normalizing_unit(lc: &Self) -> Self {
        if lc.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

impl Coeff for BigRational {
    const DOMAIN: Domain = Domain::Rat;

    fn parse_coeff(text: &str) -> Result<Self> {
        text.parse::<BigRational>()
            .map_err(|e| Error::Parse(format!("bad rational `{text}`: {e}")))
    }

    fn reduction_step(c: &Self, divisor: &Self) -> Option<(Self, Self)> {
        debug_assert!(!divisor.is_zero());
        Some((c / divisor, BigRational::zero()))
    }

    fn lcm_multipliers(a: &Self, b: &Self) -> (Self, Self) {
        (a.recip(), b.recip())
    }

    fn bezout(_a: &Self, _b: &Self) -> Option<(Self, Self, Self)> {
        None
    }

    fn normalizing_unit(lc: &Self) -> Self {
        lc.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn integer_reduction_step_is_canonical() {
        // 3 = 1*2 + 1
        assert_eq!(
            Coeff::reduction_step(&z(3), &z(2)),
            Some((z(1), z(1)))
        );
        // already in [0, 2): no step
        assert_eq!(Coeff::reduction_step(&z(1), &z(2)), None);
        assert_eq!(Coeff::reduction_step(&z(0), &z(5)), None);
        // negative value is lifted into the canonical range
        assert_eq!(
            Coeff::reduction_step(&z(-1), &z(2)),
            Some((z(-1), z(1)))
        );
        // negative divisor: 3 = (-1)*(-2) + 1
        assert_eq!(
            Coeff::reduction_step(&z(3), &z(-2)),
            Some((z(-1), z(1)))
        );
    }

    #[test]
    fn integer_bezout_identity() {
        for (a, b) in [(12, 18), (-4, 6), (7, 1), (5, -15), (1, 1)] {
            let (g, u, v) = Coeff::bezout(&z(a), &z(b)).unwrap();
            assert_eq!(g, u * z(a) + v * z(b));
            assert!(g > z(0));
        }
    }

    #[test]
    fn integer_lcm_multipliers() {
        let (ma, mb) = Coeff::lcm_multipliers(&z(4), &z(6));
        assert_eq!(ma * z(4), z(12));
        assert_eq!(mb * z(6), z(12));
        let (ma, mb) = Coeff::lcm_multipliers(&z(-4), &z(6));
        assert_eq!(&ma * z(-4), &mb * z(6));
    }

    #[test]
    fn rational_literals_parse() {
        let half: BigRational = Coeff::parse_coeff("1/2").unwrap();
        assert_eq!(half, BigRational::new(z(1), z(2)));
        let three: BigRational = Coeff::parse_coeff("3").unwrap();
        assert_eq!(three, BigRational::from_integer(z(3)));
        assert!(<BigInt as Coeff>::parse_coeff("1/2").is_err());
    }
}
