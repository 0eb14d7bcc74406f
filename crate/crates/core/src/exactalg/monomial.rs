use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

/// A monomial `X^x Y^y Z^z`.
///
/// The derived `Ord` is the lexicographic order with `X > Y > Z`: exponents
/// of `X` are compared first, then `Y`, then `Z`.  This is an elimination
/// order for `X`, so the `X`-free members of a Gröbner basis generate the
/// intersection with the subring generated by `Y` and `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    pub fn total_degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn involves_x(&self) -> bool {
        self.x > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x + other.x,
            y: self.y + other.y,
            z: self.z + other.z,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    /// `other / self` when `self` divides `other`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                x: other.x - self.x,
                y: other.y - self.y,
                z: other.z - self.z,
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x.max(other.x),
            y: self.y.max(other.y),
            z: self.z.max(other.z),
        }
    }
}

impl Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in [("X", self.x), ("Y", self.y), ("Z", self.z)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(x: u32, y: u32, z: u32) -> Monomial {
        Monomial::new(x, y, z)
    }

    #[test]
    fn lex_order_prefers_x_then_y_then_z() {
        assert!(m(1, 0, 0) > m(0, 2, 0)); // X > Y^2
        assert!(m(0, 2, 0) > m(0, 1, 2)); // Y^2 > Y*Z^2
        assert!(m(0, 0, 3) < m(0, 1, 0)); // Z^3 < Y
        assert!(m(2, 0, 0) > m(1, 5, 5));
        assert_eq!(m(1, 2, 3).cmp(&m(1, 2, 3)), std::cmp::Ordering::Equal);
    }

    #[test]
    fn division_and_lcm() {
        assert_eq!(m(1, 1, 0).try_div(&m(2, 1, 3)), Some(m(1, 0, 3)));
        assert_eq!(m(0, 2, 0).try_div(&m(0, 1, 4)), None);
        assert_eq!(m(1, 0, 2).lcm(&m(0, 3, 1)), m(1, 3, 2));
        assert!(Monomial::ONE.divides(&m(4, 4, 4)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(m(0, 0, 0).to_string(), "1");
        assert_eq!(m(1, 0, 0).to_string(), "X");
        assert_eq!(m(0, 3, 1).to_string(), "Y^3*Z");
        assert_eq!(m(2, 1, 4).to_string(), "X^2*Y*Z^4");
    }
}
