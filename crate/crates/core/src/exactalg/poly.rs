use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, Monomial};

/// A sparse polynomial in `X, Y, Z` with coefficients in `C`.
///
/// Terms are kept in a `BTreeMap` keyed by monomial, so iteration is in
/// ascending lex order and the leading term is the last entry.  Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(C::one(), Monomial::ONE)
    }

    pub fn term(coeff: C, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Polynomial { terms }
    }

    pub fn constant(coeff: C) -> Self {
        Self::term(coeff, Monomial::ONE)
    }

    pub fn variable(name: char) -> Self {
        let mono = match name {
            'X' => Monomial::new(1, 0, 0),
            'Y' => Monomial::new(0, 1, 0),
            'Z' => Monomial::new(0, 0, 1),
            other => panic!("unknown variable `{other}`"),
        };
        Self::term(C::one(), mono)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, mono: &Monomial) -> Option<&C> {
        self.terms.get(mono)
    }

    /// The lex-greatest term, or `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn involves_x(&self) -> bool {
        self.terms.keys().any(Monomial::involves_x)
    }

    pub fn add_term(&mut self, coeff: C, mono: Monomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, coeff: &C) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * coeff.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, coeff: &C, mono: &Monomial) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone() * coeff.clone()))
                .collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Monomial) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    /// Substitutes `Y = 1, Z = 1`, leaving a polynomial in `X` alone.
    pub fn eval_y1_z1(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(c.clone(), Monomial::new(m.x, 0, 0));
        }
        out
    }

    /// The constant value, when the polynomial has no variable at all.
    pub fn as_constant(&self) -> Option<C> {
        if self.terms.is_empty() {
            return Some(C::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::ONE) {
                return Some(c.clone());
            }
        }
        None
    }
}

impl<C: Coeff> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), *m);
        }
        out
    }
}

impl<C: Coeff> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), *m);
        }
        out
    }
}

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(c1.clone() * c2.clone(), m1.mul(m2));
            }
        }
        out
    }
}

impl<C: Coeff> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;

    type P = Polynomial<BigInt>;

    fn var(name: char) -> P {
        P::variable(name)
    }

    fn c(n: i64) -> P {
        P::constant(BigInt::from(n))
    }

    #[test]
    fn ring_identities() {
        let y = var('Y');
        let z = var('Z');
        let prod = (&y + &z) * (&y - &z);
        let expected = &(&y * &y) - &(&z * &z);
        assert_eq!(prod, expected);
        assert_eq!(&prod + &Polynomial::zero(), prod);
        assert_eq!(&prod * &P::one(), prod);
        assert!((&prod - &prod).is_zero());
    }

    #[test]
    fn leading_term_is_lex_greatest() {
        // 2*Y^3 + 5*Z^4 leads with (Y^3, 2) since Y > Z lexicographically.
        let p = &(&c(2) * &(&var('Y') * &(&var('Y') * &var('Y'))))
            + &(&c(5) * &(&var('Z') * &(&var('Z') * &(&var('Z') * &var('Z')))));
        let (m, co) = p.leading_term().unwrap();
        assert_eq!(*m, Monomial::new(0, 3, 0));
        assert_eq!(*co, BigInt::from(2));
        assert_eq!(P::zero().leading_term(), None);
    }

    #[test]
    fn display_is_descending_with_signs() {
        let p = &(&c(2) * &var('Y')) - &(&c(3) * &var('Z'));
        assert_eq!(p.to_string(), "2*Y - 3*Z");
        let q = &c(-1) * &var('X');
        assert_eq!(q.to_string(), "-X");
        assert_eq!(P::zero().to_string(), "0");
        let r = &(&var('X') + &c(7)) + &var('Z');
        assert_eq!(r.to_string(), "X + Z + 7");
    }

    #[test]
    fn rational_scaling() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let y: Polynomial<BigRational> = Polynomial::variable('Y');
        let p = y.scale(&half);
        assert_eq!(p.to_string(), "1/2*Y");
        assert_eq!(p.scale(&BigRational::from_integer(BigInt::from(2))), y);
    }

    #[test]
    fn eval_at_y1_z1_collapses_to_x() {
        let p = &(&var('X') * &var('Y')) + &(&var('X') * &var('Z'));
        assert_eq!(p.eval_y1_z1(), &c(2) * &var('X'));
    }
}
