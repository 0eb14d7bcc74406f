use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Display};

use crate::exactalg::{Coeff, Monomial, Polynomial};

/// A monomial `m * e_pos` of a free module, with 1-based component index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModMonomial {
    pub mono: Monomial,
    pub pos: usize,
}

impl ModMonomial {
    pub fn new(mono: Monomial, pos: usize) -> Self {
        ModMonomial { mono, pos }
    }

    /// Componentwise divisibility: same position and dividing monomial.
    pub fn divides(&self, other: &ModMonomial) -> bool {
        self.pos == other.pos && self.mono.divides(&other.mono)
    }

    pub fn try_div(&self, other: &ModMonomial) -> Option<Monomial> {
        if self.pos == other.pos {
            self.mono.try_div(&other.mono)
        } else {
            None
        }
    }
}

impl Ord for ModMonomial {
    /// Term over position: compare monomials lex first, and on ties prefer
    /// the smaller component index.
    fn cmp(&self, other: &Self) -> Ordering {
        self.mono
            .cmp(&other.mono)
            .then_with(|| other.pos.cmp(&self.pos))
    }
}

impl PartialOrd for ModMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Display for ModMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "e{}", self.pos)
        } else {
            write!(f, "{}*e{}", self.mono, self.pos)
        }
    }
}

/// An element of `L[X,Y,Z]^rank`, stored sparsely by component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector<C: Coeff> {
    rank: usize,
    components: BTreeMap<usize, Polynomial<C>>,
}

impl<C: Coeff> ModuleVector<C> {
    pub fn zero(rank: usize) -> Self {
        ModuleVector {
            rank,
            components: BTreeMap::new(),
        }
    }

    /// The standard basis vector `e_pos`.
    pub fn unit(rank: usize, pos: usize) -> Self {
        Self::from_term(rank, C::one(), ModMonomial::new(Monomial::ONE, pos))
    }

    pub fn from_term(rank: usize, coeff: C, mm: ModMonomial) -> Self {
        let mut v = Self::zero(rank);
        v.add_term(coeff, mm);
        v
    }

    /// Wraps a polynomial as a vector in the rank-1 module.
    pub fn from_poly(p: Polynomial<C>) -> Self {
        let mut v = Self::zero(1);
        v.set_component(1, p);
        v
    }

    pub fn from_components(components: Vec<Polynomial<C>>) -> Self {
        let rank = components.len();
        let mut v = Self::zero(rank);
        for (idx, p) in components.into_iter().enumerate() {
            v.set_component(idx + 1, p);
        }
        v
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// The polynomial in component `pos` (1-based).
    pub fn component(&self, pos: usize) -> Polynomial<C> {
        assert!(
            pos >= 1 && pos <= self.rank,
            "component {pos} out of range 1..={}",
            self.rank
        );
        self.components.get(&pos).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn set_component(&mut self, pos: usize, p: Polynomial<C>) {
        assert!(
            pos >= 1 && pos <= self.rank,
            "component {pos} out of range 1..={}",
            self.rank
        );
        if p.is_zero() {
            self.components.remove(&pos);
        } else {
            self.components.insert(pos, p);
        }
    }

    /// Nonzero components in ascending position order.
    pub fn nonzero_components(&self) -> impl Iterator<Item = (usize, &Polynomial<C>)> {
        self.components.iter().map(|(pos, p)| (*pos, p))
    }

    pub fn coeff_of(&self, mm: &ModMonomial) -> Option<&C> {
        self.components.get(&mm.pos).and_then(|p| p.coeff_of(&mm.mono))
    }

    pub fn add_term(&mut self, coeff: C, mm: ModMonomial) {
        assert!(mm.pos >= 1 && mm.pos <= self.rank);
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .components
            .entry(mm.pos)
            .or_insert_with(Polynomial::zero);
        entry.add_term(coeff, mm.mono);
        if entry.is_zero() {
            self.components.remove(&mm.pos);
        }
    }

    /// The greatest term in the term-over-position order.
    pub fn leading(&self) -> Option<(ModMonomial, C)> {
        let mut best: Option<(ModMonomial, C)> = None;
        for (pos, p) in &self.components {
            let (mono, coeff) = p.leading_term().expect("stored components are nonzero");
            let mm = ModMonomial::new(*mono, *pos);
            if best.as_ref().map_or(true, |(bm, _)| mm > *bm) {
                best = Some((mm, coeff.clone()));
            }
        }
        best
    }

    pub fn scale(&self, coeff: &C) -> Self {
        self.mul_term(coeff, &Monomial::ONE)
    }

    /// Multiplies the whole vector by `coeff * mono`.
    pub fn mul_term(&self, coeff: &C, mono: &Monomial) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.rank);
        }
        ModuleVector {
            rank: self.rank,
            components: self
                .components
                .iter()
                .map(|(pos, p)| (*pos, p.mul_term(coeff, mono)))
                .collect(),
        }
    }

    /// `self += other * (coeff * mono)`, the workhorse of reduction.
    pub fn add_scaled(&mut self, other: &Self, coeff: &C, mono: &Monomial) {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        if coeff.is_zero() {
            return;
        }
        for (pos, p) in &other.components {
            for (m, c) in p.terms() {
                self.add_term(c.clone() * coeff.clone(), ModMonomial::new(m.mul(mono), *pos));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one(), &Monomial::ONE);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &(-C::one()), &Monomial::ONE);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-C::one()))
    }

    pub fn involves_x(&self) -> bool {
        self.components.values().any(Polynomial::involves_x)
    }

    /// Scales so the leading coefficient is canonical: positive over the
    /// integers, `1` over the rationals.  Zero vectors pass through.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&C::normalizing_unit(&lc)),
        }
    }

    pub fn num_terms(&self) -> usize {
        self.components.values().map(Polynomial::num_terms).sum()
    }

    /// All terms in descending term-over-position order.
    pub fn terms_desc(&self) -> Vec<(ModMonomial, C)> {
        let mut terms: Vec<(ModMonomial, C)> = self
            .components
            .iter()
            .flat_map(|(pos, p)| {
                p.terms().map(|(m, c)| (ModMonomial::new(*m, *pos), c.clone()))
            })
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        terms
    }

    pub fn component_strings(&self) -> Vec<String> {
        (1..=self.rank).map(|pos| self.component(pos).to_string()).collect()
    }
}

impl<C: Coeff> Display for ModuleVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.component_strings().join(", "))
    }
}
