//! Gröbner bases for submodules of `L[X,Y,Z]^r`, where `L` is the integers
//! or the rationals.
//!
//! Over the rationals this is the classical Buchberger algorithm for
//! modules.  Over the integers, a principal ideal domain, completion needs
//! two kinds of critical elements: S-vectors, built from the least common
//! multiples of both the leading monomials and the leading coefficients,
//! and G-vectors, Bézout combinations realizing the gcd of two leading
//! coefficients at the shared leading monomial.  A family is a Gröbner
//! basis exactly when every S- and G-vector reduces to zero.
//!
//! Reduction rewrites one term at a time: a term `c * m * e_j` is reducible
//! by `g` when the leading module monomial of `g` divides `m * e_j` and the
//! canonical remainder of `c` modulo the leading coefficient of `g` differs
//! from `c`.  Canonical remainders lie in `[0, |lc|)`, which makes normal
//! forms unique for a fixed, ordered basis.

use std::collections::BTreeSet;

use serde_json::json;

use crate::exactalg::{Coeff, Domain};
use crate::freemod::{ModMonomial, ModuleVector};
use crate::{Error, Result};

/// The normal form of `v` with respect to the listed reducers.
///
/// Repeatedly finds the greatest reducible term and applies one reduction
/// step, preferring reducers earlier in the slice, until no term of the
/// result is reducible.
pub fn reduce<C: Coeff>(v: &ModuleVector<C>, basis: &[ModuleVector<C>]) -> ModuleVector<C> {
    let leads: Vec<(ModMonomial, C)> = basis
        .iter()
        .map(|g| g.leading().expect("reducers must be nonzero"))
        .collect();
    let mut v = v.clone();
    'outer: loop {
        for (mm, c) in v.terms_desc() {
            for (g, (lg, cg)) in basis.iter().zip(&leads) {
                let Some(shift) = lg.try_div(&mm) else { continue };
                let Some((q, _)) = C::reduction_step(&c, cg) else { continue };
                v.add_scaled(g, &-q, &shift);
                continue 'outer;
            }
        }
        return v;
    }
}

/// The S-vector of `f` and `g`, or `None` when their leading terms sit in
/// different components (such pairs produce nothing).
pub fn s_vector<C: Coeff>(f: &ModuleVector<C>, g: &ModuleVector<C>) -> Option<ModuleVector<C>> {
    let (mf, cf) = f.leading()?;
    let (mg, cg) = g.leading()?;
    if mf.pos != mg.pos {
        return None;
    }
    let lcm = mf.mono.lcm(&mg.mono);
    let (af, ag) = C::lcm_multipliers(&cf, &cg);
    let mut s = f.mul_term(&af, &mf.mono.try_div(&lcm).unwrap());
    s.add_scaled(g, &-ag, &mg.mono.try_div(&lcm).unwrap());
    Some(s)
}

/// The G-vector of `f` and `g`: a Bézout combination whose leading
/// coefficient is the gcd of the two leading coefficients.  `None` over a
/// field, or when the leading terms sit in different components.
pub fn g_vector<C: Coeff>(f: &ModuleVector<C>, g: &ModuleVector<C>) -> Option<ModuleVector<C>> {
    let (mf, cf) = f.leading()?;
    let (mg, cg) = g.leading()?;
    if mf.pos != mg.pos {
        return None;
    }
    let (_, u, v) = C::bezout(&cf, &cg)?;
    let lcm = mf.mono.lcm(&mg.mono);
    let mut out = f.mul_term(&u, &mf.mono.try_div(&lcm).unwrap());
    out.add_scaled(g, &v, &mg.mono.try_div(&lcm).unwrap());
    Some(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    Gcd,
    Syzygy,
}

/// Work queue keyed by the monomial lcm of the pair, so small pairs are
/// processed first; gcd pairs come before syzygy pairs at the same lcm.
type PairQueue = BTreeSet<(ModMonomial, PairKind, usize, usize)>;

fn push_pairs<C: Coeff>(queue: &mut PairQueue, elems: &[ModuleVector<C>], new_idx: usize) {
    let (mn, _) = elems[new_idx].leading().expect("elements are nonzero");
    for (idx, other) in elems.iter().enumerate().take(new_idx) {
        let (mo, _) = other.leading().expect("elements are nonzero");
        if mo.pos != mn.pos {
            continue;
        }
        let lcm = ModMonomial::new(mo.mono.lcm(&mn.mono), mn.pos);
        if C::DOMAIN == Domain::Int {
            queue.insert((lcm, PairKind::Gcd, idx, new_idx));
        }
        queue.insert((lcm, PairKind::Syzygy, idx, new_idx));
    }
}

/// Completes `gens` to a Gröbner basis of their span, keeping the nonzero
/// inputs verbatim and appending normalized reduced critical vectors.
pub fn complete<C: Coeff>(gens: Vec<ModuleVector<C>>) -> Result<Vec<ModuleVector<C>>> {
    let mut elems: Vec<ModuleVector<C>> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    if elems.is_empty() {
        return Err(Error::ZeroInput("no nonzero generators".into()));
    }
    let rank = elems[0].rank();
    if elems.iter().any(|v| v.rank() != rank) {
        return Err(Error::Shape("generators of mixed rank".into()));
    }
    let mut queue = PairQueue::new();
    for idx in 0..elems.len() {
        push_pairs(&mut queue, &elems, idx);
    }
    while let Some(entry) = queue.pop_first() {
        let (_, kind, i, j) = entry;
        let candidate = match kind {
            PairKind::Gcd => g_vector(&elems[i], &elems[j]),
            PairKind::Syzygy => s_vector(&elems[i], &elems[j]),
        };
        let Some(candidate) = candidate else { continue };
        let remainder = reduce(&candidate, &elems);
        if remainder.is_zero() {
            continue;
        }
        elems.push(remainder.normalized());
        let new_idx = elems.len() - 1;
        push_pairs(&mut queue, &elems, new_idx);
    }
    Ok(elems)
}

/// True when every S- and G-vector of the family reduces to zero, i.e. the
/// family is already a Gröbner basis with no completion step required.
pub fn is_groebner<C: Coeff>(elems: &[ModuleVector<C>]) -> bool {
    let elems: Vec<_> = elems.iter().filter(|v| !v.is_zero()).cloned().collect();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            for candidate in [s_vector(&elems[i], &elems[j]), g_vector(&elems[i], &elems[j])]
                .into_iter()
                .flatten()
            {
                if !reduce(&candidate, &elems).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// A completed, auto-reduced Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<C: Coeff> {
    rank: usize,
    elements: Vec<ModuleVector<C>>,
}

/// Runs completion and then auto-reduces: every element is replaced by its
/// normal form with respect to the others until nothing changes, elements
/// are normalized, and the result is sorted by descending leading term.
pub fn buchberger<C: Coeff>(gens: Vec<ModuleVector<C>>) -> Result<GroebnerBasis<C>> {
    let mut elems = complete(gens)?;
    let rank = elems[0].rank();
    loop {
        let mut changed = false;
        let mut idx = 0;
        while idx < elems.len() {
            let elem = elems.remove(idx);
            let remainder = reduce(&elem, &elems);
            if remainder.is_zero() {
                changed = true;
                continue;
            }
            let replaced = remainder != elem;
            changed |= replaced;
            elems.insert(idx, remainder);
            idx += 1;
        }
        if !changed {
            break;
        }
    }
    for e in &mut elems {
        *e = e.normalized();
    }
    elems.sort_by(|a, b| b.leading().unwrap().0.cmp(&a.leading().unwrap().0));
    debug_assert!(is_groebner(&elems));
    Ok(GroebnerBasis { rank, elements: elems })
}

impl<C: Coeff> GroebnerBasis<C> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[ModuleVector<C>] {
        &self.elements
    }

    pub fn normal_form(&self, v: &ModuleVector<C>) -> ModuleVector<C> {
        reduce(v, &self.elements)
    }

    /// Membership in the span of the generating family.
    pub fn contains(&self, v: &ModuleVector<C>) -> bool {
        self.normal_form(v).is_zero()
    }

    /// The elements free of `X`.  Because the monomial order eliminates
    /// `X`, these generate the intersection of the span with `L[Y,Z]^r`.
    pub fn x_free_elements(&self) -> Vec<ModuleVector<C>> {
        self.elements
            .iter()
            .filter(|v| !v.involves_x())
            .cloned()
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let elems: Vec<Vec<String>> = self
            .elements
            .iter()
            .map(ModuleVector::component_strings)
            .collect();
        json!({ "rank": self.rank, "elements": elems })
    }
}

/// Mutual containment of the spans of two generating families.
pub fn spans_equal<C: Coeff>(
    left: Vec<ModuleVector<C>>,
    right: Vec<ModuleVector<C>>,
) -> Result<bool> {
    let left_basis = buchberger(left.clone())?;
    let right_basis = buchberger(right.clone())?;
    Ok(right.iter().all(|v| left_basis.contains(v))
        && left.iter().all(|v| right_basis.contains(v)))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use crate::exactalg::parse_polynomial;
    use crate::freemod::{build_a, PolyMatrix};

    use super::*;

    fn zvec(components: &[&str]) -> ModuleVector<BigInt> {
        ModuleVector::from_components(
            components.iter().map(|s| parse_polynomial(s).unwrap()).collect(),
        )
    }

    fn qvec(components: &[&str]) -> ModuleVector<BigRational> {
        ModuleVector::from_components(
            components.iter().map(|s| parse_polynomial(s).unwrap()).collect(),
        )
    }

    #[test]
    fn reduction_uses_canonical_remainders() {
        // 3 e1 reduced by 2 e1: canonical remainder 1, quotient 1.
        let r = reduce(&zvec(&["3"]), &[zvec(&["2"])]);
        assert_eq!(r, zvec(&["1"]));
        // 1 e1 is irreducible by 2 e1.
        let r = reduce(&zvec(&["1"]), &[zvec(&["2"])]);
        assert_eq!(r, zvec(&["1"]));
        // Over the rationals the same input vanishes.
        let r = reduce(&qvec(&["3"]), &[qvec(&["2"])]);
        assert!(r.is_zero());
    }

    #[test]
    fn reduction_clears_divisible_monomials() {
        // Y^2 Z e1 reduced by (Y e1 - Z e2): one step gives Y Z^2 e2, then stops.
        let g = zvec(&["Y", "-Z"]);
        let v = zvec(&["Y^2*Z", "0"]);
        let r = reduce(&v, &[g]);
        assert_eq!(r, zvec(&["0", "Y*Z^2"]));
    }

    #[test]
    fn s_vector_matches_hand_computation() {
        // f = 2Y e1, g = 3Z e1: lcm coeff 6, lcm mono YZ.
        let s = s_vector(&zvec(&["2*Y"]), &zvec(&["3*Z"])).unwrap();
        assert!(s.is_zero());
        // f = 2Y e1 + Z e2, g = 3Z e1: S = 3Z(f) - 2Y(g) leaves 3 Z^2 e2.
        let s = s_vector(&zvec(&["2*Y", "Z"]), &zvec(&["3*Z", "0"])).unwrap();
        assert_eq!(s, zvec(&["0", "3*Z^2"]));
        // Leading terms in different components: no pair.
        assert!(s_vector(&zvec(&["Y", "0"]), &zvec(&["0", "Y"])).is_none());
    }

    #[test]
    fn g_vector_realizes_gcd() {
        let f = zvec(&["4*Y"]);
        let g = zvec(&["6*Y"]);
        let gv = g_vector(&f, &g).unwrap();
        let (mm, c) = gv.leading().unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(mm.mono, crate::exactalg::Monomial::new(0, 1, 0));
        assert!(g_vector(&qvec(&["4*Y"]), &qvec(&["6*Y"])).is_none());
    }

    #[test]
    fn completion_of_bidiagonal_columns_adds_powers_of_z() {
        // The columns of the 3x4 bidiagonal matrix complete with Z^2 e2, Z^3 e3.
        let a3: PolyMatrix<BigInt> = build_a(3).unwrap();
        let completed = complete(a3.columns()).unwrap();
        assert_eq!(completed.len(), 6);
        let extras: Vec<String> = completed[4..].iter().map(|v| v.to_string()).collect();
        assert_eq!(extras, vec!["(0, Z^2, 0)", "(0, 0, Z^3)"]);
        assert!(is_groebner(&completed));
        // The original columns are kept verbatim in order.
        for (idx, col) in a3.columns().into_iter().enumerate() {
            assert_eq!(completed[idx], col);
        }
    }

    #[test]
    fn buchberger_detects_membership() {
        // Ideal (2Y, 3Y) = (Y) as a rank-1 module over the integers.
        let basis = buchberger(vec![zvec(&["2*Y"]), zvec(&["3*Y"])]).unwrap();
        assert_eq!(basis.elements().len(), 1);
        assert_eq!(basis.elements()[0], zvec(&["Y"]));
        assert!(basis.contains(&zvec(&["7*Y*Z^2"])));
        assert!(!basis.contains(&zvec(&["Z"])));
    }

    #[test]
    fn elimination_keeps_x_free_part() {
        // Im of [Z Y X]: the X-free part of its basis spans (Y, Z) e1.
        let t3: PolyMatrix<BigInt> = PolyMatrix::parse_rows(&[&["Z", "Y", "X"]]).unwrap();
        let basis = buchberger(t3.columns()).unwrap();
        let free: Vec<String> = basis.x_free_elements().iter().map(|v| v.to_string()).collect();
        assert_eq!(free, vec!["(Y)", "(Z)"]);
    }

    #[test]
    fn span_equality_is_mutual_membership() {
        let left = vec![zvec(&["Y", "0"]), zvec(&["0", "Z"])];
        let right = vec![zvec(&["Y", "Z"]), zvec(&["0", "Z"])];
        assert!(spans_equal(left.clone(), right).unwrap());
        let smaller = vec![zvec(&["Y", "0"])];
        assert!(!spans_equal(left, smaller).unwrap());
    }

    #[test]
    fn groebner_criterion_flags_incomplete_families() {
        let a3: PolyMatrix<BigInt> = build_a(3).unwrap();
        assert!(!is_groebner(&a3.columns()));
        let basis = buchberger(a3.columns()).unwrap();
        assert!(is_groebner(basis.elements()));
    }
}
