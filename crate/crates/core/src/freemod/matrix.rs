use std::fmt::{self, Display};

use serde_json::json;

use crate::exactalg::{parse_polynomial, Coeff, Polynomial};
use crate::{Error, Result};

use super::ModuleVector;

/// A dense matrix over `L[X,Y,Z]` with 1-based indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<C: Coeff> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<C>>,
}

impl<C: Coeff> PolyMatrix<C> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Polynomial::one())
    }

    /// `p` times the identity.
    pub fn scalar(n: usize, p: Polynomial<C>) -> Self {
        let mut m = Self::zero(n, n);
        for i in 1..=n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial<C>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_polynomial(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "entry ({i},{j}) out of range {}x{}",
            self.rows,
            self.cols
        );
        (i - 1) * self.cols + (j - 1)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<C> {
        &self.entries[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<C>) {
        let idx = self.idx(i, j);
        self.entries[idx] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = Polynomial::zero();
                for k in 1..=self.cols {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * other.entry(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Column `j` as an element of the rank-`nrows` free module.
    pub fn column(&self, j: usize) -> ModuleVector<C> {
        let mut v = ModuleVector::zero(self.rows);
        for i in 1..=self.rows {
            v.set_component(i, self.entry(i, j).clone());
        }
        v
    }

    pub fn columns(&self) -> Vec<ModuleVector<C>> {
        (1..=self.cols).map(|j| self.column(j)).collect()
    }

    pub fn map<F: Fn(&Polynomial<C>) -> Polynomial<C>>(&self, f: F) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }
}

impl<C: Coeff> Display for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// One cell of a block layout: an explicit matrix or a zero filler whose
/// shape is inferred from its row and column neighbours.
pub enum Block<C: Coeff> {
    Mat(PolyMatrix<C>),
    Zero,
}

/// Assembles a block grid into a single matrix.  Every grid row must have
/// the same number of cells; each block row and block column must contain at
/// least one explicit matrix to fix its height and width, and all explicit
/// matrices must agree with the inferred shapes.
pub fn assemble<C: Coeff>(grid: Vec<Vec<Block<C>>>) -> Result<PolyMatrix<C>> {
    let nbr = grid.len();
    let nbc = grid.first().map_or(0, Vec::len);
    if grid.iter().any(|r| r.len() != nbc) {
        return Err(Error::Shape("ragged block grid".into()));
    }
    let mut heights = vec![None; nbr];
    let mut widths = vec![None; nbc];
    for (bi, row) in grid.iter().enumerate() {
        for (bj, block) in row.iter().enumerate() {
            if let Block::Mat(m) = block {
                match heights[bi] {
                    None => heights[bi] = Some(m.nrows()),
                    Some(h) if h != m.nrows() => {
                        return Err(Error::Shape(format!(
                            "block row {} height {} vs {}",
                            bi + 1,
                            h,
                            m.nrows()
                        )))
                    }
                    _ => {}
                }
                match widths[bj] {
                    None => widths[bj] = Some(m.ncols()),
                    Some(w) if w != m.ncols() => {
                        return Err(Error::Shape(format!(
                            "block column {} width {} vs {}",
                            bj + 1,
                            w,
                            m.ncols()
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    let heights: Vec<usize> = heights
        .into_iter()
        .enumerate()
        .map(|(bi, h)| h.ok_or_else(|| Error::Shape(format!("block row {} has no explicit matrix", bi + 1))))
        .collect::<Result<_>>()?;
    let widths: Vec<usize> = widths
        .into_iter()
        .enumerate()
        .map(|(bj, w)| w.ok_or_else(|| Error::Shape(format!("block column {} has no explicit matrix", bj + 1))))
        .collect::<Result<_>>()?;

    let total_rows: usize = heights.iter().sum();
    let total_cols: usize = widths.iter().sum();
    let mut out = PolyMatrix::zero(total_rows, total_cols);
    let mut row_off = 0;
    for (bi, row) in grid.into_iter().enumerate() {
        let mut col_off = 0;
        for (bj, block) in row.into_iter().enumerate() {
            if let Block::Mat(m) = block {
                for i in 1..=m.nrows() {
                    for j in 1..=m.ncols() {
                        out.set(row_off + i, col_off + j, m.entry(i, j).clone());
                    }
                }
            }
            col_off += widths[bj];
        }
        row_off += heights[bi];
    }
    Ok(out)
}

/// Horizontal concatenation `[left | right]`.
pub fn augment<C: Coeff>(left: &PolyMatrix<C>, right: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    assemble(vec![vec![Block::Mat(left.clone()), Block::Mat(right.clone())]])
}

/// The `n x (n+1)` bidiagonal matrix with `Z` on the diagonal and `Y` on
/// the superdiagonal.
pub fn build_a<C: Coeff>(n: usize) -> Result<PolyMatrix<C>> {
    if n == 0 {
        return Err(Error::ZeroInput("bidiagonal family needs n >= 1".into()));
    }
    let mut m = PolyMatrix::zero(n, n + 1);
    for i in 1..=n {
        m.set(i, i, Polynomial::variable('Z'));
        m.set(i, i + 1, Polynomial::variable('Y'));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type M = PolyMatrix<BigInt>;

    #[test]
    fn bidiagonal_family() {
        let a1: M = build_a(1).unwrap();
        assert_eq!(a1, M::parse_rows(&[&["Z", "Y"]]).unwrap());
        let a3: M = build_a(3).unwrap();
        assert_eq!(
            a3,
            M::parse_rows(&[
                &["Z", "Y", "0", "0"],
                &["0", "Z", "Y", "0"],
                &["0", "0", "Z", "Y"],
            ])
            .unwrap()
        );
        assert!(build_a::<BigInt>(0).is_err());
    }

    #[test]
    fn product_of_consecutive_bidiagonals() {
        let a1: M = build_a(1).unwrap();
        let a2: M = build_a(2).unwrap();
        let prod = a1.mul(&a2).unwrap();
        assert_eq!(prod, M::parse_rows(&[&["Z^2", "2*Y*Z", "Y^2"]]).unwrap());
        assert!(a2.mul(&a1).is_err());
    }

    #[test]
    fn block_assembly_infers_zero_shapes() {
        let a2: M = build_a(2).unwrap();
        let xi2: M = PolyMatrix::scalar(2, crate::exactalg::Polynomial::variable('X'));
        let a1: M = build_a(1).unwrap();
        let t4 = assemble(vec![
            vec![Block::Mat(a2), Block::Mat(xi2), Block::Zero],
            vec![Block::Zero, Block::Mat(a1), Block::Mat(PolyMatrix::scalar(1, crate::exactalg::Polynomial::variable('X')))],
        ])
        .unwrap();
        assert_eq!(
            t4,
            M::parse_rows(&[
                &["Z", "Y", "0", "X", "0", "0"],
                &["0", "Z", "Y", "0", "X", "0"],
                &["0", "0", "0", "Z", "Y", "X"],
            ])
            .unwrap()
        );
    }

    #[test]
    fn assembly_rejects_inconsistent_shapes() {
        let a1: M = build_a(1).unwrap();
        let a2: M = build_a(2).unwrap();
        assert!(assemble(vec![
            vec![Block::Mat(a1.clone()), Block::Mat(a2.clone())],
            vec![Block::Mat(a2), Block::Mat(a1)],
        ])
        .is_err());
        assert!(assemble::<BigInt>(vec![vec![Block::Zero]]).is_err());
    }

    #[test]
    fn columns_are_module_vectors() {
        let a2: M = build_a(2).unwrap();
        let cols = a2.columns();
        assert_eq!(cols.len(), 3);
        assert_eq!(cols[0].to_string(), "(Z, 0)");
        assert_eq!(cols[1].to_string(), "(Y, Z)");
        assert_eq!(cols[2].to_string(), "(0, Y)");
    }

    #[test]
    fn json_shape() {
        let a1: M = build_a(1).unwrap();
        let v = a1.to_json();
        assert_eq!(v["rows"], 1);
        assert_eq!(v["cols"], 2);
        assert_eq!(v["entries"][0][1], "Y");
    }
}
