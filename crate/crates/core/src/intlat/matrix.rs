use std::fmt::{self, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::{Error, Result};

/// A dense integer matrix with 1-based indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 1..=n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
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

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        let idx = self.idx(i, j);
        self.entries[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
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
                let mut acc = BigInt::zero();
                for k in 1..=self.cols {
                    acc += self.entry(i, k) * other.entry(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 1..=self.cols {
            let (ia, ib) = (self.idx(a, j), self.idx(b, j));
            self.entries.swap(ia, ib);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 1..=self.rows {
            let (ia, ib) = (self.idx(i, a), self.idx(i, b));
            self.entries.swap(ia, ib);
        }
    }

    /// `row a += factor * row b`.
    pub fn add_row_multiple(&mut self, a: usize, b: usize, factor: &BigInt) {
        for j in 1..=self.cols {
            let delta = factor * self.entry(b, j);
            let idx = self.idx(a, j);
            self.entries[idx] += delta;
        }
    }

    /// `col a += factor * col b`.
    pub fn add_col_multiple(&mut self, a: usize, b: usize, factor: &BigInt) {
        for i in 1..=self.rows {
            let delta = factor * self.entry(i, b);
            let idx = self.idx(i, a);
            self.entries[idx] += delta;
        }
    }

    pub fn negate_row(&mut self, a: usize) {
        for j in 1..=self.cols {
            let idx = self.idx(a, j);
            let v = -std::mem::take(&mut self.entries[idx]);
            self.entries[idx] = v;
        }
    }

    /// The submatrix picking the given 1-based rows and columns, in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zero(rows.len(), cols.len());
        for (ri, &i) in rows.iter().enumerate() {
            for (cj, &j) in cols.iter().enumerate() {
                out.set(ri + 1, cj + 1, self.entry(i, j).clone());
            }
        }
        out
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut b = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 1..=n - 1 {
            if b.entry(k, k).is_zero() {
                let Some(r) = (k + 1..=n).find(|&r| !b.entry(r, k).is_zero()) else {
                    return Ok(BigInt::zero());
                };
                b.swap_rows(k, r);
                sign = -sign;
            }
            for i in k + 1..=n {
                for j in k + 1..=n {
                    let num = b.entry(i, j) * b.entry(k, k) - b.entry(i, k) * b.entry(k, j);
                    debug_assert!((&num % &prev).is_zero());
                    b.set(i, j, num / &prev);
                }
                b.set(i, k, BigInt::zero());
            }
            prev = b.entry(k, k).clone();
        }
        Ok(sign * b.entry(n, n).clone())
    }

    /// Rank by Gaussian elimination over the rationals, independent of the
    /// Smith normal form routine.
    pub fn rank(&self) -> usize {
        let mut b: Vec<Vec<BigRational>> = (1..=self.rows)
            .map(|i| {
                (1..=self.cols)
                    .map(|j| BigRational::from_integer(self.entry(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut col = 0;
        while rank < self.rows && col < self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| !b[r][col].is_zero()) else {
                col += 1;
                continue;
            };
            b.swap(rank, pivot_row);
            let pivot = b[rank][col].clone();
            for r in rank + 1..self.rows {
                if b[r][col].is_zero() {
                    continue;
                }
                let factor = &b[r][col] / &pivot;
                for c in col..self.cols {
                    let delta = &factor * &b[rank][c];
                    b[r][c] -= delta;
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }

    /// All `r x r` minors, enumerated in lexicographic order of the row and
    /// column index sets.
    pub fn minors(&self, r: usize) -> Result<Vec<BigInt>> {
        if r == 0 || r > self.rows || r > self.cols {
            return Err(Error::Invalid(format!(
                "no {r}x{r} minors in a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let row_sets = combinations(self.rows, r);
        let col_sets = combinations(self.cols, r);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rows in &row_sets {
            for cols in &col_sets {
                out.push(self.submatrix(rows, cols).det()?);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (1..=self.rows)
            .map(|i| (1..=self.cols).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }
}

/// All `r`-element subsets of `{1, ..., n}` in lexicographic order.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn recurse(n: usize, r: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < r - current.len() {
                break;
            }
            current.push(v);
            recurse(n, r, v + 1, current, out);
            current.pop();
        }
    }
    recurse(n, r, 1, &mut current, &mut out);
    out
}

impl Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
