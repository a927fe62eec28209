use std::collections::HashSet;
use std::fmt;

use super::BitVec;
use crate::error::{Error, Result};

/// A dense matrix over GF(2) stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

/// Row-reduced form of a matrix together with its pivot columns.
pub(crate) struct Echelon {
    pub rows: Vec<BitVec>,
    pub pivots: Vec<usize>,
}

/// Gaussian elimination on `rows`, pivoting only in columns `< pivot_limit`.
///
/// With `full` set the result is reduced (pivot columns are zero outside
/// their pivot row); otherwise only rows below each pivot are cleared.
pub(crate) fn eliminate(mut rows: Vec<BitVec>, pivot_limit: usize, full: bool) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_limit {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, found);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot, below) = tail.split_first_mut().expect("pivot row exists");
        let word = col / 64;
        for row in below.iter_mut() {
            if row.get(col) {
                row.xor_assign_from(pivot, word);
            }
        }
        if full {
            for row in head.iter_mut() {
                if row.get(col) {
                    row.xor_assign_from(pivot, word);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from the positions holding 1.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        let mut seen = HashSet::new();
        for (row, col) in entries {
            if row >= rows || col >= cols {
                return Err(Error::EntryOutOfBounds {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            if !seen.insert((row, col)) {
                return Err(Error::DuplicateEntry { row, col });
            }
            m.set(row, col, true);
        }
        Ok(m)
    }

    /// Builds a matrix from rows of length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(F2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, column) in columns.iter().enumerate() {
            if column.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {rows} rows",
                    column.len()
                )));
            }
            for i in column.iter_ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row].get(col)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.data[row].set(col, value)
    }

    pub fn toggle(&mut self, row: usize, col: usize) {
        self.data[row].toggle(col)
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    pub fn columns(&self) -> Vec<BitVec> {
        let t = self.transpose();
        t.data
    }

    /// Positions holding 1, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter_ones().map(move |j| (i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for (i, j) in self.entries() {
            t.set(j, i, true);
        }
        t
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length does not match columns");
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.data[i].dot(v)))
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut out = BitVec::zeros(other.cols);
                for k in row.iter_ones() {
                    out.xor_assign(&other.data[k]);
                }
                out
            })
            .collect();
        Ok(F2Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate matrices with {} and {} rows",
                self.rows, other.rows
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(F2Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// XORs `block` into the submatrix with top-left corner `(row, col)`.
    pub fn add_block(&mut self, row: usize, col: usize, block: &F2Matrix) {
        assert!(
            row + block.rows <= self.rows && col + block.cols <= self.cols,
            "block does not fit"
        );
        for (i, j) in block.entries() {
            self.toggle(row + i, col + j);
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.cols <= self.rows {
            eliminate(self.data.clone(), self.cols, false).pivots.len()
        } else {
            let t = self.transpose();
            eliminate(t.data, t.cols, false).pivots.len()
        }
    }

    pub(crate) fn echelon(&self) -> Echelon {
        eliminate(self.data.clone(), self.cols, true)
    }

    /// Basis of the null space, one vector per free column of the reduced
    /// row echelon form.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVec::unit(self.cols, f);
                for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// The original columns sitting at pivot positions; they form a basis of
    /// the column space.
    pub fn image_basis(&self) -> Vec<BitVec> {
        self.echelon()
            .pivots
            .into_iter()
            .map(|j| self.column(j))
            .collect()
    }

    /// Some `x` with `self * x = target`, or `None` when `target` is not in
    /// the column space.
    pub fn solve(&self, target: &BitVec) -> Option<BitVec> {
        assert_eq!(target.len(), self.rows, "target length does not match rows");
        let augmented: Vec<BitVec> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.concat(&BitVec::zeros(1));
                r.set(self.cols, target.get(i));
                r
            })
            .collect();
        let ech = eliminate(augmented, self.cols, true);
        let mut x = BitVec::zeros(self.cols);
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if row.get(self.cols) {
                x.set(p, true);
            }
        }
        // Inconsistent rows were truncated away; substitution catches them.
        (self.apply(&x) == *target).then_some(x)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Dimension of the intersection of the column spaces of `m1` and `m2`.
pub fn image_intersection_rank(m1: &F2Matrix, m2: &F2Matrix) -> Result<usize> {
    let joint = m1.hcat(m2)?;
    Ok(m1.rank() + m2.rank() - joint.rank())
}

/// A basis of the intersection of the column spaces of `m1` and `m2`.
pub fn image_intersection_basis(m1: &F2Matrix, m2: &F2Matrix) -> Result<Vec<BitVec>> {
    let joint = m1.hcat(m2)?;
    let images: Vec<BitVec> = joint
        .kernel_basis()
        .iter()
        .map(|v| m1.apply(&v.slice(0, m1.cols())))
        .collect();
    Ok(F2Matrix::from_columns(m1.rows(), &images)?.image_basis())
}
