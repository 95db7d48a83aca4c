//! Dense Gaussian elimination over Q(α).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::AlphaFrac;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<AlphaFrac>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![AlphaFrac::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = AlphaFrac::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<AlphaFrac>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[AlphaFrac] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[AlphaFrac]) -> Result<Vec<AlphaFrac>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::Shape("inner dimensions differ".into()));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = pick_pivot(&a, col, col).ok_or(LinAlgError::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].recip().map_err(|_| LinAlgError::Singular)?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    /// Solves `self · x = rhs` for a consistent system with full column rank.
    ///
    /// Overdetermined systems are accepted as long as the extra equations are
    /// consistent with the unique solution.
    pub fn solve(&self, rhs: &[AlphaFrac]) -> Result<Vec<AlphaFrac>, LinAlgError> {
        if rhs.len() != self.rows {
            return Err(LinAlgError::Shape(format!(
                "{} equations, {} right-hand sides",
                self.rows,
                rhs.len()
            )));
        }
        let mut a = self.clone();
        let mut b = rhs.to_vec();
        let mut row = 0;
        for col in 0..self.cols {
            let pivot = pick_pivot(&a, row, col).ok_or(LinAlgError::Singular)?;
            a.swap_rows(row, pivot);
            b.swap(row, pivot);
            let p = a[(row, col)].recip().map_err(|_| LinAlgError::Singular)?;
            a.scale_row(row, &p);
            b[row] = &b[row] * &p;
            for r in 0..self.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                a.sub_row_multiple(r, row, &factor);
                let delta = &factor * &b[row];
                b[r] = &b[r] - &delta;
            }
            row += 1;
        }
        if b[row..].iter().any(|v| !v.is_zero()) {
            return Err(LinAlgError::Inconsistent);
        }
        b.truncate(self.cols);
        Ok(b)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, by: &AlphaFrac) {
        for c in 0..self.cols {
            let v = &mut self.data[i * self.cols + c];
            if !v.is_zero() {
                *v = &*v * by;
            }
        }
    }

    /// row[target] -= factor · row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &AlphaFrac) {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            let t = &mut self.data[target * self.cols + c];
            *t = &*t - &delta;
        }
    }
}

/// Picks the nonzero entry of smallest representation in `col`, rows `from..`.
fn pick_pivot(a: &Matrix, from: usize, col: usize) -> Option<usize> {
    (from..a.rows)
        .filter(|&r| !a[(r, col)].is_zero())
        .min_by_key(|&r| {
            let v = &a[(r, col)];
            v.numerator().coeffs().len() + v.denominator().coeffs().len()
        })
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = AlphaFrac;
    fn index(&self, (i, j): (usize, usize)) -> &AlphaFrac {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut AlphaFrac {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> AlphaFrac {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![vec![f("1+1/α"), f("1/α")], vec![f("1/α"), f("1+1/α")]])
            .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        // the (2,2) entry is the pairing <x2, x2> for two variables
        assert_eq!(inv[(1, 1)], f("(α+1)/(α+2)"));
    }

    #[test]
    fn singular_and_inconsistent() {
        let m = Matrix::from_rows(vec![vec![f("α"), f("1")], vec![f("2α"), f("2")]]).unwrap();
        assert_eq!(m.inverse(), Err(LinAlgError::Singular));
        let tall = Matrix::from_rows(vec![vec![f("1")], vec![f("α")]]).unwrap();
        assert_eq!(tall.solve(&[f("2"), f("2α")]), Ok(vec![f("2")]));
        assert_eq!(
            tall.solve(&[f("2"), f("3")]),
            Err(LinAlgError::Inconsistent)
        );
    }
}
