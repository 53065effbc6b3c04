//! Exact Gaussian elimination over [`Scalar`].

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Index of the row at or below `from` with the simplest nonzero entry
    /// in column `c`.
    fn pivot_row(&self, from: usize, c: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&r| !self.get(r, c).is_zero())
            .min_by_key(|&r| complexity(self.get(r, c)))
    }

    /// Row echelon form in place; returns the pivot columns and the number
    /// of row swaps performed.
    fn eliminate(&mut self, limit_cols: usize) -> (Vec<usize>, usize) {
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for c in 0..limit_cols {
            if r == self.rows {
                break;
            }
            let Some(p) = self.pivot_row(r, c) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                swaps += 1;
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for k in r + 1..self.rows {
                if self.get(k, c).is_zero() {
                    continue;
                }
                let f = self.get(k, c) * &inv;
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let x = self.get(k, j) - &(&f * self.get(r, j));
                    self.set(k, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, swaps)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(self.cols).0.len()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::RankMismatch(self.rows, self.cols));
        }
        let mut m = self.clone();
        let (pivots, swaps) = m.eliminate(self.cols);
        if pivots.len() < self.cols {
            return Ok(Scalar::zero());
        }
        let mut d = if swaps % 2 == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        for k in 0..self.rows {
            d *= m.get(k, k);
        }
        Ok(d)
    }

    /// Unique `x` with `self · x = b`. Overdetermined systems must be exactly
    /// consistent: `Inconsistent` if not, `Singular` if the columns are
    /// dependent.
    pub fn solve(&self, b: &[Scalar]) -> std::result::Result<Vec<Scalar>, SolveError> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (pivots, _) = aug.eliminate(self.cols);
        if pivots.len() < self.cols {
            return Err(SolveError::Singular);
        }
        if (pivots.len()..self.rows).any(|r| !aug.get(r, self.cols).is_zero()) {
            return Err(SolveError::Inconsistent);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for r in (0..self.cols).rev() {
            let mut acc = aug.get(r, self.cols).clone();
            for j in r + 1..self.cols {
                if !aug.get(r, j).is_zero() {
                    acc -= &(aug.get(r, j) * &x[j]);
                }
            }
            x[r] = acc.checked_div(aug.get(r, r)).expect("nonzero pivot");
        }
        Ok(x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveError {
    Singular,
    Inconsistent,
}

impl From<SolveError> for Error {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Singular => Error::Singular,
            SolveError::Inconsistent => Error::NotInQSpan,
        }
    }
}

fn complexity(x: &Scalar) -> usize {
    x.numer().coeffs().len() + x.denom().coeffs().len()
}
