//! Dense matrices over `Z[v, v^-1]`.

use std::fmt;

use crate::laurent::{Laurent, LaurentError};

#[derive(Clone, PartialEq, Eq)]
pub struct LMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Laurent>,
}

impl LMatrix {
    pub fn zeros(rows: usize, cols: usize) -> LMatrix {
        LMatrix { rows, cols, data: vec![Laurent::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> LMatrix {
        LMatrix::scalar(n, &Laurent::one())
    }

    pub fn scalar(n: usize, c: &Laurent) -> LMatrix {
        let mut m = LMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Laurent) {
        self.data[i * self.cols + j] = c;
    }

    pub fn add(&self, other: &LMatrix) -> LMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &LMatrix) -> LMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &LMatrix) -> LMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = LMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Laurent {
        let mut t = Laurent::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Determinant by fraction-free Gaussian elimination with exact
    /// division of Laurent polynomials.
    pub fn determinant(&self) -> Result<Laurent, LaurentError> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(Laurent::one());
        }
        let mut a = self.data.clone();
        let mut sign = 1;
        let mut prev = Laurent::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Ok(Laurent::zero());
            };
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                for j in k + 1..n {
                    let num = &(&pivot * &a[i * n + j]) - &(&aik * &a[k * n + j]);
                    a[i * n + j] = num.div_exact(&prev)?;
                }
                a[i * n + k] = Laurent::zero();
            }
            prev = pivot;
        }
        let det = a[n * n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }
}

impl fmt::Debug for LMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
