use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Complex, DMatrix};

use super::linalg::solve;
use super::GaussianRational;
use crate::Error;

/// Dense exact matrix over Gaussian rationals, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> crate::Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Dimension("empty matrix".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an n-by-n matrix from integer rows; panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
        .expect("well-formed integer rows")
    }

    /// Elementary matrix unit E_{ij} of size n.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n, n);
        m.set(i, j, GaussianRational::one());
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.conj()).collect(),
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn trace(&self) -> GaussianRational {
        let mut t = GaussianRational::zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Self) -> crate::Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut m = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = &(a * rhs.get(k, j)) + m.get(i, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Exact inverse via Gauss-Jordan; errors when singular or non-square.
    pub fn inverse(&self) -> crate::Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug: Vec<Vec<GaussianRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<GaussianRational> =
                    (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = super::linalg::rref(&mut aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Dimension("singular matrix".into()));
        }
        let rows = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Self::from_rows(rows)
    }

    /// Row-major flattening into a coordinate vector of length rows*cols.
    pub fn vectorize(&self) -> Vec<GaussianRational> {
        self.entries.clone()
    }

    pub fn from_vector(v: &[GaussianRational], rows: usize, cols: usize) -> Self {
        assert_eq!(v.len(), rows * cols);
        Self {
            rows,
            cols,
            entries: v.to_vec(),
        }
    }

    /// Assembles a square matrix from four equally sized square blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.nrows();
        assert!(
            [a, b, c, d]
                .iter()
                .all(|m| m.nrows() == n && m.ncols() == n),
            "blocks must be square and equal size"
        );
        let mut m = Self::zero(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, a.get(i, j).clone());
                m.set(i, j + n, b.get(i, j).clone());
                m.set(i + n, j, c.get(i, j).clone());
                m.set(i + n, j + n, d.get(i, j).clone());
            }
        }
        m
    }

    /// Extracts the (bi, bj) block of a 2x2-blocked square matrix.
    pub fn block(&self, bi: usize, bj: usize) -> Self {
        assert!(self.is_square() && self.rows % 2 == 0);
        let n = self.rows / 2;
        let mut m = Self::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(bi * n + i, bj * n + j).clone());
            }
        }
        m
    }

    pub fn to_float(&self) -> DMatrix<Complex<f64>> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_c64())
    }

    /// Linear combination of equally sized matrices.
    pub fn linear_combination(
        coeffs: &[GaussianRational],
        mats: &[ExactMatrix],
    ) -> crate::Result<Self> {
        if coeffs.len() != mats.len() || mats.is_empty() {
            return Err(Error::Dimension("combination length mismatch".into()));
        }
        let mut acc = Self::zero(mats[0].nrows(), mats[0].ncols());
        for (c, m) in coeffs.iter().zip(mats.iter()) {
            if !c.is_zero() {
                acc = &acc + &m.scale(c);
            }
        }
        Ok(acc)
    }

    /// Coordinates of `self` in the span of `basis` over the full complex
    /// field (entrywise); `None` if outside the span.
    pub fn coordinates_in(&self, basis: &[ExactMatrix]) -> Option<Vec<GaussianRational>> {
        let ncols = basis.len();
        let nentries = self.rows * self.cols;
        let mut a = vec![vec![GaussianRational::zero(); ncols]; nentries];
        for (bi, b) in basis.iter().enumerate() {
            let v = b.vectorize();
            for (r, val) in v.into_iter().enumerate() {
                a[r][bi] = val;
            }
        }
        solve(&a, &self.vectorize(), ncols)
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: Self) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: Self) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: Self) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix product size mismatch")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The commutator `AB - BA` of square matrices of equal size.
pub fn commutator(a: &ExactMatrix, b: &ExactMatrix) -> crate::Result<ExactMatrix> {
    if !a.is_square() || !b.is_square() || a.nrows() != b.nrows() {
        return Err(Error::Dimension(format!(
            "commutator needs equal square matrices, got {}x{} and {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    Ok(&a.checked_mul(b)? - &b.checked_mul(a)?)
}
