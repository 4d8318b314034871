use num::rational::BigRational;
use num::{One, Zero};

use super::GaussianRational;

/// Exact field scalars usable in row reduction. Implemented for rationals
/// and Gaussian rationals; generic code only ever sees these methods, so
/// there is no ambiguity with the std `ops` traits.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse; callers check `is_zero` first.
    fn inv(&self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        GaussianRational::inv(self).expect("inverse of zero")
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// In-place reduced row echelon form. Zero rows are removed; returns the
/// pivot column of each remaining row.
pub fn rref<S: Scalar>(rows: &mut Vec<Vec<S>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = f.mul(&rows[r][j]);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Basis of the null space of the row-major matrix `a` (rows are equations).
pub fn kernel_basis<S: Scalar>(a: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut rows: Vec<Vec<S>> = a.to_vec();
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![S::zero(); ncols];
        v[free] = S::one();
        for (row, &pc) in rows.iter().zip(pivots.iter()) {
            v[pc] = row[free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b` exactly; `a` is row-major with `ncols` unknowns.
/// Returns `None` when inconsistent. Free variables are set to zero.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S], ncols: usize) -> Option<Vec<S>> {
    let mut rows: Vec<Vec<S>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![S::zero(); ncols];
    for (row, &pc) in rows.iter().zip(pivots.iter()) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rref_and_kernel() {
        // [[1, -1], [0, 0]] has kernel span{(1, 1)}.
        let a = vec![vec![q(1), q(-1)], vec![q(0), q(0)]];
        let k = kernel_basis(&a, 2);
        assert_eq!(k, vec![vec![q(1), q(1)]]);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        let x = solve(&a, &[q(5), q(6)], 2).unwrap();
        assert_eq!(x, vec![q(-4), q(9) / q(2)]);
        let singular = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert!(solve(&singular, &[q(0), q(1)], 2).is_none());
    }
}
