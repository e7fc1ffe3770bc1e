//! Scalar-generic dense matrices and polynomials.
//!
//! Everything here is generic over the entry type through [`Scalar`] /
//! [`ExactScalar`] so the same code serves `f64` (eigensolving), `BigInt`
//! (integer characteristic polynomials) and `BigRational` (quotient
//! matrices, tree diagonalization).

mod eigen;
mod poly;

pub use eigen::symmetric_eigenvalues;
pub use poly::{Polynomial, RationalFunction};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::{Error, Result};

/// Ring-like scalar: enough structure for matrix and polynomial arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + AddAssign
        + SubAssign
{
}

/// Scalars supporting the exact division by a small integer that the
/// Faddeev-LeVerrier recursion needs.
pub trait ExactScalar: Scalar {
    /// Divide by a nonzero integer, which the caller guarantees is exact.
    fn exact_div_int(&self, k: i64) -> Self;
}

impl ExactScalar for BigInt {
    fn exact_div_int(&self, k: i64) -> Self {
        let d = BigInt::from(k);
        debug_assert!((self % &d).is_zero(), "division by {k} is not exact");
        self / d
    }
}

impl ExactScalar for BigRational {
    fn exact_div_int(&self, k: i64) -> Self {
        self / BigRational::from_integer(BigInt::from(k))
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self[(i, i)].clone();
        }
        t
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() * s.clone()
        })
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev-LeVerrier trace
/// recursion. Exact for `BigInt` and `BigRational` entries; cost is one
/// matrix product per degree.
pub fn char_poly<S: ExactScalar>(m: &Matrix<S>) -> Result<Polynomial<S>> {
    if !m.is_square() {
        return Err(Error::Dimension(
            "characteristic polynomial of a non-square matrix".into(),
        ));
    }
    let n = m.nrows();
    // coefficients of det(xI - M) = x^n + c_1 x^{n-1} + ... + c_n
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut aux = Matrix::<S>::identity(n); // N_0 = I
    for k in 1..=n {
        let prod = m.matmul(&aux);
        let c = prod.trace().neg().exact_div_int(k as i64);
        aux = prod;
        for i in 0..n {
            aux[(i, i)] += c.clone();
        }
        coeffs[n - k] = c;
    }
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn char_poly_of_p2_adjacency() {
        // A(P_2) -> x^2 - 1
        let a = int_matrix(&[&[0, 1], &[1, 0]]);
        let p = char_poly(&a).unwrap();
        assert_eq!(
            p.coeffs(),
            &[BigInt::from(-1), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn char_poly_of_p3_laplacian() {
        // L(P_3) -> x^3 - 4x^2 + 3x (hand cofactor expansion)
        let l = int_matrix(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 1]]);
        let p = char_poly(&l).unwrap();
        assert_eq!(
            p.coeffs(),
            &[
                BigInt::from(0),
                BigInt::from(3),
                BigInt::from(-4),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn matmul_and_trace() {
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let b = int_matrix(&[&[0, 1], &[1, 0]]);
        let c = a.matmul(&b);
        assert_eq!(c, int_matrix(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), BigInt::from(5));
    }
}
