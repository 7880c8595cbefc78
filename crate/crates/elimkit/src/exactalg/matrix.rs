use std::collections::HashMap;

use super::Ring;
use crate::error::{ElimError, Result};

/// Square matrix over a coefficient ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![R::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ElimError::InvalidArgument("matrix is not square".into()));
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Square submatrix on the given (equal-length) row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert_eq!(rows.len(), cols.len());
        Self::from_fn(rows.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Deletes the listed rows and columns.
    pub fn delete(&self, rows: &[usize], cols: &[usize]) -> Self {
        let keep_r: Vec<usize> = (0..self.n).filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.n).filter(|j| !cols.contains(j)).collect();
        self.submatrix(&keep_r, &keep_c)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(self.n, |i, j| {
            (0..self.n).fold(R::zero(), |acc, k| acc.plus(&self.get(i, k).times(rhs.get(k, j))))
        })
    }
}

/// Single-step Bareiss elimination. The pivot is the first nonzero entry
/// at or below the diagonal, so results are reproducible.
pub fn det_fraction_free<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.n;
    if n == 0 {
        return R::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return R::zero();
        };
        if p != k {
            a.swap_rows(p, k);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let mut v = a.get(i, j).times(&pivot);
                if !aik.is_zero() {
                    v = v.minus(&aik.times(a.get(k, j)));
                }
                let v = v.exact_div(&prev).expect("Bareiss quotient is exact");
                a.set(i, j, v);
            }
            a.set(i, k, R::zero());
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    if negate {
        d.negate()
    } else {
        d
    }
}

/// Laplace expansion along rows with memoized minors (keyed by the set of
/// remaining columns). Division-free; exponential, meant for n <= 16.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.n;
    assert!(n <= 24, "cofactor expansion is limited to small matrices");
    if n == 0 {
        return R::one();
    }
    let mut memo: HashMap<u32, R> = HashMap::new();
    cofactor_rec(m, 0, (1u32 << n) - 1, &mut memo)
}

fn cofactor_rec<R: Ring>(m: &Matrix<R>, row: usize, cols: u32, memo: &mut HashMap<u32, R>) -> R {
    if row == m.n {
        return R::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut sign_neg = false;
    for j in 0..m.n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let a = m.get(row, j);
        if !a.is_zero() {
            let minor = cofactor_rec(m, row + 1, cols & !(1 << j), memo);
            let t = a.times(&minor);
            acc = if sign_neg { acc.minus(&t) } else { acc.plus(&t) };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn mi(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_det_is_one() {
        assert_eq!(det_fraction_free(&Matrix::<BigInt>::identity(3)), BigInt::from(1));
    }

    #[test]
    fn sylvester_of_x2_plus_1_and_x2_minus_1() {
        // f-columns then g-columns, coefficients descending
        let m = mi(&[&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, -1, 0], &[0, 1, 0, -1]]);
        assert_eq!(det_fraction_free(&m), BigInt::from(4));
        assert_eq!(det_cofactor(&m), BigInt::from(4));
    }

    #[test]
    fn pivoting_needed() {
        let m = mi(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 0]]);
        assert_eq!(det_fraction_free(&m), det_cofactor(&m));
        assert_eq!(det_cofactor(&m), BigInt::from(3));
    }

    #[test]
    fn singular_matrix() {
        let m = mi(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_fraction_free(&m), BigInt::from(0));
    }
}
