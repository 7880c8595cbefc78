use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Signed;

use super::{interp, Matrix, Ring, SquareRoot};
use crate::error::{ElimError, Result};

/// Dense polynomial in the parameter `x` with integer coefficients;
/// `coeffs[i]` is the coefficient of `x^i`. The top coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The parameter `x` itself.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Content (gcd of coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when the polynomial is `c * x^e` for some `c`, `e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

pub fn upoly_mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return UniPoly::default();
    }
    let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    UniPoly::new(out)
}

/// Exact quotient `a / b`; `NotDivisible` if a remainder survives or a
/// leading-coefficient division is not integral.
pub fn upoly_exact_div(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    let Some(db) = b.degree() else {
        return Err(ElimError::NotDivisible);
    };
    let Some(da) = a.degree() else {
        return Ok(UniPoly::default());
    };
    if da < db {
        return Err(ElimError::NotDivisible);
    }
    let lb = &b.coeffs[db];
    let mut r = a.coeffs.clone();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (qk, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return Err(ElimError::NotDivisible);
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            r[k + j] -= &qk * bj;
        }
        q[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return Err(ElimError::NotDivisible);
    }
    Ok(UniPoly::new(q))
}

/// Square root with positive leading coefficient, matching coefficients
/// from the top down.
pub fn upoly_sqrt(a: &UniPoly) -> Result<UniPoly> {
    let Some(da) = a.degree() else {
        return Ok(UniPoly::default());
    };
    if da % 2 == 1 || a.leading().is_negative() {
        return Err(ElimError::NotASquare);
    }
    let k = da / 2;
    let lc = a.leading();
    let sk = Roots::sqrt(&lc);
    if &sk * &sk != lc {
        return Err(ElimError::NotASquare);
    }
    let two_sk = &sk * 2;
    let mut s = vec![BigInt::zero(); k + 1];
    s[k] = sk;
    for i in (0..k).rev() {
        // coefficient of x^{k+i} in s^2, minus the unknown term 2 s_k s_i
        let mut acc = BigInt::zero();
        for j in (i + 1)..k {
            acc += &s[j] * &s[k + i - j];
        }
        let (si, rem) = (&a.coeffs[k + i] - acc).div_rem(&two_sk);
        if !rem.is_zero() {
            return Err(ElimError::NotASquare);
        }
        s[i] = si;
    }
    let s = UniPoly::new(s);
    if upoly_mul(&s, &s) == *a {
        Ok(s)
    } else {
        Err(ElimError::NotASquare)
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::default()
    }
    fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::new(v)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        upoly_mul(self, rhs)
    }
    fn negate(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_bigint(n: &BigInt) -> Self {
        UniPoly::constant(n.clone())
    }
    fn exact_div(&self, d: &Self) -> Result<Self> {
        upoly_exact_div(self, d)
    }

    /// Small matrices go through Bareiss; larger ones are evaluated at
    /// integer points and interpolated, with the degree bound taken from the
    /// row and column degree sums.
    fn det(m: &Matrix<Self>) -> Self {
        let n = m.size();
        if n <= 4 {
            return super::det_fraction_free(m);
        }
        let Some(bound) = det_degree_bound(m) else {
            return UniPoly::default();
        };
        let ints: Vec<Vec<UniPoly>> = (0..n).map(|i| m.row(i).to_vec()).collect();
        interp::interpolate_with(bound, |x| {
            let xb = BigInt::from(x);
            let e = Matrix::from_fn(n, |i, j| ints[i][j].eval(&xb));
            Ok(BigInt::det(&e))
        })
        .expect("integer-node interpolation of an integer polynomial is exact")
    }
}

impl SquareRoot for UniPoly {
    fn square_root(&self) -> Result<Self> {
        upoly_sqrt(self)
    }
}

/// Upper bound for the degree of `det m`, or `None` when some row or column
/// is identically zero.
pub(crate) fn det_degree_bound(m: &Matrix<UniPoly>) -> Option<usize> {
    let n = m.size();
    let mut rows = 0usize;
    let mut cols = 0usize;
    for i in 0..n {
        rows += (0..n).filter_map(|j| m.get(i, j).degree()).max()?;
        cols += (0..n).filter_map(|j| m.get(j, i).degree()).max()?;
    }
    Some(rows.min(cols))
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != BigInt::from(1) {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(cs)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(upoly_mul(&p(&[1, 1]), &p(&[-1, 1])), p(&[-1, 0, 1]));
        assert!(upoly_mul(&p(&[]), &p(&[5, 0, 0, 1])).is_zero());
        assert_eq!(upoly_mul(&p(&[3, 2]), &p(&[5, 4])), p(&[15, 22, 8]));
    }

    #[test]
    fn div_examples() {
        assert_eq!(upoly_exact_div(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(upoly_exact_div(&p(&[1, 0, 1]), &p(&[1, 1])), Err(ElimError::NotDivisible));
        assert_eq!(upoly_exact_div(&p(&[15, 22, 8]), &p(&[3, 2])).unwrap(), p(&[5, 4]));
        assert_eq!(upoly_exact_div(&p(&[3]), &p(&[2])), Err(ElimError::NotDivisible));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(upoly_sqrt(&p(&[1, 2, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(upoly_sqrt(&p(&[0, 0, 4])).unwrap(), p(&[0, 2]));
        assert_eq!(upoly_sqrt(&p(&[1, 1, 1])), Err(ElimError::NotASquare));
        assert_eq!(upoly_sqrt(&p(&[0, 1])), Err(ElimError::NotASquare));
        assert_eq!(upoly_sqrt(&p(&[-1, 0, -1])), Err(ElimError::NotASquare));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(p(&[-1, 0, 3, 1]).to_string(), "x^3 + 3*x^2 - 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn det_by_interpolation_matches_bareiss() {
        let m = Matrix::from_fn(6, |i, j| p(&[(i * 3 + j) as i64 % 5 - 2, ((i + 2 * j) % 3) as i64 - 1, (i == j) as i64]));
        assert_eq!(UniPoly::det(&m), super::super::det_fraction_free(&m));
    }
}
