//! Exact coefficient rings: big integers, dense integer polynomials in one
//! parameter, and fraction-free determinants over any of them.

mod interp;
mod matrix;
mod modular;
mod upoly;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{ElimError, Result};

pub use interp::{interpolate, interpolate_with, sample_point, sample_points};
pub use matrix::{det_cofactor, det_fraction_free, Matrix};
pub use modular::{det_modular, hadamard_bits};
pub use upoly::{upoly_exact_div, upoly_mul, upoly_sqrt, UniPoly};

/// Minimal contract every coefficient ring satisfies. All higher modules are
/// written against this trait, so the same code runs over `BigInt`,
/// `UniPoly` and nested `MultiPoly`.
pub trait Ring: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    /// `self / d`, failing with `NotDivisible` unless the quotient is exact.
    fn exact_div(&self, d: &Self) -> Result<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Determinant. The default is Bareiss elimination; rings with a faster
    /// exact path override it.
    fn det(m: &Matrix<Self>) -> Self {
        det_fraction_free(m)
    }
}

/// Rings with an exact square root (used to extract perfect-square factors).
pub trait SquareRoot: Ring {
    fn square_root(&self) -> Result<Self>;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
    fn exact_div(&self, d: &Self) -> Result<Self> {
        if Zero::is_zero(d) {
            return Err(ElimError::NotDivisible);
        }
        let (q, r) = self.div_rem(d);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(ElimError::NotDivisible)
        }
    }
    fn det(m: &Matrix<Self>) -> Self {
        if m.size() <= 24 {
            det_fraction_free(m)
        } else {
            det_modular(m)
        }
    }
}

impl SquareRoot for BigInt {
    fn square_root(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(ElimError::NotASquare);
        }
        let s = Roots::sqrt(self);
        if &s * &s == *self {
            Ok(s)
        } else {
            Err(ElimError::NotASquare)
        }
    }
}

/// Integer power helper for the constant cofactors (powers of 2).
pub fn int_pow(base: i64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

/// `(-1)^e` as a ring element.
pub fn sign_pow<R: Ring>(e: u64) -> R {
    if e % 2 == 0 {
        R::one()
    } else {
        R::one().negate()
    }
}
