//! Evaluation/interpolation over the integer nodes 0, 1, -1, 2, -2, ...

use num_bigint::BigInt;

use super::{Ring, UniPoly};
use crate::error::{ElimError, Result};

/// The k-th node: 0, 1, -1, 2, -2, ...
pub fn sample_point(k: usize) -> i64 {
    let h = k.div_ceil(2) as i64;
    if k % 2 == 1 {
        h
    } else {
        -h
    }
}

pub fn sample_points(count: usize) -> Vec<i64> {
    (0..count).map(sample_point).collect()
}

/// Newton interpolation with exact integer divided differences. Integer
/// nodes make every divided difference of an integer polynomial integral,
/// so a non-exact step means the data do not come from a polynomial in
/// Z[x] of degree < len.
pub fn interpolate(xs: &[i64], ys: &[BigInt]) -> Result<UniPoly> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<BigInt> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigInt::from(xs[i] - xs[i - level]);
            dd[i] = num.exact_div(&den)?;
        }
    }
    // Horner on the Newton form
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        let shifted = acc.times(&UniPoly::from_i64s(&[-xs[i], 1]));
        acc = shifted.plus(&UniPoly::constant(dd[i].clone()));
    }
    Ok(acc)
}

/// Recovers a polynomial of degree at most `bound` from its values at the
/// first `bound + 1` nodes.
pub fn interpolate_with(bound: usize, f: impl Fn(i64) -> Result<BigInt>) -> Result<UniPoly> {
    let xs = sample_points(bound + 1);
    let mut ys = Vec::with_capacity(xs.len());
    for &x in &xs {
        ys.push(f(x)?);
    }
    if ys.iter().all(|y| y.is_zero()) {
        return Ok(UniPoly::zero());
    }
    interpolate(&xs, &ys).map_err(|_| ElimError::InvalidArgument("interpolation data inconsistent with Z[x]".into()))
}
