//! Divided differences, computed term by term from
//! (X^a - Y^a)/(X - Y) = sum_{l<a} X^l Y^(a-1-l); no polynomial division.

use super::MultiPoly;
use crate::error::{ElimError, Result};
use crate::exactalg::Ring;

/// delta_{i,j} P = (P - P|_{X_i := X_j}) / (X_i - X_j). For i == j this is
/// the partial derivative in X_i.
pub fn mp_delta<R: Ring>(p: &MultiPoly<R>, i: usize, j: usize) -> MultiPoly<R> {
    if i == j {
        return p.partial(i);
    }
    let mut out = MultiPoly::default();
    for (m, c) in p.iter() {
        let a = m.exp(i);
        if a == 0 {
            continue;
        }
        let b = m.exp(j);
        let base = m.with_exp(i, 0);
        for l in 0..a {
            let t = base.with_exp(i, l).with_exp(j, b + a - 1 - l);
            out.add_term(t, c);
        }
    }
    out
}

/// k-th divided power in the variable X_j with base point X_i:
/// delta^k P = D^k (P with X_i renamed to X_j), where
/// D Q = (Q - Q|_{X_j := X_i}) / (X_j - X_i).
///
/// This is the convention under which delta P = dP + (X_j - X_i) delta^2 P
/// and k! delta^k P |_{X_j = X_i} = d^k P hold; P must not involve X_j.
pub fn mp_delta_pow<R: Ring>(p: &MultiPoly<R>, i: usize, j: usize, k: u32) -> Result<MultiPoly<R>> {
    if k == 0 {
        return Ok(p.clone());
    }
    if i == j {
        let mut q = p.clone();
        for _ in 0..k {
            q = q.partial(i);
        }
        return Ok(q);
    }
    if p.involves(j) {
        return Err(ElimError::InvalidArgument(format!(
            "divided power needs a polynomial free of X{}",
            j + 1
        )));
    }
    let mut q = p.rename_var(i, j)?;
    for _ in 0..k {
        q = mp_delta(&q, j, i);
    }
    Ok(q)
}
