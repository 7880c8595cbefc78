//! Extraction of the named irreducible factors from their defining
//! resultants: every division and square root is checked to be exact.

use super::{d3, delta, delta_pow, mres, pleat_resultant, pow2, u00, at_x4};
use crate::error::{ElimError, Result};
use crate::exactalg::{Ring, SquareRoot};
use crate::macaulay::ResultantRing;
use crate::multipoly::MultiPoly;

fn nonzero_u00<R: Ring>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    let u = u00(p, d);
    if u.is_zero() {
        return Err(ElimError::DegenerateInput("U_{0,0} specializes to zero".into()));
    }
    Ok(u)
}

/// Res(P1, d3 P1, delta^2 P1, P2(X4)).
pub(super) fn t_resultant<R: ResultantRing>(p1: &MultiPoly<R>, p2: &MultiPoly<R>, d1: u32, d2: u32) -> Result<R> {
    mres(&[p1.clone(), d3(p1), delta_pow(p1, 2), at_x4(p2)], &[d1, d1 - 1, d1 - 2, d2])
}

pub(super) fn t_from<R: Ring>(res: &R, u: &R, d1: u32, d2: u32) -> Result<R> {
    res.exact_div(&u.pow((d1 * d2) as u64))
}

/// T(P1, P2) = Res(P1, d3 P1, delta^2 P1, P2(X4)) / U_{0,0}^(d1 d2), and 1
/// when d1 = 2.
pub fn extract_t<R: ResultantRing>(p1: &MultiPoly<R>, p2: &MultiPoly<R>, d1: u32, d2: u32) -> Result<R> {
    if d1 < 2 {
        return Err(ElimError::InvalidArgument("T needs d1 >= 2".into()));
    }
    let u = nonzero_u00(p1, d1)?;
    if d1 == 2 {
        return Ok(R::one());
    }
    t_from(&t_resultant(p1, p2, d1, d2)?, &u, d1, d2)
}

/// Res(P1, delta P1, P2, delta P2) over X1..X4.
pub(super) fn square_resultant<R: ResultantRing>(p1: &MultiPoly<R>, p2: &MultiPoly<R>, d1: u32, d2: u32) -> Result<R> {
    mres(&[p1.clone(), delta(p1), p2.clone(), delta(p2)], &[d1, d1 - 1, d2, d2 - 1])
}

/// D(P1, P2): the square root of Res(P1, delta P1, P2, delta P2), positive
/// leading coefficient.
pub fn extract_d<R: ResultantRing + SquareRoot>(p1: &MultiPoly<R>, p2: &MultiPoly<R>, d1: u32, d2: u32) -> Result<R> {
    if d1 < 2 || d2 < 2 {
        return Err(ElimError::InvalidArgument("D needs d1, d2 >= 2".into()));
    }
    square_resultant(p1, p2, d1, d2)?.square_root()
}

/// Res(P, d3 P, d3^2 P).
pub(super) fn flex_resultant<R: ResultantRing>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    let dp = d3(p);
    let ddp = d3(&dp);
    mres(&[p.clone(), dp, ddp], &[d, d - 1, d - 2])
}

pub(super) fn f_from<R: Ring>(res: &R, u: &R, d: u32) -> Result<R> {
    res.exact_div(&pow2::<R>((d * (d - 1)) as u64).times(&u.times(u)))
}

/// F(P) = Res(P, d3 P, d3^2 P) / (2^(d(d-1)) U_{0,0}^2).
pub fn extract_f<R: ResultantRing>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    if d < 3 {
        return Err(ElimError::InvalidArgument("F needs d >= 3".into()));
    }
    let u = nonzero_u00(p, d)?;
    f_from(&flex_resultant(p, d)?, &u, d)
}

pub(super) fn u_exponent(d: u32) -> u64 {
    (2 * d * (d - 1) - 6) as u64
}

pub(super) fn u_from<R: SquareRoot>(pleat: &R, u: &R, d: u32) -> Result<R> {
    pleat.exact_div(&u.pow(u_exponent(d)))?.square_root()
}

/// U(P): square root of the pleat resultant divided by U_{0,0}^(2d(d-1)-6).
pub fn extract_u<R: ResultantRing + SquareRoot>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    if d < 4 {
        return Err(ElimError::InvalidArgument("U needs d >= 4".into()));
    }
    let u = nonzero_u00(p, d)?;
    u_from(&pleat_resultant(p, d)?, &u, d)
}
