use super::extract::{f_from, flex_resultant, square_resultant, t_from, t_resultant, u_exponent, u_from};
use super::{
    affine, at_x4, d3, delta, delta_pow, disc_y, iterated_disc, mres, pleat_resultant, pow2, res_y, res_z, u00,
    Evaluation, IdentityId, IdentityRing,
};
use crate::error::{ElimError, Result};
use crate::exactalg::{sign_pow, Ring};
use crate::macaulay::{disc_pair, disc_ternary, ResultantRing};
use crate::multipoly::{MultiPoly, X3};
use crate::sylvester::sres1_in;

type Poly<R> = MultiPoly<R>;

/// Evaluates identity `id` on specialized forms `ps` of degrees
/// `id.poly_degrees(degs)`.
pub fn evaluate<R: IdentityRing>(id: IdentityId, degs: &[u32], ps: &[Poly<R>]) -> Result<Evaluation<R>> {
    id.validate(degs)?;
    let pd = id.poly_degrees(degs);
    if ps.len() != pd.len() {
        return Err(ElimError::InvalidArgument(format!("{id} needs {} forms", pd.len())));
    }
    for (p, &d) in ps.iter().zip(&pd) {
        if !p.is_homogeneous(d) || (0..2).any(|v| p.involves(3 + v)) {
            return Err(ElimError::InvalidArgument(format!("forms must be homogeneous in X1..X3 of degree {d}")));
        }
    }
    use IdentityId::*;
    match id {
        I1 => res_res_4(ps, &pd),
        I2 => res_res_shared(ps, &pd),
        I3 => res_disc_res(ps, &pd),
        I4 => res_disc_disc(ps, &pd),
        I5 => res_disc_shared(ps, &pd),
        I6 => disc_res_first(ps, &pd),
        I7 => sres_threeway(ps, &pd),
        I8 => square(ps, &pd),
        I9 => discdisc_first(&ps[0], pd[0]),
        I10 => flex(&ps[0], pd[0]),
        I11 => dd_split(&ps[0], pd[0]),
        I12 => pleat(&ps[0], pd[0]),
        I13 => discdisc_full(&ps[0], pd[0]),
        I14 => product_specializations(&ps[0], &ps[1], degs[0]),
    }
}

fn lead<R: Ring>(p: &Poly<R>, d: u32) -> Result<R> {
    let u = u00(p, d);
    if u.is_zero() {
        return Err(ElimError::DegenerateInput("U_{0,0} specializes to zero".into()));
    }
    Ok(u)
}

/// Res_X2(R12, R34) = Res(P1, P2, P3(X4), P4(X4)).
pub fn res_res_4<R: ResultantRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let a: Vec<_> = ps.iter().map(affine).collect();
    let r12 = res_z(&a[0], &a[1], d[0], d[1])?;
    let r34 = res_z(&a[2], &a[3], d[2], d[3])?;
    let lhs = res_y(&r12, &r34, d[0] * d[1], d[2] * d[3])?;
    let rhs = mres(&[ps[0].clone(), ps[1].clone(), at_x4(&ps[2]), at_x4(&ps[3])], d)?;
    Ok(Evaluation::new()
        .eq("Res_X2(R12, R34) = Res(P1, P2, P3(X4), P4(X4))", lhs.clone(), rhs)
        .qty("iterated", lhs, 1))
}

fn res_res_shared<R: ResultantRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let a: Vec<_> = ps.iter().map(affine).collect();
    let r13 = res_z(&a[0], &a[2], d[0], d[2])?;
    let r12 = res_z(&a[0], &a[1], d[0], d[1])?;
    let lhs = res_y(&r13, &r12, d[0] * d[2], d[0] * d[1])?;
    let f1 = mres(&ps[..3], d)?;
    let f2 = mres(
        &[ps[0].clone(), at_x4(&ps[1]), ps[2].clone(), delta(&ps[0])],
        &[d[0], d[1], d[2], d[0] - 1],
    )?;
    Ok(Evaluation::new()
        .eq(
            "Res_X2(R13, R12) = Res(P1, P2, P3) Res(P1, P2(X4), P3, delta P1)",
            lhs.clone(),
            f1.times(&f2),
        )
        .qty("iterated", lhs, 1)
        .qty("Res(P1,P2,P3)", f1, 1)
        .qty("Res(P1,P2(X4),P3,delta P1)", f2, 1))
}

fn res_disc_res<R: ResultantRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let u = lead(&ps[0], d[0])?;
    let d1 = super::disc_z(&affine(&ps[0]), d[0])?;
    let r23 = res_z(&affine(&ps[1]), &affine(&ps[2]), d[1], d[2])?;
    let it = res_y(&d1, &r23, d[0] * (d[0] - 1), d[1] * d[2])?;
    let rhs = mres(
        &[ps[0].clone(), d3(&ps[0]), at_x4(&ps[1]), at_x4(&ps[2])],
        &[d[0], d[0] - 1, d[1], d[2]],
    )?;
    Ok(Evaluation::new()
        .eq(
            "U1^(d2 d3) Res_X2(D1, R23) = Res(P1, d3 P1, P2(X4), P3(X4))",
            u.pow((d[1] * d[2]) as u64).times(&it),
            rhs,
        )
        .qty("iterated", it, 1))
}

fn res_disc_disc<R: ResultantRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let u1 = lead(&ps[0], d[0])?;
    let u2 = lead(&ps[1], d[1])?;
    let disc1 = super::disc_z(&affine(&ps[0]), d[0])?;
    let disc2 = super::disc_z(&affine(&ps[1]), d[1])?;
    let it = res_y(&disc1, &disc2, d[0] * (d[0] - 1), d[1] * (d[1] - 1))?;
    let lhs = u1
        .pow((d[1] * (d[1] - 1)) as u64)
        .times(&u2.pow((d[0] * (d[0] - 1)) as u64))
        .times(&it);
    let rhs = mres(
        &[ps[0].clone(), d3(&ps[0]), at_x4(&ps[1]), at_x4(&d3(&ps[1]))],
        &[d[0], d[0] - 1, d[1], d[1] - 1],
    )?;
    Ok(Evaluation::new()
        .eq("U1^(d2(d2-1)) U2^(d1(d1-1)) Res_X2(D1, D2) = Res(P1, d3 P1, P2(X4), d3 P2(X4))", lhs, rhs)
        .qty("iterated", it, 1))
}

fn res_disc_shared<R: ResultantRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let (d1, d2) = (d[0], d[1]);
    let u = lead(&ps[0], d1)?;
    let disc1 = super::disc_z(&affine(&ps[0]), d1)?;
    let r12 = res_z(&affine(&ps[0]), &affine(&ps[1]), d1, d2)?;
    let it = res_y(&disc1, &r12, d1 * (d1 - 1), d1 * d2)?;
    let s = mres(&[ps[0].clone(), d3(&ps[0]), ps[1].clone()], &[d1, d1 - 1, d2])?;
    let tr = t_resultant(&ps[0], &ps[1], d1, d2)?;
    let t = t_from(&tr, &u, d1, d2)?;
    let s2 = s.times(&s);
    let mut ev = Evaluation::new()
        .eq(
            "U1^(d1 d2) Res_X2(D1, R12) = Res(P1, d3 P1, P2)^2 Res(P1, d3 P1, delta^2 P1, P2(X4))",
            u.pow((d1 * d2) as u64).times(&it),
            s2.times(&tr),
        )
        .eq("Res_X2(D1, R12) = Res(P1, d3 P1, P2)^2 T", it.clone(), s2.times(&t));
    if d1 == 2 {
        ev = ev.eq("T = 1 for d1 = 2", t.clone(), R::one());
    }
    Ok(ev.qty("iterated", it, 1).qty("Res(P1,d3 P1,P2)", s, 2).qty("T", t, 1))
}

fn sres_poly<R: Ring>(p1: &Poly<R>, p2: &Poly<R>, d1: u32, d2: u32) -> Result<Poly<R>> {
    sres1_in(p1, p2, X3, d1, d2)
}

/// Exponent of -1 in front of the Disc-of-Res factorization. The naive
/// (d2+1)(d1 d2+d1-1) misses the sign of
/// Res(X3^d1 + B X1^d1, X1^(d2-1) X3 - X2^d2, X1^k), which is 1 and not
/// (-1)^k for k = (d1-1)(d2-1); with it the total exponent
/// d1 d2 (d2+3) - 2 d2 is always even.
pub fn disc_res_sign_exponent(d1: u32, d2: u32) -> u64 {
    let naive = (d2 + 1) * (d1 * d2 + d1 - 1);
    let fix = (d1 - 1) * (d2 - 1);
    ((naive + fix) % 2) as u64
}

fn disc_res_first<R: ResultantRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let (d1, d2) = (d[0], d[1]);
    let r12 = res_z(&affine(&ps[0]), &affine(&ps[1]), d1, d2)?;
    let lhs = disc_y(&r12, d1 * d2)?;
    let s = sres_poly(&ps[0], &ps[1], d1, d2)?;
    let rs = mres(&[ps[0].clone(), ps[1].clone(), s], &[d1, d2, (d1 - 1) * (d2 - 1)])?;
    let dp = disc_pair(&ps[0], &ps[1], d1, d2).map_err(super::degenerate)?;
    let sign: R = sign_pow(disc_res_sign_exponent(d1, d2));
    Ok(Evaluation::new()
        .eq("Disc_X2(R12) = Res(P1, P2, SRes1) Disc(P1, P2)", lhs.clone(), sign.times(&rs).times(&dp))
        .qty("iterated", lhs, 1)
        .qty("Res(P1,P2,SRes1)", rs, 1)
        .qty("Disc(P1,P2)", dp, 1))
}

fn sres_threeway<R: ResultantRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let (d1, d2) = (d[0], d[1]);
    let s = sres_poly(&ps[0], &ps[1], d1, d2)?;
    let rs = mres(&[ps[0].clone(), ps[1].clone(), s], &[d1, d2, (d1 - 1) * (d2 - 1)])?;
    let (a1, a2) = (affine(&ps[0]), affine(&ps[1]));
    let r12 = res_z(&a1, &a2, d1, d2)?;
    let s_aff = sres_poly(&a1, &a2, d1, d2)?;
    let mid = res_y(&r12, &s_aff, d1 * d2, (d1 - 1) * (d2 - 1))?;
    let r4 = square_resultant(&ps[0], &ps[1], d1, d2)?;
    Ok(Evaluation::new()
        .eq("Res(P1, P2, SRes1) = Res_X2(R12, SRes1)", rs.clone(), mid)
        .eq("Res(P1, P2, SRes1) = Res(P1, delta P1, P2, delta P2)", rs, r4.clone())
        .qty("Res(P1,delta P1,P2,delta P2)", r4, 1))
}

fn square<R: IdentityRing>(ps: &[Poly<R>], d: &[u32]) -> Result<Evaluation<R>> {
    let r4 = square_resultant(&ps[0], &ps[1], d[0], d[1])?;
    let dd = r4.square_root()?;
    Ok(Evaluation::new()
        .eq("Res(P1, delta P1, P2, delta P2) = D^2", r4.clone(), dd.times(&dd))
        .qty("Res(P1,delta P1,P2,delta P2)", r4, 0)
        .qty("D", dd, 2))
}

/// Res(P, delta P, d3 P, delta d3 P).
fn double_fold_resultant<R: ResultantRing>(p: &Poly<R>, d: u32) -> Result<R> {
    let dp = d3(p);
    mres(&[p.clone(), delta(p), dp.clone(), delta(&dp)], &[d, d - 1, d - 1, d - 2])
}

fn discdisc_first<R: ResultantRing>(p: &Poly<R>, d: u32) -> Result<Evaluation<R>> {
    let u = lead(p, d)?;
    let dd = iterated_disc(p, d)?;
    let disc = disc_ternary(p, d).map_err(super::degenerate)?;
    let r3 = flex_resultant(p, d)?;
    let r4 = double_fold_resultant(p, d)?;
    Ok(Evaluation::new()
        .eq(
            "U^(2d^2-2d-1) Disc_X2(Disc_X3(P)) = Disc(P) Res(P, d3 P, d3^2 P) Res(P, delta P, d3 P, delta d3 P)",
            u.pow((2 * d * d - 2 * d - 1) as u64).times(&dd),
            disc.times(&r3).times(&r4),
        )
        .qty("iterated", dd, 1)
        .qty("Disc(P)", disc, 1)
        .qty("Res(P,d3 P,d3^2 P)", r3, 1)
        .qty("Res(P,delta P,d3 P,delta d3 P)", r4, 1))
}

fn flex<R: ResultantRing>(p: &Poly<R>, d: u32) -> Result<Evaluation<R>> {
    let u = lead(p, d)?;
    let r3 = flex_resultant(p, d)?;
    let f = f_from(&r3, &u, d)?;
    let c = pow2::<R>((d * (d - 1)) as u64).times(&u).times(&u);
    Ok(Evaluation::new()
        .eq("Res(P, d3 P, d3^2 P) = 2^(d(d-1)) U^2 F", r3.clone(), c.times(&f))
        .qty("Res(P,d3 P,d3^2 P)", r3, 0)
        .qty("F", f, 1))
}

fn dd_split<R: ResultantRing>(p: &Poly<R>, d: u32) -> Result<Evaluation<R>> {
    let r4 = double_fold_resultant(p, d)?;
    let r3 = flex_resultant(p, d)?;
    let pr = pleat_resultant(p, d)?;
    Ok(Evaluation::new()
        .eq(
            "2^(d(d-1)) Res(P, delta P, d3 P, delta d3 P) = Res(P, d3 P, d3^2 P)^2 R(P)",
            pow2::<R>((d * (d - 1)) as u64).times(&r4),
            r3.times(&r3).times(&pr),
        )
        .qty("Res(P,delta P,d3 P,delta d3 P)", r4, 0)
        .qty("Res(P,d3 P,d3^2 P)", r3, 2)
        .qty("R(P)", pr, 1))
}

fn pleat<R: IdentityRing>(p: &Poly<R>, d: u32) -> Result<Evaluation<R>> {
    let u = lead(p, d)?;
    let pr = pleat_resultant(p, d)?;
    let uu = u_from(&pr, &u, d)?;
    Ok(Evaluation::new()
        .eq(
            "R(P) = U^(2d(d-1)-6) U(P)^2",
            pr.clone(),
            u.pow(u_exponent(d)).times(&uu).times(&uu),
        )
        .qty("R(P)", pr, 0)
        .qty("U", uu, 2))
}

/// Power of 2 in front of the full iterated-discriminant factorization
/// when F and U are normalized as in `flex` and `pleat`. Chaining those
/// with `discdisc_first` and `dd_split`, the flex resultant cubed brings
/// 2^(3d(d-1)) and the split divides out 2^(d(d-1)).
pub fn discdisc_constant(d: u32) -> u64 {
    (2 * d * (d - 1)) as u64
}

fn discdisc_full<R: IdentityRing>(p: &Poly<R>, d: u32) -> Result<Evaluation<R>> {
    let u = lead(p, d)?;
    let dd = iterated_disc(p, d)?;
    let disc = disc_ternary(p, d).map_err(super::degenerate)?;
    let f = f_from(&flex_resultant(p, d)?, &u, d)?;
    let uu = u_from(&pleat_resultant(p, d)?, &u, d)?;
    let rhs = pow2::<R>(discdisc_constant(d))
        .times(&u)
        .times(&disc)
        .times(&f.pow(3))
        .times(&uu.times(&uu));
    Ok(Evaluation::new()
        .eq("Disc_X2(Disc_X3(P)) = 2^(2d(d-1)) U Disc(P) F^3 U(P)^2", dd.clone(), rhs)
        .qty("iterated", dd, 0)
        .qty("Disc(P)", disc, 1)
        .qty("F", f, 3)
        .qty("U", uu, 2))
}

fn product_specializations<R: ResultantRing>(l: &Poly<R>, q: &Poly<R>, d: u32) -> Result<Evaluation<R>> {
    let c = u00(l, 1);
    let p = l.times(q);
    let dq = d3(q);
    let lq = mres(&[l.clone(), q.clone(), dq.clone()], &[1, d - 1, d - 2])?;
    let fq = flex_resultant(q, d - 1)?;
    let fp = flex_resultant(&p, d)?;
    let two_e = pow2::<R>(2 * (d - 1) as u64);
    let mut ev = Evaluation::new().eq(
        "Res(LQ, d3 LQ, d3^2 LQ) = 2^(2(d-1)) c^(3d-4) Res(L, Q, d3 Q)^3 Res(Q, d3 Q, d3^2 Q)",
        fp,
        two_e.times(&c.pow((3 * d - 4) as u64)).times(&lq.pow(3)).times(&fq),
    );

    let dp = d3(&p);
    let lhs2 = mres(&[p.clone(), dp.clone(), delta(&p), delta(&dp)], &[d, d - 1, d - 1, d - 2])?;
    let lt = mres(&[at_x4(l), q.clone(), dq.clone(), delta_pow(q, 2)], &[1, d - 1, d - 2, d - 3])?;
    let qq = mres(&[q.clone(), delta(q), dq.clone(), delta(&dq)], &[d - 1, d - 2, d - 2, d - 3])?;
    let rhs2 = two_e
        .times(&c.pow((2 * (d - 1) * (3 * d - 5)) as u64))
        .times(&lq.pow(6))
        .times(&lt.pow(4))
        .times(&qq);
    ev = ev.eq(
        "Res(LQ, d3 LQ, delta LQ, delta d3 LQ) = 2^(2(d-1)) c^(2(d-1)(3d-5)) Res(L,Q,d3 Q)^6 Res(L(X4),Q,d3 Q,delta^2 Q)^4 Res(Q,delta Q,d3 Q,delta d3 Q)",
        lhs2,
        rhs2,
    );

    if d >= 4 {
        let rp = pleat_resultant(&p, d)?;
        let rq = pleat_resultant(q, d - 1)?;
        let e = (6 * d * d + 18 - 22 * d) as u64;
        ev = ev.eq(
            "R(LQ) = c^(6d^2-22d+18) Res(L(X4), Q, d3 Q, delta^2 Q)^4 R(Q)",
            rp,
            c.pow(e).times(&lt.pow(4)).times(&rq),
        );
    }
    Ok(ev.qty("Res(L,Q,d3 Q)", lq, 0).qty("Res(L(X4),Q,d3 Q,delta^2 Q)", lt, 0))
}
