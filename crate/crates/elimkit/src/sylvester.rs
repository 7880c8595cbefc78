//! Univariate resultants, the principal subresultant and the discriminant,
//! always in declared degrees.

use crate::error::{ElimError, Result};
use crate::exactalg::{Matrix, Ring};
use crate::multipoly::{DeclaredUniView, MultiPoly};

/// Two polynomials in the same variable with their declared degrees.
#[derive(Clone, Debug)]
pub struct SylvesterSpec<R: Ring> {
    pub f: DeclaredUniView<R>,
    pub g: DeclaredUniView<R>,
}

impl<R: Ring> SylvesterSpec<R> {
    pub fn new(f: &MultiPoly<R>, g: &MultiPoly<R>, var: usize, m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(ElimError::InvalidArgument("declared degrees must be positive".into()));
        }
        Ok(SylvesterSpec {
            f: f.as_declared(var, m)?,
            g: g.as_declared(var, n)?,
        })
    }
}

/// Sylvester matrix laid out column-wise: n shifted copies of
/// a_m, ..., a_0 followed by m shifted copies of b_n, ..., b_0.
/// `f[k]` and `g[k]` are the coefficients of X^k.
pub fn sylvester_matrix<C: Ring>(f: &[C], g: &[C]) -> Matrix<C> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut a = Matrix::zeros(size);
    for j in 0..n {
        for k in 0..=m {
            a.set(j + k, j, f[m - k].clone());
        }
    }
    for j in 0..m {
        for k in 0..=n {
            a.set(j + k, n + j, g[n - k].clone());
        }
    }
    a
}

pub fn res_coeffs<C: Ring>(f: &[C], g: &[C]) -> C {
    C::det(&sylvester_matrix(f, g))
}

/// Determinant of the Sylvester matrix with its last two rows and its
/// columns n and n+m (1-based) removed.
pub fn sres1_coeffs<C: Ring>(f: &[C], g: &[C]) -> Result<C> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m + n < 3 {
        return Err(ElimError::InvalidArgument("sres1 needs m + n >= 3".into()));
    }
    let s = sylvester_matrix(f, g);
    let size = m + n;
    let minor = s.delete(&[size - 2, size - 1], &[n - 1, n + m - 1]);
    Ok(C::det(&minor))
}

/// a_n * Disc = Res(P, P') in degrees (n, n-1).
pub fn disc_coeffs<C: Ring>(p: &[C]) -> Result<C> {
    let n = p.len() - 1;
    if n == 0 {
        return Err(ElimError::InvalidArgument("discriminant needs degree >= 1".into()));
    }
    let lead = &p[n];
    if lead.is_zero() {
        return Err(ElimError::LeadingZero);
    }
    if n == 1 {
        return Ok(C::one());
    }
    let dp: Vec<C> = (1..=n).map(|k| p[k].times(&C::from_i64(k as i64))).collect();
    let r = res_coeffs(p, &dp);
    Ok(r.exact_div(lead).expect("a_n divides Res(P, P')"))
}

fn lower<R: Ring>(v: &DeclaredUniView<R>) -> Option<Vec<R>> {
    v.coeffs
        .iter()
        .all(|c| c.is_constant())
        .then(|| v.coeffs.iter().map(|c| c.constant_term()).collect())
}

/// Resultant in declared degrees. Coefficients that are all constants are
/// handled directly in the base ring.
pub fn res_uni<R: Ring>(spec: &SylvesterSpec<R>) -> MultiPoly<R> {
    if let (Some(f), Some(g)) = (lower(&spec.f), lower(&spec.g)) {
        return MultiPoly::constant(res_coeffs(&f, &g));
    }
    res_coeffs(&spec.f.coeffs, &spec.g.coeffs)
}

pub fn sres1<R: Ring>(spec: &SylvesterSpec<R>) -> Result<MultiPoly<R>> {
    if let (Some(f), Some(g)) = (lower(&spec.f), lower(&spec.g)) {
        return Ok(MultiPoly::constant(sres1_coeffs(&f, &g)?));
    }
    sres1_coeffs(&spec.f.coeffs, &spec.g.coeffs)
}

pub fn disc_uni<R: Ring>(p: &DeclaredUniView<R>) -> Result<MultiPoly<R>> {
    if let Some(c) = lower(p) {
        return Ok(MultiPoly::constant(disc_coeffs(&c)?));
    }
    disc_coeffs(&p.coeffs)
}

/// Res_var(f, g) in declared degrees (m, n).
pub fn res_in<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>, var: usize, m: u32, n: u32) -> Result<MultiPoly<R>> {
    Ok(res_uni(&SylvesterSpec::new(f, g, var, m, n)?))
}

pub fn sres1_in<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>, var: usize, m: u32, n: u32) -> Result<MultiPoly<R>> {
    sres1(&SylvesterSpec::new(f, g, var, m, n)?)
}

/// Disc_var(p) in declared degree n.
pub fn disc_in<R: Ring>(p: &MultiPoly<R>, var: usize, n: u32) -> Result<MultiPoly<R>> {
    disc_uni(&p.as_declared(var, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{parse_poly, X2, X3};
    use num_bigint::BigInt;

    fn p(s: &str) -> MultiPoly<BigInt> {
        parse_poly(s).unwrap()
    }

    #[test]
    fn linear_resultant() {
        // Res_X(aX+b, cX+d) = ad - cb with (a,b,c,d) = (2,3,5,7)
        let r = res_in(&p("2*X3+3"), &p("5*X3+7"), X3, 1, 1).unwrap();
        assert_eq!(r, p("2*7-5*3"));
    }

    #[test]
    fn common_root_gives_zero() {
        assert!(res_in(&p("X3^2-1"), &p("X3-1"), X3, 2, 1).unwrap().is_zero());
    }

    #[test]
    fn quadratic_discriminant_sign() {
        // 4ac - b^2 with a=3, b=5, c=7
        assert_eq!(disc_in(&p("3*X3^2+5*X3+7"), X3, 2).unwrap(), p("4*3*7-25"));
        assert!(disc_in(&p("X3^2-2*X3+1"), X3, 2).unwrap().is_zero());
        assert_eq!(disc_in(&p("X3"), X3, 2), Err(ElimError::LeadingZero));
    }

    #[test]
    fn declared_degree_example() {
        let f1 = p("y^2+z+x");
        let f2 = p("-y^2+z");
        let f3 = p("y^2+z");
        let r12 = res_in(&f1, &f2, X3, 1, 1).unwrap();
        let r13 = res_in(&f1, &f3, X3, 1, 1).unwrap();
        let r = res_in(&r12, &r13, X2, 2, 2).unwrap();
        assert_eq!(r, p("4*x^2"));
        let r12 = res_in(&f1, &f2, X3, 2, 2).unwrap();
        let r13 = res_in(&f1, &f3, X3, 2, 2).unwrap();
        assert!(r12.is_zero() && r13.is_zero());
    }

    #[test]
    fn sres1_examples() {
        // (d1,d2) = (2,2): the 2x2 minor is a2*b1 - b2*a1
        let s = sres1_in(&p("X1^2+X2*X3"), &p("X3^2"), X3, 2, 2).unwrap();
        assert_eq!(s, p("-X2"));
        let s = sres1_in(&p("X3^2+7*X1^2"), &p("X1*X3-X2^2"), X3, 2, 2).unwrap();
        assert_eq!(s, p("X1"));
    }
}
