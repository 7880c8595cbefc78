//! Catalog of iterated-elimination factorization identities. Every entry
//! computes both sides from the same specialized polynomials and reports
//! whether they agree exactly, together with the extracted factors.

mod catalog;
mod extract;
mod quartic;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{ElimError, Result};
use crate::exactalg::{Ring, SquareRoot, UniPoly};
use crate::macaulay::{res_xs, ResultantRing};
use crate::multipoly::{mp_delta, mp_delta_pow, Monomial, MultiPoly, X1, X2, X3, X4};
use crate::sylvester::{disc_in, res_in};

pub use catalog::{disc_res_sign_exponent, discdisc_constant, evaluate};
pub use extract::{extract_d, extract_f, extract_t, extract_u};
pub use quartic::{quartic_polynomial, quartic_showcase, FactorClass, FactorizationReport, QuarticFactor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    I9,
    I10,
    I11,
    I12,
    I13,
    I14,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::I1,
        IdentityId::I2,
        IdentityId::I3,
        IdentityId::I4,
        IdentityId::I5,
        IdentityId::I6,
        IdentityId::I7,
        IdentityId::I8,
        IdentityId::I9,
        IdentityId::I10,
        IdentityId::I11,
        IdentityId::I12,
        IdentityId::I13,
        IdentityId::I14,
    ];

    pub fn label(self) -> &'static str {
        use IdentityId::*;
        match self {
            I1 => "RES-RES-4",
            I2 => "RES-RES-3-SHARED",
            I3 => "RES-DISC-RES",
            I4 => "RES-DISC-DISC",
            I5 => "RES-DISC-SHARED",
            I6 => "DISC-RES-FIRST",
            I7 => "SRES-THREEWAY",
            I8 => "SQUARE",
            I9 => "DISCDISC-FIRST",
            I10 => "FLEX",
            I11 => "DD-SPLIT",
            I12 => "PLEAT",
            I13 => "DISCDISC-FULL",
            I14 => "PRODUCT-SPECIALIZATIONS",
        }
    }

    /// Number of degrees the identity is parameterized by.
    pub fn arity(self) -> usize {
        use IdentityId::*;
        match self {
            I1 => 4,
            I2 | I3 => 3,
            I4 | I5 | I6 | I7 | I8 => 2,
            I9 | I10 | I11 | I12 | I13 | I14 => 1,
        }
    }

    /// Degrees of the polynomials that get specialized. I14 takes the total
    /// degree d and works with a linear form L and a form Q of degree d - 1.
    pub fn poly_degrees(self, degs: &[u32]) -> Vec<u32> {
        match self {
            IdentityId::I14 => vec![1, degs[0] - 1],
            _ => degs.to_vec(),
        }
    }

    pub fn validate(self, degs: &[u32]) -> Result<()> {
        use IdentityId::*;
        if degs.len() != self.arity() {
            return Err(ElimError::InvalidArgument(format!(
                "{self} takes {} degree(s), got {}",
                self.arity(),
                degs.len()
            )));
        }
        if degs.iter().any(|&d| d == 0 || d > 6) {
            return Err(ElimError::InvalidArgument("degrees must lie in 1..=6".into()));
        }
        let need = |ok: bool, msg: &str| {
            if ok {
                Ok(())
            } else {
                Err(ElimError::InvalidArgument(format!("{self}: {msg}")))
            }
        };
        match self {
            I1 => Ok(()),
            I2 | I3 | I5 => need(degs[0] >= 2, "needs d1 >= 2"),
            I4 | I6 | I7 | I8 => need(degs[0] >= 2 && degs[1] >= 2, "needs d1, d2 >= 2"),
            I9 | I10 | I14 => need(degs[0] >= 3, "needs d >= 3"),
            I11 | I12 | I13 => need(degs[0] >= 4, "needs d >= 4"),
        }
    }

    /// Smallest admissible degree tuples.
    pub fn suite_degrees(self) -> Vec<Vec<u32>> {
        use IdentityId::*;
        match self {
            I1 => vec![vec![1, 1, 1, 1], vec![2, 1, 1, 1]],
            I2 | I3 => vec![vec![2, 1, 1], vec![3, 1, 1]],
            I5 => vec![vec![2, 1], vec![3, 1]],
            I4 | I6 | I7 | I8 => vec![vec![2, 2]],
            I9 | I10 => vec![vec![3]],
            I11 | I12 | I13 => vec![vec![4]],
            I14 => vec![vec![3], vec![4]],
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for IdentityId {
    type Err = ElimError;
    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.to_string() == up || id.label() == up)
            .ok_or_else(|| ElimError::InvalidArgument(format!("unknown identity '{s}'")))
    }
}

/// One equality checked by an identity.
#[derive(Clone, Debug)]
pub struct Equation<R> {
    pub label: String,
    pub lhs: R,
    pub rhs: R,
}

/// A named intermediate value; `multiplicity` is its exponent in the
/// factorization the identity asserts (0 for plain bookkeeping values).
#[derive(Clone, Debug)]
pub struct Quantity<R> {
    pub name: &'static str,
    pub value: R,
    pub multiplicity: u32,
}

#[derive(Clone, Debug)]
pub struct Evaluation<R> {
    pub equations: Vec<Equation<R>>,
    pub quantities: Vec<Quantity<R>>,
}

impl<R: Ring> Evaluation<R> {
    fn new() -> Self {
        Evaluation {
            equations: Vec::new(),
            quantities: Vec::new(),
        }
    }

    fn eq(mut self, label: impl Into<String>, lhs: R, rhs: R) -> Self {
        self.equations.push(Equation {
            label: label.into(),
            lhs,
            rhs,
        });
        self
    }

    fn qty(mut self, name: &'static str, value: R, multiplicity: u32) -> Self {
        self.quantities.push(Quantity {
            name,
            value,
            multiplicity,
        });
        self
    }

    pub fn quantity(&self, name: &str) -> Option<&R> {
        self.quantities.iter().find(|q| q.name == name).map(|q| &q.value)
    }

    pub fn all_equal(&self) -> bool {
        self.equations.iter().all(|e| e.lhs == e.rhs)
    }
}

/// Coefficient rings the catalog runs over.
pub trait IdentityRing: ResultantRing + SquareRoot + fmt::Display {
    /// Degree in the parameter, when there is one.
    fn param_degree(&self) -> Option<usize>;
    /// `Some(e)` when the value is `c * t^e` with `c != 0`.
    fn monomial_exponent(&self) -> Option<usize>;
}

impl IdentityRing for BigInt {
    fn param_degree(&self) -> Option<usize> {
        None
    }
    fn monomial_exponent(&self) -> Option<usize> {
        (!Ring::is_zero(self)).then_some(0)
    }
}

impl IdentityRing for UniPoly {
    fn param_degree(&self) -> Option<usize> {
        self.degree()
    }
    fn monomial_exponent(&self) -> Option<usize> {
        if self.is_monomial() {
            self.valuation()
        } else {
            None
        }
    }
}

// ---------------------------------------------------------------------------
// building blocks shared by the catalog

/// Exponent pairs (i, j) of the coefficients U_{i,j} of X1^i X2^j X3^(d-i-j),
/// in the fixed order used by every specialization.
pub fn coeff_slots(d: u32) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for i in 0..=d {
        for j in 0..=(d - i) {
            v.push((i, j));
        }
    }
    v
}

/// The ternary form sum U_{i,j} X1^i X2^j X3^(d-i-j) with coefficients in
/// `coeff_slots` order.
pub fn ternary_form<R: Ring>(coeffs: &[R], d: u32) -> MultiPoly<R> {
    MultiPoly::from_terms(
        coeff_slots(d)
            .into_iter()
            .zip(coeffs)
            .map(|((i, j), c)| (Monomial::new(vec![i, j, d - i - j]), c.clone())),
    )
}

/// U_{0,0}, the coefficient of X3^d.
pub fn u00<R: Ring>(p: &MultiPoly<R>, d: u32) -> R {
    p.coeff(&Monomial::var(X3, d))
}

/// P(1, X2, X3).
fn affine<R: Ring>(p: &MultiPoly<R>) -> MultiPoly<R> {
    p.eval_var(X1, &R::one())
}

/// P(X1, X2, X4).
fn at_x4<R: Ring>(p: &MultiPoly<R>) -> MultiPoly<R> {
    p.rename_var(X3, X4).expect("forms live in X1..X3")
}

fn d3<R: Ring>(p: &MultiPoly<R>) -> MultiPoly<R> {
    p.partial(X3)
}

fn delta<R: Ring>(p: &MultiPoly<R>) -> MultiPoly<R> {
    mp_delta(p, X3, X4)
}

fn delta_pow<R: Ring>(p: &MultiPoly<R>, k: u32) -> MultiPoly<R> {
    mp_delta_pow(p, X3, X4, k).expect("forms live in X1..X3")
}

fn res_z<R: Ring>(a: &MultiPoly<R>, b: &MultiPoly<R>, da: u32, db: u32) -> Result<MultiPoly<R>> {
    res_in(a, b, X3, da, db)
}

fn disc_z<R: Ring>(p: &MultiPoly<R>, d: u32) -> Result<MultiPoly<R>> {
    disc_in(p, X3, d).map_err(degenerate)
}

fn scalar<R: Ring>(p: MultiPoly<R>) -> R {
    debug_assert!(p.is_constant());
    p.constant_term()
}

fn res_y<R: Ring>(a: &MultiPoly<R>, b: &MultiPoly<R>, da: u32, db: u32) -> Result<R> {
    Ok(scalar(res_in(a, b, X2, da, db)?))
}

fn disc_y<R: Ring>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    Ok(scalar(disc_in(p, X2, d).map_err(degenerate)?))
}

/// Multivariate resultant over X1..Xn, n = number of forms.
fn mres<R: ResultantRing>(polys: &[MultiPoly<R>], degs: &[u32]) -> Result<R> {
    res_xs(polys, degs).map_err(degenerate)
}

/// The operator (delta^2 d3 - 2 delta^3) P.
fn pleat_operator<R: Ring>(p: &MultiPoly<R>) -> MultiPoly<R> {
    let two = R::from_i64(2);
    delta_pow(&d3(p), 2).minus(&delta_pow(p, 3).scale(&two))
}

/// Res(P, d3 P, delta^2 P, (delta^2 d3 - 2 delta^3) P) over X1..X4.
pub fn pleat_resultant<R: ResultantRing>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    if d < 3 {
        return Err(ElimError::InvalidArgument("pleat resultant needs d >= 3".into()));
    }
    mres(&[p.clone(), d3(p), delta_pow(p, 2), pleat_operator(p)], &[d, d - 1, d - 2, d - 3])
}

/// Disc_X2(Disc_X3(P(1, X2, X3))) in declared degrees d and d(d-1).
pub fn iterated_disc<R: ResultantRing>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    let inner = disc_z(&affine(p), d)?;
    disc_y(&inner, d * (d - 1))
}

/// Vanishing leading coefficients, zero denominators and exhausted
/// coordinate changes mean the specialization is not generic enough.
fn degenerate(e: ElimError) -> ElimError {
    match e {
        ElimError::LeadingZero => ElimError::DegenerateInput("vanishing leading coefficient".into()),
        ElimError::DenominatorZero => ElimError::DegenerateInput("zero denominator in the pair discriminant".into()),
        ElimError::NeedsCoordinateChange(k) => {
            ElimError::DegenerateInput(format!("extraneous factor vanished after {k} coordinate changes"))
        }
        other => other,
    }
}

fn pow2<R: Ring>(e: u64) -> R {
    R::from_bigint(&crate::exactalg::int_pow(2, e))
}
