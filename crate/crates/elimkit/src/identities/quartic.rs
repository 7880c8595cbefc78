//! The quartic surface f = z^4 - y^3 z + 2 z^3 - y z^2 - y^2 - x z + 1 and
//! the factorization of Disc_y(Disc_z(f)) over Z[x].

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::extract::{f_from, flex_resultant, u_from};
use super::{u00, pleat_resultant};
use crate::error::Result;
use crate::exactalg::{upoly_exact_div, Ring, UniPoly};
use crate::macaulay::disc_ternary;
use crate::multipoly::{parse_poly, MultiPoly, PARAM_X, X1, X2, X3};
use crate::sylvester::disc_in;

pub const QUARTIC: &str = "z^4 - y^3*z + 2*z^3 - y*z^2 - y^2 - x*z + 1";

pub const LEADING_CONSTANT: &str = "5540271966595842048";

/// Expected factors, ascending coefficients, with multiplicities.
const EXPECTED: [(&[i64], u32); 4] = [
    (
        &[
            218938829,
            -4081683588,
            17648229264,
            -17693165669,
            9038030571,
            -5353192260,
            2868603336,
            -909290448,
            273574017,
            -93002175,
            14348907,
        ],
        1,
    ),
    (&[-1, 1], 2),
    (&[-173, 125], 2),
    (&[230501936, -212731008, -245928792, 147495688, 47832147], 3),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorClass {
    Disc,
    FoldSquare,
    PleatCube,
    Unit,
    Other,
}

impl fmt::Display for FactorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorClass::Disc => "disc",
            FactorClass::FoldSquare => "fold-square",
            FactorClass::PleatCube => "pleat-cube",
            FactorClass::Unit => "unit/leading",
            FactorClass::Other => "other",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuarticFactor {
    #[serde(serialize_with = "as_string")]
    pub poly: UniPoly,
    pub multiplicity: u32,
    pub class: FactorClass,
}

fn as_string<S: serde::Serializer>(p: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub input: String,
    /// y-degree of Disc_z(f).
    pub inner_degree: u32,
    #[serde(serialize_with = "as_string")]
    pub iterated: UniPoly,
    pub factors: Vec<QuarticFactor>,
    /// The product of the factors equals `iterated` exactly.
    pub reassembles: bool,
    /// Each factor class was confirmed by divisibility against the
    /// independently extracted Disc(f), F(f) and U(f).
    pub classes_confirmed: bool,
}

impl FactorizationReport {
    pub fn multiplicities(&self) -> Vec<u32> {
        self.factors
            .iter()
            .filter(|f| f.class != FactorClass::Unit)
            .map(|f| f.multiplicity)
            .collect()
    }

    pub fn ok(&self) -> bool {
        self.reassembles && self.classes_confirmed && self.inner_degree == 12
    }
}

impl fmt::Display for FactorizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f = {}", self.input)?;
        writeln!(f, "deg_y Disc_z(f) = {}", self.inner_degree)?;
        writeln!(f, "Disc_y(Disc_z(f)) =")?;
        for fac in &self.factors {
            writeln!(f, "  [{}] ({})^{}", fac.class, fac.poly, fac.multiplicity)?;
        }
        writeln!(f, "product reassembles exactly: {}", self.reassembles)?;
        write!(f, "factor classes confirmed: {}", self.classes_confirmed)
    }
}

/// f homogenized in X1, with x as the coefficient parameter.
pub fn quartic_polynomial() -> MultiPoly<UniPoly> {
    let f = parse_poly(QUARTIC).expect("constant expression parses");
    f.extract_param(PARAM_X).homogenize(X1, 4).expect("total degree in y, z is 4")
}

fn divides(a: &UniPoly, b: &UniPoly) -> bool {
    !b.is_zero() && upoly_exact_div(b, a).is_ok()
}

pub fn quartic_showcase() -> Result<FactorizationReport> {
    let p = quartic_polynomial();
    let affine = p.eval_var(X1, &UniPoly::one());
    let inner = disc_in(&affine, X3, 4)?;
    let inner_degree = inner.degree_in(X2).unwrap_or(0);
    let iterated = disc_in(&inner, X2, 12)?.constant_term();

    let constant = UniPoly::constant(LEADING_CONSTANT.parse::<BigInt>().expect("literal"));
    let mut factors = vec![QuarticFactor {
        poly: constant.clone(),
        multiplicity: 1,
        class: FactorClass::Unit,
    }];
    let mut product = constant;
    for (cs, m) in EXPECTED {
        let poly = UniPoly::from_i64s(cs);
        product = product.times(&poly.pow(m as u64));
        factors.push(QuarticFactor {
            poly,
            multiplicity: m,
            class: FactorClass::Other,
        });
    }
    let reassembles = product == iterated;

    // classify through the extracted factors
    let u = u00(&p, 4);
    let disc = disc_ternary(&p, 4)?;
    let ff = f_from(&flex_resultant(&p, 4)?, &u, 4)?;
    let uu = u_from(&pleat_resultant(&p, 4)?, &u, 4)?;
    let expected_class = [FactorClass::Disc, FactorClass::FoldSquare, FactorClass::FoldSquare, FactorClass::PleatCube];
    let mut classes_confirmed = true;
    for (fac, want) in factors.iter_mut().skip(1).zip(expected_class) {
        fac.class = if divides(&fac.poly, &ff) {
            FactorClass::PleatCube
        } else if divides(&fac.poly, &uu) {
            FactorClass::FoldSquare
        } else if divides(&fac.poly, &disc) {
            FactorClass::Disc
        } else {
            FactorClass::Other
        };
        classes_confirmed &= fac.class == want;
    }

    Ok(FactorizationReport {
        input: QUARTIC.to_string(),
        inner_degree,
        iterated,
        factors,
        reassembles,
        classes_confirmed,
    })
}
