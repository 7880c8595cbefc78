//! Multivariate resultants of n homogeneous polynomials in n variables
//! (n <= 4), normalized by Res(X1^d1, ..., Xn^dn) = 1, plus the ternary
//! and two-polynomial discriminants built on them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{ElimError, Result};
use crate::exactalg::{interpolate_with, int_pow, Matrix, Ring, UniPoly};
use crate::multipoly::{Monomial, MultiPoly, X1, X2, X3};
use crate::sylvester::res_coeffs;

const MAX_VARS: usize = 4;
const MAX_COORDINATE_CHANGES: u32 = 16;

/// n homogeneous polynomials in the n listed variables.
#[derive(Clone, Debug)]
pub struct MacaulaySystem<R: Ring> {
    pub polys: Vec<MultiPoly<R>>,
    pub degs: Vec<u32>,
    pub vars: Vec<usize>,
}

impl<R: Ring> MacaulaySystem<R> {
    pub fn new(polys: Vec<MultiPoly<R>>, degs: Vec<u32>, vars: Vec<usize>) -> Self {
        MacaulaySystem { polys, degs, vars }
    }
}

/// Polynomials re-indexed on the active variables 0..n.
#[derive(Clone, Debug)]
pub struct Compact<R> {
    pub degs: Vec<u32>,
    pub polys: Vec<Vec<(Vec<u32>, R)>>,
}

impl<R: Ring> Compact<R> {
    fn n(&self) -> usize {
        self.degs.len()
    }

    fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Compact<S> {
        Compact {
            degs: self.degs.clone(),
            polys: self
                .polys
                .iter()
                .map(|p| p.iter().map(|(e, c)| (e.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
        }
    }

    fn to_multipolys(&self) -> Vec<MultiPoly<R>> {
        self.polys
            .iter()
            .map(|p| MultiPoly::from_terms(p.iter().map(|(e, c)| (Monomial::new(e.clone()), c.clone()))))
            .collect()
    }

    fn from_multipolys(degs: &[u32], ps: &[MultiPoly<R>], n: usize) -> Self {
        Compact {
            degs: degs.to_vec(),
            polys: ps
                .iter()
                .map(|p| p.iter().map(|(m, c)| (m.padded(n)[..n].to_vec(), c.clone())).collect())
                .collect(),
        }
    }
}

/// Coefficient rings with a resultant strategy.
pub trait ResultantRing: Ring {
    fn macaulay(sys: &Compact<Self>) -> Result<Self>;
}

impl ResultantRing for BigInt {
    fn macaulay(sys: &Compact<Self>) -> Result<Self> {
        match macaulay_with_changes(sys)? {
            Some(v) => Ok(v),
            None => perturbed(sys),
        }
    }
}

impl<R: ResultantRing> ResultantRing for MultiPoly<R> {
    fn macaulay(sys: &Compact<Self>) -> Result<Self> {
        macaulay_with_changes(sys)?.ok_or(ElimError::NeedsCoordinateChange(MAX_COORDINATE_CHANGES))
    }
}

/// Res(f_i + s X_i^d_i) in Z[s] at s = 0. The extraneous minor of the
/// perturbed system is nonzero (its top coefficient in s comes from pure
/// powers), so the quotient is exact there.
fn perturbed(sys: &Compact<BigInt>) -> Result<BigInt> {
    let n = sys.n();
    let mut lifted = sys.map(|c| UniPoly::constant(c.clone()));
    for (i, p) in lifted.polys.iter_mut().enumerate() {
        let mut e = vec![0; n];
        e[i] = sys.degs[i];
        match p.iter_mut().find(|(m, _)| *m == e) {
            Some((_, c)) => *c = c.plus(&UniPoly::monomial(BigInt::from(1), 1)),
            None => p.push((e, UniPoly::monomial(BigInt::from(1), 1))),
        }
    }
    let v = macaulay_quotient(&lifted)?.ok_or(ElimError::NeedsCoordinateChange(MAX_COORDINATE_CHANGES))?;
    let v = v.eval(&BigInt::from(0));
    Ok(if calibration_sign(&sys.degs) { -v } else { v })
}

/// Evaluates the parameter at integer nodes, solves each integer system
/// and interpolates. The degree bound is the minimum of the homogeneity
/// bound and one isobarity bound per variable.
impl ResultantRing for UniPoly {
    fn macaulay(sys: &Compact<Self>) -> Result<Self> {
        let Some(bound) = param_degree_bound(sys) else {
            return Ok(UniPoly::zero());
        };
        interpolate_with(bound, |x| {
            let xb = BigInt::from(x);
            resultant_compact(&sys.map(|c| c.eval(&xb)))
        })
    }
}

/// Provable bound on the x-degree of Res; `None` when Res is identically 0.
pub fn param_degree_bound(sys: &Compact<UniPoly>) -> Option<usize> {
    let n = sys.n();
    let total: i64 = sys.degs.iter().map(|&d| d as i64).product();
    let mut homog = 0i64;
    let mut weighted = vec![total; n];
    for (i, p) in sys.polys.iter().enumerate() {
        let share = total / sys.degs[i] as i64;
        let maxdeg = p.iter().filter_map(|(_, c)| c.degree()).max()? as i64;
        homog += share * maxdeg;
        for (j, w) in weighted.iter_mut().enumerate() {
            let s = p
                .iter()
                .map(|(e, c)| c.degree().unwrap() as i64 - e[j] as i64)
                .max()
                .unwrap();
            *w += share * s;
        }
    }
    let b = weighted.into_iter().fold(homog, i64::min);
    (b >= 0).then_some(b as usize)
}

/// The multivariate resultant of `sys`, exact in the coefficient ring.
pub fn macaulay_resultant<R: ResultantRing>(sys: &MacaulaySystem<R>) -> Result<R> {
    let n = sys.vars.len();
    if n == 0 || n > MAX_VARS || sys.polys.len() != n || sys.degs.len() != n {
        return Err(ElimError::InvalidArgument(format!(
            "need n polynomials in n variables with 1 <= n <= {MAX_VARS}"
        )));
    }
    let mut polys = Vec::with_capacity(n);
    for (p, &d) in sys.polys.iter().zip(&sys.degs) {
        let mut terms = Vec::new();
        for (m, c) in p.iter() {
            if m.degree() != d {
                return Err(ElimError::NonHomogeneous(d));
            }
            let e: Vec<u32> = sys.vars.iter().map(|&v| m.exp(v)).collect();
            if e.iter().sum::<u32>() != d {
                return Err(ElimError::InvalidArgument("polynomial involves an inactive variable".into()));
            }
            terms.push((e, c.clone()));
        }
        polys.push(terms);
    }
    let c = Compact {
        degs: sys.degs.clone(),
        polys,
    };
    resultant_compact(&c)
}

fn resultant_compact<R: ResultantRing>(c: &Compact<R>) -> Result<R> {
    let n = c.n();
    if c.degs.contains(&0) {
        // a degree-0 form is a constant; Res = prod c_i^(prod_{j != i} d_j)
        let mut acc = R::one();
        for i in 0..n {
            if c.degs[i] == 0 {
                let k = c.polys[i].first().map(|t| t.1.clone()).unwrap_or_else(R::zero);
                let e: u64 = (0..n).filter(|&j| j != i).map(|j| c.degs[j] as u64).product();
                acc = acc.times(&k.pow(e));
            }
        }
        return Ok(acc);
    }
    if c.polys.iter().any(|p| p.is_empty()) {
        return Ok(R::zero());
    }
    if n == 1 {
        return Ok(c.polys[0].first().map(|t| t.1.clone()).unwrap_or_else(R::zero));
    }
    if n == 2 {
        // dehomogenize at X2 = 1 and take the Sylvester resultant in X1
        let dense = |i: usize| {
            let mut v = vec![R::zero(); c.degs[i] as usize + 1];
            for (e, k) in &c.polys[i] {
                v[e[0] as usize] = k.clone();
            }
            v
        };
        return Ok(res_coeffs(&dense(0), &dense(1)));
    }
    R::macaulay(c)
}

fn grevlex_monomials(n: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, deg, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| Monomial::new(b.clone()).cmp(&Monomial::new(a.clone())));
    out
}

/// Macaulay quotient det(M)/det(M'), rows and columns indexed by the same
/// grevlex-ordered monomials of the critical degree. `None` when the
/// extraneous minor vanishes.
fn macaulay_quotient<R: Ring>(c: &Compact<R>) -> Result<Option<R>> {
    let n = c.n();
    let big_d: u32 = c.degs.iter().map(|d| d - 1).sum::<u32>() + 1;
    let monos = grevlex_monomials(n, big_d);
    let index: HashMap<&[u32], usize> = monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let size = monos.len();
    let mut m = Matrix::zeros(size);
    let mut non_reduced = Vec::new();
    for (r, alpha) in monos.iter().enumerate() {
        let divisible: Vec<usize> = (0..n).filter(|&i| alpha[i] >= c.degs[i]).collect();
        let i = divisible[0];
        if divisible.len() > 1 {
            non_reduced.push(r);
        }
        let mut shift = alpha.clone();
        shift[i] -= c.degs[i];
        for (e, k) in &c.polys[i] {
            let col: Vec<u32> = shift.iter().zip(e).map(|(a, b)| a + b).collect();
            m.set(r, index[col.as_slice()], k.clone());
        }
    }
    let den = if non_reduced.is_empty() {
        R::one()
    } else {
        R::det(&m.submatrix(&non_reduced, &non_reduced))
    };
    if den.is_zero() {
        return Ok(None);
    }
    let num = R::det(&m);
    Ok(Some(num.exact_div(&den)?))
}

/// Global sign of the construction on pure powers, cached per degree tuple.
fn calibration_sign(degs: &[u32]) -> bool {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u32>, bool>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&s) = cache.lock().unwrap().get(degs) {
        return s;
    }
    let n = degs.len();
    let pure = Compact {
        degs: degs.to_vec(),
        polys: (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = degs[i];
                vec![(e, BigInt::from(1))]
            })
            .collect(),
    };
    let v = macaulay_quotient(&pure).unwrap().expect("pure powers have a nonzero extraneous minor");
    let negative = v == BigInt::from(-1);
    assert!(negative || v == BigInt::from(1), "pure-power system must give a unit");
    cache.lock().unwrap().insert(degs.to_vec(), negative);
    negative
}

/// Random unimodular change of coordinates; det A = 1 so Res is unchanged.
fn unimodular(n: usize, attempt: u32) -> Vec<Vec<i64>> {
    let mut rng = Xoshiro256StarStar::seed_from_u64(0x5eed_0000 + attempt as u64);
    let mut l = vec![vec![0i64; n]; n];
    let mut u = vec![vec![0i64; n]; n];
    for i in 0..n {
        l[i][i] = 1;
        u[i][i] = 1;
        for j in 0..i {
            l[i][j] = rng.gen_range(-2..=2);
            u[j][i] = rng.gen_range(-2..=2);
        }
    }
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| l[i][k] * u[k][j]).sum()).collect())
        .collect()
}

/// `None` when the extraneous minor vanishes in every coordinate system
/// tried, which happens when Res itself is 0 along a positive-dimensional
/// family.
fn macaulay_with_changes<R: Ring>(c: &Compact<R>) -> Result<Option<R>> {
    let negative = calibration_sign(&c.degs);
    let fix = |v: R| if negative { v.negate() } else { v };
    if let Some(v) = macaulay_quotient(c)? {
        return Ok(Some(fix(v)));
    }
    let n = c.n();
    let polys = c.to_multipolys();
    for attempt in 1..=MAX_COORDINATE_CHANGES {
        let a = unimodular(n, attempt);
        let bindings: Vec<(usize, MultiPoly<R>)> = (0..n)
            .map(|k| {
                let img = (0..n).fold(MultiPoly::zero(), |acc: MultiPoly<R>, l| {
                    acc.plus(&MultiPoly::var(l).scale(&R::from_i64(a[k][l])))
                });
                (k, img)
            })
            .collect();
        let moved: Vec<MultiPoly<R>> = polys.iter().map(|p| p.substitute(&bindings)).collect();
        let moved = Compact::from_multipolys(&c.degs, &moved, n);
        if let Some(v) = macaulay_quotient(&moved)? {
            return Ok(Some(fix(v)));
        }
    }
    Ok(None)
}

/// Res_{elim_vars}(polys) in the affine notation: each polynomial is
/// homogenized to its declared degree with a fresh variable placed first.
pub fn resultant_eliminating<R: ResultantRing>(
    polys: &[MultiPoly<R>],
    elim_vars: &[usize],
    declared_degs: &[u32],
) -> Result<R> {
    if polys.len() != elim_vars.len() + 1 || declared_degs.len() != polys.len() {
        return Err(ElimError::InvalidArgument("need one more polynomial than eliminated variables".into()));
    }
    let used = polys.iter().map(|p| p.nvars()).max().unwrap_or(0);
    let hvar = used.max(elim_vars.iter().max().map_or(0, |v| v + 1));
    let mut homog = Vec::with_capacity(polys.len());
    for (p, &d) in polys.iter().zip(declared_degs) {
        homog.push(p.homogenize(hvar, d)?);
    }
    let mut vars = vec![hvar];
    vars.extend_from_slice(elim_vars);
    macaulay_resultant(&MacaulaySystem::new(homog, declared_degs.to_vec(), vars))
}

/// Res over X1..Xk of homogeneous polynomials with the given degrees.
pub fn res_xs<R: ResultantRing>(polys: &[MultiPoly<R>], degs: &[u32]) -> Result<R> {
    let vars: Vec<usize> = (0..polys.len()).collect();
    macaulay_resultant(&MacaulaySystem::new(polys.to_vec(), degs.to_vec(), vars))
}

/// d^(d^2-3d+3) * Disc(P) = Res(d1 P, d2 P, d3 P).
pub fn disc_ternary<R: ResultantRing>(p: &MultiPoly<R>, d: u32) -> Result<R> {
    if d < 2 {
        return Err(ElimError::InvalidArgument("ternary discriminant needs d >= 2".into()));
    }
    if !p.is_homogeneous(d) {
        return Err(ElimError::NonHomogeneous(d));
    }
    let parts = [p.partial(X1), p.partial(X2), p.partial(X3)];
    let r = res_xs(&parts, &[d - 1; 3])?;
    let k = int_pow(d as i64, (d * d + 3 - 3 * d) as u64);
    Ok(r.exact_div(&R::from_bigint(&k)).expect("d^(d^2-3d+3) divides Res(dP)"))
}

/// Disc(P1,P2) = Res(P1, P2, J) / Res(P1, P2, X1) with
/// J = d2P1 d3P2 - d2P2 d3P1.
pub fn disc_pair<R: ResultantRing>(p1: &MultiPoly<R>, p2: &MultiPoly<R>, d1: u32, d2: u32) -> Result<R> {
    if d1 + d2 < 3 {
        return Err(ElimError::InvalidArgument("disc_pair needs d1 + d2 >= 3".into()));
    }
    let j = p1.partial(X2).times(&p2.partial(X3)).minus(&p2.partial(X2).times(&p1.partial(X3)));
    let den = res_xs(&[p1.clone(), p2.clone(), MultiPoly::var(X1)], &[d1, d2, 1])?;
    if den.is_zero() {
        return Err(ElimError::DenominatorZero);
    }
    let num = res_xs(&[p1.clone(), p2.clone(), j], &[d1, d2, d1 + d2 - 2])?;
    num.exact_div(&den)
}
