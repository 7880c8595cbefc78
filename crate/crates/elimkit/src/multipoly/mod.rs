//! Sparse multivariate polynomials over a coefficient ring, with partial
//! derivatives, substitution, homogenization and divided differences.

mod delta;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{ElimError, Result};
use crate::exactalg::{det_cofactor, det_fraction_free, Matrix, Ring, UniPoly};

pub use delta::{mp_delta, mp_delta_pow};
pub use parse::{parse_poly, JsonTerm, PARAM_T, PARAM_X, VAR_NAMES};

pub const X1: usize = 0;
pub const X2: usize = 1;
pub const X3: usize = 2;
pub const X4: usize = 3;

/// Exponent vector with trailing zeros trimmed, so that monomials over
/// different ambient variable counts compare consistently.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Self::new(v)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Exponents padded (or truncated, if all dropped slots are zero) to `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.0.len())).map(|i| self.exp(i)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.exp(i) + o.exp(i)).collect())
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.0.len() > self.0.len() && o.0[self.0.len()..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut v = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            v.push(self.exp(i).checked_sub(o.exp(i))?);
        }
        Some(Self::new(v))
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Self {
        let mut v = self.padded(i + 1);
        v[i] = e;
        Self::new(v)
    }

    fn nvars(&self) -> usize {
        self.0.len()
    }
}

/// Graded reverse lexicographic order: higher total degree first; ties are
/// broken by the last differing exponent, the smaller one winning.
impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        match self.degree().cmp(&o.degree()) {
            Ordering::Equal => {}
            c => return c,
        }
        let n = self.0.len().max(o.0.len());
        for i in (0..n).rev() {
            match self.exp(i).cmp(&o.exp(i)) {
                Ordering::Equal => continue,
                c => return c.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse polynomial: monomial -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> Default for MultiPoly<R> {
    fn default() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn constant(c: R) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: R, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// The variable `X_{i+1}`.
    pub fn var(i: usize) -> Self {
        Self::term(R::one(), Monomial::var(i, 1))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut p = Self::default();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.plus(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Terms in descending grevlex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    /// Leading term in grevlex.
    pub fn leading(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Constant coefficient (the coefficient of the empty monomial).
    pub fn constant_term(&self) -> R {
        self.coeff(&Monomial::one())
    }

    pub fn nvars(&self) -> usize {
        self.terms.keys().map(Monomial::nvars).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(i)).max()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    /// Homogeneous of degree `d` (the zero polynomial counts as homogeneous).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), v.times(c))))
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v.clone())).collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), f(v))))
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, v)| (f(m), v.clone())))
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, v)| {
            let e = m.exp(i);
            (m.with_exp(i, e - 1), v.times(&R::from_i64(e as i64)))
        }))
    }

    /// Simultaneous substitution of the bound variables.
    pub fn substitute(&self, bindings: &[(usize, MultiPoly<R>)]) -> Self {
        let mut pow_cache: BTreeMap<(usize, u32), MultiPoly<R>> = BTreeMap::new();
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut acc = Self::constant(c.clone());
            for (var, val) in bindings {
                let e = m.exp(*var);
                if e == 0 {
                    continue;
                }
                rest = rest.with_exp(*var, 0);
                let pw = pow_cache.entry((*var, e)).or_insert_with(|| val.pow(e as u64)).clone();
                acc = acc.times(&pw);
            }
            out = out.plus(&acc.mul_monomial(&rest));
        }
        out
    }

    /// Substitutes a ring element for variable `i`.
    pub fn eval_var(&self, i: usize, v: &R) -> Self {
        self.substitute(&[(i, Self::constant(v.clone()))])
    }

    /// Renames variable `from` to `to`; `to` must not already occur.
    pub fn rename_var(&self, from: usize, to: usize) -> Result<Self> {
        if from != to && self.involves(to) {
            return Err(ElimError::InvalidArgument(format!(
                "cannot rename X{} to X{}: target already present",
                from + 1,
                to + 1
            )));
        }
        Ok(self.map_monomials(|m| {
            let e = m.exp(from);
            m.with_exp(from, 0).with_exp(to, e)
        }))
    }

    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        self.map_monomials(|m| {
            let (ea, eb) = (m.exp(a), m.exp(b));
            m.with_exp(a, eb).with_exp(b, ea)
        })
    }

    /// Multiplies each term by `hvar^(target - deg)`.
    pub fn homogenize(&self, hvar: usize, target: u32) -> Result<Self> {
        if self.involves(hvar) {
            return Err(ElimError::InvalidArgument("homogenizing variable already occurs".into()));
        }
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let d = m.degree();
            if d > target {
                return Err(ElimError::DegreeExceeded { actual: d, declared: target });
            }
            out.add_term(m.with_exp(hvar, target - d), c);
        }
        Ok(out)
    }

    pub fn dehomogenize(&self, hvar: usize) -> Self {
        self.map_monomials(|m| m.with_exp(hvar, 0))
    }

    /// View as a univariate polynomial in `var` of declared degree `deg`.
    pub fn as_declared(&self, var: usize, deg: u32) -> Result<DeclaredUniView<R>> {
        let actual = self.degree_in(var).unwrap_or(0);
        if actual > deg {
            return Err(ElimError::DegreeExceeded { actual, declared: deg });
        }
        let mut coeffs = vec![Self::default(); deg as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            coeffs[e].add_term(m.with_exp(var, 0), c);
        }
        Ok(DeclaredUniView {
            coeffs,
            var,
            declared_deg: deg,
        })
    }

    pub fn from_univariate(coeffs: &[Self], var: usize) -> Self {
        let mut out = Self::default();
        for (e, c) in coeffs.iter().enumerate() {
            out = out.plus(&c.mul_monomial(&Monomial::var(var, e as u32)));
        }
        out
    }

    /// Formats with the given variable names (index i -> names[i]).
    pub fn fmt_with(&self, names: &[&str], coeff: impl Fn(&R) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.iter().enumerate() {
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = names.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("v{}", i + 1));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let cs = coeff(c);
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            let simple = !body.contains([' ', '+', '-']);
            let cpart = if simple { body.clone() } else { format!("({body})") };
            let t = if mono.is_empty() {
                cpart
            } else if body == "1" {
                mono.join("*")
            } else {
                format!("{cpart}*{}", mono.join("*"))
            };
            if k == 0 {
                s.push_str(if neg { "-" } else { "" });
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&t);
        }
        s
    }
}

impl MultiPoly<UniPoly> {
    /// Specializes the parameter `x` to an integer.
    pub fn eval_param(&self, x: &BigInt) -> MultiPoly<BigInt> {
        self.map_coeffs(|c| c.eval(x))
    }

    /// Largest parameter degree among the coefficients.
    pub fn param_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(UniPoly::degree).max()
    }
}

impl MultiPoly<BigInt> {
    /// Moves variable `slot` into the coefficient ring as the parameter `x`.
    pub fn extract_param(&self, slot: usize) -> MultiPoly<UniPoly> {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let e = m.exp(slot) as usize;
            out.add_term(m.with_exp(slot, 0), &UniPoly::monomial(c.clone(), e));
        }
        out
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &c.negate());
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &ca.times(cb));
            }
        }
        out
    }
    fn negate(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect(),
        }
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(R::from_bigint(n))
    }

    /// Division by leading terms in grevlex; exact over any integral domain
    /// whenever the true quotient exists.
    fn exact_div(&self, d: &Self) -> Result<Self> {
        let Some((dm, dc)) = d.leading() else {
            return Err(ElimError::NotDivisible);
        };
        let (dm, dc) = (dm.clone(), dc.clone());
        if d.terms.len() == 1 {
            let mut out = Self::default();
            for (m, c) in &self.terms {
                let qm = m.div(&dm).ok_or(ElimError::NotDivisible)?;
                out.add_term(qm, &c.exact_div(&dc)?);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut q = Self::default();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm).ok_or(ElimError::NotDivisible)?;
            let qc = rc.exact_div(&dc)?;
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), &c.times(&qc).negate());
            }
            q.add_term(qm, &qc);
        }
        Ok(q)
    }

    /// Constant matrices drop to the coefficient ring; small ones use the
    /// division-free cofactor expansion.
    fn det(m: &Matrix<Self>) -> Self {
        let n = m.size();
        if (0..n).all(|i| m.row(i).iter().all(|e| e.is_constant())) {
            let inner = m.map(|e| e.constant_term());
            return Self::constant(R::det(&inner));
        }
        if n <= 10 {
            det_cofactor(m)
        } else {
            det_fraction_free(m)
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&["X1", "X2", "X3", "X4", "x", "t"], |c| c.to_string()))
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.fmt_with(&["X1", "X2", "X3", "X4", "x", "t"], |c| format!("{c:?}"));
        write!(f, "MultiPoly({s})")
    }
}

/// A polynomial seen as univariate in `var` with a declared degree;
/// `coeffs[k]` multiplies `var^k` and leading entries may be zero.
#[derive(Clone, Debug)]
pub struct DeclaredUniView<R: Ring> {
    pub coeffs: Vec<MultiPoly<R>>,
    pub var: usize,
    pub declared_deg: u32,
}

impl<R: Ring> DeclaredUniView<R> {
    pub fn leading(&self) -> &MultiPoly<R> {
        &self.coeffs[self.declared_deg as usize]
    }

    pub fn to_poly(&self) -> MultiPoly<R> {
        MultiPoly::from_univariate(&self.coeffs, self.var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MultiPoly<BigInt>;

    fn p(s: &str) -> P {
        parse_poly(s).unwrap()
    }

    #[test]
    fn grevlex_order() {
        // degree first, then smaller last exponent wins
        assert!(Monomial::new(vec![0, 0, 2]) > Monomial::new(vec![1]));
        assert!(Monomial::new(vec![1, 1, 0]) > Monomial::new(vec![1, 0, 1]));
        assert!(Monomial::new(vec![2, 0, 0]) > Monomial::new(vec![1, 1, 0]));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("X1+X2").plus(&p("X1-X2")), p("2*X1"));
        assert!(p("X1^2+3").times(&P::zero()).is_zero());
        let a = p("X1^2 + X2*X3 - 4");
        let b = p("X3 - X1 + 2");
        assert_eq!(a.times(&b).exact_div(&b).unwrap(), a);
        assert_eq!(p("X1^2+1").exact_div(&p("X1+1")), Err(ElimError::NotDivisible));
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p("X3^3").partial(X3), p("3*X3^2"));
        assert!(p("X1*X2").partial(X3).is_zero());
    }

    #[test]
    fn homogenize_examples() {
        assert_eq!(p("X2^2+1").homogenize(X1, 2).unwrap(), p("X2^2+X1^2"));
        assert_eq!(p("X2").homogenize(X1, 3).unwrap(), p("X1^2*X2"));
        assert!(matches!(p("X2^4").homogenize(X1, 3), Err(ElimError::DegreeExceeded { .. })));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p("X1^2+X2").eval_var(X1, &BigInt::from(0)), p("X2"));
        assert!(p("X3-X4").substitute(&[(X4, p("X3"))]).is_zero());
        assert_eq!(p("X1*X2").substitute(&[(X1, p("X2")), (X2, p("X1"))]), p("X1*X2"));
    }

    #[test]
    fn declared_view_examples() {
        let v = p("-y^2+z").as_declared(X3, 2).unwrap();
        assert_eq!(v.coeffs, vec![p("-y^2"), p("1"), p("0")]);
        let v = p("X3^2").as_declared(X3, 2).unwrap();
        assert_eq!(v.coeffs, vec![p("0"), p("0"), p("1")]);
        assert!(matches!(p("X3^3").as_declared(X3, 2), Err(ElimError::DegreeExceeded { .. })));
    }

    #[test]
    fn display_descending_grevlex() {
        assert_eq!(p("1 - X3 + 2*X1^2 - X2*X3").to_string(), "2*X1^2 - X2*X3 - X3 + 1");
    }
}
