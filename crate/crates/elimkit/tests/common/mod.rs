#![allow(dead_code)]
//! Helpers and independent oracles shared by the integration tests. Nothing
//! here calls the library's determinant or resultant code.

use elimkit::exactalg::UniPoly;
use elimkit::multipoly::{Monomial, MultiPoly};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

pub type Poly = MultiPoly<BigInt>;

pub fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rng(seed: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(seed)
}

pub fn p(s: &str) -> Poly {
    elimkit::multipoly::parse_poly(s).unwrap()
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in monomials(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

pub fn random_form(r: &mut Xoshiro256StarStar, n: usize, d: u32, bound: i64) -> Poly {
    MultiPoly::from_terms(
        monomials(n, d)
            .into_iter()
            .map(|e| (Monomial::new(e), bi(r.gen_range(-bound..=bound)))),
    )
}

/// Random polynomial in X1..X`nvars` with every exponent at most `maxdeg`
/// and total degree at most `maxdeg`.
pub fn random_poly(r: &mut Xoshiro256StarStar, nvars: usize, maxdeg: u32, bound: i64) -> Poly {
    let mut terms = Vec::new();
    for d in 0..=maxdeg {
        for e in monomials(nvars, d) {
            if r.gen_bool(0.5) {
                terms.push((Monomial::new(e), bi(r.gen_range(-bound..=bound))));
            }
        }
    }
    MultiPoly::from_terms(terms)
}

/// Leibniz expansion over all permutations; small sizes only.
pub fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = bi(0);
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<BigInt>], total: &mut BigInt) {
    let n = perm.len();
    if k == n {
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut prod = bi(if inv % 2 == 0 { 1 } else { -1 });
        for (i, &j) in perm.iter().enumerate() {
            prod *= &m[i][j];
        }
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// a * prod (X - r) as ascending coefficients.
pub fn from_roots(a: i64, roots: &[i64]) -> Vec<BigInt> {
    let mut c = vec![bi(a)];
    for &r in roots {
        let mut next = vec![bi(0); c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= v * r;
        }
        c = next;
    }
    c
}

/// Res(a prod(X - r_i), b prod(X - s_j)) = a^n b^m prod (r_i - s_j).
pub fn res_by_roots(a: i64, rs: &[i64], b: i64, ss: &[i64]) -> BigInt {
    let mut acc = bi(a).pow(ss.len() as u32) * bi(b).pow(rs.len() as u32);
    for r in rs {
        for s in ss {
            acc *= bi(r - s);
        }
    }
    acc
}

/// Univariate polynomial in variable `var` from ascending coefficients.
pub fn uni(coeffs: &[BigInt], var: usize) -> Poly {
    MultiPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::var(var, k as u32), c.clone())),
    )
}

/// Lifts an integer polynomial to Z[t] coefficients.
pub fn lift(p: &Poly) -> MultiPoly<UniPoly> {
    p.map_coeffs(|c| UniPoly::constant(c.clone()))
}

pub fn t_pow(e: usize) -> UniPoly {
    UniPoly::monomial(bi(1), e)
}
