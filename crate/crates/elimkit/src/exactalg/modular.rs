//! Integer determinants by elimination modulo many 62-bit primes and
//! Chinese remaindering, sized by the Hadamard bound. Used for the large
//! Macaulay matrices where Bareiss over big integers is too slow.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Matrix;

/// Number of bits of an upper bound for |det m| (Hadamard), plus one.
pub fn hadamard_bits(m: &Matrix<BigInt>) -> u64 {
    let n = m.size();
    let mut bits = 0u64;
    for i in 0..n {
        let s: BigInt = m.row(i).iter().map(|a| a * a).sum();
        if s.is_zero() {
            return 0;
        }
        // log2 ||row|| <= ceil(bits(s) / 2)
        bits += s.bits().div_ceil(2);
    }
    bits + 1
}

/// Exact determinant of an integer matrix via modular elimination + CRT.
pub fn det_modular(m: &Matrix<BigInt>) -> BigInt {
    let n = m.size();
    if n == 0 {
        return BigInt::from(1);
    }
    let need = hadamard_bits(m);
    if need == 0 {
        return BigInt::zero();
    }
    let entries: Vec<Entry> = (0..n).flat_map(|i| m.row(i).iter().map(Entry::new)).collect();
    let mut acc = BigInt::zero();
    let mut modulus = BigInt::from(1);
    let mut k = 0;
    // each prime exceeds 2^61, so sum of bits covered grows by >= 61
    while modulus.bits() < need + 1 {
        let p = nth_prime(k);
        k += 1;
        let r = det_mod_p(&entries, n, p);
        crt_step(&mut acc, &mut modulus, r, p);
    }
    let half = &modulus >> 1;
    if acc > half {
        acc - modulus
    } else {
        acc
    }
}

enum Entry {
    Small(i64),
    Big(BigInt),
}

impl Entry {
    fn new(a: &BigInt) -> Self {
        match a.to_i64() {
            Some(v) => Entry::Small(v),
            None => Entry::Big(a.clone()),
        }
    }

    fn residue(&self, p: u64) -> u64 {
        match self {
            Entry::Small(v) => v.rem_euclid(p as i64) as u64,
            Entry::Big(b) => {
                let r = b.mod_floor(&BigInt::from(p));
                r.to_u64().expect("residue fits")
            }
        }
    }
}

fn crt_step(acc: &mut BigInt, modulus: &mut BigInt, r: u64, p: u64) {
    let mont = Mont::new(p);
    let a_mod = acc.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let m_mod = modulus.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let diff = if r >= a_mod { r - a_mod } else { r + p - a_mod };
    let inv = mont.inverse_plain(m_mod);
    let t = ((diff as u128 * inv as u128) % p as u128) as u64;
    *acc += &*modulus * t;
    *modulus *= p;
}

fn det_mod_p(entries: &[Entry], n: usize, p: u64) -> u64 {
    let mont = Mont::new(p);
    let mut a: Vec<u64> = entries.iter().map(|e| mont.to_mont(e.residue(p))).collect();
    let mut det = mont.to_mont(1);
    let mut negate = false;
    let mut nz: Vec<usize> = Vec::with_capacity(n);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in k..n {
                a.swap(piv * n + j, k * n + j);
            }
            negate = !negate;
        }
        let pk = a[k * n + k];
        det = mont.mul(det, pk);
        let inv = mont.inverse(pk);
        nz.clear();
        nz.extend((k + 1..n).filter(|&j| a[k * n + j] != 0));
        for i in k + 1..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            let f = mont.mul(aik, inv);
            for &j in &nz {
                let t = mont.mul(f, a[k * n + j]);
                let v = a[i * n + j];
                a[i * n + j] = if v >= t { v - t } else { v + p - t };
            }
        }
    }
    let d = mont.from_mont(det);
    if negate && d != 0 {
        p - d
    } else {
        d
    }
}

/// Montgomery arithmetic modulo an odd p < 2^62.
struct Mont {
    p: u64,
    pinv_neg: u64,
    r2: u64,
}

impl Mont {
    fn new(p: u64) -> Self {
        let mut inv: u64 = p;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Mont {
            p,
            pinv_neg: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline(always)]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.pinv_neg);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline(always)]
    fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    fn to_mont(&self, a: u64) -> u64 {
        self.mul(a, self.r2)
    }

    fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    /// Inverse of a Montgomery-form element, in Montgomery form.
    fn inverse(&self, a: u64) -> u64 {
        let mut e = self.p - 2;
        let mut base = a;
        let mut acc = self.to_mont(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inverse_plain(&self, a: u64) -> u64 {
        self.from_mont(self.inverse(self.to_mont(a)))
    }
}

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// The k-th prime below 2^62, counting downward.
fn nth_prime(k: usize) -> u64 {
    let mut ps = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    while ps.len() <= k {
        let mut c = ps.last().map_or((1u64 << 62) - 1, |&q| q - 2);
        while !is_prime_u64(c) {
            c -= 2;
        }
        ps.push(c);
    }
    ps[k]
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::det_fraction_free;

    #[test]
    fn primes_are_prime_and_large() {
        for k in 0..5 {
            let p = nth_prime(k);
            assert!(p > 1 << 61);
            assert!(is_prime_u64(p));
        }
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007 * 3));
    }

    #[test]
    fn modular_matches_bareiss() {
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 2001) as i64 - 1000
        };
        for n in [1usize, 2, 5, 13, 30] {
            let m = Matrix::from_fn(n, |_, _| BigInt::from(next()) * BigInt::from(next()).pow(3));
            assert_eq!(det_modular(&m), det_fraction_free(&m), "n = {n}");
        }
        let sing = Matrix::from_fn(6, |i, j| BigInt::from((i * j) as i64));
        assert!(det_modular(&sing).is_zero());
    }
}
