//! Exact arithmetic in GF(p^k) for odd prime powers q = p^k.
//!
//! Elements are canonical integer indices in `[0, q)`: the index encodes the
//! coefficients c_0 + c_1 x + ... + c_{k-1} x^{k-1} of the element as the
//! base-p little-endian digit string (c_0 least significant). Index 0 is the
//! additive identity and index 1 the multiplicative identity, for every field.

use crate::error::{Error, Result};

/// A field element, encoded as its canonical index in `[0, q)`.
pub type Elt = u64;

/// Extension fields up to this cardinality precompute full mul/inv tables.
const TABLE_LIMIT: u64 = 1 << 10;

/// An odd prime-power field GF(p^k), immutable after construction.
///
/// For k > 1 the field carries a monic irreducible modulus of degree k over
/// F_p, stored as little-endian coefficients of length k+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    modulus: Option<Vec<u64>>,
    mul_table: Option<Vec<Elt>>,
    inv_table: Option<Vec<Elt>>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

impl Field {
    /// Builds GF(p^k). When `k > 1` and `modulus` is omitted, picks the
    /// lexicographically smallest monic irreducible polynomial of degree k
    /// (coefficients compared low-degree-first) by exhaustive search.
    pub fn new(p: u64, k: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(p)).ok_or(Error::ZeroDegree)?;
        let modulus = match (k, modulus) {
            (1, None) => None,
            (1, Some(_)) => return Err(Error::ModulusForPrimeField),
            (_, Some(m)) => {
                if m.len() != k as usize + 1 {
                    return Err(Error::BadModulusDegree { expected: k, got: m.len().saturating_sub(1) });
                }
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m[k as usize] != 1 {
                    return Err(Error::NonMonicModulus);
                }
                if !poly_is_irreducible(p, &m) {
                    return Err(Error::ReducibleModulus { p });
                }
                Some(m)
            }
            (_, None) => Some(smallest_irreducible(p, k)),
        };
        let mut field = Field { p, k, q, modulus, mul_table: None, inv_table: None };
        if k > 1 && q <= TABLE_LIMIT {
            field.build_tables();
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of elements q = p^k.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The modulus coefficients (little-endian, length k+1), when k > 1.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    /// All q elements in increasing index order.
    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.q
    }

    pub fn check(&self, a: Elt) -> Result<Elt> {
        if a < self.q {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange { index: a, q: self.q })
        }
    }

    /// Decodes an index into its k base-p coefficients, c_0 first.
    pub fn coeffs(&self, a: Elt) -> Vec<u64> {
        let mut a = a;
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    /// Encodes base-p coefficients (c_0 first) back into an index.
    pub fn encode(&self, coeffs: &[u64]) -> Elt {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = acc * self.p + (c % self.p);
        }
        acc
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if self.k == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            let (ca, cb) = (self.coeffs(a), self.coeffs(b));
            let sum: Vec<u64> = ca
                .iter()
                .zip(&cb)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= self.p {
                        s - self.p
                    } else {
                        s
                    }
                })
                .collect();
            self.encode(&sum)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        if self.k == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let ca = self.coeffs(a);
            let neg: Vec<u64> = ca.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect();
            self.encode(&neg)
        }
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if self.k == 1 {
            ((a as u128 * b as u128) % self.p as u128) as u64
        } else if let Some(t) = &self.mul_table {
            t[(a * self.q + b) as usize]
        } else {
            self.mul_slow(a, b)
        }
    }

    fn mul_slow(&self, a: Elt, b: Elt) -> Elt {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let m = self.modulus.as_ref().expect("extension field has a modulus");
        poly_reduce(self.p, &mut prod, m);
        prod.truncate(k);
        self.encode(&prod)
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self, a: Elt) -> Result<Elt> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.k == 1 {
            return Ok(mod_pow(a, self.p - 2, self.p));
        }
        if let Some(t) = &self.inv_table {
            return Ok(t[a as usize]);
        }
        let m = self.modulus.as_ref().expect("extension field has a modulus");
        let inv = poly_inverse(self.p, &self.coeffs(a), m);
        Ok(self.encode(&inv))
    }

    pub fn div(&self, a: Elt, b: Elt) -> Result<Elt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elt, mut e: u64) -> Elt {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let mut mul = vec![0u64; q * q];
        for a in 0..self.q {
            for b in a..self.q {
                let v = self.mul_slow(a, b);
                mul[(a * self.q + b) as usize] = v;
                mul[(b * self.q + a) as usize] = v;
            }
        }
        let mut inv = vec![0u64; q];
        for a in 1..self.q {
            let m = self.modulus.as_ref().unwrap();
            inv[a as usize] = self.encode(&poly_inverse(self.p, &self.coeffs(a), m));
        }
        self.mul_table = Some(mul);
        self.inv_table = Some(inv);
    }
}

fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn poly_degree(poly: &[u64]) -> Option<usize> {
    poly.iter().rposition(|&c| c != 0)
}

/// Reduces `poly` in place modulo the monic polynomial `m`.
fn poly_reduce(p: u64, poly: &mut Vec<u64>, m: &[u64]) {
    let dm = poly_degree(m).expect("modulus is nonzero");
    while let Some(d) = poly_degree(poly) {
        if d < dm {
            break;
        }
        let lead = poly[d];
        let shift = d - dm;
        for (i, &mc) in m.iter().enumerate() {
            if mc != 0 {
                let t = (lead * mc) % p;
                let idx = i + shift;
                poly[idx] = (poly[idx] + p - t) % p;
            }
        }
    }
    poly.resize(dm, 0);
}

/// Polynomial division over F_p: returns (quotient, remainder).
fn poly_divmod(p: u64, num: &[u64], den: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let dd = poly_degree(den).expect("divisor is nonzero");
    let lead_inv = mod_inv(den[dd], p);
    let mut rem = num.to_vec();
    let mut quo = vec![0u64; num.len()];
    while let Some(dr) = poly_degree(&rem) {
        if dr < dd {
            break;
        }
        let f = (rem[dr] * lead_inv) % p;
        let shift = dr - dd;
        quo[shift] = f;
        for (i, &dc) in den.iter().enumerate() {
            if dc != 0 {
                let t = (f * dc) % p;
                rem[i + shift] = (rem[i + shift] + p - t) % p;
            }
        }
    }
    (quo, rem)
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![0];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn poly_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect()
}

/// Inverse of `a` modulo the monic irreducible `m`, by extended Euclid.
fn poly_inverse(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    // Invariant: r0 = s0*a (mod m), r1 = s1*a (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    let mut s0 = vec![0u64];
    let mut s1 = vec![1u64];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(p, &r0, &r1);
        let s = poly_sub(p, &s0, &poly_mul(p, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let d = poly_degree(&r0).expect("gcd of a nonzero element with an irreducible modulus is a unit");
    assert_eq!(d, 0, "modulus must be irreducible");
    let scale = mod_inv(r0[0], p);
    let mut inv: Vec<u64> = s0.iter().map(|&c| (c * scale) % p).collect();
    poly_reduce(p, &mut inv, m);
    inv
}

/// Exhaustive irreducibility test: no monic factor of degree 1..=deg/2.
fn poly_is_irreducible(p: u64, m: &[u64]) -> bool {
    let deg = match poly_degree(m) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if deg == 1 {
        return true;
    }
    for fdeg in 1..=deg / 2 {
        let count = p.pow(fdeg as u32);
        for idx in 0..count {
            // Monic candidate of degree fdeg with low coefficients from idx.
            let mut cand = vec![0u64; fdeg + 1];
            let mut rest = idx;
            for c in cand.iter_mut().take(fdeg) {
                *c = rest % p;
                rest /= p;
            }
            cand[fdeg] = 1;
            let (_, rem) = poly_divmod(p, m, &cand);
            if poly_degree(&rem).is_none() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest (low-degree coefficients first) monic
/// irreducible polynomial of degree k over F_p.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let count = p.pow(k as u32);
    for m in 0..count {
        // Digit c_0 is the most significant in the search order, so ascending
        // m enumerates coefficient tuples (c_0, ..., c_{k-1}) in lex order.
        let mut cand = vec![0u64; k + 1];
        let mut rest = m;
        for i in (0..k).rev() {
            cand[i] = rest % p;
            rest /= p;
        }
        cand[k] = 1;
        if poly_is_irreducible(p, &cand) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}
