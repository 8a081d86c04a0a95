//! Exact arithmetic over prime-power Galois fields GF(q), 2 <= q <= 64.
//!
//! Elements are integer indices `0..q-1`. For a prime field GF(p) the index
//! is the residue itself. For an extension field GF(p^m) the index encodes
//! the coefficient vector of a polynomial in base p: the element with index
//! `v` is `c_0 + c_1*x + ... + c_{m-1}*x^{m-1}` where `v = sum c_i p^i`.
//! Arithmetic is modulo a fixed irreducible polynomial: the monic degree-m
//! polynomial over GF(p) whose base-p coefficient encoding is smallest.
//! This makes element labels reproducible across runs and implementations
//! (GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1, ...).

use crate::error::{Error, Result};

/// Arithmetic context for GF(q) with full operation tables.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    q: usize,
    p: usize,
    m: usize,
    /// Monic irreducible polynomial, coefficients low-to-high, length m+1.
    /// For m = 1 this is `[0, 1]` (reduction is plain mod p).
    poly: Vec<u16>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>, // inv[0] is unused
}

/// An element index in `0..q-1`; 0 is the additive identity, 1 the
/// multiplicative identity.
pub type FieldElement = u16;

fn factor_prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut n = q;
            let mut m = 0;
            while n.is_multiple_of(p) {
                n /= p;
                m += 1;
            }
            return if n == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn digits(mut v: usize, p: usize, m: usize) -> Vec<u16> {
    let mut d = vec![0u16; m];
    for slot in d.iter_mut() {
        *slot = (v % p) as u16;
        v /= p;
    }
    d
}

fn undigits(d: &[u16], p: usize) -> usize {
    d.iter().rev().fold(0usize, |acc, &c| acc * p + c as usize)
}

/// Polynomial remainder of `a` by monic `b` over GF(p). Coefficients
/// low-to-high; trailing zeros allowed.
fn poly_rem(a: &[u16], b: &[u16], p: usize) -> Vec<u16> {
    let mut r: Vec<u16> = a.to_vec();
    let db = b.iter().rposition(|&c| c != 0).expect("monic divisor");
    while let Some(dr) = r.iter().rposition(|&c| c != 0) {
        if dr < db {
            break;
        }
        // b is monic, so the quotient coefficient is just r[dr]
        let coef = r[dr] as usize;
        let shift = dr - db;
        for i in 0..=db {
            let sub = (coef * b[i] as usize) % p;
            let cur = r[i + shift] as usize;
            r[i + shift] = ((cur + p - sub) % p) as u16;
        }
    }
    r
}

fn poly_mul(a: &[u16], b: &[u16], p: usize) -> Vec<u16> {
    let mut out = vec![0u16; a.len() + b.len()];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            let v = out[i + j] as usize + ca as usize * cb as usize;
            out[i + j] = (v % p) as u16;
        }
    }
    out
}

/// Smallest (in base-p coefficient encoding) monic irreducible polynomial
/// of degree m over GF(p). Irreducibility by trial division against every
/// monic polynomial of degree 1..=m/2.
fn find_irreducible(p: usize, m: usize) -> Vec<u16> {
    'cand: for low in 0..p.pow(m as u32) {
        let mut cand = digits(low, p, m);
        cand.push(1); // monic
        for deg in 1..=m / 2 {
            for dlow in 0..p.pow(deg as u32) {
                let mut div = digits(dlow, p, deg);
                div.push(1);
                let rem = poly_rem(&cand, &div, p);
                if rem.iter().all(|&c| c == 0) {
                    continue 'cand;
                }
            }
        }
        // no divisor of degree <= m/2, and degree-m monic has no unit factors
        if m >= 1 {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

impl GaloisField {
    /// Build GF(q) for a prime power q in [2, 64].
    pub fn new(q: usize) -> Result<Self> {
        if q > 64 {
            return Err(Error::UnsupportedFieldOrder(q));
        }
        let (p, m) = factor_prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let poly = if m == 1 {
            vec![0, 1]
        } else {
            find_irreducible(p, m)
        };
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        for a in 0..q {
            let da = digits(a, p, m);
            let nd: Vec<u16> = da.iter().map(|&c| ((p - c as usize) % p) as u16).collect();
            neg[a] = undigits(&nd, p) as u16;
            for b in 0..q {
                let db = digits(b, p, m);
                let sum: Vec<u16> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as usize + y as usize) % p) as u16)
                    .collect();
                add[a * q + b] = undigits(&sum, p) as u16;
                let prod = poly_mul(&da, &db, p);
                let red = poly_rem(&prod, &poly, p);
                mul[a * q + b] = undigits(&red[..m.min(red.len())], p) as u16;
            }
        }
        let mut inv = vec![0u16; q];
        for a in 1..q {
            for b in 1..q {
                if mul[a * q + b] == 1 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        Ok(GaloisField {
            q,
            p,
            m,
            poly,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.m
    }

    /// The fixed irreducible polynomial, coefficients low-to-high.
    pub fn modulus(&self) -> &[u16] {
        &self.poly
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg[b as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.neg[a as usize]
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a == 0 {
            return Err(Error::DivideByZero);
        }
        Ok(self.inv[a as usize])
    }

    /// Quadratic-residue character: +1 for a nonzero square, 0 for zero,
    /// -1 otherwise. Defined only for odd field order.
    pub fn quadratic_character(&self, beta: FieldElement) -> Result<i8> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic(self.q));
        }
        if beta == 0 {
            return Ok(0);
        }
        for x in 1..self.q as u16 {
            if self.mul(x, x) == beta {
                return Ok(1);
            }
        }
        Ok(-1)
    }

    /// All elements, in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.q as u16
    }
}
