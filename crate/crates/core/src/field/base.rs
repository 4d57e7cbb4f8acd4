// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};

/// Default upper bound on field orders built by this crate.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

/// An element of `F_q`, stored as its canonical rank.
///
/// The rank of `c₀ + c₁x + … + c_{m−1}x^{m−1}` is `Σ cᵢ pⁱ`, so the prime
/// subfield occupies ranks `0..p` and ranks are ordered as base-`p` numerals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn rank(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The finite field `F_{p^m}` with exp/log tables.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, constant term first, length `m + 1`.
    modulus: Vec<u32>,
    primitive: Elem,
    /// `exp[i] = g^i` for `i < 2(q − 1)`, doubled so products need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Field {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_cap(p, m, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u64, m: u32, cap: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::NotOddPrimePower(1));
        }
        let order = p.checked_pow(m).filter(|&o| o <= cap).ok_or(Error::CapExceeded {
            what: "field order",
            value: p.saturating_pow(m),
            cap,
        })?;
        let (p32, q) = (p as u32, order as u32);
        let modulus = least_irreducible(p32, m);

        let mut field = Field {
            p: p32,
            m,
            q,
            modulus,
            primitive: Elem::ZERO,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.primitive = field.find_primitive();
        field.fill_tables();
        Ok(field)
    }

    /// Builds `F_q` from the order directly.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = crate::arith::odd_prime_power(q)?;
        Self::new(p, m)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(Elem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.q).map(Elem)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut r = a.0;
        (0..self.m)
            .map(|_| {
                let c = r % self.p;
                r /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Elem {
        Elem(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        let (mut a, mut b) = (a.0, b.0);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.m == 1 {
            return Elem((self.p - a.0) % self.p);
        }
        let mut a = a.0;
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.m {
            out += ((self.p - a % self.p) % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.rank()] + self.log[b.rank()]) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        let l = self.log[a.rank()];
        Some(Elem(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let l = (self.log[a.rank()] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        Elem(self.exp[l as usize])
    }

    /// Discrete logarithm base [`Field::primitive`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.rank()])
    }

    pub fn exp(&self, i: u64) -> Elem {
        Elem(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    pub fn neg_one(&self) -> Elem {
        self.neg(Elem::ONE)
    }

    /// Euler's criterion: `a^((q−1)/2) = 1`.
    pub fn is_square(&self, a: Elem) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, (self.q as u64 - 1) / 2) == Elem::ONE)
    }

    /// Least `x ∈ F_q*` (canonical order) with `x^((q−1)/2) = −1`.
    pub fn least_nonsquare(&self) -> Elem {
        let half = (self.q as u64 - 1) / 2;
        let minus_one = self.neg_one();
        self.nonzero()
            .find(|&x| self.pow(x, half) == minus_one)
            .expect("odd-order field has a non-square")
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.q as u64 - 1;
        Some(n / gcd(l, n))
    }

    // Construction helpers below use plain polynomial arithmetic so that the
    // tables are derived from the modulus alone.

    fn poly_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let (p, m) = (self.p as u64, self.m as usize);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        // reduce using x^m = −(c₀ + … + c_{m−1}x^{m−1})
        for k in (m..prod.len()).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &c) in self.modulus[..m].iter().enumerate() {
                let idx = k - m + i;
                prod[idx] = (prod[idx] + (p - top) * c as u64) % p;
            }
        }
        prod.truncate(m);
        prod.into_iter().map(|c| c as u32).collect()
    }

    fn poly_pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut result = self.coeffs(Elem::ONE);
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.poly_mul(&result, &base);
            }
            base = self.poly_mul(&base, &base);
            e >>= 1;
        }
        result
    }

    fn find_primitive(&self) -> Elem {
        let n = self.q as u64 - 1;
        let factors = prime_divisors(n);
        let one = self.coeffs(Elem::ONE);
        self.nonzero()
            .find(|&g| {
                let coeffs = self.coeffs(g);
                factors.iter().all(|&r| self.poly_pow(&coeffs, n / r) != one)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn fill_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(2 * n);
        let mut log = vec![0u32; self.q as usize];
        let g = self.coeffs(self.primitive);
        let mut cur = self.coeffs(Elem::ONE);
        for i in 0..n {
            let e = self.from_coeffs(&cur);
            exp.push(e.0);
            log[e.rank()] = i as u32;
            cur = self.poly_mul(&cur, &g);
        }
        debug_assert_eq!(self.from_coeffs(&cur), Elem::ONE);
        exp.extend_from_within(..);
        self.exp = exp;
        self.log = log;
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Remainder of `a` modulo the monic `b` over `F_p`; both constant-first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let top = r.pop().unwrap();
        if top == 0 {
            continue;
        }
        let shift = r.len() - db;
        for (i, &c) in b[..db].iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - top) * c as u64 % p) % p;
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Monic polynomials of degree `deg` in lexicographic order of their
/// coefficient lists read constant term first.
fn monic_polys(p: u32, deg: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..(p as u64).pow(deg)).map(move |mut t| {
        let mut coeffs = vec![0u32; deg as usize + 1];
        for i in (0..deg as usize).rev() {
            coeffs[i] = (t % p as u64) as u32;
            t /= p as u64;
        }
        coeffs[deg as usize] = 1;
        coeffs
    })
}

/// Irreducibility by trial division against every monic polynomial of degree ≤ m/2.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|divisor| poly_rem(poly, &divisor, p).iter().any(|&c| c != 0)))
}

/// Lexicographically least monic irreducible of degree `m` (constant term first).
pub fn least_irreducible(p: u32, m: u32) -> Vec<u32> {
    monic_polys(p, m)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
