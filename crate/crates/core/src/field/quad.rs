// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::base::{Elem, Field, DEFAULT_FIELD_CAP};
use crate::arith::prime_divisors;
use crate::error::{Error, Result};

/// `x + yα` in `F_{q²} = F_q[α]/(α² − d)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadElem {
    pub x: Elem,
    pub y: Elem,
}

impl QuadElem {
    pub const ZERO: QuadElem = QuadElem {
        x: Elem::ZERO,
        y: Elem::ZERO,
    };
    pub const ONE: QuadElem = QuadElem {
        x: Elem::ONE,
        y: Elem::ZERO,
    };
    pub const ALPHA: QuadElem = QuadElem {
        x: Elem::ZERO,
        y: Elem::ONE,
    };

    pub fn new(x: Elem, y: Elem) -> Self {
        QuadElem { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// The quadratic extension `F_{q²}` over a base field `F_q`.
///
/// Vertex index of `x + yα` is `rank(x)·q + rank(y)`.
#[derive(Clone, Debug)]
pub struct QuadExt {
    base: Field,
    d: Elem,
    primitive: QuadElem,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl QuadExt {
    pub fn new(base: Field) -> Result<Self> {
        Self::with_cap(base, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(base: Field, cap: u64) -> Result<Self> {
        let q = base.order() as u64;
        if q * q > cap {
            return Err(Error::CapExceeded {
                what: "extension order",
                value: q * q,
                cap,
            });
        }
        let d = base.least_nonsquare();
        let mut ext = QuadExt {
            base,
            d,
            primitive: QuadElem::ZERO,
            exp: Vec::new(),
            log: Vec::new(),
        };
        ext.primitive = ext.find_primitive();
        ext.fill_tables();
        Ok(ext)
    }

    /// Builds `F_{q²}` from `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        Self::new(Field::of_order(q)?)
    }

    pub fn with_cap_of_order(q: u64, cap: u64) -> Result<Self> {
        let (p, m) = crate::arith::odd_prime_power(q)?;
        Self::with_cap(Field::with_cap(p, m, cap)?, cap)
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// `q`, the order of the base field.
    pub fn q(&self) -> u32 {
        self.base.order()
    }

    /// `q²`.
    pub fn order(&self) -> usize {
        let q = self.q() as usize;
        q * q
    }

    pub fn nonsquare_d(&self) -> Elem {
        self.d
    }

    /// The primitive element `β` of `F_{q²}`.
    pub fn primitive(&self) -> QuadElem {
        self.primitive
    }

    pub fn index(&self, a: QuadElem) -> usize {
        a.x.rank() * self.q() as usize + a.y.rank()
    }

    pub fn element(&self, index: usize) -> QuadElem {
        let q = self.q() as usize;
        QuadElem::new(Elem((index / q) as u32), Elem((index % q) as u32))
    }

    pub fn elements(&self) -> impl Iterator<Item = QuadElem> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn embed(&self, a: Elem) -> QuadElem {
        QuadElem::new(a, Elem::ZERO)
    }

    pub fn add(&self, a: QuadElem, b: QuadElem) -> QuadElem {
        QuadElem::new(self.base.add(a.x, b.x), self.base.add(a.y, b.y))
    }

    pub fn sub(&self, a: QuadElem, b: QuadElem) -> QuadElem {
        QuadElem::new(self.base.sub(a.x, b.x), self.base.sub(a.y, b.y))
    }

    pub fn neg(&self, a: QuadElem) -> QuadElem {
        QuadElem::new(self.base.neg(a.x), self.base.neg(a.y))
    }

    /// `(x + yα)(x′ + y′α) = (xx′ + yy′d) + (xy′ + x′y)α`.
    pub fn mul(&self, a: QuadElem, b: QuadElem) -> QuadElem {
        let f = &self.base;
        let x = f.add(f.mul(a.x, b.x), f.mul(f.mul(a.y, b.y), self.d));
        let y = f.add(f.mul(a.x, b.y), f.mul(b.x, a.y));
        QuadElem::new(x, y)
    }

    /// Scalar multiplication by an element of the base field.
    pub fn scale(&self, c: Elem, a: QuadElem) -> QuadElem {
        QuadElem::new(self.base.mul(c, a.x), self.base.mul(c, a.y))
    }

    /// Square-and-multiply with the coordinate formula; independent of the tables.
    pub fn pow(&self, a: QuadElem, mut e: u64) -> QuadElem {
        let mut result = QuadElem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: QuadElem) -> Option<QuadElem> {
        // γ⁻¹ = conj(γ) / N(γ)
        let n = self.base.inv(self.norm(a))?;
        Some(self.scale(n, self.conjugate(a)))
    }

    /// `x − yα`, the image of `x + yα` under Frobenius.
    pub fn conjugate(&self, a: QuadElem) -> QuadElem {
        QuadElem::new(a.x, self.base.neg(a.y))
    }

    /// `N(x + yα) = x² − y²d`.
    pub fn norm(&self, a: QuadElem) -> Elem {
        let f = &self.base;
        f.sub(f.mul(a.x, a.x), f.mul(f.mul(a.y, a.y), self.d))
    }

    /// `γ^(q+1)` by exponentiation; agrees with [`QuadExt::norm`].
    pub fn norm_by_power(&self, a: QuadElem) -> Elem {
        let r = self.pow(a, self.q() as u64 + 1);
        debug_assert!(r.y.is_zero());
        r.x
    }

    /// Euler's criterion in `F_{q²}`: `γ^((q²−1)/2) = 1`.
    pub fn is_square(&self, a: QuadElem) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.pow(a, (self.order() as u64 - 1) / 2) == QuadElem::ONE)
    }

    /// Squareness via the norm: `γ` is a square iff `N(γ)` is a square in `F_q`.
    pub fn is_square_by_norm(&self, a: QuadElem) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        self.base.is_square(self.norm(a))
    }

    /// Discrete logarithm base `β`.
    pub fn log(&self, a: QuadElem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[self.index(a)])
    }

    /// `β^i`.
    pub fn exp(&self, i: u64) -> QuadElem {
        let n = self.order() as u64 - 1;
        self.element(self.exp[(i % n) as usize] as usize)
    }

    /// Table of nonzero squares, indexed by vertex, built by squaring every element.
    pub fn square_table(&self) -> Vec<bool> {
        let mut table = vec![false; self.order()];
        for a in self.elements().filter(|a| !a.is_zero()) {
            table[self.index(self.mul(a, a))] = true;
        }
        table
    }

    pub fn order_of(&self, a: QuadElem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let n = self.order() as u64 - 1;
        let mut order = n;
        for r in prime_divisors(n) {
            while order % r == 0 && self.pow(a, order / r) == QuadElem::ONE {
                order /= r;
            }
        }
        Some(order)
    }

    fn find_primitive(&self) -> QuadElem {
        let n = self.order() as u64 - 1;
        let factors = prime_divisors(n);
        (1..self.order())
            .map(|i| self.element(i))
            .find(|&g| factors.iter().all(|&r| self.pow(g, n / r) != QuadElem::ONE))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn fill_tables(&mut self) {
        let n = self.order() - 1;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![0u32; self.order()];
        let mut cur = QuadElem::ONE;
        for i in 0..n {
            let idx = self.index(cur);
            exp.push(idx as u32);
            log[idx] = i as u32;
            cur = self.mul(cur, self.primitive);
        }
        debug_assert_eq!(cur, QuadElem::ONE);
        self.exp = exp;
        self.log = log;
    }

    /// Field parameters as coefficient lists, for embedding in certificates.
    pub fn dump(&self, with_elements: bool) -> FieldDump {
        let f = &self.base;
        FieldDump {
            p: f.characteristic(),
            m: f.degree(),
            q: f.order(),
            modulus: f.modulus().to_vec(),
            base_primitive: f.coeffs(f.primitive()),
            d: f.coeffs(self.d),
            beta: CoordPair {
                x: f.coeffs(self.primitive.x),
                y: f.coeffs(self.primitive.y),
            },
            elements: with_elements.then(|| f.elements().map(|a| f.coeffs(a)).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoordPair {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

/// Field setup as JSON-friendly coefficient lists (constant term first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldDump {
    pub p: u32,
    pub m: u32,
    pub q: u32,
    pub modulus: Vec<u32>,
    pub base_primitive: Vec<u32>,
    pub d: Vec<u32>,
    pub beta: CoordPair,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Vec<u32>>>,
}
