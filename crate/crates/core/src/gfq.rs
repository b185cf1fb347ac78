//! Arithmetic in GF(q), q = p^e <= 2^16.
//!
//! Elements are identified by their canonical encoding in `0..q`. In a prime
//! field this is the residue; in an extension field it is the coefficient
//! vector of the residue polynomial packed in base p with the constant term
//! as the least significant digit. Encoding 0 is zero and encoding 1 is one
//! in both cases.
//!
//! The extension modulus is the lexicographically smallest monic irreducible
//! polynomial of degree e, comparing coefficient vectors from the constant
//! term upwards, so two fields built from the same `(p, e)` are identical.
//!
//! Fields with q <= 256 carry full addition and multiplication tables. Every
//! field carries exp/log tables for a fixed primitive element, which back
//! inversion, powers and (above 256) multiplication.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;
/// Fields up to this order get full add/mul tables.
pub const TABLE_LIMIT: u32 = 256;

/// Canonical encoding of a field element.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps an encoding without checking it against a field.
    pub const fn new(value: u16) -> Self {
        Elem(value)
    }

    pub const fn value(self) -> u16 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus, coefficients low degree first, leading 1 included.
    /// Empty for prime fields.
    modulus: Vec<u32>,
    primitive: Elem,
    /// `exp[i] = g^i` for `i in 0..q-1`.
    exp: Vec<u16>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    /// `q * q` tables, only when `q <= TABLE_LIMIT`.
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// The finite field GF(p^e). Cheap to clone; the tables are shared.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.e == other.inner.e
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self)
    }
}

/// Formats as the field spec string: `"q"` for primes, `"p^e"` otherwise.
impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "{}", self.inner.p)
        } else {
            write!(f, "{}^{}", self.inner.p, self.inner.e)
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `value` as `digits.len()` base-`p` digits, least significant first.
fn to_digits(mut value: u32, p: u32, digits: &mut [u32]) {
    for d in digits.iter_mut() {
        *d = value % p;
        value /= p;
    }
}

fn from_digits(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `num` modulo the monic `den` over GF(p); both low degree first.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let mut divisor = vec![0u32; d + 1];
        divisor[d] = 1;
        for t in 0..p.pow(d as u32) {
            to_digits(t, p, &mut divisor[..d]);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `e`, comparing `(c0, c1, ..)` lexicographically.
fn smallest_irreducible(p: u32, e: u32) -> Result<Vec<u32>> {
    let e = e as usize;
    let mut poly = vec![0u32; e + 1];
    poly[e] = 1;
    let mut rev = vec![0u32; e];
    for t in 0..p.pow(e as u32) {
        // c0 is the most significant digit of t.
        to_digits(t, p, &mut rev);
        for i in 0..e {
            poly[i] = rev[e - 1 - i];
        }
        if is_irreducible(&poly, p) {
            return Ok(poly);
        }
    }
    Err(Error::ReducibleModulus)
}

struct RawArith<'a> {
    p: u32,
    e: usize,
    modulus: &'a [u32],
}

impl RawArith<'_> {
    fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (mut x, mut y) = ([0u32; 16], [0u32; 16]);
        to_digits(a, self.p, &mut x[..self.e]);
        to_digits(b, self.p, &mut y[..self.e]);
        for i in 0..self.e {
            x[i] = (x[i] + y[i]) % self.p;
        }
        from_digits(&x[..self.e], self.p)
    }

    fn neg(&self, a: u32) -> u32 {
        if self.e == 1 {
            return (self.p - a) % self.p;
        }
        let mut x = [0u32; 16];
        to_digits(a, self.p, &mut x[..self.e]);
        for d in x[..self.e].iter_mut() {
            *d = (self.p - *d) % self.p;
        }
        from_digits(&x[..self.e], self.p)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        if self.e == 1 {
            return ((a as u64 * b as u64) % p as u64) as u32;
        }
        let e = self.e;
        let (mut x, mut y) = ([0u32; 16], [0u32; 16]);
        to_digits(a, p, &mut x[..e]);
        to_digits(b, p, &mut y[..e]);
        let mut prod = [0u32; 32];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        for d in (e..2 * e - 1).rev() {
            let c = prod[d];
            if c != 0 {
                for i in 0..e {
                    prod[d - e + i] = (prod[d - e + i] + p - (c * self.modulus[i]) % p) % p;
                }
                prod[d] = 0;
            }
        }
        from_digits(&prod[..e], p)
    }
}

impl FiniteField {
    /// Builds GF(p^e). Accepts q = 2; the toric constructions reject it.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = match p.checked_pow(e) {
            Some(q) if q <= MAX_ORDER => q,
            _ => return Err(Error::FieldTooLarge { p, e }),
        };
        let modulus = if e > 1 { smallest_irreducible(p, e)? } else { Vec::new() };
        if e > 1 && !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus);
        }
        let raw = RawArith { p, e: e as usize, modulus: &modulus };

        // Primitive element: smallest encoding whose powers cover all units.
        let order = q - 1;
        let mut exp = vec![0u16; order as usize];
        let mut primitive = 1u32;
        for g in 1..q {
            let mut x = 1u32;
            let mut full = true;
            for (i, slot) in exp.iter_mut().enumerate() {
                if i > 0 && x == 1 {
                    full = false;
                    break;
                }
                *slot = x as u16;
                x = raw.mul(x, g);
            }
            if full && x == 1 {
                primitive = g;
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let neg: Vec<u16> = (0..q).map(|a| raw.neg(a) as u16).collect();
        let mut inv = vec![0u16; q as usize];
        for a in 1..q {
            let l = log[a as usize];
            inv[a as usize] = exp[((order - l) % order) as usize];
        }
        let (add, mul) = if q <= TABLE_LIMIT {
            let mut add = vec![0u16; (q * q) as usize];
            let mut mul = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    let i = (a * q + b) as usize;
                    add[i] = raw.add(a, b) as u16;
                    mul[i] = raw.mul(a, b) as u16;
                }
            }
            (add, mul)
        } else {
            (Vec::new(), Vec::new())
        };
        Ok(FiniteField {
            inner: Arc::new(Inner {
                p,
                e,
                q,
                modulus,
                primitive: Elem(primitive as u16),
                exp,
                log,
                neg,
                inv,
                add,
                mul,
            }),
        })
    }

    /// Builds GF(q) from its order, factoring q as a prime power.
    pub fn with_order(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrime(q));
        }
        let p = (2..=q).find(|d| q % d == 0).unwrap_or(q);
        let mut e = 0;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrime(q));
        }
        Self::new(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Size of the unit group, q - 1.
    pub fn unit_order(&self) -> u32 {
        self.inner.q - 1
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.e == 1
    }

    /// Monic modulus coefficients, constant term first. `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.inner.e == 1 {
            None
        } else {
            Some(&self.inner.modulus)
        }
    }

    pub fn primitive_element(&self) -> Elem {
        self.inner.primitive
    }

    /// Rejects q = 2 for the constructions that need at least three elements.
    pub fn require_nontrivial(&self) -> Result<()> {
        if self.inner.q < 3 {
            Err(Error::FieldTooSmall { q: self.inner.q })
        } else {
            Ok(())
        }
    }

    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value < self.inner.q {
            Ok(Elem(value as u16))
        } else {
            Err(Error::NotAnElement { value, q: self.inner.q })
        }
    }

    pub fn element(&self, value: u32) -> Result<FieldElement<'_>> {
        Ok(FieldElement { field: self, elem: self.elem(value)? })
    }

    pub fn wrap(&self, elem: Elem) -> FieldElement<'_> {
        debug_assert!((elem.0 as u32) < self.inner.q);
        FieldElement { field: self, elem }
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.inner.q).map(|v| Elem(v as u16))
    }

    /// Nonzero elements in ascending encoding order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.inner.q).map(|v| Elem(v as u16))
    }

    /// The q - 1 units in ascending encoding order.
    pub fn units(&self) -> Vec<FieldElement<'_>> {
        self.nonzero().map(|e| self.wrap(e)).collect()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if !f.add.is_empty() {
            return Elem(f.add[a.index() * f.q as usize + b.index()]);
        }
        if f.e == 1 {
            return Elem(((a.0 as u32 + b.0 as u32) % f.p) as u16);
        }
        let raw = RawArith { p: f.p, e: f.e as usize, modulus: &f.modulus };
        Elem(raw.add(a.0 as u32, b.0 as u32) as u16)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.inner.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if !f.mul.is_empty() {
            return Elem(f.mul[a.index() * f.q as usize + b.index()]);
        }
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let order = f.q - 1;
        let l = (f.log[a.index()] + f.log[b.index()]) % order;
        Elem(f.exp[l as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(Elem(self.inner.inv[a.index()]))
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let order = (self.inner.q - 1) as u64;
        let l = (self.inner.log[a.index()] as u64 * (n % order)) % order;
        Elem(self.inner.exp[l as usize])
    }

    /// `g^i` for the fixed primitive element g, exponent taken mod q - 1.
    #[inline]
    pub fn exp(&self, i: u64) -> Elem {
        let order = (self.inner.q - 1) as u64;
        Elem(self.inner.exp[(i % order) as usize])
    }

    /// Discrete log base the primitive element.
    pub fn log(&self, a: Elem) -> Result<u32> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.inner.log[a.index()])
        }
    }

    fn check_same(&self, other: &FiniteField) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedFields { left: self.order(), right: other.order() })
        }
    }
}

/// An element bound to its field. Arithmetic across fields is an error from
/// the `try_*` methods and a panic from the operator impls.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FiniteField,
    elem: Elem,
}

impl<'f> FieldElement<'f> {
    pub fn field(&self) -> &'f FiniteField {
        self.field
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    pub fn value(&self) -> u32 {
        self.elem.0 as u32
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    fn with(&self, elem: Elem) -> Self {
        FieldElement { field: self.field, elem }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.field.check_same(rhs.field)?;
        Ok(self.with(self.field.add(self.elem, rhs.elem)))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.field.check_same(rhs.field)?;
        Ok(self.with(self.field.sub(self.elem, rhs.elem)))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.field.check_same(rhs.field)?;
        Ok(self.with(self.field.mul(self.elem, rhs.elem)))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.field.check_same(rhs.field)?;
        Ok(self.with(self.field.div(self.elem, rhs.elem)?))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.elem)?))
    }

    pub fn pow(&self, n: u64) -> Self {
        self.with(self.field.pow(self.elem, n))
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.elem == other.elem
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈GF({})", self.elem, self.field)
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elem)
    }
}

impl<'f> Add for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn add(self, rhs: Self) -> Self::Output {
        self.try_add(&rhs).expect("field mismatch")
    }
}

impl<'f> Sub for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn sub(self, rhs: Self) -> Self::Output {
        self.try_sub(&rhs).expect("field mismatch")
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.try_mul(&rhs).expect("field mismatch")
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn neg(self) -> Self::Output {
        self.with(self.field.neg(self.elem))
    }
}
