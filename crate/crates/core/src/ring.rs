//! Exact coefficient rings: ℤ, ℚ, ℤ/n and F_p.
//!
//! Elements are stored in canonical form. Arithmetic on a homogeneous piece of
//! a torsion module happens in a quotient ℤ/m of the base ring, so most
//! operations take an explicit `modulus` (0 means "no further reduction").

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub mod snf;

pub use snf::{smith_normal_form, IntMatrix, SnfResult};

/// One of the supported exact coefficient rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    IntegersMod(u64),
    PrimeField(u64),
}

/// Arithmetic operation selector for [`ring_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Neg,
}

/// A canonical ring element. Integers, residues and prime-field elements use
/// the `Integer` variant; only ℚ uses `Rational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    Integer(BigInt),
    Rational(BigRational),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as (prime, exponent) pairs in increasing order.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// gcd with the convention gcd(0, a) = a.
pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

impl RingSpec {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(RingSpec::PrimeField(p))
    }

    /// Re-validates a value that may have been built with a bare variant.
    pub fn validate(self) -> Result<Self> {
        match self {
            RingSpec::IntegersMod(n) => Self::integers_mod(n),
            RingSpec::PrimeField(p) => Self::prime_field(p),
            other => Ok(other),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            RingSpec::Integers | RingSpec::Rationals => 0,
            RingSpec::IntegersMod(n) => n,
            RingSpec::PrimeField(p) => p,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::Rationals | RingSpec::PrimeField(_))
    }

    /// The modulus that every coefficient is reduced by (0 for ℤ and ℚ).
    pub fn base_modulus(&self) -> u64 {
        self.characteristic()
    }

    /// Whether `a` is an acceptable annihilator for a cyclic generator.
    ///
    /// The unit ideal (`a = 1`) is rejected: it presents the zero module.
    pub fn is_legal_annihilator(&self, a: u64) -> bool {
        match *self {
            RingSpec::Integers => a != 1,
            RingSpec::Rationals | RingSpec::PrimeField(_) => a == 0,
            RingSpec::IntegersMod(n) => a == 0 || (a != 1 && n % a == 0),
        }
    }

    /// Coefficient modulus of the cyclic module R/(a): the m with R/(a) ≅ ℤ/m
    /// (or the ring itself when m = 0). Equals the characteristic of R/(a).
    pub fn cyclic_modulus(&self, a: u64) -> u64 {
        match *self {
            RingSpec::Integers => a,
            RingSpec::Rationals => 0,
            RingSpec::IntegersMod(n) => gcd(n, a),
            RingSpec::PrimeField(p) => p,
        }
    }

    pub fn zero(&self) -> RingElement {
        match self {
            RingSpec::Rationals => RingElement::Rational(BigRational::zero()),
            _ => RingElement::Integer(BigInt::zero()),
        }
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> RingElement {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> RingElement {
        match self {
            RingSpec::Rationals => RingElement::Rational(BigRational::from_integer(v)),
            _ => self.reduce(RingElement::Integer(v), self.base_modulus()),
        }
    }

    /// A fraction; only meaningful over ℚ. Over the other rings the
    /// denominator must be invertible and is inverted modulo the characteristic.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<RingElement> {
        if den == 0 {
            return None;
        }
        match self {
            RingSpec::Rationals => Some(RingElement::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            RingSpec::Integers => (num % den == 0).then(|| self.from_int(num / den)),
            _ => {
                let m = BigInt::from(self.base_modulus());
                let d = BigInt::from(den).mod_floor(&m);
                let eg = d.extended_gcd(&m);
                if !eg.gcd.is_one() {
                    return None;
                }
                Some(self.from_bigint(BigInt::from(num) * eg.x))
            }
        }
    }

    /// Canonical representative of `a` in R/(modulus).
    pub fn reduce(&self, a: RingElement, modulus: u64) -> RingElement {
        match a {
            RingElement::Integer(v) if modulus > 0 => {
                RingElement::Integer(v.mod_floor(&BigInt::from(modulus)))
            }
            other => other,
        }
    }

    pub fn is_zero_mod(&self, a: &RingElement, modulus: u64) -> bool {
        match a {
            RingElement::Integer(v) => {
                if modulus == 0 {
                    v.is_zero()
                } else {
                    v.mod_floor(&BigInt::from(modulus)).is_zero()
                }
            }
            RingElement::Rational(q) => q.is_zero(),
        }
    }

    pub fn add_mod(&self, a: &RingElement, b: &RingElement, modulus: u64) -> RingElement {
        let sum = match (a, b) {
            (RingElement::Integer(x), RingElement::Integer(y)) => RingElement::Integer(x + y),
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x + y),
            _ => panic!("mixed ring element representations"),
        };
        self.reduce(sum, modulus)
    }

    pub fn mul_mod(&self, a: &RingElement, b: &RingElement, modulus: u64) -> RingElement {
        let prod = match (a, b) {
            (RingElement::Integer(x), RingElement::Integer(y)) => RingElement::Integer(x * y),
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x * y),
            _ => panic!("mixed ring element representations"),
        };
        self.reduce(prod, modulus)
    }

    pub fn neg_mod(&self, a: &RingElement, modulus: u64) -> RingElement {
        let n = match a {
            RingElement::Integer(x) => RingElement::Integer(-x),
            RingElement::Rational(x) => RingElement::Rational(-x),
        };
        self.reduce(n, modulus)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add_mod(a, b, self.base_modulus())
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.mul_mod(a, b, self.base_modulus())
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        self.neg_mod(a, self.base_modulus())
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        self.is_zero_mod(a, self.base_modulus())
    }

    /// Whether `a` is in canonical form for this ring.
    pub fn is_canonical(&self, a: &RingElement) -> bool {
        match (self, a) {
            (RingSpec::Rationals, RingElement::Rational(_)) => true,
            (RingSpec::Integers, RingElement::Integer(_)) => true,
            (RingSpec::IntegersMod(m) | RingSpec::PrimeField(m), RingElement::Integer(v)) => {
                !v.is_negative() && v < &BigInt::from(*m)
            }
            _ => false,
        }
    }
}

/// Single entry point for the three basic ring operations.
///
/// `b` is ignored for [`RingOp::Neg`] and required otherwise.
pub fn ring_arith(r: &RingSpec, op: RingOp, a: &RingElement, b: Option<&RingElement>) -> RingElement {
    match op {
        RingOp::Add => r.add(a, b.expect("add needs two operands")),
        RingOp::Mul => r.mul(a, b.expect("mul needs two operands")),
        RingOp::Neg => r.neg(a),
    }
}

pub fn characteristic(r: &RingSpec) -> u64 {
    r.characteristic()
}

impl RingElement {
    /// Integer representative, if this is an integer-backed element.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingElement::Integer(v) => Some(v),
            RingElement::Rational(_) => None,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Integer(v) => v.is_one(),
            RingElement::Rational(q) => q.is_one(),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::IntegersMod(n) => write!(f, "Zmod {n}"),
            RingSpec::PrimeField(p) => write!(f, "Fp {p}"),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(v) => write!(f, "{v}"),
            RingElement::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}
