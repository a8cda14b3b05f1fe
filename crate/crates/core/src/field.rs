//! Exact scalars: arbitrary-precision rationals or residues modulo a prime.
//!
//! The algebraic statements this crate checks are made over an algebraically
//! closed field. We compute over `Q` or `F_p` instead; random points over a
//! large prime field stand in for generic points, see
//! [`crate::scheme::random_generic_points`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 32;

/// The field of definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    /// `F_p`; `p` must be a prime below [`MAX_MODULUS`].
    pub fn prime(p: u64) -> Result<Self> {
        let spec = FieldSpec::Prime { p };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } if p >= MAX_MODULUS => Err(Error::Argument(format!(
                "modulus {p} is too large (must be below 2^32)"
            ))),
            FieldSpec::Prime { p } if !is_prime(p) => {
                Err(Error::Argument(format!("modulus {p} is not prime")))
            }
            FieldSpec::Prime { .. } => Ok(()),
        }
    }

    /// Zero for `Q`, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => p,
        }
    }

    /// Whether the integers `0, 1, ..., k` are pairwise distinct in the field.
    pub fn has_distinct_integers_up_to(&self, k: u64) -> bool {
        match *self {
            FieldSpec::Rational => true,
            FieldSpec::Prime { p } => k < p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from_integer(v.into())),
            FieldSpec::Prime { p } => FieldElement::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::Prime { p } => {
                let r = v.mod_floor(&BigInt::from(p));
                FieldElement::Prime {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    pub fn from_biguint(&self, v: &BigUint) -> FieldElement {
        self.from_bigint(&BigInt::from(v.clone()))
    }

    /// Maps a rational number into the field; fails over `F_p` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(&self, v: &BigRational) -> Result<FieldElement> {
        match self {
            FieldSpec::Rational => Ok(FieldElement::Rational(v.clone())),
            FieldSpec::Prime { p } => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                if den.is_zero() {
                    return Err(Error::Argument(format!(
                        "denominator of {v} vanishes modulo {p}"
                    )));
                }
                Ok(num / den)
            }
        }
    }

    /// Parses a decimal integer or a fraction `a/b`.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let value = if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim())
                .map_err(|e| Error::parse("numerator", format!("{s:?}: {e}")))?;
            let d = BigInt::from_str(d.trim())
                .map_err(|e| Error::parse("denominator", format!("{s:?}: {e}")))?;
            if d.is_zero() {
                return Err(Error::parse("denominator", format!("{s:?} divides by zero")));
            }
            BigRational::new(n, d)
        } else {
            let n =
                BigInt::from_str(s).map_err(|e| Error::parse("coefficient", format!("{s:?}: {e}")))?;
            BigRational::from_integer(n)
        };
        self.from_rational(&value)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// Trial division; moduli are below 2^32 so this is at most 2^16 steps.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a [`FieldSpec`].
///
/// Arithmetic between elements of different fields is a programming error
/// and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rational,
            FieldElement::Prime { modulus, .. } => FieldSpec::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The residue as an integer in `[0, p)`; `None` for rationals.
    pub fn residue(&self) -> Option<u64> {
        match self {
            FieldElement::Prime { value, .. } => Some(*value),
            FieldElement::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Prime { .. } => None,
        }
    }

    /// Whether the element is displayed with a leading minus sign.
    pub(crate) fn is_negative_display(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_negative(),
            FieldElement::Prime { value, modulus } => *value > modulus / 2,
        }
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!(
        "arithmetic between elements of {} and {}",
        a.field(),
        b.field()
    )
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) if p == q => FieldElement::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) if p == q => FieldElement::Prime {
                value: if a >= b { a - b } else { p - (b - a) },
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) if p == q => FieldElement::Prime {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &FieldElement) -> FieldElement {
        let inv = rhs.inv().expect("division by zero in field");
        self * &inv
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
