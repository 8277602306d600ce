//! Exact scalars: residues modulo a small prime, or arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_PRIME: u32 = 97;

/// The coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Prime { p: u32 },
    Rational,
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "modulus {p} is not a prime in 2..={MAX_PRIME}"
            )));
        }
        Ok(Field::Prime { p })
    }

    /// Panicking shorthand for tests and examples with literal moduli.
    pub fn gf(p: u32) -> Field {
        Field::prime(p).expect("prime modulus")
    }

    pub fn validate(self) -> Result<Field> {
        match self {
            Field::Prime { p } => Field::prime(p),
            Field::Rational => Ok(self),
        }
    }

    pub fn modulus(self) -> Option<u32> {
        match self {
            Field::Prime { p } => Some(p),
            Field::Rational => None,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, v: i64) -> Scalar {
        match self {
            Field::Prime { p } => Scalar::Mod {
                v: v.rem_euclid(p as i64) as u32,
                p,
            },
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// `num / den`, or `None` when `den` vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Option<Scalar> {
        self.int(den).inv().map(|d| self.int(num) * d)
    }

    /// Parses `"a"` or `"a/b"`; prime-field values are reduced.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidInput(format!("cannot parse scalar {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            Field::Prime { p } => {
                let m = BigInt::from(p);
                let reduce = |x: BigInt| -> i64 {
                    let r = ((x % &m) + &m) % &m;
                    i64::try_from(r).expect("residue fits")
                };
                let d = self.int(reduce(den));
                let inv = d.inv().ok_or_else(bad)?;
                Ok(self.int(reduce(num)) * inv)
            }
        }
    }

    /// Every element of a prime field in residue order; `None` for the rationals.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        self.modulus().map(|p| (0..p).map(|v| Scalar::Mod { v, p }).collect())
    }

    /// The image of `n` in the field, when it is invertible.
    pub fn inverse_of_int(self, n: i64) -> Option<Scalar> {
        self.int(n).inv()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime { p } => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A field element in canonical form: a residue in `0..p`, or a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { v: u32, p: u32 },
    Rat(BigRational),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime { p: *p },
            Scalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Mod { v, p } => {
                if *v == 0 {
                    return None;
                }
                Some(Scalar::Mod {
                    v: pow_mod(*v, *p - 2, *p),
                    p: *p,
                })
            }
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
        }
    }

    /// The residue of a prime-field scalar.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Mod { v, .. } => Some(*v),
            Scalar::Rat(_) => None,
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
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

    fn check_same(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "scalars from different fields combined");
    }
}

fn pow_mod(b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc: u64 = 1;
    let mut base = b as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { v, .. } => write!(f, "{v}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, .. }) => Scalar::Mod { v: (a + b) % p, p: *p },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, .. }) => Scalar::Mod {
                v: (a + p - b) % p,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, .. }) => Scalar::Mod {
                v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { v, p } => Scalar::Mod { v: (p - v) % p, p: *p },
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Scalar {
    /// `self += a * b` without the intermediate clone dance at call sites.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Mod { v, p }, Scalar::Mod { v: x, .. }, Scalar::Mod { v: y, .. }) => {
                *v = ((*v as u64 + *x as u64 * *y as u64) % *p as u64) as u32;
            }
            _ => *self = &*self + &(a * b),
        }
    }
}
