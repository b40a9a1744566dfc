//! Exact rational scalars.
//!
//! Values whose reduced numerator and denominator fit in an `i64` are kept
//! inline; anything larger is promoted to a [`BigRational`]. The
//! representation is canonical (reduced, positive denominator, small whenever
//! it fits), so derived equality and hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone)]
enum Repr {
    /// numerator, denominator; reduced and `den > 0`.
    Small(i64, i64),
    Big(BigRational),
}

/// An exact element of the rationals.
#[derive(Clone)]
pub struct Scalar(Repr);

impl Scalar {
    pub const ZERO: Scalar = Scalar(Repr::Small(0, 1));
    pub const ONE: Scalar = Scalar(Repr::Small(1, 1));

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Small(n, 1))
    }

    /// `num / den`, reduced. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic keeps values reduced with a positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(r)),
        }
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn abs(&self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) if *n != i64::MIN => Scalar(Repr::Small(n.abs(), *d)),
            _ => Scalar::from_big(self.to_big().abs()),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => {
                if r.is_negative() {
                    -1
                } else if r.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Scalar::from_big(r.recip()),
        })
    }

    /// Non-negative gcd of two integers. Panics on non-integers.
    pub fn int_gcd(&self, other: &Scalar) -> Scalar {
        assert!(self.is_integer() && other.is_integer(), "gcd of non-integers");
        match (&self.0, &other.0) {
            (Repr::Small(a, _), Repr::Small(b, _)) => {
                let g = (*a as i128).gcd(&(*b as i128));
                Self::from_i128(g, 1)
            }
            _ => Scalar::from(self.numer().gcd(&other.numer())),
        }
    }

    /// Multiply by `+1` or `-1`.
    pub fn signed(self, sign: i32) -> Scalar {
        if sign < 0 {
            -self
        } else {
            self
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_big(BigRational::from_integer(n))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_ref(x: &Scalar, y: &Scalar) -> Scalar {
    match (&x.0, &y.0) {
        (Repr::Small(a, b), Repr::Small(c, d)) => {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_add(*c) {
                    return Scalar(Repr::Small(s, 1));
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                (Some(ad), Some(cb), Some(bd)) => match ad.checked_add(cb) {
                    Some(num) => Scalar::from_i128(num, bd),
                    None => Scalar::from_big(x.to_big() + y.to_big()),
                },
                _ => Scalar::from_big(x.to_big() + y.to_big()),
            }
        }
        _ => Scalar::from_big(x.to_big() + y.to_big()),
    }
}

fn mul_ref(x: &Scalar, y: &Scalar) -> Scalar {
    match (&x.0, &y.0) {
        (Repr::Small(a, b), Repr::Small(c, d)) => {
            if *b == 1 && *d == 1 {
                if let Some(p) = a.checked_mul(*c) {
                    return Scalar(Repr::Small(p, 1));
                }
            }
            Scalar::from_i128((*a as i128) * (*c as i128), (*b as i128) * (*d as i128))
        }
        _ => Scalar::from_big(x.to_big() * y.to_big()),
    }
}

fn neg_ref(x: &Scalar) -> Scalar {
    match &x.0 {
        Repr::Small(n, d) if *n != i64::MIN => Scalar(Repr::Small(-n, *d)),
        _ => Scalar::from_big(-x.to_big()),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $f:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $f(&self, rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Sub, sub, |x: &Scalar, y: &Scalar| add_ref(x, &neg_ref(y)));
forward_binop!(Div, div, |x: &Scalar, y: &Scalar| mul_ref(
    x,
    &y.recip().expect("division by zero")
));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(self)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_ref(self, rhs);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = add_ref(self, &rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = add_ref(self, &neg_ref(rhs));
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = add_ref(self, &neg_ref(&rhs));
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_ref(self, rhs);
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::ONE
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed scalar {s:?}"));
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let (num, den) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), Some(q.trim())),
            None => (t, None),
        };
        let valid = |x: &str, allow_sign: bool| {
            let digits = if allow_sign {
                x.strip_prefix(['-', '+']).unwrap_or(x)
            } else {
                x
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num, true) {
            return Err(bad());
        }
        let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(q) if valid(q, false) => q.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Scalar::from_bigints(num, den))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/2".parse::<Scalar>().unwrap(), Scalar::new(3, 2));
        assert_eq!("-6/4".parse::<Scalar>().unwrap(), Scalar::new(-3, 2));
        assert_eq!("7".parse::<Scalar>().unwrap(), Scalar::from_int(7));
        assert_eq!(Scalar::new(4, -8).to_string(), "-1/2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("3/-2".parse::<Scalar>().is_err());
    }

    #[test]
    fn promotes_and_demotes() {
        let a = Scalar::from_int(i64::MAX);
        let b = &a + &a;
        assert_eq!(b.numer(), BigInt::from(i64::MAX) * 2);
        let c = &b - &a;
        assert_eq!(c, a);
        let tiny = Scalar::new(1, i64::MAX);
        let sq = &tiny * &tiny;
        assert_eq!(sq.denom(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(&sq / &tiny, tiny);
    }

    #[test]
    fn matches_bigrational() {
        let vals = [(1, 2), (-3, 7), (5, 1), (0, 1), (i64::MAX, 3), (-9, i64::MAX)];
        for &(a, b) in &vals {
            for &(c, d) in &vals {
                let (x, y) = (Scalar::new(a, b), Scalar::new(c, d));
                let (bx, by) = (big(a, b), big(c, d));
                assert_eq!(&x + &y, Scalar::from_big(&bx + &by));
                assert_eq!(&x - &y, Scalar::from_big(&bx - &by));
                assert_eq!(&x * &y, Scalar::from_big(&bx * &by));
                assert_eq!(x.cmp(&y), bx.cmp(&by));
            }
        }
    }
}
