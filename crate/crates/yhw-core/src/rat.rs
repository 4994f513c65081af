//! Exact rational scalars.
//!
//! `Rat` keeps a reduced `i64/i64` fraction on the fast path and promotes to
//! arbitrary-precision `BigRational` when a result no longer fits. Values are
//! always canonical: `gcd(|num|, den) = 1`, `den > 0`, and any big value that
//! fits back into the small form is demoted, so derived `Eq`/`Hash` agree with
//! numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, ToBigInt};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

/// Error for string parsing of rationals ("p", "p/q", "-p/q").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    /// Reduced fraction from signed numerator and nonzero denominator.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_i128_pair(num as i128, den as i128)
    }

    pub fn from_int(n: i64) -> Rat {
        Rat::Small { num: n, den: 1 }
    }

    pub fn zero() -> Rat {
        Rat::Small { num: 0, den: 1 }
    }

    pub fn one() -> Rat {
        Rat::Small { num: 1, den: 1 }
    }

    fn from_i128_pair(mut num: i128, mut den: i128) -> Rat {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        if let (Ok(n), Ok(d)) = (i64::try_from(num), i64::try_from(den)) {
            Rat::Small { num: n, den: d }
        } else {
            Rat::Big(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))
        }
    }

    /// Reduced fraction from big integers; `den` must be nonzero.
    pub fn from_bigint_pair(num: BigInt, den: BigInt) -> Rat {
        assert!(!den.is_zero(), "zero denominator");
        Rat::from_big(BigRational::new(num, den))
    }

    fn from_big(r: BigRational) -> Rat {
        // BigRational::new already reduces and fixes the denominator sign.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            Rat::Small { num: n, den: d }
        } else {
            Rat::Big(Box::new(r))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small { num, .. } => BigInt::from(*num),
            Rat::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small { den, .. } => BigInt::from(*den),
            Rat::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small { num, .. } => *num < 0,
            Rat::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small { den, .. } => *den == 1,
            Rat::Big(b) => b.is_integer(),
        }
    }

    /// Integer value if the fraction is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rat::Small { num, den: 1 } => Some(*num),
            _ => None,
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> Rat {
        match self {
            Rat::Small { num, den } => Rat::from_int(num.div_euclid(*den)),
            Rat::Big(b) => Rat::from_big(b.floor()),
        }
    }

    /// Fractional part `self - floor(self)`, in `[0, 1)`. Canonical key for
    /// grouping values whose pairwise differences are integers.
    pub fn frac(&self) -> Rat {
        self.clone() - self.floor()
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rat::Small { num, den } => Rat::from_i128_pair(*den as i128, *num as i128),
            Rat::Big(b) => Rat::from_big(b.recip()),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Rat {
        let mut base = self.clone();
        let mut acc = Rat::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $small:expr, $big:expr) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                match (self, rhs) {
                    (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                        let f: fn(i128, i128, i128, i128) -> Rat = $small;
                        f(*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128)
                    }
                    _ => {
                        let f: fn(BigRational, BigRational) -> BigRational = $big;
                        Rat::from_big(f(self.to_big(), rhs.to_big()))
                    }
                }
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(
    Add,
    add,
    |n1, d1, n2, d2| Rat::from_i128_pair(n1 * d2 + n2 * d1, d1 * d2),
    |a, b| a + b
);
forward_binop!(
    Sub,
    sub,
    |n1, d1, n2, d2| Rat::from_i128_pair(n1 * d2 - n2 * d1, d1 * d2),
    |a, b| a - b
);
forward_binop!(
    Mul,
    mul,
    |n1, d1, n2, d2| Rat::from_i128_pair(n1 * n2, d1 * d2),
    |a, b| a * b
);
forward_binop!(
    Div,
    div,
    |n1, d1, n2, d2| {
        assert!(n2 != 0, "division by zero");
        Rat::from_i128_pair(n1 * d2, d1 * n2)
    },
    |a, b| a / b
);

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small { num, den } => Rat::from_i128_pair(-(*num as i128), *den as i128),
            Rat::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = &*self * rhs;
    }
}

impl DivAssign<&Rat> for Rat {
    fn div_assign(&mut self, rhs: &Rat) {
        *self = &*self / rhs;
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (self, other) {
            (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                (*n1 as i128 * *d2 as i128).cmp(&(*n2 as i128 * *d1 as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small { num, den: 1 } => write!(f, "{}", num),
            Rat::Small { num, den } => write!(f, "{}/{}", num, den),
            Rat::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let bad = || ParseRatError(s.to_string());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s.trim(), None),
        };
        if num_str.is_empty() {
            return Err(bad());
        }
        let num: BigInt = num_str.parse().map_err(|_| bad())?;
        let den: BigInt = match den_str {
            Some(d) if !d.is_empty() => d.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        if den.is_negative() {
            // Keep the grammar strict: the sign belongs to the numerator.
            return Err(bad());
        }
        Ok(Rat::from_big(BigRational::new(num, den)))
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl ToBigInt for Rat {
    fn to_bigint(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.numer())
        } else {
            None
        }
    }
}
