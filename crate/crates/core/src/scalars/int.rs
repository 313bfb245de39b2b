//! Arbitrary-precision integers with an inline `i64` fast path.
//!
//! Almost every integer that shows up in the Macdonald and wheel computations
//! fits in a machine word, so the heap-backed `BigInt` is only used once an
//! operation overflows. Values that fit in `i64` are always stored as `Small`,
//! which keeps equality and hashing structural.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::ToPrimitive;

#[derive(Clone)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    fn from_i128(v: i128) -> Int {
        if let Ok(s) = i64::try_from(v) {
            Int::Small(s)
        } else {
            Int::Big(BigInt::from(v))
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Int::Small(v) => *v as f64,
            Int::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => match b.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(r) => Int::Small(r),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(r) => Int::Small(r),
                None => Int::from_i128(*a as i128 + *b as i128),
            },
            _ => Int::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn sub(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(r) => Int::Small(r),
                None => Int::from_i128(*a as i128 - *b as i128),
            },
            _ => Int::from_big(self.to_big() - o.to_big()),
        }
    }

    pub fn mul(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(r) => Int::Small(r),
                None => Int::from_i128(*a as i128 * *b as i128),
            },
            (Int::Small(0), _) | (_, Int::Small(0)) => Int::ZERO,
            (Int::Small(a), Int::Big(b)) | (Int::Big(b), Int::Small(a)) => Int::from_big(b * *a),
            (Int::Big(a), Int::Big(b)) => Int::from_big(a * b),
        }
    }

    pub fn mul_i64(&self, k: i64) -> Int {
        self.mul(&Int::Small(k))
    }

    /// Truncated division and remainder; panics on a zero divisor.
    pub fn div_rem(&self, o: &Int) -> (Int, Int) {
        assert!(!o.is_zero(), "integer division by zero");
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => {
                if *a == i64::MIN && *b == -1 {
                    (Int::Big(-BigInt::from(*a)), Int::ZERO)
                } else {
                    (Int::Small(a / b), Int::Small(a % b))
                }
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&o.to_big());
                (Int::from_big(q), Int::from_big(r))
            }
        }
    }

    /// Exact quotient, or `None` when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Int) -> Option<Int> {
        if o.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(o);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Floor division by a positive modulus, remainder in `[0, m)`.
    pub fn div_mod_floor(&self, m: &Int) -> (Int, Int) {
        let (q, r) = self.div_rem(m);
        if r.is_negative() {
            (q.sub(&Int::ONE), r.add(m))
        } else {
            (q, r)
        }
    }

    /// Non-negative gcd.
    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => {
                let g = gcd_u64(a.unsigned_abs(), b.unsigned_abs());
                match i64::try_from(g) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::Big(BigInt::from(g)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&o.to_big())),
        }
    }

    pub fn pow(&self, mut e: u32) -> Int {
        let mut base = self.clone();
        let mut acc = Int::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Number of bits in the absolute value.
    pub fn bits(&self) -> u64 {
        match self {
            Int::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Int::Big(b) => b.bits(),
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a == b,
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl Hash for Int {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Int::Small(v) => {
                0u8.hash(state);
                v.hash(state)
            }
            Int::Big(b) => {
                1u8.hash(state);
                b.hash(state)
            }
        }
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Int::Small(v));
        }
        Ok(Int::from_big(s.parse::<BigInt>()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Int::from(i64::MAX);
        let b = a.add(&Int::ONE);
        assert!(matches!(b, Int::Big(_)));
        let c = b.sub(&Int::ONE);
        assert!(matches!(c, Int::Small(_)));
        assert_eq!(c, a);
        let sq = a.mul(&a);
        assert_eq!(sq.div_exact(&a), Some(a.clone()));
        assert_eq!(Int::from(i64::MIN).neg().to_string(), "9223372036854775808");
    }

    #[test]
    fn gcd_and_division() {
        assert_eq!(Int::from(12).gcd(&Int::from(-18)), Int::from(6));
        assert_eq!(Int::from(0).gcd(&Int::from(-5)), Int::from(5));
        assert_eq!(Int::from(7).div_exact(&Int::from(2)), None);
        let (q, r) = Int::from(-7).div_mod_floor(&Int::from(3));
        assert_eq!((q, r), (Int::from(-3), Int::from(2)));
        assert_eq!(Int::from(3).pow(40).to_string(), "12157665459056928801");
    }
}
