//! Minimal algebraic traits shared by every coefficient type.
//!
//! Methods take references and return owned values; the std operator traits
//! are deliberately not used so that generic code never moves operands.

use std::fmt::Debug;

use super::int::Int;

pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(v: &Int) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_int(&Int::from(v))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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
}

/// A ring in which divisibility can be decided and exact quotients computed.
pub trait ExactDiv: Ring {
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

pub trait Field: ExactDiv {
    fn inv(&self) -> Option<Self>;

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }
}

/// Rings with a gcd; `gcd` must be normalized (unit part removed) so that it
/// can be used for canonical forms.
pub trait GcdRing: ExactDiv {
    fn gcd(&self, o: &Self) -> Self;
}

impl Ring for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn one() -> Self {
        Int::ONE
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Int::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Int::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Int::mul(self, o)
    }
    fn neg(&self) -> Self {
        Int::neg(self)
    }
    fn from_int(v: &Int) -> Self {
        v.clone()
    }
    fn is_one(&self) -> bool {
        Int::is_one(self)
    }
}

impl ExactDiv for Int {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Int::div_exact(self, o)
    }
}

impl GcdRing for Int {
    fn gcd(&self, o: &Self) -> Self {
        Int::gcd(self, o)
    }
}
