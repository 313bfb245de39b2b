//! Exact arithmetic: integers, rationals, cyclotomic numbers, polynomials and
//! the two rational function fields used throughout the crate.

pub mod bivariate;
pub mod cyclo;
pub mod format;
pub mod heugcd;
pub mod int;
pub mod laurent;
pub mod param;
pub mod rational;
pub mod ring;
pub mod univariate;
pub mod upoly;

use std::fmt;

pub use bivariate::BiRatFunc;
pub use cyclo::CycloNum;
pub use heugcd::QtPoly;
pub use int::Int;
pub use laurent::LPoly;
pub use param::{Generic, IntoField, ParameterSpec, ProbePoint, Specializer};
pub use rational::Rational;
pub use ring::{ExactDiv, Field, GcdRing, Ring};
pub use univariate::{CLaurent, CPoly, UniRatFunc};
pub use upoly::{UPoly, ZPoly};

use crate::Error;

/// A value from any of the coefficient fields, for code that picks the field
/// at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Cyclo(CycloNum),
    Specialized(UniRatFunc),
    Generic(BiRatFunc),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn apply<F: Field>(a: &F, b: &F, op: Op) -> Result<F, Error> {
    match op {
        Op::Add => Ok(a.add(b)),
        Op::Sub => Ok(a.sub(b)),
        Op::Mul => Ok(a.mul(b)),
        Op::Div => a.div(b).ok_or(Error::DivisionByZero),
    }
}

/// Arithmetic on two scalars of the same field; mixing fields is an error.
pub fn field_arithmetic(a: &Scalar, b: &Scalar, op: Op) -> Result<Scalar, Error> {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => apply(x, y, op).map(Scalar::Rational),
        (Scalar::Cyclo(x), Scalar::Cyclo(y)) => {
            let r = match op {
                Op::Add => x.checked_add(y),
                Op::Sub => x.checked_add(&y.neg()),
                Op::Mul => x.checked_mul(y),
                Op::Div => {
                    let inv = y.inv().ok_or(Error::DivisionByZero)?;
                    x.checked_mul(&inv)
                }
            };
            r.map(Scalar::Cyclo).map_err(|e| Error::MixedFields(e.to_string()))
        }
        (Scalar::Specialized(x), Scalar::Specialized(y)) => {
            let orders = |f: &UniRatFunc| {
                f.numer().coeffs().iter().chain(f.denom().coeffs()).filter_map(|c| c.order()).next()
            };
            if let (Some(p), Some(q)) = (orders(x), orders(y)) {
                if p != q {
                    return Err(Error::MixedFields(format!("Q(zeta_{p})(u) and Q(zeta_{q})(u)")));
                }
            }
            apply(x, y, op).map(Scalar::Specialized)
        }
        (Scalar::Generic(x), Scalar::Generic(y)) => apply(x, y, op).map(Scalar::Generic),
        _ => Err(Error::MixedFields(format!("{} and {}", a.field_name(), b.field_name()))),
    }
}

impl Scalar {
    pub fn field_name(&self) -> &'static str {
        match self {
            Scalar::Rational(_) => "Q",
            Scalar::Cyclo(_) => "Q(zeta)",
            Scalar::Specialized(_) => "Q(zeta)(u)",
            Scalar::Generic(_) => "Q(q,t)",
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Cyclo(x) => write!(f, "{x}"),
            Scalar::Specialized(x) => write!(f, "{x}"),
            Scalar::Generic(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch() {
        let a = Scalar::Rational(Rational::frac(1, 2));
        let b = Scalar::Rational(Rational::frac(1, 3));
        assert_eq!(field_arithmetic(&a, &b, Op::Add).unwrap(), Scalar::Rational(Rational::frac(5, 6)));
        let z = Scalar::Cyclo(CycloNum::zeta(3));
        let z2 = Scalar::Cyclo(CycloNum::zeta_pow(3, 2));
        assert_eq!(field_arithmetic(&z, &z2, Op::Mul).unwrap(), Scalar::Cyclo(CycloNum::one()));
        assert!(matches!(field_arithmetic(&a, &z, Op::Add), Err(Error::MixedFields(_))));
        let zero = Scalar::Rational(Rational::zero());
        assert!(matches!(field_arithmetic(&a, &zero, Op::Div), Err(Error::DivisionByZero)));
        let i = Scalar::Cyclo(CycloNum::zeta(4));
        assert!(matches!(field_arithmetic(&z, &i, Op::Add), Err(Error::MixedFields(_))));
    }
}
