use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::int::Int;
use super::ring::{ExactDiv, Field, Ring};

/// Exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Int,
    den: Int,
}

impl Rational {
    pub fn new(num: Int, den: Int) -> Option<Rational> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    pub fn from_int(v: Int) -> Rational {
        Rational { num: v, den: Int::ONE }
    }

    pub fn from_i64(v: i64) -> Rational {
        Rational::from_int(Int::from(v))
    }

    pub fn frac(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d)).expect("zero denominator")
    }

    fn reduce(num: Int, den: Int) -> Rational {
        if num.is_zero() {
            return Rational { num, den: Int::ONE };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        if den.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &Int {
        &self.num
    }

    pub fn denom(&self) -> &Int {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn signum(&self) -> i32 {
        self.num.signum()
    }

    pub fn abs(&self) -> Rational {
        Rational { num: self.num.abs(), den: self.den.clone() }
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64() / self.den.to_f64()
    }

    /// Multiply by an integer without a full gcd on both sides.
    pub fn mul_int(&self, k: &Int) -> Rational {
        if k.is_zero() || self.num.is_zero() {
            return Rational::from_i64(0);
        }
        let g = k.gcd(&self.den);
        if g.is_one() {
            Rational { num: self.num.mul(k), den: self.den.clone() }
        } else {
            let k2 = k.div_rem(&g).0;
            let d2 = self.den.div_rem(&g).0;
            Rational::reduce(self.num.mul(&k2), d2)
        }
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::from_i64(0)
    }
    fn one() -> Self {
        Rational::from_i64(1)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return Rational::from_int(self.num.add(&o.num));
        }
        if self.den == o.den {
            return Rational::reduce(self.num.add(&o.num), self.den.clone());
        }
        Rational::reduce(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return Rational::from_int(self.num.mul(&o.num));
        }
        if self.num.is_zero() || o.num.is_zero() {
            return Rational::zero();
        }
        // Cross-cancel first so the products stay small.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n = self.num.div_rem(&g1).0.mul(&o.num.div_rem(&g2).0);
        let d = self.den.div_rem(&g2).0.mul(&o.den.div_rem(&g1).0);
        Rational { num: n, den: d }
    }
    fn neg(&self) -> Self {
        Rational { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_int(v: &Int) -> Self {
        Rational::from_int(v.clone())
    }
}

impl ExactDiv for Rational {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.div(o)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Rational::reduce(self.den.clone(), self.num.clone()))
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, o: &Self) -> Ordering {
        self.num.mul(&o.den).cmp(&o.num.mul(&self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_i64(v)
    }
}

impl From<Int> for Rational {
    fn from(v: Int) -> Self {
        Rational::from_int(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid rational literal")
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<Int>().map(Rational::from_int).map_err(|_| ParseRationalError),
            Some((a, b)) => {
                let n = a.trim().parse::<Int>().map_err(|_| ParseRationalError)?;
                let d = b.trim().parse::<Int>().map_err(|_| ParseRationalError)?;
                Rational::new(n, d).ok_or(ParseRationalError)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let a = Rational::frac(1, 2);
        let b = Rational::frac(1, 3);
        assert_eq!(a.add(&b), Rational::frac(5, 6));
        assert_eq!(a.sub(&b), Rational::frac(1, 6));
        assert_eq!(a.mul(&b), Rational::frac(1, 6));
        assert_eq!(a.div(&b), Some(Rational::frac(3, 2)));
        assert_eq!(a.div(&Rational::zero()), None);
        assert_eq!(Rational::frac(4, -6), Rational::frac(-2, 3));
        assert_eq!(Rational::frac(-2, 3).to_string(), "-2/3");
        assert_eq!("-2/3".parse::<Rational>().unwrap(), Rational::frac(-2, 3));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_i64(7));
        assert!("1/0".parse::<Rational>().is_err());
    }
}
