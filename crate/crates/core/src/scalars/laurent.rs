//! Laurent polynomials in one variable `u`.
//!
//! Specialized operator matrices, wheel constraints and cleared-denominator
//! polynomials all live here: every exponent shift is just an offset change.

use super::int::Int;
use super::ring::{Field, Ring};
use super::upoly::UPoly;

/// `u^low · (c_0 + c_1 u + …)` with `c_0` and the last coefficient nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LPoly<R> {
    low: i64,
    coeffs: Vec<R>,
}

impl<R: Ring> LPoly<R> {
    pub fn new(low: i64, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return LPoly::zero();
        }
        coeffs.drain(..lead_zeros);
        LPoly { low: low + lead_zeros as i64, coeffs }
    }

    pub fn zero() -> Self {
        LPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        LPoly::monomial(c, 0)
    }

    pub fn monomial(c: R, e: i64) -> Self {
        if c.is_zero() {
            LPoly::zero()
        } else {
            LPoly { low: e, coeffs: vec![c] }
        }
    }

    pub fn from_upoly(p: &UPoly<R>) -> Self {
        LPoly::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent present.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> R {
        let i = e - self.low;
        if i < 0 {
            return R::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(R::zero)
    }

    /// Terms as `(exponent, coefficient)`, nonzero only.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    /// The polynomial part after multiplying by `u^{-low}`.
    pub fn to_upoly_shifted(&self) -> (i64, UPoly<R>) {
        (self.low, UPoly::new(self.coeffs.clone()))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let mut v = vec![R::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = (self.low - low) as usize + i;
            v[k] = v[k].add(c);
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            let k = (o.low - low) as usize + i;
            v[k] = v[k].add(c);
        }
        LPoly::new(low, v)
    }

    /// `self += c · u^e · o`, the workhorse of matrix-vector products.
    pub fn add_scaled_shift(&mut self, o: &Self, c: &R, e: i64) {
        if o.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = LPoly::new(o.low + e, o.coeffs.iter().map(|x| x.mul(c)).collect());
            return;
        }
        let olow = o.low + e;
        let ohigh = o.high() + e;
        let low = self.low.min(olow);
        let high = self.high().max(ohigh);
        if low < self.low || high > self.high() {
            let mut v = vec![R::zero(); (high - low + 1) as usize];
            let off = (self.low - low) as usize;
            for (i, x) in self.coeffs.drain(..).enumerate() {
                v[off + i] = x;
            }
            self.coeffs = v;
            self.low = low;
        }
        let off = (olow - self.low) as usize;
        for (i, x) in o.coeffs.iter().enumerate() {
            if !x.is_zero() {
                self.coeffs[off + i] = self.coeffs[off + i].add(&x.mul(c));
            }
        }
        let renorm = LPoly::new(self.low, std::mem::take(&mut self.coeffs));
        *self = renorm;
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        LPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return LPoly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        LPoly::new(self.low + o.low, v)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly::new(self.low, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Multiply by `c · u^e`.
    pub fn mul_monomial(&self, c: &R, e: i64) -> Self {
        if c.is_zero() || self.is_zero() {
            return LPoly::zero();
        }
        LPoly { low: self.low + e, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<F: Field> LPoly<F> {
    /// Value at a nonzero point.
    pub fn eval(&self, u: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(u).add(c);
        }
        if self.low >= 0 {
            acc.mul(&u.pow(self.low as u32))
        } else {
            let inv = u.inv().expect("evaluation point must be nonzero");
            acc.mul(&inv.pow((-self.low) as u32))
        }
    }
}

impl<R: Ring> Ring for LPoly<R> {
    fn zero() -> Self {
        LPoly::zero()
    }
    fn one() -> Self {
        LPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        LPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        LPoly::neg(self)
    }
    fn from_int(v: &Int) -> Self {
        LPoly::constant(R::from_int(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::Rational;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn laurent_arithmetic() {
        let a = LPoly::new(-2, vec![r(1), r(0), r(1)]); // u^-2 + 1
        let b = LPoly::new(0, vec![r(1), r(-1)]); // 1 - u
        let p = a.mul(&b);
        assert_eq!(p, LPoly::new(-2, vec![r(1), r(-1), r(1), r(-1)]));
        assert_eq!(p.low(), -2);
        assert_eq!(p.high(), 1);
        assert!(a.sub(&a).is_zero());
        let mut acc = LPoly::zero();
        acc.add_scaled_shift(&b, &r(2), 3);
        acc.add_scaled_shift(&b, &r(-2), 3);
        assert!(acc.is_zero());
        assert_eq!(a.eval(&r(2)), Rational::frac(5, 4));
        assert_eq!(LPoly::new(5, vec![r(0), r(3), r(0)]), LPoly::monomial(r(3), 6));
    }
}
