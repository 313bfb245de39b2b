//! The resonant specialization t^{k+1} q^{r−1} = 1 realized over ℚ(ζ_{r−1})(u).
//!
//! With m = gcd(k+1, r−1) and ω₁ = ζ_{r−1} we set t = u^{(r−1)/m} and
//! q = ω₁ u^{−(k+1)/m}, so q^a t^b = ζ^a u^{((r−1)b − (k+1)a)/m}.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::bivariate::{qt_terms, BiRatFunc};
use super::cyclo::CycloNum;
use super::heugcd::QtPoly;
use super::rational::Rational;
use super::ring::Ring;
use super::univariate::{CLaurent, UniRatFunc};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterSpec {
    k: u32,
    r: u32,
    m: u32,
}

impl ParameterSpec {
    pub fn new(k: u32, r: u32) -> Result<ParameterSpec, Error> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!("k must be at least 1, got {k}")));
        }
        if r < 2 {
            return Err(Error::InvalidParameter(format!("r must be at least 2, got {r}")));
        }
        Ok(ParameterSpec { k, r, m: (k + 1).gcd(&(r - 1)) })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Order N of the cyclotomic coefficient field ℚ(ζ_N).
    pub fn order(&self) -> u32 {
        self.r - 1
    }

    pub fn omega1(&self) -> CycloNum {
        CycloNum::zeta(self.order())
    }

    /// ω = ω₁^{(r−1)/m}, a primitive m-th root of unity.
    pub fn omega(&self) -> CycloNum {
        CycloNum::zeta_pow(self.order(), ((self.r - 1) / self.m) as i64)
    }

    /// Exponent of u in t.
    pub fn t_exponent(&self) -> i64 {
        ((self.r - 1) / self.m) as i64
    }

    /// Exponent of u in q (negative).
    pub fn q_exponent(&self) -> i64 {
        -(((self.k + 1) / self.m) as i64)
    }

    /// Image of q^a t^b as (power of ζ_{r−1} in [0, r−1), power of u).
    pub fn map_monomial(&self, a: i64, b: i64) -> (i64, i64) {
        let n = self.order() as i64;
        (a.rem_euclid(n), a * self.q_exponent() + b * self.t_exponent())
    }

    pub fn zeta_pow(&self, e: i64) -> CycloNum {
        CycloNum::zeta_pow(self.order(), e)
    }

    /// True iff q^a t^b = 1 under the specialization.
    pub fn is_resonant(&self, a: i64, b: i64) -> bool {
        let (r1, k1) = ((self.r - 1) as i64, (self.k + 1) as i64);
        a % r1 == 0 && b == k1 * (a / r1)
    }

    /// Image of an integer polynomial in (q, t) as a Laurent polynomial in u.
    pub fn specialize_poly(&self, p: &QtPoly) -> CLaurent {
        let mut acc: BTreeMap<i64, CycloNum> = BTreeMap::new();
        for ((a, b), c) in qt_terms(p) {
            let (z, e) = self.map_monomial(a as i64, b as i64);
            let term = self.zeta_pow(z).mul(&CycloNum::from_int(&c));
            let slot = acc.entry(e).or_insert_with(CycloNum::zero);
            *slot = slot.add(&term);
        }
        laurent_from_map(acc)
    }

    /// Specialize a generic scalar; fails if the denominator vanishes.
    pub fn specialize_scalar(&self, x: &BiRatFunc) -> Result<UniRatFunc, Error> {
        let num = self.specialize_poly(x.numer());
        let den = self.specialize_poly(x.denom());
        UniRatFunc::from_laurent_ratio(&num, &den).ok_or_else(|| Error::Pole { what: x.to_string() })
    }

    /// Specialize to a pair of Laurent polynomials (numerator, denominator).
    pub fn specialize_fraction(&self, x: &BiRatFunc) -> Result<(CLaurent, CLaurent), Error> {
        let num = self.specialize_poly(x.numer());
        let den = self.specialize_poly(x.denom());
        if den.is_zero() {
            return Err(Error::Pole { what: x.to_string() });
        }
        Ok((num, den))
    }
}

pub(crate) fn laurent_from_map(acc: BTreeMap<i64, CycloNum>) -> CLaurent {
    let Some((&low, _)) = acc.iter().next() else {
        return CLaurent::zero();
    };
    let high = *acc.keys().next_back().unwrap();
    let mut v = vec![CycloNum::zero(); (high - low + 1) as usize];
    for (e, c) in acc {
        v[(e - low) as usize] = c;
    }
    CLaurent::new(low, v)
}

/// A coefficient field that integer polynomials in (q, t) map into.
pub trait Specializer {
    type Out: Ring;
    fn map_poly(&self, p: &QtPoly) -> Self::Out;
}

/// The identity: stay over ℚ(q, t).
#[derive(Clone, Copy, Debug, Default)]
pub struct Generic;

impl Specializer for Generic {
    type Out = BiRatFunc;
    fn map_poly(&self, p: &QtPoly) -> BiRatFunc {
        BiRatFunc::from_poly(p.clone())
    }
}

/// Resonant specialization into Laurent polynomials in u.
impl Specializer for ParameterSpec {
    type Out = CLaurent;
    fn map_poly(&self, p: &QtPoly) -> CLaurent {
        self.specialize_poly(p)
    }
}

/// Resonant specialization into the field K = ℚ(ζ)(u).
#[derive(Clone, Debug)]
pub struct IntoField<'a>(pub &'a ParameterSpec);

impl Specializer for IntoField<'_> {
    type Out = UniRatFunc;
    fn map_poly(&self, p: &QtPoly) -> UniRatFunc {
        UniRatFunc::from_laurent(&self.0.specialize_poly(p))
    }
}

/// Resonant specialization followed by evaluation at a rational u₀ ≠ 0.
#[derive(Clone, Debug)]
pub struct ProbePoint {
    pub spec: ParameterSpec,
    pub u0: Rational,
}

impl ProbePoint {
    pub fn eval_laurent(&self, l: &CLaurent) -> CycloNum {
        l.eval(&CycloNum::Rat(self.u0.clone()))
    }
}

impl Specializer for ProbePoint {
    type Out = CycloNum;
    fn map_poly(&self, p: &QtPoly) -> CycloNum {
        self.eval_laurent(&self.spec.specialize_poly(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(s: &str) -> BiRatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn resonance_specializes_to_one() {
        for (k, r) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3), (2, 4), (3, 5)] {
            let p = ParameterSpec::new(k, r).unwrap();
            let x = BiRatFunc::laurent_monomial((r - 1) as i64, (k + 1) as i64);
            assert!(p.specialize_scalar(&x).unwrap().is_one(), "k={k} r={r}");
            // ω₁^{(r−1)/m} has multiplicative order exactly m.
            let w = p.omega();
            let mut acc = CycloNum::one();
            for i in 1..=p.m() {
                acc = acc.mul(&w);
                assert_eq!(acc.is_one(), i == p.m());
            }
        }
    }

    #[test]
    fn simple_images() {
        let p = ParameterSpec::new(1, 2).unwrap();
        assert_eq!(p.specialize_scalar(&BiRatFunc::t()).unwrap(), UniRatFunc::u());
        let p = ParameterSpec::new(3, 3).unwrap();
        assert_eq!(p.m(), 2);
        // q = −u^{−2}, t = u
        let x = p.specialize_scalar(&BiRatFunc::q()).unwrap();
        assert_eq!(x.to_string(), "(-1)/(u^2)");
    }

    #[test]
    fn resonance_predicate() {
        let p = ParameterSpec::new(1, 3).unwrap();
        assert!(p.is_resonant(2, 2));
        assert!(p.is_resonant(0, 0));
        assert!(p.is_resonant(-4, -4));
        assert!(!p.is_resonant(2, 1));
        assert!(p.specialize_scalar(&bi("1 - q^2*t^2")).unwrap().is_zero());
    }

    #[test]
    fn pole_is_reported() {
        let p = ParameterSpec::new(1, 2).unwrap();
        assert!(matches!(p.specialize_scalar(&bi("1/(1 - q*t^2)")), Err(Error::Pole { .. })));
    }
}
