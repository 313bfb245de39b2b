//! Rational functions in `u` over a cyclotomic field.

use std::fmt;

use super::cyclo::CycloNum;
use super::int::Int;
use super::laurent::LPoly;
use super::rational::Rational;
use super::ring::{ExactDiv, Field, Ring};
use super::upoly::UPoly;

pub type CPoly = UPoly<CycloNum>;
pub type CLaurent = LPoly<CycloNum>;

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniRatFunc {
    num: CPoly,
    den: CPoly,
}

impl UniRatFunc {
    pub fn new(num: CPoly, den: CPoly) -> Option<UniRatFunc> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(UniRatFunc::zero());
        }
        let g = num.gcd_field(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.lead().unwrap().clone();
        if lc.is_one() {
            return Some(UniRatFunc { num, den });
        }
        let inv = lc.inv().unwrap();
        Some(UniRatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: CPoly) -> UniRatFunc {
        UniRatFunc { num: p, den: CPoly::one() }
    }

    pub fn constant(c: CycloNum) -> UniRatFunc {
        UniRatFunc::from_poly(CPoly::constant(c))
    }

    pub fn u() -> UniRatFunc {
        UniRatFunc::from_poly(CPoly::var())
    }

    /// Convert a Laurent polynomial, moving negative powers of `u` into the
    /// denominator.
    pub fn from_laurent(l: &CLaurent) -> UniRatFunc {
        if l.is_zero() {
            return UniRatFunc::zero();
        }
        let (low, p) = l.to_upoly_shifted();
        if low >= 0 {
            UniRatFunc::from_poly(p.shift(low as usize))
        } else {
            // p(0) ≠ 0, so p and u^{-low} are coprime.
            UniRatFunc { num: p, den: CPoly::monomial(CycloNum::one(), (-low) as usize) }
        }
    }

    /// Quotient of two Laurent polynomials, `None` if the divisor is zero.
    pub fn from_laurent_ratio(n: &CLaurent, d: &CLaurent) -> Option<UniRatFunc> {
        if d.is_zero() {
            return None;
        }
        if n.is_zero() {
            return Some(UniRatFunc::zero());
        }
        let (ln, pn) = n.to_upoly_shifted();
        let (ld, pd) = d.to_upoly_shifted();
        let shift = ln - ld;
        let (pn, pd) = if shift >= 0 {
            (pn.shift(shift as usize), pd)
        } else {
            (pn, pd.shift((-shift) as usize))
        };
        UniRatFunc::new(pn, pd)
    }

    pub fn numer(&self) -> &CPoly {
        &self.num
    }

    pub fn denom(&self) -> &CPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value at `u = x`, `None` at a pole.
    pub fn eval(&self, x: &CycloNum) -> Option<CycloNum> {
        self.num.eval(x).div(&self.den.eval(x))
    }
}

impl Ring for UniRatFunc {
    fn zero() -> Self {
        UniRatFunc { num: CPoly::zero(), den: CPoly::one() }
    }
    fn one() -> Self {
        UniRatFunc { num: CPoly::one(), den: CPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return UniRatFunc::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let g = self.den.gcd_field(&o.den);
        let b1 = self.den.div_rem(&g).0;
        let d1 = o.den.div_rem(&g).0;
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        UniRatFunc::new(num, b1.mul(&o.den)).unwrap()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniRatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return UniRatFunc::from_poly(self.num.mul(&o.num));
        }
        let g1 = self.num.gcd_field(&o.den);
        let g2 = o.num.gcd_field(&self.den);
        let a = self.num.div_rem(&g1).0;
        let d = o.den.div_rem(&g1).0;
        let c = o.num.div_rem(&g2).0;
        let b = self.den.div_rem(&g2).0;
        // Both denominators stay monic, so no further normalization needed.
        UniRatFunc { num: a.mul(&c), den: b.mul(&d).monic() }
    }
    fn neg(&self) -> Self {
        UniRatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_int(v: &Int) -> Self {
        UniRatFunc::constant(CycloNum::from_int(v))
    }
}

impl ExactDiv for UniRatFunc {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.div(o)
    }
}

impl Field for UniRatFunc {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            UniRatFunc::new(self.den.clone(), self.num.clone())
        }
    }
}

/// Render a polynomial in `u` with cyclotomic coefficients, highest power
/// first; non-rational coefficients are parenthesized.
pub fn render_cpoly(p: &CPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut rational_terms: Vec<(Rational, Vec<(&str, usize)>)> = Vec::new();
    let mut all_rational = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        match c.as_rational() {
            Some(r) if !r.is_zero() => rational_terms.push((r.clone(), vec![("u", i)])),
            Some(_) => {}
            None => all_rational = false,
        }
    }
    if all_rational {
        return super::format::render_terms(&rational_terms);
    }
    let mut parts = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "u".to_string(),
            _ => format!("u^{i}"),
        };
        let coeff = match c.as_rational() {
            Some(r) => r.to_string(),
            None => format!("({c})"),
        };
        parts.push(if mono.is_empty() {
            coeff
        } else if c.is_one() {
            mono
        } else {
            format!("{coeff}*{mono}")
        });
    }
    parts.join(" + ")
}

impl fmt::Display for UniRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", render_cpoly(&self.num))
        } else {
            write!(f, "({})/({})", render_cpoly(&self.num), render_cpoly(&self.den))
        }
    }
}

impl fmt::Debug for UniRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse a rational function in `u`, with `z` standing for ζ_order.
pub fn parse_unirat(s: &str, order: u32) -> Result<UniRatFunc, super::format::ParseError> {
    super::format::parse_expr(s, &|v| match v {
        "u" => Some(UniRatFunc::u()),
        "z" => Some(UniRatFunc::constant(CycloNum::zeta(order))),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_rendering() {
        let x = parse_unirat("(1 - u)/(1 - u^-2)", 1).unwrap();
        // (1-u)u^2/(u^2-1) = -u^2/(u+1)
        assert_eq!(x.to_string(), "(-u^2)/(u + 1)");
        assert_eq!(parse_unirat(&x.to_string(), 1).unwrap(), x);
        let y = parse_unirat("(2*u + 2)/(4*u + 4)", 1).unwrap();
        assert_eq!(y.to_string(), "1/2");
        let z = parse_unirat("z*u + 1", 3).unwrap();
        assert_eq!(z.to_string(), "(z)*u + 1");
        let w = z.mul(&z.inv().unwrap());
        assert!(w.is_one());
    }

    #[test]
    fn laurent_conversion() {
        let l = CLaurent::new(-2, vec![CycloNum::from_i64(1), CycloNum::zero(), CycloNum::from_i64(3)]);
        let f = UniRatFunc::from_laurent(&l);
        assert_eq!(f.to_string(), "(3*u^2 + 1)/(u^2)");
        let g = UniRatFunc::from_laurent_ratio(&l, &l).unwrap();
        assert!(g.is_one());
    }
}
