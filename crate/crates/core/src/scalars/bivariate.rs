//! Rational functions in (q, t) over ℚ.
//!
//! Numerator and denominator are integer polynomials (a rational function
//! over ℚ always has such a representative), stored densely as polynomials in
//! `t` whose coefficients are polynomials in `q`. The canonical form has
//! coprime numerator and denominator, integer content included, and a
//! denominator whose graded-lex leading coefficient (with q > t) is positive.

use std::collections::BTreeMap;
use std::fmt;

use super::heugcd::{qtpoly_gcd, QtPoly};
use super::int::Int;
use super::rational::Rational;
use super::ring::{ExactDiv, Field, Ring};
use super::upoly::{UPoly, ZPoly};

/// Integer polynomial `c · q^a · t^b`.
pub fn qt_monomial(c: Int, a: usize, b: usize) -> QtPoly {
    QtPoly::monomial(ZPoly::monomial(c, a), b)
}

/// Build from sparse `(q exponent, t exponent) → coefficient` data.
pub fn qt_from_terms<I: IntoIterator<Item = ((usize, usize), Int)>>(terms: I) -> QtPoly {
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for ((a, b), c) in terms {
        if rows.len() <= b {
            rows.resize(b + 1, Vec::new());
        }
        let row = &mut rows[b];
        if row.len() <= a {
            row.resize(a + 1, Int::ZERO);
        }
        row[a] = row[a].add(&c);
    }
    QtPoly::new(rows.into_iter().map(ZPoly::new).collect())
}

/// Nonzero terms as `((q exponent, t exponent), coefficient)`.
pub fn qt_terms(p: &QtPoly) -> Vec<((usize, usize), Int)> {
    let mut out = Vec::new();
    for (b, row) in p.coeffs().iter().enumerate() {
        for (a, c) in row.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.push(((a, b), c.clone()));
            }
        }
    }
    out
}

/// Terms sorted in decreasing graded-lex order with q > t.
pub fn qt_terms_graded(p: &QtPoly) -> Vec<((usize, usize), Int)> {
    let mut t = qt_terms(p);
    t.sort_by(|x, y| {
        let kx = (x.0 .0 + x.0 .1, x.0 .0);
        let ky = (y.0 .0 + y.0 .1, y.0 .0);
        ky.cmp(&kx)
    });
    t
}

fn graded_lead_sign(p: &QtPoly) -> i32 {
    qt_terms_graded(p).first().map_or(0, |(_, c)| c.signum())
}

pub fn render_qt(p: &QtPoly) -> String {
    let terms: Vec<(Rational, Vec<(&str, usize)>)> = qt_terms_graded(p)
        .into_iter()
        .map(|((a, b), c)| (Rational::from_int(c), vec![("q", a), ("t", b)]))
        .collect();
    super::format::render_terms(&terms)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiRatFunc {
    num: QtPoly,
    den: QtPoly,
}

impl BiRatFunc {
    /// `num / den` in canonical form, or `None` if `den` is zero.
    pub fn new(num: QtPoly, den: QtPoly) -> Option<BiRatFunc> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(BiRatFunc::zero());
        }
        let g = qtpoly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Some(BiRatFunc::signed(num, den))
    }

    fn signed(num: QtPoly, den: QtPoly) -> BiRatFunc {
        if graded_lead_sign(&den) < 0 {
            BiRatFunc { num: num.neg(), den: den.neg() }
        } else {
            BiRatFunc { num, den }
        }
    }

    pub fn from_poly(p: QtPoly) -> BiRatFunc {
        BiRatFunc { num: p, den: QtPoly::one() }
    }

    pub fn from_rational(r: &Rational) -> BiRatFunc {
        BiRatFunc::new(
            QtPoly::constant(ZPoly::constant(r.numer().clone())),
            QtPoly::constant(ZPoly::constant(r.denom().clone())),
        )
        .expect("nonzero denominator")
    }

    /// `c · q^a · t^b`.
    pub fn monomial(c: i64, a: usize, b: usize) -> BiRatFunc {
        BiRatFunc::from_poly(qt_monomial(Int::from(c), a, b))
    }

    pub fn q() -> BiRatFunc {
        BiRatFunc::monomial(1, 1, 0)
    }

    pub fn t() -> BiRatFunc {
        BiRatFunc::monomial(1, 0, 1)
    }

    /// `q^a t^b` for possibly negative exponents.
    pub fn laurent_monomial(a: i64, b: i64) -> BiRatFunc {
        let num = qt_monomial(Int::ONE, a.max(0) as usize, b.max(0) as usize);
        let den = qt_monomial(Int::ONE, (-a).max(0) as usize, (-b).max(0) as usize);
        BiRatFunc { num, den }
    }

    pub fn numer(&self) -> &QtPoly {
        &self.num
    }

    pub fn denom(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiply by a polynomial without re-running a full normalization on
    /// the numerator side.
    pub fn mul_poly(&self, p: &QtPoly) -> BiRatFunc {
        if p.is_zero() || self.num.is_zero() {
            return BiRatFunc::zero();
        }
        if self.den.is_one() {
            return BiRatFunc::signed(self.num.mul(p), self.den.clone());
        }
        let g = qtpoly_gcd(p, &self.den);
        if g.is_one() {
            return BiRatFunc { num: self.num.mul(p), den: self.den.clone() };
        }
        let p2 = p.div_exact(&g).unwrap();
        let d2 = self.den.div_exact(&g).unwrap();
        BiRatFunc::signed(self.num.mul(&p2), d2)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, q: &Rational, t: &Rational) -> Option<Rational> {
        let ev = |p: &QtPoly| {
            let mut acc = Rational::zero();
            for ((a, b), c) in qt_terms(p) {
                acc = acc.add(&Rational::from_int(c).mul(&q.pow(a as u32)).mul(&t.pow(b as u32)));
            }
            acc
        };
        ev(&self.num).div(&ev(&self.den))
    }
}

impl Ring for BiRatFunc {
    fn zero() -> Self {
        BiRatFunc { num: QtPoly::zero(), den: QtPoly::one() }
    }
    fn one() -> Self {
        BiRatFunc { num: QtPoly::one(), den: QtPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return BiRatFunc::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        if self.den.is_one() {
            return BiRatFunc::signed(self.num.mul(&o.den).add(&o.num), o.den.clone());
        }
        if o.den.is_one() {
            return BiRatFunc::signed(o.num.mul(&self.den).add(&self.num), self.den.clone());
        }
        // Henrici: work with the cofactors of the denominators' gcd.
        let g = qtpoly_gcd(&self.den, &o.den);
        if g.is_one() {
            return BiRatFunc::signed(
                self.num.mul(&o.den).add(&o.num.mul(&self.den)),
                self.den.mul(&o.den),
            );
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return BiRatFunc::zero();
        }
        let h = qtpoly_gcd(&num, &g);
        if h.is_one() {
            BiRatFunc::signed(num, b1.mul(&d1).mul(&g))
        } else {
            BiRatFunc::signed(num.div_exact(&h).unwrap(), b1.mul(&d1).mul(&g.div_exact(&h).unwrap()))
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return BiRatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return BiRatFunc::from_poly(self.num.mul(&o.num));
        }
        let g1 = qtpoly_gcd(&self.num, &o.den);
        let g2 = qtpoly_gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = o.den.div_exact(&g1).unwrap();
        let c = o.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        BiRatFunc::signed(a.mul(&c), b.mul(&d))
    }
    fn neg(&self) -> Self {
        BiRatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_int(v: &Int) -> Self {
        BiRatFunc::from_poly(QtPoly::constant(ZPoly::constant(v.clone())))
    }
}

impl ExactDiv for BiRatFunc {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.div(o)
    }
}

impl Field for BiRatFunc {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(BiRatFunc::signed(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Display for BiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", render_qt(&self.num))
        } else {
            write!(f, "({})/({})", render_qt(&self.num), render_qt(&self.den))
        }
    }
}

impl fmt::Debug for BiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for BiRatFunc {
    type Err = super::format::ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::format::parse_expr(s, &|v| match v {
            "q" => Some(BiRatFunc::q()),
            "t" => Some(BiRatFunc::t()),
            _ => None,
        })
    }
}

/// Sparse accumulator for integer polynomials in (q, t), used when many
/// monomial contributions are summed before a single conversion.
#[derive(Clone, Default, Debug, PartialEq, Eq)]
pub struct QtAccumulator {
    terms: BTreeMap<(usize, usize), i64>,
}

impl QtAccumulator {
    pub fn new() -> Self {
        QtAccumulator::default()
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow in accumulator");
        if *e == 0 {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms as `((q exponent, t exponent), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    pub fn to_poly(&self) -> QtPoly {
        qt_from_terms(self.terms.iter().map(|(k, v)| (*k, Int::from(*v))))
    }
}

impl UPoly<ZPoly> {
    /// Degree in q (maximum over the t-coefficients).
    pub fn q_degree(&self) -> usize {
        self.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> BiRatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_pair_cancels() {
        let a = parse("(1 - t)/(1 - q*t)");
        let b = parse("(1 - q*t)/(1 - t)");
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn canonical_rendering() {
        let x = parse("(1 - q*t)/(1 - q)");
        assert_eq!(x.to_string(), "(q*t - 1)/(q - 1)");
        let y = parse("(q*t - 1)/(q - 1)");
        assert_eq!(x, y);
        assert_eq!(parse("(2*q + 2)/(4*q^2 - 4)").to_string(), "(1)/(2*q - 2)");
        assert_eq!(parse("(q^2 - t^2)/(q - t)").to_string(), "q + t");
        let s = x.to_string();
        assert_eq!(parse(&s), x);
    }

    #[test]
    fn field_axioms_on_samples() {
        let a = parse("(1 + q)/(1 - t)");
        let b = parse("t/(1 - q*t)");
        let c = parse("(q - t)/(1 + q*t^2)");
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert!(a.sub(&a).is_zero());
        assert!(a.div(&a).unwrap().is_one());
        let q = Rational::from_i64(3);
        let t = Rational::from_i64(5);
        assert_eq!(
            a.mul(&c).eval(&q, &t).unwrap(),
            a.eval(&q, &t).unwrap().mul(&c.eval(&q, &t).unwrap())
        );
    }
}
