//! Dense univariate polynomials over an arbitrary coefficient ring.
//!
//! Coefficients are stored low degree first and the vector is always trimmed,
//! so the zero polynomial is the empty vector and equality is structural.

use super::int::Int;
use super::ring::{ExactDiv, Field, GcdRing, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

/// Integer polynomials in one variable.
pub type ZPoly = UPoly<Int>;

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        UPoly::new(vec![c])
    }

    pub fn monomial(c: R, deg: usize) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![R::zero(); deg + 1];
        v[deg] = c;
        UPoly { coeffs: v }
    }

    /// The polynomial `x`.
    pub fn var() -> Self {
        UPoly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Number of trailing zero coefficients (the x-adic valuation).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        let mut v = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            v[i] = v[i].add(c);
        }
        UPoly::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            };
            v.push(c);
        }
        UPoly::new(v)
    }

    pub fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(v)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: v }
    }

    /// Divide by `x^k`, assuming the low coefficients vanish.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        UPoly { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UPoly<S> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }
}

impl<R: ExactDiv> UPoly<R> {
    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return None;
        }
        // Strip common powers of x first; it is cheap and frequent.
        let dv = d.valuation();
        if dv > 0 {
            if self.valuation() < dv {
                return None;
            }
            return self.unshift(dv).div_exact(&d.unshift(dv));
        }
        if dd == 0 {
            let c = &d.coeffs[0];
            let mut v = Vec::with_capacity(self.coeffs.len());
            for a in &self.coeffs {
                v.push(a.div_exact(c)?);
            }
            return Some(UPoly { coeffs: v });
        }
        let lc = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut q = vec![R::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lc)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] = rem[i + j].sub(&c.mul(dc));
                }
            }
            q[i] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(UPoly::new(q))
        } else {
            None
        }
    }
}

impl<F: Field> UPoly<F> {
    /// Euclidean division over a field.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut q = vec![F::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.mul(&inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] = rem[i + j].sub(&c.mul(dc));
                }
            }
            q[i] = c;
        }
        rem.truncate(dd);
        (UPoly::new(q), UPoly::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => UPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd_field(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns `(g, s)` with `g = gcd(self, m)` monic and `s*self ≡ g (mod m)`.
    pub fn gcdex_field(&self, m: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (self.clone(), m.clone());
        let (mut s0, mut s1) = (UPoly::constant(F::one()), UPoly::zero());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        match r0.lead() {
            None => (r0, s0),
            Some(l) => {
                let inv = l.inv().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv))
            }
        }
    }
}

/// Sign convention for canonical gcds: the "leading sign" of a ring element.
pub trait Signed: GcdRing {
    fn lead_sign(&self) -> i32;
}

impl Signed for Int {
    fn lead_sign(&self) -> i32 {
        self.signum()
    }
}

impl<R: Signed> UPoly<R> {
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading sign.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead_sign() < 0 {
            c = c.neg();
        }
        if c.is_one() {
            return self.clone();
        }
        self.div_exact(&UPoly::constant(c)).expect("content divides")
    }

    pub fn lead_sign(&self) -> i32 {
        self.lead().map_or(0, |l| l.lead_sign())
    }

    pub fn normalize_sign(&self) -> Self {
        if self.lead_sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Pseudo-remainder of `self` by `d`.
    pub fn prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let top = r.lead().unwrap().clone();
            r = r.scale(&lc).sub(&d.scale(&top).shift(rd - dd));
        }
        r
    }

    /// Gcd by the primitive polynomial remainder sequence. Slow but always
    /// correct; used as the fallback for the heuristic gcds.
    pub fn prs_gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive_with_content();
        }
        if o.is_zero() {
            return self.primitive_with_content();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive() };
        }
        a.primitive().scale(&c)
    }

    fn primitive_with_content(&self) -> Self {
        self.normalize_sign()
    }
}

impl<R: Ring> Ring for UPoly<R> {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        UPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        UPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        UPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        UPoly::neg(self)
    }
    fn from_int(v: &Int) -> Self {
        UPoly::constant(R::from_int(v))
    }
}

impl<R: ExactDiv> ExactDiv for UPoly<R> {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        UPoly::div_exact(self, o)
    }
}

impl ZPoly {
    pub fn from_i64s(v: &[i64]) -> ZPoly {
        UPoly::new(v.iter().map(|&c| Int::from(c)).collect())
    }

    /// Largest absolute value of a coefficient.
    pub fn max_norm(&self) -> Int {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or(Int::ZERO)
    }
}

impl GcdRing for ZPoly {
    fn gcd(&self, o: &Self) -> Self {
        super::heugcd::zpoly_gcd(self, o)
    }
}

impl Signed for ZPoly {
    fn lead_sign(&self) -> i32 {
        UPoly::lead_sign(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::Rational;

    fn z(v: &[i64]) -> ZPoly {
        ZPoly::from_i64s(v)
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let a = z(&[1, 1]);
        let b = z(&[-1, 1]);
        let p = a.mul(&b);
        assert_eq!(p, z(&[-1, 0, 1]));
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&z(&[2, 1])), None);
        assert_eq!(z(&[2, 4]).div_exact(&z(&[2])), Some(z(&[1, 2])));
        assert_eq!(z(&[0, 0, 3]).div_exact(&z(&[0, 1])), Some(z(&[0, 3])));
        assert_eq!(p.eval(&Int::from(3)), Int::from(8));
    }

    #[test]
    fn prs_gcd_matches_expected() {
        let f = z(&[1, 1]).mul(&z(&[2, 0, 1])).scale(&Int::from(6));
        let g = z(&[1, 1]).mul(&z(&[-3, 1])).scale(&Int::from(4));
        assert_eq!(f.prs_gcd(&g), z(&[2, 2]));
    }

    #[test]
    fn field_gcd_and_inverse() {
        let q = |v: &[i64]| UPoly::new(v.iter().map(|&c| Rational::from_i64(c)).collect());
        let f = q(&[1, 1]).mul(&q(&[2, 0, 1]));
        let g = q(&[1, 1]).mul(&q(&[-3, 1]));
        assert_eq!(f.gcd_field(&g), q(&[1, 1]));
        let m = q(&[1, 0, 1]);
        let (g, s) = q(&[1, 1]).gcdex_field(&m);
        assert!(g.is_one());
        assert!(s.mul(&q(&[1, 1])).div_rem(&m).1.is_one());
    }
}
