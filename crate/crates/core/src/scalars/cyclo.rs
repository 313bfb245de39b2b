//! Elements of cyclotomic fields ℚ(ζ_N) in the power basis.
//!
//! Rational values are always stored as `Rat`, whatever field they came
//! from, so that ℚ(ζ_1) = ℚ(ζ_2) = ℚ needs no special casing and rationals
//! combine freely with elements of any order. Combining two genuinely
//! irrational elements of different orders is a mixed-field error.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use super::int::Int;
use super::rational::Rational;
use super::ring::{ExactDiv, Field, Ring};
use super::upoly::{UPoly, ZPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CycloNum {
    Rat(Rational),
    /// `order ≥ 3`; `coeffs.len() == φ(order)`; some coefficient past the
    /// constant term is nonzero.
    Cyc { order: u32, coeffs: Vec<Rational> },
}

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u32, Rc<Vec<Int>>>> = RefCell::new(HashMap::new());
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn compute_cyclotomic(n: u32) -> ZPoly {
    // Φ_n = (x^n − 1) / ∏_{d | n, d < n} Φ_d, all divisions exact over ℤ.
    let mut p = ZPoly::monomial(Int::ONE, n as usize).sub(&ZPoly::constant(Int::ONE));
    for d in divisors(n) {
        if d < n {
            p = p.div_exact(&cyclotomic_poly(d)).expect("cyclotomic factor divides");
        }
    }
    p
}

/// The `n`-th cyclotomic polynomial with integer coefficients.
pub fn cyclotomic_poly(n: u32) -> ZPoly {
    assert!(n >= 1, "cyclotomic order must be positive");
    let coeffs = CYCLOTOMIC.with(|c| {
        if let Some(v) = c.borrow().get(&n) {
            return v.clone();
        }
        let p = Rc::new(compute_cyclotomic(n).into_coeffs());
        c.borrow_mut().insert(n, p.clone());
        p
    });
    ZPoly::new((*coeffs).clone())
}

fn with_modulus<T>(n: u32, f: impl FnOnce(&[Int]) -> T) -> T {
    let rc = CYCLOTOMIC.with(|c| c.borrow().get(&n).cloned());
    match rc {
        Some(v) => f(&v),
        None => {
            cyclotomic_poly(n);
            let v = CYCLOTOMIC.with(|c| c.borrow().get(&n).cloned().unwrap());
            f(&v)
        }
    }
}

/// Euler's totient, i.e. the degree of ℚ(ζ_n).
pub fn totient(n: u32) -> usize {
    with_modulus(n, |m| m.len() - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedOrders(pub u32, pub u32);

impl fmt::Display for MixedOrders {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot combine elements of Q(zeta_{}) and Q(zeta_{})", self.0, self.1)
    }
}

impl std::error::Error for MixedOrders {}

impl CycloNum {
    pub fn rational(r: Rational) -> CycloNum {
        CycloNum::Rat(r)
    }

    pub fn from_i64(v: i64) -> CycloNum {
        CycloNum::Rat(Rational::from_i64(v))
    }

    /// ζ_N^e for a fixed primitive N-th root of unity ζ_N = exp(2πi/N).
    pub fn zeta_pow(order: u32, e: i64) -> CycloNum {
        assert!(order >= 1);
        let e = e.rem_euclid(order as i64) as usize;
        match order {
            1 => CycloNum::from_i64(1),
            2 => CycloNum::from_i64(if e == 0 { 1 } else { -1 }),
            _ => {
                let mut v = vec![Rational::from_i64(0); e + 1];
                v[e] = Rational::from_i64(1);
                CycloNum::reduce(order, v)
            }
        }
    }

    pub fn zeta(order: u32) -> CycloNum {
        CycloNum::zeta_pow(order, 1)
    }

    /// Build from power-basis coefficients of arbitrary length, reducing
    /// modulo Φ_order.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> CycloNum {
        CycloNum::reduce(order, coeffs)
    }

    fn reduce(order: u32, mut v: Vec<Rational>) -> CycloNum {
        if order <= 2 {
            // ζ_1 = 1, ζ_2 = −1.
            let z = if order == 1 { Rational::from_i64(1) } else { Rational::from_i64(-1) };
            let val = UPoly::new(v).eval(&z);
            return CycloNum::Rat(val);
        }
        with_modulus(order, |m| {
            let deg = m.len() - 1;
            if v.len() > deg {
                for i in (deg..v.len()).rev() {
                    let c = v[i].clone();
                    if c.is_zero() {
                        continue;
                    }
                    for (j, mj) in m.iter().enumerate().take(deg) {
                        if !mj.is_zero() {
                            let idx = i - deg + j;
                            v[idx] = v[idx].sub(&c.mul_int(mj));
                        }
                    }
                    v[i] = Rational::from_i64(0);
                }
                v.truncate(deg);
            }
            v.resize(deg, Rational::from_i64(0));
        });
        CycloNum::canonical(order, v)
    }

    fn canonical(order: u32, v: Vec<Rational>) -> CycloNum {
        if v.iter().skip(1).all(|c| c.is_zero()) {
            CycloNum::Rat(v.into_iter().next().unwrap_or_else(|| Rational::from_i64(0)))
        } else {
            CycloNum::Cyc { order, coeffs: v }
        }
    }

    /// The field order this element lives in, or `None` for rationals.
    pub fn order(&self) -> Option<u32> {
        match self {
            CycloNum::Rat(_) => None,
            CycloNum::Cyc { order, .. } => Some(*order),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            CycloNum::Rat(r) => Some(r),
            CycloNum::Cyc { .. } => None,
        }
    }

    /// Power-basis coefficients (length 1 for rationals).
    pub fn coefficients(&self) -> Vec<Rational> {
        match self {
            CycloNum::Rat(r) => vec![r.clone()],
            CycloNum::Cyc { coeffs, .. } => coeffs.clone(),
        }
    }

    fn common_order(&self, o: &CycloNum) -> Result<Option<u32>, MixedOrders> {
        match (self.order(), o.order()) {
            (Some(a), Some(b)) if a != b => Err(MixedOrders(a, b)),
            (Some(a), _) | (_, Some(a)) => Ok(Some(a)),
            _ => Ok(None),
        }
    }

    fn padded(&self, order: u32) -> Vec<Rational> {
        match self {
            CycloNum::Rat(r) => {
                let mut v = vec![Rational::from_i64(0); totient(order)];
                v[0] = r.clone();
                v
            }
            CycloNum::Cyc { coeffs, .. } => coeffs.clone(),
        }
    }

    pub fn checked_add(&self, o: &CycloNum) -> Result<CycloNum, MixedOrders> {
        if let (CycloNum::Rat(a), CycloNum::Rat(b)) = (self, o) {
            return Ok(CycloNum::Rat(a.add(b)));
        }
        let ord = self.common_order(o)?.unwrap();
        let a = self.padded(ord);
        let b = o.padded(ord);
        Ok(CycloNum::canonical(ord, a.iter().zip(&b).map(|(x, y)| x.add(y)).collect()))
    }

    pub fn checked_mul(&self, o: &CycloNum) -> Result<CycloNum, MixedOrders> {
        match (self, o) {
            (CycloNum::Rat(a), CycloNum::Rat(b)) => return Ok(CycloNum::Rat(a.mul(b))),
            (CycloNum::Rat(a), CycloNum::Cyc { order, coeffs })
            | (CycloNum::Cyc { order, coeffs }, CycloNum::Rat(a)) => {
                if a.is_zero() {
                    return Ok(CycloNum::from_i64(0));
                }
                return Ok(CycloNum::Cyc { order: *order, coeffs: coeffs.iter().map(|c| c.mul(a)).collect() });
            }
            _ => {}
        }
        let ord = self.common_order(o)?.unwrap();
        let a = self.padded(ord);
        let b = o.padded(ord);
        let mut v = vec![Rational::from_i64(0); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] = v[i + j].add(&x.mul(y));
                }
            }
        }
        Ok(CycloNum::reduce(ord, v))
    }

    pub fn checked_inv(&self) -> Option<CycloNum> {
        match self {
            CycloNum::Rat(r) => r.inv().map(CycloNum::Rat),
            CycloNum::Cyc { order, coeffs } => {
                let m = cyclotomic_poly(*order).map(|c| Rational::from_int(c.clone()));
                let a = UPoly::new(coeffs.clone());
                let (g, s) = a.gcdex_field(&m);
                debug_assert!(g.is_one(), "cyclotomic polynomial is irreducible");
                Some(CycloNum::reduce(*order, s.into_coeffs()))
            }
        }
    }

    fn expect_same<T>(r: Result<T, MixedOrders>) -> T {
        match r {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Ring for CycloNum {
    fn zero() -> Self {
        CycloNum::from_i64(0)
    }
    fn one() -> Self {
        CycloNum::from_i64(1)
    }
    fn is_zero(&self) -> bool {
        matches!(self, CycloNum::Rat(r) if r.is_zero())
    }
    fn is_one(&self) -> bool {
        matches!(self, CycloNum::Rat(r) if r.is_one())
    }
    fn add(&self, o: &Self) -> Self {
        CycloNum::expect_same(self.checked_add(o))
    }
    fn sub(&self, o: &Self) -> Self {
        CycloNum::expect_same(self.checked_add(&o.neg()))
    }
    fn mul(&self, o: &Self) -> Self {
        CycloNum::expect_same(self.checked_mul(o))
    }
    fn neg(&self) -> Self {
        match self {
            CycloNum::Rat(r) => CycloNum::Rat(r.neg()),
            CycloNum::Cyc { order, coeffs } => {
                CycloNum::Cyc { order: *order, coeffs: coeffs.iter().map(|c| c.neg()).collect() }
            }
        }
    }
    fn from_int(v: &Int) -> Self {
        CycloNum::Rat(Rational::from_int(v.clone()))
    }
}

impl ExactDiv for CycloNum {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.div(o)
    }
}

impl Field for CycloNum {
    fn inv(&self) -> Option<Self> {
        self.checked_inv()
    }
}

impl From<Rational> for CycloNum {
    fn from(r: Rational) -> Self {
        CycloNum::Rat(r)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloNum::Rat(r) => write!(f, "{r}"),
            CycloNum::Cyc { coeffs, .. } => {
                let terms: Vec<(Rational, Vec<(&str, usize)>)> = coeffs
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (c.clone(), if i == 0 { vec![] } else { vec![("z", i)] }))
                    .collect();
                f.write_str(&super::format::render_terms(&terms))
            }
        }
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
