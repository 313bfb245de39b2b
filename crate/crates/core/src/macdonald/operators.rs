//! The Macdonald operators D_n^ρ and E_m on the monomial basis.
//!
//! Two independent routes compute the image of m_ν:
//!
//! * `Route::Direct` expands m_ν in x, applies Σ_I A_I T_I over the common
//!   denominator a_δ = ∏_{i<j}(x_i − x_j) and divides out each factor
//!   exactly, reporting whether every division left no remainder.
//! * `Route::Alternant` uses A_I = a_δ^{-1} Σ_w ε(w) x^{wδ} ∏_{i∈I} t^{(wδ)_i}
//!   to write the image as a signed sum of Schur polynomials, then converts
//!   with Kostka numbers. No polynomial in x is ever formed.
//!
//! Both produce integer polynomials in (q, t) as matrix entries.

use std::cell::RefCell;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::kostka::{schur_to_m, straighten};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalars::bivariate::{qt_from_terms, QtAccumulator};
use crate::scalars::{Int, QtPoly, Ring};
use crate::symfunc::{distinct_permutations, SymPoly};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MacOp {
    /// D_n^ρ
    D(usize),
    /// E_m = Σ_i x_i^m A_i(x;t) ∂_{q,x_i}
    E(u32),
}

impl MacOp {
    /// Change of degree: D preserves it, E_m shifts it by m − 1.
    pub fn degree_shift(self) -> i64 {
        match self {
            MacOp::D(_) => 0,
            MacOp::E(m) => m as i64 - 1,
        }
    }

    fn check(self, n: usize) -> Result<(), Error> {
        match self {
            MacOp::D(rho) if rho > n => Err(Error::InvalidParameter(format!("D_n^{rho} needs rho <= n = {n}"))),
            _ => Ok(()),
        }
    }
}

impl std::fmt::Display for MacOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MacOp::D(r) => write!(f, "D^{r}"),
            MacOp::E(m) => write!(f, "E_{m}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Direct,
    Alternant,
}

/// Image of one m_ν: coefficient of each m_μ.
pub type Image = BTreeMap<Partition, QtPoly>;

type CacheKey = (MacOp, usize, Partition);

thread_local! {
    static ALTERNANT_CACHE: RefCell<HashMap<CacheKey, Rc<Image>>> = RefCell::new(HashMap::new());
}

/// Subsets of {0, …, n−1} of size ρ, as bitmasks.
fn subsets(n: usize, rho: usize) -> impl Iterator<Item = u32> {
    (0u32..(1u32 << n)).filter(move |m| m.count_ones() as usize == rho)
}

/// [a]_q = 1 + q + … + q^{a−1} as (q exponent) list.
fn q_integer(a: u32) -> std::ops::Range<usize> {
    0..a as usize
}

fn check_nu(nu: &Partition, n: usize) -> Result<(), Error> {
    if nu.length() > n {
        return Err(Error::InvalidParameter(format!("{nu:?} has more than {n} parts")));
    }
    Ok(())
}

fn image_alternant(op: MacOp, nu: &Partition, n: usize) -> Image {
    // Signed Schur coefficients, keyed by λ.
    let mut schur: HashMap<Partition, QtAccumulator> = HashMap::new();
    let mut add = |gamma: &[u32], a: usize, b: usize, c: i64| {
        if let Some((sign, lambda)) = straighten(gamma) {
            schur.entry(lambda).or_default().add_term(a, b, sign * c);
        }
    };
    for beta in distinct_permutations(&nu.padded(n)) {
        match op {
            MacOp::D(rho) => {
                for mask in subsets(n, rho) {
                    let (mut a, mut b) = (0usize, 0usize);
                    for j in 0..n {
                        if mask & (1 << j) != 0 {
                            a += beta[j] as usize;
                            b += n - 1 - j;
                        }
                    }
                    add(&beta, a, b, 1);
                }
            }
            MacOp::E(m) => {
                for j in 0..n {
                    if beta[j] == 0 {
                        continue;
                    }
                    let mut gamma = beta.clone();
                    gamma[j] = beta[j] + m - 1;
                    for a in q_integer(beta[j]) {
                        add(&gamma, a, n - 1 - j, 1);
                    }
                }
            }
        }
    }
    let mut out: BTreeMap<Partition, QtAccumulator> = BTreeMap::new();
    for (lambda, acc) in schur {
        if acc.is_zero() {
            continue;
        }
        for (mu, k) in schur_to_m(&lambda, n) {
            let slot = out.entry(mu).or_default();
            for ((a, b), c) in acc.terms() {
                slot.add_term(a, b, c * k);
            }
        }
    }
    out.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, v.to_poly())).collect()
}

// Flat polynomial in x_1..x_n, q, t: key = exponents (x…, q, t).
type Flat = HashMap<Vec<u32>, i64>;

fn flat_add(p: &mut Flat, e: Vec<u32>, c: i64) {
    if c == 0 {
        return;
    }
    match p.entry(e) {
        Entry::Occupied(mut o) => {
            let v = o.get_mut();
            *v = v.checked_add(c).expect("coefficient overflow in operator expansion");
            if *v == 0 {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// Multiply by (t^{tp} x_i − x_j).
fn mul_binomial(p: &Flat, i: usize, tp: u32, j: usize, n: usize) -> Flat {
    let mut out = Flat::with_capacity(p.len() * 2);
    for (e, &c) in p {
        let mut a = e.clone();
        a[i] += 1;
        a[n + 1] += tp;
        flat_add(&mut out, a, c);
        let mut b = e.clone();
        b[j] += 1;
        flat_add(&mut out, b, -c);
    }
    out
}

/// Exact division by (x_a − x_b); the flag reports a zero remainder.
fn div_difference(p: &Flat, a: usize, b: usize) -> (Flat, bool) {
    let top = p.keys().map(|e| e[a]).max().unwrap_or(0);
    let mut levels: Vec<Flat> = vec![Flat::new(); top as usize + 1];
    for (e, &c) in p {
        flat_add(&mut levels[e[a] as usize], e.clone(), c);
    }
    let mut quot = Flat::new();
    // c x^e = c x^{e−ε_a}(x_a − x_b) + c x^{e−ε_a+ε_b}
    for lvl in (1..=top as usize).rev() {
        let terms = std::mem::take(&mut levels[lvl]);
        for (e, c) in terms {
            let mut qe = e.clone();
            qe[a] -= 1;
            flat_add(&mut quot, qe.clone(), c);
            qe[b] += 1;
            flat_add(&mut levels[lvl - 1], qe, c);
        }
    }
    (quot, levels[0].is_empty())
}

fn image_direct(op: MacOp, nu: &Partition, n: usize) -> (Image, bool) {
    let orbit = distinct_permutations(&nu.padded(n));
    let mut numerator = Flat::new();
    let subsets_for_op: Vec<u32> = match op {
        MacOp::D(rho) => subsets(n, rho).collect(),
        MacOp::E(_) => (0..n).map(|i| 1u32 << i).collect(),
    };
    for mask in subsets_for_op {
        let rho = mask.count_ones();
        // Action on f restricted to the variables in I.
        let mut g = Flat::new();
        for alpha in &orbit {
            match op {
                MacOp::D(_) => {
                    let qe: u32 = (0..n).filter(|j| mask & (1 << j) != 0).map(|j| alpha[j]).sum();
                    let mut e = alpha.clone();
                    e.extend([qe, 0]);
                    flat_add(&mut g, e, 1);
                }
                MacOp::E(m) => {
                    let i = mask.trailing_zeros() as usize;
                    if alpha[i] == 0 {
                        continue;
                    }
                    for a in q_integer(alpha[i]) {
                        let mut e = alpha.clone();
                        e[i] = alpha[i] - 1 + m;
                        e.extend([a as u32, 0]);
                        flat_add(&mut g, e, 1);
                    }
                }
            }
        }
        // t^{ρ(ρ−1)/2} ∏_{i∈I, j∉I} (t x_i − x_j) · sgn_I · ∏_{non-split a<b} (x_a − x_b)
        let tpow = rho * rho.saturating_sub(1) / 2;
        let mut sign = 1i64;
        for i in 0..n {
            for j in 0..n {
                if mask & (1 << i) != 0 && mask & (1 << j) == 0 {
                    g = mul_binomial(&g, i, 1, j, n);
                    if i > j {
                        sign = -sign;
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let split = (mask & (1 << a) != 0) != (mask & (1 << b) != 0);
                if !split {
                    g = mul_binomial(&g, a, 0, b, n);
                }
            }
        }
        for (mut e, c) in g {
            e[n + 1] += tpow;
            flat_add(&mut numerator, e, sign * c);
        }
    }
    let mut exact = true;
    for a in 0..n {
        for b in a + 1..n {
            let (qq, ok) = div_difference(&numerator, a, b);
            exact &= ok;
            numerator = qq;
        }
    }
    let mut out: BTreeMap<Partition, Vec<((usize, usize), Int)>> = BTreeMap::new();
    for (e, c) in numerator {
        let x = &e[..n];
        if x.windows(2).all(|w| w[0] >= w[1]) {
            let mu = Partition::new(x.to_vec()).unwrap();
            out.entry(mu).or_default().push(((e[n] as usize, e[n + 1] as usize), Int::from(c)));
        }
    }
    let img = out.into_iter().map(|(k, v)| (k, qt_from_terms(v))).filter(|(_, v)| !v.is_zero()).collect();
    (img, exact)
}

/// Image of m_ν under `op`, by the alternant route (memoized per thread).
pub fn image(op: MacOp, nu: &Partition, n: usize) -> Result<Rc<Image>, Error> {
    op.check(n)?;
    check_nu(nu, n)?;
    let key = (op, n, nu.clone());
    if let Some(v) = ALTERNANT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let v = Rc::new(image_alternant(op, nu, n));
    ALTERNANT_CACHE.with(|c| c.borrow_mut().insert(key, v.clone()));
    Ok(v)
}

/// Image of m_ν by the direct route, with the exact-division witness.
pub fn image_with_witness(op: MacOp, nu: &Partition, n: usize) -> Result<(Image, bool), Error> {
    op.check(n)?;
    check_nu(nu, n)?;
    Ok(image_direct(op, nu, n))
}

/// Output of an operator application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorResult<C> {
    pub output: SymPoly<C>,
    /// True iff every Vandermonde division was exact.
    pub witness: bool,
}

/// Apply `op` to `f`, mapping the integer (q, t) matrix entries into the
/// coefficient ring with `map`.
pub fn apply_op<C: Ring>(
    f: &SymPoly<C>,
    op: MacOp,
    route: Route,
    map: impl Fn(&QtPoly) -> C,
) -> Result<OperatorResult<C>, Error> {
    let n = f.n();
    let mut out = SymPoly::zero(n);
    let mut witness = true;
    for (nu, c) in f.terms() {
        let img = match route {
            Route::Alternant => image(op, nu, n)?,
            Route::Direct => {
                let (img, ok) = image_with_witness(op, nu, n)?;
                witness &= ok;
                Rc::new(img)
            }
        };
        for (mu, e) in img.iter() {
            out.add_term(mu.clone(), map(e).mul(c))?;
        }
    }
    if !witness {
        return Err(Error::Internal(format!("nonzero remainder dividing by the Vandermonde while applying {op}")));
    }
    Ok(OperatorResult { output: out, witness })
}

/// D_n^ρ f via the direct route.
pub fn apply_d<C: Ring>(f: &SymPoly<C>, rho: usize, map: impl Fn(&QtPoly) -> C) -> Result<OperatorResult<C>, Error> {
    apply_op(f, MacOp::D(rho), Route::Direct, map)
}

/// E_m f via the direct route.
pub fn apply_e<C: Ring>(f: &SymPoly<C>, m: u32, map: impl Fn(&QtPoly) -> C) -> Result<OperatorResult<C>, Error> {
    apply_op(f, MacOp::E(m), Route::Direct, map)
}

/// Matrix of `op` from Λ_{n,d} to Λ_{n,d+shift}: `entry(μ, ν)` is the
/// coefficient of m_μ in op(m_ν).
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub op: MacOp,
    pub n: usize,
    pub d: u32,
    columns: BTreeMap<Partition, Image>,
}

impl OperatorMatrix {
    pub fn build(op: MacOp, n: usize, d: u32, route: Route) -> Result<OperatorMatrix, Error> {
        let mut columns = BTreeMap::new();
        for nu in enumerate_partitions(n, d) {
            let img = match route {
                Route::Alternant => (*image(op, &nu, n)?).clone(),
                Route::Direct => {
                    let (img, ok) = image_with_witness(op, &nu, n)?;
                    if !ok {
                        return Err(Error::Internal(format!("inexact Vandermonde division for {op} on m_{nu:?}")));
                    }
                    img
                }
            };
            columns.insert(nu, img);
        }
        Ok(OperatorMatrix { op, n, d, columns })
    }

    pub fn entry(&self, mu: &Partition, nu: &Partition) -> QtPoly {
        self.columns.get(nu).and_then(|c| c.get(mu)).cloned().unwrap_or_else(QtPoly::zero)
    }

    pub fn column(&self, nu: &Partition) -> Option<&Image> {
        self.columns.get(nu)
    }

    pub fn columns(&self) -> &BTreeMap<Partition, Image> {
        &self.columns
    }
}

/// Coefficients of ∏_i (1 + X q^{λ_i} t^{n−i}) in X, lowest degree first.
pub fn eigenvalue_d(lambda: &Partition, n: usize) -> Result<Vec<QtPoly>, Error> {
    check_nu(lambda, n)?;
    let mut coeffs: Vec<QtAccumulator> = vec![QtAccumulator::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..n {
            if mask & (1 << i) != 0 {
                a += lambda.part(i + 1) as usize;
                b += n - 1 - i;
            }
        }
        coeffs[mask.count_ones() as usize].add_term(a, b, 1);
    }
    Ok(coeffs.iter().map(|c| c.to_poly()).collect())
}

/// ε_1(λ) = Σ_i q^{λ_i} t^{n−i}, the D_n^1 eigenvalue.
pub fn eigenvalue_d1(lambda: &Partition, n: usize) -> QtPoly {
    let mut acc = QtAccumulator::new();
    for i in 1..=n {
        acc.add_term(lambda.part(i) as usize, n - i, 1);
    }
    acc.to_poly()
}
