//! Symmetric polynomials in the monomial basis, their full monomial
//! expansions, products, wheel substitutions and the restricted derivative.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde_json::{json, Value};

use crate::partitions::Partition;
use crate::scalars::{CLaurent, ParameterSpec, Ring, UniRatFunc};
use crate::Error;

/// Σ c_λ m_λ in `n` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly<C> {
    n: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> SymPoly<C> {
    pub fn zero(n: usize) -> Self {
        SymPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut f = SymPoly::zero(n);
        f.terms.insert(Partition::empty(), C::one());
        f
    }

    /// c·m_λ; λ must fit in `n` variables.
    pub fn monomial(n: usize, lambda: Partition, c: C) -> Result<Self, Error> {
        let mut f = SymPoly::zero(n);
        f.add_term(lambda, c)?;
        Ok(f)
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(n: usize, terms: I) -> Result<Self, Error> {
        let mut f = SymPoly::zero(n);
        for (l, c) in terms {
            f.add_term(l, c)?;
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, C> {
        self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c·m_λ` in place.
    pub fn add_term(&mut self, lambda: Partition, c: C) -> Result<(), Error> {
        if lambda.length() > self.n {
            return Err(Error::InvalidParameter(format!("{lambda:?} has more than {} parts", self.n)));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&lambda) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        if self.n != o.n {
            return Err(Error::VariableMismatch(self.n, o.n));
        }
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, Error> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|c| c.mul(s))
    }

    /// Apply `f` to every coefficient, dropping results that vanish.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> SymPoly<D> {
        self.try_map(|c| Ok::<_, Error>(f(c))).unwrap()
    }

    pub fn try_map<D: Ring, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<SymPoly<D>, E> {
        let mut terms = BTreeMap::new();
        for (l, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                terms.insert(l.clone(), d);
            }
        }
        Ok(SymPoly { n: self.n, terms })
    }

    /// Largest |λ| in the support (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(|l| l.size());
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|e| e == d),
        }
    }
}

impl<C: Ring + Display> SymPoly<C> {
    /// `[{"partition": "2,1", "coefficient": "..."}]`
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| json!({"partition": l.to_padded_string(self.n), "coefficient": c.to_string()}))
                .collect(),
        )
    }
}

impl<C: Ring> SymPoly<C> {
    /// Inverse of [`SymPoly::to_json`], given a coefficient parser.
    pub fn from_json(n: usize, v: &Value, parse: impl Fn(&str) -> Result<C, Error>) -> Result<Self, Error> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected a list of terms".into()))?;
        let mut f = SymPoly::zero(n);
        for t in arr {
            let l: Partition = t["partition"].as_str().ok_or_else(|| Error::Parse("missing partition".into()))?.parse()?;
            let c = parse(t["coefficient"].as_str().ok_or_else(|| Error::Parse("missing coefficient".into()))?)?;
            f.add_term(l, c)?;
        }
        Ok(f)
    }
}

/// Σ c_α x^α over exponent vectors of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialExpansion<C> {
    n: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Ring> MonomialExpansion<C> {
    pub fn zero(n: usize) -> Self {
        MonomialExpansion { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: C) {
        assert_eq!(e.len(), self.n, "exponent vector has the wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = MonomialExpansion::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), x.mul(y));
            }
        }
        out
    }
}

/// Distinct permutations of `v` (the S_n-orbit of an exponent vector).
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Lexicographic next-permutation on the ascending start.
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Number of distinct permutations of λ padded to `n` entries.
pub fn orbit_size(lambda: &Partition, n: usize) -> u64 {
    let v = lambda.padded(n);
    let mut out: u64 = (1..=n as u64).product();
    let mut i = 0;
    while i < v.len() {
        let j = (i..v.len()).find(|&j| v[j] != v[i]).unwrap_or(v.len());
        out /= (1..=(j - i) as u64).product::<u64>();
        i = j;
    }
    out
}

pub fn m_to_monomials<C: Ring>(f: &SymPoly<C>) -> MonomialExpansion<C> {
    let mut out = MonomialExpansion::zero(f.n);
    for (l, c) in &f.terms {
        for a in distinct_permutations(&l.padded(f.n)) {
            out.add_term(a, c.clone());
        }
    }
    out
}

/// Collect a symmetric expansion back into the m-basis. Symmetry is checked
/// against the adjacent transpositions, which generate S_n; the error names
/// the first offending pair (1-based).
pub fn monomials_to_m<C: Ring>(g: &MonomialExpansion<C>) -> Result<SymPoly<C>, Error> {
    for (e, c) in &g.terms {
        for i in 0..g.n.saturating_sub(1) {
            if e[i] == e[i + 1] {
                continue;
            }
            let mut s = e.clone();
            s.swap(i, i + 1);
            if g.coeff(&s) != *c {
                return Err(Error::NotSymmetric(i + 1, i + 2));
            }
        }
    }
    let mut out = SymPoly::zero(g.n);
    for (e, c) in &g.terms {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            out.add_term(Partition::new(e.clone())?, c.clone())?;
        }
    }
    Ok(out)
}

/// Product in Λ_n, computed on monomial expansions; only the weakly
/// decreasing exponents of the product are accumulated.
pub fn sympoly_mul<C: Ring>(f: &SymPoly<C>, g: &SymPoly<C>) -> Result<SymPoly<C>, Error> {
    if f.n != g.n {
        return Err(Error::VariableMismatch(f.n, g.n));
    }
    let ef = m_to_monomials(f);
    let mut out = SymPoly::zero(f.n);
    let orbits: Vec<(Vec<Vec<u32>>, &C)> =
        g.terms.iter().map(|(l, c)| (distinct_permutations(&l.padded(g.n)), c)).collect();
    for (a, x) in &ef.terms {
        for (orbit, y) in &orbits {
            let xy = x.mul(y);
            for b in orbit {
                let s: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                if s.windows(2).all(|w| w[0] >= w[1]) {
                    out.add_term(Partition::new(s)?, xy.clone())?;
                }
            }
        }
    }
    Ok(out)
}

/// e_1 = x_1 + … + x_n.
pub fn e1<C: Ring>(n: usize) -> SymPoly<C> {
    if n == 0 {
        return SymPoly::zero(0);
    }
    SymPoly::monomial(n, Partition::from_unsorted(vec![1]), C::one()).unwrap()
}

/// Check that σ is weakly increasing with entries in [0, r−1] and has
/// length k.
pub fn validate_sigma(sigma: &[u32], k: u32, r: u32) -> Result<(), Error> {
    if sigma.len() != k as usize {
        return Err(Error::InvalidParameter(format!("wheel substitution {sigma:?} must have {k} entries")));
    }
    if sigma.windows(2).any(|w| w[0] > w[1]) || sigma.iter().any(|&s| s > r - 1) {
        return Err(Error::InvalidParameter(format!(
            "wheel substitution {sigma:?} must be weakly increasing in [0, {}]",
            r - 1
        )));
    }
    Ok(())
}

/// The exponents (a, b) with x^α ↦ q^a t^b x_1^{α_1+…+α_{k+1}} under
/// x_i = t^{i−1} q^{σ_{i−1}} x_1 (2 ≤ i ≤ k+1).
pub fn wheel_weight(alpha: &[u32], sigma: &[u32]) -> (i64, i64) {
    let mut a = 0i64;
    let mut b = 0i64;
    for (i, s) in sigma.iter().enumerate() {
        let e = alpha[i + 1] as i64;
        a += *s as i64 * e;
        b += (i as i64 + 1) * e;
    }
    (a, b)
}

/// Exponent vector in the free variables x_1, x_{k+2}, …, x_n.
pub fn wheel_free_monomial(alpha: &[u32], k: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(alpha.len() - k);
    v.push(alpha[..=k].iter().sum());
    v.extend_from_slice(&alpha[k + 1..]);
    v
}

/// Substitute the wheel point σ into `f`, with coefficients built by
/// `scale(c, ζ-exponent, u-exponent)` = c · ζ^z u^e.
pub fn wheel_substitute_with<C: Ring>(
    f: &SymPoly<C>,
    sigma: &[u32],
    p: &ParameterSpec,
    scale: impl Fn(&C, i64, i64) -> C,
) -> Result<MonomialExpansion<C>, Error> {
    let k = p.k() as usize;
    validate_sigma(sigma, p.k(), p.r())?;
    if f.n < k + 1 {
        return Err(Error::InvalidParameter(format!("wheel substitution needs at least {} variables", k + 1)));
    }
    let mut out = MonomialExpansion::zero(f.n - k);
    for (l, c) in &f.terms {
        for alpha in distinct_permutations(&l.padded(f.n)) {
            let (a, b) = wheel_weight(&alpha, sigma);
            let (z, e) = p.map_monomial(a, b);
            out.add_term(wheel_free_monomial(&alpha, k), scale(c, z, e));
        }
    }
    Ok(out)
}

/// `f` at x_i = t^{i−1} q^{σ_{i−1}} x_1 for 2 ≤ i ≤ k+1, as a polynomial in
/// x_1, x_{k+2}, …, x_n over the specialized field.
pub fn wheel_substitute(
    f: &SymPoly<UniRatFunc>,
    sigma: &[u32],
    p: &ParameterSpec,
) -> Result<MonomialExpansion<UniRatFunc>, Error> {
    wheel_substitute_with(f, sigma, p, |c, z, e| {
        c.mul(&UniRatFunc::from_laurent(&CLaurent::monomial(p.zeta_pow(z), e)))
    })
}

/// Same substitution for Laurent coefficients (cleared denominators).
pub fn wheel_substitute_laurent(
    f: &SymPoly<CLaurent>,
    sigma: &[u32],
    p: &ParameterSpec,
) -> Result<MonomialExpansion<CLaurent>, Error> {
    wheel_substitute_with(f, sigma, p, |c, z, e| c.mul_monomial(&p.zeta_pow(z), e))
}

/// ρ(∂_n^j f): differentiate j times in x_n, set x_n = 0, and return the
/// result in n−1 variables.
pub fn restrict_derivative<C: Ring>(f: &SymPoly<C>, j: u32) -> Result<SymPoly<C>, Error> {
    if f.n < 2 {
        return Err(Error::InvalidParameter("restriction needs at least two variables".into()));
    }
    let ex = m_to_monomials(f);
    let mut out = MonomialExpansion::zero(f.n - 1);
    let fact: i64 = (1..=j as i64).product();
    for (e, c) in ex.terms() {
        if e[f.n - 1] == j {
            out.add_term(e[..f.n - 1].to_vec(), c.mul(&C::from_i64(fact)));
        }
    }
    monomials_to_m(&out).map_err(|e| Error::Internal(format!("restricted derivative lost symmetry: {e}")))
}

/// Multiply every coefficient by a common polynomial so that all become
/// Laurent polynomials; returns the multiplier and the cleared polynomial.
pub fn clear_denominators(f: &SymPoly<UniRatFunc>) -> (crate::scalars::CPoly, SymPoly<CLaurent>) {
    let mut l = crate::scalars::CPoly::one();
    for c in f.terms.values() {
        let d = c.denom();
        let g = l.gcd_field(d);
        l = l.mul(&d.div_rem(&g).0);
    }
    let cleared = f.map(|c| {
        let num = c.numer().mul(&l.div_rem(c.denom()).0);
        CLaurent::from_upoly(&num)
    });
    (l, cleared)
}

/// Embed Laurent coefficients into the field.
pub fn laurent_to_field(f: &SymPoly<CLaurent>) -> SymPoly<UniRatFunc> {
    f.map(UniRatFunc::from_laurent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn sym(n: usize, t: &[(&str, i64)]) -> SymPoly<Rational> {
        SymPoly::from_terms(n, t.iter().map(|(l, c)| (p(l), r(*c)))).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let e = m_to_monomials(&sym(2, &[("1", 1)]));
        assert_eq!(e.terms().len(), 2);
        assert_eq!(e.coeff(&[1, 0]), r(1));
        assert_eq!(m_to_monomials(&sym(2, &[("1,1", 1)])).terms().len(), 1);
        assert_eq!(m_to_monomials(&sym(3, &[("2,1", 1)])).terms().len(), 6);
        assert_eq!(orbit_size(&p("2,1"), 3), 6);
        assert_eq!(orbit_size(&p("1,1"), 4), 6);
    }

    #[test]
    fn collection_and_symmetry_errors() {
        let mut g = MonomialExpansion::zero(2);
        g.add_term(vec![2, 1], r(1));
        g.add_term(vec![1, 2], r(1));
        assert_eq!(monomials_to_m(&g).unwrap(), sym(2, &[("2,1", 1)]));
        let mut h = MonomialExpansion::zero(2);
        h.add_term(vec![2, 0], r(1));
        h.add_term(vec![0, 1], r(1));
        assert_eq!(monomials_to_m(&h), Err(Error::NotSymmetric(1, 2)));
    }

    #[test]
    fn products() {
        let m1 = sym(2, &[("1", 1)]);
        assert_eq!(sympoly_mul(&m1, &m1).unwrap(), sym(2, &[("2", 1), ("1,1", 2)]));
        assert_eq!(sympoly_mul(&m1, &sym(2, &[("1,1", 1)])).unwrap(), sym(2, &[("2,1", 1)]));
        assert_eq!(sympoly_mul(&m1, &SymPoly::one(2)).unwrap(), m1);
        assert!(sympoly_mul(&m1, &sym(3, &[("1", 1)])).is_err());
    }

    #[test]
    fn restriction() {
        assert!(restrict_derivative(&sym(2, &[("1,1", 1)]), 0).unwrap().is_zero());
        assert_eq!(restrict_derivative(&sym(2, &[("1,1", 1)]), 1).unwrap(), sym(1, &[("1", 1)]));
        assert_eq!(restrict_derivative(&sym(2, &[("2", 1)]), 2).unwrap(), sym(1, &[("", 2)]));
    }

    #[test]
    fn wheel_substitution_examples() {
        let spec = ParameterSpec::new(1, 2).unwrap();
        let u = UniRatFunc::u();
        let f = SymPoly::monomial(2, p("1"), UniRatFunc::one()).unwrap();
        let s = wheel_substitute(&f, &[0], &spec).unwrap();
        assert_eq!(s.coeff(&[1]), UniRatFunc::one().add(&u));
        let one = SymPoly::one(2);
        assert_eq!(wheel_substitute(&one, &[1], &spec).unwrap().coeff(&[0]), UniRatFunc::one());
        // a(1+t²) + b t = 0 with a = t, b = −(1+t²)
        let t2 = UniRatFunc::one().add(&u.mul(&u));
        let g = SymPoly::from_terms(2, [(p("2"), u.clone()), (p("1,1"), t2.neg())]).unwrap();
        for s in [[0], [1]] {
            assert!(wheel_substitute(&g, &s, &spec).unwrap().is_zero());
        }
        assert!(wheel_substitute(&g, &[2], &spec).is_err());
    }

    #[test]
    fn cumulative_and_increment_forms_agree() {
        // σ weakly increasing in [0, r−1] ⟺ increments s_i ≥ 0 summing with
        // s_{k+1} to r−1.
        for k in 1..=3usize {
            for r in 2..=4u32 {
                let mut count = 0;
                let mut inc = vec![0u32; k + 1];
                loop {
                    if inc.iter().sum::<u32>() == r - 1 {
                        let sigma: Vec<u32> = inc[..k].iter().scan(0, |a, s| {
                            *a += s;
                            Some(*a)
                        }).collect();
                        assert!(validate_sigma(&sigma, k as u32, r).is_ok());
                        count += 1;
                    }
                    let Some(pos) = inc.iter().position(|&x| x < r - 1) else { break };
                    inc[pos] += 1;
                    for x in &mut inc[..pos] {
                        *x = 0;
                    }
                }
                let binom = (1..=k as u64).fold(1u64, |a, i| a * (r as u64 - 1 + i) / i);
                assert_eq!(count as u64, binom);
            }
        }
    }
}
