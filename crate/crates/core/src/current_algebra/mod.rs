//! Commuting currents e(z) = Σ e_i z^i: the relations dual to the wheel
//! condition, graded dimensions of the quotients, reduction to admissible
//! monomials, and the character combinatorics of the W-spaces.

pub mod characters;
pub mod wspace;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Display;

use serde_json::{json, Value};

use crate::linalg::{laurent_rank, rational_rank, RankMode};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalars::{BiRatFunc, CLaurent, Field, ParameterSpec, Rational, Ring};
use crate::symfunc::{distinct_permutations, wheel_weight};
use crate::wheel_ideal::{wheel_substitutions, DimReport};
use crate::Error;

pub use characters::{chi_c, enumerate_b_profiles, enumerate_c_sequences, verify_recursion, CharSeries};
pub use wspace::{verify_prop302, w_space_dim, Prop302Report};

/// Σ c_λ e_λ with e_λ = e_{λ_1}⋯e_{λ_n}; λ has at most `n` nonzero parts and
/// the remaining factors are e_0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentVector<C> {
    n: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> CurrentVector<C> {
    pub fn zero(n: usize) -> Self {
        CurrentVector { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        assert!(lambda.length() <= self.n, "{lambda:?} has more than {} factors", self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// Multiply by the monomial e_ν.
    pub fn mul_monomial(&self, nu: &Partition, nu_len: usize) -> Self {
        let mut out = CurrentVector::zero(self.n + nu_len);
        for (l, c) in &self.terms {
            out.add_term(merge(l, nu), c.clone());
        }
        out
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> CurrentVector<D> {
        let mut out = CurrentVector::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }
}

impl<C: Ring + Display> CurrentVector<C> {
    pub fn terms_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| json!({"partition": l.to_padded_string(self.n), "coefficient": c.to_string()}))
                .collect(),
        )
    }
}

/// The multiset union of two partitions.
pub fn merge(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::from_unsorted(v)
}

/// ν = (ν_0, …, ν_{r−2}) with Σ ν_a = k+1.
pub fn residue_profiles(k: u32, r: u32) -> Vec<Vec<u32>> {
    fn rec(slots: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == slots {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(slots, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec((r - 1) as usize, k + 1, &mut Vec::new(), &mut out);
    out
}

/// Counts of the parts of μ (padded to k+1) in each residue class mod r−1.
pub fn residue_profile(mu: &Partition, k: u32, r: u32) -> Vec<u32> {
    let mut nu = vec![0; (r - 1) as usize];
    for v in mu.padded(k as usize + 1) {
        nu[(v % (r - 1)) as usize] += 1;
    }
    nu
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |a, i| a.mul(&Rational::from_i64(i)))
}

fn validate_profile(nu: &[u32], k: u32, r: u32) -> Result<(), Error> {
    if nu.len() != (r - 1) as usize || nu.iter().sum::<u32>() != k + 1 {
        return Err(Error::InvalidParameter(format!("profile {nu:?} must have {} entries summing to {}", r - 1, k + 1)));
    }
    Ok(())
}

/// The z^d coefficient of ∏_a e_{(a)}(z)^{ν_a}, where e_{(a)}(z) collects
/// the e_i with i ≡ a mod r−1: Σ_μ C_μ e_μ over μ ∈ π_{k+1,d} with residue
/// profile ν and C_μ = ∏_a ν_a! / ∏_v mult_μ(v)!.
pub fn relation_rootofunity(d: u32, nu: &[u32], k: u32, r: u32) -> Result<CurrentVector<Rational>, Error> {
    validate_profile(nu, k, r)?;
    let n = k as usize + 1;
    let mut out = CurrentVector::zero(n);
    for mu in enumerate_partitions(n, d) {
        if residue_profile(&mu, k, r) != nu {
            continue;
        }
        let mut c = nu.iter().fold(Rational::one(), |a, &x| a.mul(&factorial(x as usize)));
        let padded = mu.padded(n);
        let mut i = 0;
        while i < n {
            let j = (i..n).find(|&j| padded[j] != padded[i]).unwrap_or(n);
            c = c.div(&factorial(j - i)).unwrap();
            i = j;
        }
        out.add_term(mu, c);
    }
    Ok(out)
}

/// The z^d coefficient of e(z) e(c_1 z) ⋯ e(c_k z) with c_i = t^i q^{σ_i},
/// over ℚ(q, t): Σ_μ m_μ(1, c_1, …, c_k) e_μ.
pub fn relation_generic_qt(d: u32, sigma: &[u32], k: u32, r: u32) -> Result<CurrentVector<BiRatFunc>, Error> {
    crate::symfunc::validate_sigma(sigma, k, r)?;
    let n = k as usize + 1;
    let mut out = CurrentVector::zero(n);
    for mu in enumerate_partitions(n, d) {
        let mut c = BiRatFunc::zero();
        for alpha in distinct_permutations(&mu.padded(n)) {
            let (a, b) = wheel_weight(&alpha, sigma);
            c = c.add(&BiRatFunc::laurent_monomial(a, b));
        }
        out.add_term(mu, c);
    }
    Ok(out)
}

/// The same relation specialized to K.
pub fn relation_generic(d: u32, sigma: &[u32], p: &ParameterSpec) -> Result<CurrentVector<CLaurent>, Error> {
    crate::symfunc::validate_sigma(sigma, p.k(), p.r())?;
    let n = p.k() as usize + 1;
    let mut out = CurrentVector::zero(n);
    for mu in enumerate_partitions(n, d) {
        let mut c = CLaurent::zero();
        for alpha in distinct_permutations(&mu.padded(n)) {
            let (a, b) = wheel_weight(&alpha, sigma);
            let (z, e) = p.map_monomial(a, b);
            c = c.add(&CLaurent::monomial(p.zeta_pow(z), e));
        }
        out.add_term(mu, c);
    }
    Ok(out)
}

/// Which relations define the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    /// t = 1, q a primitive (r−1)-th root of unity; relations over ℚ.
    RootOfUnity,
    /// The resonant specialization over K.
    Resonant(ParameterSpec),
}

/// Rows e_ν · R for every relation R of internal degree d′ ≤ d and
/// ν ∈ π_{n−k−1, d−d′}, as coefficient vectors on π_{n,d}.
pub fn ideal_rows<C: Ring>(
    n: usize,
    d: u32,
    k: u32,
    relations: impl Fn(u32) -> Result<Vec<CurrentVector<C>>, Error>,
) -> Result<(Vec<Partition>, Vec<Vec<C>>), Error> {
    let columns = enumerate_partitions(n, d);
    let index: BTreeMap<&Partition, usize> = columns.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut rows = Vec::new();
    if n < k as usize + 1 {
        return Ok((columns.clone(), rows));
    }
    let rest = n - k as usize - 1;
    for dp in 0..=d {
        let rels = relations(dp)?;
        for nu in enumerate_partitions(rest, d - dp) {
            for rel in &rels {
                if rel.is_zero() {
                    continue;
                }
                let mut row = vec![C::zero(); columns.len()];
                for (l, c) in rel.mul_monomial(&nu, rest).terms() {
                    row[index[l]] = c.clone();
                }
                rows.push(row);
            }
        }
    }
    Ok((columns, rows))
}

pub(crate) fn rootofunity_relations(k: u32, r: u32) -> impl Fn(u32) -> Result<Vec<CurrentVector<Rational>>, Error> {
    move |dp| residue_profiles(k, r).iter().map(|nu| relation_rootofunity(dp, nu, k, r)).collect()
}

pub(crate) fn resonant_relations(p: &ParameterSpec) -> impl Fn(u32) -> Result<Vec<CurrentVector<CLaurent>>, Error> + '_ {
    move |dp| wheel_substitutions(p.k(), p.r()).iter().map(|s| relation_generic(dp, s, p)).collect()
}

pub(crate) fn check_spec(p: &ParameterSpec, k: u32, r: u32) -> Result<(), Error> {
    if (p.k(), p.r()) != (k, r) {
        return Err(Error::InvalidParameter("specialization does not match (k, r)".into()));
    }
    Ok(())
}

/// dim of the (n, d) component of the quotient by the chosen relations.
pub fn quotient_dim(k: u32, r: u32, n: usize, d: u32, rel: &Relations, mode: RankMode) -> Result<DimReport, Error> {
    match rel {
        Relations::RootOfUnity => {
            let (cols, rows) = ideal_rows(n, d, k, rootofunity_relations(k, r))?;
            let rank = rational_rank(&rows, cols.len());
            Ok(DimReport { dim: cols.len() - rank, ambient: cols.len(), certified: true })
        }
        Relations::Resonant(p) => {
            check_spec(p, k, r)?;
            let (cols, rows) = ideal_rows(n, d, k, resonant_relations(p))?;
            if rows.is_empty() {
                return Ok(DimReport { dim: cols.len(), ambient: cols.len(), certified: true });
            }
            let rep = laurent_rank(&rows, cols.len(), mode)?;
            Ok(DimReport { dim: cols.len() - rep.rank, ambient: cols.len(), certified: rep.certified })
        }
    }
}

/// The unique μ in the support of a nonempty root-of-unity relation with
/// μ_1 − μ_{k+1} ≤ r−1, if it is unique.
pub fn minimal_support_element(rel: &CurrentVector<Rational>, k: u32, r: u32) -> Option<Partition> {
    let n = k as usize + 1;
    let mut tight = rel.terms().keys().filter(|m| m.part(1) - m.padded(n)[n - 1] < r);
    let first = tight.next()?.clone();
    if tight.next().is_some() {
        return None;
    }
    Some(first)
}

/// Express e_λ modulo the root-of-unity relations as a combination of
/// admissible monomials. The largest non-admissible term is always reduced
/// first, at its leftmost violating window.
pub fn reduce_to_admissible(lambda: &Partition, k: u32, r: u32, n: usize) -> Result<CurrentVector<Rational>, Error> {
    if lambda.length() > n {
        return Err(Error::InvalidParameter(format!("{lambda:?} has more than {n} parts")));
    }
    let ku = k as usize;
    let mut acc = CurrentVector::zero(n);
    acc.add_term(lambda.clone(), Rational::one());
    loop {
        let Some(bad) = acc.terms().keys().rev().find(|l| !l.is_admissible(ku, r, n)).cloned() else {
            return Ok(acc);
        };
        let c = acc.coeff(&bad);
        acc.add_term(bad.clone(), c.neg());
        let padded = bad.padded(n);
        let i = (0..n - ku).find(|&i| padded[i] - padded[i + ku] < r).unwrap();
        let mu = Partition::from_unsorted(padded[i..=i + ku].to_vec());
        let rest = Partition::from_unsorted(padded[..i].iter().chain(&padded[i + ku + 1..]).copied().collect());
        let nu = residue_profile(&mu, k, r);
        let rel = relation_rootofunity(mu.size(), &nu, k, r)?;
        // Keys are in increasing lex order, so μ must come first.
        if rel.terms().keys().next() != Some(&mu) {
            return Err(Error::Internal(format!("{mu:?} is not the lex-minimal element of its relation")));
        }
        let cm = rel.coeff(&mu);
        for (other, co) in rel.terms() {
            if *other == mu {
                continue;
            }
            let w = c.mul(co).div(&cm).unwrap().neg();
            acc.add_term(merge(&rest, other), w);
        }
    }
}

/// The reduction is sound when e_λ − reduce(λ) lies in the span of the
/// relation rows; checked by comparing ranks.
pub fn reduction_in_ideal(lambda: &Partition, k: u32, r: u32, n: usize) -> Result<bool, Error> {
    let d = lambda.size();
    let red = reduce_to_admissible(lambda, k, r, n)?;
    let (cols, mut rows) = ideal_rows(n, d, k, rootofunity_relations(k, r))?;
    let base = rational_rank(&rows, cols.len());
    let mut v: Vec<Rational> = cols.iter().map(|c| red.coeff(c).neg()).collect();
    let i = cols.iter().position(|c| c == lambda).unwrap();
    v[i] = v[i].add(&Rational::one());
    rows.push(v);
    Ok(rational_rank(&rows, cols.len()) == base)
}

/// `{degree, profile, terms}` for a relation.
pub fn relation_json<C: Ring + Display>(degree: u32, profile: &[u32], rel: &CurrentVector<C>) -> Value {
    json!({"degree": degree, "profile": profile, "terms": rel.terms_json()})
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn rootofunity_examples() {
        let r0 = relation_rootofunity(0, &[2], 1, 2).unwrap();
        assert_eq!(r0.terms().len(), 1);
        assert_eq!(r0.coeff(&Partition::empty()), q(1));
        assert_eq!(relation_rootofunity(1, &[2], 1, 2).unwrap().coeff(&p("1")), q(2));
        let r2 = relation_rootofunity(2, &[2], 1, 2).unwrap();
        assert_eq!(r2.coeff(&p("1,1")), q(1));
        assert_eq!(r2.coeff(&p("2")), q(2));
        assert_eq!(r2.terms().len(), 2);
        // Empty K_d(ν): two odd parts cannot sum to 3.
        assert!(relation_rootofunity(3, &[0, 2], 1, 3).unwrap().is_zero());
        assert!(relation_rootofunity(3, &[1], 1, 3).is_err());
    }

    #[test]
    fn generic_examples() {
        let r1 = relation_generic_qt(1, &[0], 1, 2).unwrap();
        assert_eq!(r1.coeff(&p("1")), "1 + t".parse().unwrap());
        let r2 = relation_generic_qt(2, &[0], 1, 2).unwrap();
        assert_eq!(r2.coeff(&p("2")), "1 + t^2".parse().unwrap());
        assert_eq!(r2.coeff(&p("1,1")), "t".parse().unwrap());
        let r0 = relation_generic_qt(0, &[0, 1], 2, 3).unwrap();
        assert!(r0.coeff(&Partition::empty()).is_one());
        // Specialized coefficients agree with specializing the generic ones.
        let spec = ParameterSpec::new(2, 3).unwrap();
        for s in wheel_substitutions(2, 3) {
            let g = relation_generic_qt(4, &s, 2, 3).unwrap();
            let k = relation_generic(4, &s, &spec).unwrap();
            for (mu, c) in g.terms() {
                assert_eq!(spec.specialize_poly(c.numer()), k.coeff(mu));
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let ru = Relations::RootOfUnity;
        assert_eq!(quotient_dim(1, 2, 2, 2, &ru, RankMode::Exact).unwrap().dim, 1);
        assert_eq!(quotient_dim(1, 2, 2, 1, &ru, RankMode::Exact).unwrap().dim, 0);
        assert_eq!(quotient_dim(2, 3, 2, 4, &ru, RankMode::Exact).unwrap().dim, 3);
        let g = Relations::Resonant(ParameterSpec::new(1, 2).unwrap());
        assert_eq!(quotient_dim(1, 2, 2, 2, &g, RankMode::Exact).unwrap().dim, 1);
    }

    #[test]
    fn reduction_examples() {
        let red = reduce_to_admissible(&p("1,1"), 1, 2, 2).unwrap();
        assert_eq!(red.terms().len(), 1);
        assert_eq!(red.coeff(&p("2")), q(-2));
        let red = reduce_to_admissible(&p("2,2"), 1, 2, 2).unwrap();
        assert_eq!(red.coeff(&p("3,1")), q(-2));
        assert_eq!(red.coeff(&p("4")), q(-2));
        assert_eq!(red.terms().len(), 2);
        let adm = reduce_to_admissible(&p("4"), 1, 2, 2).unwrap();
        assert_eq!(adm.coeff(&p("4")), q(1));
        for lam in enumerate_partitions(3, 6) {
            assert!(reduction_in_ideal(&lam, 1, 3, 3).unwrap(), "{lam:?}");
        }
    }

    #[test]
    fn minimal_elements_are_unique_and_lex_first() {
        for k in 1..=3 {
            for r in 2..=4 {
                for nu in residue_profiles(k, r) {
                    for d in 0..=12 {
                        let rel = relation_rootofunity(d, &nu, k, r).unwrap();
                        if rel.is_zero() {
                            continue;
                        }
                        let m = minimal_support_element(&rel, k, r).expect("unique tight element");
                        assert_eq!(rel.terms().keys().next(), Some(&m));
                        assert!(rel.terms().values().all(|c| c.is_integer() && c.signum() > 0));
                    }
                }
            }
        }
    }
}
