//! The wheel-condition space J^{(k,r)}_{n,d}: substitutions, membership,
//! its dimension by exact rank, and the span I of specialized admissible
//! Macdonald polynomials.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::linalg::{laurent_rank, RankMode, RankReport};
use crate::macdonald::{apply_op, specialize_p, MacOp, MacdonaldTable, Route};
use crate::partitions::{enumerate_admissible, enumerate_partitions, Partition};
use crate::scalars::param::laurent_from_map;
use crate::scalars::{CLaurent, CycloNum, ParameterSpec, Ring, UniRatFunc};
use crate::symfunc::{
    clear_denominators, distinct_permutations, restrict_derivative, wheel_free_monomial, wheel_substitute_laurent,
    wheel_weight, SymPoly,
};
use crate::Error;

/// All weakly increasing σ ∈ {0, …, r−1}^k (cumulative exponents).
pub fn wheel_substitutions(k: u32, r: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    fn rec(k: usize, r: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for s in lo..r {
            cur.push(s);
            rec(k, r, cur, out);
            cur.pop();
        }
    }
    rec(k as usize, r, &mut cur, &mut out);
    out
}

/// Wheel condition for Laurent coefficients. Holds vacuously when there are
/// fewer than k+1 variables.
pub fn satisfies_wheel_laurent(f: &SymPoly<CLaurent>, p: &ParameterSpec) -> Result<bool, Error> {
    if f.n() <= p.k() as usize || f.is_zero() {
        return Ok(true);
    }
    for sigma in wheel_substitutions(p.k(), p.r()) {
        if !wheel_substitute_laurent(f, &sigma, p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff f vanishes at every wheel substitution.
pub fn satisfies_wheel(f: &SymPoly<UniRatFunc>, p: &ParameterSpec) -> Result<bool, Error> {
    satisfies_wheel_laurent(&clear_denominators(f).1, p)
}

/// Linear constraints cutting out J inside Λ_{n,d}, one row per
/// (σ, free monomial), columns indexed by `columns`.
#[derive(Clone, Debug)]
pub struct ConstraintMatrix {
    pub columns: Vec<Partition>,
    pub rows: Vec<Vec<CLaurent>>,
    /// (σ, exponents of x_1, x_{k+2}, …, x_n) for each row.
    pub provenance: Vec<(Vec<u32>, Vec<u32>)>,
}

impl ConstraintMatrix {
    /// Rows for the given substitutions. Rows for free monomials that differ
    /// only by permuting x_{k+2}, …, x_n coincide, so only the one with a
    /// weakly decreasing tail is kept.
    pub fn build(p: &ParameterSpec, n: usize, d: u32, sigmas: &[Vec<u32>]) -> Result<ConstraintMatrix, Error> {
        let columns = enumerate_partitions(n, d);
        let k = p.k() as usize;
        let mut rows = Vec::new();
        let mut provenance = Vec::new();
        if n <= k {
            return Ok(ConstraintMatrix { columns, rows, provenance });
        }
        for sigma in sigmas {
            crate::symfunc::validate_sigma(sigma, p.k(), p.r())?;
            let mut acc: BTreeMap<Vec<u32>, Vec<BTreeMap<i64, CycloNum>>> = BTreeMap::new();
            for (c, lam) in columns.iter().enumerate() {
                for alpha in distinct_permutations(&lam.padded(n)) {
                    if alpha[k + 1..].windows(2).any(|w| w[0] < w[1]) {
                        continue;
                    }
                    let (a, b) = wheel_weight(&alpha, sigma);
                    let (z, e) = p.map_monomial(a, b);
                    let row = acc.entry(wheel_free_monomial(&alpha, k)).or_insert_with(|| vec![BTreeMap::new(); columns.len()]);
                    let slot = row[c].entry(e).or_insert_with(CycloNum::zero);
                    *slot = slot.add(&p.zeta_pow(z));
                }
            }
            for (beta, row) in acc {
                let row: Vec<CLaurent> = row.into_iter().map(|m| laurent_from_map(m.into_iter().filter(|(_, c)| !c.is_zero()).collect())).collect();
                if row.iter().all(|x| x.is_zero()) {
                    continue;
                }
                rows.push(row);
                provenance.push((sigma.clone(), beta));
            }
        }
        Ok(ConstraintMatrix { columns, rows, provenance })
    }

    pub fn rank(&self, mode: RankMode) -> Result<RankReport, Error> {
        laurent_rank(&self.rows, self.columns.len(), mode)
    }
}

/// Outcome of a dimension computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub dim: usize,
    pub ambient: usize,
    pub certified: bool,
}

/// dim_K J^{(k,r)}_{n,d}.
pub fn dim_j(p: &ParameterSpec, n: usize, d: u32, mode: RankMode) -> Result<DimReport, Error> {
    let m = ConstraintMatrix::build(p, n, d, &wheel_substitutions(p.k(), p.r()))?;
    let ambient = m.columns.len();
    if m.rows.is_empty() {
        return Ok(DimReport { dim: ambient, ambient, certified: true });
    }
    let rep = m.rank(mode)?;
    Ok(DimReport { dim: ambient - rep.rank, ambient, certified: rep.certified })
}

/// Specialized P_λ for every admissible λ of size d.
pub fn basis_i(p: &ParameterSpec, n: usize, d: u32, table: &mut MacdonaldTable) -> Result<Vec<SymPoly<UniRatFunc>>, Error> {
    enumerate_admissible(p.k() as usize, p.r(), n, d).iter().map(|l| specialize_p(l, n, p, table)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub k: u32,
    pub r: u32,
    pub n: usize,
    pub d: u32,
    pub dim_j: usize,
    pub admissible_count: usize,
    pub inclusion_ok: bool,
    pub dims_equal: bool,
    pub certified: bool,
    pub witness_failures: Vec<String>,
}

impl Theorem1Report {
    pub fn ok(&self) -> bool {
        self.inclusion_ok && self.dims_equal
    }
}

/// Check that every specialized admissible P_λ satisfies the wheel
/// condition and that dim J equals the number of admissible partitions.
pub fn verify_theorem1(
    p: &ParameterSpec,
    n: usize,
    d: u32,
    mode: RankMode,
    table: &mut MacdonaldTable,
) -> Result<Theorem1Report, Error> {
    let adm = enumerate_admissible(p.k() as usize, p.r(), n, d);
    let mut witness_failures = Vec::new();
    for lam in &adm {
        match specialize_p(lam, n, p, table) {
            Ok(f) => {
                if !satisfies_wheel(&f, p)? {
                    witness_failures.push(format!("{lam:?}: wheel condition fails"));
                }
            }
            Err(Error::Pole { what }) => witness_failures.push(format!("{lam:?}: pole in {what}")),
            Err(e) => return Err(e),
        }
    }
    let dim = dim_j(p, n, d, mode)?;
    Ok(Theorem1Report {
        k: p.k(),
        r: p.r(),
        n,
        d,
        dim_j: dim.dim,
        admissible_count: adm.len(),
        inclusion_ok: witness_failures.is_empty(),
        dims_equal: dim.dim == adm.len(),
        certified: dim.certified,
        witness_failures,
    })
}

/// The operators checked for stability: D^ρ for 1 ≤ ρ ≤ n and E_0, E_1, E_2.
pub fn stability_operators(n: usize) -> Vec<MacOp> {
    (1..=n).map(MacOp::D).chain((0..=2).map(MacOp::E)).collect()
}

/// Apply each operator (specialized to K) to f and test the wheel
/// condition on the result; returns the first operator that breaks it.
pub fn stability_failure(f: &SymPoly<CLaurent>, p: &ParameterSpec, ops: &[MacOp]) -> Result<Option<MacOp>, Error> {
    for &op in ops {
        let g = apply_op(f, op, Route::Alternant, |e| p.specialize_poly(e))?.output;
        if !satisfies_wheel_laurent(&g, p)? {
            return Ok(Some(op));
        }
    }
    Ok(None)
}

/// True iff every D^ρ and E_m (m ≤ 2) keeps f inside J.
pub fn verify_stability(f: &SymPoly<UniRatFunc>, p: &ParameterSpec) -> Result<bool, Error> {
    let (_, g) = clear_denominators(f);
    Ok(stability_failure(&g, p, &stability_operators(f.n()))?.is_none())
}

/// A random Laurent polynomial with small integer coefficients.
pub fn random_laurent<R: Rng>(rng: &mut R) -> CLaurent {
    let low = rng.gen_range(-2..=2);
    let len = rng.gen_range(1..=3);
    CLaurent::new(low, (0..len).map(|_| CycloNum::from_i64(rng.gen_range(-5..=5))).collect())
}

/// Σ c_i f_i with random Laurent c_i.
pub fn random_combination<R: Rng>(basis: &[SymPoly<CLaurent>], n: usize, rng: &mut R) -> SymPoly<CLaurent> {
    let mut acc = SymPoly::zero(n);
    for f in basis {
        acc = acc.add(&f.scale(&random_laurent(rng))).expect("same number of variables");
    }
    acc
}

/// ρ(∂_n^j P_λ) at the specialization satisfies the wheel condition in n−1
/// variables for every j ≤ j_max.
pub fn verify_rho_inclusion(
    lambda: &Partition,
    p: &ParameterSpec,
    n: usize,
    j_max: u32,
    table: &mut MacdonaldTable,
) -> Result<bool, Error> {
    if n < p.k() as usize + 2 {
        return Err(Error::InvalidParameter(format!("need at least {} variables", p.k() + 2)));
    }
    let (_, f) = clear_denominators(&specialize_p(lambda, n, p, table)?);
    for j in 0..=j_max {
        if !satisfies_wheel_laurent(&restrict_derivative(&f, j)?, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::univariate::parse_unirat;

    fn spec(k: u32, r: u32) -> ParameterSpec {
        ParameterSpec::new(k, r).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn substitution_lists() {
        assert_eq!(wheel_substitutions(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(wheel_substitutions(1, 3), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(wheel_substitutions(1, 2).len(), 2);
        assert_eq!(wheel_substitutions(3, 3).len(), 10);
    }

    #[test]
    fn membership_examples() {
        let p = spec(1, 2);
        let c = |s: &str| parse_unirat(s, 1).unwrap();
        let mut f = SymPoly::zero(2);
        f.add_term(part("2"), c("u")).unwrap();
        f.add_term(part("1,1"), c("-(1 + u^2)")).unwrap();
        assert!(satisfies_wheel(&f, &p).unwrap());
        let g = SymPoly::monomial(2, part("2"), UniRatFunc::one()).unwrap();
        assert!(!satisfies_wheel(&g, &p).unwrap());
        assert!(satisfies_wheel(&SymPoly::zero(2), &p).unwrap());
        // Fewer than k+1 variables: nothing to check.
        assert!(satisfies_wheel(&SymPoly::monomial(1, part("3"), UniRatFunc::one()).unwrap(), &p).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let p = spec(1, 2);
        assert_eq!(dim_j(&p, 2, 2, RankMode::Exact).unwrap().dim, 1);
        assert_eq!(dim_j(&p, 2, 1, RankMode::Exact).unwrap().dim, 0);
        assert_eq!(dim_j(&spec(2, 3), 2, 4, RankMode::Exact).unwrap().dim, 3);
        let mut t = MacdonaldTable::new(2);
        assert_eq!(basis_i(&p, 2, 2, &mut t).unwrap().len(), 1);
        assert!(basis_i(&p, 2, 1, &mut t).unwrap().is_empty());
        let mut t1 = MacdonaldTable::new(1);
        for d in 0..4 {
            let b = basis_i(&p, 1, d, &mut t1).unwrap();
            assert_eq!(b, vec![SymPoly::monomial(1, Partition::from_unsorted(vec![d]), UniRatFunc::one()).unwrap()]);
        }
    }

    #[test]
    fn theorem_small() {
        for (k, r, n, d) in [(1, 2, 2, 2), (1, 2, 1, 3), (1, 3, 3, 4), (2, 2, 3, 4), (1, 2, 3, 5)] {
            let mut t = MacdonaldTable::new(n);
            let rep = verify_theorem1(&spec(k, r), n, d, RankMode::Exact, &mut t).unwrap();
            assert!(rep.ok(), "{rep:?}");
        }
    }

    #[test]
    fn r2_reduces_to_first_substitution() {
        for (k, n, d) in [(1, 3, 4), (2, 3, 5), (1, 4, 4)] {
            let p = spec(k, 2);
            let all = ConstraintMatrix::build(&p, n, d, &wheel_substitutions(k, 2)).unwrap();
            let first = ConstraintMatrix::build(&p, n, d, &[vec![0; k as usize]]).unwrap();
            assert_eq!(all.rank(RankMode::Exact).unwrap().rank, first.rank(RankMode::Exact).unwrap().rank);
        }
    }

    #[test]
    fn rank_ignores_row_order_and_duplicates() {
        let p = spec(1, 3);
        let mut sig = wheel_substitutions(1, 3);
        let a = ConstraintMatrix::build(&p, 3, 5, &sig).unwrap().rank(RankMode::Exact).unwrap().rank;
        sig.reverse();
        sig.push(vec![1]);
        let b = ConstraintMatrix::build(&p, 3, 5, &sig).unwrap().rank(RankMode::Exact).unwrap().rank;
        assert_eq!(a, b);
    }

    #[test]
    fn stability_and_rho() {
        let p = spec(1, 2);
        let mut t = MacdonaldTable::new(2);
        let b = basis_i(&p, 2, 2, &mut t).unwrap();
        assert!(verify_stability(&b[0], &p).unwrap());
        assert!(verify_stability(&SymPoly::zero(2), &p).unwrap());
        let mut t3 = MacdonaldTable::new(3);
        for lam in ["4,2", "5,3", "6"] {
            assert!(verify_rho_inclusion(&part(lam), &p, 3, 2, &mut t3).unwrap(), "{lam}");
        }
        // (2,0,0) is not admissible in three variables: ρ(∂_3 P_(2)) is a
        // nonzero multiple of m_(1), which is not in J_{2,1}.
        assert!(!verify_rho_inclusion(&part("2"), &p, 3, 2, &mut t3).unwrap());
        let p13 = spec(1, 3);
        for lam in ["6,3", "7,3"] {
            assert!(part(lam).is_admissible(1, 3, 3));
            assert!(verify_rho_inclusion(&part(lam), &p13, 3, 2, &mut t3).unwrap(), "{lam}");
        }
    }
}
