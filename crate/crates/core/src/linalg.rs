//! Rank computations over ℚ, ℚ(ζ) and K = ℚ(ζ)(u).
//!
//! Matrices over K arrive with Laurent polynomial entries. The exact rank
//! is found by choosing rows that are independent at a sample point u₀
//! (independence at a point implies independence over K), computing the
//! exact kernel of those rows over K, and checking that every remaining row
//! annihilates that kernel. A row that does not is independent of the chosen
//! ones and joins them; the loop ends with a certified rank.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::{CLaurent, CycloNum, Field, Rational, Ring, UniRatFunc};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Certified rank over K.
    Exact,
    /// Rank after evaluating u at a seeded random rational; a lower bound
    /// that equals the exact rank for all but finitely many points.
    Probe { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub certified: bool,
    /// Rank at the sample point.
    pub probe_rank: usize,
    pub sample_point: Rational,
}

/// Incremental row echelon form: keeps a reduced basis and tells whether
/// each offered row enlarges the span.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; returns the remainder.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(*p) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        v
    }

    /// Add `v` if it is independent of the current rows.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        let v: Vec<F> = v.iter().map(|x| x.mul(&inv)).collect();
        // Keep earlier rows reduced at the new pivot.
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    /// Basis of {x : row · x = 0 for every row}.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![F::zero(); self.ncols];
            x[free] = F::one();
            for (p, row) in &self.rows {
                x[*p] = row[free].neg();
            }
            out.push(x);
        }
        out
    }
}

/// Rank over a field by elimination.
pub fn rank_field<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r.clone());
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Indices of a maximal independent subset of rows, chosen greedily.
pub fn independent_rows<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<usize> {
    let mut e = Echelon::new(ncols);
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if e.rank() == ncols {
            break;
        }
        if e.insert(r.clone()) {
            out.push(i);
        }
    }
    out
}

/// Kernel basis of a matrix over a field.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r.clone());
    }
    e.kernel()
}

/// A sample point a/b with 2 ≤ a ≤ 97 and 1 ≤ b ≤ 13, avoiding ±1.
pub fn sample_point(seed: u64) -> Rational {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a: i64 = rng.gen_range(2..=97);
        let b: i64 = rng.gen_range(1..=13);
        let x = Rational::frac(a, b);
        if !x.abs().is_one() {
            return x;
        }
    }
}

pub fn eval_rows(rows: &[Vec<CLaurent>], u0: &Rational) -> Vec<Vec<CycloNum>> {
    let x = CycloNum::Rat(u0.clone());
    rows.iter().map(|r| r.iter().map(|e| e.eval(&x)).collect()).collect()
}

/// Σ a_i b_i for Laurent vectors.
pub fn laurent_dot(a: &[CLaurent], b: &[CLaurent]) -> CLaurent {
    let mut acc = CLaurent::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.mul(y));
        }
    }
    acc
}

/// Multiply a vector over K by the lcm of its denominators.
pub fn clear_vector(v: &[UniRatFunc]) -> Vec<CLaurent> {
    let mut l = crate::scalars::CPoly::one();
    for c in v {
        let g = l.gcd_field(c.denom());
        l = l.mul(&c.denom().div_rem(&g).0);
    }
    v.iter().map(|c| CLaurent::from_upoly(&c.numer().mul(&l.div_rem(c.denom()).0))).collect()
}

/// Rank over K of a matrix with Laurent polynomial entries.
pub fn laurent_rank(rows: &[Vec<CLaurent>], ncols: usize, mode: RankMode) -> Result<RankReport, Error> {
    let seed = match mode {
        RankMode::Probe { seed } => seed,
        RankMode::Exact => 0,
    };
    let u0 = sample_point(seed);
    let at = eval_rows(rows, &u0);
    let mut chosen = independent_rows(&at, ncols);
    let probe_rank = chosen.len();
    if let RankMode::Probe { .. } = mode {
        return Ok(RankReport { rank: probe_rank, certified: probe_rank == ncols, probe_rank, sample_point: u0 });
    }
    loop {
        if chosen.len() == ncols {
            return Ok(RankReport { rank: ncols, certified: true, probe_rank, sample_point: u0 });
        }
        let mut e: Echelon<UniRatFunc> = Echelon::new(ncols);
        for &i in &chosen {
            let row: Vec<UniRatFunc> = rows[i].iter().map(UniRatFunc::from_laurent).collect();
            if !e.insert(row) {
                return Err(Error::Internal("rows independent at a point are dependent over K".into()));
            }
        }
        let kernel: Vec<Vec<CLaurent>> = e.kernel().iter().map(|v| clear_vector(v)).collect();
        let escaped = (0..rows.len())
            .filter(|i| !chosen.contains(i))
            .find(|&i| kernel.iter().any(|v| !laurent_dot(&rows[i], v).is_zero()));
        match escaped {
            Some(i) => chosen.push(i),
            None => return Ok(RankReport { rank: chosen.len(), certified: true, probe_rank, sample_point: u0 }),
        }
    }
}

/// Exact rank of an integer (or rational) matrix.
pub fn rational_rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rank_field(rows, ncols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(low: i64, c: &[i64]) -> CLaurent {
        CLaurent::new(low, c.iter().map(|&x| CycloNum::from_i64(x)).collect())
    }

    #[test]
    fn rational_elimination() {
        let r = |v: &[i64]| v.iter().map(|&x| Rational::from_i64(x)).collect::<Vec<_>>();
        let m = vec![r(&[1, 2, 3]), r(&[2, 4, 6]), r(&[0, 1, 1])];
        assert_eq!(rank_field(&m, 3), 2);
        assert_eq!(independent_rows(&m, 3), vec![0, 2]);
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&k[0]).fold(Rational::zero(), |a, (x, y)| a.add(&x.mul(y)));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn laurent_rank_sees_through_bad_points() {
        // Row 2 equals row 1 times (u − u0) at the sample point, so the probe
        // at u0 misses it; the exact rank is still 2.
        let u0 = sample_point(0);
        let (a, b) = (u0.numer().to_i64().unwrap(), u0.denom().to_i64().unwrap());
        let rows = vec![vec![l(0, &[1]), l(0, &[1])], vec![l(0, &[-a, b]), l(0, &[-a, b, 0])], vec![l(0, &[-a, b]), l(0, &[0])]];
        // rows[1] = (b u − a)·rows[0]; rows[2] is independent but vanishes at u0.
        let rep = laurent_rank(&rows, 2, RankMode::Exact).unwrap();
        assert_eq!(rep.probe_rank, 1);
        assert_eq!(rep.rank, 2);
        assert!(rep.certified);
        let p = laurent_rank(&rows, 2, RankMode::Probe { seed: 0 }).unwrap();
        assert_eq!(p.rank, 1);
    }

    #[test]
    fn kernel_certificate() {
        // [1, u] and [u^-1, 1] are proportional.
        let rows = vec![vec![l(0, &[1]), l(1, &[1])], vec![l(-1, &[1]), l(0, &[1])]];
        let rep = laurent_rank(&rows, 2, RankMode::Exact).unwrap();
        assert_eq!(rep.rank, 1);
    }
}
