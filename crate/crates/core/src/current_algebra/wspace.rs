//! W_b = R / I_b: the current relations together with the monomials in
//! e_0, …, e_{r−2} whose prefix counts exceed b.

use serde::Serialize;

use super::characters::{chi_c, validate_b};
use super::{check_spec, ideal_rows, resonant_relations, rootofunity_relations, Relations};
use crate::linalg::{laurent_rank, rational_rank, RankMode};
use crate::partitions::Partition;
use crate::scalars::Ring;
use crate::wheel_ideal::DimReport;
use crate::Error;

/// True iff e_λ (λ padded to n with e_0 factors) is a multiple of a monomial
/// generator: some prefix count a_0 + … + a_i of small indices exceeds b_i.
pub fn killed_by_monomials(lambda: &Partition, n: usize, b: &[u32]) -> bool {
    let padded = lambda.padded(n);
    let mut prefix = 0;
    for (i, &bi) in b.iter().enumerate() {
        prefix += padded.iter().filter(|&&v| v == i as u32).count() as u32;
        if prefix > bi {
            return true;
        }
    }
    false
}

/// dim of the (n, d) component of W_b. Monomials divisible by a generator
/// span coordinate directions, so they are projected out and the relation
/// rows are ranked on the remaining columns.
pub fn w_space_dim(b: &[u32], k: u32, r: u32, n: usize, d: u32, rel: &Relations, mode: RankMode) -> Result<DimReport, Error> {
    validate_b(b, k, r)?;
    match rel {
        Relations::RootOfUnity => {
            let (cols, rows) = ideal_rows(n, d, k, rootofunity_relations(k, r))?;
            let (keep, rows) = project_out_killed(&cols, rows, n, b);
            let rank = rational_rank(&rows, keep);
            Ok(DimReport { dim: keep - rank, ambient: cols.len(), certified: true })
        }
        Relations::Resonant(p) => {
            check_spec(p, k, r)?;
            let (cols, rows) = ideal_rows(n, d, k, resonant_relations(p))?;
            let (keep, rows) = project_out_killed(&cols, rows, n, b);
            if rows.is_empty() || keep == 0 {
                return Ok(DimReport { dim: keep, ambient: cols.len(), certified: true });
            }
            let rep = laurent_rank(&rows, keep, mode)?;
            Ok(DimReport { dim: keep - rep.rank, ambient: cols.len(), certified: rep.certified })
        }
    }
}

fn project_out_killed<C: Ring>(cols: &[Partition], rows: Vec<Vec<C>>, n: usize, b: &[u32]) -> (usize, Vec<Vec<C>>) {
    let keep: Vec<usize> = (0..cols.len()).filter(|&i| !killed_by_monomials(&cols[i], n, b)).collect();
    let rows = rows
        .iter()
        .map(|r| keep.iter().map(|&i| r[i].clone()).collect::<Vec<_>>())
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    (keep.len(), rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop302Report {
    pub b: Vec<u32>,
    pub ok: bool,
    pub certified: bool,
    /// (d, n, dim W, χ^C coefficient) where they differ.
    pub mismatches: Vec<(u32, usize, usize, u64)>,
}

/// Compare dim (W_b)_{n,d} with the χ^C_b coefficient for all n ≤ n_max and
/// d ≤ d_max.
pub fn verify_prop302(
    b: &[u32],
    k: u32,
    r: u32,
    d_max: u32,
    n_max: usize,
    rel: &Relations,
    mode: RankMode,
) -> Result<Prop302Report, Error> {
    let chi = chi_c(b, k, r, d_max, n_max as u32)?;
    let mut mismatches = Vec::new();
    let mut certified = true;
    for n in 0..=n_max {
        for d in 0..=d_max {
            let w = w_space_dim(b, k, r, n, d, rel, mode)?;
            certified &= w.certified;
            let c = chi.coeff(d, n as u32);
            if w.dim as u64 != c {
                mismatches.push((d, n, w.dim, c));
            }
        }
    }
    Ok(Prop302Report { b: b.to_vec(), ok: mismatches.is_empty(), certified, mismatches })
}
