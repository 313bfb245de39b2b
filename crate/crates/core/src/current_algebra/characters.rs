//! Degree sequences a = (a_0, a_1, …) with bounded window sums and prefix
//! sums, and their generating functions in (v, z).

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::Error;

/// (b_0, …, b_{r−2}) weakly increasing with entries in [0, k].
pub fn validate_b(b: &[u32], k: u32, r: u32) -> Result<(), Error> {
    if b.len() != (r - 1) as usize || b.windows(2).any(|w| w[0] > w[1]) || b.iter().any(|&x| x > k) {
        return Err(Error::InvalidParameter(format!(
            "profile {b:?} must be weakly increasing with {} entries in [0, {k}]",
            r - 1
        )));
    }
    Ok(())
}

/// Every admissible b-profile for (k, r).
pub fn enumerate_b_profiles(k: u32, r: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in cur.last().copied().unwrap_or(0)..=k {
            cur.push(x);
            rec(len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec((r - 1) as usize, k, &mut Vec::new(), &mut out);
    out
}

/// All a with Σ a_i = n, Σ i·a_i = d, every window a_i + … + a_{i+r−1} ≤ k and
/// a_0 + … + a_i ≤ b_i for i ≤ r−2. Trailing zeros are dropped.
pub fn enumerate_c_sequences(b: &[u32], k: u32, r: u32, n: u32, d: u32) -> Result<Vec<Vec<u32>>, Error> {
    validate_b(b, k, r)?;
    struct Ctx<'a> {
        b: &'a [u32],
        k: u32,
        r: usize,
        out: Vec<Vec<u32>>,
    }
    fn rec(ctx: &mut Ctx, cur: &mut Vec<u32>, n_left: u32, d_left: u32, prefix: u32) {
        let i = cur.len() as u32;
        if n_left == 0 {
            if d_left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                ctx.out.push(v);
            }
            return;
        }
        // Every remaining unit sits at position ≥ i.
        if (i as u64) * (n_left as u64) > d_left as u64 {
            return;
        }
        let start = cur.len().saturating_sub(ctx.r - 1);
        let window: u32 = cur[start..].iter().sum();
        let mut hi = n_left.min(ctx.k - window);
        if let Some(&bi) = ctx.b.get(i as usize) {
            hi = hi.min(bi - prefix);
        }
        for a in 0..=hi {
            if i * a > d_left {
                break;
            }
            cur.push(a);
            rec(ctx, cur, n_left - a, d_left - i * a, prefix + a);
            cur.pop();
        }
    }
    let mut ctx = Ctx { b, k, r: r as usize, out: Vec::new() };
    rec(&mut ctx, &mut Vec::new(), n, d, 0);
    Ok(ctx.out)
}

/// Σ c_{d,n} v^d z^n truncated to d ≤ d_max, n ≤ n_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    pub d_max: u32,
    pub n_max: u32,
    pub coefficients: BTreeMap<(u32, u32), u64>,
}

impl CharSeries {
    pub fn coeff(&self, d: u32, n: u32) -> u64 {
        self.coefficients.get(&(d, n)).copied().unwrap_or(0)
    }

    /// `{d_max, n_max, coefficients: [[d, n, c], …]}` with zero entries omitted.
    pub fn to_json(&self) -> Value {
        let c: Vec<Value> = self.coefficients.iter().filter(|(_, &c)| c > 0).map(|(&(d, n), &c)| json!([d, n, c])).collect();
        json!({"d_max": self.d_max, "n_max": self.n_max, "coefficients": c})
    }
}

/// χ^C_b(v, z) = Σ_a v^{Σ i a_i} z^{Σ a_i}.
pub fn chi_c(b: &[u32], k: u32, r: u32, d_max: u32, n_max: u32) -> Result<CharSeries, Error> {
    let mut coefficients = BTreeMap::new();
    for d in 0..=d_max {
        for n in 0..=n_max {
            coefficients.insert((d, n), enumerate_c_sequences(b, k, r, n, d)?.len() as u64);
        }
    }
    Ok(CharSeries { d_max, n_max, coefficients })
}

/// χ_b(v, z) = χ_{b_0−1, b_1, …}(v, z) + z^{b_0} χ_{b_1−b_0, …, b_{r−2}−b_0, k−b_0}(v, vz)
/// on the truncation. Requires b_0 ≥ 1.
pub fn verify_recursion(b: &[u32], k: u32, r: u32, d_max: u32, n_max: u32) -> Result<bool, Error> {
    validate_b(b, k, r)?;
    if b[0] == 0 {
        return Err(Error::InvalidParameter("the recursion needs b_0 ≥ 1".into()));
    }
    let lhs = chi_c(b, k, r, d_max, n_max)?;
    let mut lowered = b.to_vec();
    lowered[0] -= 1;
    let first = chi_c(&lowered, k, r, d_max, n_max)?;
    let mut shifted: Vec<u32> = b[1..].iter().map(|x| x - b[0]).collect();
    shifted.push(k - b[0]);
    let second = chi_c(&shifted, k, r, d_max, n_max)?;
    for d in 0..=d_max {
        for n in 0..=n_max {
            // v^{d'} z^{n'} ↦ v^{d'+n'} z^{n'+b_0}.
            let extra = match n.checked_sub(b[0]) {
                Some(np) if np <= d => second.coeff(d - np, np),
                _ => 0,
            };
            if lhs.coeff(d, n) != first.coeff(d, n) + extra {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_examples() {
        assert_eq!(enumerate_c_sequences(&[1], 1, 2, 2, 2).unwrap(), vec![vec![1, 0, 1]]);
        assert_eq!(enumerate_c_sequences(&[1], 1, 2, 0, 0).unwrap(), vec![Vec::<u32>::new()]);
        assert!(enumerate_c_sequences(&[0], 1, 2, 0, 3).unwrap().is_empty());
        // b = (0, 0): positions 0 and 1 are empty.
        for a in enumerate_c_sequences(&[0, 0], 2, 3, 2, 6).unwrap() {
            assert!(a.iter().take(2).all(|&x| x == 0), "{a:?}");
        }
        assert!(enumerate_c_sequences(&[2], 1, 2, 1, 1).is_err());
    }

    #[test]
    fn brute_force_count() {
        // Independent count: all vectors in {0..=k}^{d+1}, filtered.
        let (k, r, b) = (2u32, 3u32, [1u32, 2]);
        for n in 0..=4u32 {
            for d in 0..=6u32 {
                let len = d as usize + 1;
                let mut count = 0;
                let total = (k as usize + 1).pow(len as u32);
                for code in 0..total {
                    let mut a = vec![0u32; len];
                    let mut c = code;
                    for x in a.iter_mut() {
                        *x = (c % (k as usize + 1)) as u32;
                        c /= k as usize + 1;
                    }
                    let ok = a.iter().sum::<u32>() == n
                        && a.iter().enumerate().map(|(i, &x)| i as u32 * x).sum::<u32>() == d
                        && (0..len).all(|i| a[i..(i + r as usize).min(len)].iter().sum::<u32>() <= k)
                        && (0..b.len()).all(|i| a[..=i.min(len - 1)].iter().sum::<u32>() <= b[i]);
                    count += ok as usize;
                }
                assert_eq!(enumerate_c_sequences(&b, k, r, n, d).unwrap().len(), count, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn character_examples() {
        let c = chi_c(&[1], 1, 2, 6, 3).unwrap();
        assert_eq!(c.coeff(0, 0), 1);
        for d in 0..=6 {
            assert_eq!(c.coeff(d, 1), 1);
        }
        assert_eq!(chi_c(&[0], 1, 2, 3, 3).unwrap().coeff(0, 1), 0);
        assert!(verify_recursion(&[1], 1, 2, 6, 6).unwrap());
        assert!(verify_recursion(&[1, 2], 2, 3, 6, 6).unwrap());
        assert!(verify_recursion(&[0], 1, 2, 6, 6).is_err());
        assert_eq!(enumerate_b_profiles(2, 3), vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 2]]);
    }
}
