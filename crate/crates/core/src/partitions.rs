//! Integer partitions: orders, single-node moves, admissibility and
//! enumeration.
//!
//! A `Partition` never stores trailing zeros; operations that depend on the
//! number of variables take it explicitly and pad on demand. The derived
//! `Ord` is lexicographic on the padded sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::scalars::ParameterSpec;
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from a weakly decreasing sequence (zeros allowed anywhere at
    /// the end).
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sort arbitrary non-negative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// λ_i with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=m).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect() }
    }

    /// μ ≤ λ in dominance order (`self` = μ).
    pub fn dominance_leq(&self, lambda: &Partition) -> Result<bool, Error> {
        if self.size() != lambda.size() {
            return Err(Error::UnequalSizes(self.size(), lambda.size()));
        }
        Ok(self.dominated_by(lambda))
    }

    /// Dominance comparison for partitions already known to have equal size.
    pub fn dominated_by(&self, lambda: &Partition) -> bool {
        let n = self.length().max(lambda.length());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=n {
            a += self.part(i);
            b += lambda.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// λ^{(j)}: add a node to row `j` (1-based).
    pub fn add_node(&self, j: usize) -> Result<Partition, Error> {
        if j == 0 || (j > 1 && self.part(j - 1) <= self.part(j)) {
            return Err(Error::UndefinedCorner(format!("cannot add a node to row {j} of {self}")));
        }
        let mut v = self.padded(j);
        v[j - 1] += 1;
        Partition::new(v)
    }

    /// λ_{(j)}: remove a node from row `j` (1-based).
    pub fn remove_node(&self, j: usize) -> Result<Partition, Error> {
        if j == 0 || self.part(j) == 0 || self.part(j) <= self.part(j + 1) {
            return Err(Error::UndefinedCorner(format!("cannot remove a node from row {j} of {self}")));
        }
        let mut v = self.parts.clone();
        v[j - 1] -= 1;
        Partition::new(v)
    }

    /// λ_i − λ_{i+k} ≥ r for 1 ≤ i ≤ n − k, with λ padded to `n` parts.
    pub fn is_admissible(&self, k: usize, r: u32, n: usize) -> bool {
        if self.length() > n {
            return false;
        }
        (1..=n.saturating_sub(k)).all(|i| self.part(i) >= self.part(i + k) + r)
    }

    /// Multiplicity of the value `v` among the first `n` padded parts.
    pub fn multiplicity(&self, v: u32, n: usize) -> usize {
        self.padded(n).iter().filter(|&&p| p == v).count()
    }

    /// Render padded to `n` entries as "3,1,0".
    pub fn to_padded_string(&self, n: usize) -> String {
        self.padded(n).iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition entry '{p}'"))))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Partitions of `d` with at most `n` parts, each at most `max_part`, in
/// decreasing lexicographic order.
pub fn enumerate_bounded(n: usize, d: u32, max_part: u32) -> Vec<Partition> {
    fn rec(n: usize, d: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if d == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if n == 0 {
            return;
        }
        let hi = d.min(max_part);
        // The remaining n slots can hold at most n·p.
        for p in (1..=hi).rev() {
            if (p as u64) * (n as u64) < d as u64 {
                break;
            }
            prefix.push(p);
            rec(n - 1, d - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, max_part, &mut Vec::new(), &mut out);
    out
}

/// π_{n,d}: partitions of `d` with at most `n` parts, decreasing lex order.
pub fn enumerate_partitions(n: usize, d: u32) -> Vec<Partition> {
    enumerate_bounded(n, d, d)
}

/// The (k,r,n)-admissible members of π_{n,d}.
pub fn enumerate_admissible(k: usize, r: u32, n: usize, d: u32) -> Vec<Partition> {
    enumerate_partitions(n, d).into_iter().filter(|p| p.is_admissible(k, r, n)).collect()
}

/// One of the four non-resonance conditions checked for an admissible
/// partition: `q^a t^b ≠ 1` for the rows `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResonanceCondition {
    pub i: usize,
    pub j: usize,
    /// 1-based index of the condition in the order they are generated.
    pub which: u8,
    pub a: i64,
    pub b: i64,
}

/// The exponent pairs of q^a t^b that should avoid resonance, for each
/// 1 ≤ i < j ≤ n: (λ_i−λ_j, j−i), (λ_i−λ_j−1, j−i+1), (λ_i−λ_j−1, j−i), and
/// (λ_i−λ_j, j−i−1) when λ_j < λ_{j−1}.
pub fn lemma21_conditions(lambda: &Partition, n: usize) -> Vec<ResonanceCondition> {
    let mut out = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            let d = lambda.part(i) as i64 - lambda.part(j) as i64;
            let g = (j - i) as i64;
            let mut push = |which, a, b| out.push(ResonanceCondition { i, j, which, a, b });
            push(1, d, g);
            push(2, d - 1, g + 1);
            push(3, d - 1, g);
            if lambda.part(j) < lambda.part(j - 1) {
                push(4, d, g - 1);
            }
        }
    }
    out
}

/// The conditions from [`lemma21_conditions`] that are resonant.
pub fn lemma21_violations(lambda: &Partition, k: u32, r: u32, n: usize) -> Result<Vec<ResonanceCondition>, Error> {
    let p = ParameterSpec::new(k, r)?;
    Ok(lemma21_conditions(lambda, n).into_iter().filter(|c| p.is_resonant(c.a, c.b)).collect())
}

/// True iff none of the conditions from [`lemma21_conditions`] is resonant.
///
/// On admissible input this fails exactly at boundary windows: condition 2
/// when j − i = k and λ_i − λ_j = r (e.g. λ = (2,0) at (k,r) = (1,2), where
/// q t² is the resonance itself), and condition 3 when j − i = k + 1 and
/// λ_i − λ_j = r. Neither is a denominator of a Pieri coefficient.
pub fn check_lemma21(lambda: &Partition, k: u32, r: u32, n: usize) -> Result<bool, Error> {
    Ok(lemma21_violations(lambda, k, r, n)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn dominance() {
        assert!(p("1,1").dominance_leq(&p("2,0")).unwrap());
        assert!(!p("2,0").dominance_leq(&p("1,1")).unwrap());
        assert!(p("2,1,1").dominance_leq(&p("3,1,0")).unwrap());
        assert!(p("2").dominance_leq(&p("3")).is_err());
    }

    #[test]
    fn node_moves() {
        assert_eq!(p("2,1").add_node(1).unwrap(), p("3,1"));
        assert_eq!(p("2,2").add_node(1).unwrap(), p("3,2"));
        assert!(p("2,2").add_node(2).is_err());
        assert_eq!(p("2,2").add_node(3).unwrap(), p("2,2,1"));
        assert_eq!(p("2,1").remove_node(2).unwrap(), p("2"));
        assert!(p("2,2").remove_node(1).is_err());
        assert!(p("2").remove_node(2).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(p("2,0").is_admissible(1, 2, 2));
        assert!(!p("1,1").is_admissible(1, 2, 2));
        assert!(p("6,3,3,0").is_admissible(2, 3, 4));
        assert!(!p("1").is_admissible(1, 2, 2));
        assert!(p("5").is_admissible(1, 2, 1));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(2, 2), vec![p("2"), p("1,1")]);
        assert_eq!(enumerate_partitions(1, 5), vec![p("5")]);
        assert_eq!(enumerate_partitions(3, 3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(enumerate_partitions(0, 0), vec![p("")]);
        assert!(enumerate_partitions(0, 2).is_empty());
        assert_eq!(enumerate_admissible(1, 2, 2, 2), vec![p("2")]);
        assert!(enumerate_admissible(1, 2, 2, 1).is_empty());
        for d in 0..6 {
            assert_eq!(enumerate_admissible(1, 2, 1, d).len(), 1);
        }
    }

    #[test]
    fn lemma21_boundary_resonance() {
        // q^{λ1−λ2−1} t^{2} = q t² is the resonance at (k,r) = (1,2).
        let v = lemma21_violations(&p("2,0"), 1, 2, 2).unwrap();
        assert_eq!(v, vec![ResonanceCondition { i: 1, j: 2, which: 2, a: 1, b: 2 }]);
        assert!(!check_lemma21(&p("4,2,0"), 1, 2, 3).unwrap());
        assert!(check_lemma21(&p("3,0"), 1, 2, 2).unwrap());
        assert!(check_lemma21(&p("6,3,0"), 1, 2, 3).unwrap());
    }

    #[test]
    fn lemma21_violations_only_at_boundary_windows() {
        for (k, r) in [(1u32, 2u32), (1, 3), (2, 2), (2, 3), (3, 3)] {
            for n in 1..=5 {
                for d in 0..=12 {
                    for lam in enumerate_admissible(k as usize, r, n, d) {
                        for c in lemma21_violations(&lam, k, r, n).unwrap() {
                            let gap = lam.part(c.i) - lam.part(c.j);
                            let ok = (c.which == 2 && c.j - c.i == k as usize && gap == r)
                                || (c.which == 3 && c.j - c.i == k as usize + 1 && gap == r);
                            assert!(ok, "{lam:?} k={k} r={r}: {c:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma21_non_admissible_oracle() {
        // (k,r,n) = (2,2,3), λ = (2,1,0): decide every pair by specializing
        // q^a t^b and comparing with 1.
        let spec = ParameterSpec::new(2, 2).unwrap();
        let lam = p("2,1,0");
        let mut any_resonant = false;
        for c in lemma21_conditions(&lam, 3) {
            let x = crate::scalars::BiRatFunc::laurent_monomial(c.a, c.b);
            let resonant = crate::scalars::Ring::is_one(&spec.specialize_scalar(&x).unwrap());
            assert_eq!(resonant, spec.is_resonant(c.a, c.b));
            any_resonant |= resonant;
        }
        assert_eq!(check_lemma21(&lam, 2, 2, 3).unwrap(), !any_resonant);
    }
}
