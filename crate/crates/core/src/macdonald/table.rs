//! Generic P_λ(x; q, t) by back-substitution against D_n^1, with a table
//! that caches results and round-trips through JSON.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::operators::{eigenvalue_d1, image, MacOp};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalars::{BiRatFunc, Field, Ring};
use crate::symfunc::SymPoly;
use crate::Error;

/// P_λ in `n` variables for every λ computed so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldTable {
    n: usize,
    entries: BTreeMap<Partition, SymPoly<BiRatFunc>>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientJson {
    mu: String,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    lambda: String,
    coefficients: Vec<CoefficientJson>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    entries: Vec<EntryJson>,
}

impl MacdonaldTable {
    pub fn new(n: usize) -> Self {
        MacdonaldTable { n, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, lambda: &Partition) -> Option<&SymPoly<BiRatFunc>> {
        self.entries.get(lambda)
    }

    pub fn entries(&self) -> &BTreeMap<Partition, SymPoly<BiRatFunc>> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Insert after checking u_λλ = 1 and dominance support.
    pub fn insert(&mut self, lambda: Partition, p: SymPoly<BiRatFunc>) -> Result<(), Error> {
        validate_entry(self.n, &lambda, &p)?;
        self.entries.insert(lambda, p);
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let t = TableJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(l, p)| EntryJson {
                    lambda: l.to_padded_string(self.n),
                    coefficients: p
                        .terms()
                        .iter()
                        .map(|(mu, c)| CoefficientJson { mu: mu.to_padded_string(self.n), value: c.to_string() })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&t).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let t: TableJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut table = MacdonaldTable::new(t.n);
        for e in t.entries {
            let lambda: Partition = e.lambda.parse()?;
            let mut p = SymPoly::zero(t.n);
            for c in e.coefficients {
                let v: BiRatFunc = c.value.parse().map_err(|e| Error::Parse(format!("{e}")))?;
                p.add_term(c.mu.parse()?, v)?;
            }
            table.insert(lambda, p)?;
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        MacdonaldTable::from_json(&s)
    }

    pub fn save(&self, path: &Path) -> Result<(), Error> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

fn validate_entry(n: usize, lambda: &Partition, p: &SymPoly<BiRatFunc>) -> Result<(), Error> {
    let bad = |m: String| Err(Error::Parse(format!("invalid table entry for {lambda:?}: {m}")));
    if p.n() != n || lambda.length() > n {
        return bad(format!("expected {n} variables"));
    }
    if !p.coeff(lambda).is_one() {
        return bad("leading coefficient is not 1".into());
    }
    for mu in p.terms().keys() {
        if mu.size() != lambda.size() || !mu.dominated_by(lambda) {
            return bad(format!("{mu:?} is not below it in dominance"));
        }
    }
    Ok(())
}

/// P_λ in `n` variables: m_λ + Σ_{μ<λ} u_{λμ} m_μ with
/// u_{λμ} = Σ_{μ<ν≤λ} D_{μν} u_{λν} / (ε_1(λ) − ε_1(μ)).
pub fn compute_p(lambda: &Partition, n: usize, table: &mut MacdonaldTable) -> Result<SymPoly<BiRatFunc>, Error> {
    if table.n != n {
        return Err(Error::VariableMismatch(table.n, n));
    }
    if lambda.length() > n {
        return Err(Error::InvalidParameter(format!("{lambda:?} has more than {n} parts")));
    }
    if let Some(p) = table.get(lambda) {
        return Ok(p.clone());
    }
    if lambda.size() == 0 {
        return Ok(SymPoly::one(n));
    }
    let below: Vec<Partition> =
        enumerate_partitions(n, lambda.size()).into_iter().filter(|mu| mu.dominated_by(lambda)).collect();
    let eps_l = eigenvalue_d1(lambda, n);
    // Columns D m_ν for the ν that can contribute.
    let cols: BTreeMap<&Partition, _> = below.iter().map(|nu| Ok((nu, image(MacOp::D(1), nu, n)?))).collect::<Result<_, Error>>()?;
    let mut u: BTreeMap<Partition, BiRatFunc> = BTreeMap::new();
    u.insert(lambda.clone(), BiRatFunc::one());
    // Decreasing lex order refines dominance, so every ν > μ is done.
    for mu in below.iter().skip(1) {
        let mut acc = BiRatFunc::zero();
        for (nu, un) in &u {
            if let Some(d) = cols[nu].get(mu) {
                acc = acc.add(&un.mul_poly(d));
            }
        }
        if acc.is_zero() {
            continue;
        }
        let gap = eps_l.sub(&eigenvalue_d1(mu, n));
        if gap.is_zero() {
            return Err(Error::Internal(format!("equal D^1 eigenvalues for {lambda:?} and {mu:?}")));
        }
        let v = acc.div(&BiRatFunc::from_poly(gap)).ok_or(Error::DivisionByZero)?;
        u.insert(mu.clone(), v);
    }
    let p = SymPoly::from_terms(n, u)?;
    table.insert(lambda.clone(), p.clone())?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::operators::{apply_op, eigenvalue_d, Route};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bi(s: &str) -> BiRatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn small_polynomials() {
        let mut t = MacdonaldTable::new(2);
        assert_eq!(compute_p(&p("1"), 2, &mut t).unwrap(), SymPoly::monomial(2, p("1"), BiRatFunc::one()).unwrap());
        assert_eq!(compute_p(&p("1,1"), 2, &mut t).unwrap().terms().len(), 1);
        let p2 = compute_p(&p("2"), 2, &mut t).unwrap();
        assert_eq!(p2.coeff(&p("1,1")), bi("(1 - t)*(1 + q)/(1 - q*t)"));
        assert!(compute_p(&p("1,1,1"), 2, &mut t).is_err());
    }

    #[test]
    fn eigen_equation_small() {
        // Independent check: every D_n^ρ from the direct route.
        for n in 1..=3 {
            let mut t = MacdonaldTable::new(n);
            for d in 0..=4 {
                for lam in enumerate_partitions(n, d) {
                    let pl = compute_p(&lam, n, &mut t).unwrap();
                    let ev = eigenvalue_d(&lam, n).unwrap();
                    for rho in 0..=n {
                        let lhs = apply_op(&pl, MacOp::D(rho), Route::Direct, |e| BiRatFunc::from_poly(e.clone())).unwrap();
                        let rhs = pl.scale(&BiRatFunc::from_poly(ev[rho].clone()));
                        assert_eq!(lhs.output, rhs, "n={n} lambda={lam:?} rho={rho}");
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let mut t = MacdonaldTable::new(3);
        for lam in enumerate_partitions(3, 3) {
            compute_p(&lam, 3, &mut t).unwrap();
        }
        let s = t.to_json();
        assert_eq!(MacdonaldTable::from_json(&s).unwrap(), t);
        let broken = s.replacen("\"value\": \"1\"", "\"value\": \"2\"", 1);
        assert!(MacdonaldTable::from_json(&broken).is_err());
    }
}
