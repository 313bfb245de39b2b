//! Pieri and lowering coefficients, the integral form c_λ and the Cauchy
//! row identity.

use super::operators::{apply_op, MacOp, Route};
use super::table::{compute_p, MacdonaldTable};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalars::{BiRatFunc, Field, Ring};
use crate::symfunc::{e1, sympoly_mul, SymPoly};
use crate::Error;

fn one_minus(a: i64, b: i64) -> BiRatFunc {
    BiRatFunc::one().sub(&BiRatFunc::laurent_monomial(a, b))
}

fn ratio(num: BiRatFunc, den: BiRatFunc, what: &str) -> Result<BiRatFunc, Error> {
    num.div(&den).ok_or_else(|| Error::Internal(format!("vanishing denominator in {what}")))
}

/// ψ′_{λ^{(j)}/λ}; zero exactly when λ_{j−1} = λ_j.
pub fn psi_prime(lambda: &Partition, j: usize) -> Result<BiRatFunc, Error> {
    if j == 0 || j > lambda.length() + 1 {
        return Err(Error::InvalidParameter(format!("row {j} is out of range for {lambda:?}")));
    }
    let lj = lambda.part(j) as i64;
    let mut acc = BiRatFunc::one();
    for i in 1..j {
        let d = lambda.part(i) as i64 - lj;
        let g = (j - i) as i64;
        let num = one_minus(d - 1, g + 1).mul(&one_minus(d, g - 1));
        let den = one_minus(d, g).mul(&one_minus(d - 1, g));
        acc = acc.mul(&ratio(num, den, "psi'")?);
    }
    Ok(acc)
}

/// ψ″_{λ/λ_{(j)}} in `n` variables; zero when λ_j = λ_{j+1}.
pub fn psi_dblprime(lambda: &Partition, j: usize, n: usize) -> Result<BiRatFunc, Error> {
    if j == 0 || j > lambda.length() || lambda.length() > n {
        return Err(Error::InvalidParameter(format!("row {j} is out of range for {lambda:?} in {n} variables")));
    }
    let lj = lambda.part(j) as i64;
    let mut acc = ratio(one_minus(lj, (n - j) as i64), one_minus(1, 0), "psi''")?;
    for i in j + 1..=n {
        let d = lj - lambda.part(i) as i64;
        let g = (i - j) as i64;
        let num = one_minus(d - 1, g + 1).mul(&one_minus(d, g - 1));
        let den = one_minus(d, g).mul(&one_minus(d - 1, g));
        acc = acc.mul(&ratio(num, den, "psi''")?);
    }
    Ok(acc)
}

/// Outcome of the three Pieri-type identities for one λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriReport {
    pub e1: bool,
    pub e0: bool,
    pub e2: bool,
    /// ψ′ vanished exactly at the rows where λ^{(j)} is undefined.
    pub vanishing_ok: bool,
}

impl PieriReport {
    pub fn ok(&self) -> bool {
        self.e1 && self.e0 && self.e2 && self.vanishing_ok
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        [(self.e1, "e1"), (self.e0, "E0"), (self.e2, "E2"), (self.vanishing_ok, "psi' vanishing")]
            .into_iter()
            .find(|(ok, _)| !ok)
            .map(|(_, name)| name)
    }
}

/// Check e_1 P_λ, E_0 P_λ and E_2 P_λ against their expansions. Rows beyond
/// `n` are dropped since those P vanish in n variables.
pub fn verify_pieri(lambda: &Partition, n: usize, table: &mut MacdonaldTable) -> Result<PieriReport, Error> {
    let gen = |e: &crate::scalars::QtPoly| BiRatFunc::from_poly(e.clone());
    let pl = compute_p(lambda, n, table)?;
    let l = lambda.length();

    let mut rhs1 = SymPoly::zero(n);
    let mut rhs2 = SymPoly::zero(n);
    let mut vanishing_ok = true;
    let t_n1 = BiRatFunc::laurent_monomial(0, n as i64 - 1);
    let pref = ratio(t_n1, one_minus(1, 0), "E2 prefactor")?;
    for j in 1..=(l + 1).min(n) {
        let psi = psi_prime(lambda, j)?;
        match lambda.add_node(j) {
            Ok(up) => {
                if psi.is_zero() {
                    vanishing_ok = false;
                }
                let pu = compute_p(&up, n, table)?;
                rhs1 = rhs1.add(&pu.scale(&psi))?;
                let w = one_minus(lambda.part(j) as i64, 1 - j as i64).mul(&psi).mul(&pref);
                rhs2 = rhs2.add(&pu.scale(&w))?;
            }
            Err(_) => vanishing_ok &= psi.is_zero(),
        }
    }
    let lhs1 = sympoly_mul(&e1(n), &pl)?;

    let mut rhs0 = SymPoly::zero(n);
    for j in 1..=l {
        let psi = psi_dblprime(lambda, j, n)?;
        match lambda.remove_node(j) {
            Ok(down) => rhs0 = rhs0.add(&compute_p(&down, n, table)?.scale(&psi))?,
            Err(_) => vanishing_ok &= psi.is_zero(),
        }
    }
    let lhs0 = apply_op(&pl, MacOp::E(0), Route::Alternant, gen)?.output;
    let lhs2 = apply_op(&pl, MacOp::E(2), Route::Alternant, gen)?.output;
    Ok(PieriReport { e1: lhs1 == rhs1, e0: lhs0 == rhs0, e2: lhs2 == rhs2, vanishing_ok })
}

/// c_λ = ∏_{(i,j)∈λ} (1 − q^{λ_i−j} t^{λ′_j−i+1}).
pub fn integral_form_factor(lambda: &Partition) -> BiRatFunc {
    let conj = lambda.conjugate();
    let mut acc = BiRatFunc::one();
    for i in 1..=lambda.length() {
        for j in 1..=lambda.part(i) as usize {
            let a = lambda.part(i) as i64 - j as i64;
            let b = conj.part(j) as i64 - i as i64 + 1;
            acc = acc.mul(&one_minus(a, b));
        }
    }
    acc
}

/// True iff c_λ P_λ has polynomial coefficients.
pub fn check_integrality(lambda: &Partition, n: usize, table: &mut MacdonaldTable) -> Result<bool, Error> {
    let c = integral_form_factor(lambda);
    Ok(compute_p(lambda, n, table)?.terms().values().all(|u| u.mul(&c).is_polynomial()))
}

/// (t;q)_m / (q;q)_m
pub fn cauchy_coefficient(m: u32) -> BiRatFunc {
    let mut acc = BiRatFunc::one();
    for i in 0..m as i64 {
        acc = acc.mul(&ratio(one_minus(i, 1), one_minus(i + 1, 0), "(q;q)_m").unwrap());
    }
    acc
}

/// Compare Σ_l c_l P_{(l)} y^l with ∏_i Σ_m c_m (x_i y)^m degree by degree;
/// returns the first degree where they differ.
pub fn cauchy_row_check(n: usize, l_max: u32, table: &mut MacdonaldTable) -> Result<Option<u32>, Error> {
    let coeffs: Vec<BiRatFunc> = (0..=l_max).map(cauchy_coefficient).collect();
    for l in 0..=l_max {
        let lhs = if n == 0 && l > 0 {
            SymPoly::zero(0)
        } else {
            compute_p(&Partition::from_unsorted(vec![l]), n, table)?.scale(&coeffs[l as usize])
        };
        let mut rhs = SymPoly::zero(n);
        for mu in enumerate_partitions(n, l) {
            let c = mu.padded(n).iter().fold(BiRatFunc::one(), |a, &m| a.mul(&coeffs[m as usize]));
            rhs.add_term(mu, c)?;
        }
        if lhs != rhs {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bi(s: &str) -> BiRatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert!(psi_prime(&Partition::empty(), 1).unwrap().is_one());
        assert!(psi_prime(&p("1,1"), 2).unwrap().is_zero());
        assert!(psi_prime(&p("1"), 3).is_err());
        assert_eq!(integral_form_factor(&Partition::empty()), BiRatFunc::one());
        assert_eq!(integral_form_factor(&p("1")), bi("1 - t"));
        assert_eq!(integral_form_factor(&p("2")), bi("(1 - q*t)*(1 - t)"));
    }

    #[test]
    fn psi_dblprime_matches_lowering_operator() {
        // E_0 P_(1) = ψ″_{(1)/∅} · 1 in two variables.
        let mut t = MacdonaldTable::new(2);
        let p1 = compute_p(&p("1"), 2, &mut t).unwrap();
        let e0 = apply_op(&p1, MacOp::E(0), Route::Direct, |e| BiRatFunc::from_poly(e.clone())).unwrap();
        let psi = psi_dblprime(&p("1"), 1, 2).unwrap();
        assert_eq!(e0.output.coeff(&Partition::empty()), psi);
        // (1 − t q)/(1 − q) · (1 − q^0 t^2)(1 − q t^0)/((1 − q t)(1 − t))
        assert_eq!(psi, bi("(1 - t^2)/(1 - t)"));
    }

    #[test]
    fn pieri_small() {
        for n in 1..=3 {
            let mut t = MacdonaldTable::new(n);
            for d in 0..=4 {
                for lam in enumerate_partitions(n, d) {
                    let r = verify_pieri(&lam, n, &mut t).unwrap();
                    assert!(r.ok(), "n={n} lambda={lam:?}: {:?}", r.first_failure());
                }
            }
        }
    }

    #[test]
    fn integrality_and_cauchy() {
        let mut t = MacdonaldTable::new(2);
        assert!(check_integrality(&p("2"), 2, &mut t).unwrap());
        let cp = compute_p(&p("2"), 2, &mut t).unwrap().scale(&integral_form_factor(&p("2")));
        assert_eq!(cp.coeff(&p("1,1")), bi("(1 - t)^2*(1 + q)"));
        let mut t3 = MacdonaldTable::new(3);
        assert!(check_integrality(&p("2,1"), 3, &mut t3).unwrap());
        assert_eq!(cauchy_row_check(3, 5, &mut t3).unwrap(), None);
        assert_eq!(cauchy_coefficient(1), bi("(1 - t)/(1 - q)"));
    }
}
