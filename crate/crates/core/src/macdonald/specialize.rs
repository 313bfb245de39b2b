//! P_λ at the resonant specialization.

use std::collections::BTreeSet;

use super::table::{compute_p, MacdonaldTable};
use crate::partitions::{enumerate_admissible, Partition};
use crate::scalars::{ParameterSpec, UniRatFunc};
use crate::symfunc::SymPoly;
use crate::Error;

/// Specialize every coefficient u_{λμ} of P_λ; a vanishing denominator is
/// reported as a pole naming the offending μ.
pub fn specialize_p(
    lambda: &Partition,
    n: usize,
    spec: &ParameterSpec,
    table: &mut MacdonaldTable,
) -> Result<SymPoly<UniRatFunc>, Error> {
    let p = compute_p(lambda, n, table)?;
    let mut out = SymPoly::zero(n);
    for (mu, c) in p.terms() {
        let v = spec.specialize_scalar(c).map_err(|_| Error::Pole {
            what: format!("coefficient of m_{mu:?} in P_{lambda:?} at (k,r)=({},{})", spec.k(), spec.r()),
        })?;
        out.add_term(mu.clone(), v)?;
    }
    Ok(out)
}

/// Admissible λ with |λ| ≤ d_max together with every partition obtained by
/// adding or removing one node, kept when it still has |λ| ≤ d_max and at most
/// n rows.
pub fn admissible_neighbourhood(k: u32, r: u32, n: usize, d_max: u32) -> Vec<Partition> {
    let mut out = BTreeSet::new();
    for d in 0..=d_max {
        for l in enumerate_admissible(k as usize, r, n, d) {
            for j in 1..=n {
                out.extend(l.add_node(j).ok().filter(|x| x.size() <= d_max && x.length() <= n));
                out.extend(l.remove_node(j).ok());
            }
            out.insert(l);
        }
    }
    out.into_iter().collect()
}

/// First member of the admissible neighbourhood whose specialization hits a
/// pole, if any.
pub fn first_pole(p: &ParameterSpec, n: usize, d_max: u32, table: &mut MacdonaldTable) -> Result<Option<Partition>, Error> {
    for l in admissible_neighbourhood(p.k(), p.r(), n, d_max) {
        match specialize_p(&l, n, p, table) {
            Ok(_) => {}
            Err(Error::Pole { .. }) => return Ok(Some(l)),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::univariate::parse_unirat;
    use crate::scalars::Ring;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_specializations() {
        let spec = ParameterSpec::new(1, 2).unwrap();
        let mut t = MacdonaldTable::new(2);
        let p1 = specialize_p(&p("1"), 2, &spec, &mut t).unwrap();
        assert_eq!(p1, SymPoly::monomial(2, p("1"), UniRatFunc::one()).unwrap());
        // t = u, q = u^-2: (1 − u)(1 + u^-2)/(1 − u^-1) = −(1 + u^2)/u
        let p2 = specialize_p(&p("2"), 2, &spec, &mut t).unwrap();
        let want = parse_unirat("(1 - u)*(u^2 + 1)/(u^2 - u)", 1).unwrap();
        assert_eq!(p2.coeff(&p("1,1")), want);

        let spec13 = ParameterSpec::new(1, 3).unwrap();
        let mut t3 = MacdonaldTable::new(3);
        assert!(specialize_p(&p("3"), 3, &spec13, &mut t3).is_ok());
    }

    #[test]
    fn pole_names_coefficient() {
        // (2,1) is not (1,2,3)-admissible.
        let spec = ParameterSpec::new(1, 2).unwrap();
        let mut t = MacdonaldTable::new(3);
        match specialize_p(&p("2,1"), 3, &spec, &mut t) {
            Err(Error::Pole { what }) => assert!(what.contains("m_(1,1,1)"), "{what}"),
            other => panic!("expected a pole, got {other:?}"),
        }
    }

    #[test]
    fn neighbourhood_has_no_poles() {
        let n = 3;
        let fam = admissible_neighbourhood(1, 2, n, 7);
        assert!(fam.contains(&p("4,2")) && fam.contains(&p("4,2,1")) && fam.contains(&p("3,2")), "{fam:?}");
        assert!(!fam.contains(&p("2,1")));
        let mut t = MacdonaldTable::new(n);
        assert_eq!(first_pole(&ParameterSpec::new(1, 2).unwrap(), n, 7, &mut t).unwrap(), None);
    }
}
