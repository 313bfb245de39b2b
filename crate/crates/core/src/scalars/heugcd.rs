//! Heuristic gcd for integer polynomials in one and two variables.
//!
//! The gcd of the integer (or univariate) images at a large evaluation point
//! is lifted back by balanced ξ-adic expansion and accepted only after an
//! exact trial division, so results are always correct. After a few failed
//! evaluation points the primitive remainder sequence takes over.


use super::int::Int;
use super::ring::Ring;
use super::upoly::{UPoly, ZPoly};

/// Bivariate integer polynomials: outer variable `t`, inner variable `q`.
pub type QtPoly = UPoly<ZPoly>;

const ATTEMPTS: usize = 6;

fn isqrt(x: &Int) -> Int {
    Int::from(x.to_big().sqrt())
}

fn next_point(x: &Int) -> Int {
    // Same growth schedule as the classic implementation: x · x^{1/4} · 2.73...
    let r = isqrt(&isqrt(x));
    x.mul(&r).mul_i64(73794).div_rem(&Int::from(27011)).0
}

/// Balanced base-`x` digits of `h`, lowest first.
fn balanced_digits(h: &Int, x: &Int) -> Vec<Int> {
    let half = x.div_rem(&Int::from(2)).0;
    let mut out = Vec::new();
    let mut h = h.clone();
    while !h.is_zero() {
        let (_, mut d) = h.div_mod_floor(x);
        if d > half {
            d = d.sub(x);
        }
        out.push(d.clone());
        h = h.sub(&d).div_rem(x).0;
    }
    out
}

fn int_lift(h: &Int, x: &Int) -> ZPoly {
    ZPoly::new(balanced_digits(h, x))
}

/// Normalized gcd in ℤ[x]: non-negative content, positive leading coefficient.
pub fn zpoly_gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return g.normalize_sign();
    }
    if g.is_zero() {
        return f.normalize_sign();
    }
    let v = f.valuation().min(g.valuation());
    let (f, g) = (f.unshift(v), g.unshift(v));
    let cf = f.content();
    let cg = g.content();
    let c = cf.gcd(&cg);
    if f.is_constant() || g.is_constant() {
        return ZPoly::monomial(c, v);
    }
    let f = f.div_exact(&ZPoly::constant(cf)).unwrap().normalize_sign();
    let g = g.div_exact(&ZPoly::constant(cg)).unwrap().normalize_sign();
    let h = heu_univariate(&f, &g).unwrap_or_else(|| f.prs_gcd(&g));
    h.scale(&c).shift(v)
}

fn heu_univariate(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let fnorm = f.max_norm();
    let gnorm = g.max_norm();
    let b = fnorm.clone().min(gnorm.clone()).mul_i64(2).add(&Int::from(29));
    let lf = f.lead().unwrap().abs();
    let lg = g.lead().unwrap().abs();
    let alt = fnorm.div_rem(&lf).0.min(gnorm.div_rem(&lg).0).mul_i64(2).add(&Int::from(2));
    let mut x = b.max(alt);
    for _ in 0..ATTEMPTS {
        let ff = f.eval(&x);
        let gg = g.eval(&x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = ff.gcd(&gg);
            let cand = int_lift(&h, &x).primitive();
            if !cand.is_zero() && f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                return Some(cand);
            }
            let cff = ff.div_exact(&h).unwrap();
            let cofactor = int_lift(&cff, &x);
            if let Some(cand) = f.div_exact(&cofactor) {
                let cand = cand.primitive();
                if g.div_exact(&cand).is_some() {
                    return Some(cand);
                }
            }
        }
        x = next_point(&x);
    }
    None
}

fn qt_int_content(f: &QtPoly) -> Int {
    let mut g = Int::ZERO;
    for c in f.coeffs() {
        for a in c.coeffs() {
            g = g.gcd(a);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

fn qt_max_norm(f: &QtPoly) -> Int {
    f.coeffs().iter().map(|c| c.max_norm()).max().unwrap_or(Int::ZERO)
}

fn qt_inner_valuation(f: &QtPoly) -> usize {
    f.coeffs().iter().filter(|c| !c.is_zero()).map(|c| c.valuation()).min().unwrap_or(0)
}

fn qt_unshift_inner(f: &QtPoly, k: usize) -> QtPoly {
    if k == 0 {
        return f.clone();
    }
    f.map(|c| if c.is_zero() { ZPoly::zero() } else { c.unshift(k) })
}

fn qt_shift_inner(f: &QtPoly, k: usize) -> QtPoly {
    if k == 0 {
        return f.clone();
    }
    f.map(|c| c.shift(k))
}

fn qt_scale_int(f: &QtPoly, c: &Int) -> QtPoly {
    f.map(|p| p.scale(c))
}

fn qt_div_int(f: &QtPoly, c: &Int) -> QtPoly {
    f.map(|p| p.div_exact(&ZPoly::constant(c.clone())).expect("integer content divides"))
}

/// Normalized gcd in ℤ[q][t]: positive leading coefficient of the leading
/// coefficient, integer content included.
pub fn qtpoly_gcd(f: &QtPoly, g: &QtPoly) -> QtPoly {
    if f.is_zero() {
        return g.normalize_sign();
    }
    if g.is_zero() {
        return f.normalize_sign();
    }
    let vt = f.valuation().min(g.valuation());
    let vq = qt_inner_valuation(f).min(qt_inner_valuation(g));
    let f = qt_unshift_inner(&f.unshift(vt), vq);
    let g = qt_unshift_inner(&g.unshift(vt), vq);
    let finish = |h: QtPoly| qt_shift_inner(&h, vq).shift(vt);
    if f.is_constant() && g.is_constant() {
        return finish(QtPoly::constant(zpoly_gcd(&f.coeff(0), &g.coeff(0))));
    }
    if f.is_constant() || g.is_constant() {
        // Gcd with a polynomial free of t divides every t-coefficient.
        let mut acc = if f.is_constant() { f.coeff(0) } else { g.coeff(0) };
        let other = if f.is_constant() { &g } else { &f };
        for c in other.coeffs() {
            acc = zpoly_gcd(&acc, c);
            if acc.is_one() {
                break;
            }
        }
        return finish(QtPoly::constant(acc));
    }
    let cf = qt_int_content(&f);
    let cg = qt_int_content(&g);
    let c = cf.gcd(&cg);
    let f = qt_div_int(&f, &cf).normalize_sign();
    let g = qt_div_int(&g, &cg).normalize_sign();
    let h = heu_bivariate(&f, &g).unwrap_or_else(|| f.prs_gcd(&g));
    finish(qt_scale_int(&h, &c))
}

fn qt_eval_outer(f: &QtPoly, x: &Int) -> ZPoly {
    let mut acc = ZPoly::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.scale(x).add(c);
    }
    acc
}

/// Lift a gcd image in ℤ[q] back to ℤ[q][t] by expanding each integer
/// coefficient in balanced base `x` (digit i is the coefficient of t^i).
fn qt_lift(h: &ZPoly, x: &Int) -> QtPoly {
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for (j, c) in h.coeffs().iter().enumerate() {
        for (i, d) in balanced_digits(c, x).into_iter().enumerate() {
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            let row = &mut rows[i];
            if row.len() <= j {
                row.resize(j + 1, Int::ZERO);
            }
            row[j] = d;
        }
    }
    QtPoly::new(rows.into_iter().map(ZPoly::new).collect())
}

fn qt_primitive_int(f: &QtPoly) -> QtPoly {
    let c = qt_int_content(f);
    if c.is_zero() {
        return f.clone();
    }
    let f = if c.is_one() { f.clone() } else { qt_div_int(f, &c) };
    f.normalize_sign()
}

fn heu_bivariate(f: &QtPoly, g: &QtPoly) -> Option<QtPoly> {
    let fnorm = qt_max_norm(f);
    let gnorm = qt_max_norm(g);
    let b = fnorm.clone().min(gnorm.clone()).mul_i64(2).add(&Int::from(29));
    let lf = f.lead().unwrap().lead().unwrap().abs();
    let lg = g.lead().unwrap().lead().unwrap().abs();
    let alt = fnorm.div_rem(&lf).0.min(gnorm.div_rem(&lg).0).mul_i64(2).add(&Int::from(2));
    let mut x = b.max(alt);
    for _ in 0..ATTEMPTS {
        let ff = qt_eval_outer(f, &x);
        let gg = qt_eval_outer(g, &x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = zpoly_gcd(&ff, &gg);
            let cand = qt_primitive_int(&qt_lift(&h, &x));
            if !cand.is_zero() && f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                return Some(cand);
            }
            if let Some(cff) = ff.div_exact(&h) {
                let cofactor = qt_lift(&cff, &x);
                if !cofactor.is_zero() {
                    if let Some(cand) = f.div_exact(&cofactor) {
                        let cand = qt_primitive_int(&cand);
                        if g.div_exact(&cand).is_some() {
                            return Some(cand);
                        }
                    }
                }
            }
        }
        x = next_point(&x);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        ZPoly::from_i64s(v)
    }

    fn qt(rows: &[&[i64]]) -> QtPoly {
        QtPoly::new(rows.iter().map(|r| z(r)).collect())
    }

    #[test]
    fn univariate_gcd() {
        let a = z(&[1, 1]).mul(&z(&[1, 0, 1]));
        let b = z(&[1, 1]).mul(&z(&[-2, 1])).scale(&Int::from(3));
        assert_eq!(zpoly_gcd(&a, &b), z(&[1, 1]));
        assert_eq!(zpoly_gcd(&z(&[0, 0, 2]), &z(&[0, 4])), z(&[0, 2]));
        assert_eq!(zpoly_gcd(&z(&[-3]), &z(&[0])), z(&[3]));
        let big = z(&[1, -1]).pow(12);
        let big2 = z(&[1, -1]).pow(7).mul(&z(&[1, 1]).pow(5));
        assert_eq!(zpoly_gcd(&big, &big2), z(&[-1, 1]).pow(7));
    }

    #[test]
    fn bivariate_gcd_agrees_with_prs() {
        // (1 - q t)(1 + q) and (1 - q t)(1 - t^2 q^3)
        let common = qt(&[&[1], &[0, -1]]);
        let a = common.mul(&qt(&[&[1, 1]]));
        let b = common.mul(&qt(&[&[1], &[], &[0, 0, 0, -1]]));
        let g = qtpoly_gcd(&a, &b);
        assert_eq!(g, common.normalize_sign());
        assert_eq!(g, a.prs_gcd(&b).normalize_sign());
    }

    #[test]
    fn bivariate_gcd_with_content_and_monomials() {
        let a = qt(&[&[0, 0, 6], &[0, 0, 0, 6]]); // 6 q^2 (1 + q t)
        let b = qt(&[&[], &[0, 4]]); // 4 q t
        assert_eq!(qtpoly_gcd(&a, &b), qt(&[&[0, 2]]));
    }
}
