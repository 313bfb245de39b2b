//! Kostka numbers and straightening of alternants, used to express the
//! Macdonald operators on the monomial basis without expanding in x.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::partitions::Partition;

thread_local! {
    static KOSTKA: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
}

/// K_{λμ}: semistandard tableaux of shape λ and content μ.
pub fn kostka(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    if let Some(v) = KOSTKA.with(|c| c.borrow().get(&(lambda.clone(), mu.clone())).copied()) {
        return v;
    }
    let v = if mu.length() == 0 {
        1
    } else if !mu.dominated_by(lambda) {
        0
    } else {
        // Peel off the largest entry, a horizontal strip of size μ_last.
        let last = *mu.parts().last().unwrap();
        let rest = Partition::new(mu.parts()[..mu.length() - 1].to_vec()).unwrap();
        let mut total = 0;
        for_each_strip_removal(lambda, last, &mut |kappa| total += kostka(kappa, &rest));
        total
    };
    KOSTKA.with(|c| c.borrow_mut().insert((lambda.clone(), mu.clone()), v));
    v
}

/// Visit every κ ⊆ λ with λ/κ a horizontal strip of `size` cells, i.e.
/// λ_{i+1} ≤ κ_i ≤ λ_i.
fn for_each_strip_removal(lambda: &Partition, size: u32, f: &mut dyn FnMut(&Partition)) {
    fn rec(l: &[u32], i: usize, left: u32, kappa: &mut Vec<u32>, f: &mut dyn FnMut(&Partition)) {
        if i == l.len() {
            if left == 0 {
                f(&Partition::new(kappa.clone()).unwrap());
            }
            return;
        }
        let lo = l.get(i + 1).copied().unwrap_or(0);
        let max_take = (l[i] - lo).min(left);
        for take in 0..=max_take {
            kappa.push(l[i] - take);
            rec(l, i + 1, left - take, kappa, f);
            kappa.pop();
        }
    }
    rec(lambda.parts(), 0, size, &mut Vec::new(), f);
}

/// s_λ(x_1, …, x_n) in the monomial basis.
pub fn schur_to_m(lambda: &Partition, n: usize) -> Vec<(Partition, i64)> {
    if lambda.length() > n {
        return Vec::new();
    }
    crate::partitions::enumerate_partitions(n, lambda.size())
        .into_iter()
        .filter(|mu| mu.dominated_by(lambda))
        .map(|mu| {
            let k = kostka(lambda, &mu);
            (mu, k)
        })
        .filter(|(_, k)| *k != 0)
        .collect()
}

/// Write the alternant A(x^{γ+δ})/a_δ as ±s_λ, or `None` when γ+δ has a
/// repeated entry. Entries of γ may be any non-negative integers.
pub fn straighten(gamma: &[u32]) -> Option<(i64, Partition)> {
    let n = gamma.len();
    let mut v: Vec<i64> = gamma.iter().enumerate().map(|(j, &g)| g as i64 + (n - 1 - j) as i64).collect();
    // Insertion sort into decreasing order, counting transpositions.
    let mut sign = 1i64;
    for i in 1..n {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts = v.iter().enumerate().map(|(j, &x)| (x - (n - 1 - j) as i64) as u32).collect();
    Some((sign, Partition::new(parts).unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_kostka_numbers() {
        assert_eq!(kostka(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(kostka(&p("3"), &p("1,1,1")), 1);
        assert_eq!(kostka(&p("2,2"), &p("2,1,1")), 1);
        assert_eq!(kostka(&p("3,1"), &p("2,2")), 1);
        assert_eq!(kostka(&p("2,2"), &p("3,1")), 0);
        // Σ_λ K_{λ,1^n} f_λ = n! with f_λ = K_{λ,1^n}.
        let ones = Partition::new(vec![1; 5]).unwrap();
        let total: i64 = crate::partitions::enumerate_partitions(5, 5).iter().map(|l| kostka(l, &ones).pow(2)).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn straightening() {
        assert_eq!(straighten(&[2, 1, 0]), Some((1, p("2,1"))));
        assert_eq!(straighten(&[0, 1]), None);
        // (0,2) + δ = (1,2) → −(2,1) → λ = (1,1)
        assert_eq!(straighten(&[0, 2]), Some((-1, p("1,1"))));
        assert_eq!(straighten(&[1, 0, 3]), None);
        assert_eq!(straighten(&[0, 0, 3]), Some((1, p("1,1,1"))));
    }

    #[test]
    fn schur_expansion() {
        // s_{2,1}(x1,x2) = m_{2,1}; in three variables add 2 m_{1,1,1}.
        assert_eq!(schur_to_m(&p("2,1"), 2), vec![(p("2,1"), 1)]);
        assert_eq!(schur_to_m(&p("2,1"), 3), vec![(p("2,1"), 1), (p("1,1,1"), 2)]);
        assert!(schur_to_m(&p("1,1,1"), 2).is_empty());
    }
}
