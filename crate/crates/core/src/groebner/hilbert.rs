//! Hilbert series and dimension of monomial ideals.

use serde::Serialize;

use crate::algebra::Monomial;

/// Hilbert data of `K[x]/M` for a monomial ideal `M` under the standard grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Krull dimension, `-1` for the unit ideal.
    pub dimension: i64,
    /// Normalized leading coefficient of the Hilbert polynomial; 0 for the unit ideal.
    pub degree: u64,
    /// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n`, coefficient of `t^i` at index `i`.
    pub numerator: Vec<i64>,
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Hilbert series numerator via the pivot recursion
/// `N(M) = N(M + (p)) + t^deg(p) N(M : p)`.
fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    // base case: pairwise coprime generators
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let d = m.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (i, &c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return trim(acc);
    }
    // pivot: the variable shared by the most generators
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for m in &gens {
        for v in m.support() {
            counts[v] += 1;
        }
    }
    let var = (0..n)
        .max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
        .expect("nonempty ring");
    let pivot = Monomial::var(n, var, 1);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|m| m.colon(&pivot)).collect();

    let mut out = numerator(with_pivot);
    let inner = numerator(colon);
    poly_add(&mut out, &inner, 1);
    trim(out)
}

/// Hilbert data of the monomial ideal generated by `gens` in `nvars` variables.
pub fn hilbert_data(gens: &[Monomial], nvars: usize) -> HilbertData {
    let num = numerator(gens.to_vec());
    if num.is_empty() {
        return HilbertData {
            dimension: -1,
            degree: 0,
            numerator: num,
        };
    }
    // divide out (1 - t) while N(1) = 0
    let mut q = num.clone();
    let mut codim = 0i64;
    while q.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q = (1-t) r  =>  r_i = sum_{j<=i} q_j
        let mut r = Vec::with_capacity(q.len().saturating_sub(1));
        let mut acc = 0i64;
        for &c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc);
        }
        q = trim(r);
        codim += 1;
    }
    let degree = q.iter().sum::<i64>();
    debug_assert!(degree > 0);
    HilbertData {
        dimension: nvars as i64 - codim,
        degree: degree as u64,
        numerator: num,
    }
}

/// Dimension of `K[x]/M` as the size of a largest set of variables that
/// contains the support of no generator.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> i64 {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|m| m.support().fold(0u64, |acc, v| acc | (1u64 << v)))
        .collect();
    assert!(nvars <= 64, "too many variables");
    // branch on the variables of an uncovered generator
    fn search(supports: &[u64], excluded: u64, nvars: usize) -> i64 {
        match supports.iter().find(|&&s| s & excluded == 0) {
            None => nvars as i64 - excluded.count_ones() as i64,
            Some(&s) => {
                let mut best = -1;
                let mut bits = s;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    best = best.max(search(supports, excluded | (1u64 << v), nvars));
                }
                best
            }
        }
    }
    search(&supports, 0, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn maximal_ideal() {
        let h = hilbert_data(&[m(&[1, 0]), m(&[0, 1])], 2);
        assert_eq!((h.dimension, h.degree), (0, 1));
    }

    #[test]
    fn embedded_point_does_not_count() {
        // (x^2, xy): staircase 1, x, y, y^2, ... has Hilbert polynomial 1
        let h = hilbert_data(&[m(&[2, 0]), m(&[1, 1])], 2);
        assert_eq!((h.dimension, h.degree), (1, 1));
    }

    #[test]
    fn complete_intersection_staircase() {
        for a in 1..5u32 {
            for b in 1..5u32 {
                let h = hilbert_data(&[m(&[a, 0]), m(&[0, b])], 2);
                assert_eq!((h.dimension, h.degree), (0, (a * b) as u64));
            }
        }
    }

    #[test]
    fn unit_and_zero_ideal() {
        let h = hilbert_data(&[m(&[0, 0, 0])], 3);
        assert_eq!(h.dimension, -1);
        let h = hilbert_data(&[], 3);
        assert_eq!((h.dimension, h.degree), (3, 1));
    }

    #[test]
    fn dimension_by_independent_sets() {
        // xz, yz: plane z=0 union line x=y=0
        assert_eq!(monomial_dimension(&[m(&[1, 0, 1]), m(&[0, 1, 1])], 3), 2);
        assert_eq!(monomial_dimension(&[], 3), 3);
        assert_eq!(monomial_dimension(&[m(&[0, 0, 0])], 3), -1);
        assert_eq!(
            monomial_dimension(&[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])], 3),
            0
        );
    }
}
