//! Hilbert series numerators and Krull dimension of monomial quotients.

use serde::{Deserialize, Serialize};

use crate::ring::Monomial;

/// Hilbert data of `S/I` for a homogeneous ideal `I` of `S = K[x_1..x_n]`:
/// the series is `numerator(T) / (1 - T)^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub dim: usize,
    pub codim: usize,
    pub hilbert_numerator: Vec<i64>,
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    trim(out)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
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
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S / (gens)` over `(1 - T)^n`, by the
/// pivot recursion `N(M) = N(M + (x)) + T · N(M : x)`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    numerator(minimalize(gens.to_vec()))
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1];
        for g in &gens {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if g.exponent(i) > 0 {
                *c += 1;
            }
        }
    }
    let x = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nonempty variable set");
    let var = Monomial::variable(x, n, gens[0].nx());

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(x) == 0).copied().collect();
    plus.push(var);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exponent(x) > 0 { var.quotient_of(g) } else { *g })
        .collect();

    let a = numerator(minimalize(plus));
    let b = numerator(minimalize(colon));
    poly_add(&a, &poly_mul(&[0, 1], &b))
}

/// Multiplicity of `T = 1` as a root of a nonzero integer polynomial.
pub fn order_at_one(p: &[i64]) -> usize {
    let mut p = trim(p.to_vec());
    let mut k = 0;
    while !p.is_empty() && p.iter().sum::<i64>() == 0 {
        // synthetic division by (T - 1)
        let mut q = vec![0i64; p.len() - 1];
        let mut carry = 0;
        for i in (1..p.len()).rev() {
            carry += p[i];
            q[i - 1] = carry;
        }
        p = trim(q);
        k += 1;
    }
    k
}

/// Krull dimension of `S / (gens)`: the size of a largest set of variables
/// containing the support of no generator.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> usize {
    let supports: Vec<u32> = {
        let mut s: Vec<u32> = minimalize(gens.to_vec()).iter().map(|m| m.support_mask()).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    if supports.contains(&0) {
        return 0;
    }
    nvars - min_hitting_set(&supports, 0, usize::MAX)
}

/// Smallest number of variables meeting every support set.
fn min_hitting_set(supports: &[u32], chosen: u32, best: usize) -> usize {
    let size = chosen.count_ones() as usize;
    if size >= best {
        return best;
    }
    let open = supports.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones());
    let Some(&open) = open else {
        return size;
    };
    let mut best = best;
    let mut rest = open;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        best = best.min(min_hitting_set(supports, chosen | bit, best));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e, e.len())
    }

    #[test]
    fn principal_quadric() {
        // S/(x^2) in 3 variables: numerator 1 - T^2, dimension 2
        let g = [m(&[2, 0, 0])];
        assert_eq!(hilbert_numerator(&g), vec![1, 0, -1]);
        assert_eq!(monomial_dimension(&g, 3), 2);
        assert_eq!(order_at_one(&hilbert_numerator(&g)), 1);
    }

    #[test]
    fn non_coprime_pair() {
        // (xy, xz) = x(y, z): numerator 1 - 2T^2 + T^3, codim 1
        let g = [m(&[1, 1, 0]), m(&[1, 0, 1])];
        assert_eq!(hilbert_numerator(&g), vec![1, 0, -2, 1]);
        assert_eq!(monomial_dimension(&g, 3), 2);
        assert_eq!(order_at_one(&hilbert_numerator(&g)), 1);
    }

    #[test]
    fn zero_and_unit_ideals() {
        assert_eq!(hilbert_numerator(&[]), vec![1]);
        assert_eq!(monomial_dimension(&[], 4), 4);
        assert!(hilbert_numerator(&[m(&[0, 0])]).is_empty());
        assert_eq!(monomial_dimension(&[m(&[0, 0])], 2), 0);
    }
}
