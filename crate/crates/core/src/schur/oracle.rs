//! Brute-force symmetric-polynomial oracle.
//!
//! Schur polynomials are expanded into monomials by listing semistandard
//! tableaux, multiplied as plain polynomials, and re-expanded into the Schur
//! basis by subtracting leading terms. Nothing here calls into the LR or
//! Pieri code; it exists to check them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Weight, WeightMultiset};

/// Exponent vector ↦ integer coefficient.
pub type Poly = BTreeMap<Vec<u32>, i64>;

/// `s_λ(x_1, …, x_m)` as a sum of monomials `x^content(T)` over SSYT `T`.
pub fn schur_polynomial(lambda: &[u32], num_vars: usize) -> Poly {
    let shape: Vec<usize> = lambda
        .iter()
        .map(|&x| x as usize)
        .filter(|&x| x > 0)
        .collect();
    let mut out = Poly::new();
    if shape.len() > num_vars {
        return out;
    }
    let mut tab: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill(&shape, &mut tab, 0, 0, num_vars as u32, &mut out);
    out
}

fn fill(shape: &[usize], tab: &mut [Vec<u32>], r: usize, c: usize, m: u32, out: &mut Poly) {
    if r == shape.len() {
        let mut content = vec![0u32; m as usize];
        for row in tab.iter() {
            for &x in row {
                content[(x - 1) as usize] += 1;
            }
        }
        *out.entry(content).or_insert(0) += 1;
        return;
    }
    if c == shape[r] {
        fill(shape, tab, r + 1, 0, m, out);
        return;
    }
    let left = if c > 0 { tab[r][c - 1] } else { 1 };
    let above = if r > 0 { tab[r - 1][c] + 1 } else { 1 };
    for x in left.max(above)..=m {
        tab[r][c] = x;
        fill(shape, tab, r, c + 1, m, out);
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Evaluate at an integer point.
pub fn evaluate(p: &Poly, point: &[i64]) -> i64 {
    p.iter()
        .map(|(e, c)| {
            c * e
                .iter()
                .zip(point)
                .map(|(&k, &x)| x.pow(k))
                .product::<i64>()
        })
        .sum()
}

/// Rewrite a symmetric polynomial in the Schur basis. The lexicographically
/// largest monomial of a symmetric polynomial has a partition exponent; its
/// coefficient is the coefficient of that Schur function.
///
/// Panics if `p` is not symmetric.
pub fn schur_expand(p: &Poly, num_vars: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = rest.iter().next_back() {
        let lead = lead.clone();
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "polynomial is not symmetric"
        );
        let s = schur_polynomial(&lead, num_vars);
        for (e, k) in s {
            let entry = rest.entry(e.clone()).or_insert(0);
            *entry -= c * k;
            if *entry == 0 {
                rest.remove(&e);
            }
        }
        out.insert(lead, c);
    }
    out
}

/// Product of the Schur polynomials of every summand of `weights`
/// (multiplicities become powers).
pub fn schur_oracle(weights: &WeightMultiset, num_vars: usize) -> Poly {
    let mut acc = Poly::new();
    acc.insert(vec![0; num_vars], 1);
    for (w, m) in weights.iter() {
        let s = schur_polynomial(w.parts(), num_vars);
        for _ in 0..m {
            acc = poly_mul(&acc, &s);
        }
    }
    acc
}

/// `a ⊗ b` decomposed through the oracle and reduced to `SL_n` labels.
pub fn oracle_tensor(a: &Weight, b: &Weight) -> WeightMultiset {
    let n = a.rank();
    let prod = poly_mul(
        &schur_polynomial(a.parts(), n),
        &schur_polynomial(b.parts(), n),
    );
    let mut out = WeightMultiset::new(n);
    for (p, c) in schur_expand(&prod, n) {
        assert!(c > 0, "Schur coefficients of a product are non-negative");
        out.insert(Weight::from_partition(n, &p), c as u32);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_two_standards() {
        let mut ms = WeightMultiset::new(2);
        ms.insert(Weight::standard(2), 2);
        let p = schur_oracle(&ms, 2);
        let e = schur_expand(&p, 2);
        assert_eq!(e.len(), 2);
        assert_eq!(e[&vec![2, 0]], 1);
        assert_eq!(e[&vec![1, 1]], 1);
    }

    #[test]
    fn principal_specialisation_is_dimension() {
        let s = schur_polynomial(&[1, 0, 0], 3);
        assert_eq!(evaluate(&s, &[1, 1, 1]), 3);
        let s = schur_polynomial(&[2, 1, 0], 3);
        assert_eq!(evaluate(&s, &[1, 1, 1]), 8);
    }

    #[test]
    fn too_many_rows_vanish() {
        assert!(schur_polynomial(&[1, 1, 1], 2).is_empty());
    }
}
