//! Pieri and Littlewood–Richardson products.
//!
//! Products are formed on `GL_n` partitions (at most `n` rows) and only then
//! reduced to canonical `SL_n` labels. LR coefficients are counted by
//! building LR tableaux one letter at a time: letter `k` is added as a
//! horizontal strip and the lattice-word condition between letters `k − 1`
//! and `k` is checked right away, which is exact because later letters do
//! not affect it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Weight, WeightMultiset};

/// A `GL_n` partition (non-increasing, trailing zeros allowed).
pub type Partition = Vec<u32>;

fn trimmed(p: &[u32]) -> Partition {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// All `ν ⊇ λ` with `ν/λ` a horizontal strip of `k` boxes and at most
/// `max_rows` rows. Each result comes with the number of boxes added per row.
fn strips_with_counts(lambda: &[u32], k: u32, max_rows: usize) -> Vec<(Partition, Vec<u32>)> {
    let lambda = trimmed(lambda);
    let rows = (lambda.len() + 1).min(max_rows);
    if lambda.len() > max_rows {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut added = alloc::vec![0u32; rows];
    fn rec(
        lambda: &[u32],
        row: usize,
        rows: usize,
        left: u32,
        added: &mut Vec<u32>,
        out: &mut Vec<(Partition, Vec<u32>)>,
    ) {
        if row == rows {
            if left == 0 {
                let nu: Partition = (0..rows)
                    .map(|r| lambda.get(r).copied().unwrap_or(0) + added[r])
                    .collect();
                out.push((trimmed(&nu), added.clone()));
            }
            return;
        }
        let here = lambda.get(row).copied().unwrap_or(0);
        // Row `row` may grow up to the previous row's old length.
        let cap = if row == 0 {
            left
        } else {
            (lambda[row - 1] - here).min(left)
        };
        for a in (0..=cap).rev() {
            added[row] = a;
            rec(lambda, row + 1, rows, left - a, added, out);
        }
        added[row] = 0;
    }
    rec(&lambda, 0, rows, k, &mut added, &mut out);
    out
}

/// Horizontal-strip extensions of `lambda` by `k` boxes with at most
/// `max_rows` rows.
pub fn horizontal_strips(lambda: &[u32], k: u32, max_rows: usize) -> Vec<Partition> {
    strips_with_counts(lambda, k, max_rows)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

/// `s_λ · s_μ = Σ c^ν_{λμ} s_ν` over partitions `ν` with at most `max_rows` rows.
pub fn lr_product_gl(lambda: &[u32], mu: &[u32], max_rows: usize) -> BTreeMap<Partition, u32> {
    let (lambda, mu) = (trimmed(lambda), trimmed(mu));
    // c^ν_{λμ} = c^ν_{μλ}; use the smaller partition as the content.
    let (base, content) = if mu.iter().sum::<u32>() <= lambda.iter().sum::<u32>() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut out = BTreeMap::new();
    if base.len() > max_rows || content.len() > max_rows {
        return out;
    }
    fn rec(
        shape: &[u32],
        content: &[u32],
        letter: usize,
        prev_counts: &[u32],
        max_rows: usize,
        out: &mut BTreeMap<Partition, u32>,
    ) {
        if letter == content.len() {
            *out.entry(shape.to_vec()).or_insert(0) += 1;
            return;
        }
        for (nu, counts) in strips_with_counts(shape, content[letter], max_rows) {
            if letter > 0 && !lattice_ok(prev_counts, &counts) {
                continue;
            }
            rec(&nu, content, letter + 1, &counts, max_rows, out);
        }
    }
    rec(&base, &content, 0, &[], max_rows, &mut out);
    out
}

/// Reading rows top to bottom and each row right to left, every prefix has
/// at least as many `k − 1` as `k`. Letters `k` sit right of letters `k − 1`
/// in a row, so a row's `k`s are read before its `k − 1`s.
fn lattice_ok(prev: &[u32], cur: &[u32]) -> bool {
    let (mut seen_prev, mut seen_cur) = (0u32, 0u32);
    for r in 0..cur.len().max(prev.len()) {
        seen_cur += cur.get(r).copied().unwrap_or(0);
        if seen_cur > seen_prev {
            return false;
        }
        seen_prev += prev.get(r).copied().unwrap_or(0);
    }
    true
}

/// Single LR coefficient `c^ν_{λμ}`.
pub fn lr_coefficient(nu: &[u32], lambda: &[u32], mu: &[u32]) -> u32 {
    let nu = trimmed(nu);
    if nu.iter().sum::<u32>() != lambda.iter().sum::<u32>() + mu.iter().sum::<u32>() {
        return 0;
    }
    lr_product_gl(lambda, mu, nu.len().max(1))
        .get(&nu)
        .copied()
        .unwrap_or(0)
}

fn reduce_to_sl(n: usize, gl: BTreeMap<Partition, u32>) -> WeightMultiset {
    let mut out = WeightMultiset::new(n);
    for (p, m) in gl {
        out.insert(Weight::from_partition(n, &p), m);
    }
    out
}

/// Full decomposition of `a ⊗ b`.
pub fn lr_decompose(a: &Weight, b: &Weight) -> WeightMultiset {
    assert_eq!(a.rank(), b.rank(), "rank mismatch");
    let n = a.rank();
    reduce_to_sl(n, lr_product_gl(a.parts(), b.parts(), n))
}

/// `w ⊗ Sym^k(C^n)`: one summand per horizontal strip.
pub fn pieri_sym(w: &Weight, k: u32) -> WeightMultiset {
    let n = w.rank();
    let mut out = WeightMultiset::new(n);
    for p in horizontal_strips(w.parts(), k, n) {
        out.insert(Weight::from_partition(n, &p), 1);
    }
    out
}

/// Multiplicity of `target` in `a ⊗ b`.
pub fn contains(target: &Weight, a: &Weight, b: &Weight) -> u32 {
    lr_decompose(a, b).multiplicity(target)
}

/// Decomposition of `A ⊗ B` for completely reducible `A`, `B`.
pub fn tensor(a: &WeightMultiset, b: &WeightMultiset) -> WeightMultiset {
    assert_eq!(a.rank(), b.rank(), "rank mismatch");
    let mut out = WeightMultiset::new(a.rank());
    for (x, mx) in a.iter() {
        for (y, my) in b.iter() {
            for (z, mz) in lr_decompose(x, y).iter() {
                out.insert(z.clone(), mx * my * mz);
            }
        }
    }
    out
}

/// `A ⊗ Sym^k(C^n)`.
pub fn tensor_sym(a: &WeightMultiset, k: u32) -> WeightMultiset {
    let mut out = WeightMultiset::new(a.rank());
    for (x, mx) in a.iter() {
        for (z, _) in pieri_sym(x, k).iter() {
            out.insert(z.clone(), mx);
        }
    }
    out
}

/// `A ⊗ Sym^k(C^n)^∨`, computed as the dual of `A^∨ ⊗ Sym^k(C^n)`.
pub fn tensor_sym_dual(a: &WeightMultiset, k: u32) -> WeightMultiset {
    tensor_sym(&a.dual(), k).dual()
}

/// `λ(U) ≥ k − λ1(W)` for every summand `U` of `W ⊗ Sym^k(C^n)`, evaluated
/// on the `GL_n` labels before reduction to `SL_n`.
pub fn check_lr_gap_bound(w: &Weight, k: u32) -> bool {
    let bound = i64::from(k) - i64::from(w.parts()[0]);
    horizontal_strips(w.parts(), k, w.rank()).iter().all(|u| {
        let u1 = i64::from(u.first().copied().unwrap_or(0));
        let u2 = i64::from(u.get(1).copied().unwrap_or(0));
        u1 - u2 >= bound
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[i64]) -> Weight {
        Weight::normalize(raw.len(), raw).unwrap()
    }

    fn ms(items: &[(&[i64], u32)]) -> WeightMultiset {
        let n = items[0].0.len();
        WeightMultiset::from_pairs(n, items.iter().map(|(r, m)| (w(r), *m))).unwrap()
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri_sym(&w(&[3, 0, 0]), 1),
            ms(&[(&[4, 0, 0], 1), (&[3, 1, 0], 1)])
        );
        assert_eq!(pieri_sym(&w(&[0, 0, 0]), 2), ms(&[(&[2, 0, 0], 1)]));
        assert_eq!(pieri_sym(&w(&[1, 0]), 1), ms(&[(&[2, 0], 1), (&[0, 0], 1)]));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(
            lr_decompose(&w(&[1, 0, 0]), &w(&[1, 0, 0])),
            ms(&[(&[2, 0, 0], 1), (&[1, 1, 0], 1)])
        );
        assert_eq!(
            lr_decompose(&w(&[2, 1, 0]), &w(&[1, 0, 0])),
            ms(&[(&[3, 1, 0], 1), (&[2, 2, 0], 1), (&[1, 0, 0], 1)])
        );
        assert_eq!(contains(&w(&[2, 1, 0]), &w(&[2, 1, 0]), &w(&[2, 1, 0])), 2);
        assert_eq!(contains(&w(&[4, 0, 0]), &w(&[3, 0, 0]), &w(&[1, 0, 0])), 1);
        assert_eq!(contains(&w(&[5, 0, 0]), &w(&[3, 0, 0]), &w(&[1, 0, 0])), 0);
    }

    #[test]
    fn classical_lr_coefficient() {
        assert_eq!(lr_coefficient(&[3, 2, 1], &[2, 1], &[2, 1]), 2);
        assert_eq!(lr_coefficient(&[4, 2], &[2, 1], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[3, 3], &[2, 1], &[2, 1]), 1);
        assert_eq!(lr_coefficient(&[3], &[2], &[2]), 0);
    }

    #[test]
    fn eight_by_eight() {
        let p = lr_decompose(&w(&[2, 1, 0]), &w(&[2, 1, 0]));
        assert_eq!(p.dim(), 64);
        assert_eq!(p.multiplicity(&w(&[0, 0, 0])), 1);
        assert_eq!(p.multiplicity(&w(&[2, 1, 0])), 2);
        assert_eq!(p.multiplicity(&w(&[3, 0, 0])), 1);
        assert_eq!(p.multiplicity(&w(&[3, 3, 0])), 1);
        assert_eq!(p.multiplicity(&w(&[4, 2, 0])), 1);
    }

    #[test]
    fn dual_standard_product() {
        let a = WeightMultiset::singleton(Weight::standard(3));
        let t = tensor_sym_dual(&a, 1);
        assert_eq!(t, ms(&[(&[0, 0, 0], 1), (&[2, 1, 0], 1)]));
    }

    #[test]
    fn gap_bound_examples() {
        for k in 0..6 {
            assert!(check_lr_gap_bound(&Weight::trivial(3), k));
        }
        assert!(check_lr_gap_bound(&w(&[2, 1, 0]), 4));
        assert!(check_lr_gap_bound(&w(&[3, 3, 0]), 1));
    }

    #[test]
    fn strips_respect_row_cap() {
        assert_eq!(horizontal_strips(&[1], 1, 1), alloc::vec![alloc::vec![2]]);
        assert_eq!(horizontal_strips(&[1], 1, 2).len(), 2);
        assert!(horizontal_strips(&[1, 1, 1], 1, 2).is_empty());
    }
}
