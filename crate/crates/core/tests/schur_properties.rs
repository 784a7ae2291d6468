use proptest::prelude::*;
use saff_core::catalog::irreps_up_to_dim;
use saff_core::schur::oracle::oracle_tensor;
use saff_core::schur::{lr_decompose, pieri_sym, tensor, tensor_sym, Weight, WeightMultiset};

/// Normalized weights of rank `n` with `|λ| ≤ max_size`.
fn small_weights(n: usize, max_size: u32) -> Vec<Weight> {
    fn rec(n: usize, left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
        if cur.len() == n - 1 {
            let mut parts = cur.clone();
            parts.push(0);
            out.push(Weight::from_partition(n, &parts));
            return;
        }
        for p in 0..=left.min(cap) {
            cur.push(p);
            rec(n, left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_size, max_size, &mut Vec::new(), &mut out);
    out
}

fn weight_strategy() -> impl Strategy<Value = Weight> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0u32..3, n - 1).prop_map(move |gaps| {
            let mut parts = vec![0u32; n];
            for k in (0..n - 1).rev() {
                parts[k] = parts[k + 1] + gaps[k];
            }
            Weight::from_partition(n, &parts)
        })
    })
}

fn pair_strategy() -> impl Strategy<Value = (Weight, Weight)> {
    weight_strategy().prop_flat_map(|a| {
        let n = a.rank();
        prop::collection::vec(0u32..3, n - 1).prop_map(move |gaps| {
            let mut parts = vec![0u32; n];
            for k in (0..n - 1).rev() {
                parts[k] = parts[k + 1] + gaps[k];
            }
            (a.clone(), Weight::from_partition(n, &parts))
        })
    })
}

#[test]
fn lr_matches_oracle_on_small_weights() {
    for n in 2..=4 {
        let ws = small_weights(n, 4);
        for a in &ws {
            for b in &ws {
                assert_eq!(lr_decompose(a, b), oracle_tensor(a, b), "{a} ⊗ {b}");
            }
        }
    }
}

#[test]
fn irreps_match_brute_force() {
    for n in 2..=4 {
        for d in [1u64, 2, 7, 20, 50] {
            let mut brute: Vec<Weight> = small_weights(n, d as u32 * (n as u32 - 1))
                .into_iter()
                .filter(|w| w.parts()[0] <= d as u32 && w.dim() <= d)
                .collect();
            brute.sort_by_key(|w| (w.dim(), w.clone()));
            assert_eq!(irreps_up_to_dim(n, d), brute, "n={n} D={d}");
        }
    }
}

proptest! {
    #[test]
    fn dual_is_an_involution(w in weight_strategy()) {
        prop_assert_eq!(w.dual().dual(), w.clone());
        prop_assert_eq!(w.dual().dim(), w.dim());
    }

    #[test]
    fn tensor_is_symmetric_and_dimensions_multiply((a, b) in pair_strategy()) {
        let ab = lr_decompose(&a, &b);
        prop_assert_eq!(&ab, &lr_decompose(&b, &a));
        prop_assert_eq!(ab.dim(), a.dim() * b.dim());
    }

    #[test]
    fn dual_of_product_is_product_of_duals((a, b) in pair_strategy()) {
        prop_assert_eq!(lr_decompose(&a, &b).dual(), lr_decompose(&a.dual(), &b.dual()));
    }

    #[test]
    fn pieri_agrees_with_lr(w in weight_strategy(), k in 0u32..4) {
        let sym = Weight::sym(w.rank(), k);
        prop_assert_eq!(pieri_sym(&w, k), lr_decompose(&w, &sym));
    }

    #[test]
    fn multiset_tensor_is_additive((a, b) in pair_strategy(), k in 0u32..3) {
        let n = a.rank();
        let both = WeightMultiset::singleton(a.clone()).sum(&WeightMultiset::singleton(b.clone()));
        let sym = WeightMultiset::singleton(Weight::sym(n, k));
        let split = tensor(&WeightMultiset::singleton(a), &sym)
            .sum(&tensor(&WeightMultiset::singleton(b), &sym));
        prop_assert_eq!(tensor(&both, &sym), split.clone());
        prop_assert_eq!(tensor_sym(&both, k), split);
    }
}
