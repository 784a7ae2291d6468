use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saff_core::catalog::{
    entry_is_admissible, enumerate_exceptional_candidates, irreps_up_to_dim, CatalogConfig,
};
use saff_core::rationality::{decide_rationality, DecideConfig, Outcome, TwoStepExtension};
use saff_core::repclass::Classifier;
use saff_core::schur::{Weight, WeightMultiset};

fn w(raw: &[i64]) -> Weight {
    Weight::normalize(raw.len(), raw).unwrap()
}

fn ms(n: usize, pairs: &[(Weight, u32)]) -> WeightMultiset {
    WeightMultiset::from_pairs(n, pairs.iter().cloned()).unwrap()
}

fn decide(ext: &TwoStepExtension) -> Outcome {
    let mut c = Classifier::new(Default::default());
    decide_rationality(ext, &mut c, &DecideConfig::default())
        .unwrap()
        .outcome
}

fn good_a_instance() -> TwoStepExtension {
    let s = ms(3, &[(w(&[4, 3, 0]), 1)]);
    let q = ms(3, &[(w(&[3, 3, 0]), 1)]);
    TwoStepExtension::new(3, s, q, WeightMultiset::new(3)).unwrap()
}

#[test]
fn condition_b() {
    let n = 3;
    let s = ms(n, &[(Weight::standard(n), 8)]);
    let q = ms(n, &[(Weight::trivial(n), 8)]);
    let ext = TwoStepExtension::new(n, s, q, WeightMultiset::new(n))
        .unwrap()
        .assuming_free(true);
    assert_eq!(decide(&ext), Outcome::RationalByB);
}

#[test]
fn condition_a() {
    assert_eq!(decide(&good_a_instance()), Outcome::RationalByA);
}

#[test]
fn exceptional_instance() {
    let n = 10;
    let s = ms(n, &[(Weight::wedge(n, 3), 1)]);
    let q = ms(n, &[(Weight::wedge(n, 2), 1)]);
    let ext = TwoStepExtension::new(n, s, q, WeightMultiset::new(n))
        .unwrap()
        .assuming_free(true);
    assert_eq!(decide(&ext), Outcome::Exceptional);
}

#[test]
fn standard_quotient_is_not_generically_free() {
    let n = 3;
    let s = ms(n, &[(Weight::sym(n, 2), 1)]);
    let q = ms(n, &[(Weight::standard(n), 1)]);
    let ext = TwoStepExtension::new(n, s, q, WeightMultiset::new(n)).unwrap();
    assert_eq!(decide(&ext), Outcome::PossiblyNotGenericallyFree);
}

#[test]
fn adding_summands_to_w_keeps_condition_a() {
    let base = good_a_instance();
    let pool = irreps_up_to_dim(3, 15);
    let mut c = Classifier::new(Default::default());
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ext = base.clone();
        for _ in 0..rng.gen_range(1..=3) {
            let pick = pool[rng.gen_range(0..pool.len())].clone();
            ext.w.insert(pick, 1);
        }
        let v = decide_rationality(&ext, &mut c, &DecideConfig::default()).unwrap();
        assert_eq!(
            v.outcome,
            Outcome::RationalByA,
            "seed {seed}: W = {}",
            ext.w
        );
    }
}

#[test]
fn rank_three_catalog_is_admissible_and_reproducible() {
    let cfg = CatalogConfig::for_rank(3);
    let mut c = Classifier::new(Default::default());
    let first = enumerate_exceptional_candidates(3, &cfg, &mut c).unwrap();
    let mut fresh = Classifier::new(Default::default());
    let second = enumerate_exceptional_candidates(3, &cfg, &mut fresh).unwrap();
    assert_eq!(first, second);
    assert!(!first.is_empty());
    for e in &first {
        assert!(entry_is_admissible(e, &mut c).unwrap(), "{} / {}", e.q, e.s);
    }
    // The affine representation on C^4 restricted from GL: linear forms over constants.
    let q = ms(3, &[(Weight::standard(3).dual(), 1)]);
    let s = ms(3, &[(Weight::trivial(3), 1)]);
    let hit = first
        .iter()
        .find(|e| e.q == q && e.s == s)
        .expect("pair present");
    assert_eq!(hit.verdict.outcome, Outcome::PossiblyNotGenericallyFree);
}

#[test]
fn smaller_caps_give_a_subcatalog() {
    let mut c = Classifier::new(Default::default());
    let full = enumerate_exceptional_candidates(3, &CatalogConfig::for_rank(3), &mut c).unwrap();
    let cfg = CatalogConfig {
        max_dim_s: 9,
        max_trivials: 3,
        ..CatalogConfig::for_rank(3)
    };
    let small = enumerate_exceptional_candidates(3, &cfg, &mut c).unwrap();
    assert!(small.len() < full.len());
    for e in &small {
        assert!(e.q.trivial_count() <= 3);
        assert!(full.contains(e));
    }
}
