use saff_core::repclass::{Classification, Classifier, StabilizerConfig};
use saff_core::schur::{Weight, WeightMultiset};

fn stab(rep: &WeightMultiset, seed: u64) -> usize {
    let mut c = Classifier::new(StabilizerConfig {
        seed,
        ..Default::default()
    });
    c.stabilizer_dimension(rep).unwrap().stab_dim
}

fn one(w: Weight, mult: u32) -> WeightMultiset {
    WeightMultiset::from_pairs(w.rank(), [(w, mult)]).unwrap()
}

#[test]
fn classical_generic_stabilizers() {
    for n in 3..=4usize {
        let cases = [
            (one(Weight::standard(n), 1), n * n - 1 - n),
            (one(Weight::adjoint(n), 1), n - 1),
            (one(Weight::sym(n, 2), 1), n * (n - 1) / 2),
            (one(Weight::standard(n), n as u32), 0),
        ];
        for seed in [1u64, 7, 20_240_917] {
            for (rep, want) in &cases {
                assert_eq!(stab(rep, seed), *want, "n={n} rep={rep} seed={seed}");
            }
        }
    }
    for seed in [1u64, 7, 20_240_917] {
        assert_eq!(stab(&one(Weight::wedge(4, 2), 1), seed), 10);
    }
}

#[test]
fn classification_examples() {
    let mut c = Classifier::new(StabilizerConfig::default());
    let wedge = one(Weight::wedge(10, 2), 1);
    assert_eq!(c.classify(&wedge).unwrap().class, Classification::Bad);
    let cubic = one(Weight::sym(3, 3), 1);
    assert_eq!(c.classify(&cubic).unwrap().class, Classification::Good);
    let r = c.classify(&one(Weight::standard(3), 3)).unwrap();
    assert_eq!(r.class, Classification::GoodHeuristic);
    assert_eq!(r.stabilizer.unwrap().stab_dim, 0);
}

#[test]
fn every_listed_irreducible_has_positive_stabilizer() {
    for n in 3..=4 {
        let mut c = Classifier::new(StabilizerConfig::default());
        for w in saff_core::repclass::bad_list(n) {
            let rep = one(w.clone(), 1);
            assert!(c.stabilizer_dimension(&rep).unwrap().stab_dim > 0, "{w}");
            assert_eq!(c.classify(&rep).unwrap().class, Classification::Bad, "{w}");
        }
    }
}

#[test]
fn good_stays_good_under_sums() {
    let n = 3;
    let list = saff_core::repclass::bad_list(n);
    let mut c = Classifier::new(StabilizerConfig::default());
    let mut sums = vec![WeightMultiset::new(n)];
    for _ in 0..3 {
        let mut next = Vec::new();
        for s in &sums {
            for w in &list {
                let mut t = s.clone();
                t.insert(w.clone(), 1);
                next.push(t);
            }
        }
        sums = next;
    }
    for s in &sums {
        if c.classify(s).unwrap().class.is_good() {
            for w in &list {
                let mut t = s.clone();
                t.insert(w.clone(), 1);
                assert!(
                    c.classify(&t).unwrap().class.is_good(),
                    "{s} good but {t} not"
                );
            }
        }
    }
}

#[test]
fn same_seed_same_report() {
    let rep = one(Weight::sym(4, 2), 1).sum(&one(Weight::standard(4), 1));
    let a = Classifier::new(StabilizerConfig::default())
        .stabilizer_dimension(&rep)
        .unwrap();
    let b = Classifier::new(StabilizerConfig::default())
        .stabilizer_dimension(&rep)
        .unwrap();
    assert_eq!(a, b);
}
