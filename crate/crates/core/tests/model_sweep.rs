use saff_core::constructions::{exact_top_forms, linked_cubics};
use saff_core::filtration::{
    check_blocks_containment, check_duality, check_embedding_theorem, radical_filtration,
    socle_filtration,
};
use saff_core::matmodel::{
    model_sym_dual, sl_only_model, verify_degree_bound, AffMatrixRep, DEFAULT_MAX_MODEL_DIM,
};
use saff_core::schur::{Weight, WeightMultiset};

const CAP: usize = DEFAULT_MAX_MODEL_DIM;

fn dual_of(n: usize, partition: &[u32]) -> Weight {
    Weight::from_partition(n, &padded(n, partition)).dual()
}

fn padded(n: usize, partition: &[u32]) -> Vec<u32> {
    let mut p = partition.to_vec();
    p.resize(n, 0);
    p
}

fn ms(parts: &[Weight]) -> WeightMultiset {
    let n = parts[0].rank();
    WeightMultiset::from_pairs(n, parts.iter().map(|w| (w.clone(), 1))).unwrap()
}

/// Small models built from the constructors, with a label for messages.
fn sweep() -> Vec<(String, AffMatrixRep)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for l in 0..=4 {
            let m = model_sym_dual(n, l, CAP).unwrap();
            out.push((format!("sym_dual({n},{l})"), m.clone()));
            out.push((format!("sym_dual({n},{l})^∨"), m.dual()));
        }
    }
    for n in 2..=3 {
        let std = AffMatrixRep::standard(n);
        out.push((format!("standard({n})"), std.clone()));
        let sum = model_sym_dual(n, 1, CAP).unwrap().direct_sum(&std).unwrap();
        out.push((format!("sym_dual({n},1) ⊕ standard({n})"), sum));
        let t = model_sym_dual(n, 1, CAP)
            .unwrap()
            .tensor(&model_sym_dual(n, 2, CAP).unwrap(), CAP)
            .unwrap();
        out.push((format!("sym_dual({n},1) ⊗ sym_dual({n},2)"), t));
        let ad = sl_only_model(&Weight::adjoint(n), CAP).unwrap();
        out.push((format!("adjoint({n})"), ad));
    }
    out.push((
        "exact_top_forms(3)".into(),
        exact_top_forms(3, CAP).unwrap(),
    ));
    out
}

#[test]
fn every_model_satisfies_the_invariants() {
    for (name, m) in sweep() {
        m.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn socle_layers_of_polynomials_are_symmetric_powers() {
    for n in 1..=3 {
        for l in 0..=4u32 {
            let m = model_sym_dual(n, l, CAP).unwrap();
            let f = socle_filtration(&m).unwrap();
            let want: Vec<WeightMultiset> =
                (0..=l).map(|i| ms(&[Weight::sym(n, i).dual()])).collect();
            assert_eq!(f.layers(), want.as_slice(), "n={n} l={l}");
        }
    }
}

#[test]
fn filtration_theorems_hold_on_the_sweep() {
    for (name, m) in sweep() {
        let soc = socle_filtration(&m).unwrap();
        let rad = radical_filtration(&m).unwrap();
        assert!(
            verify_degree_bound(&m, &soc),
            "{name}: degree bound (socle)"
        );
        assert!(
            verify_degree_bound(&m, &rad),
            "{name}: degree bound (radical)"
        );
        assert!(check_duality(&m).unwrap(), "{name}: duality");
        assert!(check_blocks_containment(&soc), "{name}: blocks (socle)");
        assert!(check_blocks_containment(&rad), "{name}: blocks (radical)");
        assert!(check_embedding_theorem(&m).unwrap(), "{name}: embedding");
        assert_eq!(soc.semisimplification(), rad.semisimplification(), "{name}");
    }
}

#[test]
fn exact_forms_layers() {
    let n = 3;
    let m = exact_top_forms(n, CAP).unwrap();
    let rad = radical_filtration(&m).unwrap();
    let want = vec![
        ms(&[dual_of(n, &[1])]),
        ms(&[dual_of(n, &[2])]),
        ms(&[dual_of(n, &[3]), dual_of(n, &[1, 1])]),
    ];
    assert_eq!(rad.layers(), want.as_slice());
    let soc = socle_filtration(&m).unwrap();
    let want = vec![
        ms(&[dual_of(n, &[1])]),
        ms(&[dual_of(n, &[2]), dual_of(n, &[1, 1])]),
        ms(&[dual_of(n, &[3])]),
    ];
    assert_eq!(soc.layers(), want.as_slice());
}

#[test]
fn linked_cubics_layers() {
    let n = 4;
    let m = linked_cubics(n, CAP).unwrap();
    let rad = radical_filtration(&m).unwrap();
    let want = vec![
        ms(&[dual_of(n, &[3])]),
        ms(&[
            dual_of(n, &[4]),
            dual_of(n, &[2, 1]),
            dual_of(n, &[1, 1, 1]),
        ]),
        ms(&[
            dual_of(n, &[5]),
            dual_of(n, &[3, 1]),
            dual_of(n, &[2, 1, 1]),
        ]),
    ];
    assert_eq!(rad.layers(), want.as_slice());
}

#[test]
fn sl_only_models_have_one_layer() {
    for w in [
        Weight::adjoint(3),
        Weight::sym(3, 2),
        Weight::from_partition(4, &[1, 1, 0, 0]),
    ] {
        let m = sl_only_model(&w, CAP).unwrap();
        assert_eq!(socle_filtration(&m).unwrap().layers(), &[ms(std::slice::from_ref(&w))]);
        assert_eq!(radical_filtration(&m).unwrap().layers(), &[ms(&[w])]);
    }
}
