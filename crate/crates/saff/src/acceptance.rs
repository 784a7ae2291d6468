//! The acceptance suite: ten criteria, each reported as one pass/fail line.
//! Used by `saff selftest` and by the `acceptance` test target.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use saff_core::catalog::{
    entry_is_admissible, enumerate_exceptional_candidates, irreps_up_to_dim, CatalogConfig,
};
use saff_core::constructions::{exact_top_forms, linked_cubics};
use saff_core::filtration::{
    check_blocks_containment, check_duality, check_embedding_theorem, radical_filtration,
    socle_filtration,
};
use saff_core::matmodel::{model_sym_dual, sl_only_model, verify_degree_bound, AffMatrixRep};
use saff_core::rationality::{decide_rationality, DecideConfig, Outcome, TwoStepExtension};
use saff_core::repclass::Classifier;
use saff_core::schur::oracle::oracle_tensor;
use saff_core::schur::{check_lr_gap_bound, lr_decompose, Weight, WeightMultiset};

use crate::cli::{enumerate_output, RunConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {:>2} [{mark}] {}: {}",
            self.number, self.title, self.detail
        )
    }
}

pub const TITLES: [&str; 10] = [
    "LR rule agrees with the Schur polynomial oracle",
    "socle layers of polynomial models are Sym^i(C^n)^∨",
    "layers of the two worked examples",
    "unipotent entries respect the filtration degree",
    "socle of V^∨ is dual to the radical of V",
    "blocks containment and embedding into Q_0 ⊗ Sym^i(C^n)^∨",
    "LR gap inequality",
    "generic stabilizer dimensions",
    "decision procedure outcomes and monotonicity",
    "catalog determinism and admissibility at n = 3",
];

type Check = Result<String, String>;

pub fn run_criterion(number: usize, run: &RunConfig) -> Option<CriterionResult> {
    let outcome = match number {
        1 => lr_oracle(),
        2 => canonical_layers(),
        3 => worked_examples(run),
        4 => degree_bound(run),
        5 => duality(run),
        6 => blocks(run),
        7 => gap_inequality(),
        8 => stabilizers(run),
        9 => decisions(run),
        10 => catalog(run),
        _ => return None,
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionResult {
        number,
        title: TITLES[number - 1],
        passed,
        detail,
    })
}

pub fn run_all(run: &RunConfig) -> Vec<CriterionResult> {
    (1..=10).filter_map(|k| run_criterion(k, run)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Normalized weights of rank `n` with `|λ| ≤ max_size`.
pub fn weights_up_to_size(n: usize, max_size: u32) -> Vec<Weight> {
    fn rec(n: usize, left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
        if cur.len() + 1 == n {
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

fn lr_oracle() -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 2..=4 {
        let ws = weights_up_to_size(n, 4);
        for a in &ws {
            for b in &ws {
                let lr = lr_decompose(a, b);
                let oracle = oracle_tensor(a, b);
                ensure(lr == oracle, || {
                    format!("{a} ⊗ {b}: LR gives {lr}, oracle gives {oracle}")
                })?;
                pairs += 1;
            }
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(120), || format!("took {took:?}"))?;
    Ok(format!("{pairs} pairs at n = 2, 3, 4 in {took:.2?}"))
}

fn singleton_list(ws: &[Weight]) -> Vec<WeightMultiset> {
    ws.iter()
        .map(|w| WeightMultiset::singleton(w.clone()))
        .collect()
}

fn canonical_layers() -> Check {
    let mut count = 0;
    for n in 1..=3 {
        for l in 0..=4u32 {
            let m = model_sym_dual(n, l, usize::MAX).map_err(|e| e.to_string())?;
            let f = socle_filtration(&m).map_err(|e| e.to_string())?;
            let want = singleton_list(
                &(0..=l)
                    .map(|i| Weight::sym(n, i).dual())
                    .collect::<Vec<_>>(),
            );
            ensure(f.layers() == want.as_slice(), || {
                format!("n = {n}, l = {l}: got {:?}", f.layers())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} models, n ≤ 3, l ≤ 4"))
}

fn dual_of(n: usize, partition: &[u32]) -> Weight {
    let mut p = partition.to_vec();
    p.resize(n, 0);
    Weight::from_partition(n, &p).dual()
}

fn layer(ws: &[Weight]) -> WeightMultiset {
    let n = ws[0].rank();
    WeightMultiset::from_pairs(n, ws.iter().map(|w| (w.clone(), 1))).expect("same rank")
}

fn worked_examples(run: &RunConfig) -> Check {
    let n = 3;
    let forms = exact_top_forms(n, run.max_model_dim).map_err(|e| e.to_string())?;
    let got = radical_filtration(&forms).map_err(|e| e.to_string())?;
    let want = vec![
        layer(&[dual_of(n, &[1])]),
        layer(&[dual_of(n, &[2])]),
        layer(&[dual_of(n, &[3]), dual_of(n, &[1, 1])]),
    ];
    ensure(got.layers() == want.as_slice(), || {
        format!(
            "exact forms at n = 3: got {:?}, want {want:?}",
            got.layers()
        )
    })?;
    let n = 4;
    let cubics = linked_cubics(n, run.max_model_dim).map_err(|e| e.to_string())?;
    let got = radical_filtration(&cubics).map_err(|e| e.to_string())?;
    let want = vec![
        layer(&[dual_of(n, &[3])]),
        layer(&[
            dual_of(n, &[4]),
            dual_of(n, &[2, 1]),
            dual_of(n, &[1, 1, 1]),
        ]),
        layer(&[
            dual_of(n, &[5]),
            dual_of(n, &[3, 1]),
            dual_of(n, &[2, 1, 1]),
        ]),
    ];
    ensure(got.layers() == want.as_slice(), || {
        format!(
            "linked cubics at n = 4: got {:?}, want {want:?}",
            got.layers()
        )
    })?;
    Ok(format!(
        "exact forms (n = 3, dim {}) and linked cubics (n = 4, dim {}) match",
        forms.dim(),
        cubics.dim()
    ))
}

/// Every model the constructors produce at `n ≤ 3` with polynomial degree
/// at most 4, plus duals, sums, products and the 1-form example.
pub fn model_sweep(cap: usize) -> Result<Vec<(String, AffMatrixRep)>, String> {
    let err = |e: saff_core::matmodel::ModelError| e.to_string();
    let mut out = Vec::new();
    for n in 1..=3 {
        for l in 0..=4 {
            let m = model_sym_dual(n, l, cap).map_err(err)?;
            out.push((format!("polynomials n={n} l={l}"), m.clone()));
            out.push((format!("dual of polynomials n={n} l={l}"), m.dual()));
        }
    }
    for n in 2..=3 {
        let std = AffMatrixRep::standard(n);
        let lin = model_sym_dual(n, 1, cap).map_err(err)?;
        let quad = model_sym_dual(n, 2, cap).map_err(err)?;
        out.push((format!("standard n={n}"), std.clone()));
        out.push((
            format!("linear ⊕ standard n={n}"),
            lin.direct_sum(&std).map_err(err)?,
        ));
        out.push((
            format!("linear ⊗ quadratic n={n}"),
            lin.tensor(&quad, cap).map_err(err)?,
        ));
        out.push((
            format!("linear ⊗ dual linear n={n}"),
            lin.tensor(&lin.dual(), cap).map_err(err)?,
        ));
        out.push((
            format!("Sym^2 of linear n={n}"),
            lin.sym_power(2, cap).map_err(err)?,
        ));
        out.push((
            format!("Λ^2 of linear n={n}"),
            lin.wedge_power(2, cap).map_err(err)?,
        ));
        out.push((
            format!("adjoint n={n}"),
            sl_only_model(&Weight::adjoint(n), cap).map_err(err)?,
        ));
    }
    out.push((
        "exact forms n=3".into(),
        exact_top_forms(3, cap).map_err(err)?,
    ));
    Ok(out)
}

fn sweep_check(
    run: &RunConfig,
    what: &str,
    check: impl Fn(&AffMatrixRep) -> Result<bool, String>,
) -> Check {
    let models = model_sweep(run.max_model_dim)?;
    for (name, m) in &models {
        ensure(check(m)?, || format!("{what} fails for {name}"))?;
    }
    Ok(format!("{} models", models.len()))
}

fn degree_bound(run: &RunConfig) -> Check {
    sweep_check(run, "degree bound", |m| {
        let soc = socle_filtration(m).map_err(|e| e.to_string())?;
        let rad = radical_filtration(m).map_err(|e| e.to_string())?;
        Ok(verify_degree_bound(m, &soc) && verify_degree_bound(m, &rad))
    })
}

fn duality(run: &RunConfig) -> Check {
    sweep_check(run, "duality", |m| {
        check_duality(m).map_err(|e| e.to_string())
    })
}

fn blocks(run: &RunConfig) -> Check {
    sweep_check(run, "blocks or embedding", |m| {
        let soc = socle_filtration(m).map_err(|e| e.to_string())?;
        let rad = radical_filtration(m).map_err(|e| e.to_string())?;
        let embed = check_embedding_theorem(m).map_err(|e| e.to_string())?;
        Ok(check_blocks_containment(&soc) && check_blocks_containment(&rad) && embed)
    })
}

fn gap_inequality() -> Check {
    let n = 4;
    let mut count = 0;
    for w in weights_up_to_size(n, 15)
        .into_iter()
        .filter(|w| w.parts()[0] <= 5)
    {
        for k in 0..=5 {
            ensure(check_lr_gap_bound(&w, k), || {
                format!("fails for W = {w}, k = {k}")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} pairs (W, k) at n = 4 with λ1(W) ≤ 5, k ≤ 5"
    ))
}

fn stabilizers(run: &RunConfig) -> Check {
    let seeds = [run.seed, run.seed.wrapping_add(1), run.seed.wrapping_add(2)];
    let mut count = 0;
    for n in 3..=4usize {
        let one = |w: Weight, k: u32| WeightMultiset::from_pairs(n, [(w, k)]).expect("rank n");
        let mut cases = vec![
            ("C^n", one(Weight::standard(n), 1), n * n - 1 - n),
            ("Ad_0", one(Weight::adjoint(n), 1), n - 1),
            ("Sym^2", one(Weight::sym(n, 2), 1), n * (n - 1) / 2),
            ("n·C^n", one(Weight::standard(n), n as u32), 0),
        ];
        if n == 4 {
            cases.push(("Λ^2", one(Weight::wedge(4, 2), 1), 10));
        }
        for seed in seeds {
            let mut c = Classifier::new(saff_core::repclass::StabilizerConfig {
                seed,
                ..run.stabilizer()
            });
            for (name, rep, want) in &cases {
                let got = c
                    .stabilizer_dimension(rep)
                    .map_err(|e| e.to_string())?
                    .stab_dim;
                ensure(got == *want, || {
                    format!("{name} at n = {n}, seed {seed}: {got} ≠ {want}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} computations, seeds {seeds:?}"))
}

fn ms(n: usize, pairs: &[(Weight, u32)]) -> WeightMultiset {
    WeightMultiset::from_pairs(n, pairs.iter().cloned()).expect("rank n")
}

/// The hand-built instances: name, extension, expected outcome.
pub fn decision_instances() -> Vec<(&'static str, TwoStepExtension, Outcome)> {
    let ext =
        |n, s, q| TwoStepExtension::new(n, s, q, WeightMultiset::new(n)).expect("valid ranks");
    let b = ext(
        3,
        ms(3, &[(Weight::standard(3), 8)]),
        ms(3, &[(Weight::trivial(3), 8)]),
    )
    .assuming_free(true);
    let a = ext(
        3,
        ms(3, &[(dual_of(3, &[4, 1]), 1)]),
        ms(3, &[(dual_of(3, &[3]), 1)]),
    );
    let exceptional = ext(
        10,
        ms(10, &[(Weight::wedge(10, 3), 1)]),
        ms(10, &[(Weight::wedge(10, 2), 1)]),
    )
    .assuming_free(true);
    let pngf = ext(
        3,
        ms(3, &[(Weight::sym(3, 2), 1)]),
        ms(3, &[(Weight::standard(3), 1)]),
    );
    vec![
        ("8 trivial summands in Q", b, Outcome::RationalByB),
        ("good Q, dim S = 24", a, Outcome::RationalByA),
        (
            "Q = Λ^2(C^10), S = Λ^3(C^10)",
            exceptional,
            Outcome::Exceptional,
        ),
        ("Q = C^3", pngf, Outcome::PossiblyNotGenericallyFree),
    ]
}

fn decisions(run: &RunConfig) -> Check {
    let config = DecideConfig {
        max_w_slots: run.max_w_slots,
    };
    let mut c = Classifier::new(run.stabilizer());
    let instances = decision_instances();
    for (name, ext, want) in &instances {
        let v = decide_rationality(ext, &mut c, &config).map_err(|e| e.to_string())?;
        ensure(v.outcome == *want, || {
            format!("{name}: got {}, want {want}", v.outcome)
        })?;
    }
    let base = instances[1].1.clone();
    let pool = irreps_up_to_dim(3, 15);
    for k in 0..100u64 {
        let seed = run.seed.wrapping_add(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ext = base.clone();
        for _ in 0..rng.gen_range(1..=3) {
            ext.w.insert(pool[rng.gen_range(0..pool.len())].clone(), 1);
        }
        let v = decide_rationality(&ext, &mut c, &config).map_err(|e| e.to_string())?;
        ensure(v.outcome == Outcome::RationalByA, || {
            format!(
                "augmentation with seed {seed} (W = {}) gives {}",
                ext.w, v.outcome
            )
        })?;
    }
    Ok("4 instances, 100 augmentations of W keep RationalByA".into())
}

fn catalog(run: &RunConfig) -> Check {
    let n = 3;
    let config = CatalogConfig::for_rank(n);
    let start = Instant::now();
    let first = enumerate_output(n, &config, &run.stabilizer(), true).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let second =
        enumerate_output(n, &config, &run.stabilizer(), true).map_err(|e| e.to_string())?;
    ensure(first == second, || "two runs differ".into())?;
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    let mut c = Classifier::new(run.stabilizer());
    let entries =
        enumerate_exceptional_candidates(n, &config, &mut c).map_err(|e| e.to_string())?;
    ensure(first.lines().count() == entries.len() + 1, || {
        "line count mismatch".into()
    })?;
    for e in &entries {
        let ok = entry_is_admissible(e, &mut c).map_err(|e| e.to_string())?;
        ensure(ok, || {
            format!("entry Q = {}, S = {} fails its clauses", e.q, e.s)
        })?;
    }
    Ok(format!(
        "{} entries, identical across runs, {took:.2?} per run",
        entries.len()
    ))
}
