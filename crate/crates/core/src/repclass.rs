//! Good and bad `SL_n` representations.
//!
//! A representation is bad when no group isogenous to `SL_n` acts on it
//! generically freely. Irreducible summands off the known bad list make a
//! representation good outright; sums of listed irreducibles are decided by
//! the dimension of the generic stabilizer in `sl_n`, computed by exact rank
//! at random integer points.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{q, EchelonBasis, SparseMatrix, Q};
use crate::matmodel::{AffMatrixRep, ModelError};
use crate::schur::{Weight, WeightMultiset};
use crate::sl::sl_dim;

/// A completely reducible `SL_n` representation, given by its summands.
pub type SemisimpleRep = WeightMultiset;

pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_TRIALS: u32 = 3;
/// Random coordinates are drawn from `[−B, B]`.
pub const DEFAULT_COORD_BOUND: i64 = 100;

/// Canonical weights of `C`, `C^n`, `Λ²`, `Sym²`, `Ad_0` and their duals.
pub fn bad_list(n: usize) -> Vec<Weight> {
    assert!(n >= 2, "bad list needs n >= 2");
    let base = [
        Weight::trivial(n),
        Weight::standard(n),
        Weight::wedge(n, 2),
        Weight::sym(n, 2),
        Weight::adjoint(n),
    ];
    let mut out: Vec<Weight> = base.iter().flat_map(|w| [w.clone(), w.dual()]).collect();
    out.sort();
    out.dedup();
    out
}

pub fn on_bad_list(w: &Weight) -> bool {
    bad_list(w.rank()).contains(w)
}

/// Matrices of `sl_n` acting on `Σ^w(C^n)`, with zero translations.
///
/// Writing `a_k = w_k − w_(k+1)`, the irreducible is the submodule of
/// `⊗_k Sym^(a_k)(Λ^k C^n)` generated by `⊗_k (e_1 ∧ … ∧ e_k)^(a_k)`, which
/// is a highest weight vector of weight `w`. `max_dim` caps the ambient
/// product.
pub fn build_tensor_model(w: &Weight, max_dim: usize) -> Result<AffMatrixRep, ModelError> {
    let n = w.rank();
    let std = AffMatrixRep::standard(n);
    let mut ambient = AffMatrixRep::trivial(n, 1);
    // Index of the highest weight vector inside `ambient`.
    let mut hw = 0usize;
    for k in 1..n {
        let a = w.parts()[k - 1] - w.parts()[k];
        if a == 0 {
            continue;
        }
        let factor = std.wedge_power(k as u32, max_dim)?.sym_power(a, max_dim)?;
        // In both powers the first basis tuple is the one built from e_1..e_k.
        hw *= factor.dim();
        ambient = ambient.tensor(&factor, max_dim)?;
    }
    let sub = ambient.generated_submodule(&[vec![(hw, q(1))]]);
    ambient.restrict(&sub)
}

/// Generic stabilizer dimension of a representation in `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub rep: SemisimpleRep,
    pub stab_dim: usize,
    pub trials: u32,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerConfig {
    pub seed: u64,
    pub trials: u32,
    pub coord_bound: i64,
    pub max_model_dim: usize,
}

impl Default for StabilizerConfig {
    fn default() -> Self {
        StabilizerConfig {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            coord_bound: DEFAULT_COORD_BOUND,
            max_model_dim: crate::matmodel::DEFAULT_MAX_MODEL_DIM,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    Good,
    Bad,
    /// The stabilizer in `sl_n` is zero, so the generic stabilizer is finite;
    /// whether some isogenous group acts with trivial stabilizer is not
    /// decided.
    GoodHeuristic,
}

impl Classification {
    pub fn is_good(self) -> bool {
        matches!(self, Classification::Good | Classification::GoodHeuristic)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Good => "Good",
            Classification::Bad => "Bad",
            Classification::GoodHeuristic => "GoodHeuristic",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of [`Classifier::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    pub class: Classification,
    /// First summand (in weight order) outside the bad list, if any.
    pub off_list: Option<Weight>,
    /// Present when the stabilizer engine ran.
    pub stabilizer: Option<StabilizerReport>,
    /// The bad list is only known to be complete for `n > 9`; below that an
    /// off-list verdict rests on the list alone.
    pub list_complete: bool,
}

/// Classifier with caches for irreducible models and earlier verdicts.
#[derive(Clone, Debug)]
pub struct Classifier {
    config: StabilizerConfig,
    models: BTreeMap<Weight, AffMatrixRep>,
    verdicts: BTreeMap<WeightMultiset, ClassifyReport>,
}

impl Classifier {
    pub fn new(config: StabilizerConfig) -> Self {
        Classifier {
            config,
            models: BTreeMap::new(),
            verdicts: BTreeMap::new(),
        }
    }

    pub fn config(&self) -> &StabilizerConfig {
        &self.config
    }

    fn model(&mut self, w: &Weight) -> Result<&AffMatrixRep, ModelError> {
        if !self.models.contains_key(w) {
            let m = build_tensor_model(w, self.config.max_model_dim)?;
            self.models.insert(w.clone(), m);
        }
        Ok(&self.models[w])
    }

    /// Minimum over the configured trials of `dim {X ∈ sl_n : X·v = 0}` at a
    /// random integer point `v`. All trials draw from one generator seeded
    /// with the configured seed.
    pub fn stabilizer_dimension(
        &mut self,
        rep: &SemisimpleRep,
    ) -> Result<StabilizerReport, ModelError> {
        let n = rep.rank();
        let g = sl_dim(n);
        let mut models = Vec::new();
        for (w, m) in rep.iter() {
            if !w.is_trivial() {
                models.push((self.model(w)?.sl_gens().to_vec(), m));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        let bound = self.config.coord_bound;
        let mut best = g;
        for _ in 0..self.config.trials.max(1) {
            let rank = orbit_tangent_rank(&models, g, &mut |dim| {
                (0..dim).map(|_| q(rng.gen_range(-bound..=bound))).collect()
            });
            best = best.min(g - rank);
        }
        Ok(StabilizerReport {
            rep: rep.clone(),
            stab_dim: best,
            trials: self.config.trials.max(1),
            seed: self.config.seed,
        })
    }

    /// Off-list summand ⇒ `Good`. Otherwise run the stabilizer engine:
    /// positive dimension ⇒ `Bad`, zero ⇒ `GoodHeuristic`.
    pub fn classify(&mut self, rep: &SemisimpleRep) -> Result<ClassifyReport, ModelError> {
        if let Some(hit) = self.verdicts.get(rep) {
            return Ok(hit.clone());
        }
        let n = rep.rank();
        let list = bad_list(n);
        let list_complete = n > 9;
        let off_list = rep.weights().find(|w| !list.contains(w)).cloned();
        let report = if off_list.is_some() {
            ClassifyReport {
                class: Classification::Good,
                off_list,
                stabilizer: None,
                list_complete,
            }
        } else {
            let s = self.stabilizer_dimension(rep)?;
            let class = if s.stab_dim > 0 {
                Classification::Bad
            } else {
                Classification::GoodHeuristic
            };
            ClassifyReport {
                class,
                off_list: None,
                stabilizer: Some(s),
                list_complete,
            }
        };
        self.verdicts.insert(rep.clone(), report.clone());
        Ok(report)
    }

    /// Smallest `t ≤ max_t` with `t·w` good (or good heuristically). `None`
    /// for the trivial weight or when no such `t` is found.
    pub fn minimal_good_power(
        &mut self,
        w: &Weight,
        max_t: u32,
    ) -> Result<Option<(u32, Classification)>, ModelError> {
        if w.is_trivial() {
            return Ok(None);
        }
        for t in 1..=max_t {
            let rep = WeightMultiset::from_pairs(w.rank(), [(w.clone(), t)])
                .expect("single weight of the right rank");
            let c = self.classify(&rep)?.class;
            if c.is_good() {
                return Ok(Some((t, c)));
            }
        }
        Ok(None)
    }
}

/// Rank of `X ↦ X·v` on `sl_n` for a random `v` in the sum of `models`
/// (each with a multiplicity), stopping early once the rank is full.
fn orbit_tangent_rank(
    models: &[(Vec<SparseMatrix>, u32)],
    g: usize,
    draw: &mut dyn FnMut(usize) -> Vec<Q>,
) -> usize {
    let mut rows = EchelonBasis::new(g);
    for (gens, mult) in models {
        let dim = gens.first().map_or(0, SparseMatrix::rows);
        for _ in 0..*mult {
            let v = draw(dim);
            if rows.dim() == g {
                continue;
            }
            // Column a of the block is X_a·v; feed its rows to the echelon basis.
            let cols: Vec<Vec<Q>> = gens.iter().map(|x| x.apply_dense(&v)).collect();
            for r in 0..dim {
                let row: Vec<Q> = cols.iter().map(|c| c[r].clone()).collect();
                rows.insert(&row);
                if rows.dim() == g {
                    break;
                }
            }
        }
    }
    rows.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matmodel::DEFAULT_MAX_MODEL_DIM;

    fn w(raw: &[i64]) -> Weight {
        Weight::normalize(raw.len(), raw).unwrap()
    }

    #[test]
    fn bad_list_sizes() {
        assert_eq!(bad_list(3).len(), 6);
        assert_eq!(
            bad_list(3).iter().filter(|x| **x == w(&[2, 1, 0])).count(),
            1
        );
        let l10 = bad_list(10);
        assert!(l10.contains(&Weight::wedge(10, 2)));
        assert!(l10.contains(&Weight::wedge(10, 2).dual()));
        assert_eq!(l10.len(), 8);
    }

    #[test]
    fn models_have_weyl_dimension() {
        for raw in [
            &[1i64, 0][..],
            &[2, 0, 0],
            &[2, 1, 0],
            &[1, 1, 0],
            &[3, 1, 0, 0],
            &[2, 1, 1, 0],
        ] {
            let wt = w(raw);
            let m = build_tensor_model(&wt, DEFAULT_MAX_MODEL_DIM).unwrap();
            assert_eq!(m.dim() as u64, wt.dim(), "{wt}");
            m.validate().unwrap();
        }
    }

    #[test]
    fn trivial_model_is_one_dimensional() {
        let m = build_tensor_model(&Weight::trivial(3), DEFAULT_MAX_MODEL_DIM).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.sl_gens().iter().all(SparseMatrix::is_zero));
    }

    #[test]
    fn tensor_model_cap() {
        let err = build_tensor_model(&w(&[6, 0, 0, 0]), 50);
        assert!(matches!(err, Err(ModelError::CapExceeded { .. })));
    }

    #[test]
    fn stabilizer_of_standard() {
        let mut c = Classifier::new(StabilizerConfig::default());
        let rep = WeightMultiset::singleton(Weight::standard(3));
        assert_eq!(c.stabilizer_dimension(&rep).unwrap().stab_dim, 5);
        let rep3 = WeightMultiset::from_pairs(3, [(Weight::standard(3), 3)]).unwrap();
        assert_eq!(c.stabilizer_dimension(&rep3).unwrap().stab_dim, 0);
        assert_eq!(
            c.classify(&rep3).unwrap().class,
            Classification::GoodHeuristic
        );
    }

    #[test]
    fn empty_and_trivial_reps_are_bad() {
        let mut c = Classifier::new(StabilizerConfig::default());
        assert_eq!(
            c.classify(&WeightMultiset::new(3)).unwrap().class,
            Classification::Bad
        );
        let t = WeightMultiset::from_pairs(3, [(Weight::trivial(3), 20)]).unwrap();
        assert_eq!(c.classify(&t).unwrap().class, Classification::Bad);
    }

    #[test]
    fn off_list_is_good() {
        let mut c = Classifier::new(StabilizerConfig::default());
        let r = c
            .classify(&WeightMultiset::singleton(Weight::sym(3, 3)))
            .unwrap();
        assert_eq!(r.class, Classification::Good);
        assert!(r.stabilizer.is_none());
    }

    #[test]
    fn minimal_power_of_standard() {
        let mut c = Classifier::new(StabilizerConfig::default());
        assert_eq!(
            c.minimal_good_power(&Weight::standard(3), 5).unwrap(),
            Some((3, Classification::GoodHeuristic))
        );
        assert_eq!(c.minimal_good_power(&Weight::trivial(3), 5).unwrap(), None);
    }
}
