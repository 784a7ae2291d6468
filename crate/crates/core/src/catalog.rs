//! Enumeration of irreducibles by dimension and of the candidate
//! exceptional pairs `(Q, S)`.
//!
//! With `W = 0`, a two-step extension is exceptional when `Q` has fewer than
//! `n² − 1` trivial summands and either `Q` is bad or `dim S < n² + 2n`. Both
//! branches are finite:
//!
//! * bad `Q` are sums of irreducibles from the bad list; badness is
//!   inherited by sub-sums, so bad sums are found by a depth-first search
//!   that stops as soon as a sum turns good;
//! * small `S` are finitely many, and `Q ⊂ S ⊗ (C^n)^∨` bounds `Q`.
//!
//! `S` (for bad `Q`) and `Q` (for small `S`) range over sub-multisets of the
//! appropriate product; only pairs passing the structural test are kept.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::matmodel::ModelError;
use crate::rationality::{
    check_structural, decide_rationality, DecideConfig, Outcome, RationalityError,
    TwoStepExtension, Verdict,
};
use crate::repclass::{bad_list, Classifier, SemisimpleRep};
use crate::schur::{tensor, Weight, WeightMultiset};

/// All normalized weights of dimension at most `max_dim`, sorted by
/// dimension and then by weight.
///
/// The search runs over the gaps `a_k = λ_k − λ_(k+1)`; the Weyl dimension
/// strictly increases in every gap, so each gap is raised until the bound
/// is crossed with all later gaps at zero.
pub fn irreps_up_to_dim(n: usize, max_dim: u64) -> Vec<Weight> {
    let mut out = Vec::new();
    if max_dim == 0 || n == 0 {
        return out;
    }
    let mut gaps = alloc::vec![0u32; n.saturating_sub(1)];
    gap_search(n, max_dim, 0, &mut gaps, &mut out);
    out.sort_by_key(|w| (w.dim(), w.clone()));
    out
}

fn from_gaps(n: usize, gaps: &[u32]) -> Weight {
    let mut parts = alloc::vec![0u32; n];
    for k in (0..gaps.len()).rev() {
        parts[k] = parts[k + 1] + gaps[k];
    }
    Weight::from_partition(n, &parts)
}

fn gap_search(n: usize, max_dim: u64, k: usize, gaps: &mut Vec<u32>, out: &mut Vec<Weight>) {
    if k == gaps.len() {
        out.push(from_gaps(n, gaps));
        return;
    }
    loop {
        if from_gaps(n, gaps).dim() > max_dim {
            break;
        }
        gap_search(n, max_dim, k + 1, gaps, out);
        gaps[k] += 1;
    }
    gaps[k] = 0;
}

/// Which finiteness branch admitted a pair. `QBad` wins when both apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trigger {
    QBad,
    DimSSmall,
}

impl Trigger {
    pub fn as_str(self) -> &'static str {
        match self {
            Trigger::QBad => "Q-bad",
            Trigger::DimSSmall => "dim-S-small",
        }
    }
}

impl fmt::Display for Trigger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub n: usize,
    pub s: SemisimpleRep,
    pub q: SemisimpleRep,
    pub trigger: Trigger,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogConfig {
    /// Largest number of trivial summands in `Q`; at most `n² − 2`.
    pub max_trivials: u32,
    /// Largest `dim S` in the small-`S` branch; at most `n² + 2n − 1`.
    pub max_dim_s: u64,
    /// Largest number of summands in a bad sum of nontrivial irreducibles.
    /// Reaching it with the sum still bad aborts the enumeration.
    pub max_core_summands: u32,
    /// Apply `max_dim_s` to pairs with bad `Q` too. Off by default, since
    /// those pairs qualify whatever the size of `S`.
    pub bound_all_s: bool,
}

pub const DEFAULT_MAX_CORE_SUMMANDS: u32 = 16;

impl CatalogConfig {
    /// The clause thresholds for rank `n`.
    pub fn for_rank(n: usize) -> Self {
        let n = n as u64;
        CatalogConfig {
            max_trivials: (n * n - 2) as u32,
            max_dim_s: n * n + 2 * n - 1,
            max_core_summands: DEFAULT_MAX_CORE_SUMMANDS,
            bound_all_s: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    /// A configured cap is above what the clauses allow, or the search hit
    /// a cap before finishing.
    Cap {
        cap: &'static str,
        value: u64,
        limit: u64,
    },
    Model(ModelError),
    Rationality(RationalityError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Cap { cap, value, limit } => {
                write!(
                    f,
                    "refusing to enumerate: {cap} = {value} exceeds the limit {limit}"
                )
            }
            CatalogError::Model(e) => write!(f, "{e}"),
            CatalogError::Rationality(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CatalogError {}

impl From<ModelError> for CatalogError {
    fn from(e: ModelError) -> Self {
        CatalogError::Model(e)
    }
}

impl From<RationalityError> for CatalogError {
    fn from(e: RationalityError) -> Self {
        CatalogError::Rationality(e)
    }
}

fn validate(n: usize, config: &CatalogConfig) -> Result<(), CatalogError> {
    let defaults = CatalogConfig::for_rank(n);
    if config.max_trivials > defaults.max_trivials {
        return Err(CatalogError::Cap {
            cap: "max-trivials",
            value: u64::from(config.max_trivials),
            limit: u64::from(defaults.max_trivials),
        });
    }
    if config.max_dim_s > defaults.max_dim_s {
        return Err(CatalogError::Cap {
            cap: "max-dim-s",
            value: config.max_dim_s,
            limit: defaults.max_dim_s,
        });
    }
    Ok(())
}

/// Bad sums of nontrivial bad-list irreducibles, including the empty sum.
fn bad_cores(
    n: usize,
    classifier: &mut Classifier,
    cap: u32,
) -> Result<Vec<WeightMultiset>, CatalogError> {
    let list: Vec<Weight> = bad_list(n)
        .into_iter()
        .filter(|w| !w.is_trivial())
        .collect();
    let mut out = alloc::vec![WeightMultiset::new(n)];
    let mut stack = alloc::vec![(WeightMultiset::new(n), 0usize)];
    while let Some((core, start)) = stack.pop() {
        for (i, w) in list.iter().enumerate().skip(start) {
            let mut next = core.clone();
            next.insert(w.clone(), 1);
            if !classifier.classify(&next)?.class.is_good() {
                if next.total_count() >= cap {
                    return Err(CatalogError::Cap {
                        cap: "max-core-summands",
                        value: u64::from(next.total_count()),
                        limit: u64::from(cap),
                    });
                }
                out.push(next.clone());
                stack.push((next, i));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All multisets of irreducibles with total dimension in `1..=max_dim`.
fn small_multisets(n: usize, max_dim: u64) -> Vec<WeightMultiset> {
    let irreps = irreps_up_to_dim(n, max_dim);
    let mut out = Vec::new();
    fn rec(
        irreps: &[Weight],
        start: usize,
        left: u64,
        cur: &mut WeightMultiset,
        out: &mut Vec<WeightMultiset>,
    ) {
        for i in start..irreps.len() {
            let d = irreps[i].dim();
            if d > left {
                continue;
            }
            cur.insert(irreps[i].clone(), 1);
            out.push(cur.clone());
            rec(irreps, i, left - d, cur, out);
            cur.remove(&irreps[i], 1);
        }
    }
    rec(&irreps, 0, max_dim, &mut WeightMultiset::new(n), &mut out);
    out
}

/// Enumerate candidate exceptional pairs with `W = 0`, each with its verdict.
/// Output order: by `Q`, then by `S`.
pub fn enumerate_exceptional_candidates(
    n: usize,
    config: &CatalogConfig,
    classifier: &mut Classifier,
) -> Result<Vec<CatalogEntry>, CatalogError> {
    validate(n, config)?;
    let std = WeightMultiset::singleton(Weight::standard(n));
    let dual = WeightMultiset::singleton(Weight::standard(n).dual());
    let mut pairs: BTreeMap<(WeightMultiset, WeightMultiset), Trigger> = BTreeMap::new();
    let mut q_bad: BTreeMap<WeightMultiset, bool> = BTreeMap::new();

    // Bad Q: a bad core plus trivial summands.
    for core in bad_cores(n, classifier, config.max_core_summands)? {
        for t in 0..=config.max_trivials {
            let mut q = core.clone();
            if t > 0 {
                q.insert(Weight::trivial(n), t);
            }
            if q.is_empty() {
                continue;
            }
            q_bad.insert(q.clone(), true);
            let product = tensor(&q, &std);
            for s in product.submultisets().into_iter().filter(|s| !s.is_empty()) {
                if config.bound_all_s && s.dim() > config.max_dim_s {
                    continue;
                }
                if q.is_submultiset_of(&tensor(&s, &dual)) {
                    pairs.insert((q.clone(), s), Trigger::QBad);
                }
            }
        }
    }

    // Small S.
    for s in small_multisets(n, config.max_dim_s) {
        let product = tensor(&s, &dual);
        for q in product.submultisets().into_iter().filter(|q| !q.is_empty()) {
            if q.trivial_count() > config.max_trivials
                || pairs.contains_key(&(q.clone(), s.clone()))
            {
                continue;
            }
            if !s.is_submultiset_of(&tensor(&q, &std)) {
                continue;
            }
            let bad = match q_bad.get(&q) {
                Some(&b) => b,
                None => {
                    let b = !classifier.classify(&q)?.class.is_good();
                    q_bad.insert(q.clone(), b);
                    b
                }
            };
            let trigger = if bad {
                Trigger::QBad
            } else {
                Trigger::DimSSmall
            };
            pairs.insert((q, s.clone()), trigger);
        }
    }

    let decide = DecideConfig::default();
    let mut out = Vec::with_capacity(pairs.len());
    for ((q, s), trigger) in pairs {
        let ext = TwoStepExtension::new(n, s.clone(), q.clone(), WeightMultiset::new(n))?;
        debug_assert!(check_structural(&ext));
        let verdict = decide_rationality(&ext, classifier, &decide)?;
        out.push(CatalogEntry {
            n,
            s,
            q,
            trigger,
            verdict,
        });
    }
    Ok(out)
}

/// Entry counts by trigger and by outcome.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogSummary {
    pub total: usize,
    pub by_trigger: BTreeMap<String, usize>,
    pub by_outcome: BTreeMap<String, usize>,
}

pub fn summarize(entries: &[CatalogEntry]) -> CatalogSummary {
    let mut s = CatalogSummary {
        total: entries.len(),
        ..Default::default()
    };
    for e in entries {
        *s.by_trigger.entry(e.trigger.as_str().into()).or_insert(0) += 1;
        *s.by_outcome
            .entry(e.verdict.outcome.as_str().into())
            .or_insert(0) += 1;
    }
    s
}

/// Re-check the clauses an entry must satisfy: structural containment,
/// fewer than `n² − 1` trivial summands in `Q`, and the trigger.
pub fn entry_is_admissible(
    e: &CatalogEntry,
    classifier: &mut Classifier,
) -> Result<bool, ModelError> {
    let n = e.n;
    let ext = TwoStepExtension {
        n,
        s: e.s.clone(),
        q: e.q.clone(),
        w: WeightMultiset::new(n),
        assume_generically_free: false,
    };
    if !check_structural(&ext) || e.q.trivial_count() >= (n * n - 1) as u32 {
        return Ok(false);
    }
    let bad = !classifier.classify(&e.q)?.class.is_good();
    Ok(match e.trigger {
        Trigger::QBad => bad,
        Trigger::DimSSmall => !bad && e.s.dim() < (n * n + 2 * n) as u64,
    })
}

/// Outcomes that make an entry exceptional or undecided.
pub fn is_unresolved(o: Outcome) -> bool {
    matches!(
        o,
        Outcome::Exceptional | Outcome::PossiblyNotGenericallyFree
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[i64]) -> Weight {
        Weight::normalize(raw.len(), raw).unwrap()
    }

    #[test]
    fn sl2_irreps() {
        let got = irreps_up_to_dim(2, 5);
        let want: Vec<Weight> = (0..5).map(|k| w(&[k, 0])).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn sl3_irreps() {
        let want: Vec<Weight> = [
            [0, 0, 0],
            [1, 0, 0],
            [1, 1, 0],
            [2, 0, 0],
            [2, 2, 0],
            [2, 1, 0],
        ]
        .iter()
        .map(|r| w(r))
        .collect();
        assert_eq!(irreps_up_to_dim(3, 8), want);
        assert_eq!(irreps_up_to_dim(3, 9), want);
    }

    #[test]
    fn caps_above_clauses_are_refused() {
        let mut c = Classifier::new(Default::default());
        let mut cfg = CatalogConfig::for_rank(3);
        cfg.max_dim_s = 15;
        let err = enumerate_exceptional_candidates(3, &cfg, &mut c).unwrap_err();
        assert!(matches!(
            err,
            CatalogError::Cap {
                cap: "max-dim-s",
                ..
            }
        ));
    }
}
