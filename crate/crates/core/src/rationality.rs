//! Rationality criteria for two-step extensions.
//!
//! The input is the semisimple data of `V = V_1 ⊕ W`, where `V_1` has a
//! two-step filtration with sub `S` and quotient `Q`, and `W` is a plain
//! `SL_n` representation. The quotient `V/U` is rational when either
//!
//! * (A) `W = W_1 ⊕ W_2` with `Q ⊕ W_2` good and `dim(S ⊕ W_1) ≥ n² + 2n`, or
//! * (B) `Q` contains at least `n² − 1` trivial summands,
//!
//! provided the action is generically free. Extensions meeting neither
//! condition are exceptional.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::matmodel::ModelError;
use crate::repclass::{Classifier, ClassifyReport, SemisimpleRep};
use crate::schur::{tensor, Weight, WeightMultiset};

/// `W` with more slots than this (summands counted with multiplicity) is
/// searched greedily instead of exhaustively.
pub const DEFAULT_MAX_W_SLOTS: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepExtension {
    pub n: usize,
    pub s: SemisimpleRep,
    pub q: SemisimpleRep,
    pub w: SemisimpleRep,
    /// Caller asserts the action is generically free.
    pub assume_generically_free: bool,
}

impl TwoStepExtension {
    pub fn new(
        n: usize,
        s: SemisimpleRep,
        q: SemisimpleRep,
        w: SemisimpleRep,
    ) -> Result<Self, RationalityError> {
        for (name, part) in [("S", &s), ("Q", &q), ("W", &w)] {
            if part.rank() != n {
                return Err(RationalityError::RankMismatch {
                    part: name,
                    rank: part.rank(),
                    n,
                });
            }
        }
        if n < 2 {
            return Err(RationalityError::RankTooSmall(n));
        }
        Ok(TwoStepExtension {
            n,
            s,
            q,
            w,
            assume_generically_free: false,
        })
    }

    pub fn assuming_free(mut self, flag: bool) -> Self {
        self.assume_generically_free = flag;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalityError {
    RankMismatch {
        part: &'static str,
        rank: usize,
        n: usize,
    },
    RankTooSmall(usize),
    /// `S ⊄ Q ⊗ C^n` or `Q ⊄ S ⊗ (C^n)^∨`.
    Structural {
        s_in_q: bool,
        q_in_s: bool,
    },
    Model(ModelError),
}

impl fmt::Display for RationalityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalityError::RankMismatch { part, rank, n } => {
                write!(f, "{part} has rank {rank}, expected {n}")
            }
            RationalityError::RankTooSmall(n) => write!(f, "rank {n} is below 2"),
            RationalityError::Structural { s_in_q, q_in_s } => {
                let mut parts = Vec::new();
                if !s_in_q {
                    parts.push("S is not contained in Q ⊗ C^n");
                }
                if !q_in_s {
                    parts.push("Q is not contained in S ⊗ (C^n)^∨");
                }
                write!(f, "structural containment fails: {}", parts.join("; "))
            }
            RationalityError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RationalityError {}

impl From<ModelError> for RationalityError {
    fn from(e: ModelError) -> Self {
        RationalityError::Model(e)
    }
}

/// `(S ⊂ Q ⊗ C^n, Q ⊂ S ⊗ (C^n)^∨)` with multiplicities.
pub fn structural_parts(ext: &TwoStepExtension) -> (bool, bool) {
    let n = ext.n;
    let std = WeightMultiset::singleton(Weight::standard(n));
    let dual = WeightMultiset::singleton(Weight::standard(n).dual());
    (
        ext.s.is_submultiset_of(&tensor(&ext.q, &std)),
        ext.q.is_submultiset_of(&tensor(&ext.s, &dual)),
    )
}

pub fn check_structural(ext: &TwoStepExtension) -> bool {
    let (a, b) = structural_parts(ext);
    a && b
}

/// Why the sufficient condition for generic freeness failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessFailure {
    /// `Q = C^n`.
    R1,
    /// `Q = Λ²(C^n)^∨`.
    R2,
    /// `Q` is a sum of trivial summands and copies of `(C^n)^∨`, at most
    /// `n − 1` in total.
    R3 { summands: u32 },
    /// `Q` is not good.
    QuotientBad,
}

impl FreenessFailure {
    pub fn label(&self) -> &'static str {
        match self {
            FreenessFailure::R1 => "R1",
            FreenessFailure::R2 => "R2",
            FreenessFailure::R3 { .. } => "R3",
            FreenessFailure::QuotientBad => "quotient-bad",
        }
    }
}

impl fmt::Display for FreenessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreenessFailure::R1 => write!(f, "R1: Q is the standard representation"),
            FreenessFailure::R2 => write!(f, "R2: Q is the dual of the second exterior power"),
            FreenessFailure::R3 { summands } => write!(
                f,
                "R3: Q is a sum of {summands} trivial and dual standard summands"
            ),
            FreenessFailure::QuotientBad => write!(f, "Q is bad"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    Free,
    PossiblyNotFree(FreenessFailure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    /// Result after applying the caller's assertion.
    pub freeness: Freeness,
    /// Result of the sufficient condition alone.
    pub condition: Freeness,
    pub overridden: bool,
    pub quotient: Option<ClassifyReport>,
}

fn r_list_match(q: &SemisimpleRep) -> Option<FreenessFailure> {
    let n = q.rank();
    let std = Weight::standard(n);
    if *q == WeightMultiset::singleton(std.clone()) {
        return Some(FreenessFailure::R1);
    }
    if *q == WeightMultiset::singleton(Weight::wedge(n, 2).dual()) {
        return Some(FreenessFailure::R2);
    }
    let dual = std.dual();
    let total = q.total_count();
    if total > 0
        && total <= (n as u32).saturating_sub(1)
        && q.weights().all(|w| w.is_trivial() || *w == dual)
    {
        return Some(FreenessFailure::R3 { summands: total });
    }
    None
}

/// The quotient `Q` must be good and must not be one of the shapes `R1`,
/// `R2`, `R3`.
pub fn check_generic_freeness(
    ext: &TwoStepExtension,
    classifier: &mut Classifier,
) -> Result<FreenessReport, ModelError> {
    let (condition, quotient) = match r_list_match(&ext.q) {
        Some(r) => (Freeness::PossiblyNotFree(r), None),
        None => {
            let c = classifier.classify(&ext.q)?;
            let f = if c.class.is_good() {
                Freeness::Free
            } else {
                Freeness::PossiblyNotFree(FreenessFailure::QuotientBad)
            };
            (f, Some(c))
        }
    };
    let overridden = ext.assume_generically_free && condition != Freeness::Free;
    let freeness = if ext.assume_generically_free {
        Freeness::Free
    } else {
        condition.clone()
    };
    Ok(FreenessReport {
        freeness,
        condition,
        overridden,
        quotient,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    RationalByA,
    RationalByB,
    Exceptional,
    PossiblyNotGenericallyFree,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::RationalByA => "RationalByA",
            Outcome::RationalByB => "RationalByB",
            Outcome::Exceptional => "Exceptional",
            Outcome::PossiblyNotGenericallyFree => "PossiblyNotGenericallyFree",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `W = W_1 ⊕ W_2` certifying condition (A).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub w1: SemisimpleRep,
    pub w2: SemisimpleRep,
}

/// One evaluated condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub condition: String,
    /// The hypothesis being tested, in words.
    pub clause: String,
    pub result: String,
}

fn ev(condition: impl Into<String>, clause: &str, result: impl Into<String>) -> Evidence {
    Evidence {
        condition: condition.into(),
        clause: clause.into(),
        result: result.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub evidence: Vec<Evidence>,
    /// `false` when the search over decompositions of `W` was greedy.
    pub search_complete: bool,
    pub seed: u64,
}

pub const CLAUSE_STRUCTURAL: &str = "S ⊂ Q ⊗ C^n and Q ⊂ S ⊗ (C^n)^∨";
pub const CLAUSE_FREENESS: &str =
    "Q is good and is none of C^n, Λ²(C^n)^∨, or at most n−1 copies of C and (C^n)^∨";
pub const CLAUSE_INDECOMPOSABLE: &str = "V_1 does not split off an SL_n-representation";
pub const CLAUSE_B: &str = "(B) Q contains at least n²−1 copies of C";
pub const CLAUSE_A: &str = "(A) W = W_1 ⊕ W_2 with Q ⊕ W_2 good and dim(S ⊕ W_1) ≥ n²+2n";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideConfig {
    pub max_w_slots: u32,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            max_w_slots: DEFAULT_MAX_W_SLOTS,
        }
    }
}

/// Sort key for candidate `W_2`: dimension, then the weights in order.
fn candidate_key(m: &WeightMultiset) -> (u64, Vec<(Weight, u32)>) {
    (m.dim(), m.iter().map(|(w, k)| (w.clone(), k)).collect())
}

fn class_text(r: &ClassifyReport) -> String {
    match (&r.stabilizer, &r.off_list) {
        (Some(s), _) => format!("{} (stabilizer dimension {})", r.class, s.stab_dim),
        (None, Some(w)) => format!("{} (summand {w} is not on the bad list)", r.class),
        (None, None) => r.class.to_string(),
    }
}

/// Decide which of (A), (B) applies.
pub fn decide_rationality(
    ext: &TwoStepExtension,
    classifier: &mut Classifier,
    config: &DecideConfig,
) -> Result<Verdict, RationalityError> {
    let n = ext.n;
    let seed = classifier.config().seed;
    let (s_in_q, q_in_s) = structural_parts(ext);
    if !(s_in_q && q_in_s) {
        return Err(RationalityError::Structural { s_in_q, q_in_s });
    }
    let mut evidence = alloc::vec![ev("structural", CLAUSE_STRUCTURAL, "holds")];

    let fr = check_generic_freeness(ext, classifier)?;
    let fr_text = match (&fr.condition, fr.overridden) {
        (Freeness::Free, _) => match &fr.quotient {
            Some(c) => format!("holds: Q is {}", class_text(c)),
            None => "holds".to_string(),
        },
        (Freeness::PossiblyNotFree(r), true) => {
            format!("fails ({r}); generic freeness asserted by caller")
        }
        (Freeness::PossiblyNotFree(r), false) => format!("fails ({r})"),
    };
    evidence.push(ev("generic-freeness", CLAUSE_FREENESS, fr_text));
    if fr.freeness != Freeness::Free {
        return Ok(Verdict {
            outcome: Outcome::PossiblyNotGenericallyFree,
            witness: None,
            evidence,
            search_complete: true,
            seed,
        });
    }
    evidence.push(ev(
        "indecomposable",
        CLAUSE_INDECOMPOSABLE,
        "assumed by caller",
    ));

    let trivials = ext.q.trivial_count();
    let need_b = (n * n - 1) as u32;
    if trivials >= need_b {
        evidence.push(ev("B", CLAUSE_B, format!("holds: {trivials} ≥ {need_b}")));
        return Ok(Verdict {
            outcome: Outcome::RationalByB,
            witness: None,
            evidence,
            search_complete: true,
            seed,
        });
    }
    evidence.push(ev("B", CLAUSE_B, format!("fails: {trivials} < {need_b}")));

    let threshold = (n * n + 2 * n) as u64;
    let total = ext.s.dim() + ext.w.dim();
    // dim(S ⊕ W_1) = dim S + dim W − dim W_2
    let budget = total.checked_sub(threshold);
    let slots = ext.w.total_count();
    let (witness, complete) = if slots <= config.max_w_slots {
        (
            search_exhaustive(ext, budget, threshold, classifier, &mut evidence)?,
            true,
        )
    } else {
        evidence.push(ev(
            "A-search",
            CLAUSE_A,
            format!(
                "incomplete: W has {slots} slots > {}; greedy search only",
                config.max_w_slots
            ),
        ));
        (
            search_greedy(ext, budget, threshold, classifier, &mut evidence)?,
            false,
        )
    };
    let outcome = if witness.is_some() {
        Outcome::RationalByA
    } else {
        Outcome::Exceptional
    };
    Ok(Verdict {
        outcome,
        witness,
        evidence,
        search_complete: complete,
        seed,
    })
}

fn test_candidate(
    ext: &TwoStepExtension,
    w2: &WeightMultiset,
    threshold: u64,
    classifier: &mut Classifier,
    evidence: &mut Vec<Evidence>,
) -> Result<Option<Witness>, RationalityError> {
    let c = classifier.classify(&ext.q.sum(w2))?;
    let w1 = ext
        .w
        .difference(w2)
        .expect("candidate is a sub-multiset of W");
    let label = format!("A[W2 = {}]", display_or_zero(w2));
    if c.class.is_good() {
        let d = ext.s.dim() + w1.dim();
        evidence.push(ev(
            label,
            CLAUSE_A,
            format!(
                "holds: Q ⊕ W2 is {}; dim(S ⊕ W1) = {d} ≥ {threshold}",
                class_text(&c)
            ),
        ));
        return Ok(Some(Witness { w1, w2: w2.clone() }));
    }
    evidence.push(ev(
        label,
        CLAUSE_A,
        format!("fails: Q ⊕ W2 is {}", class_text(&c)),
    ));
    Ok(None)
}

fn display_or_zero(m: &WeightMultiset) -> String {
    if m.is_empty() {
        "0".into()
    } else {
        m.to_string()
    }
}

fn search_exhaustive(
    ext: &TwoStepExtension,
    budget: Option<u64>,
    threshold: u64,
    classifier: &mut Classifier,
    evidence: &mut Vec<Evidence>,
) -> Result<Option<Witness>, RationalityError> {
    let mut candidates = ext.w.submultisets();
    candidates.sort_by_cached_key(candidate_key);
    let within = budget.map_or(0, |b| candidates.partition_point(|c| c.dim() <= b));
    for w2 in &candidates[..within] {
        if let Some(w) = test_candidate(ext, w2, threshold, classifier, evidence)? {
            return Ok(Some(w));
        }
    }
    let rest = &candidates[within..];
    if !rest.is_empty() {
        let total = ext.s.dim() + ext.w.dim();
        evidence.push(ev(
            "A-dimension",
            CLAUSE_A,
            format!(
                "fails for the remaining {} decompositions: dim(S ⊕ W1) ≤ {} < {threshold} since dim W2 ≥ {}",
                rest.len(),
                total.saturating_sub(rest[0].dim()),
                rest[0].dim()
            ),
        ));
    }
    Ok(None)
}

/// Candidates, in order: `W_2 = 0`, the cheapest summand off the bad list
/// (which makes `Q ⊕ W_2` good by itself), then `W_2` grown one summand at a
/// time, cheapest first. Stops when the dimension budget runs out.
fn search_greedy(
    ext: &TwoStepExtension,
    budget: Option<u64>,
    threshold: u64,
    classifier: &mut Classifier,
    evidence: &mut Vec<Evidence>,
) -> Result<Option<Witness>, RationalityError> {
    let Some(budget) = budget else {
        evidence.push(ev(
            "A-dimension",
            CLAUSE_A,
            format!("fails: dim S + dim W < {threshold}"),
        ));
        return Ok(None);
    };
    let n = ext.n;
    let mut order: Vec<Weight> = Vec::new();
    for (w, m) in ext.w.iter() {
        order.extend(core::iter::repeat(w.clone()).take(m as usize));
    }
    order.sort_by_key(|w| (w.dim(), w.clone()));
    let mut candidates = alloc::vec![WeightMultiset::new(n)];
    if let Some(w) = order.iter().find(|w| !crate::repclass::on_bad_list(w)) {
        candidates.push(WeightMultiset::singleton(w.clone()));
    }
    let mut grown = WeightMultiset::new(n);
    for w in &order {
        grown.insert(w.clone(), 1);
        candidates.push(grown.clone());
    }
    for w2 in candidates.iter().filter(|c| c.dim() <= budget) {
        if let Some(found) = test_candidate(ext, w2, threshold, classifier, evidence)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// Stable-rationality levels `dim SL_n` and `dim SAff_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StableLevel {
    pub sl: u64,
    pub saff: u64,
}

pub fn stable_level(n: usize) -> StableLevel {
    let n = n as u64;
    StableLevel {
        sl: n * n - 1,
        saff: n * n - 1 + n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repclass::StabilizerConfig;

    fn w(raw: &[i64]) -> Weight {
        Weight::normalize(raw.len(), raw).unwrap()
    }

    fn ms(n: usize, items: &[(&[i64], u32)]) -> WeightMultiset {
        WeightMultiset::from_pairs(n, items.iter().map(|(r, m)| (w(r), *m))).unwrap()
    }

    #[test]
    fn structural_examples() {
        let e = TwoStepExtension::new(
            3,
            ms(3, &[(&[3, 3, 0], 1)]),
            ms(3, &[(&[2, 2, 0], 1)]),
            WeightMultiset::new(3),
        )
        .unwrap();
        assert!(!check_structural(&e));
        let e = TwoStepExtension::new(
            3,
            ms(3, &[(&[2, 0, 0], 1)]),
            ms(3, &[(&[0, 0, 0], 1)]),
            WeightMultiset::new(3),
        )
        .unwrap();
        assert!(!check_structural(&e));
    }

    #[test]
    fn r_shapes() {
        assert_eq!(
            r_list_match(&ms(3, &[(&[1, 0, 0], 1)])),
            Some(FreenessFailure::R1)
        );
        assert_eq!(
            r_list_match(&ms(4, &[(&[1, 1, 0, 0], 1)])),
            Some(FreenessFailure::R2)
        );
        assert_eq!(
            r_list_match(&ms(5, &[(&[0, 0, 0, 0, 0], 2), (&[1, 1, 1, 1, 0], 2)])),
            Some(FreenessFailure::R3 { summands: 4 })
        );
        assert_eq!(
            r_list_match(&ms(3, &[(&[0, 0, 0], 1), (&[1, 1, 0], 2)])),
            None
        );
    }

    #[test]
    fn levels() {
        assert_eq!(stable_level(3), StableLevel { sl: 8, saff: 11 });
        assert_eq!(stable_level(10), StableLevel { sl: 99, saff: 109 });
    }

    #[test]
    fn condition_a_with_empty_w() {
        let e = TwoStepExtension::new(
            3,
            ms(3, &[(&[4, 3, 0], 1)]),
            ms(3, &[(&[3, 3, 0], 1)]),
            WeightMultiset::new(3),
        )
        .unwrap();
        let mut c = Classifier::new(StabilizerConfig::default());
        let v = decide_rationality(&e, &mut c, &DecideConfig::default()).unwrap();
        assert_eq!(v.outcome, Outcome::RationalByA);
        let wit = v.witness.unwrap();
        assert!(wit.w1.is_empty() && wit.w2.is_empty());
    }
}
