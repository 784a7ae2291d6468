//! Formal characters of `GL_n` irreducibles and their inverse, peeling a
//! character into irreducibles.
//!
//! Weight multiplicities are counted with Gelfand–Tsetlin patterns. The
//! tableau-based expansion in [`super::oracle`] is kept separate so the two
//! can check each other.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::{Weight, WeightMultiset};

/// `GL_n` weight (any integers).
pub type GlWeight = Vec<i64>;

/// Formal character: weight ↦ multiplicity.
pub type Character = BTreeMap<GlWeight, i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeelError {
    /// The lexicographically largest remaining weight is not dominant.
    NotDominant(GlWeight),
    /// Subtracting an irreducible left a negative multiplicity.
    Negative(GlWeight),
}

impl fmt::Display for PeelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeelError::NotDominant(w) => {
                write!(
                    f,
                    "leading weight {w:?} is not dominant; character is not a GL_n character"
                )
            }
            PeelError::Negative(w) => {
                write!(f, "peeling left a negative multiplicity at weight {w:?}")
            }
        }
    }
}

impl core::error::Error for PeelError {}

fn is_dominant(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

/// Weight multiplicities of the `GL_n` irreducible with highest weight
/// `lambda` (non-increasing, any sign).
pub fn gl_character(lambda: &[i64]) -> Character {
    assert!(is_dominant(lambda), "highest weight must be non-increasing");
    let mut memo = BTreeMap::new();
    let partial = gt_weights(lambda, &mut memo);
    partial.into_iter().map(|(w, m)| (w, m as i64)).collect()
}

/// For a GT row `row` of length `k`, the multiset of weight prefixes
/// `(w_1, …, w_k)` over all patterns below it.
fn gt_weights(
    row: &[i64],
    memo: &mut BTreeMap<Vec<i64>, BTreeMap<GlWeight, u64>>,
) -> BTreeMap<GlWeight, u64> {
    if let Some(hit) = memo.get(row) {
        return hit.clone();
    }
    let total: i64 = row.iter().sum();
    let mut out = BTreeMap::new();
    if row.len() == 1 {
        out.insert(alloc::vec![total], 1);
    } else {
        let mut next = alloc::vec![0i64; row.len() - 1];
        interlacing(row, 0, &mut next, &mut |below: &[i64]| {
            let w_last = total - below.iter().sum::<i64>();
            for (prefix, m) in gt_weights(below, memo) {
                let mut w = prefix;
                w.push(w_last);
                *out.entry(w).or_insert(0) += m;
            }
        });
    }
    memo.insert(row.to_vec(), out.clone());
    out
}

fn interlacing(row: &[i64], i: usize, next: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if i == next.len() {
        f(next);
        return;
    }
    for x in row[i + 1]..=row[i] {
        next[i] = x;
        interlacing(row, i + 1, next, f);
    }
}

/// Character of a canonical `SL_n` weight, using its canonical label as the
/// `GL_n` highest weight.
pub fn character(w: &Weight) -> Character {
    let lambda: Vec<i64> = w.parts().iter().map(|&p| i64::from(p)).collect();
    gl_character(&lambda)
}

/// Decompose a `GL_n` character into irreducibles by repeatedly removing the
/// irreducible whose highest weight is the lexicographically largest weight
/// still present. Returns `GL_n` highest weights with multiplicities.
pub fn peel(mut ch: Character) -> Result<BTreeMap<GlWeight, u32>, PeelError> {
    ch.retain(|_, m| *m != 0);
    let mut out = BTreeMap::new();
    let mut cache: BTreeMap<GlWeight, Character> = BTreeMap::new();
    while let Some((top, &mult)) = ch.iter().next_back() {
        let top = top.clone();
        if mult < 0 {
            return Err(PeelError::Negative(top));
        }
        if !is_dominant(&top) {
            return Err(PeelError::NotDominant(top));
        }
        let irr = cache
            .entry(top.clone())
            .or_insert_with(|| gl_character(&top));
        for (w, m) in irr.iter() {
            let e = ch.entry(w.clone()).or_insert(0);
            *e -= m * mult;
            if *e < 0 {
                return Err(PeelError::Negative(w.clone()));
            }
            if *e == 0 {
                ch.remove(w);
            }
        }
        out.insert(top, mult as u32);
    }
    Ok(out)
}

/// [`peel`] followed by reduction to canonical `SL_n` labels.
pub fn peel_to_sl(n: usize, ch: Character) -> Result<WeightMultiset, PeelError> {
    let gl = peel(ch)?;
    let mut out = WeightMultiset::new(n);
    for (hw, m) in gl {
        out.insert(
            Weight::normalize(n, &hw).expect("peeled weights are dominant"),
            m,
        );
    }
    Ok(out)
}
