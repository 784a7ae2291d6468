use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{Weight, WeightError};

/// A finite multiset of irreducible `SL_n`-representations, i.e. a
/// completely reducible representation up to isomorphism.
///
/// Iteration order is the `Ord` order of [`Weight`], so everything derived
/// from a multiset is deterministic. `Display` lists the largest weight
/// first: `[2,0,0] + [1,1,0]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightMultiset {
    n: usize,
    entries: BTreeMap<Weight, u32>,
}

impl fmt::Debug for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.entries.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m > 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl WeightMultiset {
    pub fn new(n: usize) -> Self {
        WeightMultiset {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn singleton(w: Weight) -> Self {
        let mut m = Self::new(w.rank());
        m.insert(w, 1);
        m
    }

    /// Build from `(weight, multiplicity)` pairs; repeated weights accumulate.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, WeightError>
    where
        I: IntoIterator<Item = (Weight, u32)>,
    {
        let mut m = Self::new(n);
        for (w, k) in pairs {
            if w.rank() != n {
                return Err(WeightError::RankMismatch {
                    left: n,
                    right: w.rank(),
                });
            }
            m.insert(w, k);
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Add `mult` copies of `w`. Zero multiplicities are ignored.
    pub fn insert(&mut self, w: Weight, mult: u32) {
        assert_eq!(w.rank(), self.n, "rank mismatch");
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    /// Remove up to `mult` copies; returns how many were removed.
    pub fn remove(&mut self, w: &Weight, mult: u32) -> u32 {
        let Some(m) = self.entries.get_mut(w) else {
            return 0;
        };
        let taken = mult.min(*m);
        *m -= taken;
        if *m == 0 {
            self.entries.remove(w);
        }
        taken
    }

    pub fn multiplicity(&self, w: &Weight) -> u32 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u32)> + '_ {
        self.entries.iter().map(|(w, m)| (w, *m))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> + '_ {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct irreducible types.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn total_count(&self) -> u32 {
        self.entries.values().sum()
    }

    /// Copies of the trivial representation.
    pub fn trivial_count(&self) -> u32 {
        self.multiplicity(&Weight::trivial(self.n))
    }

    pub fn weyl_dim(&self) -> BigUint {
        self.entries.iter().fold(BigUint::zero(), |acc, (w, m)| {
            acc + w.weyl_dim() * BigUint::from(*m)
        })
    }

    pub fn dim(&self) -> u64 {
        self.entries
            .iter()
            .map(|(w, m)| w.dim() * u64::from(*m))
            .sum()
    }

    pub fn dual(&self) -> WeightMultiset {
        let mut out = Self::new(self.n);
        for (w, m) in &self.entries {
            out.insert(w.dual(), *m);
        }
        out
    }

    /// Direct sum.
    pub fn sum(&self, other: &WeightMultiset) -> WeightMultiset {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = self.clone();
        for (w, m) in &other.entries {
            out.insert(w.clone(), *m);
        }
        out
    }

    /// Multiset difference; `None` unless `other` is contained in `self`.
    pub fn difference(&self, other: &WeightMultiset) -> Option<WeightMultiset> {
        if !other.is_submultiset_of(self) {
            return None;
        }
        let mut out = self.clone();
        for (w, m) in &other.entries {
            out.remove(w, *m);
        }
        Some(out)
    }

    /// Every weight of `self` occurs in `other` at least as often.
    pub fn is_submultiset_of(&self, other: &WeightMultiset) -> bool {
        self.entries
            .iter()
            .all(|(w, m)| other.multiplicity(w) >= *m)
    }

    /// All sub-multisets, including the empty one and `self`, in the
    /// odometer order of the underlying map.
    pub fn submultisets(&self) -> Vec<WeightMultiset> {
        let slots: Vec<(&Weight, u32)> = self.iter().collect();
        let mut out = Vec::new();
        let mut counts = alloc::vec![0u32; slots.len()];
        loop {
            let mut m = WeightMultiset::new(self.n);
            for ((w, _), &c) in slots.iter().zip(&counts) {
                m.insert((*w).clone(), c);
            }
            out.push(m);
            let mut i = 0;
            loop {
                if i == slots.len() {
                    return out;
                }
                if counts[i] < slots[i].1 {
                    counts[i] += 1;
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
        }
    }

    /// Number of sub-multisets, `∏ (m_i + 1)`, saturating.
    pub fn submultiset_count(&self) -> u64 {
        self.entries
            .values()
            .fold(1u64, |acc, m| acc.saturating_mul(u64::from(*m) + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[i64]) -> Weight {
        Weight::normalize(raw.len(), raw).unwrap()
    }

    #[test]
    fn bookkeeping() {
        let mut m = WeightMultiset::new(3);
        m.insert(w(&[1, 0, 0]), 2);
        m.insert(Weight::trivial(3), 1);
        m.insert(w(&[1, 0, 0]), 1);
        assert_eq!(m.multiplicity(&w(&[1, 0, 0])), 3);
        assert_eq!(m.dim(), 10);
        assert_eq!(m.trivial_count(), 1);
        assert_eq!(m.total_count(), 4);
        assert_eq!(m.remove(&w(&[1, 0, 0]), 5), 3);
        assert_eq!(m.distinct(), 1);
    }

    #[test]
    fn submultisets_enumerate_all() {
        let mut m = WeightMultiset::new(3);
        m.insert(w(&[1, 0, 0]), 2);
        m.insert(w(&[2, 1, 0]), 1);
        let subs = m.submultisets();
        assert_eq!(subs.len(), 6);
        assert_eq!(m.submultiset_count(), 6);
        assert!(subs.iter().all(|s| s.is_submultiset_of(&m)));
        assert!(subs.contains(&WeightMultiset::new(3)));
        assert!(subs.contains(&m));
    }

    #[test]
    fn rank_mismatch_rejected() {
        let r = WeightMultiset::from_pairs(3, [(Weight::trivial(2), 1)]);
        assert_eq!(r, Err(WeightError::RankMismatch { left: 3, right: 2 }));
    }
}
