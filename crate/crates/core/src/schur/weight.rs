use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

/// Errors raised while building weights and weight multisets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightError {
    /// `n` must be at least 1.
    ZeroRank,
    /// The label has more parts than the rank allows.
    TooLong { len: usize, n: usize },
    /// `raw[index] < raw[index + 1]`.
    NotMonotone { index: usize },
    /// Two weights of different rank were combined.
    RankMismatch { left: usize, right: usize },
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::ZeroRank => write!(f, "rank n must be at least 1"),
            WeightError::TooLong { len, n } => {
                write!(f, "weight has {len} parts but the rank is {n}")
            }
            WeightError::NotMonotone { index } => write!(
                f,
                "weight is not non-increasing at position {index} (entry {index} < entry {})",
                index + 1
            ),
            WeightError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for WeightError {}

/// A dominant highest weight of `SL_n`, stored in canonical form: `n` parts,
/// non-increasing, last part zero.
///
/// Two labels that differ by full columns describe the same `SL_n`
/// representation; this type only ever holds the representative with no
/// full columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    n: usize,
    parts: Vec<u32>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Weight {
    /// Canonical `SL_n` label of `raw`: subtract the last entry and pad with
    /// zeros to length `n`.
    pub fn normalize(n: usize, raw: &[i64]) -> Result<Weight, WeightError> {
        if n == 0 {
            return Err(WeightError::ZeroRank);
        }
        if raw.len() > n {
            return Err(WeightError::TooLong { len: raw.len(), n });
        }
        if let Some(index) = raw.windows(2).position(|w| w[0] < w[1]) {
            return Err(WeightError::NotMonotone { index });
        }
        // A short label is padded with zeros, so the implicit last entry is 0
        // and every given entry must be at least that.
        let last = if raw.len() == n {
            raw.last().copied().unwrap_or(0)
        } else {
            0
        };
        if raw.len() < n {
            if let Some(index) = raw.iter().position(|&x| x < 0) {
                return Err(WeightError::NotMonotone { index });
            }
        }
        let mut parts: Vec<u32> = raw.iter().map(|&x| (x - last) as u32).collect();
        parts.resize(n, 0);
        Ok(Weight { n, parts })
    }

    /// Canonical label of a `GL_n` partition (at most `n` rows).
    pub fn from_partition(n: usize, partition: &[u32]) -> Weight {
        let raw: Vec<i64> = partition.iter().map(|&x| i64::from(x)).collect();
        Weight::normalize(n, &raw).expect("partition must have at most n non-increasing rows")
    }

    pub fn trivial(n: usize) -> Weight {
        Weight {
            n,
            parts: vec![0; n],
        }
    }

    /// The defining representation `C^n`.
    pub fn standard(n: usize) -> Weight {
        Self::sym(n, 1)
    }

    /// `Sym^k(C^n)`.
    pub fn sym(n: usize, k: u32) -> Weight {
        let mut parts = vec![0; n];
        if n > 1 {
            parts[0] = k;
        }
        Weight { n, parts }
    }

    /// `Λ^k(C^n)` for `0 <= k <= n`.
    pub fn wedge(n: usize, k: usize) -> Weight {
        assert!(k <= n, "Λ^{k} of C^{n} vanishes");
        let raw: Vec<i64> = (0..n).map(|i| i64::from(i < k)).collect();
        Weight::normalize(n, &raw).unwrap()
    }

    /// Trace-free adjoint, label `(2, 1, …, 1, 0)`.
    pub fn adjoint(n: usize) -> Weight {
        if n == 1 {
            return Weight::trivial(1);
        }
        let mut raw = vec![1i64; n];
        raw[0] = 2;
        raw[n - 1] = 0;
        Weight::normalize(n, &raw).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes of the canonical label.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// The dual representation: `(λ1 − λn, λ1 − λ(n−1), …, 0)`.
    pub fn dual(&self) -> Weight {
        let top = self.parts[0];
        Weight {
            n: self.n,
            parts: self.parts.iter().rev().map(|&p| top - p).collect(),
        }
    }

    /// `λ1 − λ2` (zero when `n = 1`).
    pub fn lambda_gap(&self) -> u32 {
        match self.parts.as_slice() {
            [a, b, ..] => a - b,
            _ => 0,
        }
    }

    /// Exact Weyl dimension `∏_{i<j} (λi − λj + j − i) / (j − i)`.
    pub fn weyl_dim(&self) -> BigUint {
        weyl_dim_of(&self.parts)
    }

    /// [`Self::weyl_dim`] as a machine integer; panics on overflow, which
    /// cannot happen at the sizes this crate builds models for.
    pub fn dim(&self) -> u64 {
        u64::try_from(self.weyl_dim()).expect("dimension overflows u64")
    }
}

/// Weyl dimension of an arbitrary non-increasing integer sequence.
pub(crate) fn weyl_dim_of<T: Copy + Into<i64>>(parts: &[T]) -> BigUint {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (a, b): (i64, i64) = (parts[i].into(), parts[j].into());
            num *= BigInt::from(a - b + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (d, r) = num.div_rem(&den);
    debug_assert!(r == BigInt::from(0));
    d.to_biguint()
        .expect("dominant weights have positive dimension")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, raw: &[i64]) -> Weight {
        Weight::normalize(n, raw).unwrap()
    }

    #[test]
    fn normalize_strips_full_columns() {
        assert_eq!(w(3, &[1, 1, 1]).parts(), &[0, 0, 0]);
        assert_eq!(w(3, &[2, 1, 1]).parts(), &[1, 0, 0]);
        assert_eq!(w(4, &[3, 2, 2, 1]).parts(), &[2, 1, 1, 0]);
        assert_eq!(w(4, &[2, 1]).parts(), &[2, 1, 0, 0]);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(
            Weight::normalize(3, &[1, 2, 0]),
            Err(WeightError::NotMonotone { index: 0 })
        );
        assert_eq!(
            Weight::normalize(2, &[1, 1, 0]),
            Err(WeightError::TooLong { len: 3, n: 2 })
        );
        assert_eq!(Weight::normalize(0, &[]), Err(WeightError::ZeroRank));
        assert!(Weight::normalize(3, &[0, -1]).is_err());
        // negative entries are fine when the full length is given
        assert_eq!(w(3, &[0, 0, -1]).parts(), &[1, 1, 0]);
    }

    #[test]
    fn normalize_is_idempotent() {
        let a = w(4, &[5, 3, 3, 2]);
        let raw: Vec<i64> = a.parts().iter().map(|&x| x as i64).collect();
        assert_eq!(w(4, &raw), a);
    }

    #[test]
    fn duals() {
        assert_eq!(w(3, &[1, 0, 0]).dual(), w(3, &[1, 1, 0]));
        assert_eq!(w(4, &[2, 1, 1, 0]).dual(), w(4, &[2, 1, 1, 0]));
        assert_eq!(w(3, &[2, 0, 0]).dual(), w(3, &[2, 2, 0]));
        assert_eq!(Weight::adjoint(4), w(4, &[2, 1, 1, 0]));
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(w(3, &[1, 0, 0]).dim(), 3);
        assert_eq!(w(3, &[2, 1, 0]).dim(), 8);
        assert_eq!(w(3, &[3, 0, 0]).dim(), 10);
        assert_eq!(Weight::adjoint(10).dim(), 99);
        assert_eq!(Weight::wedge(10, 2).dim(), 45);
        assert_eq!(Weight::trivial(5).dim(), 1);
    }

    #[test]
    fn gaps() {
        assert_eq!(w(4, &[2, 1, 1, 0]).lambda_gap(), 1);
        assert_eq!(Weight::sym(3, 7).lambda_gap(), 7);
        assert_eq!(w(3, &[3, 3, 0]).lambda_gap(), 0);
    }
}
