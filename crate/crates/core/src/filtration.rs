//! The two canonical filtrations of an `SAff_n` representation and the
//! structure checks on their layers.
//!
//! The translations span the unipotent radical `U`, which acts trivially on
//! every completely reducible representation, and the `U`-fixed vectors of
//! any representation form a `G`-stable subspace because `U` is normal. So
//! the largest completely reducible subrepresentation is the common kernel
//! of `T_1, …, T_n` and the largest completely reducible quotient is the
//! cokernel of `Σ T_k`. Both filtrations are built from these two facts:
//!
//! * socle: `V_0 = ∩ ker T_k`, `V_i = {x : T_k x ∈ V_{i−1} for all k}`;
//! * radical: `V'_l = V`, `V'_{i−1} = Σ_k T_k V'_i`, until it reaches zero.
//!
//! Every `T_k` raises weights by `ε_k`, so each step is a family of small
//! linear systems, one per weight space. Layers are identified by peeling
//! their formal characters.

use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{EchelonBasis, Matrix, Q};
use crate::matmodel::{AffMatrixRep, GradedSubspace};
use crate::schur::{peel_to_sl, tensor_sym, tensor_sym_dual, Character, PeelError, WeightMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiltrationKind {
    /// Successive maximal completely reducible subrepresentations.
    Socle,
    /// Successive maximal completely reducible quotients.
    Radical,
}

impl fmt::Display for FiltrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiltrationKind::Socle => "socle",
            FiltrationKind::Radical => "radical",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationError {
    /// A layer character is not a sum of irreducible characters; the weight
    /// grading does not match the generators.
    Layer { index: usize, source: PeelError },
    /// The chain stopped growing before reaching the whole space, which
    /// happens only if the translations are not nilpotent.
    Stalled { dim: usize, total: usize },
}

impl fmt::Display for FiltrationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationError::Layer { index, source } => {
                write!(f, "layer {index} does not decompose: {source}")
            }
            FiltrationError::Stalled { dim, total } => {
                write!(f, "filtration stalled at dimension {dim} of {total}")
            }
        }
    }
}

impl core::error::Error for FiltrationError {}

/// An increasing chain `F_0 ⊂ F_1 ⊂ … ⊂ F_l = V` with its layers
/// `F_i / F_{i−1}` identified as `SL_n` representations.
///
/// For the radical kind `F_i` is `V'_i`, so in both kinds the translations
/// map `F_i` into `F_{i−1}`.
#[derive(Clone, Debug)]
pub struct Filtration {
    kind: FiltrationKind,
    chain: Vec<GradedSubspace>,
    layers: Vec<WeightMultiset>,
}

impl Filtration {
    pub fn kind(&self) -> FiltrationKind {
        self.kind
    }

    pub fn chain(&self) -> &[GradedSubspace] {
        &self.chain
    }

    pub fn layers(&self) -> &[WeightMultiset] {
        &self.layers
    }

    /// `l`, the index of the last chain member.
    pub fn length(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }

    pub fn chain_dims(&self) -> Vec<usize> {
        self.chain.iter().map(GradedSubspace::dim).collect()
    }

    pub fn layer_dims(&self) -> Vec<u64> {
        self.layers.iter().map(WeightMultiset::dim).collect()
    }

    /// All layers together.
    pub fn semisimplification(&self) -> WeightMultiset {
        let n = self.layers.first().map_or(1, WeightMultiset::rank);
        self.layers
            .iter()
            .fold(WeightMultiset::new(n), |acc, l| acc.sum(l))
    }
}

/// Basis of `{y : y · x = 0 for all x in span}` as the rows of a matrix.
fn annihilator(part: Option<&EchelonBasis>, ambient: usize) -> Matrix {
    match part {
        None => Matrix::identity(ambient),
        Some(e) if e.dim() == 0 => Matrix::identity(ambient),
        Some(e) => {
            let k = e.to_matrix().kernel();
            let mut m = Matrix::zeros(k.len(), ambient);
            for (r, v) in k.into_iter().enumerate() {
                for (c, x) in v.into_iter().enumerate() {
                    m.set(r, c, x);
                }
            }
            m
        }
    }
}

fn echelon_of(vectors: impl IntoIterator<Item = Vec<Q>>, ambient: usize) -> EchelonBasis {
    let mut e = EchelonBasis::new(ambient);
    for v in vectors {
        e.insert(&v);
    }
    e
}

fn shift(w: &[i64], k: usize, sign: i64) -> Vec<i64> {
    let mut out = w.to_vec();
    out[k] += sign;
    out
}

/// Chain of the socle filtration, `V_0 ⊂ … ⊂ V_l = V`.
pub fn socle_chain(rep: &AffMatrixRep) -> Result<Vec<GradedSubspace>, FiltrationError> {
    let spaces = rep.weight_spaces();
    let total = rep.dim();
    let mut chain: Vec<GradedSubspace> = Vec::new();
    let mut prev = GradedSubspace::new();
    loop {
        let mut next = GradedSubspace::new();
        for (w, idx) in spaces.iter() {
            let d = idx.len();
            let mut rows: Vec<Vec<Q>> = Vec::new();
            for (k, t) in rep.trans_gens().iter().enumerate() {
                let target = shift(w, k, 1);
                let td = spaces.dim_of(&target);
                if td == 0 {
                    continue;
                }
                let b = spaces.block(t, w, &target);
                if b.is_zero() {
                    continue;
                }
                let cond = annihilator(prev.part(&target), td).mul(&b);
                rows.extend(cond.row_vecs());
            }
            let kernel = if rows.is_empty() {
                Matrix::identity(d).row_vecs()
            } else {
                Matrix::from_rows(rows).kernel()
            };
            next.set_part(w.clone(), echelon_of(kernel, d));
        }
        if total == 0 {
            chain.push(next);
            break;
        }
        if next.dim() == prev.dim() {
            return Err(FiltrationError::Stalled {
                dim: next.dim(),
                total,
            });
        }
        let done = next.dim() == total;
        chain.push(next.clone());
        prev = next;
        if done {
            break;
        }
    }
    Ok(chain)
}

/// Chain of the radical filtration, `V'_0 ⊂ … ⊂ V'_l = V`.
pub fn radical_chain(rep: &AffMatrixRep) -> Result<Vec<GradedSubspace>, FiltrationError> {
    let spaces = rep.weight_spaces();
    let total = rep.dim();
    let mut current = GradedSubspace::full(&spaces);
    let mut descending = alloc::vec![current.clone()];
    loop {
        let mut next = GradedSubspace::new();
        for (w, idx) in spaces.iter() {
            let d = idx.len();
            let mut images = Vec::new();
            for (k, t) in rep.trans_gens().iter().enumerate() {
                let source = shift(w, k, -1);
                let Some(part) = current.part(&source) else {
                    continue;
                };
                let b = spaces.block(t, &source, w);
                if b.is_zero() {
                    continue;
                }
                for v in part.vectors() {
                    images.push(b.mul_vec(v));
                }
            }
            next.set_part(w.clone(), echelon_of(images, d));
        }
        if next.dim() == 0 {
            break;
        }
        if next.dim() == current.dim() {
            return Err(FiltrationError::Stalled {
                dim: next.dim(),
                total,
            });
        }
        descending.push(next.clone());
        current = next;
    }
    descending.reverse();
    Ok(descending)
}

fn character_difference(a: &GradedSubspace, b: Option<&GradedSubspace>) -> Character {
    let mut ch = a.character();
    if let Some(b) = b {
        for (w, m) in b.character() {
            *ch.entry(w).or_insert(0) -= m;
        }
    }
    ch.retain(|_, m| *m != 0);
    ch
}

/// Decompose each layer `F_i / F_{i−1}` of a chain into irreducibles.
pub fn identify_layers(
    n: usize,
    chain: &[GradedSubspace],
) -> Result<Vec<WeightMultiset>, FiltrationError> {
    (0..chain.len())
        .map(|i| {
            let ch = character_difference(&chain[i], i.checked_sub(1).map(|j| &chain[j]));
            peel_to_sl(n, ch).map_err(|source| FiltrationError::Layer { index: i, source })
        })
        .collect()
}

pub fn socle_filtration(rep: &AffMatrixRep) -> Result<Filtration, FiltrationError> {
    let chain = socle_chain(rep)?;
    let layers = identify_layers(rep.rank(), &chain)?;
    Ok(Filtration {
        kind: FiltrationKind::Socle,
        chain,
        layers,
    })
}

pub fn radical_filtration(rep: &AffMatrixRep) -> Result<Filtration, FiltrationError> {
    let chain = radical_chain(rep)?;
    let layers = identify_layers(rep.rank(), &chain)?;
    Ok(Filtration {
        kind: FiltrationKind::Radical,
        chain,
        layers,
    })
}

pub fn filtration(rep: &AffMatrixRep, kind: FiltrationKind) -> Result<Filtration, FiltrationError> {
    match kind {
        FiltrationKind::Socle => socle_filtration(rep),
        FiltrationKind::Radical => radical_filtration(rep),
    }
}

/// Radical layers of the dual, read from the top, are the duals of the
/// socle layers of `rep`: `Q'_{l−j} = Q_j^∨`.
pub fn check_duality(rep: &AffMatrixRep) -> Result<bool, FiltrationError> {
    let socle = socle_filtration(rep)?;
    let radical = radical_filtration(&rep.dual())?;
    Ok(duality_holds(&socle, &radical))
}

/// [`check_duality`] on precomputed filtrations (socle of `V`, radical of `V^∨`).
pub fn duality_holds(socle: &Filtration, dual_radical: &Filtration) -> bool {
    let (a, b) = (socle.layers(), dual_radical.layers());
    a.len() == b.len() && a.iter().zip(b.iter().rev()).all(|(q, qd)| q.dual() == *qd)
}

/// Layer containments along the filtration, with multiplicities:
/// socle `Q_j ⊂ Q_i ⊗ Sym^{j−i}(C^n)^∨`, radical `Q'_i ⊂ Q'_j ⊗ Sym^{j−i}(C^n)`,
/// for all `i < j`.
pub fn check_blocks_containment(f: &Filtration) -> bool {
    let layers = f.layers();
    for j in 0..layers.len() {
        for i in 0..j {
            let k = (j - i) as u32;
            let ok = match f.kind() {
                FiltrationKind::Socle => {
                    layers[j].is_submultiset_of(&tensor_sym_dual(&layers[i], k))
                }
                FiltrationKind::Radical => layers[i].is_submultiset_of(&tensor_sym(&layers[j], k)),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Character form of the embedding `V ⊂ V_0 ⊗ Sym^l(C^{n+1})^∨`, checked layer by
/// layer: every socle layer `Q_i` sits inside `Q_0 ⊗ Sym^i(C^n)^∨`.
pub fn check_embedding_theorem(rep: &AffMatrixRep) -> Result<bool, FiltrationError> {
    Ok(embedding_holds(&socle_filtration(rep)?))
}

/// [`check_embedding_theorem`] on a precomputed socle filtration.
pub fn embedding_holds(socle: &Filtration) -> bool {
    let layers = socle.layers();
    let Some(base) = layers.first() else {
        return true;
    };
    layers
        .iter()
        .enumerate()
        .all(|(i, q)| q.is_submultiset_of(&tensor_sym_dual(base, i as u32)))
}

/// `true` when the semisimplification is all of `Q_0 ⊗ (⊕_{i ≤ l} Sym^i(C^n)^∨)`.
pub fn embedding_is_equality(socle: &Filtration) -> bool {
    let layers = socle.layers();
    let Some(base) = layers.first() else {
        return true;
    };
    let n = base.rank();
    let full = (0..layers.len()).fold(WeightMultiset::new(n), |acc, i| {
        acc.sum(&tensor_sym_dual(base, i as u32))
    });
    socle.semisimplification() == full
}
