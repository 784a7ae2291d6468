//! Weight-space bookkeeping. Every basis vector of a model carries a weight,
//! so any stable subspace splits into its intersections with the weight
//! spaces and all linear algebra can be done one weight at a time.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{AffMatrixRep, ModelError};
use crate::linalg::{EchelonBasis, Matrix, SparseMatrix, SparseVec, Q};
use crate::schur::{Character, GlWeight};

/// Basis indices grouped by weight.
#[derive(Clone, Debug)]
pub struct WeightSpaces {
    spaces: BTreeMap<GlWeight, Vec<usize>>,
    /// Position of each global index inside its weight space.
    slot: Vec<usize>,
}

impl WeightSpaces {
    pub fn new(weights: &[GlWeight]) -> Self {
        let mut spaces: BTreeMap<GlWeight, Vec<usize>> = BTreeMap::new();
        let mut slot = vec![0; weights.len()];
        for (i, w) in weights.iter().enumerate() {
            let v = spaces.entry(w.clone()).or_default();
            slot[i] = v.len();
            v.push(i);
        }
        WeightSpaces { spaces, slot }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GlWeight, &[usize])> {
        self.spaces.iter().map(|(w, v)| (w, v.as_slice()))
    }

    pub fn weights(&self) -> impl Iterator<Item = &GlWeight> {
        self.spaces.keys()
    }

    /// Global indices of the basis vectors of weight `w` (empty if absent).
    pub fn indices(&self, w: &[i64]) -> &[usize] {
        self.spaces.get(w).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim_of(&self, w: &[i64]) -> usize {
        self.indices(w).len()
    }

    pub fn slot(&self, global: usize) -> usize {
        self.slot[global]
    }

    /// Dense block of `m` mapping weight space `from` into weight space `to`.
    pub fn block(&self, m: &SparseMatrix, from: &[i64], to: &[i64]) -> Matrix {
        let (src, dst) = (self.indices(from), self.indices(to));
        let mut out = Matrix::zeros(dst.len(), src.len());
        if dst.is_empty() {
            return out;
        }
        for (c, &g) in src.iter().enumerate() {
            for (r, x) in m.column(g) {
                let s = self.slot[*r];
                if dst.get(s) == Some(r) {
                    out.set(s, c, x.clone());
                }
            }
        }
        out
    }

    /// Scatter local coordinates of weight `w` into a global sparse vector.
    pub fn to_global(&self, w: &[i64], local: &[Q]) -> SparseVec {
        self.indices(w)
            .iter()
            .zip(local)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&g, x)| (g, x.clone()))
            .collect()
    }
}

/// A subspace spanned by weight vectors, stored as one reduced echelon
/// basis per weight space (in local coordinates).
#[derive(Clone, Debug, Default)]
pub struct GradedSubspace {
    parts: BTreeMap<GlWeight, EchelonBasis>,
}

impl GradedSubspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// The whole space.
    pub fn full(spaces: &WeightSpaces) -> Self {
        let mut out = Self::new();
        for (w, idx) in spaces.iter() {
            let mut e = EchelonBasis::new(idx.len());
            for i in 0..idx.len() {
                let mut v = vec![Q::zero(); idx.len()];
                v[i] = num_traits::One::one();
                e.insert(&v);
            }
            out.parts.insert(w.clone(), e);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.parts.values().map(EchelonBasis::dim).sum()
    }

    /// Dimension of the part of weight `w`.
    pub fn dim_at(&self, w: &[i64]) -> usize {
        self.parts.get(w).map_or(0, EchelonBasis::dim)
    }

    pub fn part(&self, w: &[i64]) -> Option<&EchelonBasis> {
        self.parts.get(w)
    }

    pub fn parts(&self) -> impl Iterator<Item = (&GlWeight, &EchelonBasis)> {
        self.parts.iter().filter(|(_, e)| e.dim() > 0)
    }

    /// Replace the part at weight `w`.
    pub fn set_part(&mut self, w: GlWeight, basis: EchelonBasis) {
        if basis.dim() == 0 {
            self.parts.remove(&w);
        } else {
            self.parts.insert(w, basis);
        }
    }

    /// Add a local vector at weight `w`; returns `true` if the span grew.
    pub fn insert(&mut self, w: &[i64], ambient: usize, v: &[Q]) -> bool {
        self.parts
            .entry(w.to_vec())
            .or_insert_with(|| EchelonBasis::new(ambient))
            .insert(v)
    }

    /// Formal character (weight ↦ dimension of the part).
    pub fn character(&self) -> Character {
        self.parts()
            .map(|(w, e)| (w.clone(), e.dim() as i64))
            .collect()
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        self.parts().all(|(w, e)| match other.part(w) {
            Some(o) => e.vectors().all(|v| o.contains(v)),
            None => false,
        })
    }

    /// Basis vectors in global coordinates, weight by weight.
    pub fn global_basis(&self, spaces: &WeightSpaces) -> Vec<(GlWeight, SparseVec)> {
        let mut out = Vec::new();
        for (w, e) in self.parts() {
            for v in e.vectors() {
                out.push((w.clone(), spaces.to_global(w, v)));
            }
        }
        out
    }

    /// `true` when every generator of `rep` maps the subspace into itself.
    pub fn is_stable(&self, rep: &AffMatrixRep, spaces: &WeightSpaces) -> bool {
        let empty = EchelonBasis::new(0);
        for (_, v) in self.global_basis(spaces) {
            for m in rep.generators() {
                let image = m.apply(&v);
                let Some((first, _)) = image.first() else {
                    continue;
                };
                let target = &rep.weights()[*first];
                let local = local_coords(&image, target, spaces);
                let part = self.part(target).unwrap_or(&empty);
                if part.ambient_dim() == 0 || !part.contains(&local) {
                    return false;
                }
            }
        }
        true
    }
}

/// Local coordinates of a homogeneous global vector of weight `w`.
fn local_coords(v: &SparseVec, w: &[i64], spaces: &WeightSpaces) -> Vec<Q> {
    let mut out = vec![Q::zero(); spaces.dim_of(w)];
    for (g, x) in v {
        out[spaces.slot(*g)] = x.clone();
    }
    out
}

/// Split a global vector into weight components.
fn components(v: &SparseVec, weights: &[GlWeight]) -> BTreeMap<GlWeight, SparseVec> {
    let mut out: BTreeMap<GlWeight, SparseVec> = BTreeMap::new();
    for (g, x) in v {
        out.entry(weights[*g].clone())
            .or_default()
            .push((*g, x.clone()));
    }
    out
}

impl AffMatrixRep {
    pub fn weight_spaces(&self) -> WeightSpaces {
        WeightSpaces::new(self.weights())
    }

    /// Smallest stable subspace containing the weight components of every
    /// vector in `generators`.
    pub fn generated_submodule(&self, generators: &[SparseVec]) -> GradedSubspace {
        let spaces = self.weight_spaces();
        let mut sub = GradedSubspace::new();
        let mut queue: VecDeque<SparseVec> = VecDeque::new();
        let push = |v: SparseVec, sub: &mut GradedSubspace, queue: &mut VecDeque<SparseVec>| {
            for (w, part) in components(&v, self.weights()) {
                let local = local_coords(&part, &w, &spaces);
                if sub.insert(&w, spaces.dim_of(&w), &local) {
                    queue.push_back(part);
                }
            }
        };
        for g in generators {
            push(g.clone(), &mut sub, &mut queue);
        }
        while let Some(v) = queue.pop_front() {
            for m in self.generators() {
                let image = m.apply(&v);
                if !image.is_empty() {
                    push(image, &mut sub, &mut queue);
                }
            }
        }
        sub
    }

    /// The model on a stable subspace, in the basis given by the subspace's
    /// echelon vectors (weights ascending, then pivot order).
    pub fn restrict(&self, sub: &GradedSubspace) -> Result<AffMatrixRep, ModelError> {
        let spaces = self.weight_spaces();
        let basis = sub.global_basis(&spaces);
        let mut offset: BTreeMap<GlWeight, usize> = BTreeMap::new();
        let mut acc = 0;
        for (w, e) in sub.parts() {
            offset.insert(w.clone(), acc);
            acc += e.dim();
        }
        let dim = basis.len();
        let lift = |m: &SparseMatrix| -> Result<SparseMatrix, ModelError> {
            let mut cols = Vec::with_capacity(dim);
            for (_, v) in &basis {
                let image = m.apply(v);
                let mut col = SparseVec::new();
                for (w, part) in components(&image, self.weights()) {
                    let e = sub.part(&w).ok_or(ModelError::NotInvariant)?;
                    let coords = e
                        .coordinates(&local_coords(&part, &w, &spaces))
                        .ok_or(ModelError::NotInvariant)?;
                    let base = offset[&w];
                    col.extend(
                        coords
                            .into_iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(i, x)| (base + i, x)),
                    );
                }
                cols.push(col);
            }
            Ok(SparseMatrix::from_columns(dim, cols))
        };
        let sl_gens = self
            .sl_gens()
            .iter()
            .map(lift)
            .collect::<Result<Vec<_>, _>>()?;
        let trans_gens = self
            .trans_gens()
            .iter()
            .map(lift)
            .collect::<Result<Vec<_>, _>>()?;
        let weights = basis.into_iter().map(|(w, _)| w).collect();
        AffMatrixRep::from_parts(self.rank(), sl_gens, trans_gens, weights)
    }

    /// Formal character of the whole model.
    pub fn character(&self) -> Character {
        let mut ch = Character::new();
        for w in self.weights() {
            *ch.entry(w.clone()).or_insert(0) += 1;
        }
        ch
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::matmodel::{model_sym_dual, DEFAULT_MAX_MODEL_DIM};

    #[test]
    fn constants_generate_nothing_else() {
        let m = model_sym_dual(2, 2, DEFAULT_MAX_MODEL_DIM).unwrap();
        let sub = m.generated_submodule(&[vec![(0, q(1))]]);
        assert_eq!(sub.dim(), 1);
        let r = m.restrict(&sub).unwrap();
        r.validate().unwrap();
    }

    #[test]
    fn top_monomial_generates_everything() {
        let m = model_sym_dual(2, 2, DEFAULT_MAX_MODEL_DIM).unwrap();
        // x_1^2 is the fourth basis vector
        let sub = m.generated_submodule(&[vec![(3, q(1))]]);
        assert_eq!(sub.dim(), 6);
        let spaces = m.weight_spaces();
        assert!(sub.is_stable(&m, &spaces));
        assert!(GradedSubspace::full(&spaces).is_subspace_of(&sub));
    }

    #[test]
    fn degree_one_part_is_a_submodule() {
        let m = model_sym_dual(3, 2, DEFAULT_MAX_MODEL_DIM).unwrap();
        let sub = m.generated_submodule(&[vec![(1, q(1))]]);
        assert_eq!(sub.dim(), 4);
        let r = m.restrict(&sub).unwrap();
        r.validate().unwrap();
        assert_eq!(r.dim(), 4);
    }
}
