//! The unipotent action `ρ(v) = exp(Σ v_k T_k)` and its expansion as a
//! matrix polynomial `Σ_α F_α v^α` with `F_α = T^α / α!`.
//!
//! Both series are finite because the translations are nilpotent and
//! commute.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::AffMatrixRep;
use crate::filtration::Filtration;
use crate::linalg::{q, EchelonBasis, Matrix, SparseMatrix, Q};

/// `ρ(v)` as an explicit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentImage {
    pub v: Vec<Q>,
    pub matrix: Matrix,
}

impl AffMatrixRep {
    /// `exp(Σ v_k T_k)`, summed until the powers vanish.
    pub fn unipotent_image(&self, v: &[Q]) -> UnipotentImage {
        let nil = self.translation(v);
        let mut term = SparseMatrix::identity(self.dim());
        let mut acc = term.clone();
        let mut m = 1i64;
        loop {
            term = nil
                .mul(&term)
                .scale(&Q::new(BigInt::one(), BigInt::from(m)));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
            m += 1;
        }
        UnipotentImage {
            v: v.to_vec(),
            matrix: acc.to_dense(),
        }
    }
}

/// Coefficients `F_α` of `ρ(v) = Σ_α F_α v^α`, with zero terms omitted.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub terms: BTreeMap<Vec<u32>, SparseMatrix>,
}

impl Expansion {
    /// Highest total degree with a nonzero coefficient.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|a| a.iter().sum()).max().unwrap_or(0)
    }

    /// Evaluate at a point.
    pub fn evaluate(&self, v: &[Q]) -> Matrix {
        let mut acc: Option<SparseMatrix> = None;
        for (alpha, f) in &self.terms {
            let mut mono = Q::one();
            for (x, &e) in v.iter().zip(alpha) {
                for _ in 0..e {
                    mono *= x;
                }
            }
            let term = f.scale(&mono);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.map(|a| a.to_dense())
            .unwrap_or_else(|| Matrix::zeros(0, 0))
    }
}

/// Expand `exp(Σ v_k T_k)` over the polynomial ring in `v` for commuting
/// nilpotent `translations`.
pub fn expansion(translations: &[SparseMatrix]) -> Expansion {
    let n = translations.len();
    let dim = translations.first().map_or(0, SparseMatrix::rows);
    let mut terms = BTreeMap::new();
    // Unnormalised powers T^α; each α is reached once by appending indices
    // in non-decreasing order.
    let mut frontier: Vec<(Vec<u32>, usize, SparseMatrix)> =
        vec![(vec![0; n], 0, SparseMatrix::identity(dim))];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (alpha, last, power) in frontier {
            let fact: BigInt = alpha.iter().map(|&a| factorial(a)).product();
            terms.insert(alpha.clone(), power.scale(&Q::new(BigInt::one(), fact)));
            for k in last..n {
                let p = translations[k].mul(&power);
                if p.is_zero() {
                    continue;
                }
                let mut beta = alpha.clone();
                beta[k] += 1;
                next.push((beta, k, p));
            }
        }
        frontier = next;
    }
    Expansion { terms }
}

fn factorial(a: u32) -> BigInt {
    (1..=a).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Check that in a basis adapted to `filtration`, the block of `ρ(v)` from
/// layer `j` to layer `i` is a polynomial of total degree at most `j − i`
/// (and vanishes for `i > j`), with identity diagonal blocks.
///
/// The adapted basis is built weight space by weight space: a basis of the
/// first chain member, extended to each later member in turn. The
/// translations are conjugated into that basis and the expansion is checked
/// coefficient by coefficient.
pub fn verify_degree_bound(rep: &AffMatrixRep, filtration: &Filtration) -> bool {
    let spaces = rep.weight_spaces();
    let n = rep.rank();
    let dim = rep.dim();
    // adapted global index ↦ level; per weight: first adapted index, P, P^{-1}
    let mut level = Vec::with_capacity(dim);
    let mut blocks: BTreeMap<Vec<i64>, (usize, Matrix, Matrix)> = BTreeMap::new();
    for (w, idx) in spaces.iter() {
        let d = idx.len();
        let mut span = EchelonBasis::new(d);
        let mut cols: Vec<Vec<Q>> = Vec::new();
        let start = level.len();
        for (lv, member) in filtration.chain().iter().enumerate() {
            let Some(part) = member.part(w) else { continue };
            for v in part.vectors() {
                if span.insert(v) {
                    cols.push(v.to_vec());
                    level.push(lv);
                }
            }
        }
        if cols.len() != d {
            return false;
        }
        let mut p = Matrix::zeros(d, d);
        for (c, v) in cols.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                p.set(r, c, x.clone());
            }
        }
        let Some(pinv) = p.inverse() else {
            return false;
        };
        blocks.insert(w.clone(), (start, p, pinv));
    }
    let mut adapted = Vec::with_capacity(n);
    for (k, t) in rep.trans_gens().iter().enumerate() {
        let mut cols: Vec<Vec<(usize, Q)>> = vec![Vec::new(); dim];
        for (w, (start, p, _)) in &blocks {
            let mut target = w.clone();
            target[k] += 1;
            let Some((tstart, _, tinv)) = blocks.get(&target) else {
                continue;
            };
            let b = spaces.block(t, w, &target);
            if b.is_zero() {
                continue;
            }
            let conj = tinv.mul(&b).mul(p);
            for c in 0..conj.cols() {
                for r in 0..conj.rows() {
                    let x = conj.get(r, c);
                    if !x.is_zero() {
                        cols[start + c].push((tstart + r, x.clone()));
                    }
                }
            }
        }
        adapted.push(SparseMatrix::from_columns(dim, cols));
    }
    let exp = expansion(&adapted);
    for (alpha, f) in &exp.terms {
        let deg: usize = alpha.iter().map(|&a| a as usize).sum();
        for c in 0..dim {
            for (r, x) in f.column(c) {
                if level[*r] + deg > level[c] {
                    return false;
                }
                if deg == 0 && (*r != c || *x != q(1)) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matmodel::{model_sym_dual, DEFAULT_MAX_MODEL_DIM};

    #[test]
    fn zero_vector_gives_identity() {
        let m = model_sym_dual(2, 2, DEFAULT_MAX_MODEL_DIM).unwrap();
        let u = m.unipotent_image(&[q(0), q(0)]);
        assert_eq!(u.matrix, Matrix::identity(6));
    }

    #[test]
    fn affine_line_translation() {
        let m = model_sym_dual(1, 1, DEFAULT_MAX_MODEL_DIM).unwrap();
        let u = m.unipotent_image(&[q(5)]);
        assert_eq!(u.matrix, Matrix::from_i64(&[&[1, 5], &[0, 1]]));
    }

    #[test]
    fn expansion_matches_exponential() {
        let m = model_sym_dual(2, 3, DEFAULT_MAX_MODEL_DIM).unwrap();
        let e = expansion(m.trans_gens());
        assert_eq!(e.degree(), 3);
        for v in [[1, 2], [-3, 1], [0, 4]] {
            let v: Vec<Q> = v.iter().map(|&x| q(x)).collect();
            assert_eq!(e.evaluate(&v), m.unipotent_image(&v).matrix);
        }
    }

    #[test]
    fn homomorphism() {
        let m = model_sym_dual(2, 2, DEFAULT_MAX_MODEL_DIM).unwrap();
        let a = [q(1), q(-2)];
        let b = [q(3), q(1)];
        let s = [q(4), q(-1)];
        let lhs = m
            .unipotent_image(&a)
            .matrix
            .mul(&m.unipotent_image(&b).matrix);
        assert_eq!(lhs, m.unipotent_image(&s).matrix);
    }
}
