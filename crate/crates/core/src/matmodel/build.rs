//! Model constructors: the defining representation, duals, tensor, symmetric
//! and exterior powers, direct sums, and the polynomial model.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{AffMatrixRep, ModelError};
use crate::linalg::{q, SparseMatrix, SparseVec, Q};
use crate::schur::{GlWeight, Weight};
use crate::sl::{sl_basis, sl_matrix};

/// Default cap on the dimension of any model or intermediate space.
pub const DEFAULT_MAX_MODEL_DIM: usize = 4096;

fn check_cap(what: &str, size: u128, cap: usize) -> Result<(), ModelError> {
    if size > cap as u128 {
        Err(ModelError::CapExceeded {
            what: what.into(),
            size,
            cap,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn add_weights(a: &[i64], b: &[i64]) -> GlWeight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Polynomials of degree `≤ l` in `n` variables.
///
/// Basis: monomials by total degree ascending, and within a degree by
/// exponent vector in descending lexicographic order (`x_1^2` before
/// `x_1 x_2`). `x^α` has weight `−α`; `E_ij` acts as `−x_j ∂_i` and `T_k` as
/// `∂_k`.
pub fn model_sym_dual(n: usize, l: u32, max_dim: usize) -> Result<AffMatrixRep, ModelError> {
    if n == 0 {
        return Err(ModelError::Shape("rank must be positive".into()));
    }
    check_cap(
        &format!("polynomials of degree <= {l} in {n} variables"),
        binomial(n as u128 + u128::from(l), u128::from(l)),
        max_dim,
    )?;
    let mut basis: Vec<Vec<u32>> = Vec::new();
    for d in 0..=l {
        let mut layer = Vec::new();
        compositions(n, d, &mut vec![0; n], 0, &mut layer);
        basis.extend(layer);
    }
    let index: BTreeMap<Vec<u32>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let dim = basis.len();

    let sl_gens = sl_basis(n)
        .into_iter()
        .map(|e| {
            let m = sl_matrix(n, e);
            let cols = basis
                .iter()
                .map(|alpha| {
                    // X·x^α = −Σ_{i,j} X_ij x_j ∂_i x^α
                    let mut col = BTreeMap::new();
                    for (i, row) in m.iter().enumerate() {
                        for (j, &x) in row.iter().enumerate() {
                            if x == 0 || alpha[i] == 0 {
                                continue;
                            }
                            let mut beta = alpha.clone();
                            beta[i] -= 1;
                            beta[j] += 1;
                            let c = -x * i64::from(alpha[i]);
                            *col.entry(index[&beta]).or_insert(0i64) += c;
                        }
                    }
                    col.into_iter()
                        .filter(|(_, c)| *c != 0)
                        .map(|(r, c)| (r, q(c)))
                        .collect()
                })
                .collect();
            SparseMatrix::from_columns(dim, cols)
        })
        .collect();
    let trans_gens = (0..n)
        .map(|k| {
            let cols = basis
                .iter()
                .map(|alpha| {
                    if alpha[k] == 0 {
                        return Vec::new();
                    }
                    let mut beta = alpha.clone();
                    beta[k] -= 1;
                    vec![(index[&beta], q(i64::from(alpha[k])))]
                })
                .collect();
            SparseMatrix::from_columns(dim, cols)
        })
        .collect();
    let weights = basis
        .iter()
        .map(|a| a.iter().map(|&x| -i64::from(x)).collect())
        .collect();
    AffMatrixRep::from_parts(n, sl_gens, trans_gens, weights)
}

/// Exponent vectors of total degree `d`, descending lexicographic.
fn compositions(n: usize, d: u32, cur: &mut Vec<u32>, pos: usize, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == n {
        cur[pos] = d;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for a in (0..=d).rev() {
        cur[pos] = a;
        compositions(n, d - a, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

/// The irreducible `Σ^w(C^n)` with all translations zero.
pub fn sl_only_model(w: &Weight, max_dim: usize) -> Result<AffMatrixRep, ModelError> {
    crate::repclass::build_tensor_model(w, max_dim)
}

impl AffMatrixRep {
    /// `C^n` with the defining action of `sl_n` and zero translations.
    pub fn standard(n: usize) -> Self {
        let sl_gens = sl_basis(n)
            .into_iter()
            .map(|e| {
                let m = sl_matrix(n, e);
                let cols = (0..n)
                    .map(|c| {
                        (0..n)
                            .filter(|&r| m[r][c] != 0)
                            .map(|r| (r, q(m[r][c])))
                            .collect()
                    })
                    .collect();
                SparseMatrix::from_columns(n, cols)
            })
            .collect();
        let weights = (0..n)
            .map(|i| {
                let mut w = vec![0; n];
                w[i] = 1;
                w
            })
            .collect();
        let trans = vec![SparseMatrix::zeros(n, n); n];
        Self::from_parts(n, sl_gens, trans, weights).expect("standard model is well formed")
    }

    /// The `dim`-dimensional trivial representation.
    pub fn trivial(n: usize, dim: usize) -> Self {
        let z = SparseMatrix::zeros(dim, dim);
        Self::from_parts(
            n,
            vec![z.clone(); n * n - 1],
            vec![z; n],
            vec![vec![0; n]; dim],
        )
        .expect("trivial model is well formed")
    }

    /// Contragredient: every generator becomes its negated transpose and
    /// weights change sign.
    pub fn dual(&self) -> Self {
        let f = |m: &SparseMatrix| m.transpose().neg();
        AffMatrixRep {
            n: self.n,
            dim: self.dim,
            sl_gens: self.sl_gens.iter().map(f).collect(),
            trans_gens: self.trans_gens.iter().map(f).collect(),
            weights: self
                .weights
                .iter()
                .map(|w| w.iter().map(|x| -x).collect())
                .collect(),
        }
    }

    /// The same `sl_n` action with translations set to zero.
    pub fn with_zero_translations(&self) -> Self {
        let mut out = self.clone();
        out.trans_gens = vec![SparseMatrix::zeros(self.dim, self.dim); self.n];
        out
    }

    fn same_rank(&self, other: &Self) -> Result<(), ModelError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(ModelError::RankMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// `self ⊗ other` with the Leibniz action; basis vector `(i, j)` has index
    /// `i * other.dim() + j`.
    pub fn tensor(&self, other: &Self, max_dim: usize) -> Result<Self, ModelError> {
        self.same_rank(other)?;
        check_cap(
            "tensor product",
            self.dim as u128 * other.dim as u128,
            max_dim,
        )?;
        let (da, db) = (self.dim, other.dim);
        let leib = |a: &SparseMatrix, b: &SparseMatrix| {
            a.kron_identity_right(db).add(&b.kron_identity_left(da))
        };
        let sl_gens = self
            .sl_gens
            .iter()
            .zip(&other.sl_gens)
            .map(|(a, b)| leib(a, b))
            .collect();
        let trans_gens = self
            .trans_gens
            .iter()
            .zip(&other.trans_gens)
            .map(|(a, b)| leib(a, b))
            .collect();
        let mut weights = Vec::with_capacity(da * db);
        for wa in &self.weights {
            for wb in &other.weights {
                weights.push(add_weights(wa, wb));
            }
        }
        Ok(AffMatrixRep {
            n: self.n,
            dim: da * db,
            sl_gens,
            trans_gens,
            weights,
        })
    }

    /// Block-diagonal sum; `self`'s basis comes first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModelError> {
        self.same_rank(other)?;
        let sl_gens = self
            .sl_gens
            .iter()
            .zip(&other.sl_gens)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let trans_gens = self
            .trans_gens
            .iter()
            .zip(&other.trans_gens)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        Ok(AffMatrixRep {
            n: self.n,
            dim: self.dim + other.dim,
            sl_gens,
            trans_gens,
            weights,
        })
    }

    /// `Sym^a` of the model. Basis: non-decreasing index tuples in
    /// lexicographic order, read as monomials in the original basis.
    pub fn sym_power(&self, a: u32, max_dim: usize) -> Result<Self, ModelError> {
        let size = binomial(
            (self.dim as u128 + u128::from(a)).saturating_sub(1),
            u128::from(a),
        );
        check_cap(
            &format!("Sym^{a} of a {}-dimensional space", self.dim),
            size,
            max_dim,
        )?;
        let tuples = multisets(self.dim, a as usize);
        self.power(tuples, false)
    }

    /// `Λ^k` of the model. Basis: increasing index tuples in lexicographic
    /// order, read as wedge products.
    pub fn wedge_power(&self, k: u32, max_dim: usize) -> Result<Self, ModelError> {
        let size = binomial(self.dim as u128, u128::from(k));
        check_cap(
            &format!("Λ^{k} of a {}-dimensional space", self.dim),
            size,
            max_dim,
        )?;
        let tuples = subsets(self.dim, k as usize);
        self.power(tuples, true)
    }

    fn power(&self, tuples: Vec<Vec<usize>>, alternating: bool) -> Result<Self, ModelError> {
        let index: BTreeMap<Vec<usize>, usize> = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let dim = tuples.len();
        let lift = |m: &SparseMatrix| {
            let cols = tuples
                .iter()
                .map(|t| {
                    let mut col: BTreeMap<usize, Q> = BTreeMap::new();
                    for pos in 0..t.len() {
                        for (r, x) in m.column(t[pos]) {
                            let mut u = t.clone();
                            u[pos] = *r;
                            let Some((u, sign)) = canonical(u, alternating) else {
                                continue;
                            };
                            let e = col.entry(index[&u]).or_insert_with(Q::zero);
                            if sign {
                                *e += x;
                            } else {
                                *e -= x;
                            }
                        }
                    }
                    col.into_iter()
                        .filter(|(_, x)| !x.is_zero())
                        .collect::<SparseVec>()
                })
                .collect();
            SparseMatrix::from_columns(dim, cols)
        };
        let sl_gens = self.sl_gens.iter().map(lift).collect();
        let trans_gens = self.trans_gens.iter().map(lift).collect();
        let weights = tuples
            .iter()
            .map(|t| {
                t.iter().fold(vec![0; self.n], |acc, &i| {
                    add_weights(&acc, &self.weights[i])
                })
            })
            .collect();
        Ok(AffMatrixRep {
            n: self.n,
            dim,
            sl_gens,
            trans_gens,
            weights,
        })
    }
}

/// Sort a tuple. For wedge products also return the sign (`true` = +), and
/// `None` for a repeated index.
fn canonical(mut u: Vec<usize>, alternating: bool) -> Option<(Vec<usize>, bool)> {
    if !alternating {
        u.sort_unstable();
        return Some((u, true));
    }
    let mut even = true;
    for i in 1..u.len() {
        let mut j = i;
        while j > 0 && u[j - 1] > u[j] {
            u.swap(j - 1, j);
            even = !even;
            j -= 1;
        }
    }
    if u.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((u, even))
}

fn multisets(dim: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, k, 0, &mut Vec::new(), &mut out);
    out
}

fn subsets(dim: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, k, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = DEFAULT_MAX_MODEL_DIM;

    #[test]
    fn affine_line() {
        let m = model_sym_dual(1, 1, CAP).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(
            m.trans_gens()[0].to_dense(),
            crate::linalg::Matrix::from_i64(&[&[0, 1], &[0, 0]])
        );
        m.validate().unwrap();
    }

    #[test]
    fn polynomial_models_validate() {
        for n in 1..=3 {
            for l in 0..=3 {
                let m = model_sym_dual(n, l, CAP).unwrap();
                assert_eq!(
                    m.dim() as u128,
                    binomial((n as u128) + u128::from(l), u128::from(l))
                );
                m.validate().unwrap();
                m.dual().validate().unwrap();
            }
        }
    }

    #[test]
    fn powers_of_standard() {
        let s = AffMatrixRep::standard(3);
        s.validate().unwrap();
        let w2 = s.wedge_power(2, CAP).unwrap();
        assert_eq!(w2.dim(), 3);
        w2.validate().unwrap();
        let s2 = s.sym_power(2, CAP).unwrap();
        assert_eq!(s2.dim(), 6);
        s2.validate().unwrap();
        let t = s.tensor(&s.dual(), CAP).unwrap();
        assert_eq!(t.dim(), 9);
        t.validate().unwrap();
    }

    #[test]
    fn powers_of_affine_model() {
        let m = model_sym_dual(2, 1, CAP).unwrap();
        m.sym_power(2, CAP).unwrap().validate().unwrap();
        m.wedge_power(2, CAP).unwrap().validate().unwrap();
        let t = m.tensor(&m.dual(), CAP).unwrap();
        t.validate().unwrap();
        m.direct_sum(&t).unwrap().validate().unwrap();
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            model_sym_dual(5, 10, 100),
            Err(ModelError::CapExceeded { .. })
        ));
    }

    #[test]
    fn broken_model_is_rejected() {
        let s = AffMatrixRep::standard(2);
        let mut gens = s.sl_gens().to_vec();
        gens.swap(0, 1);
        let err = AffMatrixRep::new(2, gens, s.trans_gens().to_vec(), s.weights().to_vec());
        assert!(matches!(err, Err(ModelError::Invariant(_))));
    }
}
