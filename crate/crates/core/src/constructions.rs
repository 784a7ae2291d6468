//! Two explicit non-split `SAff_n` representations built as submodules of
//! `W ⊗ Sym^2(C^(n+1))^∨`, where `Sym^2(C^(n+1))^∨` is the space of
//! polynomials of degree at most 2 on `C^n`.
//!
//! * [`exact_top_forms`]: inside `(C^n)^∨ ⊗ Sym^2(C^(n+1))^∨` (1-forms with
//!   polynomial coefficients), the submodule generated by the exact forms
//!   `d(cubic)` and by `x_i dx_j − x_j dx_i`.
//! * [`linked_cubics`]: inside `(Sym^3 ⊕ Σ^(2,1) ⊕ Λ^3)(C^n)^∨ ⊗ Sym^2(C^(n+1))^∨`,
//!   the submodule generated by a highest weight vector of `Sym^5(C^n)^∨` in
//!   the quadratic part and by highest weight vectors of `Σ^(3,1)(C^n)^∨` and
//!   `Σ^(2,1,1)(C^n)^∨` in the linear part, each taken diagonally across the
//!   summands of `W` that contain it.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{Matrix, SparseVec, Q};
use crate::matmodel::{model_sym_dual, sl_only_model, AffMatrixRep, ModelError};
use crate::schur::{GlWeight, Weight};
use crate::sl::SlElement;

/// Basis of the highest weight vectors of weight `hw` among the basis
/// vectors selected by `mask`: the joint kernel of all raising operators
/// `E_ij`, `i < j`, restricted to that part of the weight space.
pub fn highest_weight_vectors(
    rep: &AffMatrixRep,
    hw: &[i64],
    mask: &dyn Fn(usize) -> bool,
) -> Vec<SparseVec> {
    let n = rep.rank();
    let spaces = rep.weight_spaces();
    let cols: Vec<usize> = spaces
        .indices(hw)
        .iter()
        .copied()
        .filter(|&g| mask(g))
        .collect();
    if cols.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = rep.sl_gen(SlElement::Root(i, j));
            let mut target: GlWeight = hw.to_vec();
            target[i] += 1;
            target[j] -= 1;
            let dst = spaces.indices(&target);
            let mut block = Matrix::zeros(dst.len(), cols.len());
            for (c, &g) in cols.iter().enumerate() {
                for (r, x) in m.column(g) {
                    block.set(spaces.slot(*r), c, x.clone());
                }
            }
            rows.extend(block.row_vecs());
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(cols.len()).row_vecs()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    kernel
        .into_iter()
        .map(|v| {
            cols.iter()
                .zip(v)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&g, x)| (g, x))
                .collect()
        })
        .collect()
}

/// Sum of a list of sparse vectors.
fn diagonal(vectors: &[SparseVec]) -> SparseVec {
    let one = Q::from_integer(1.into());
    vectors.iter().fold(SparseVec::new(), |acc, v| {
        crate::linalg::sparse_axpy(&acc, &one, v)
    })
}

/// `GL_n` highest weight of `Σ^w(C^n)^∨`.
fn dual_hw(w: &Weight) -> GlWeight {
    w.parts().iter().rev().map(|&p| -i64::from(p)).collect()
}

/// `base ⊗ polynomials of degree ≤ 2`, with the polynomial degree of each
/// basis vector.
fn with_quadratics(
    base: &AffMatrixRep,
    max_dim: usize,
) -> Result<(AffMatrixRep, Vec<i64>), ModelError> {
    let n = base.rank();
    let poly = model_sym_dual(n, 2, max_dim)?;
    let amb = base.tensor(&poly, max_dim)?;
    let pd = poly.dim();
    let degree = (0..amb.dim())
        .map(|t| -poly.weights()[t % pd].iter().sum::<i64>())
        .collect();
    Ok((amb, degree))
}

/// The submodule of 1-forms with coefficients of degree at most 2 generated
/// by exact forms of cubics and by `x_i dx_j − x_j dx_i`. Needs `n ≥ 2`.
pub fn exact_top_forms(n: usize, max_dim: usize) -> Result<AffMatrixRep, ModelError> {
    if n < 2 {
        return Err(ModelError::Shape("this construction needs n >= 2".into()));
    }
    let forms = AffMatrixRep::standard(n).dual();
    let (amb, degree) = with_quadratics(&forms, max_dim)?;
    let sym3 = highest_weight_vectors(&amb, &dual_hw(&Weight::sym(n, 3)), &|g| degree[g] == 2);
    let wedge2 = highest_weight_vectors(&amb, &dual_hw(&Weight::wedge(n, 2)), &|g| degree[g] == 1);
    let gens = [diagonal(&sym3), diagonal(&wedge2)];
    let sub = amb.generated_submodule(&gens);
    amb.restrict(&sub)
}

/// The three-layer example over `W = (Sym^3 ⊕ Σ^(2,1) ⊕ Λ^3)(C^n)^∨`. Needs
/// `n ≥ 3`; all layer labels are distinct from `n = 4` on.
pub fn linked_cubics(n: usize, max_dim: usize) -> Result<AffMatrixRep, ModelError> {
    if n < 3 {
        return Err(ModelError::Shape("this construction needs n >= 3".into()));
    }
    let part = |raw: &[i64]| -> Result<AffMatrixRep, ModelError> {
        let mut v = raw.to_vec();
        v.resize(n, 0);
        let w = Weight::normalize(n, &v).expect("valid partition");
        Ok(sl_only_model(&w, max_dim)?.dual())
    };
    let base = part(&[3])?
        .direct_sum(&part(&[2, 1])?)?
        .direct_sum(&part(&[1, 1, 1])?)?;
    let (amb, degree) = with_quadratics(&base, max_dim)?;
    let label = |raw: &[i64]| {
        let mut v = raw.to_vec();
        v.resize(n, 0);
        dual_hw(&Weight::normalize(n, &v).expect("valid partition"))
    };
    let sym5 = highest_weight_vectors(&amb, &label(&[5]), &|g| degree[g] == 2);
    let s31 = highest_weight_vectors(&amb, &label(&[3, 1]), &|g| degree[g] == 1);
    let s211 = highest_weight_vectors(&amb, &label(&[2, 1, 1]), &|g| degree[g] == 1);
    let gens = [diagonal(&sym5), diagonal(&s31), diagonal(&s211)];
    let sub = amb.generated_submodule(&gens);
    amb.restrict(&sub)
}
