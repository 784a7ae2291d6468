//! Explicit matrix models of `SAff_n` representations.
//!
//! A model stores the action of the basis of `sl_n` (see [`crate::sl`]) and
//! of the `n` infinitesimal translations `T_1, …, T_n`, plus a `GL_n` weight
//! for every basis vector. All generators are exact sparse rational matrices
//! acting on column vectors.
//!
//! Translations act on functions by `f(x) ↦ f(x + t)`, so on
//! [`model_sym_dual`] the generator `T_k` is `∂/∂x_k`. With this convention
//! `[X, T_k] = Σ_i X_ik T_i` for every `X ∈ sl_n`, and each `T_k` raises
//! weights by `ε_k`.

mod build;
mod graded;
mod unipotent;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::linalg::{q, SparseMatrix, Q};
use crate::schur::GlWeight;
use crate::sl::{bracket, sl_basis, sl_dim, sl_matrix, SlElement};

pub use build::{model_sym_dual, sl_only_model, DEFAULT_MAX_MODEL_DIM};
pub use graded::{GradedSubspace, WeightSpaces};
pub use unipotent::{expansion, verify_degree_bound, Expansion, UnipotentImage};

/// A relation that a model's generators fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantViolation {
    /// `[ρ(a), ρ(b)] ≠ ρ([a, b])`.
    SlBracket(SlElement, SlElement),
    /// `[T_i, T_j] ≠ 0`.
    TranslationsCommute(usize, usize),
    /// `[ρ(a), T_k] ≠ Σ_i a_ik T_i`.
    Semidirect(SlElement, usize),
    /// `T_k` is not nilpotent.
    NotNilpotent(usize),
    /// A generator entry connects two basis vectors whose weights disagree
    /// with the generator's weight shift (or Cartan eigenvalue).
    Grading {
        generator: String,
        row: usize,
        col: usize,
    },
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantViolation::SlBracket(a, b) => {
                write!(f, "bracket [{a}, {b}] does not match sl_n")
            }
            InvariantViolation::TranslationsCommute(i, j) => {
                write!(f, "translations T_{} and T_{} do not commute", i + 1, j + 1)
            }
            InvariantViolation::Semidirect(a, k) => {
                write!(
                    f,
                    "bracket [{a}, T_{}] does not match the action on C^n",
                    k + 1
                )
            }
            InvariantViolation::NotNilpotent(k) => write!(f, "T_{} is not nilpotent", k + 1),
            InvariantViolation::Grading {
                generator,
                row,
                col,
            } => {
                write!(
                    f,
                    "{generator} entry ({row}, {col}) breaks the weight grading"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    RankMismatch {
        left: usize,
        right: usize,
    },
    /// Generator count, matrix shape or weight length is wrong.
    Shape(String),
    /// A construction would exceed the configured dimension cap.
    CapExceeded {
        what: String,
        size: u128,
        cap: usize,
    },
    Invariant(InvariantViolation),
    /// A subspace handed to [`AffMatrixRep::restrict`] is not stable.
    NotInvariant,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::RankMismatch { left, right } => {
                write!(f, "models have different ranks ({left} vs {right})")
            }
            ModelError::Shape(s) => write!(f, "malformed model: {s}"),
            ModelError::CapExceeded { what, size, cap } => {
                write!(
                    f,
                    "{what} has dimension {size}, above the max-model-dim cap {cap}"
                )
            }
            ModelError::Invariant(v) => write!(f, "invariant violated: {v}"),
            ModelError::NotInvariant => write!(f, "subspace is not stable under the generators"),
        }
    }
}

impl core::error::Error for ModelError {}

impl From<InvariantViolation> for ModelError {
    fn from(v: InvariantViolation) -> Self {
        ModelError::Invariant(v)
    }
}

/// Exact matrix model of an `SAff_n` representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffMatrixRep {
    n: usize,
    dim: usize,
    sl_gens: Vec<SparseMatrix>,
    trans_gens: Vec<SparseMatrix>,
    weights: Vec<GlWeight>,
}

impl AffMatrixRep {
    /// Build a model from raw data and run the full invariant suite.
    pub fn new(
        n: usize,
        sl_gens: Vec<SparseMatrix>,
        trans_gens: Vec<SparseMatrix>,
        weights: Vec<GlWeight>,
    ) -> Result<Self, ModelError> {
        let rep = Self::from_parts(n, sl_gens, trans_gens, weights)?;
        rep.validate()?;
        Ok(rep)
    }

    /// Shape checks only; the caller vouches for the relations.
    pub(crate) fn from_parts(
        n: usize,
        sl_gens: Vec<SparseMatrix>,
        trans_gens: Vec<SparseMatrix>,
        weights: Vec<GlWeight>,
    ) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::Shape("rank must be positive".into()));
        }
        let dim = weights.len();
        if sl_gens.len() != sl_dim(n) {
            return Err(ModelError::Shape(format!(
                "expected {} sl_n generators, found {}",
                sl_dim(n),
                sl_gens.len()
            )));
        }
        if trans_gens.len() != n {
            return Err(ModelError::Shape(format!(
                "expected {n} translation generators, found {}",
                trans_gens.len()
            )));
        }
        for (k, m) in sl_gens.iter().chain(&trans_gens).enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(ModelError::Shape(format!(
                    "generator {k} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if let Some(w) = weights.iter().find(|w| w.len() != n) {
            return Err(ModelError::Shape(format!(
                "weight {w:?} does not have length {n}"
            )));
        }
        Ok(AffMatrixRep {
            n,
            dim,
            sl_gens,
            trans_gens,
            weights,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sl_gens(&self) -> &[SparseMatrix] {
        &self.sl_gens
    }

    pub fn trans_gens(&self) -> &[SparseMatrix] {
        &self.trans_gens
    }

    pub fn weights(&self) -> &[GlWeight] {
        &self.weights
    }

    /// Generator for a basis element of `sl_n`.
    pub fn sl_gen(&self, e: SlElement) -> &SparseMatrix {
        &self.sl_gens[crate::sl::sl_index(self.n, e)]
    }

    /// All generators: `sl_n` basis first, then translations.
    pub fn generators(&self) -> impl Iterator<Item = &SparseMatrix> {
        self.sl_gens.iter().chain(&self.trans_gens)
    }

    /// `true` when every translation generator vanishes.
    pub fn is_sl_only(&self) -> bool {
        self.trans_gens.iter().all(SparseMatrix::is_zero)
    }

    /// Run the full invariant suite: grading, `sl_n` brackets, commuting
    /// translations, the semidirect relation and nilpotency.
    pub fn validate(&self) -> Result<(), InvariantViolation> {
        self.check_grading()?;
        let n = self.n;
        let basis = sl_basis(n);
        for (ia, &a) in basis.iter().enumerate() {
            for (ib, &b) in basis.iter().enumerate().skip(ia + 1) {
                let lhs = self.sl_gens[ia].commutator(&self.sl_gens[ib]);
                let mut rhs = SparseMatrix::zeros(self.dim, self.dim);
                for (c, coeff) in bracket(n, a, b) {
                    rhs = rhs.axpy(&q(coeff), &self.sl_gens[c]);
                }
                if lhs != rhs {
                    return Err(InvariantViolation::SlBracket(a, b));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !self.trans_gens[i].commutator(&self.trans_gens[j]).is_zero() {
                    return Err(InvariantViolation::TranslationsCommute(i, j));
                }
            }
        }
        for (ia, &a) in basis.iter().enumerate() {
            let m = sl_matrix(n, a);
            for k in 0..n {
                let lhs = self.sl_gens[ia].commutator(&self.trans_gens[k]);
                let mut rhs = SparseMatrix::zeros(self.dim, self.dim);
                for (i, row) in m.iter().enumerate() {
                    if row[k] != 0 {
                        rhs = rhs.axpy(&q(row[k]), &self.trans_gens[i]);
                    }
                }
                if lhs != rhs {
                    return Err(InvariantViolation::Semidirect(a, k));
                }
            }
        }
        for (k, t) in self.trans_gens.iter().enumerate() {
            if t.nilpotency_index().is_none() {
                return Err(InvariantViolation::NotNilpotent(k));
            }
        }
        Ok(())
    }

    fn check_grading(&self) -> Result<(), InvariantViolation> {
        let n = self.n;
        for (e, m) in sl_basis(n).into_iter().zip(&self.sl_gens) {
            for c in 0..self.dim {
                for (r, x) in m.column(c) {
                    let ok = match e {
                        SlElement::Root(..) => {
                            shifted(&self.weights[c], &e.weight_shift(n)) == self.weights[*r]
                        }
                        SlElement::Cartan(i) => {
                            let w = &self.weights[c];
                            *r == c && *x == q(w[i] - w[i + 1])
                        }
                    };
                    if !ok {
                        return Err(InvariantViolation::Grading {
                            generator: format!("{e}"),
                            row: *r,
                            col: c,
                        });
                    }
                }
            }
            if let SlElement::Cartan(i) = e {
                // Diagonal entries that are missing must be genuinely zero.
                for c in 0..self.dim {
                    let w = &self.weights[c];
                    if w[i] != w[i + 1] && m.get(c, c).is_zero() {
                        return Err(InvariantViolation::Grading {
                            generator: format!("{e}"),
                            row: c,
                            col: c,
                        });
                    }
                }
            }
        }
        for (k, m) in self.trans_gens.iter().enumerate() {
            let mut shift = alloc::vec![0i64; n];
            shift[k] = 1;
            for c in 0..self.dim {
                for (r, _) in m.column(c) {
                    if shifted(&self.weights[c], &shift) != self.weights[*r] {
                        return Err(InvariantViolation::Grading {
                            generator: format!("T_{}", k + 1),
                            row: *r,
                            col: c,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `Σ v_k T_k`.
    pub fn translation(&self, v: &[Q]) -> SparseMatrix {
        assert_eq!(v.len(), self.n, "translation vector has the wrong length");
        let mut out = SparseMatrix::zeros(self.dim, self.dim);
        for (t, x) in self.trans_gens.iter().zip(v) {
            if !x.is_zero() {
                out = out.axpy(x, t);
            }
        }
        out
    }
}

fn shifted(w: &[i64], s: &[i64]) -> GlWeight {
    w.iter().zip(s).map(|(a, b)| a + b).collect()
}

impl fmt::Display for SlElement {
    /// 1-based labels: `E_{1,2}`, `H_1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlElement::Root(i, j) => write!(f, "E_{{{},{}}}", i + 1, j + 1),
            SlElement::Cartan(i) => write!(f, "H_{}", i + 1),
        }
    }
}
