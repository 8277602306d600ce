//! Left modules over a structure-constant algebra, optionally with a right coaction.

use crate::algebra::StructAlgebra;
use crate::coalgebra::StructCoalgebra;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{Field, Scalar};
use crate::verify::CheckReport;

/// `action[k]` is the matrix of `b_k` on a `d`-dimensional space (column `s` holds `b_k·m_s`).
/// The coaction `ρ(m_t) = Σ co[t][s][k] m_s ⊗ b_k` is stored flat at `(t·d + s)·m + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    dim: usize,
    algebra_dim: usize,
    field: Field,
    action: Vec<DenseMatrix>,
    coaction: Option<Vec<Scalar>>,
}

impl ModuleRep {
    pub fn new(
        field: Field,
        dim: usize,
        algebra_dim: usize,
        action: Vec<DenseMatrix>,
        coaction: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        if !action.is_empty() && action.len() != algebra_dim {
            return Err(Error::Dimension(format!(
                "expected {algebra_dim} action matrices, found {}",
                action.len()
            )));
        }
        if action
            .iter()
            .any(|a| a.rows() != dim || a.cols() != dim || a.field() != field)
        {
            return Err(Error::Dimension(format!(
                "action matrices must be {dim}×{dim} over {field}"
            )));
        }
        if let Some(co) = &coaction {
            if co.len() != dim * dim * algebra_dim {
                return Err(Error::Dimension(format!(
                    "coaction needs {} entries, found {}",
                    dim * dim * algebra_dim,
                    co.len()
                )));
            }
            if co.iter().any(|s| s.field() != field) {
                return Err(Error::FieldMismatch {
                    expected: field.to_string(),
                    found: "another field".into(),
                });
            }
        }
        Ok(ModuleRep {
            dim,
            algebra_dim,
            field,
            action,
            coaction,
        })
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(a: &StructAlgebra) -> Self {
        let m = a.dim();
        let action = (0..m).map(|k| a.left_mul_matrix(&a.basis_vector(k))).collect();
        ModuleRep::new(a.field(), m, m, action, None).expect("well-formed")
    }

    /// `C` coacting on itself through `Δ`.
    pub fn regular_comodule(c: &StructCoalgebra) -> Self {
        let m = c.dim();
        let mut co = Vec::with_capacity(m * m * m);
        for t in 0..m {
            for s in 0..m {
                for k in 0..m {
                    co.push(c.d(t, s, k).clone());
                }
            }
        }
        ModuleRep::new(c.field(), m, m, Vec::new(), Some(co)).expect("well-formed")
    }

    /// `kⁿ` as a `Mⁿ(k)`-comodule, `ρ(m_t) = Σ_s m_s ⊗ c_st`, together with the
    /// matching `M_n(k)`-action `E_ab m_t = δ_bt m_a`.
    pub fn column(n: usize, field: Field) -> Self {
        let m = n * n;
        let action = (0..m)
            .map(|x| {
                let mut e = DenseMatrix::zeros(field, n, n);
                e[(x / n, x % n)] = field.one();
                e
            })
            .collect();
        let mut co = vec![field.zero(); n * n * m];
        for t in 0..n {
            for s in 0..n {
                co[(t * n + s) * m + s * n + t] = field.one();
            }
        }
        ModuleRep::new(field, n, m, action, Some(co)).expect("well-formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn action(&self) -> &[DenseMatrix] {
        &self.action
    }

    pub fn coaction(&self) -> Option<&[Scalar]> {
        self.coaction.as_deref()
    }

    pub fn with_coaction(mut self, co: Vec<Scalar>) -> Result<Self> {
        let d = self.dim;
        if co.len() != d * d * self.algebra_dim {
            return Err(Error::Dimension("coaction has the wrong length".into()));
        }
        self.coaction = Some(co);
        Ok(self)
    }

    /// `co[t][s][k]`.
    #[inline]
    pub fn co(&self, t: usize, s: usize, k: usize) -> &Scalar {
        let co = self.coaction.as_ref().expect("coaction present");
        &co[(t * self.dim + s) * self.algebra_dim + k]
    }

    /// `ρ_i ρ_j = Σ_k c_ij^k ρ_k`, and the unit acts as the identity; witness `(i, j, r, c)`.
    pub fn check_action(&self, a: &StructAlgebra) -> CheckReport {
        let m = a.dim();
        let zero = DenseMatrix::zeros(self.field, self.dim, self.dim);
        for i in 0..m {
            for j in 0..m {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = zero.clone();
                for k in 0..m {
                    rhs = rhs.add(&self.action[k].scale(a.c(i, j, k)));
                }
                if let Some(mut r) = CheckReport::compare(&[i, j], lhs.entries(), rhs.entries()) {
                    if let Some(w) = r.witness.as_mut() {
                        let t = w.indices.pop().unwrap();
                        w.indices.extend([t / self.dim, t % self.dim]);
                    }
                    return r;
                }
            }
        }
        if let Some(u) = a.unit() {
            let mut one = zero.clone();
            for k in 0..m {
                one = one.add(&self.action[k].scale(&u[k]));
            }
            let id = DenseMatrix::identity(self.field, self.dim);
            if let Some(r) = CheckReport::compare(&[m, m], one.entries(), id.entries()) {
                return r;
            }
        }
        CheckReport::pass()
    }

    /// Coassociativity and, when `c` has one, the counit law; witness `(t, r, q, k)`.
    pub fn check_coaction(&self, c: &StructCoalgebra) -> Result<CheckReport> {
        if self.coaction.is_none() {
            return Err(Error::InvalidInput("module has no coaction".into()));
        }
        let (d, m) = (self.dim, c.dim());
        let f = self.field;
        for t in 0..d {
            let mut lhs = vec![f.zero(); d * m * m];
            let mut rhs = vec![f.zero(); d * m * m];
            for s in 0..d {
                for k in 0..m {
                    let w = self.co(t, s, k);
                    if w.is_zero() {
                        continue;
                    }
                    for r in 0..d {
                        for q in 0..m {
                            lhs[(r * m + q) * m + k].add_mul(w, self.co(s, r, q));
                        }
                    }
                    for q in 0..m {
                        for l in 0..m {
                            rhs[(s * m + q) * m + l].add_mul(w, c.d(k, q, l));
                        }
                    }
                }
            }
            if let Some(mut r) = CheckReport::compare(&[t], &lhs, &rhs) {
                if let Some(w) = r.witness.as_mut() {
                    let x = w.indices.pop().unwrap();
                    w.indices.extend([x / (m * m), (x / m) % m, x % m]);
                }
                return Ok(r);
            }
            if let Some(eps) = c.counit() {
                let mut back = vec![f.zero(); d];
                for s in 0..d {
                    for k in 0..m {
                        back[s].add_mul(self.co(t, s, k), &eps[k]);
                    }
                }
                let mut want = vec![f.zero(); d];
                want[t] = f.one();
                if let Some(r) = CheckReport::compare(&[t, d], &back, &want) {
                    return Ok(r);
                }
            }
        }
        Ok(CheckReport::pass())
    }
}
