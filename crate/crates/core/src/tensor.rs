//! Rank-4 coefficient tensors of endomorphisms of `M ⊗ M`.
//!
//! An [`FsTensor`] stores `x^{ij}_{uv}` with `R(m_u ⊗ m_v) = Σ_{ij} x^{ij}_{uv} m_i ⊗ m_j`.
//! Storage is 0-based with flat index `((i·n + j)·n + u)·n + v`. The matrix view
//! puts the output pair `(i, j)` on row `i·n + j` and the input pair `(u, v)` on
//! column `u·n + v`.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{Field, Scalar};

pub const MAX_N: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FsTensor {
    n: usize,
    field: Field,
    x: Vec<Scalar>,
}

impl FsTensor {
    pub fn new(n: usize, field: Field, entries: Vec<Scalar>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::Dimension(format!("basis size {n} outside 1..={MAX_N}")));
        }
        if entries.len() != n.pow(4) {
            return Err(Error::Dimension(format!(
                "expected {} entries for n = {n}, found {}",
                n.pow(4),
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field.to_string(),
                found: bad.field().to_string(),
            });
        }
        Ok(FsTensor { n, field, x: entries })
    }

    pub fn from_ints(n: usize, field: Field, entries: &[i64]) -> Result<Self> {
        Self::new(n, field, entries.iter().map(|&v| field.int(v)).collect())
    }

    pub fn zeros(n: usize, field: Field) -> Self {
        FsTensor {
            n,
            field,
            x: vec![field.zero(); n.pow(4)],
        }
    }

    pub fn from_fn(n: usize, field: Field, mut f: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Self {
        let mut x = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        x.push(f(i, j, u, v));
                    }
                }
            }
        }
        FsTensor { n, field, x }
    }

    /// The identity map of `M ⊗ M`.
    pub fn identity(n: usize, field: Field) -> Self {
        Self::from_fn(n, field, |i, j, u, v| field.int((i == u && j == v) as i64))
    }

    /// The flip `τ(m_u ⊗ m_v) = m_v ⊗ m_u`.
    pub fn switch(n: usize, field: Field) -> Self {
        Self::from_fn(n, field, |i, j, u, v| field.int((i == v && j == u) as i64))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.x
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize, u: usize, v: usize) -> usize {
        let n = self.n;
        ((i * n + j) * n + u) * n + v
    }

    /// `x^{ij}_{uv}`.
    #[inline]
    pub fn get(&self, i: usize, j: usize, u: usize, v: usize) -> &Scalar {
        &self.x[self.index(i, j, u, v)]
    }

    pub fn set(&mut self, i: usize, j: usize, u: usize, v: usize, s: Scalar) {
        assert_eq!(s.field(), self.field);
        let k = self.index(i, j, u, v);
        self.x[k] = s;
    }

    pub fn scale(&self, c: &Scalar) -> FsTensor {
        FsTensor {
            n: self.n,
            field: self.field,
            x: self.x.iter().map(|a| a * c).collect(),
        }
    }

    /// Reads an `n² × n²` operator matrix (output pair on rows).
    pub fn from_matrix(m: &DenseMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension("operator matrix must be square".into()));
        }
        let n = (1..=MAX_N)
            .find(|k| k * k == m.rows())
            .ok_or_else(|| Error::Dimension(format!("{} is not a perfect square", m.rows())))?;
        Ok(Self::from_fn(n, m.field(), |i, j, u, v| {
            m[(i * n + j, u * n + v)].clone()
        }))
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        let n = self.n;
        let mut m = DenseMatrix::zeros(self.field, n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        m[(i * n + j, u * n + v)] = self.get(i, j, u, v).clone();
                    }
                }
            }
        }
        m
    }

    /// `(u ⊗ u) R (u⁻¹ ⊗ u⁻¹)`.
    pub fn conjugate(&self, u: &DenseMatrix) -> Result<FsTensor> {
        if u.rows() != self.n || !u.is_square() {
            return Err(Error::Dimension(format!("conjugating matrix must be {0}×{0}", self.n)));
        }
        if u.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field.to_string(),
                found: u.field().to_string(),
            });
        }
        let inv = u.invert().ok_or(Error::Singular)?;
        let k = u.kron(u);
        let kinv = inv.kron(&inv);
        Self::from_matrix(&k.mul(&self.to_matrix()).mul(&kinv))
    }

    /// Left multiplication by `e ∈ M_n(k) ⊗ M_n(k)` on `k^n ⊗ k^n`.
    ///
    /// `e` is an `n² × n²` array whose entry at `(a·n + b, c·n + d)` is the
    /// coefficient of `E_ab ⊗ E_cd`.
    pub fn from_central_element(n: usize, e: &DenseMatrix) -> Result<FsTensor> {
        if e.rows() != n * n || e.cols() != n * n {
            return Err(Error::Dimension(format!(
                "element of M_{n} ⊗ M_{n} needs a {0}×{0} array",
                n * n
            )));
        }
        Ok(Self::from_fn(n, e.field(), |i, j, u, v| {
            e[(i * n + u, j * n + v)].clone()
        }))
    }

    /// `R(m ⊗ m') = Σ e_kl (ρ_k m) ⊗ (ρ_l m')` for action matrices `ρ_k`.
    pub fn from_action(e: &DenseMatrix, action: &[DenseMatrix]) -> Result<FsTensor> {
        let m = action.len();
        if e.rows() != m || e.cols() != m {
            return Err(Error::Dimension(format!(
                "element has shape {}×{} but the algebra has dimension {m}",
                e.rows(),
                e.cols()
            )));
        }
        let d = action.first().map_or(0, |a| a.rows());
        if action.iter().any(|a| a.rows() != d || a.cols() != d) {
            return Err(Error::Dimension("action matrices differ in shape".into()));
        }
        let field = e.field();
        let mut t = FsTensor::zeros(d, field);
        for k in 0..m {
            for l in 0..m {
                let c = &e[(k, l)];
                if c.is_zero() {
                    continue;
                }
                for i in 0..d {
                    for u in 0..d {
                        let a = &action[k][(i, u)];
                        if a.is_zero() {
                            continue;
                        }
                        let ca = c * a;
                        for j in 0..d {
                            for v in 0..d {
                                let b = &action[l][(j, v)];
                                if b.is_zero() {
                                    continue;
                                }
                                let idx = t.index(i, j, u, v);
                                t.x[idx].add_mul(&ca, b);
                            }
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    /// `τ ∘ R`.
    pub fn flipped(&self) -> FsTensor {
        Self::from_fn(self.n, self.field, |i, j, u, v| self.get(j, i, u, v).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_matrix_is_identity_tensor() {
        let f = Field::gf(3);
        let t = FsTensor::from_matrix(&DenseMatrix::identity(f, 4)).unwrap();
        assert_eq!(t, FsTensor::identity(2, f));
        assert_eq!(t.to_matrix(), DenseMatrix::identity(f, 4));
    }

    #[test]
    fn middle_swap_is_switch() {
        let f = Field::gf(2);
        let m = DenseMatrix::from_ints(f, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(FsTensor::from_matrix(&m).unwrap(), FsTensor::switch(2, f));
    }

    #[test]
    fn rejects_non_square_sizes() {
        let f = Field::gf(2);
        assert!(FsTensor::from_matrix(&DenseMatrix::identity(f, 3)).is_err());
        assert!(FsTensor::from_ints(2, f, &[0; 15]).is_err());
        assert!(FsTensor::new(1, f, vec![Field::gf(3).one()]).is_err());
    }

    #[test]
    fn conjugation_fixes_identity_and_switch() {
        let f = Field::gf(2);
        let u = DenseMatrix::from_ints(f, &[&[1, 1], &[0, 1]]);
        let id = FsTensor::identity(2, f);
        assert_eq!(id.conjugate(&u).unwrap(), id);
        let sw = FsTensor::switch(2, f);
        assert_eq!(sw.conjugate(&u).unwrap(), sw);
        let sing = DenseMatrix::from_ints(f, &[&[1, 1], &[1, 1]]);
        assert!(matches!(id.conjugate(&sing), Err(Error::Singular)));
    }

    #[test]
    fn unit_element_gives_identity() {
        let f = Field::gf(5);
        let n = 2;
        // 1 ⊗ 1 = Σ_{a,c} E_aa ⊗ E_cc
        let mut e = DenseMatrix::zeros(f, n * n, n * n);
        for a in 0..n {
            for c in 0..n {
                e[(a * n + a, c * n + c)] = f.one();
            }
        }
        assert_eq!(FsTensor::from_central_element(n, &e).unwrap(), FsTensor::identity(n, f));
    }
}
