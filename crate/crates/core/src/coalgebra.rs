//! Finite-dimensional coalgebras by costructure constants and FS-maps on them.

use crate::algebra::{CentralElement, StructAlgebra};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::module::ModuleRep;
use crate::scalar::{Field, Scalar};
use crate::tensor::FsTensor;
use crate::verify::{check_fs, CheckReport};

/// `Δ(b_k) = Σ_{ij} d_k^{ij} b_i ⊗ b_j`, stored flat at `(k·m + i)·m + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructCoalgebra {
    dim: usize,
    field: Field,
    comul: Vec<Scalar>,
    counit: Option<Vec<Scalar>>,
}

impl StructCoalgebra {
    pub fn new(dim: usize, field: Field, comul: Vec<Scalar>, counit: Option<Vec<Scalar>>) -> Result<Self> {
        if comul.len() != dim.pow(3) {
            return Err(Error::Dimension(format!(
                "comultiplication table needs {} entries, found {}",
                dim.pow(3),
                comul.len()
            )));
        }
        if counit.as_ref().is_some_and(|e| e.len() != dim) {
            return Err(Error::Dimension(format!("counit needs {dim} coordinates")));
        }
        if let Some(bad) = comul.iter().chain(counit.iter().flatten()).find(|s| s.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field.to_string(),
                found: bad.field().to_string(),
            });
        }
        Ok(StructCoalgebra {
            dim,
            field,
            comul,
            counit,
        })
    }

    pub fn from_fn(
        dim: usize,
        field: Field,
        counit: Option<Vec<Scalar>>,
        mut d: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut comul = Vec::with_capacity(dim.pow(3));
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    comul.push(d(k, i, j));
                }
            }
        }
        Self::new(dim, field, comul, counit)
    }

    /// `Mⁿ(k)`: `Δ(c_ij) = Σ_k c_ik ⊗ c_kj`, with `c_ij` flattened as `i·n + j`.
    pub fn comatrix(n: usize, field: Field) -> Self {
        dual_coalgebra(&StructAlgebra::matrix(n, field))
    }

    /// `count` grouplike elements.
    pub fn grouplike(count: usize, field: Field) -> Self {
        Self::from_fn(count, field, Some(vec![field.one(); count]), |k, i, j| {
            field.int((k == i && i == j) as i64)
        })
        .expect("well-formed")
    }

    /// `span{1, Y, …, Y^deg}` inside `k[Y]` with `Y` primitive:
    /// `Δ(Yⁿ) = Σ_i C(n, i) Yⁱ ⊗ Yⁿ⁻ⁱ`.
    pub fn truncated_polynomial(deg: usize, field: Field) -> Self {
        let mut counit = vec![field.zero(); deg + 1];
        counit[0] = field.one();
        Self::from_fn(deg + 1, field, Some(counit), |k, i, j| {
            if i + j == k {
                field.int(binomial(k, i) as i64)
            } else {
                field.zero()
            }
        })
        .expect("well-formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn comul_table(&self) -> &[Scalar] {
        &self.comul
    }

    pub fn counit(&self) -> Option<&[Scalar]> {
        self.counit.as_deref()
    }

    pub fn require_counit(&self) -> Result<&[Scalar]> {
        self.counit
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("coalgebra has no counit".into()))
    }

    /// `d_k^{ij}`.
    #[inline]
    pub fn d(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.comul[(k * self.dim + i) * self.dim + j]
    }

    /// Coordinates of `Δ(x)` in `C ⊗ C`, flattened as `i·m + j`.
    pub fn coproduct(&self, x: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim;
        let mut out = vec![self.field.zero(); m * m];
        for k in 0..m {
            if x[k].is_zero() {
                continue;
            }
            for (t, d) in self.comul[k * m * m..(k + 1) * m * m].iter().enumerate() {
                out[t].add_mul(&x[k], d);
            }
        }
        out
    }

    /// `(Δ ⊗ I)Δ = (I ⊗ Δ)Δ` on every basis element; witness `(k, i, j, l)`.
    pub fn check_coassociative(&self) -> CheckReport {
        let m = self.dim;
        for k in 0..m {
            let mut lhs = vec![self.field.zero(); m * m * m];
            let mut rhs = vec![self.field.zero(); m * m * m];
            for a in 0..m {
                for b in 0..m {
                    let w = self.d(k, a, b);
                    if w.is_zero() {
                        continue;
                    }
                    for x in 0..m {
                        for y in 0..m {
                            lhs[(x * m + y) * m + b].add_mul(w, self.d(a, x, y));
                            rhs[(a * m + x) * m + y].add_mul(w, self.d(b, x, y));
                        }
                    }
                }
            }
            if let Some(mut rep) = CheckReport::compare(&[k], &lhs, &rhs) {
                if let Some(w) = rep.witness.as_mut() {
                    let t = w.indices.pop().unwrap();
                    w.indices.extend([t / (m * m), (t / m) % m, t % m]);
                }
                return rep;
            }
        }
        CheckReport::pass()
    }

    /// `(ε ⊗ I)Δ = (I ⊗ ε)Δ = I`; witness `(side, k, t)`.
    pub fn check_counit(&self) -> CheckReport {
        let Some(eps) = &self.counit else {
            return CheckReport::pass();
        };
        let m = self.dim;
        for k in 0..m {
            let mut left = vec![self.field.zero(); m];
            let mut right = vec![self.field.zero(); m];
            for i in 0..m {
                for j in 0..m {
                    left[j].add_mul(&eps[i], self.d(k, i, j));
                    right[i].add_mul(&eps[j], self.d(k, i, j));
                }
            }
            let mut e = vec![self.field.zero(); m];
            e[k] = self.field.one();
            if let Some(r) = CheckReport::compare(&[0, k], &left, &e) {
                return r;
            }
            if let Some(r) = CheckReport::compare(&[1, k], &right, &e) {
                return r;
            }
        }
        CheckReport::pass()
    }

    pub fn validate(&self) -> CheckReport {
        let r = self.check_coassociative();
        if !r.passed {
            return r;
        }
        self.check_counit()
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// The dual coalgebra: `d_k^{ij} = c_{ij}^k`, counit given by the unit.
pub fn dual_coalgebra(a: &StructAlgebra) -> StructCoalgebra {
    StructCoalgebra::from_fn(a.dim(), a.field(), a.unit().map(<[Scalar]>::to_vec), |k, i, j| {
        a.c(i, j, k).clone()
    })
    .expect("well-formed")
}

/// The dual algebra: `c_{ij}^k = d_k^{ij}`, unit given by the counit.
pub fn dual_algebra(c: &StructCoalgebra) -> StructAlgebra {
    StructAlgebra::from_fn(c.dim(), c.field(), c.counit().map(<[Scalar]>::to_vec), |i, j, k| {
        c.d(k, i, j).clone()
    })
    .expect("well-formed")
}

/// A bilinear form `σ(b_a ⊗ b_b) = sigma[(a, b)]` on a coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsMapForm {
    pub sigma: DenseMatrix,
}

impl FsMapForm {
    /// Verifies the FS-map identity before accepting `sigma`.
    pub fn new(c: &StructCoalgebra, sigma: DenseMatrix) -> Result<Self> {
        if sigma.rows() != c.dim() || sigma.cols() != c.dim() {
            return Err(Error::Dimension(format!("form must be {0}×{0}", c.dim())));
        }
        let rep = check_fsmap(c, &sigma);
        if !rep.passed {
            return Err(Error::property("FS-map identity", rep));
        }
        Ok(FsMapForm { sigma })
    }
}

/// `Σ σ(c ⊗ d₍₁₎)d₍₂₎ = Σ σ(c₍₂₎ ⊗ d)c₍₁₎` for `c = b_a`, `d = b_b`, at output `b_t`.
fn fsmap_row(c: &StructCoalgebra, a: usize, b: usize, t: usize, mut put: impl FnMut(usize, usize, &Scalar, bool)) {
    let m = c.dim();
    for i in 0..m {
        let w = c.d(b, i, t);
        if !w.is_zero() {
            put(a, i, w, true);
        }
        let w = c.d(a, t, i);
        if !w.is_zero() {
            put(i, b, w, false);
        }
    }
}

pub fn check_fsmap(c: &StructCoalgebra, sigma: &DenseMatrix) -> CheckReport {
    let m = c.dim();
    let f = c.field();
    for a in 0..m {
        for b in 0..m {
            for t in 0..m {
                let (mut lhs, mut rhs) = (f.zero(), f.zero());
                fsmap_row(c, a, b, t, |x, y, w, left| {
                    if left {
                        lhs.add_mul(w, &sigma[(x, y)]);
                    } else {
                        rhs.add_mul(w, &sigma[(x, y)]);
                    }
                });
                if lhs != rhs {
                    return CheckReport::fail(vec![a, b, t], lhs, rhs);
                }
            }
        }
    }
    CheckReport::pass()
}

/// Rows `(a, b, t)` of the FS-map identity in the unknowns `σ(b_x ⊗ b_y)` at `x·m + y`.
fn fsmap_system(c: &StructCoalgebra) -> DenseMatrix {
    let m = c.dim();
    let mut sys = DenseMatrix::zeros(c.field(), m * m * m, m * m);
    for a in 0..m {
        for b in 0..m {
            for t in 0..m {
                let row = (a * m + b) * m + t;
                fsmap_row(c, a, b, t, |x, y, w, left| {
                    if left {
                        sys[(row, x * m + y)] += w;
                    } else {
                        sys[(row, x * m + y)] -= w;
                    }
                });
            }
        }
    }
    sys
}

/// Basis of the FS-maps on `c`, in nullspace order.
pub fn fsmap_space(c: &StructCoalgebra) -> Vec<FsMapForm> {
    let m = c.dim();
    let f = c.field();
    fsmap_system(c)
        .nullspace_basis()
        .into_iter()
        .map(|v| FsMapForm {
            sigma: DenseMatrix::from_vec(f, m, m, v),
        })
        .collect()
}

/// An FS-map with `Σ σ(c₍₁₎ ⊗ c₍₂₎) = ε(c)`, or `None` when `c` is not coseparable.
pub fn coseparability_form(c: &StructCoalgebra) -> Result<Option<FsMapForm>> {
    let eps = c.require_counit()?.to_vec();
    let m = c.dim();
    let f = c.field();
    let fs = fsmap_system(c);
    let rows = fs.rows();
    let mut sys = DenseMatrix::zeros(f, rows + m, m * m);
    for r in 0..rows {
        for x in 0..m * m {
            sys[(r, x)] = fs[(r, x)].clone();
        }
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                sys[(rows + k, i * m + j)] = c.d(k, i, j).clone();
            }
        }
    }
    let mut rhs = vec![f.zero(); rows];
    rhs.extend(eps);
    let Some(sol) = sys.solve_affine(&rhs) else {
        return Ok(None);
    };
    let sigma = DenseMatrix::from_vec(f, m, m, sol.particular);
    if !coseparability_check(c, &sigma)?.passed {
        return Err(Error::Internal("coseparability solution does not verify".into()));
    }
    FsMapForm::new(c, sigma).map(Some)
}

/// `Σ σ(c₍₁₎ ⊗ c₍₂₎) = ε(c)` on every basis element; witness `(k)`.
pub fn coseparability_check(c: &StructCoalgebra, sigma: &DenseMatrix) -> Result<CheckReport> {
    let eps = c.require_counit()?;
    let m = c.dim();
    for k in 0..m {
        let mut s = c.field().zero();
        for i in 0..m {
            for j in 0..m {
                s.add_mul(c.d(k, i, j), &sigma[(i, j)]);
            }
        }
        if s != eps[k] {
            return Ok(CheckReport::fail(vec![k], s, eps[k].clone()));
        }
    }
    Ok(CheckReport::pass())
}

/// `σ(f ⊗ c) = σ(c ⊗ f) = ε(c)`; witness `(side, k)`.
pub fn fmap_check(c: &StructCoalgebra, sigma: &DenseMatrix, f: &[Scalar]) -> Result<CheckReport> {
    let eps = c.require_counit()?;
    let m = c.dim();
    for k in 0..m {
        let (mut left, mut right) = (c.field().zero(), c.field().zero());
        for t in 0..m {
            left.add_mul(&f[t], &sigma[(t, k)]);
            right.add_mul(&sigma[(k, t)], &f[t]);
        }
        if left != eps[k] {
            return Ok(CheckReport::fail(vec![0, k], left, eps[k].clone()));
        }
        if right != eps[k] {
            return Ok(CheckReport::fail(vec![1, k], right, eps[k].clone()));
        }
    }
    Ok(CheckReport::pass())
}

/// `R_σ(m ⊗ n) = Σ σ(m₍₁₎ ⊗ n₍₁₎) m₍₀₎ ⊗ n₍₀₎` for a right `C`-comodule.
pub fn r_from_fsmap(c: &StructCoalgebra, m: &ModuleRep, sigma: &FsMapForm) -> Result<FsTensor> {
    let co = m
        .coaction()
        .ok_or_else(|| Error::InvalidInput("module has no coaction".into()))?;
    if m.algebra_dim() != c.dim() {
        return Err(Error::Dimension("coaction values do not live in the coalgebra".into()));
    }
    let d = m.dim();
    let cd = c.dim();
    let at = |t: usize, s: usize, k: usize| &co[(t * d + s) * cd + k];
    let f = c.field();
    let t = FsTensor::from_fn(d, f, |i, j, u, v| {
        let mut acc = f.zero();
        for k in 0..cd {
            let a = at(u, i, k);
            if a.is_zero() {
                continue;
            }
            for l in 0..cd {
                let b = at(v, j, l);
                if b.is_zero() {
                    continue;
                }
                acc.add_mul(&(a * b), &sigma.sigma[(k, l)]);
            }
        }
        acc
    });
    let rep = check_fs(&t);
    if !rep.passed {
        return Err(Error::property("check_fs", rep));
    }
    Ok(t)
}

/// The FS-map on `A*` paired with a central `e`: `σ(b^i ⊗ b^j) = e_ij` on the dual basis.
pub fn fsmap_from_central(a: &StructAlgebra, e: &CentralElement) -> Result<FsMapForm> {
    FsMapForm::new(&dual_coalgebra(a), e.coeffs().clone())
}

/// Inverse of [`fsmap_from_central`].
pub fn central_from_fsmap(a: &StructAlgebra, sigma: &FsMapForm) -> Result<CentralElement> {
    CentralElement::new(a, sigma.sigma.clone())
}

/// `c · d = Σ σ(d₍₂₎ ⊗ c) d₍₁₎`, verified associative.
pub fn mult_from_fsmap(c: &StructCoalgebra, sigma: &FsMapForm) -> Result<StructAlgebra> {
    c.require_counit()?;
    let rep = check_fsmap(c, &sigma.sigma);
    if !rep.passed {
        return Err(Error::property("FS-map identity", rep));
    }
    let m = c.dim();
    let f = c.field();
    let a = StructAlgebra::from_fn(m, f, None, |x, y, i| {
        let mut acc = f.zero();
        for j in 0..m {
            acc.add_mul(c.d(y, i, j), &sigma.sigma[(j, x)]);
        }
        acc
    })?;
    let rep = a.check_associative();
    if !rep.passed {
        return Err(Error::property("associativity", rep));
    }
    Ok(a)
}

/// `σ(c_ij ⊗ c_kl) = δ_kj δ_il` on the comatrix coalgebra `Mⁿ(k)`.
pub fn comatrix_trace_form(n: usize, field: Field) -> DenseMatrix {
    let m = n * n;
    let mut s = DenseMatrix::zeros(field, m, m);
    for i in 0..n {
        for j in 0..n {
            s[(i * n + j, j * n + i)] = field.one();
        }
    }
    s
}
