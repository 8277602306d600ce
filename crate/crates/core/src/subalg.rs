//! The algebra `A(n, R) = {a ∈ M_n(k) | a·R = R·a}` of a verified FS tensor and
//! its dual coalgebra, built as a quotient of the comatrix coalgebra.

use crate::algebra::{frobenius_counit, frobenius_pair, separability_idempotent, StructAlgebra};
use crate::coalgebra::StructCoalgebra;
use crate::error::{Error, Result};
use crate::matrix::{coordinates_in, DenseMatrix, RowEchelon};
use crate::scalar::{Field, Scalar};
use crate::tensor::FsTensor;
use crate::verify::{check_f_trace, check_fs, check_s, CheckReport};

/// `A(n, R)` in an explicit basis of `n × n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraResult {
    n: usize,
    basis: Vec<DenseMatrix>,
    algebra: StructAlgebra,
    /// `R = Σ r_kl B_k ⊗ B_l`.
    r_in_basis: DenseMatrix,
}

impl SubalgebraResult {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn basis(&self) -> &[DenseMatrix] {
        &self.basis
    }

    /// Structure constants in [`Self::basis`].
    pub fn algebra(&self) -> &StructAlgebra {
        &self.algebra
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        self.algebra.unit().expect("A(R) is unital")
    }

    pub fn r_in_basis(&self) -> &DenseMatrix {
        &self.r_in_basis
    }

    /// Coordinates of an `n × n` matrix in the basis, if it lies in `A(R)`.
    pub fn coordinates(&self, a: &DenseMatrix) -> Option<Vec<Scalar>> {
        let flat: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        coordinates_in(self.field(), &flat, a.entries())
    }

    /// `Σ_k c_k B_k`.
    pub fn element(&self, coords: &[Scalar]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.field(), self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c));
            }
        }
        out
    }

    /// `Σ r_kl B_k ⊗ B_l` as an FS tensor, `x^{ij}_{uv} = Σ r_kl B_k[i][u] B_l[j][v]`.
    pub fn reconstruct(&self) -> FsTensor {
        let f = self.field();
        let d = self.dim();
        FsTensor::from_fn(self.n, f, |i, j, u, v| {
            let mut acc = f.zero();
            for k in 0..d {
                let bk = &self.basis[k][(i, u)];
                if bk.is_zero() {
                    continue;
                }
                for l in 0..d {
                    let w = bk * &self.basis[l][(j, v)];
                    acc.add_mul(&self.r_in_basis[(k, l)], &w);
                }
            }
            acc
        })
    }

    /// Re-expresses everything in the basis `B'_k = Σ_j t[k][j] B_j`.
    pub fn rebase(&self, t: &DenseMatrix) -> Result<SubalgebraResult> {
        let d = self.dim();
        if t.rows() != d || t.cols() != d {
            return Err(Error::Dimension(format!("change of basis must be {d}×{d}")));
        }
        let tinv = t.invert().ok_or(Error::Singular)?;
        let basis: Vec<DenseMatrix> = (0..d).map(|k| self.element(t.row(k))).collect();
        // Old coordinates c satisfy c = tᵀ c', so c' = (tᵀ)⁻¹ c.
        let back = tinv.transpose();
        let r = back.mul(&self.r_in_basis).mul(&tinv);
        assemble(self.n, self.field(), basis, r)
    }
}

/// Equation rows `(i, j, u, v)` of `a·R = R·a` in the unknowns `a^i_j` at `i·n + j`:
/// `Σ_α a^i_α x^{αj}_{uv} − Σ_α x^{ij}_{uα} a^α_v`.
fn defining_rows(r: &FsTensor) -> impl Iterator<Item = Vec<Scalar>> + '_ {
    let n = r.n();
    let f = r.field();
    (0..n * n * n * n).map(move |t| {
        let (i, j, u, v) = (t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n);
        let mut row = vec![f.zero(); n * n];
        for a in 0..n {
            row[i * n + a] += r.get(a, j, u, v);
            row[a * n + v] -= r.get(i, j, u, a);
        }
        row
    })
}

fn defining_space(r: &FsTensor) -> RowEchelon {
    let n = r.n();
    let mut ech = RowEchelon::new(r.field(), n * n);
    for row in defining_rows(r) {
        if row.iter().any(|x| !x.is_zero()) {
            ech.insert(&row);
        }
        if ech.rank() == n * n {
            break;
        }
    }
    ech
}

/// Builds `A(n, R)` from the kernel of its defining equations.
///
/// The basis is the free-variable kernel basis, so the coordinates of any
/// element are its entries at the free positions.
pub fn build_subalgebra(r: &FsTensor) -> Result<SubalgebraResult> {
    let rep = check_fs(r);
    if !rep.passed {
        return Err(Error::property("check_fs", rep));
    }
    let n = r.n();
    let f = r.field();
    let ech = defining_space(r);
    let kernel = ech.nullspace_basis();
    let mut is_pivot = vec![false; n * n];
    for &p in ech.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n * n).filter(|&c| !is_pivot[c]).collect();
    let d = kernel.len();
    let basis: Vec<DenseMatrix> = kernel.into_iter().map(|v| DenseMatrix::from_vec(f, n, n, v)).collect();
    let mut rb = DenseMatrix::zeros(f, d, d);
    for k in 0..d {
        for l in 0..d {
            let (pk, qk) = (free[k] / n, free[k] % n);
            let (pl, ql) = (free[l] / n, free[l] % n);
            rb[(k, l)] = r.get(pk, pl, qk, ql).clone();
        }
    }
    let res = assemble(n, f, basis, rb)?;
    if &res.reconstruct() != r {
        return Err(Error::Internal("R is not recovered from A(R) ⊗ A(R)".into()));
    }
    Ok(res)
}

/// Computes structure constants and the unit in `basis`, verifying closure.
fn assemble(n: usize, f: Field, basis: Vec<DenseMatrix>, r_in_basis: DenseMatrix) -> Result<SubalgebraResult> {
    let d = basis.len();
    let flat: Vec<Vec<Scalar>> = basis.iter().map(|b| b.entries().to_vec()).collect();
    let coords = |m: &DenseMatrix| coordinates_in(f, &flat, m.entries());
    let mut mul = Vec::with_capacity(d * d * d);
    for a in &basis {
        for b in &basis {
            let c = coords(&a.mul(b)).ok_or_else(|| Error::Internal("A(R) is not closed under products".into()))?;
            mul.extend(c);
        }
    }
    let unit =
        coords(&DenseMatrix::identity(f, n)).ok_or_else(|| Error::Internal("the identity is not in A(R)".into()))?;
    let algebra = StructAlgebra::new(d, f, mul, Some(unit))?;
    Ok(SubalgebraResult {
        n,
        basis,
        algebra,
        r_in_basis,
    })
}

/// Three-valued answer for searches that may be cut off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificates {
    /// `R` is central in `A(R) ⊗ A(R)`.
    pub central: bool,
    /// `Σ R¹R² = 1`, so `R` is a separability idempotent of `A(R)`.
    pub separable: bool,
    /// Some `ε` makes `(R, ε)` a Frobenius pair.
    pub frobenius: bool,
    pub counit: Option<Vec<Scalar>>,
    /// The S- and trace-F normalizations of the tensor itself.
    pub s_normalized: bool,
    pub f_trace_normalized: bool,
    /// Whether `A(R)` is separable at all, with any idempotent.
    pub algebra_separable: bool,
    /// Whether `A(R)` admits any Frobenius pair (exhaustive over `F_p`, capped).
    pub algebra_frobenius: Verdict,
}

pub fn certify_subalgebra(res: &SubalgebraResult, r: &FsTensor) -> Result<Certificates> {
    if res.n() != r.n() || res.field() != r.field() {
        return Err(Error::InvalidInput("subalgebra was not built from this tensor".into()));
    }
    let a = res.algebra();
    let rb = res.r_in_basis();
    let central = a.check_central(rb).passed;
    let separable = central && a.multiply_out(rb) == res.unit_coords();
    let counit = if central { frobenius_counit(a, rb)? } else { None };
    let algebra_frobenius = match frobenius_pair(a) {
        Ok(p) => p.is_some().into(),
        Err(Error::Inconclusive { .. }) => Verdict::Inconclusive,
        Err(e) => return Err(e),
    };
    Ok(Certificates {
        central,
        separable,
        frobenius: counit.is_some(),
        counit,
        s_normalized: check_s(r).passed,
        f_trace_normalized: check_f_trace(r).passed,
        algebra_separable: separability_idempotent(a)?.is_some(),
        algebra_frobenius,
    })
}

/// The dual coalgebra `C(R) = Mⁿ(k)/I` with `I` spanned by the coideal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCoalgebra {
    n: usize,
    /// A basis of `I` in comatrix coordinates `c_ij ↦ i·n + j` (reduced echelon form).
    generators: Vec<Vec<Scalar>>,
    /// Comatrix indices of the coset representatives.
    reps: Vec<usize>,
    /// Quotient coordinates of every comatrix basis vector `c_t`.
    projection: Vec<Vec<Scalar>>,
    coalgebra: StructCoalgebra,
}

impl QuotientCoalgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    /// Representatives as `(i, j)` for `c_ij`.
    pub fn representatives(&self) -> Vec<(usize, usize)> {
        self.reps.iter().map(|&t| (t / self.n, t % self.n)).collect()
    }

    pub fn coalgebra(&self) -> &StructCoalgebra {
        &self.coalgebra
    }

    /// Quotient coordinates of the class of `c_ij`.
    pub fn class_of(&self, i: usize, j: usize) -> &[Scalar] {
        &self.projection[i * self.n + j]
    }

    /// The coalgebra expressed in the basis `y_a = Σ_s elems[a][s] x_s`.
    pub fn in_basis(&self, elems: &[Vec<Scalar>]) -> Result<StructCoalgebra> {
        rebase_coalgebra(&self.coalgebra, elems)
    }
}

/// `c` in the basis `y_a = Σ_s elems[a][s] x_s`.
pub fn rebase_coalgebra(c: &StructCoalgebra, elems: &[Vec<Scalar>]) -> Result<StructCoalgebra> {
    let d = c.dim();
    let f = c.field();
    if elems.len() != d || elems.iter().any(|e| e.len() != d) {
        return Err(Error::Dimension(format!("need {d} vectors of length {d}")));
    }
    let t = DenseMatrix::from_rows(f, elems.to_vec());
    let tinv = t.invert().ok_or(Error::Singular)?;
    // Old coordinates c satisfy c = tᵀ c', so c' = (tᵀ)⁻¹ c.
    let back = tinv.transpose();
    let mut comul = Vec::with_capacity(d * d * d);
    for e in elems {
        let delta = c.coproduct(e);
        let m = DenseMatrix::from_vec(f, d, d, delta);
        comul.extend(back.mul(&m).mul(&tinv).into_entries());
    }
    let counit = c
        .counit()
        .map(|eps| elems.iter().map(|e| crate::algebra::evaluate(eps, e)).collect());
    StructCoalgebra::new(d, f, comul, counit)
}

/// `C(R)`, with representatives the earliest comatrix basis vectors completing `I`.
pub fn quotient_coalgebra(r: &FsTensor, res: &SubalgebraResult) -> Result<QuotientCoalgebra> {
    let n = r.n();
    let f = r.field();
    if res.n() != n || res.field() != f {
        return Err(Error::InvalidInput("subalgebra was not built from this tensor".into()));
    }
    let nn = n * n;
    let ideal = defining_space(r);
    let generators = ideal.rows().to_vec();
    let mut span = ideal.clone();
    let mut reps = Vec::new();
    for t in 0..nn {
        let mut e = vec![f.zero(); nn];
        e[t] = f.one();
        if span.insert(&e) {
            reps.push(t);
        }
    }
    let d = reps.len();
    if d != res.dim() {
        return Err(Error::Internal(format!(
            "quotient has dimension {d}, A(R) has {}",
            res.dim()
        )));
    }
    // Pairing with A(R): c ↦ (⟨c, B_k⟩)_k. Coordinates λ of c solve wᵀλ = ⟨c, B⟩.
    let basis = res.basis();
    let mut w = DenseMatrix::zeros(f, d, d);
    for (s, &t) in reps.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            w[(s, k)] = b.entries()[t].clone();
        }
    }
    let winv_t = w
        .transpose()
        .invert()
        .ok_or_else(|| Error::Internal("representatives do not complement the coideal".into()))?;
    let projection: Vec<Vec<Scalar>> = (0..nn)
        .map(|t| {
            let pairing: Vec<Scalar> = basis.iter().map(|b| b.entries()[t].clone()).collect();
            winv_t.mul_vec(&pairing)
        })
        .collect();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); d];
        for (t, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&projection[t]) {
                o.add_mul(c, p);
            }
        }
        out
    };
    let comatrix = StructCoalgebra::comatrix(n, f);
    for g in &generators {
        let eps_g = (0..n).fold(f.zero(), |acc, i| acc + &g[i * n + i]);
        let delta = comatrix.coproduct(g);
        let mut img = vec![f.zero(); d * d];
        for (x, row) in delta.chunks(nn).enumerate() {
            let py = project(row);
            for (a, pa) in projection[x].iter().enumerate() {
                if pa.is_zero() {
                    continue;
                }
                for (b, pb) in py.iter().enumerate() {
                    img[a * d + b].add_mul(pa, pb);
                }
            }
        }
        if !eps_g.is_zero() || img.iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal("the generators do not span a coideal".into()));
        }
    }
    let mut comul = Vec::with_capacity(d * d * d);
    for &t in &reps {
        let (i, j) = (t / n, t % n);
        let mut out = vec![f.zero(); d * d];
        for k in 0..n {
            let (x, y) = (&projection[i * n + k], &projection[k * n + j]);
            for (a, pa) in x.iter().enumerate() {
                if pa.is_zero() {
                    continue;
                }
                for (b, pb) in y.iter().enumerate() {
                    out[a * d + b].add_mul(pa, pb);
                }
            }
        }
        comul.extend(out);
    }
    let counit = reps.iter().map(|&t| f.int((t / n == t % n) as i64)).collect();
    let coalgebra = StructCoalgebra::new(d, f, comul, Some(counit))?;
    let rep: CheckReport = coalgebra.validate();
    if !rep.passed {
        return Err(Error::property("quotient coalgebra axioms", rep));
    }
    Ok(QuotientCoalgebra {
        n,
        generators,
        reps,
        projection,
        coalgebra,
    })
}
