//! Finite-dimensional algebras by structure constants, central elements of
//! `A ⊗ A`, separability idempotents and Frobenius pairs.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{Field, Scalar};
use crate::verify::CheckReport;

pub const FROBENIUS_SEARCH_CAP: u128 = 1_000_000;

/// `b_i · b_j = Σ_k c_{ij}^k b_k`, stored flat at `(i·m + j)·m + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    dim: usize,
    field: Field,
    mul: Vec<Scalar>,
    unit: Option<Vec<Scalar>>,
}

impl StructAlgebra {
    pub fn new(dim: usize, field: Field, mul: Vec<Scalar>, unit: Option<Vec<Scalar>>) -> Result<Self> {
        if mul.len() != dim.pow(3) {
            return Err(Error::Dimension(format!(
                "multiplication table needs {} entries, found {}",
                dim.pow(3),
                mul.len()
            )));
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::Dimension(format!(
                    "unit needs {dim} coordinates, found {}",
                    u.len()
                )));
            }
        }
        let all = mul.iter().chain(unit.iter().flatten());
        if let Some(bad) = all.into_iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field.to_string(),
                found: bad.field().to_string(),
            });
        }
        Ok(StructAlgebra { dim, field, mul, unit })
    }

    pub fn from_fn(
        dim: usize,
        field: Field,
        unit: Option<Vec<Scalar>>,
        mut c: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Result<Self> {
        let mut mul = Vec::with_capacity(dim.pow(3));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    mul.push(c(i, j, k));
                }
            }
        }
        Self::new(dim, field, mul, unit)
    }

    /// `M_n(k)` on the matrix units `E_ab`, flattened as `a·n + b`.
    pub fn matrix(n: usize, field: Field) -> Self {
        let m = n * n;
        let mut unit = vec![field.zero(); m];
        for a in 0..n {
            unit[a * n + a] = field.one();
        }
        Self::from_fn(m, field, Some(unit), |x, y, z| {
            let (a, b) = (x / n, x % n);
            let (c, d) = (y / n, y % n);
            field.int((b == c && z == a * n + d) as i64)
        })
        .expect("well-formed")
    }

    /// `k × … × k` with orthogonal idempotents `b_i`.
    pub fn split(count: usize, field: Field) -> Self {
        Self::from_fn(count, field, Some(vec![field.one(); count]), |i, j, k| {
            field.int((i == j && j == k) as i64)
        })
        .expect("well-formed")
    }

    /// `k[x]/(x^d)` on the monomials `1, x, …, x^{d-1}`.
    pub fn truncated_polynomial(d: usize, field: Field) -> Self {
        let mut unit = vec![field.zero(); d];
        unit[0] = field.one();
        Self::from_fn(d, field, Some(unit), |i, j, k| field.int((i + j == k) as i64)).expect("well-formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mul_table(&self) -> &[Scalar] {
        &self.mul
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn require_unit(&self) -> Result<&[Scalar]> {
        self.unit.as_deref().ok_or(Error::NoUnit)
    }

    /// `c_{ij}^k`.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mul[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `b_i · b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let m = self.dim;
        &self.mul[(i * m + j) * m..(i * m + j + 1) * m]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim;
        let mut out = vec![self.field.zero(); m];
        for i in 0..m {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    out[k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// The matrix of `y ↦ x·y`; column `j` holds `x·b_j`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> DenseMatrix {
        let m = self.dim;
        let mut l = DenseMatrix::zeros(self.field, m, m);
        for j in 0..m {
            let col = self.product(x, &self.basis_vector(j));
            for (k, s) in col.into_iter().enumerate() {
                l[(k, j)] = s;
            }
        }
        l
    }

    /// Associativity on all basis triples; witness `(i, j, k, t)`.
    pub fn check_associative(&self) -> CheckReport {
        let m = self.dim;
        for i in 0..m {
            for j in 0..m {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..m {
                    let lhs = self.product(&ij, &self.basis_vector(k));
                    let jk = self.basis_product(j, k).to_vec();
                    let rhs = self.product(&self.basis_vector(i), &jk);
                    if let Some(rep) = CheckReport::compare(&[i, j, k], &lhs, &rhs) {
                        return rep;
                    }
                }
            }
        }
        CheckReport::pass()
    }

    /// Both unit laws on every basis element; witness `(side, i, t)` with side 0 for `1·b_i`.
    pub fn check_unit(&self) -> CheckReport {
        let Some(u) = &self.unit else {
            return CheckReport::pass();
        };
        for i in 0..self.dim {
            let b = self.basis_vector(i);
            if let Some(rep) = CheckReport::compare(&[0, i], &self.product(u, &b), &b) {
                return rep;
            }
            if let Some(rep) = CheckReport::compare(&[1, i], &self.product(&b, u), &b) {
                return rep;
            }
        }
        CheckReport::pass()
    }

    pub fn validate(&self) -> CheckReport {
        let r = self.check_associative();
        if !r.passed {
            return r;
        }
        self.check_unit()
    }

    /// `Σ e_kl b_k b_l`.
    pub fn multiply_out(&self, e: &DenseMatrix) -> Vec<Scalar> {
        let m = self.dim;
        let mut out = vec![self.field.zero(); m];
        for k in 0..m {
            for l in 0..m {
                let c = &e[(k, l)];
                if c.is_zero() {
                    continue;
                }
                for (t, s) in self.basis_product(k, l).iter().enumerate() {
                    out[t].add_mul(c, s);
                }
            }
        }
        out
    }

    /// `x · e` with `x` acting on the first tensor leg.
    pub fn left_act(&self, x: &[Scalar], e: &DenseMatrix) -> DenseMatrix {
        let m = self.dim;
        let mut out = DenseMatrix::zeros(self.field, m, m);
        for k in 0..m {
            let xk = self.product(x, &self.basis_vector(k));
            for a in 0..m {
                if xk[a].is_zero() {
                    continue;
                }
                for l in 0..m {
                    out[(a, l)].add_mul(&xk[a], &e[(k, l)]);
                }
            }
        }
        out
    }

    /// `e · x` with `x` acting on the second tensor leg.
    pub fn right_act(&self, e: &DenseMatrix, x: &[Scalar]) -> DenseMatrix {
        let m = self.dim;
        let mut out = DenseMatrix::zeros(self.field, m, m);
        for l in 0..m {
            let lx = self.product(&self.basis_vector(l), x);
            for b in 0..m {
                if lx[b].is_zero() {
                    continue;
                }
                for k in 0..m {
                    out[(k, b)].add_mul(&e[(k, l)], &lx[b]);
                }
            }
        }
        out
    }

    /// `b_i · e = e · b_i` for all `i`; witness `(i, a, b)`.
    pub fn check_central(&self, e: &DenseMatrix) -> CheckReport {
        for i in 0..self.dim {
            let bi = self.basis_vector(i);
            let l = self.left_act(&bi, e);
            let r = self.right_act(e, &bi);
            if let Some(rep) = CheckReport::compare(&[i], l.entries(), r.entries()) {
                let mut rep = rep;
                if let Some(w) = rep.witness.as_mut() {
                    let t = w.indices.pop().unwrap();
                    w.indices.extend([t / self.dim, t % self.dim]);
                }
                return rep;
            }
        }
        CheckReport::pass()
    }

    fn check_shape(&self, e: &DenseMatrix) -> Result<()> {
        if e.rows() != self.dim || e.cols() != self.dim {
            return Err(Error::Dimension(format!("element of A ⊗ A must be {0}×{0}", self.dim)));
        }
        if e.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field.to_string(),
                found: e.field().to_string(),
            });
        }
        Ok(())
    }
}

/// `Σ e_kl b_k ⊗ b_l ∈ A ⊗ A` commuting with every `a ∈ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    e: DenseMatrix,
}

impl CentralElement {
    /// Verifies centrality before accepting `e`.
    pub fn new(a: &StructAlgebra, e: DenseMatrix) -> Result<Self> {
        a.check_shape(&e)?;
        let rep = a.check_central(&e);
        if !rep.passed {
            return Err(Error::property("centrality", rep));
        }
        Ok(CentralElement { e })
    }

    pub fn coeffs(&self) -> &DenseMatrix {
        &self.e
    }

    pub fn into_coeffs(self) -> DenseMatrix {
        self.e
    }
}

/// A central `e` with `ε` such that `Σ ε(e¹)e² = Σ e¹ε(e²) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusPair {
    pub e: CentralElement,
    pub eps: Vec<Scalar>,
}

/// Basis of the central elements of `A ⊗ A`, as `m × m` coefficient arrays.
pub fn central_space(a: &StructAlgebra) -> Result<Vec<DenseMatrix>> {
    a.require_unit()?;
    let sys = central_system(a);
    Ok(sys
        .nullspace_basis()
        .into_iter()
        .map(|v| DenseMatrix::from_vec(a.field, a.dim, a.dim, v))
        .collect())
}

/// Rows `(i, a, b)`: coefficient of `b_a ⊗ b_b` in `b_i·e − e·b_i`.
fn central_system(a: &StructAlgebra) -> DenseMatrix {
    let m = a.dim;
    let mut sys = DenseMatrix::zeros(a.field, m * m * m, m * m);
    for i in 0..m {
        for x in 0..m {
            for y in 0..m {
                let row = (i * m + x) * m + y;
                for k in 0..m {
                    let c = a.c(i, k, x);
                    if !c.is_zero() {
                        sys[(row, k * m + y)] += c;
                    }
                    let d = a.c(k, i, y);
                    if !d.is_zero() {
                        sys[(row, x * m + k)] -= d;
                    }
                }
            }
        }
    }
    sys
}

/// A central `e` with `Σ e¹e² = 1`, or `None` when `A` is not separable.
pub fn separability_idempotent(a: &StructAlgebra) -> Result<Option<CentralElement>> {
    let unit = a.require_unit()?.to_vec();
    let m = a.dim;
    let central = central_system(a);
    let rows = central.rows();
    let mut sys = DenseMatrix::zeros(a.field, rows + m, m * m);
    for r in 0..rows {
        for c in 0..m * m {
            sys[(r, c)] = central[(r, c)].clone();
        }
    }
    for k in 0..m {
        for l in 0..m {
            for (t, s) in a.basis_product(k, l).iter().enumerate() {
                sys[(rows + t, k * m + l)] = s.clone();
            }
        }
    }
    let mut rhs = vec![a.field.zero(); rows];
    rhs.extend(unit.iter().cloned());
    let Some(sol) = sys.solve_affine(&rhs) else {
        return Ok(None);
    };
    let e = DenseMatrix::from_vec(a.field, m, m, sol.particular);
    let e = CentralElement::new(a, e)?;
    if a.multiply_out(e.coeffs()) != unit {
        return Err(Error::Internal("separability idempotent does not multiply to 1".into()));
    }
    Ok(Some(e))
}

/// The normalization `Σ ε(e¹)e² = Σ e¹ε(e²) = 1`; witness `(side, t)`.
pub fn check_frobenius_normalization(a: &StructAlgebra, e: &DenseMatrix, eps: &[Scalar]) -> Result<CheckReport> {
    let unit = a.require_unit()?;
    let m = a.dim;
    let mut left = vec![a.field.zero(); m];
    let mut right = vec![a.field.zero(); m];
    for k in 0..m {
        for l in 0..m {
            left[l].add_mul(&e[(k, l)], &eps[k]);
            right[k].add_mul(&e[(k, l)], &eps[l]);
        }
    }
    if let Some(r) = CheckReport::compare(&[0], &left, unit) {
        return Ok(r);
    }
    Ok(CheckReport::compare(&[1], &right, unit).unwrap_or_else(CheckReport::pass))
}

/// `ε(x)` for a covector `ε` in the dual of the basis.
pub fn evaluate(eps: &[Scalar], x: &[Scalar]) -> Scalar {
    let mut s = eps[0].field().zero();
    for (a, b) in eps.iter().zip(x) {
        s.add_mul(a, b);
    }
    s
}

/// The Frobenius pair built from the form `ε`, if its Gram matrix is invertible
/// and the result verifies.
pub fn pair_from_form(a: &StructAlgebra, eps: &[Scalar]) -> Option<FrobeniusPair> {
    let m = a.dim;
    let mut gram = DenseMatrix::zeros(a.field, m, m);
    for i in 0..m {
        for j in 0..m {
            gram[(i, j)] = evaluate(eps, a.basis_product(i, j));
        }
    }
    let e = gram.invert()?;
    let e = CentralElement::new(a, e).ok()?;
    let ok = check_frobenius_normalization(a, e.coeffs(), eps).ok()?.passed;
    ok.then(|| FrobeniusPair { e, eps: eps.to_vec() })
}

/// Searches `ε ∈ A*` in counting order (`ε(b_0)` varies fastest) for a form whose
/// Gram matrix yields a verified Frobenius pair.
pub fn frobenius_pair(a: &StructAlgebra) -> Result<Option<FrobeniusPair>> {
    frobenius_pair_with_cap(a, FROBENIUS_SEARCH_CAP)
}

pub fn frobenius_pair_with_cap(a: &StructAlgebra, cap: u128) -> Result<Option<FrobeniusPair>> {
    a.require_unit()?;
    let m = a.dim;
    let Some(p) = a.field.modulus() else {
        return Err(Error::Inconclusive { size: u128::MAX, cap });
    };
    let size = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::Inconclusive { size, cap });
    }
    let field = a.field;
    let decode = |mut t: u64| -> Vec<Scalar> {
        (0..m)
            .map(|_| {
                let d = t % p as u64;
                t /= p as u64;
                field.int(d as i64)
            })
            .collect()
    };
    Ok((0..size as u64)
        .into_par_iter()
        .find_map_first(|t| pair_from_form(a, &decode(t))))
}

/// Some `ε` making `(e, ε)` a Frobenius pair, found by solving the linear system.
pub fn frobenius_counit(a: &StructAlgebra, e: &DenseMatrix) -> Result<Option<Vec<Scalar>>> {
    let unit = a.require_unit()?.to_vec();
    a.check_shape(e)?;
    let m = a.dim;
    let mut sys = DenseMatrix::zeros(a.field, 2 * m, m);
    for k in 0..m {
        for l in 0..m {
            sys[(l, k)] += &e[(k, l)];
            sys[(m + k, l)] += &e[(k, l)];
        }
    }
    let mut rhs = unit.clone();
    rhs.extend(unit);
    Ok(sys.solve_affine(&rhs).map(|s| s.particular))
}

/// `Σ e¹ ε(e² b_i) = b_i` for every basis element; witness `(i, t)`.
pub fn check_dual_basis(a: &StructAlgebra, pair: &FrobeniusPair) -> CheckReport {
    let m = a.dim;
    let e = pair.e.coeffs();
    for i in 0..m {
        let mut acc = vec![a.field.zero(); m];
        for k in 0..m {
            for l in 0..m {
                if e[(k, l)].is_zero() {
                    continue;
                }
                let w = &e[(k, l)] * &evaluate(&pair.eps, a.basis_product(l, i));
                acc[k] += &w;
            }
        }
        if let Some(r) = CheckReport::compare(&[i], &acc, &a.basis_vector(i)) {
            return r;
        }
    }
    CheckReport::pass()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characteristic {
    pub omega: Vec<Scalar>,
    pub invertible: bool,
    /// `ω⁻¹·e`, verified as a separability idempotent.
    pub idempotent: Option<CentralElement>,
}

/// `ω = Σ e¹e²`, its invertibility, and `ω⁻¹·e` when it exists.
pub fn characteristic_element(a: &StructAlgebra, e: &CentralElement) -> Result<Characteristic> {
    let unit = a.require_unit()?.to_vec();
    let omega = a.multiply_out(e.coeffs());
    let Some(linv) = a.left_mul_matrix(&omega).invert() else {
        return Ok(Characteristic {
            omega,
            invertible: false,
            idempotent: None,
        });
    };
    let winv = linv.mul_vec(&unit);
    let idem = a.left_act(&winv, e.coeffs());
    let idem = CentralElement::new(a, idem)?;
    if a.multiply_out(idem.coeffs()) != unit {
        return Err(Error::Internal("ω⁻¹·e does not multiply to 1".into()));
    }
    Ok(Characteristic {
        omega,
        invertible: true,
        idempotent: Some(idem),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2(field: Field) -> StructAlgebra {
        StructAlgebra::from_fn(2, field, Some(vec![field.one(), field.zero()]), |i, j, k| {
            field.int(((i + j) % 2 == k) as i64)
        })
        .unwrap()
    }

    fn m2(field: Field, rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_ints(field, rows)
    }

    #[test]
    fn validation() {
        let f = Field::gf(2);
        assert!(c2(f).validate().passed);
        assert!(StructAlgebra::matrix(2, Field::gf(3)).validate().passed);
        let mut bad = c2(f).mul_table().to_vec();
        bad[0] = f.zero();
        let bad = StructAlgebra::new(2, f, bad, Some(vec![f.one(), f.zero()])).unwrap();
        let rep = bad.validate();
        assert!(!rep.passed);
        assert_eq!(rep.witness.unwrap().indices.len(), 4);
    }

    #[test]
    fn central_spaces() {
        let f = Field::gf(2);
        let sp = central_space(&c2(f)).unwrap();
        assert_eq!(sp.len(), 2);
        for e in &sp {
            assert!(c2(f).check_central(e).passed);
        }
        let a = StructAlgebra::split(2, f);
        let sp = central_space(&a).unwrap();
        assert_eq!(sp, vec![m2(f, &[&[1, 0], &[0, 0]]), m2(f, &[&[0, 0], &[0, 1]])]);
    }

    #[test]
    fn separability() {
        let f3 = Field::gf(3);
        let e = separability_idempotent(&c2(f3)).unwrap().unwrap();
        assert_eq!(e.coeffs(), &m2(f3, &[&[2, 0], &[0, 2]]));
        assert!(separability_idempotent(&c2(Field::gf(2))).unwrap().is_none());
        assert!(separability_idempotent(&StructAlgebra::matrix(2, f3))
            .unwrap()
            .is_some());
    }

    #[test]
    fn frobenius_search() {
        let f2 = Field::gf(2);
        let pair = frobenius_pair(&c2(f2)).unwrap().unwrap();
        assert_eq!(pair.eps, vec![f2.one(), f2.zero()]);
        assert_eq!(pair.e.coeffs(), &m2(f2, &[&[1, 0], &[0, 1]]));

        let f3 = Field::gf(3);
        let dual = StructAlgebra::truncated_polynomial(2, f3);
        let pair = frobenius_pair(&dual).unwrap().unwrap();
        assert!(check_dual_basis(&dual, &pair).passed);
        let e = m2(f3, &[&[0, 1], &[1, 0]]);
        let eps = vec![f3.zero(), f3.one()];
        assert!(dual.check_central(&e).passed);
        assert!(check_frobenius_normalization(&dual, &e, &eps).unwrap().passed);

        let flat = StructAlgebra::from_fn(3, f2, Some(vec![f2.one(), f2.zero(), f2.zero()]), |i, j, k| {
            let v = match (i, j) {
                (0, x) | (x, 0) => x == k,
                _ => false,
            };
            f2.int(v as i64)
        })
        .unwrap();
        assert!(flat.validate().passed);
        assert!(frobenius_pair(&flat).unwrap().is_none());
    }

    #[test]
    fn no_unit_is_rejected() {
        let f = Field::gf(2);
        let a = StructAlgebra::from_fn(2, f, None, |i, j, k| f.int((i == 0 && j == k) as i64)).unwrap();
        assert!(a.check_associative().passed);
        assert!(matches!(frobenius_pair(&a), Err(Error::NoUnit)));
        assert!(matches!(central_space(&a), Err(Error::NoUnit)));
    }

    #[test]
    fn search_cap() {
        let a = StructAlgebra::matrix(3, Field::gf(5));
        assert!(matches!(frobenius_pair(&a), Err(Error::Inconclusive { .. })));
        let q = StructAlgebra::split(2, Field::Rational);
        assert!(matches!(frobenius_pair(&q), Err(Error::Inconclusive { .. })));
    }

    #[test]
    fn characteristic() {
        let f3 = Field::gf(3);
        let a = c2(f3);
        let e = CentralElement::new(&a, m2(f3, &[&[1, 0], &[0, 1]])).unwrap();
        let ch = characteristic_element(&a, &e).unwrap();
        assert_eq!(ch.omega, vec![f3.int(2), f3.zero()]);
        assert!(ch.invertible);
        assert_eq!(ch.idempotent.unwrap().coeffs(), &m2(f3, &[&[2, 0], &[0, 2]]));

        let f2 = Field::gf(2);
        let a = c2(f2);
        let e = CentralElement::new(&a, m2(f2, &[&[1, 0], &[0, 1]])).unwrap();
        let ch = characteristic_element(&a, &e).unwrap();
        assert_eq!(ch.omega, vec![f2.zero(), f2.zero()]);
        assert!(!ch.invertible && ch.idempotent.is_none());
    }

    #[test]
    fn counit_solve() {
        let f = Field::gf(5);
        let a = c2(f);
        let e = m2(f, &[&[1, 0], &[0, 1]]);
        assert_eq!(frobenius_counit(&a, &e).unwrap(), Some(vec![f.one(), f.zero()]));
    }
}
