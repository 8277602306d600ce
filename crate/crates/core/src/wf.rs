//! Compatibility checks between a multiplication and a comultiplication on the
//! same space, and between a module structure and a coaction.

use crate::algebra::{CentralElement, StructAlgebra};
use crate::coalgebra::StructCoalgebra;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::module::ModuleRep;
use crate::scalar::Scalar;
use crate::verify::CheckReport;

fn same_space(a: &StructAlgebra, c: &StructCoalgebra) -> Result<()> {
    if a.dim() != c.dim() {
        return Err(Error::Dimension(format!(
            "algebra has dimension {} but coalgebra has {}",
            a.dim(),
            c.dim()
        )));
    }
    if a.field() != c.field() {
        return Err(Error::FieldMismatch {
            expected: a.field().to_string(),
            found: c.field().to_string(),
        });
    }
    Ok(())
}

/// `Δ(ab) = Σ a₍₁₎b ⊗ a₍₂₎ = Σ b₍₁₎ ⊗ ab₍₂₎` on all basis pairs;
/// witness `(x, y, side, i, j)` with side 0 for the first equality.
pub fn wf_check(a: &StructAlgebra, c: &StructCoalgebra) -> Result<CheckReport> {
    same_space(a, c)?;
    let m = a.dim();
    for x in 0..m {
        for y in 0..m {
            let r = wf_check_pair(a, c, x, y);
            if !r.passed {
                return Ok(r);
            }
        }
    }
    Ok(CheckReport::pass())
}

/// The WF identities for the single basis pair `(b_x, b_y)`.
pub fn wf_check_pair(a: &StructAlgebra, c: &StructCoalgebra, x: usize, y: usize) -> CheckReport {
    let m = a.dim();
    let f = a.field();
    let lhs = c.coproduct(a.basis_product(x, y));
    let mut mid = vec![f.zero(); m * m];
    let mut right = vec![f.zero(); m * m];
    for i in 0..m {
        for j in 0..m {
            let w = c.d(x, i, j);
            if !w.is_zero() {
                for (p, s) in a.basis_product(i, y).iter().enumerate() {
                    mid[p * m + j].add_mul(w, s);
                }
            }
            let w = c.d(y, i, j);
            if !w.is_zero() {
                for (q, s) in a.basis_product(x, j).iter().enumerate() {
                    right[i * m + q].add_mul(w, s);
                }
            }
        }
    }
    for (side, other) in [(0, &mid), (1, &right)] {
        if let Some(mut r) = CheckReport::compare(&[x, y, side], &lhs, other) {
            split_last(&mut r, &[m, m]);
            return r;
        }
    }
    CheckReport::pass()
}

fn split_last(r: &mut CheckReport, radices: &[usize]) {
    if let Some(w) = r.witness.as_mut() {
        let mut t = w.indices.pop().unwrap();
        let mut digits = Vec::new();
        for &b in radices.iter().rev() {
            digits.push(t % b);
            t /= b;
        }
        digits.reverse();
        w.indices.extend(digits);
    }
}

/// `Δ_e(a) = Σ e²a ⊗ e¹` for a central `e`.
pub fn wf_comul_from_central(a: &StructAlgebra, e: &CentralElement) -> StructCoalgebra {
    let m = a.dim();
    let f = a.field();
    let e = e.coeffs();
    StructCoalgebra::from_fn(m, f, None, |k, i, p| {
        let mut acc = f.zero();
        for q in 0..m {
            acc.add_mul(&e[(p, q)], a.c(q, k, i));
        }
        acc
    })
    .expect("well-formed")
}

/// `δ(a) = Σ R¹ ⊗ R²a` and its coassociativity verdict.
pub fn delta_from_r(a: &StructAlgebra, r: &DenseMatrix) -> Result<(StructCoalgebra, CheckReport)> {
    a.require_unit()?;
    let m = a.dim();
    if r.rows() != m || r.cols() != m {
        return Err(Error::Dimension(format!("element of A ⊗ A must be {m}×{m}")));
    }
    let f = a.field();
    let c = StructCoalgebra::from_fn(m, f, None, |k, i, t| {
        let mut acc = f.zero();
        for j in 0..m {
            acc.add_mul(&r[(i, j)], a.c(j, k, t));
        }
        acc
    })?;
    let rep = c.check_coassociative();
    Ok((c, rep))
}

/// `R¹²R²³ = R²³R¹³` in `A ⊗ A ⊗ A`; witness `(i, j, l)`.
pub fn check_r12_r23_eq_r23_r13(a: &StructAlgebra, r: &DenseMatrix) -> CheckReport {
    let m = a.dim();
    let f = a.field();
    let mut lhs = vec![f.zero(); m * m * m];
    let mut rhs = vec![f.zero(); m * m * m];
    for i in 0..m {
        for j in 0..m {
            let rij = &r[(i, j)];
            if rij.is_zero() {
                continue;
            }
            for k in 0..m {
                for l in 0..m {
                    let w = rij * &r[(k, l)];
                    if w.is_zero() {
                        continue;
                    }
                    for (t, s) in a.basis_product(j, k).iter().enumerate() {
                        lhs[(i * m + t) * m + l].add_mul(&w, s);
                    }
                    for (t, s) in a.basis_product(l, j).iter().enumerate() {
                        rhs[(i * m + k) * m + t].add_mul(&w, s);
                    }
                }
            }
        }
    }
    match CheckReport::compare(&[], &lhs, &rhs) {
        None => CheckReport::pass(),
        Some(mut rep) => {
            split_last(&mut rep, &[m, m, m]);
            rep
        }
    }
}

/// `ρ(a·m) = Σ a₍₁₎·m ⊗ a₍₂₎ = Σ m₍₀₎ ⊗ a m₍₁₎` on basis `a = b_k`, `m = m_t`;
/// witness `(k, t, side, s, q)`.
pub fn fs_object_check(a: &StructAlgebra, c: &StructCoalgebra, md: &ModuleRep) -> Result<CheckReport> {
    same_space(a, c)?;
    let m = a.dim();
    let d = md.dim();
    if md.algebra_dim() != m || md.action().len() != m {
        return Err(Error::Dimension(
            "module needs one action matrix per basis element".into(),
        ));
    }
    if md.coaction().is_none() {
        return Err(Error::InvalidInput("module has no coaction".into()));
    }
    let f = a.field();
    let rho = md.action();
    for k in 0..m {
        for t in 0..d {
            let mut lhs = vec![f.zero(); d * m];
            let mut mid = vec![f.zero(); d * m];
            let mut right = vec![f.zero(); d * m];
            for s in 0..d {
                let w = &rho[k][(s, t)];
                if w.is_zero() {
                    continue;
                }
                for r in 0..d {
                    for q in 0..m {
                        lhs[r * m + q].add_mul(w, md.co(s, r, q));
                    }
                }
            }
            for i in 0..m {
                for j in 0..m {
                    let w = c.d(k, i, j);
                    if w.is_zero() {
                        continue;
                    }
                    for r in 0..d {
                        mid[r * m + j].add_mul(w, &rho[i][(r, t)]);
                    }
                }
            }
            for s in 0..d {
                for q in 0..m {
                    let w = md.co(t, s, q);
                    if w.is_zero() {
                        continue;
                    }
                    for (j, x) in a.basis_product(k, q).iter().enumerate() {
                        right[s * m + j].add_mul(w, x);
                    }
                }
            }
            for (side, other) in [(0, &mid), (1, &right)] {
                if let Some(mut r) = CheckReport::compare(&[k, t, side], &lhs, other) {
                    split_last(&mut r, &[d, m]);
                    return Ok(r);
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// `ρ(m) = Σ e²·m ⊗ e¹` where `Δ(1) = Σ e² ⊗ e¹`.
pub fn coaction_from_unit(a: &StructAlgebra, c: &StructCoalgebra, md: &ModuleRep) -> Result<ModuleRep> {
    same_space(a, c)?;
    let unit = a.require_unit()?;
    let m = a.dim();
    let d = md.dim();
    if md.action().len() != m {
        return Err(Error::Dimension(
            "module needs one action matrix per basis element".into(),
        ));
    }
    let f = a.field();
    let delta_one = c.coproduct(unit);
    let rho = md.action();
    let mut co: Vec<Scalar> = vec![f.zero(); d * d * m];
    for i in 0..m {
        for j in 0..m {
            let w = &delta_one[i * m + j];
            if w.is_zero() {
                continue;
            }
            for t in 0..d {
                for r in 0..d {
                    co[(t * d + r) * m + j].add_mul(w, &rho[i][(r, t)]);
                }
            }
        }
    }
    let out = md.clone().with_coaction(co)?;
    let rep = fs_object_check(a, c, &out)?;
    if !rep.passed {
        return Err(Error::property("FS-object identity", rep));
    }
    Ok(out)
}
