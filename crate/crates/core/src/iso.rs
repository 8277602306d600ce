//! Isomorphism search between small structure-constant algebras and coalgebras,
//! restricted to maps that send each basis vector to a nonzero multiple of
//! another basis vector.

use crate::algebra::StructAlgebra;
use crate::coalgebra::StructCoalgebra;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Largest dimension the search accepts.
pub const MAX_ISO_DIM: usize = 8;

/// `b_i ↦ scale[i] · b'_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatch {
    pub perm: Vec<usize>,
    pub scale: Vec<Scalar>,
}

/// Scalars tried for each basis vector: all units of `F_p`, or `±1` over `Q`.
fn scalings(field: Field) -> Vec<Scalar> {
    match field.elements() {
        Some(els) => els.into_iter().filter(|x| !x.is_zero()).collect(),
        None => vec![field.one(), field.int(-1)],
    }
}

/// Tensor positions: `t(i, j, k)` with `i, j` the "pair" slots and `k` the single slot.
/// For an algebra the condition is `s_k c_ij^k = s_i s_j c'^{πk}_{πi πj}`; for a
/// coalgebra it is `s_i s_j d_k^{ij} = s_k d'^{πi πj}_{πk}`.
struct Problem<'a> {
    d: usize,
    lhs: &'a dyn Fn(usize, usize, usize) -> &'a Scalar,
    rhs: &'a dyn Fn(usize, usize, usize) -> &'a Scalar,
    coalgebra: bool,
}

impl Problem<'_> {
    fn consistent(&self, perm: &[usize], s: &[Scalar], t: usize) -> bool {
        for i in 0..=t {
            for j in 0..=t {
                for k in 0..=t {
                    if i.max(j).max(k) != t {
                        continue;
                    }
                    let a = (self.lhs)(i, j, k);
                    let b = (self.rhs)(perm[i], perm[j], perm[k]);
                    let sij = &s[i] * &s[j];
                    let ok = if self.coalgebra {
                        &sij * a == &s[k] * b
                    } else {
                        &s[k] * a == &sij * b
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(&self, field: Field) -> Option<BasisMatch> {
        let cand = scalings(field);
        let mut perm = Vec::with_capacity(self.d);
        let mut s = Vec::with_capacity(self.d);
        let mut used = vec![false; self.d];
        self.step(&cand, &mut perm, &mut s, &mut used)
            .then_some(BasisMatch { perm, scale: s })
    }

    fn step(&self, cand: &[Scalar], perm: &mut Vec<usize>, s: &mut Vec<Scalar>, used: &mut [bool]) -> bool {
        let t = perm.len();
        if t == self.d {
            return true;
        }
        for target in 0..self.d {
            if used[target] {
                continue;
            }
            used[target] = true;
            perm.push(target);
            for c in cand {
                s.push(c.clone());
                if self.consistent(perm, s, t) && self.step(cand, perm, s, used) {
                    return true;
                }
                s.pop();
            }
            perm.pop();
            used[target] = false;
        }
        false
    }
}

fn guard(d: usize, d2: usize, f: Field, f2: Field) -> Result<()> {
    if d != d2 {
        return Err(Error::Dimension(format!("dimensions {d} and {d2} differ")));
    }
    if f != f2 {
        return Err(Error::FieldMismatch {
            expected: f.to_string(),
            found: f2.to_string(),
        });
    }
    if d > MAX_ISO_DIM {
        return Err(Error::InvalidInput(format!(
            "isomorphism search is capped at dimension {MAX_ISO_DIM}"
        )));
    }
    Ok(())
}

/// An algebra isomorphism `a → b` of permutation-and-scaling shape, if one exists.
pub fn find_algebra_iso(a: &StructAlgebra, b: &StructAlgebra) -> Result<Option<BasisMatch>> {
    guard(a.dim(), b.dim(), a.field(), b.field())?;
    let lhs = |i, j, k| a.c(i, j, k);
    let rhs = |i, j, k| b.c(i, j, k);
    let p = Problem {
        d: a.dim(),
        lhs: &lhs,
        rhs: &rhs,
        coalgebra: false,
    };
    Ok(p.search(a.field()))
}

/// A coalgebra isomorphism `c → d` of permutation-and-scaling shape, if one exists.
pub fn find_coalgebra_iso(c: &StructCoalgebra, d: &StructCoalgebra) -> Result<Option<BasisMatch>> {
    guard(c.dim(), d.dim(), c.field(), d.field())?;
    let lhs = |i, j, k| c.d(k, i, j);
    let rhs = |i, j, k| d.d(k, i, j);
    let p = Problem {
        d: c.dim(),
        lhs: &lhs,
        rhs: &rhs,
        coalgebra: true,
    };
    Ok(p.search(c.field()))
}
