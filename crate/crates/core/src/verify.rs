//! Equational checks on [`FsTensor`]s.
//!
//! Every check scans its index tuples in lexicographic order and reports the
//! first violation. Indices in a [`Witness`] are 0-based.

use crate::algebra::StructAlgebra;
use crate::scalar::Scalar;
use crate::tensor::FsTensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(indices: Vec<usize>, lhs: Scalar, rhs: Scalar) -> Self {
        CheckReport {
            passed: false,
            witness: Some(Witness { indices, lhs, rhs }),
        }
    }

    /// Compares two equal-length coefficient lists and reports the first mismatch,
    /// prefixing `prefix` to its position.
    pub(crate) fn compare(prefix: &[usize], lhs: &[Scalar], rhs: &[Scalar]) -> Option<Self> {
        lhs.iter().zip(rhs).position(|(a, b)| a != b).map(|t| {
            let mut idx = prefix.to_vec();
            idx.push(t);
            Self::fail(idx, lhs[t].clone(), rhs[t].clone())
        })
    }
}

/// The three contractions of the FS equation at `(i, j, l, u, v, w)`:
/// `R¹²R²³`, `R²³R¹³` and `R¹³R¹²` in coordinates.
pub fn fs_sums(r: &FsTensor, i: usize, j: usize, l: usize, u: usize, v: usize, w: usize) -> [Scalar; 3] {
    let f = r.field();
    let (mut a, mut b, mut c) = (f.zero(), f.zero(), f.zero());
    for k in 0..r.n() {
        a.add_mul(r.get(i, j, u, k), r.get(k, l, v, w));
        b.add_mul(r.get(j, l, v, k), r.get(i, k, u, w));
        c.add_mul(r.get(i, l, k, w), r.get(k, j, u, v));
    }
    [a, b, c]
}

pub fn check_fs(r: &FsTensor) -> CheckReport {
    scan_fs(r, |[a, b, c]| {
        if a != b {
            Some((a, b))
        } else if b != c {
            Some((b, c))
        } else {
            None
        }
    })
}

/// Which half of the FS equation to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    /// `R¹²R²³ = R²³R¹³`.
    FirstSecond,
    /// `R¹²R²³ = R¹³R¹²`, the associativity condition of the induced product.
    FirstThird,
}

pub fn check_half(r: &FsTensor, half: Half) -> CheckReport {
    scan_fs(r, |[a, b, c]| {
        let other = match half {
            Half::FirstSecond => b,
            Half::FirstThird => c,
        };
        (a != other).then_some((a, other))
    })
}

fn scan_fs(r: &FsTensor, mut bad: impl FnMut([Scalar; 3]) -> Option<(Scalar, Scalar)>) -> CheckReport {
    let n = r.n();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        for w in 0..n {
                            if let Some((x, y)) = bad(fs_sums(r, i, j, l, u, v, w)) {
                                return CheckReport::fail(vec![i, j, l, u, v, w], x, y);
                            }
                        }
                    }
                }
            }
        }
    }
    CheckReport::pass()
}

/// `Σ R¹R² = 1`, i.e. `Σ_k x^{ik}_{kj} = δ_ij`.
pub fn check_s(r: &FsTensor) -> CheckReport {
    let n = r.n();
    let f = r.field();
    for i in 0..n {
        for j in 0..n {
            let mut s = f.zero();
            for k in 0..n {
                s += r.get(i, k, k, j);
            }
            let d = f.int((i == j) as i64);
            if s != d {
                return CheckReport::fail(vec![i, j], s, d);
            }
        }
    }
    CheckReport::pass()
}

/// The Frobenius normalization with `ε` the matrix trace:
/// `Σ_k x^{kj}_{ki} = Σ_k x^{jk}_{ik} = δ_ij`.
pub fn check_f_trace(r: &FsTensor) -> CheckReport {
    let n = r.n();
    let f = r.field();
    for i in 0..n {
        for j in 0..n {
            let d = f.int((i == j) as i64);
            let mut s1 = f.zero();
            let mut s2 = f.zero();
            for k in 0..n {
                s1 += r.get(k, j, k, i);
                s2 += r.get(j, k, i, k);
            }
            if s1 != d {
                return CheckReport::fail(vec![i, j], s1, d);
            }
            if s2 != d {
                return CheckReport::fail(vec![i, j], s2, d);
            }
        }
    }
    CheckReport::pass()
}

#[derive(Clone, Copy, Debug)]
enum Leg {
    L12,
    L13,
    L23,
}

/// Applies `R` on the given pair of tensor legs of a vector in `M^{⊗3}`.
fn apply(r: &FsTensor, leg: Leg, w: &[Scalar]) -> Vec<Scalar> {
    let n = r.n();
    let f = r.field();
    let at = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut out = vec![f.zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let src = &w[at(a, b, c)];
                if src.is_zero() {
                    continue;
                }
                for p in 0..n {
                    for q in 0..n {
                        match leg {
                            Leg::L12 => out[at(p, q, c)].add_mul(r.get(p, q, a, b), src),
                            Leg::L13 => out[at(p, b, q)].add_mul(r.get(p, q, a, c), src),
                            Leg::L23 => out[at(a, p, q)].add_mul(r.get(p, q, b, c), src),
                        }
                    }
                }
            }
        }
    }
    out
}

/// Applies the operator words `lhs` and `rhs` (rightmost factor first) to every
/// basis vector and reports the lexicographically first differing entry
/// `(i, j, l, u, v, w)`.
fn compare_words(r: &FsTensor, lhs: &[&[Leg]], rhs: &[&[Leg]]) -> CheckReport {
    let n = r.n();
    let f = r.field();
    let n3 = n * n * n;
    let eval = |terms: &[&[Leg]], col: usize| -> Vec<Scalar> {
        let mut total = vec![f.zero(); n3];
        for word in terms {
            let mut v = vec![f.zero(); n3];
            v[col] = f.one();
            for &leg in word.iter().rev() {
                v = apply(r, leg, &v);
            }
            for (t, x) in total.iter_mut().zip(&v) {
                *t += x;
            }
        }
        total
    };
    let mut first: Option<(usize, usize, Scalar, Scalar)> = None;
    for col in 0..n3 {
        let a = eval(lhs, col);
        let b = eval(rhs, col);
        if let Some(row) = (0..n3).find(|&t| a[t] != b[t]) {
            if first.as_ref().is_none_or(|(r0, c0, _, _)| (row, col) < (*r0, *c0)) {
                first = Some((row, col, a[row].clone(), b[row].clone()));
            }
        }
    }
    match first {
        None => CheckReport::pass(),
        Some((row, col, x, y)) => {
            let split = |t: usize| [t / (n * n), (t / n) % n, t % n];
            let mut idx = split(row).to_vec();
            idx.extend(split(col));
            CheckReport::fail(idx, x, y)
        }
    }
}

/// `R¹²R²³R¹² = R²³R¹²R²³`.
pub fn check_braid(r: &FsTensor) -> CheckReport {
    use Leg::*;
    compare_words(r, &[&[L12, L23, L12]], &[&[L23, L12, L23]])
}

/// `τ∘R` satisfies `R¹²R¹³R²³ = R²³R¹³R¹²`.
pub fn check_qyb(r: &FsTensor) -> CheckReport {
    use Leg::*;
    let q = r.flipped();
    compare_words(&q, &[&[L12, L13, L23]], &[&[L23, L13, L12]])
}

/// `[R¹², R¹³ + R²³] = 0`.
pub fn check_kz(r: &FsTensor) -> CheckReport {
    use Leg::*;
    compare_words(r, &[&[L12, L13], &[L12, L23]], &[&[L13, L12], &[L23, L12]])
}

/// The product on `M ⊗ M` given by
/// `(m_k ⊗ m_l)(m_r ⊗ m_j) = Σ_a x^{ak}_{jl} m_r ⊗ m_a`, and its associativity verdict.
pub fn induced_multiplication(r: &FsTensor) -> (StructAlgebra, CheckReport) {
    let n = r.n();
    let f = r.field();
    let m = n * n;
    let mut mul = vec![f.zero(); m * m * m];
    for k in 0..n {
        for l in 0..n {
            for rr in 0..n {
                for j in 0..n {
                    for a in 0..n {
                        let idx = ((k * n + l) * m + (rr * n + j)) * m + (rr * n + a);
                        mul[idx] = r.get(a, k, j, l).clone();
                    }
                }
            }
        }
    }
    let alg = StructAlgebra::new(m, f, mul, None).expect("well-formed table");
    let report = alg.check_associative();
    (alg, report)
}
