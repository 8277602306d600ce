//! Fixtures and brute-force oracles shared by the integration tests.
//!
//! The oracles work on plain `i64` arrays modulo `p` and never call into the
//! library's linear algebra or verifier.

#![allow(dead_code)]

use fs_forge::coalgebra::StructCoalgebra;
use fs_forge::{DenseMatrix, Field, FsTensor, Scalar};

/// The characteristic-2 matrix displayed as an FS solution, rows `i·2+j`, columns `u·2+v`.
pub const F2_DISPLAYED: [[i64; 4]; 4] = [[1, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 1]];

/// The characteristic-3 matrix as printed.
pub const F3_DISPLAYED: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, 1, 2], [0, 1, 1, 2], [1, 2, 2, 1]];

/// The printed matrix with entry (4,4) changed to 2.
pub const F3_CORRECTED: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, 1, 2], [0, 1, 1, 2], [1, 2, 2, 2]];

pub fn tensor_from_rows(rows: &[[i64; 4]; 4], f: Field) -> FsTensor {
    let m = DenseMatrix::from_rows(f, rows.iter().map(|r| r.iter().map(|&x| f.int(x)).collect()).collect());
    FsTensor::from_matrix(&m).unwrap()
}

pub fn ints(f: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| f.int(x)).collect()
}

pub fn residue(s: &Scalar) -> i64 {
    match s {
        Scalar::Mod { v, .. } => i64::from(*v),
        Scalar::Rat(_) => panic!("oracle works over prime fields only"),
    }
}

/// Entries of a prime-field tensor as residues, in storage order.
pub fn residues(t: &FsTensor) -> Vec<i64> {
    t.entries().iter().map(residue).collect()
}

/// Square matrices mod p as flat row-major vectors.
pub fn mat_mul(a: &[i64], b: &[i64], d: usize, p: i64) -> Vec<i64> {
    let mut c = vec![0; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == 0 {
                continue;
            }
            for j in 0..d {
                c[i * d + j] = (c[i * d + j] + x * b[k * d + j]) % p;
            }
        }
    }
    c
}

/// `R` as an `n² × n²` matrix acting on `M ⊗ M`, with `R(m_u ⊗ m_v) = Σ x^{ij}_{uv} m_i ⊗ m_j`.
fn operator(x: &[i64], n: usize) -> Vec<i64> {
    let d = n * n;
    let mut m = vec![0; d * d];
    for i in 0..n {
        for j in 0..n {
            for u in 0..n {
                for v in 0..n {
                    m[(i * n + j) * d + u * n + v] = x[((i * n + j) * n + u) * n + v];
                }
            }
        }
    }
    m
}

/// `R` placed on two of the three legs of `M ⊗ M ⊗ M`.
fn legs(r: &[i64], n: usize, a: usize, b: usize) -> Vec<i64> {
    let d = n * n * n;
    let dd = n * n;
    let mut out = vec![0; d * d];
    for col in 0..d {
        let ci = [col / (n * n), (col / n) % n, col % n];
        for ra in 0..n {
            for rb in 0..n {
                let x = r[(ra * n + rb) * dd + ci[a] * n + ci[b]];
                if x == 0 {
                    continue;
                }
                let mut ri = ci;
                ri[a] = ra;
                ri[b] = rb;
                out[((ri[0] * n + ri[1]) * n + ri[2]) * d + col] = x;
            }
        }
    }
    out
}

/// `R¹²R²³ = R²³R¹³ = R¹³R¹²` by explicit matrix products.
pub fn oracle_fs(x: &[i64], n: usize, p: i64) -> bool {
    let r = operator(x, n);
    let d = n * n * n;
    let r12 = legs(&r, n, 0, 1);
    let r23 = legs(&r, n, 1, 2);
    let r13 = legs(&r, n, 0, 2);
    let a = mat_mul(&r12, &r23, d, p);
    let b = mat_mul(&r23, &r13, d, p);
    let c = mat_mul(&r13, &r12, d, p);
    a == b && b == c
}

/// `R¹²R²³R¹² = R²³R¹²R²³`.
pub fn oracle_braid(x: &[i64], n: usize, p: i64) -> bool {
    let r = operator(x, n);
    let d = n * n * n;
    let r12 = legs(&r, n, 0, 1);
    let r23 = legs(&r, n, 1, 2);
    mat_mul(&mat_mul(&r12, &r23, d, p), &r12, d, p) == mat_mul(&mat_mul(&r23, &r12, d, p), &r23, d, p)
}

/// All invertible `n×n` matrices mod p with their inverses.
pub fn gl(n: usize, p: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let total = (p as usize).pow((n * n) as u32);
    let mut all = Vec::new();
    for code in 0..total {
        let mut c = code;
        let m: Vec<i64> = (0..n * n)
            .map(|_| {
                let x = (c % p as usize) as i64;
                c /= p as usize;
                x
            })
            .collect();
        all.push(m);
    }
    let id: Vec<i64> = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
    let mut out = Vec::new();
    for g in &all {
        if let Some(h) = all.iter().find(|h| mat_mul(g, h, n, p) == id) {
            out.push((g.clone(), h.clone()));
        }
    }
    out
}

fn kron(a: &[i64], b: &[i64], n: usize, p: i64) -> Vec<i64> {
    let d = n * n;
    let mut out = vec![0; d * d];
    for i in 0..n {
        for j in 0..n {
            for u in 0..n {
                for v in 0..n {
                    out[(i * n + u) * d + j * n + v] = a[i * n + j] * b[u * n + v] % p;
                }
            }
        }
    }
    out
}

/// `(g⊗g) R (g⊗g)⁻¹` with the result in storage order.
pub fn oracle_conjugate(x: &[i64], n: usize, p: i64, g: &[i64], ginv: &[i64]) -> Vec<i64> {
    let d = n * n;
    let r = operator(x, n);
    let m = mat_mul(&mat_mul(&kron(g, g, n, p), &r, d, p), &kron(ginv, ginv, n, p), d, p);
    let mut out = vec![0; d * d];
    for i in 0..n {
        for j in 0..n {
            for u in 0..n {
                for v in 0..n {
                    out[((i * n + j) * n + u) * n + v] = m[(i * n + j) * d + u * n + v];
                }
            }
        }
    }
    out
}

/// Number of orbits: count distinct orbit minima.
pub fn oracle_orbit_count(solutions: &[Vec<i64>], n: usize, p: i64) -> usize {
    let group = gl(n, p);
    let mut minima: Vec<Vec<i64>> = solutions
        .iter()
        .map(|x| {
            group
                .iter()
                .map(|(g, h)| oracle_conjugate(x, n, p, g, h))
                .min()
                .unwrap()
        })
        .collect();
    minima.sort();
    minima.dedup();
    minima.len()
}

/// The defining relation of `A(n, R)` at `(i, j, u, v)` for a matrix `a` (row-major).
fn commutes(x: &[i64], a: &[i64], n: usize, p: i64) -> bool {
    let at = |i: usize, j: usize, u: usize, v: usize| x[((i * n + j) * n + u) * n + v];
    for i in 0..n {
        for j in 0..n {
            for u in 0..n {
                for v in 0..n {
                    let mut s = 0;
                    for al in 0..n {
                        s += a[i * n + al] * at(al, j, u, v) - at(i, j, u, al) * a[al * n + v];
                    }
                    if s.rem_euclid(p) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `dim A(n, R)` by counting every `n×n` matrix over `F_p` that satisfies the relation.
pub fn oracle_subalgebra_dim(x: &[i64], n: usize, p: i64) -> usize {
    let total = (p as u64).pow((n * n) as u32);
    let mut count = 0u64;
    let mut a = vec![0i64; n * n];
    for code in 0..total {
        let mut c = code;
        for e in a.iter_mut() {
            *e = (c % p as u64) as i64;
            c /= p as u64;
        }
        if commutes(x, &a, n, p) {
            count += 1;
        }
    }
    let mut dim = 0;
    let mut c = 1u64;
    while c < count {
        c *= p as u64;
        dim += 1;
    }
    assert_eq!(c, count, "solution count is a power of p");
    dim
}

/// Every tensor over `F_p` with `n = 2`, checked by the matrix-product oracle.
pub fn oracle_enumerate_n2(p: i64) -> Vec<Vec<i64>> {
    let total = (p as u64).pow(16);
    let mut out = Vec::new();
    let mut x = vec![0i64; 16];
    for code in 0..total {
        let mut c = code;
        for e in x.iter_mut() {
            *e = (c % p as u64) as i64;
            c /= p as u64;
        }
        if oracle_fs(&x, 2, p) {
            out.push(x.clone());
        }
    }
    out
}

/// The six-element coalgebra of the φ with φ(1)=φ(2)=2, φ(3)=φ(4)=4, in the
/// basis x₁..x₄ = diagonal comatrix entries, x₅ = c¹₃, x₆ = c³₁ (0-based here).
pub fn phi_example_coalgebra(f: Field) -> StructCoalgebra {
    let mut terms: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 6];
    terms[0] = vec![(0, 0), (4, 5)];
    terms[1] = vec![(1, 1)];
    terms[2] = vec![(2, 2), (5, 4)];
    terms[3] = vec![(3, 3)];
    terms[4] = vec![(0, 4), (4, 2)];
    terms[5] = vec![(5, 0), (2, 5)];
    let counit = Some(ints(f, &[1, 1, 1, 1, 0, 0]));
    StructCoalgebra::from_fn(6, f, counit, |k, i, j| f.int(i64::from(terms[k].contains(&(i, j))))).unwrap()
}

/// The displayed parameter pattern for the same φ: coefficient matrices of x, y, z, t, u, v.
pub fn phi_example_pattern_one() -> Vec<[[i64; 4]; 4]> {
    vec![
        [[1, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 1, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, -1], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 1]],
        [[0, 0, 1, -1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [1, -1, 0, 0], [0, 0, 0, 0]],
    ]
}

/// The pattern for φ(1)=1, φ(2)=φ(3)=φ(4)=2.
pub fn phi_example_pattern_two() -> Vec<[[i64; 4]; 4]> {
    vec![
        [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, -1], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 1]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, -1], [0, 0, 0, 0]],
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, -1, 0]],
    ]
}

pub fn pattern_matrix(f: Field, m: &[[i64; 4]; 4]) -> DenseMatrix {
    DenseMatrix::from_rows(f, m.iter().map(|r| ints(f, r)).collect())
}

/// Comatrix entry `c^i_j` (0-based) as a vector on the n² comatrix basis.
pub fn comatrix_entry(f: Field, n: usize, i: usize, j: usize) -> Vec<Scalar> {
    (0..n * n).map(|k| f.int(i64::from(k == i * n + j))).collect()
}
