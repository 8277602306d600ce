//! Dense matrices over a [`Field`] with exact Gauss-Jordan elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// A feasible affine system: `a * particular = b`, with `kernel` spanning `ker a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

impl DenseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Row-major constructor; panics when `data.len() != rows * cols`.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        DenseMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&v| field.int(v))
            })
            .collect();
        Self::from_vec(field, r, c, data)
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        Self::from_vec(field, r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j].add_mul(a, &other[(k, j)]);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Self::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &Scalar) -> DenseMatrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Self::from_vec(self.field, self.rows, self.cols, data)
    }

    /// Kronecker product; row `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and the strictly increasing pivot columns.
    ///
    /// The pivot in each column is the first row (at or below the current one)
    /// holding a nonzero entry.
    pub fn rref(&self) -> (DenseMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            let pivot_row: Vec<Scalar> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if pivot_row[j].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &(&f * &pivot_row[j]);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The standard free-variable basis of the kernel, in increasing free-column order.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    pub fn solve_affine(&self, b: &[Scalar]) -> Option<AffineSolution> {
        assert_eq!(self.rows, b.len(), "right-hand side length differs from row count");
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![self.field.zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            particular[c] = r[(row, self.cols)].clone();
        }
        let mut coeff = Self::zeros(self.field, r.rows, self.cols);
        for i in 0..r.rows {
            for j in 0..self.cols {
                coeff[(i, j)] = r[(i, j)].clone();
            }
        }
        let kernel = kernel_from_rref(&coeff, &pivots);
        Some(AffineSolution { particular, kernel })
    }

    pub fn invert(&self) -> Option<DenseMatrix> {
        assert!(self.is_square(), "only square matrices have inverses");
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

fn kernel_from_rref(r: &DenseMatrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let field = r.field;
    let mut is_pivot = vec![false; r.cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..r.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![field.zero(); r.cols];
            v[f] = field.one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -&r[(row, f)];
            }
            v
        })
        .collect()
}

/// Coordinates of `v` in the span of `basis`, when it lies there.
pub fn coordinates_in(field: Field, basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return v.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let len = v.len();
    let mut a = DenseMatrix::zeros(field, len, basis.len());
    for (k, b) in basis.iter().enumerate() {
        for t in 0..len {
            a[(t, k)] = b[t].clone();
        }
    }
    a.solve_affine(v).map(|s| s.particular)
}

/// A row space kept in reduced row echelon form as vectors are inserted one at a time.
///
/// Equivalent to `rref` on the stacked rows, without materializing them.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    field: Field,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(field: Field, cols: usize) -> Self {
        RowEchelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection onto the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length differs from column count");
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, y) in v.iter_mut().zip(row).skip(c) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[c].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(c) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        let data = self.rows.iter().flatten().cloned().collect();
        DenseMatrix::from_vec(self.field, self.rows.len(), self.cols, data)
    }

    /// The free-variable kernel basis, identical to [`DenseMatrix::nullspace_basis`].
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        if self.rows.is_empty() {
            return (0..self.cols)
                .map(|f| {
                    let mut v = vec![self.field.zero(); self.cols];
                    v[f] = self.field.one();
                    v
                })
                .collect();
        }
        kernel_from_rref(&self.to_matrix(), &self.pivots)
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f.int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let f3 = Field::gf(3);
        let id = DenseMatrix::identity(f3, 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));

        let f2 = Field::gf(2);
        let m = DenseMatrix::from_ints(f2, &[&[1, 1], &[1, 1]]);
        let (r, p) = m.rref();
        assert_eq!(r, DenseMatrix::from_ints(f2, &[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let q = Field::Rational;
        let m = DenseMatrix::from_ints(q, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref().0, DenseMatrix::from_ints(q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn nullspace_examples() {
        let q = Field::Rational;
        assert!(DenseMatrix::identity(q, 3).nullspace_basis().is_empty());
        let z = DenseMatrix::zeros(q, 2, 3);
        assert_eq!(
            z.nullspace_basis(),
            vec![ints(q, &[1, 0, 0]), ints(q, &[0, 1, 0]), ints(q, &[0, 0, 1])]
        );
        let f2 = Field::gf(2);
        let m = DenseMatrix::from_ints(f2, &[&[1, 1, 0]]);
        assert_eq!(m.nullspace_basis(), vec![ints(f2, &[1, 1, 0]), ints(f2, &[0, 0, 1])]);
    }

    #[test]
    fn affine_examples() {
        let f5 = Field::gf(5);
        let b = ints(f5, &[3, 1, 4]);
        let s = DenseMatrix::identity(f5, 3).solve_affine(&b).unwrap();
        assert_eq!(s.particular, b);
        assert!(s.kernel.is_empty());

        let f2 = Field::gf(2);
        let s = DenseMatrix::from_ints(f2, &[&[1, 1]])
            .solve_affine(&ints(f2, &[1]))
            .unwrap();
        assert_eq!(s.particular, ints(f2, &[1, 0]));
        assert_eq!(s.kernel, vec![ints(f2, &[1, 1])]);

        assert!(DenseMatrix::from_ints(f2, &[&[0, 0]])
            .solve_affine(&ints(f2, &[1]))
            .is_none());
    }

    #[test]
    fn invert_examples() {
        let f3 = Field::gf(3);
        let id = DenseMatrix::identity(f3, 3);
        assert_eq!(id.invert().unwrap(), id);
        let sw = DenseMatrix::from_ints(f3, &[&[0, 1], &[1, 0]]);
        assert_eq!(sw.invert().unwrap(), sw);
        let f2 = Field::gf(2);
        let u = DenseMatrix::from_ints(f2, &[&[1, 1], &[0, 1]]);
        assert_eq!(u.invert().unwrap(), u);
        assert!(DenseMatrix::from_ints(f2, &[&[1, 1], &[1, 1]]).invert().is_none());
        let q = Field::Rational;
        let m = DenseMatrix::from_ints(q, &[&[2, 1], &[7, 4]]);
        assert!(m.mul(&m.invert().unwrap()).is_identity());
    }

    #[test]
    fn kron_indexing() {
        let q = Field::Rational;
        let a = DenseMatrix::from_ints(q, &[&[1, 2], &[3, 4]]);
        let b = DenseMatrix::from_ints(q, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k[(0, 1)], q.int(1));
        assert_eq!(k[(3, 2)], q.int(4));
        assert_eq!(k[(2, 1)], q.int(3));
    }

    #[test]
    fn coordinates() {
        let f = Field::gf(7);
        let basis = vec![ints(f, &[1, 0, 1]), ints(f, &[0, 1, 1])];
        assert_eq!(coordinates_in(f, &basis, &ints(f, &[2, 3, 5])), Some(ints(f, &[2, 3])));
        assert_eq!(coordinates_in(f, &basis, &ints(f, &[1, 0, 0])), None);
    }

    #[test]
    fn echelon_matches_rref() {
        let f = Field::gf(5);
        let m = DenseMatrix::from_ints(f, &[&[0, 2, 1, 3], &[1, 1, 0, 0], &[1, 3, 1, 3], &[0, 0, 0, 0]]);
        let mut e = RowEchelon::new(f, 4);
        for r in 0..4 {
            e.insert(m.row(r));
        }
        let (r, piv) = m.rref();
        assert_eq!(e.pivots(), &piv[..]);
        assert_eq!(e.rank(), 2);
        for i in 0..2 {
            assert_eq!(&e.rows()[i][..], r.row(i));
        }
        assert_eq!(e.nullspace_basis(), m.nullspace_basis());
        assert!(e.contains(m.row(2)));
    }
}
