//! Explicit solution families of the FS equation, each checked at generation time.

use crate::algebra::{check_frobenius_normalization, CentralElement, FrobeniusPair, StructAlgebra};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::module::ModuleRep;
use crate::scalar::{Field, Scalar};
use crate::tensor::FsTensor;
use crate::verify::check_fs;

/// A finite group on `0..n`, identity `0`, with `table[i][j] = i·j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput("group must be nonempty".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput(format!(
                "group table must be {n}×{n} with entries below {n}"
            )));
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(Error::InvalidInput(format!("0 is not an identity for element {g}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let Some(h) = (0..n).find(|&h| table[g][h] == 0 && table[h][g] == 0) else {
                return Err(Error::InvalidInput(format!("element {g} has no inverse")));
            };
            inverse.push(h);
        }
        Ok(GroupTable { table, inverse })
    }

    pub fn cyclic(n: usize) -> Self {
        GroupTable::new((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()).expect("cyclic group")
    }

    /// `S_3` on permutations of `{0,1,2}` in lexicographic order.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        GroupTable::new(table).expect("symmetric group")
    }

    /// `G × H` with `(g, h) ↦ g·|H| + h`.
    pub fn direct_product(&self, other: &GroupTable) -> Self {
        let (n, m) = (self.order(), other.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        GroupTable::new(table).expect("direct product")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// The group algebra `kG` on the basis of group elements.
pub fn group_algebra(g: &GroupTable, field: Field) -> StructAlgebra {
    let n = g.order();
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    StructAlgebra::from_fn(n, field, Some(unit), |a, b, c| field.int((g.mul(a, b) == c) as i64)).expect("group algebra")
}

#[derive(Clone, Debug)]
pub struct GroupIntegral {
    pub algebra: StructAlgebra,
    /// `Σ_g g ⊗ g⁻¹`.
    pub central: CentralElement,
    /// `(e, p₁)` with `p₁(g) = δ_{1,g}`.
    pub pair: FrobeniusPair,
    /// `|G|⁻¹ e` when `|G|` is invertible.
    pub separability: Option<CentralElement>,
    /// `e` acting on the regular representation.
    pub tensor: FsTensor,
}

pub fn gen_group_integral(g: &GroupTable, field: Field) -> Result<GroupIntegral> {
    let n = g.order();
    let a = group_algebra(g, field);
    let mut e = DenseMatrix::zeros(field, n, n);
    for x in 0..n {
        e[(x, g.inv(x))] = field.one();
    }
    let central = CentralElement::new(&a, e)?;
    let mut p1 = vec![field.zero(); n];
    p1[0] = field.one();
    let rep = check_frobenius_normalization(&a, central.coeffs(), &p1)?;
    if !rep.passed {
        return Err(Error::property("Frobenius normalization", rep));
    }
    let separability = match field.inverse_of_int(n as i64) {
        Some(inv) => {
            let s = CentralElement::new(&a, central.coeffs().scale(&inv))?;
            if a.multiply_out(s.coeffs()) != a.require_unit()? {
                return Err(Error::Internal("|G|⁻¹ Σ g ⊗ g⁻¹ does not multiply to 1".into()));
            }
            Some(s)
        }
        None => None,
    };
    let tensor = FsTensor::from_action(central.coeffs(), ModuleRep::regular(&a).action())?;
    require_fs(&tensor)?;
    Ok(GroupIntegral {
        pair: FrobeniusPair {
            e: central.clone(),
            eps: p1,
        },
        algebra: a,
        central,
        separability,
        tensor,
    })
}

fn require_fs(t: &FsTensor) -> Result<()> {
    let rep = check_fs(t);
    if rep.passed {
        Ok(())
    } else {
        Err(Error::property("check_fs", rep))
    }
}

/// Left multiplication by `Σ_i E_{i,j} ⊗ E_{j,i}` on `kⁿ ⊗ kⁿ`, for the
/// column `j` counted from 1.
pub fn gen_column_idempotent(n: usize, j: usize, field: Field) -> Result<FsTensor> {
    if n == 0 || j == 0 || j > n {
        return Err(Error::InvalidInput(format!("column {j} is outside 1..={n}")));
    }
    let j = j - 1;
    let mut e = DenseMatrix::zeros(field, n * n, n * n);
    for i in 0..n {
        e[(i * n + j, j * n + i)] = field.one();
    }
    let t = FsTensor::from_central_element(n, &e)?;
    require_fs(&t)?;
    Ok(t)
}

/// A normalized 2-cocycle `σ: G × G → k*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    sigma: DenseMatrix,
}

impl Cocycle2 {
    pub fn new(g: &GroupTable, sigma: DenseMatrix) -> Result<Self> {
        let n = g.order();
        if sigma.rows() != n || sigma.cols() != n {
            return Err(Error::Dimension(format!("cocycle must be {n}×{n}")));
        }
        if let Some(t) = sigma.entries().iter().position(Scalar::is_zero) {
            return Err(Error::InvalidInput(format!(
                "cocycle entry ({}, {}) is not a unit",
                t / n,
                t % n
            )));
        }
        for x in 0..n {
            if !sigma[(x, 0)].is_one() || !sigma[(0, x)].is_one() {
                return Err(Error::InvalidInput(format!("cocycle is not normalized at element {x}")));
            }
        }
        for h in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs = &sigma[(k, l)] * &sigma[(h, g.mul(k, l))];
                    let rhs = &sigma[(h, k)] * &sigma[(g.mul(h, k), l)];
                    if lhs != rhs {
                        return Err(Error::InvalidInput(format!(
                            "cocycle identity fails at ({h}, {k}, {l})"
                        )));
                    }
                }
            }
        }
        Ok(Cocycle2 { sigma })
    }

    pub fn trivial(g: &GroupTable, field: Field) -> Self {
        let n = g.order();
        Cocycle2 {
            sigma: DenseMatrix::from_vec(field, n, n, vec![field.one(); n * n]),
        }
    }

    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        &self.sigma[(a, b)]
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.sigma
    }
}

/// `x^{ij}_{uv} = δ_{j, u i⁻¹ v} σ⁻¹(iu⁻¹, ui⁻¹) σ(iu⁻¹, u) σ(ui⁻¹, v)`.
pub fn gen_cocycle(g: &GroupTable, sigma: &Cocycle2) -> Result<FsTensor> {
    let n = g.order();
    if sigma.matrix().rows() != n {
        return Err(Error::Dimension("cocycle and group differ in order".into()));
    }
    let f = sigma.matrix().field();
    let t = FsTensor::from_fn(n, f, |i, j, u, v| {
        let ui = g.mul(u, g.inv(i));
        if j != g.mul(ui, v) {
            return f.zero();
        }
        let iu = g.mul(i, g.inv(u));
        let s = sigma.get(iu, ui).inv().expect("units only");
        &(&s * sigma.get(iu, u)) * sigma.get(ui, v)
    });
    require_fs(&t)?;
    Ok(t)
}

/// `θ: X³ → X` on `X = 0..n`, stored at `(i·n + j)·n + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMap {
    n: usize,
    table: Vec<usize>,
}

impl ThetaMap {
    /// Validates the four exchange laws and names the first one that fails.
    pub fn new(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 || table.len() != n * n * n || table.iter().any(|&x| x >= n) {
            return Err(Error::InvalidInput(format!("θ needs {} entries below {n}", n * n * n)));
        }
        let t = ThetaMap { n, table };
        t.check_laws()?;
        Ok(t)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> usize {
        self.table[(i * self.n + j) * self.n + k]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    fn check_laws(&self) -> Result<()> {
        let n = self.n;
        let fail = |law: &str, idx: &[usize]| Err(Error::InvalidInput(format!("θ violates the {law} law at {idx:?}")));
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        // θ(u,i,j)=v ⇔ θ(v,j,i)=u with (u,i,j,v) = (a,b,c,d).
                        if (self.get(a, b, c) == d) != (self.get(d, c, b) == a) {
                            return fail("outer exchange", &[a, b, c, d]);
                        }
                        // θ(i,u,j)=v ⇔ θ(j,v,i)=u with (i,u,j,v) = (a,b,c,d).
                        if (self.get(a, b, c) == d) != (self.get(c, d, a) == b) {
                            return fail("middle exchange", &[a, b, c, d]);
                        }
                        // θ(i,j,u)=v ⇔ θ(j,i,v)=u with (i,j,u,v) = (a,b,c,d).
                        if (self.get(a, b, c) == d) != (self.get(b, a, d) == c) {
                            return fail("inner exchange", &[a, b, c, d]);
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for u in 0..n {
                        for v in 0..n {
                            for w in 0..n {
                                let l = self.get(i, j, k) == self.get(u, v, w);
                                let r = self.get(j, i, u) == self.get(k, w, v);
                                if l != r {
                                    return fail("six-term", &[i, j, k, u, v, w]);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `θ(k, k, i) = i` for all `i, k`.
    pub fn is_left_trivial(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|k| self.get(k, k, i) == i))
    }

    /// `θ(i, k, k) = i` for all `i, k`.
    pub fn is_right_trivial(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|k| self.get(i, k, k) == i))
    }
}

/// `θ(i, j, k) = i j⁻¹ k`.
pub fn theta_from_group(g: &GroupTable) -> ThetaMap {
    let n = g.order();
    let mut table = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                table.push(g.mul(g.mul(i, g.inv(j)), k));
            }
        }
    }
    ThetaMap::new(n, table).expect("group θ satisfies the exchange laws")
}

/// `θ(i, j, k) = g⁻¹(k)` for the unique `g` with `g(i) = j`, where
/// `action[g][x] = g(x)` must be free and transitive.
pub fn theta_from_action(g: &GroupTable, action: &[Vec<usize>]) -> Result<ThetaMap> {
    let n = g.order();
    if action.len() != n || action.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::InvalidInput(format!(
            "action must be {n}×{n} with entries below {n}"
        )));
    }
    for x in 0..n {
        if action[0][x] != x {
            return Err(Error::InvalidInput("identity does not act trivially".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if action[g.mul(a, b)][x] != action[a][action[b][x]] {
                    return Err(Error::InvalidInput(format!("not an action at ({a}, {b}, {x})")));
                }
            }
        }
    }
    // mover[i][j] = the unique g with g(i) = j.
    let mut mover = vec![vec![usize::MAX; n]; n];
    for (h, row) in action.iter().enumerate() {
        for (i, &j) in row.iter().enumerate() {
            if mover[i][j] != usize::MAX {
                return Err(Error::InvalidInput(format!(
                    "action is not free: two elements send {i} to {j}"
                )));
            }
            mover[i][j] = h;
        }
    }
    let mut table = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let h = mover[i][j];
            if h == usize::MAX {
                return Err(Error::InvalidInput(format!(
                    "action is not transitive: nothing sends {i} to {j}"
                )));
            }
            for k in 0..n {
                table.push(action[g.inv(h)][k]);
            }
        }
    }
    ThetaMap::new(n, table)
}

/// `x^{uv}_{ij} = a δ^u_{θ(i, v, j)}`.
pub fn gen_theta(t: &ThetaMap, a: &Scalar) -> Result<FsTensor> {
    let f = a.field();
    let r = FsTensor::from_fn(
        t.n(),
        f,
        |u, v, i, j| {
            if u == t.get(i, v, j) {
                a.clone()
            } else {
                f.zero()
            }
        },
    );
    require_fs(&r)?;
    Ok(r)
}

/// An idempotent self-map `φ` of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentMap {
    phi: Vec<usize>,
}

impl IdempotentMap {
    pub fn new(phi: Vec<usize>) -> Result<Self> {
        let n = phi.len();
        if n == 0 || phi.iter().any(|&x| x >= n) {
            return Err(Error::InvalidInput(format!("φ must map 0..{n} into itself")));
        }
        if let Some(i) = (0..n).find(|&i| phi[phi[i]] != phi[i]) {
            return Err(Error::InvalidInput(format!("φ is not idempotent at {i}")));
        }
        Ok(IdempotentMap { phi })
    }

    pub fn identity(n: usize) -> Self {
        IdempotentMap { phi: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.phi.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.phi
    }

    pub fn is_identity(&self) -> bool {
        self.phi.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Every idempotent self-map of `0..n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<IdempotentMap> {
        let mut out = Vec::new();
        let mut phi = vec![0; n];
        loop {
            if let Ok(m) = IdempotentMap::new(phi.clone()) {
                out.push(m);
            }
            let mut t = n;
            loop {
                if t == 0 {
                    return out;
                }
                t -= 1;
                phi[t] += 1;
                if phi[t] < n {
                    break;
                }
                phi[t] = 0;
            }
        }
    }
}

/// `x^{ij}_{uv} = δ_{uv} δ_{φ(i)u} δ_{φ(j)v}`.
pub fn gen_phi(m: &IdempotentMap, field: Field) -> Result<FsTensor> {
    let phi = m.map();
    let t = FsTensor::from_fn(m.n(), field, |i, j, u, v| {
        field.int((u == v && phi[i] == u && phi[j] == v) as i64)
    });
    require_fs(&t)?;
    Ok(t)
}

/// The linear conditions cutting out `A(R^φ)`, as rows over the unknowns
/// `a^i_j` at `i·n + j`:
///
/// * `a^{φ(i)}_{φ(i)} = Σ_{φ(α)=φ(i)} a^i_α` for every `i`;
/// * `a^{φ(i)}_j = 0` for `j ≠ φ(i)`;
/// * `Σ_{φ(α)=φ(i)} a^j_α = 0` whenever `φ(i) ≠ φ(j)`.
pub fn phi_predicted_relations(m: &IdempotentMap, field: Field) -> DenseMatrix {
    let n = m.n();
    let phi = m.map();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        let mut row = vec![field.zero(); n * n];
        row[phi[i] * n + phi[i]] += &field.one();
        for a in (0..n).filter(|&a| phi[a] == phi[i]) {
            row[i * n + a] -= &field.one();
        }
        rows.push(row);
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != phi[i]) {
            let mut row = vec![field.zero(); n * n];
            row[phi[i] * n + j] = field.one();
            rows.push(row);
        }
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| phi[i] != phi[j]) {
            let mut row = vec![field.zero(); n * n];
            for a in (0..n).filter(|&a| phi[a] == phi[i]) {
                row[j * n + a] = field.one();
            }
            rows.push(row);
        }
    }
    DenseMatrix::from_rows(field, rows)
}

/// `x^{ij}_{uv} = δ_{iv} a[j][u]`.
pub fn gen_permutation_family(a: &DenseMatrix) -> Result<FsTensor> {
    if !a.is_square() {
        return Err(Error::Dimension("coefficient array must be square".into()));
    }
    let f = a.field();
    let t = FsTensor::from_fn(
        a.rows(),
        f,
        |i, j, u, v| {
            if i == v {
                a[(j, u)].clone()
            } else {
                f.zero()
            }
        },
    );
    require_fs(&t)?;
    Ok(t)
}

/// `p ⊗ p` for an idempotent matrix `p`.
pub fn gen_idempotent_square(p: &DenseMatrix) -> Result<FsTensor> {
    if !p.is_square() {
        return Err(Error::Dimension("idempotent must be square".into()));
    }
    let pp = p.mul(p);
    if pp != *p {
        return Err(Error::InvalidInput("matrix is not idempotent".into()));
    }
    let t = FsTensor::from_fn(p.rows(), p.field(), |i, j, u, v| &p[(i, u)] * &p[(j, v)]);
    require_fs(&t)?;
    Ok(t)
}

/// The rank-one idempotent `[[1 − rq, q], [r(1 − rq), rq]]`.
pub fn rank_one_idempotent(r: &Scalar, q: &Scalar) -> DenseMatrix {
    let f = r.field();
    let rq = r * q;
    let s = &f.one() - &rq;
    DenseMatrix::from_rows(f, vec![vec![s.clone(), q.clone()], vec![r * &s, rq]])
}
