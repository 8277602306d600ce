//! Exhaustive search for FS solutions in `M_n(F_p) ⊗ M_n(F_p)` and their
//! classification under conjugation by `GL_n(F_p)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Field;
use crate::tensor::FsTensor;
use crate::verify::{check_f_trace, check_fs, check_s};

/// Largest candidate space `p^(n⁴)` the enumerator accepts.
pub const ENUMERATION_GUARD: u128 = 1 << 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    None,
    S,
    FTrace,
}

impl Filter {
    pub fn name(self) -> &'static str {
        match self {
            Filter::None => "none",
            Filter::S => "s",
            Filter::FTrace => "f-trace",
        }
    }

    fn keeps(self, t: &FsTensor) -> bool {
        match self {
            Filter::None => true,
            Filter::S => check_s(t).passed,
            Filter::FTrace => check_f_trace(t).passed,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Filter::None),
            "s" => Ok(Filter::S),
            "f-trace" | "f" => Ok(Filter::FTrace),
            _ => Err(Error::InvalidInput(format!("unknown filter {s:?}"))),
        }
    }
}

/// Solutions as flat residue arrays in tensor storage order, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub n: usize,
    pub p: u32,
    pub filter: Filter,
    pub solutions: Vec<Vec<u8>>,
}

impl SolutionSet {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }

    pub fn field(&self) -> Field {
        Field::gf(self.p)
    }

    pub fn tensor(&self, idx: usize) -> FsTensor {
        to_tensor(self.n, self.field(), &self.solutions[idx])
    }

    pub fn tensors(&self) -> impl Iterator<Item = FsTensor> + '_ {
        (0..self.count()).map(|i| self.tensor(i))
    }

    fn position(&self, entries: &[u8]) -> Option<usize> {
        self.solutions.binary_search_by(|s| s.as_slice().cmp(entries)).ok()
    }
}

fn to_tensor(n: usize, f: Field, entries: &[u8]) -> FsTensor {
    let ints: Vec<i64> = entries.iter().map(|&x| x as i64).collect();
    FsTensor::from_ints(n, f, &ints).expect("well-formed")
}

fn residues(t: &FsTensor) -> Vec<u8> {
    t.entries()
        .iter()
        .map(|s| s.residue().expect("prime field") as u8)
        .collect()
}

fn check_params(n: usize, p: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    Field::prime(p)?;
    let size = (p as u128).checked_pow((n * n * n * n) as u32);
    match size {
        Some(s) if s <= ENUMERATION_GUARD => Ok(()),
        _ => Err(Error::GuardExceeded(format!(
            "{p}^{} candidates exceed the limit of 2^32",
            n * n * n * n
        ))),
    }
}

/// One scalar identity `Σ x_a x_b = Σ x_c x_d` between products of entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Constraint {
    lhs: Vec<(u16, u16)>,
    rhs: Vec<(u16, u16)>,
}

impl Constraint {
    fn holds(&self, x: &[u8], p: u32) -> bool {
        let sum = |terms: &[(u16, u16)]| {
            terms
                .iter()
                .map(|&(a, b)| x[a as usize] as u32 * x[b as usize] as u32)
                .sum::<u32>()
                % p
        };
        sum(&self.lhs) == sum(&self.rhs)
    }

    fn depth(&self) -> usize {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .map(|&(a, b)| a.max(b) as usize)
            .max()
            .unwrap_or(0)
    }
}

/// For each entry position, the identities whose last touched entry it is.
fn constraints_by_depth(n: usize) -> Vec<Vec<Constraint>> {
    let at = |i: usize, j: usize, u: usize, v: usize| (((i * n + j) * n + u) * n + v) as u16;
    let norm = |mut t: Vec<(u16, u16)>| {
        for pair in t.iter_mut() {
            if pair.0 > pair.1 {
                *pair = (pair.1, pair.0);
            }
        }
        t.sort_unstable();
        t
    };
    let mut all = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        for w in 0..n {
                            let a = norm((0..n).map(|k| (at(i, j, u, k), at(k, l, v, w))).collect());
                            let b = norm((0..n).map(|k| (at(j, l, v, k), at(i, k, u, w))).collect());
                            let c = norm((0..n).map(|k| (at(i, l, k, w), at(k, j, u, v))).collect());
                            for (x, y) in [(a.clone(), b.clone()), (b, c)] {
                                if x != y {
                                    all.push(Constraint { lhs: x, rhs: y });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    all.sort();
    all.dedup();
    let mut out = vec![Vec::new(); n * n * n * n];
    for c in all {
        let d = c.depth();
        out[d].push(c);
    }
    out
}

struct Search {
    p: u32,
    len: usize,
    by_depth: Vec<Vec<Constraint>>,
}

impl Search {
    fn ok_at(&self, x: &[u8], d: usize) -> bool {
        self.by_depth[d].iter().all(|c| c.holds(x, self.p))
    }

    /// Extends the assignment `x[..d]` in lexicographic order up to position `stop`.
    fn extend(&self, x: &mut Vec<u8>, stop: usize, out: &mut Vec<Vec<u8>>) {
        let d = x.len();
        if d == stop {
            out.push(x.clone());
            return;
        }
        for val in 0..self.p as u8 {
            x.push(val);
            if self.ok_at(x, d) {
                self.extend(x, stop, out);
            }
            x.pop();
        }
    }
}

/// All FS solutions over `F_p`, found by depth-first search with each scalar
/// identity checked as soon as its entries are assigned.
pub fn enumerate_fs(n: usize, p: u32, filter: Filter) -> Result<SolutionSet> {
    check_params(n, p)?;
    let len = n * n * n * n;
    let search = Search {
        p,
        len,
        by_depth: constraints_by_depth(n),
    };
    // Split on a prefix long enough to give every worker several ranges.
    let mut split = 0;
    while split < len && (p as usize).pow(split as u32) < 256 {
        split += 1;
    }
    let mut prefixes = Vec::new();
    search.extend(&mut Vec::with_capacity(len), split, &mut prefixes);
    let chunks: Vec<Vec<Vec<u8>>> = prefixes
        .into_par_iter()
        .map(|mut pre| {
            let mut out = Vec::new();
            pre.reserve(search.len - pre.len());
            search.extend(&mut pre, search.len, &mut out);
            out
        })
        .collect();
    let mut solutions: Vec<Vec<u8>> = chunks.into_iter().flatten().collect();
    solutions.sort_unstable();
    let f = Field::gf(p);
    solutions.retain(|s| filter.keeps(&to_tensor(n, f, s)));
    Ok(SolutionSet {
        n,
        p,
        filter,
        solutions,
    })
}

/// Reference enumerator: every candidate, checked in full by [`check_fs`].
pub fn naive_enumerate(n: usize, p: u32, filter: Filter) -> Result<SolutionSet> {
    check_params(n, p)?;
    let len = n * n * n * n;
    let f = Field::gf(p);
    let total = (p as u64).pow(len as u32);
    let solutions: Vec<Vec<u8>> = (0..total)
        .into_par_iter()
        .filter_map(|mut t| {
            let mut x = vec![0u8; len];
            for slot in x.iter_mut().rev() {
                *slot = (t % p as u64) as u8;
                t /= p as u64;
            }
            let r = to_tensor(n, f, &x);
            (check_fs(&r).passed && filter.keeps(&r)).then_some(x)
        })
        .collect();
    Ok(SolutionSet {
        n,
        p,
        filter,
        solutions,
    })
}

/// Every invertible `n × n` matrix over `F_p`, in lexicographic order of entries.
pub fn general_linear_group(n: usize, p: u32) -> Vec<DenseMatrix> {
    let f = Field::gf(p);
    let total = (p as u64).pow((n * n) as u32);
    (0..total)
        .filter_map(|mut t| {
            let mut ints = vec![0i64; n * n];
            for slot in ints.iter_mut().rev() {
                *slot = (t % p as u64) as i64;
                t /= p as u64;
            }
            let m = DenseMatrix::from_vec(f, n, n, ints.into_iter().map(|x| f.int(x)).collect());
            m.invert().map(|_| m)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Index of the lexicographically smallest member in the solution list.
    pub representative: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    /// Orbits ordered by representative.
    pub orbits: Vec<Orbit>,
}

impl OrbitReport {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.members.len()).collect()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.representative).collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbits of `R ↦ (u ⊗ u) R (u⁻¹ ⊗ u⁻¹)` over all of `GL_n(F_p)`.
///
/// Fails if some conjugate falls outside the set, which means the set was
/// not the complete (filtered) solution list.
pub fn classify_orbits(s: &SolutionSet) -> Result<OrbitReport> {
    let group = general_linear_group(s.n, s.p);
    let images: Vec<Vec<usize>> = (0..s.count())
        .into_par_iter()
        .map(|idx| {
            let r = s.tensor(idx);
            group
                .iter()
                .map(|u| {
                    let c = r.conjugate(u).expect("invertible");
                    s.position(&residues(&c)).ok_or_else(|| {
                        Error::InvalidInput(format!("conjugate of solution {idx} is missing from the set"))
                    })
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    let mut parent: Vec<usize> = (0..s.count()).collect();
    for (idx, imgs) in images.iter().enumerate() {
        for &j in imgs {
            let (a, b) = (find(&mut parent, idx), find(&mut parent, j));
            if a != b {
                // Keep the smaller index as root so roots are representatives.
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for idx in 0..s.count() {
        let root = find(&mut parent, idx);
        groups.entry(root).or_default().push(idx);
    }
    Ok(OrbitReport {
        orbits: groups
            .into_iter()
            .map(|(representative, members)| Orbit {
                representative,
                members,
            })
            .collect(),
    })
}
