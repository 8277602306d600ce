mod common;

use common::*;
use fs_forge::families::{
    gen_idempotent_square, gen_phi, gen_theta, group_algebra, phi_predicted_relations, rank_one_idempotent,
    theta_from_group, GroupTable, IdempotentMap,
};
use fs_forge::iso::{find_algebra_iso, find_coalgebra_iso};
use fs_forge::matrix::RowEchelon;
use fs_forge::subalg::{build_subalgebra, quotient_coalgebra, SubalgebraResult};
use fs_forge::{DenseMatrix, Field, FsTensor};

fn flat(m: &DenseMatrix) -> Vec<fs_forge::Scalar> {
    m.entries().to_vec()
}

fn same_span(f: Field, a: &[DenseMatrix], b: &[DenseMatrix]) -> bool {
    let cols = a.first().or(b.first()).map_or(0, |m| m.rows() * m.cols());
    let mut ea = RowEchelon::new(f, cols);
    let mut eb = RowEchelon::new(f, cols);
    a.iter().for_each(|m| {
        ea.insert(&flat(m));
    });
    b.iter().for_each(|m| {
        eb.insert(&flat(m));
    });
    ea.rows() == eb.rows()
}

#[test]
fn identity_and_switch_dimensions() {
    for f in [Field::gf(3), Field::Rational] {
        for n in [2, 3] {
            assert_eq!(build_subalgebra(&FsTensor::identity(n, f)).unwrap().dim(), 1);
            assert_eq!(build_subalgebra(&FsTensor::switch(n, f)).unwrap().dim(), n * n);
        }
    }
}

#[test]
fn rank_one_idempotent_squares_give_split_algebra() {
    for f in [Field::gf(3), Field::Rational] {
        for (r, q) in [(1, 0), (1, 2)] {
            let p = rank_one_idempotent(&f.int(r), &f.int(q));
            let res = build_subalgebra(&gen_idempotent_square(&p).unwrap()).unwrap();
            assert_eq!(res.dim(), 2, "r={r} q={q} over {f}");
            // The algebra is spanned by f and the identity.
            assert!(res.coordinates(&p).is_some());
            assert!(res.coordinates(&DenseMatrix::identity(f, 2)).is_some());
            let split = fs_forge::algebra::StructAlgebra::split(2, f);
            let idem = p.clone();
            let comp = DenseMatrix::identity(f, 2).sub(&p);
            let rebased = res
                .rebase(&DenseMatrix::from_rows(
                    f,
                    vec![res.coordinates(&idem).unwrap(), res.coordinates(&comp).unwrap()],
                ))
                .unwrap();
            assert!(find_algebra_iso(rebased.algebra(), &split).unwrap().is_some());
        }
    }
}

#[test]
fn subalgebra_dimension_matches_counting_oracle() {
    let p = 3;
    let f = Field::gf(p);
    let mut cases = vec![
        FsTensor::identity(2, f),
        FsTensor::switch(2, f),
        tensor_from_rows(&F3_CORRECTED, f),
    ];
    cases.extend(IdempotentMap::all(2).iter().map(|m| gen_phi(m, f).unwrap()));
    for t in cases {
        let res = build_subalgebra(&t).unwrap();
        assert_eq!(res.dim(), oracle_subalgebra_dim(&residues(&t), 2, i64::from(p)));
    }
}

#[test]
fn phi_subalgebras_agree_with_predicted_relations() {
    // Two descriptions of A(n, R^φ): the solver's kernel and the closed-form
    // relations in terms of φ. Exhaustive over idempotent maps of {1,…,4}.
    let f = Field::gf(2);
    for m in IdempotentMap::all(4) {
        let t = gen_phi(&m, f).unwrap();
        let res = build_subalgebra(&t).unwrap();
        let rel = phi_predicted_relations(&m, f);
        let predicted = rel.nullspace_basis();
        assert_eq!(res.dim(), predicted.len(), "φ = {:?}", m.map());
        for b in res.basis() {
            assert!(rel.mul_vec(&flat(b)).iter().all(|x| x.is_zero()));
        }
        assert_eq!(
            res.dim(),
            oracle_subalgebra_dim(&residues(&t), 4, 2),
            "φ = {:?}",
            m.map()
        );
    }
}

#[test]
fn phi_examples_have_displayed_parameter_patterns() {
    let f = Field::gf(5);
    let cases = [
        (vec![1, 1, 3, 3], phi_example_pattern_one()),
        (vec![0, 1, 1, 1], phi_example_pattern_two()),
    ];
    for (map, pattern) in cases {
        let res = build_subalgebra(&gen_phi(&IdempotentMap::new(map.clone()).unwrap(), f).unwrap()).unwrap();
        assert_eq!(res.dim(), 6, "φ = {map:?}");
        let shown: Vec<DenseMatrix> = pattern.iter().map(|m| pattern_matrix(f, m)).collect();
        assert!(same_span(f, res.basis(), &shown), "φ = {map:?}");
    }
}

fn phi_one(f: Field) -> (FsTensor, SubalgebraResult) {
    let t = gen_phi(&IdempotentMap::new(vec![1, 1, 3, 3]).unwrap(), f).unwrap();
    let res = build_subalgebra(&t).unwrap();
    (t, res)
}

#[test]
fn phi_example_coalgebra_table() {
    let f = Field::gf(5);
    let (t, res) = phi_one(f);
    let q = quotient_coalgebra(&t, &res).unwrap();
    assert_eq!(q.dim(), 6);
    let cls = |i, j| q.class_of(i, j).to_vec();
    let elems = vec![cls(0, 0), cls(1, 1), cls(2, 2), cls(3, 3), cls(0, 2), cls(2, 0)];
    let ours = q.in_basis(&elems).unwrap();
    let shown = phi_example_coalgebra(f);
    let m = find_coalgebra_iso(&ours, &shown).unwrap().expect("basis match");
    assert_eq!(m.perm, vec![0, 1, 2, 3, 4, 5]);
    assert_eq!(ours, shown);
}

#[test]
fn phi_example_two_coalgebra_dimension() {
    let f = Field::gf(5);
    let t = gen_phi(&IdempotentMap::new(vec![0, 1, 1, 1]).unwrap(), f).unwrap();
    let res = build_subalgebra(&t).unwrap();
    let q = quotient_coalgebra(&t, &res).unwrap();
    assert_eq!(q.dim(), 6);
    assert!(q.coalgebra().validate().passed);
}

#[test]
fn theta_group_tensor_gives_circulants() {
    let f = Field::gf(5);
    for n in [2, 3, 4] {
        let g = GroupTable::cyclic(n);
        let t = gen_theta(&theta_from_group(&g), &f.one()).unwrap();
        let res = build_subalgebra(&t).unwrap();
        assert_eq!(res.dim(), n);
        // A_g has a single 1 in each row i, at column g·i.
        let coords: Vec<Vec<fs_forge::Scalar>> = (0..n)
            .map(|h| {
                let a = DenseMatrix::from_rows(
                    f,
                    (0..n)
                        .map(|i| (0..n).map(|j| f.int(i64::from(j == g.mul(h, i)))).collect())
                        .collect(),
                );
                res.coordinates(&a).expect("A_g lies in the algebra")
            })
            .collect();
        let rebased = res.rebase(&DenseMatrix::from_rows(f, coords)).unwrap();
        let kg = group_algebra(&g, f);
        assert!(find_algebra_iso(rebased.algebra(), &kg).unwrap().is_some(), "C_{n}");
    }
}

#[test]
fn reconstruction_recovers_the_tensor() {
    let f = Field::gf(3);
    for t in [tensor_from_rows(&F3_CORRECTED, f), FsTensor::switch(3, f)] {
        let res = build_subalgebra(&t).unwrap();
        assert_eq!(res.reconstruct(), t);
    }
}
