mod common;

use common::*;
use fs_forge::algebra::{
    central_space, characteristic_element, check_dual_basis, frobenius_pair, separability_idempotent, CentralElement,
    StructAlgebra,
};
use fs_forge::coalgebra::{dual_coalgebra, fsmap_space};
use fs_forge::families::{
    gen_cocycle, gen_column_idempotent, gen_group_integral, gen_permutation_family, gen_phi, gen_theta, group_algebra,
    theta_from_action, theta_from_group, Cocycle2, GroupTable, IdempotentMap, ThetaMap,
};
use fs_forge::module::ModuleRep;
use fs_forge::verify::{check_f_trace, check_fs, check_s};
use fs_forge::wf::{coaction_from_unit, fs_object_check, wf_check, wf_comul_from_central};
use fs_forge::{DenseMatrix, Field, Scalar};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn displayed_characteristic_two_matrix_is_a_solution() {
    let t = tensor_from_rows(&F2_DISPLAYED, Field::gf(2));
    assert!(check_fs(&t).passed);
    assert!(oracle_fs(&residues(&t), 2, 2));
}

#[test]
fn displayed_characteristic_three_matrix_fails_as_printed() {
    let f = Field::gf(3);
    let printed = tensor_from_rows(&F3_DISPLAYED, f);
    assert!(!check_fs(&printed).passed);
    assert!(!oracle_fs(&residues(&printed), 2, 3));
    let fixed = tensor_from_rows(&F3_CORRECTED, f);
    assert!(check_fs(&fixed).passed);
    assert!(oracle_fs(&residues(&fixed), 2, 3));
}

#[test]
fn phi_normalizations_iff_identity() {
    for f in [Field::gf(2), Field::gf(5), Field::Rational] {
        for m in IdempotentMap::all(4) {
            let t = gen_phi(&m, f).unwrap();
            assert!(check_fs(&t).passed);
            assert_eq!(check_s(&t).passed, m.is_identity(), "{:?}", m.map());
            assert_eq!(check_f_trace(&t).passed, m.is_identity(), "{:?}", m.map());
        }
    }
}

#[test]
fn column_idempotent_is_s_but_not_f() {
    for f in [Field::gf(3), Field::Rational] {
        for n in [2, 3] {
            for j in 1..=n {
                let t = gen_column_idempotent(n, j, f).unwrap();
                assert!(check_s(&t).passed);
                assert!(!check_f_trace(&t).passed);
            }
        }
    }
}

fn all_matrices(f: Field, n: usize) -> Vec<DenseMatrix> {
    let els = f.elements().unwrap();
    let q = els.len();
    (0..q.pow((n * n) as u32))
        .map(|mut code| {
            let v: Vec<Scalar> = (0..n * n)
                .map(|_| {
                    let x = els[code % q].clone();
                    code /= q;
                    x
                })
                .collect();
            DenseMatrix::from_vec(f, n, n, v)
        })
        .collect()
}

fn trace(a: &DenseMatrix) -> Scalar {
    let f = a.field();
    (0..a.rows()).fold(f.zero(), |acc, i| &acc + &a[(i, i)])
}

#[test]
fn permutation_family_normalizations() {
    // The S check on this family reduces to tr(a) = 1; trace-F to a = δ.
    let f = Field::gf(3);
    for a in all_matrices(f, 2) {
        let t = gen_permutation_family(&a).unwrap();
        assert!(check_fs(&t).passed);
        assert_eq!(check_f_trace(&t).passed, a.is_identity());
        assert_eq!(check_s(&t).passed, trace(&a).is_one());
    }
}

#[test]
fn cocycle_tensors_scaled_by_group_order_are_s_normalized() {
    for p in [5, 7] {
        let f = Field::gf(p);
        let units: Vec<Scalar> = f.elements().unwrap().into_iter().filter(|x| !x.is_zero()).collect();
        for n in [2usize, 3] {
            let g = GroupTable::cyclic(n);
            let inv_order = f.inverse_of_int(n as i64).unwrap();
            // Coboundaries σ(a,b) = λ(a)λ(b)/λ(ab) with λ(0) = 1, over every choice of λ.
            let choices = units.len().pow((n - 1) as u32);
            for mut code in 0..choices {
                let mut lambda = vec![f.one()];
                for _ in 1..n {
                    lambda.push(units[code % units.len()].clone());
                    code /= units.len();
                }
                let sigma = DenseMatrix::from_rows(
                    f,
                    (0..n)
                        .map(|a| {
                            (0..n)
                                .map(|b| &(&lambda[a] * &lambda[b]) * &lambda[g.mul(a, b)].inv().unwrap())
                                .collect()
                        })
                        .collect(),
                );
                let c = Cocycle2::new(&g, sigma).unwrap();
                let t = gen_cocycle(&g, &c).unwrap();
                assert!(check_fs(&t).passed);
                assert!(check_s(&t.scale(&inv_order)).passed);
            }
        }
    }
}

#[test]
fn theta_tensors_from_groups_and_actions() {
    let f = Field::gf(5);
    for g in [GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()] {
        let th = theta_from_group(&g);
        let a = f.inverse_of_int(g.order() as i64).unwrap();
        let t = gen_theta(&th, &a).unwrap();
        assert!(check_fs(&t).passed);
        assert!(check_s(&t).passed);
        assert!(check_f_trace(&t).passed);
        // The regular action gives the same θ.
        let action: Vec<Vec<usize>> = (0..g.order())
            .map(|x| (0..g.order()).map(|y| g.mul(x, y)).collect())
            .collect();
        assert_eq!(theta_from_action(&g, &action).unwrap(), th);
    }
    // A table breaking the exchange laws is rejected.
    assert!(ThetaMap::new(2, vec![0; 8]).is_err());
}

#[test]
fn group_algebra_certification() {
    for p in [2u32, 3, 5] {
        let f = Field::gf(p);
        for n in 1..=4usize {
            let g = GroupTable::cyclic(n);
            let a = group_algebra(&g, f);
            let pair = frobenius_pair(&a).unwrap().expect("group algebras are Frobenius");
            assert!(check_dual_basis(&a, &pair).passed);
            let separable = separability_idempotent(&a).unwrap().is_some();
            assert_eq!(separable, gcd(n as u32, p) == 1, "C_{n} over F_{p}");
            let ch = characteristic_element(&a, &pair.e).unwrap();
            let mut n_one = vec![f.zero(); n];
            n_one[0] = f.int(n as i64);
            assert_eq!(ch.omega, n_one);
            assert_eq!(ch.invertible, separable);
            let gi = gen_group_integral(&g, f).unwrap();
            assert_eq!(gi.pair.e, pair.e);
            assert_eq!(gi.pair.eps, pair.eps);
        }
    }
}

fn test_algebras() -> Vec<(&'static str, StructAlgebra)> {
    vec![
        ("M_2(F_3)", StructAlgebra::matrix(2, Field::gf(3))),
        ("F_3C_2", group_algebra(&GroupTable::cyclic(2), Field::gf(3))),
        ("F_2C_2", group_algebra(&GroupTable::cyclic(2), Field::gf(2))),
        ("F_2×F_2", StructAlgebra::split(2, Field::gf(2))),
    ]
}

#[test]
fn central_elements_and_fsmaps_have_equal_dimension() {
    for (name, a) in test_algebras() {
        assert_eq!(
            central_space(&a).unwrap().len(),
            fsmap_space(&dual_coalgebra(&a)).len(),
            "{name}"
        );
    }
}

#[test]
fn central_comultiplications_are_wf_and_give_fs_objects() {
    for (name, a) in test_algebras() {
        for e in central_space(&a).unwrap() {
            let e = CentralElement::new(&a, e).unwrap();
            let c = wf_comul_from_central(&a, &e);
            assert!(wf_check(&a, &c).unwrap().passed, "{name}");
            let md = coaction_from_unit(&a, &c, &ModuleRep::regular(&a)).unwrap();
            assert!(fs_object_check(&a, &c, &md).unwrap().passed, "{name}");
        }
    }
}
