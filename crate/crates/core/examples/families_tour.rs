//! One tensor from every built-in family, with its normalization verdicts.

use fs_forge::families::{
    gen_cocycle, gen_column_idempotent, gen_group_integral, gen_idempotent_square, gen_permutation_family, gen_phi,
    gen_theta, rank_one_idempotent, theta_from_group, Cocycle2, GroupTable, IdempotentMap,
};
use fs_forge::verify::{check_f_trace, check_fs, check_s};
use fs_forge::{DenseMatrix, Field, FsTensor};

fn main() -> fs_forge::Result<()> {
    let f = Field::gf(5);
    let c3 = GroupTable::cyclic(3);
    let third = f.inverse_of_int(3).expect("3 is a unit mod 5");
    let tensors: Vec<(&str, FsTensor)> = vec![
        ("identity n=3", FsTensor::identity(3, f)),
        ("switch n=3", FsTensor::switch(3, f)),
        ("column idempotent n=3, j=2", gen_column_idempotent(3, 2, f)?),
        (
            "group integral S_3",
            gen_group_integral(&GroupTable::symmetric3(), f)?.tensor,
        ),
        ("cocycle C_3 (trivial)", gen_cocycle(&c3, &Cocycle2::trivial(&c3, f))?),
        (
            "cocycle C_3, scaled by 1/3",
            gen_cocycle(&c3, &Cocycle2::trivial(&c3, f))?.scale(&third),
        ),
        ("θ from C_3, a = 1/3", gen_theta(&theta_from_group(&c3), &third)?),
        ("φ = id on 4 points", gen_phi(&IdempotentMap::identity(4), f)?),
        ("φ = (2,2,4,4)", gen_phi(&IdempotentMap::new(vec![1, 1, 3, 3])?, f)?),
        (
            "permutation a = δ",
            gen_permutation_family(&DenseMatrix::identity(f, 2))?,
        ),
        (
            "rank-one idempotent r=1, q=2",
            gen_idempotent_square(&rank_one_idempotent(&f.int(1), &f.int(2)))?,
        ),
    ];
    for (name, t) in &tensors {
        println!(
            "{name:<30} n={}  fs {:<5}  s {:<5}  f {}",
            t.n(),
            check_fs(t).passed,
            check_s(t).passed,
            check_f_trace(t).passed
        );
    }
    Ok(())
}
