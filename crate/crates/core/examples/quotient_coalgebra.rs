//! The coalgebra C(R) as a quotient of the comatrix coalgebra, for the switch
//! map, a rank-one idempotent square, and the corrected F_3 solution.

use fs_forge::algebra::evaluate;
use fs_forge::coalgebra::StructCoalgebra;
use fs_forge::families::{gen_idempotent_square, rank_one_idempotent};
use fs_forge::subalg::{build_subalgebra, quotient_coalgebra};
use fs_forge::{DenseMatrix, Field, FsTensor, Scalar};

/// Elements with Δ(g) = g ⊗ g and ε(g) = 1, by scanning the whole space.
fn grouplikes(c: &StructCoalgebra) -> usize {
    let els = c.field().elements().expect("finite field");
    let d = c.dim();
    let eps = c.counit().expect("counit");
    (0..els.len().pow(d as u32))
        .filter(|&code| {
            let mut k = code;
            let g: Vec<Scalar> = (0..d)
                .map(|_| {
                    let x = els[k % els.len()].clone();
                    k /= els.len();
                    x
                })
                .collect();
            let tensor: Vec<Scalar> = g.iter().flat_map(|a| g.iter().map(move |b| a * b)).collect();
            evaluate(eps, &g).is_one() && c.coproduct(&g) == tensor
        })
        .count()
}

fn main() -> fs_forge::Result<()> {
    let f = Field::gf(3);
    let corrected = FsTensor::from_matrix(&DenseMatrix::from_ints(
        f,
        &[&[1, 0, 0, 1], &[0, 1, 1, 2], &[0, 1, 1, 2], &[1, 2, 2, 2]],
    ))?;
    let cases = [
        ("switch n=2", FsTensor::switch(2, f)),
        (
            "f ⊗ f, r=1 q=0",
            gen_idempotent_square(&rank_one_idempotent(&f.int(1), &f.int(0)))?,
        ),
        ("corrected F_3 solution", corrected),
    ];
    for (name, r) in cases {
        let res = build_subalgebra(&r)?;
        let q = quotient_coalgebra(&r, &res)?;
        let reps: Vec<String> = q
            .representatives()
            .iter()
            .map(|(i, j)| format!("c{}{}", i + 1, j + 1))
            .collect();
        let d = q.dim();
        let g = grouplikes(q.coalgebra());
        println!(
            "{name}: dim C(R) = {d} (A(R) has dim {}), {} coideal generators, representatives {}, {g} grouplike elements",
            res.dim(),
            q.generators().len(),
            reps.join(" ")
        );
    }
    Ok(())
}
