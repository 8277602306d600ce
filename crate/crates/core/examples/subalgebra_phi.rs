//! The algebra A(4, R^φ) and the coalgebra C(R^φ) for φ(1)=φ(2)=2, φ(3)=φ(4)=4,
//! written in the basis c¹₁, c²₂, c³₃, c⁴₄, c¹₃, c³₁.

use fs_forge::families::{gen_phi, IdempotentMap};
use fs_forge::subalg::{build_subalgebra, certify_subalgebra, quotient_coalgebra};
use fs_forge::Field;

fn main() -> fs_forge::Result<()> {
    let f = Field::gf(5);
    let phi = IdempotentMap::new(vec![1, 1, 3, 3])?;
    let r = gen_phi(&phi, f)?;
    let res = build_subalgebra(&r)?;
    println!("dim A(4, R^φ) = {}", res.dim());
    for (k, b) in res.basis().iter().enumerate() {
        println!("B_{}:\n{b}", k + 1);
    }
    let cert = certify_subalgebra(&res, &r)?;
    println!(
        "R central: {}, separability idempotent: {}, Frobenius: {}",
        cert.central, cert.separable, cert.frobenius
    );

    let q = quotient_coalgebra(&r, &res)?;
    let cls = |i, j| q.class_of(i, j).to_vec();
    let basis = vec![cls(0, 0), cls(1, 1), cls(2, 2), cls(3, 3), cls(0, 2), cls(2, 0)];
    let c = q.in_basis(&basis)?;
    let d = c.dim();
    for k in 0..d {
        let terms: Vec<String> = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .filter(|&(i, j)| !c.d(k, i, j).is_zero())
            .map(|(i, j)| format!("{}·x{}⊗x{}", c.d(k, i, j), i + 1, j + 1))
            .collect();
        let eps = &c.counit().expect("quotient has a counit")[k];
        println!("Δ(x{}) = {}   ε = {eps}", k + 1, terms.join(" + "));
    }
    Ok(())
}
