//! Separability and Frobenius certificates for k[C_n] over small prime fields.

use fs_forge::algebra::{characteristic_element, check_dual_basis, frobenius_pair, separability_idempotent};
use fs_forge::families::{group_algebra, GroupTable};
use fs_forge::Field;

fn main() -> fs_forge::Result<()> {
    for p in [2, 3, 5] {
        for n in 1..=4 {
            let a = group_algebra(&GroupTable::cyclic(n), Field::gf(p));
            let separable = separability_idempotent(&a)?.is_some();
            let pair = frobenius_pair(&a)?.expect("group algebras are Frobenius");
            let dual = check_dual_basis(&a, &pair).passed;
            let ch = characteristic_element(&a, &pair.e)?;
            let show = |v: &[fs_forge::Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
            println!(
                "F_{p}C_{n}: separable {separable:<5}  ε = [{}]  dual basis {dual}  ω = [{}] invertible {}",
                show(&pair.eps),
                show(&ch.omega),
                ch.invertible
            );
        }
    }
    Ok(())
}
