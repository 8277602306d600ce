//! Comultiplications Δ_e(a) = Σ e²a ⊗ e¹ from central elements, their WF
//! compatibility, and the induced coaction on the regular module.

use fs_forge::algebra::{central_space, CentralElement, StructAlgebra};
use fs_forge::families::{group_algebra, GroupTable};
use fs_forge::module::ModuleRep;
use fs_forge::wf::{coaction_from_unit, fs_object_check, wf_check, wf_comul_from_central};
use fs_forge::Field;

fn main() -> fs_forge::Result<()> {
    let algebras = [
        ("F_2C_2", group_algebra(&GroupTable::cyclic(2), Field::gf(2))),
        ("F_3C_2", group_algebra(&GroupTable::cyclic(2), Field::gf(3))),
        ("M_2(F_3)", StructAlgebra::matrix(2, Field::gf(3))),
    ];
    for (name, a) in &algebras {
        let basis = central_space(a)?;
        let mut wf = 0;
        let mut objects = 0;
        for e in &basis {
            let e = CentralElement::new(a, e.clone())?;
            let c = wf_comul_from_central(a, &e);
            wf += usize::from(wf_check(a, &c)?.passed);
            let m = coaction_from_unit(a, &c, &ModuleRep::regular(a))?;
            objects += usize::from(fs_object_check(a, &c, &m)?.passed);
        }
        println!(
            "{name}: {} central basis elements, {wf} WF comultiplications, {objects} FS-objects",
            basis.len()
        );
    }
    Ok(())
}
