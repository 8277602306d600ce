//! FS-maps on the comatrix coalgebra M²(F_3), a coseparability form, and the
//! algebra an FS-map induces.

use fs_forge::algebra::{central_space, StructAlgebra};
use fs_forge::coalgebra::{
    check_fsmap, comatrix_trace_form, coseparability_check, coseparability_form, dual_coalgebra, fsmap_space,
    mult_from_fsmap, StructCoalgebra,
};
use fs_forge::Field;

fn main() -> fs_forge::Result<()> {
    let f = Field::gf(3);
    let c = StructCoalgebra::comatrix(2, f);
    let space = fsmap_space(&c);
    println!("FS-maps on M²(F_3): dimension {}", space.len());

    let sigma = comatrix_trace_form(2, f);
    println!(
        "σ(c_ij ⊗ c_kl) = δ_kj δ_il is an FS-map: {}",
        check_fsmap(&c, &sigma).passed
    );
    println!("  coseparability: {}", coseparability_check(&c, &sigma)?.passed);
    let half = sigma.scale(&f.inverse_of_int(2).expect("2 is a unit mod 3"));
    println!("  2⁻¹σ coseparability: {}", coseparability_check(&c, &half)?.passed);

    if let Some(form) = coseparability_form(&c)? {
        let a = mult_from_fsmap(&c, &form)?;
        println!("induced algebra: dim {}, axioms {}", a.dim(), a.validate().passed);
    }

    let m = StructAlgebra::matrix(2, f);
    println!(
        "central elements of M_2 ⊗ M_2: {}, FS-maps on the dual: {}",
        central_space(&m)?.len(),
        fsmap_space(&dual_coalgebra(&m)).len()
    );
    Ok(())
}
