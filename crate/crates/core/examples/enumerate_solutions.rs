//! Enumerates every FS solution in M_2(F_p) ⊗ M_2(F_p) for p = 2, 3 and
//! splits them into conjugation orbits.

use std::time::Instant;

use fs_forge::enumerate::{classify_orbits, enumerate_fs, Filter};

fn main() -> fs_forge::Result<()> {
    for p in [2, 3] {
        let t = Instant::now();
        let all = enumerate_fs(2, p, Filter::None)?;
        let elapsed = t.elapsed();
        let s = enumerate_fs(2, p, Filter::S)?.count();
        let f = enumerate_fs(2, p, Filter::FTrace)?.count();
        let orbits = classify_orbits(&all)?;
        println!(
            "p = {p}: {} solutions in {elapsed:.2?} ({s} S-normalized, {f} trace-F), {} orbits",
            all.count(),
            orbits.orbit_count()
        );
        println!("  orbit sizes: {:?}", orbits.sizes());
    }
    Ok(())
}
