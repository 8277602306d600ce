//! Checks the two 4×4 matrices shown as FS solutions over F_2 and F_3, plus a
//! one-entry correction of the second, against every verifier.

use fs_forge::verify::{check_braid, check_f_trace, check_fs, check_kz, check_qyb, check_s, CheckReport};
use fs_forge::{DenseMatrix, Field, FsTensor};

fn tensor(p: u32, rows: [[i64; 4]; 4]) -> FsTensor {
    let f = Field::gf(p);
    let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    FsTensor::from_matrix(&DenseMatrix::from_ints(f, &rows)).expect("4×4 is n = 2")
}

fn show(name: &str, r: &CheckReport) {
    match &r.witness {
        None => println!("  {name:<6} pass"),
        Some(w) => {
            let at: Vec<usize> = w.indices.iter().map(|i| i + 1).collect();
            println!("  {name:<6} fail at {at:?}: {} ≠ {}", w.lhs, w.rhs)
        }
    }
}

fn main() {
    let cases = [
        ("F_2", 2, [[1, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 1]]),
        (
            "F_3 as printed",
            3,
            [[1, 0, 0, 1], [0, 1, 1, 2], [0, 1, 1, 2], [1, 2, 2, 1]],
        ),
        (
            "F_3, (4,4) = 2",
            3,
            [[1, 0, 0, 1], [0, 1, 1, 2], [0, 1, 1, 2], [1, 2, 2, 2]],
        ),
    ];
    for (name, p, rows) in cases {
        let t = tensor(p, rows);
        println!("{name}:");
        show("fs", &check_fs(&t));
        show("s", &check_s(&t));
        show("f", &check_f_trace(&t));
        show("braid", &check_braid(&t));
        show("qyb", &check_qyb(&t));
        show("kz", &check_kz(&t));
    }
}
