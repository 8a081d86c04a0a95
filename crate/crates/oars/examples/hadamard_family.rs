//! Sylvester and Paley Hadamard matrices, their two-level orthogonal
//! arrays, and the doubling construction that reaches strength 3.

use oars::construct::{hadamard_double, hadamard_to_oa, paley1, paley2, sylvester};

fn main() -> oars::Result<()> {
    let h8 = sylvester(3)?;
    println!("sylvester(3), order {}:", h8.order());
    print!("{}", h8.serialize());

    let a = hadamard_to_oa(&h8)?;
    println!(
        "\nas an array: OA({}, 2^{}, 2), maximal strength {}",
        a.runs(),
        a.cols(),
        a.max_strength()
    );

    let d = hadamard_double(&h8)?;
    println!(
        "doubled: OA({}, 2^{}, {})",
        d.runs(),
        d.cols(),
        d.verified_strength().unwrap()
    );

    for q in [11usize, 19] {
        let h = paley1(q)?;
        println!("paley1({q}) has order {}", h.order());
    }
    for q in [5usize, 13] {
        let h = paley2(q)?;
        println!("paley2({q}) has order {}", h.order());
    }
    Ok(())
}
