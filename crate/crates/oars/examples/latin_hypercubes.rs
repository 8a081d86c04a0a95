//! Space-filling derivatives: seeded array-based Latin hypercubes and the
//! rotation construction for orthogonal Latin hypercube designs.

use num_rational::Ratio;
use oars::construct::rao_hamming;
use oars::fixtures;
use oars::spacefill::{lin_rotation_olhd, oa_to_lhc};

fn main() -> oars::Result<()> {
    let a = fixtures::oa_9_runs_4_cols();
    let l = oa_to_lhc(&a, 42)?;
    println!("Latin hypercube from OA(9, 3^4, 2), seed 42:");
    print!("{}", l.serialize());
    println!(
        "collapsing back recovers the array: {}",
        l.collapse(3)? == a
    );

    // rotate OA(9, 3^2, 2) by the 2x2 rotation built from one centered
    // column of length 3; all result columns are mutually orthogonal
    let base = rao_hamming(3, 2)?;
    let g3: Vec<Ratio<i64>> = (-1..=1).map(Ratio::from_integer).collect();
    let m = lin_rotation_olhd(&base, &[g3])?;
    println!(
        "\nrotated design ({} runs x {} columns):",
        m.len(),
        m[0].len()
    );
    for row in &m {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
        println!("{}", cells.join(" "));
    }
    let dot: Ratio<i64> = m.iter().map(|r| r[0] * r[1]).sum();
    println!("inner product of columns 0 and 1: {dot}");
    Ok(())
}
