//! Build orthogonal arrays from finite-field point sets and difference
//! schemes, then confirm their strength with the exhaustive verifier.

use oars::construct::{ds_expand, gf_difference_scheme, rao_hamming};

fn main() -> oars::Result<()> {
    // all points of GF(3)^2 against the 4 normalized directions
    let a = rao_hamming(3, 2)?;
    println!(
        "rao_hamming(3, 2): OA({}, 3^{}, 2), verified strength {:?}",
        a.runs(),
        a.cols(),
        a.verified_strength()
    );
    print!("{}", a.serialize());

    // GF(4) multiplication table, expanded with the extra cycling column
    let d = gf_difference_scheme(4)?;
    let b = ds_expand(&d, true)?;
    println!(
        "\nds_expand over GF(4): OA({}, 4^{}, 2)",
        b.runs(),
        b.cols()
    );
    println!("strength 2 holds: {}", b.verify_strength(2));
    println!("strength 3 holds: {}", b.verify_strength(3));
    println!("maximal strength: {}", b.max_strength());
    Ok(())
}
