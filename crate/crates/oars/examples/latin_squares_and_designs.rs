//! Mutually orthogonal Latin squares as strength-2 arrays, and balanced
//! incomplete block designs derived from Hadamard matrices.

use oars::construct::{
    bibd_complement, bibd_residual, hadamard_to_sbibd, mols_to_oa, oa_to_mols, sylvester,
    LatinSquareSet,
};
use oars::fixtures;

fn main() -> oars::Result<()> {
    let set = LatinSquareSet::new(4, fixtures::mols_order_4())?;
    let a = mols_to_oa(&set)?;
    println!(
        "{} MOLS of order 4 -> OA({}, 4^{}, 2)",
        set.count(),
        a.runs(),
        a.cols()
    );
    let back = oa_to_mols(&a)?;
    println!("round trip recovers the squares: {}", back == set);

    let design = hadamard_to_sbibd(&sylvester(3)?)?;
    let (v, b, r, k, l) = design.params();
    println!("\nprojective plane from sylvester(3): BIBD({v}, {b}, {r}, {k}, {l})");
    let (v, b, r, k, l) = bibd_complement(&design)?.params();
    println!("complement: BIBD({v}, {b}, {r}, {k}, {l})");
    let (v, b, r, k, l) = bibd_residual(&design, 0)?.params();
    println!("residual of block 0: BIBD({v}, {b}, {r}, {k}, {l})");
    Ok(())
}
