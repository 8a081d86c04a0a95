//! Quality metrics for two-level arrays: J-characteristics, generalized
//! resolution, and the regularity test.

use oars::fixtures;
use oars::metrics::SignedTwoLevelView;

fn main() -> oars::Result<()> {
    // a regular design: the 8-run half fraction
    let reg = SignedTwoLevelView::from_oa(&fixtures::oa_8_runs_4_cols())?;
    println!(
        "8-run half fraction: regular = {}, max |J_4| = {}",
        reg.is_regular()?,
        reg.max_j(4)?
    );

    // a nonregular design: the 12-run saturated array
    let pb = SignedTwoLevelView::from_oa(&fixtures::oa_12_runs_11_cols())?;
    println!("\n12-run saturated array: regular = {}", pb.is_regular()?);
    println!(
        "J_3 on columns {{0,1,2}} = {}",
        pb.j_characteristic(&[0, 1, 2])?
    );
    println!("max |J_3| over all triples = {}", pb.max_j(3)?);
    let gr = pb.generalized_resolution()?;
    println!("generalized resolution = {}/{}", gr.numer(), gr.denom());
    Ok(())
}
