//! Verifiers for structured arrays: sliced, nested, strong, and grouped
//! orthogonality.

use oars::fixtures;
use oars::spacefill::{
    verify_grouped, verify_nested, verify_sliced, verify_strong, GroupSpec, SlicePartition,
};
use oars::LevelCollapseMap;

fn main() -> oars::Result<()> {
    // four 4-run slices of a 16-run array, each collapsing to strength 2
    let a = fixtures::sliced_16_runs_3_cols();
    let p = SlicePartition::consecutive(16, 4)?;
    let maps = vec![LevelCollapseMap::floor_div(4, 2)?; 3];
    println!("{}", p.comment_header());
    println!(
        "balanced sliced structure holds: {}",
        verify_sliced(&a, &p, &maps, 2, true)?
    );
    println!(
        "first slice is nested: {}",
        verify_nested(&a, &p.blocks()[0], &maps, 2)?
    );

    // a strong array of strength 3 with 8-level columns
    let soa = fixtures::strong_8_runs_3_cols();
    println!(
        "\nstrong orthogonality of strength 3: {}",
        verify_strong(&soa, 2, 3)?
    );

    // strength 2 overall with three column groups of strength 3
    let goa = fixtures::grouped_27_runs_10_cols();
    let spec = GroupSpec::new(
        10,
        vec![vec![0, 1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
        vec![3, 3, 3],
        2,
    )?;
    println!("\n{}", spec.comment_header());
    println!(
        "grouped orthogonality holds: {}",
        verify_grouped(&goa, &spec)?
    );
    Ok(())
}
