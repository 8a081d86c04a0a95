//! Grow small strength-2 arrays into larger ones: Kronecker composition
//! with a difference scheme, and the recursive column-count expansion.

use oars::bounds::rao_bound;
use oars::construct::{ds_expand, gf_difference_scheme, he_expand, kronecker_oa};
use oars::OrthogonalArray;

fn main() -> oars::Result<()> {
    let d = gf_difference_scheme(3)?;
    let b = ds_expand(&d, true)?; // OA(9, 3^4, 2)

    let c = kronecker_oa(&b, &d)?;
    println!("kronecker composition: OA({}, 3^{}, 2)", c.runs(), c.cols());

    // recursive expansion with A a single balanced column and B three
    // stacked copies of the 9-run array
    let mut cells = Vec::new();
    for _ in 0..3 {
        for row in b.rows() {
            cells.extend_from_slice(row);
        }
    }
    let stacked = OrthogonalArray::fixed_level(3, b.cols(), cells)?;
    let col = OrthogonalArray::fixed_level(3, 1, vec![0, 1, 2])?;
    let e = he_expand(&col, &stacked)?;
    println!("recursive expansion: OA({}, 3^{}, 2)", e.runs(), e.cols());
    println!(
        "Rao bound for 3^{} at strength 2: {} runs (attained: {})",
        e.cols(),
        rao_bound(e.cols(), 3, 2)?,
        rao_bound(e.cols(), 3, 2)? == e.runs().into()
    );
    Ok(())
}
