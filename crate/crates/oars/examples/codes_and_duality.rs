//! Linear codes over GF(s), their duals, and the array whose strength is
//! one less than the dual minimum distance.

use oars::codes::LinearCode;
use oars::fixtures;
use oars::galois::GaloisField;

fn main() -> oars::Result<()> {
    let field = GaloisField::new(2)?;
    let code = LinearCode::from_generator(field, 3, 7, fixtures::code_7_8_4_generator())?;
    println!(
        "code: [{}, {}] over GF(2), {} words, minimum distance {}",
        code.length(),
        code.dim(),
        code.word_count(),
        code.min_distance()?
    );

    let dual = code.dual()?;
    println!(
        "dual: [{}, {}], {} words, minimum distance {}",
        dual.length(),
        dual.dim(),
        dual.word_count(),
        dual.min_distance()?
    );

    let a = code.to_oa()?;
    println!(
        "codewords as rows: OA({}, 2^{}, {})",
        a.runs(),
        a.cols(),
        a.verified_strength().unwrap()
    );
    println!(
        "strength = dual distance - 1: {}",
        a.verified_strength().unwrap() == dual.min_distance()? - 1
    );
    Ok(())
}
