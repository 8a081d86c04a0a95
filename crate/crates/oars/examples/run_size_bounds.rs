//! Rao and linear-programming lower bounds on the run size of
//! OA(N, s^k, t), with the divisibility-adjusted admissible value.

use oars::bounds::bound_report;

fn main() -> oars::Result<()> {
    println!(
        "{:>3} {:>2} {:>2} {:>8} {:>12} {:>10}",
        "k", "s", "t", "rao", "lp", "admissible"
    );
    for (k, s, t) in [
        (4, 2, 2),
        (4, 2, 3),
        (11, 2, 2),
        (4, 3, 2),
        (13, 3, 2),
        (5, 4, 2),
        (6, 2, 4),
    ] {
        let r = bound_report(k, s, t)?;
        println!(
            "{:>3} {:>2} {:>2} {:>8} {:>12} {:>10}",
            k,
            s,
            t,
            r.rao.to_string(),
            format!("{}/{}", r.lp.numer(), r.lp.denom()),
            r.admissible.to_string()
        );
    }
    Ok(())
}
