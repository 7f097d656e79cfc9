//! Rational near-regular polygons with a negative point outside each edge.

use mwcp::generators::gen_ngon_family;
use mwcp::solver2d::solve_2d;
use mwcp::EmptyPolicy;

fn main() -> mwcp::Result<()> {
    for n in [3, 5, 8, 13, 21] {
        let instance = gen_ngon_family(n)?;
        let solution = solve_2d(&instance, EmptyPolicy::Allow)?;
        println!(
            "n = {n:>2}: optimum {:>2} with {:>2} hull vertices, offset {}",
            solution.weight,
            solution.hull.len(),
            instance.meta["delta"]
        );
    }
    Ok(())
}
