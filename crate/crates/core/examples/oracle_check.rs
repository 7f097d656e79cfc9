//! Cross-checking the planar solver against exhaustive search on seeded instances.

use mwcp::generators::{gen_uniform, WeightRange};
use mwcp::oracle::{solve_bruteforce, DEFAULT_LIMIT};
use mwcp::solver2d::solve_2d;
use mwcp::EmptyPolicy;

fn main() -> mwcp::Result<()> {
    let weights = WeightRange::new(-4, 3)?;
    for seed in 0..20 {
        let instance = gen_uniform(14, 2, seed, weights)?;
        let fast = solve_2d(&instance, EmptyPolicy::Allow)?;
        let slow = solve_bruteforce(&instance, EmptyPolicy::Allow, DEFAULT_LIMIT)?;
        println!("seed {seed:>2}: dp {:>3}  oracle {:>3}", fast.weight, slow.weight);
        assert_eq!(fast.weight, slow.weight);
    }
    Ok(())
}
