//! The planar dynamic program and the chains it reconstructs.

use mwcp::model::{canonicalize, parse_instance};
use mwcp::solver2d::solve_2d_report;
use mwcp::EmptyPolicy;

fn main() -> mwcp::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample2d.txt").to_string());
    let text = std::fs::read_to_string(&path).expect("readable instance file");
    let instance = canonicalize(&parse_instance(&text)?);

    let report = solve_2d_report(&instance, EmptyPolicy::Allow)?;
    println!("optimum {} (from the tables: {})", report.solution.weight, report.table_weight);
    println!("leftmost {:?}, rightmost {:?}", report.leftmost, report.rightmost);
    println!("top chain    {:?}", report.top_chain);
    println!("bottom chain {:?}", report.bottom_chain);
    print!("{}", report.solution.to_text());
    Ok(())
}
