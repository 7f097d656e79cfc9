//! Timing the planar solver and fitting the growth exponent.

use mwcp::bench::{run_bench, Algo};
use mwcp::generators::WeightRange;

fn main() -> mwcp::Result<()> {
    let sizes: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("sizes are integers"))
        .collect();
    let sizes = if sizes.is_empty() { vec![100, 200, 400] } else { sizes };
    let report = run_bench(Algo::Dp2d, &sizes, 0, 3, WeightRange::default())?;
    print!("{}", report.to_csv());
    if let Some(slope) = report.slope {
        println!("log-log slope: {slope:.2}");
    }
    Ok(())
}
