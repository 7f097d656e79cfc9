//! One-dimensional instances reduce to a maximum-sum run of x-sorted weights.

use mwcp::geometry::integer;
use mwcp::solver1d::{max_subarray, solve_1d};
use mwcp::{EmptyPolicy, Instance, Point, WeightedPoint};

fn main() -> mwcp::Result<()> {
    let weights = [-2, 3, -1, 4, -6, 2].map(integer);
    if let Some((start, end, sum)) = max_subarray(&weights) {
        println!("best run: positions {start}..={end}, sum {sum}");
    }

    // same weights, shuffled positions
    let xs = [10, 0, 7, 3, 5, 1];
    let points = xs
        .iter()
        .zip([2, -2, -6, -1, 4, 3])
        .map(|(&x, w)| WeightedPoint::new(Point::from_integers(&[x]), integer(w)))
        .collect();
    let instance = Instance::new(1, points)?;
    print!("{}", solve_1d(&instance, EmptyPolicy::Allow)?.to_text());
    Ok(())
}
