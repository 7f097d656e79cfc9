//! Inspecting edge weights, angular orders and the chain tables on a small input.

use mwcp::geometry::integer;
use mwcp::solver2d::Prepared;
use mwcp::{Instance, Point, WeightedPoint};

fn main() -> mwcp::Result<()> {
    let points = [([0, 0], 1), ([4, 0], 1), ([2, 3], 1), ([2, 1], -1), ([1, 2], 1)]
        .into_iter()
        .map(|(p, w)| WeightedPoint::new(Point::from_integers(&p), integer(w)))
        .collect();
    let prepared = Prepared::new(&Instance::new(2, points)?)?;
    let cand = prepared.candidates();
    println!("candidates by x: {cand:?} (machine integers: {})", prepared.uses_machine_integers());

    let edges = prepared.edge_weights();
    for i in 0..cand.len() {
        for j in i + 1..cand.len() {
            println!("w_top({i},{j}) = {:>2}   w_bot({i},{j}) = {:>2}", edges.top(i, j), edges.bottom(i, j));
        }
    }
    let lists = prepared.angular_lists();
    for j in 0..cand.len() {
        println!("L_{j} = {:?}  R_{j} = {:?}", lists.left[j], lists.right[j]);
    }
    let tables = prepared.tables();
    for k in 0..cand.len() {
        for i in 0..=k {
            println!("M[{i},{k}] = {}", tables.m(i, k));
        }
    }
    Ok(())
}
