//! Maximum independent set through a 4D instance, and back.

use mwcp::oracle::{solve_bruteforce, DEFAULT_LIMIT};
use mwcp::reduction::{
    decode_solution, independence_number, reduce_is_to_mwcp, verify_edge_gadget, Graph, DEFAULT_GADGET_VERTEX_LIMIT,
};
use mwcp::EmptyPolicy;

fn main() -> mwcp::Result<()> {
    // a 5-cycle with one chord
    let graph = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    let instance = reduce_is_to_mwcp(&graph);
    println!("{} points in 4D for {} vertices, {} edges", instance.len(), graph.n_vertices(), graph.edges().len());

    let report = verify_edge_gadget(&instance, DEFAULT_GADGET_VERTEX_LIMIT)?;
    println!("gadget check: {} subsets, {} violations", report.subsets, report.violations.len());

    let solution = solve_bruteforce(&instance, EmptyPolicy::Allow, DEFAULT_LIMIT)?;
    let set = decode_solution(&instance, &solution)?;
    println!("optimum {} -> independent set {set:?}", solution.weight);
    println!("exhaustive independence number: {:?}", independence_number(&graph));
    Ok(())
}
