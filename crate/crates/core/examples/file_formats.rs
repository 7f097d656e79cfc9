//! Reading and writing instances and solutions.

use mwcp::model::{canonicalize, parse_instance, write_instance};
use mwcp::solver2d::solve_2d;
use mwcp::{EmptyPolicy, Solution};

const TEXT: &str = "\
#@ family demo
# duplicates are merged and zero weights dropped
2 5
0 0 2
0 0 1
3 0 1
0 3 1
1 1 0
";

fn main() -> mwcp::Result<()> {
    let raw = parse_instance(TEXT)?;
    let instance = canonicalize(&raw);
    print!("{}", write_instance(&instance));

    let solution = solve_2d(&instance, EmptyPolicy::Allow)?;
    let json = solution.to_json();
    println!("{json}");
    assert_eq!(Solution::parse(&json)?, solution);
    assert_eq!(Solution::parse(&solution.to_text())?, solution);

    match parse_instance("2 1\n0 zero 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
