//! One-dimensional solver: the best polytope is a closed interval, so the
//! problem is a maximum-sum contiguous run over the x-sorted weights.

use num_traits::{Signed, Zero};

use crate::error::{contract, Result};
use crate::geometry::Rational;
use crate::model::{best_singleton, evaluate, Instance, EmptyPolicy, Solution};

/// Maximum-sum contiguous run `(start, end, sum)` (inclusive bounds).
///
/// Among equal sums the leftmost start wins, then the shortest run. Returns
/// `None` for an empty slice.
pub fn max_subarray(weights: &[Rational]) -> Option<(usize, usize, Rational)> {
    let mut best: Option<(usize, usize, Rational)> = None;
    // prefix[s] = sum of weights[..s]; track the leftmost minimal prefix.
    let mut prefix = Rational::zero();
    let mut min_prefix = Rational::zero();
    let mut min_at = 0usize;
    for (end, w) in weights.iter().enumerate() {
        prefix += w;
        let sum = &prefix - &min_prefix;
        let better = match &best {
            None => true,
            Some((s, e, b)) => sum > *b || (sum == *b && (min_at, end) < (*s, *e)),
        };
        if better {
            best = Some((min_at, end, sum));
        }
        if prefix < min_prefix {
            min_prefix = prefix.clone();
            min_at = end + 1;
        }
    }
    best
}

/// Exact 1D solver, `O(n log n)` for the sort plus a linear scan.
pub fn solve_1d(instance: &Instance, policy: EmptyPolicy) -> Result<Solution> {
    if instance.dimension() != 1 {
        return contract(format!(
            "solve_1d needs a 1-dimensional instance, got dimension {}",
            instance.dimension()
        ));
    }
    if !instance.is_canonical() {
        return contract("solve_1d needs a canonical instance (distinct points, nonzero weights)");
    }
    let mut order: Vec<usize> = (0..instance.len()).collect();
    order.sort_by(|&a, &b| instance.point(a).cmp(instance.point(b)));
    let weights: Vec<Rational> = order.iter().map(|&i| instance.weight(i).clone()).collect();
    match max_subarray(&weights) {
        Some((start, end, sum)) if sum.is_positive() => {
            let chosen = [order[start], order[end]];
            let solution = evaluate(instance, &chosen)?;
            debug_assert_eq!(solution.weight, sum);
            Ok(solution)
        }
        _ => match policy {
            EmptyPolicy::Allow => Ok(Solution::empty()),
            EmptyPolicy::Forbid => best_singleton(instance),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{integer, Point};
    use crate::model::WeightedPoint;

    fn line(entries: &[(i64, i64)]) -> Instance {
        Instance::new(
            1,
            entries
                .iter()
                .map(|&(x, w)| WeightedPoint::new(Point::from_integers(&[x]), integer(w)))
                .collect(),
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| integer(x)).collect()
    }

    #[test]
    fn kadane_example_matches_interval_enumeration() {
        let w = ints(&[-2, 3, -1, 4]);
        // all O(n^2) intervals by hand: best is [1..=3] with 3 - 1 + 4 = 6
        let mut brute = (0, 0, w[0].clone());
        for s in 0..w.len() {
            for e in s..w.len() {
                let sum: Rational = w[s..=e].iter().sum();
                if sum > brute.2 {
                    brute = (s, e, sum);
                }
            }
        }
        assert_eq!(max_subarray(&w), Some(brute));
        assert_eq!(max_subarray(&w), Some((1, 3, integer(6))));
    }

    #[test]
    fn tie_break_leftmost_then_shortest() {
        assert_eq!(max_subarray(&ints(&[2, -2, 2])), Some((0, 0, integer(2))));
        assert_eq!(max_subarray(&ints(&[-1, 3, -3, 3])), Some((1, 1, integer(3))));
        assert_eq!(max_subarray(&[]), None);
    }

    #[test]
    fn solve_example_unsorted_input() {
        // x-order weights are [-2, 3, -1, 4]
        let inst = line(&[(30, 4), (0, -2), (20, -1), (10, 3)]);
        let s = solve_1d(&inst, EmptyPolicy::Allow).unwrap();
        assert_eq!(s.weight, integer(6));
        assert_eq!(s.contained, vec![0, 2, 3]);
        assert_eq!(s.chosen, vec![0, 3]);
        assert_eq!(s.hull, vec![3, 0]);
    }

    #[test]
    fn all_negative() {
        let inst = line(&[(0, -1), (1, -4), (2, -3)]);
        assert_eq!(solve_1d(&inst, EmptyPolicy::Allow).unwrap(), Solution::empty());
        let forced = solve_1d(&inst, EmptyPolicy::Forbid).unwrap();
        assert_eq!(forced.weight, integer(-1));
        assert_eq!(forced.chosen, vec![0]);
    }

    #[test]
    fn single_point() {
        let s = solve_1d(&line(&[(3, 5)]), EmptyPolicy::Allow).unwrap();
        assert_eq!(s.weight, integer(5));
        assert_eq!(s.chosen, vec![0]);
    }

    #[test]
    fn wrong_dimension_is_contract_error() {
        let plane = Instance::new(2, vec![]).unwrap();
        assert!(matches!(solve_1d(&plane, EmptyPolicy::Allow), Err(crate::Error::Contract(_))));
        let dup = line(&[(1, 1), (1, 2)]);
        assert!(solve_1d(&dup, EmptyPolicy::Allow).is_err());
    }
}
