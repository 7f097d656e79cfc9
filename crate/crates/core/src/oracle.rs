//! Exhaustive ground-truth solver for any dimension.
//!
//! Some optimal polytope has only positive vertices, so it suffices to try
//! every subset of the positive points.

use crate::error::{contract, Error, Result};
use crate::model::{best_singleton, evaluate, prune_to_maximal, EmptyPolicy, Instance, Solution};

pub const DEFAULT_LIMIT: usize = 20;

/// Visits `k`-subsets of `0..m` in lexicographic order.
fn for_each_combination(m: usize, k: usize, mut visit: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if k > m {
        return Ok(());
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        visit(&combo)?;
        // rightmost position that can still advance
        let Some(pos) = (0..k).rev().find(|&p| combo[p] < m - k + p) else {
            return Ok(());
        };
        combo[pos] += 1;
        for q in pos + 1..k {
            combo[q] = combo[q - 1] + 1;
        }
    }
}

/// Best polytope by enumerating subsets of the positive points, smallest
/// subsets first and lexicographically within a size. The first optimum met is
/// then pruned to a maximal subset.
pub fn solve_bruteforce(instance: &Instance, policy: EmptyPolicy, limit: usize) -> Result<Solution> {
    if !instance.is_canonical() {
        return contract("the oracle needs a canonical instance (distinct points, nonzero weights)");
    }
    let positives = instance.positive_indices();
    if positives.len() > limit {
        return Err(Error::OracleLimit {
            positives: positives.len(),
            limit,
        });
    }
    if positives.is_empty() && policy == EmptyPolicy::Forbid {
        return best_singleton(instance);
    }
    let mut best: Option<Solution> = match policy {
        EmptyPolicy::Allow => Some(Solution::empty()),
        EmptyPolicy::Forbid => None,
    };
    let mut chosen = Vec::with_capacity(positives.len());
    for size in 1..=positives.len() {
        for_each_combination(positives.len(), size, |combo| {
            chosen.clear();
            chosen.extend(combo.iter().map(|&c| positives[c]));
            let candidate = evaluate(instance, &chosen)?;
            if best.as_ref().map_or(true, |b| candidate.weight > b.weight) {
                best = Some(candidate);
            }
            Ok(())
        })?;
    }
    let best = best.expect("at least one subset was evaluated");
    prune_to_maximal(instance, &best.chosen)
}

/// Reads the `MWCP_ORACLE_LIMIT` override, falling back to [`DEFAULT_LIMIT`].
pub fn limit_from_env() -> usize {
    std::env::var("MWCP_ORACLE_LIMIT")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_LIMIT)
}
