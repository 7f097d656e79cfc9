use num_traits::{One, Signed, Zero};

use super::{Point, Rational};
use crate::error::{contract, Result};

/// Whether `v` is a convex combination of `vertices` (closed hull, any dimension).
///
/// Decided by an exact phase-one simplex over the barycentric weights, so the
/// answer never depends on rounding.
pub fn point_in_hull(v: &Point, vertices: &[Point]) -> Result<bool> {
    if vertices.is_empty() {
        return contract("point_in_hull needs at least one vertex");
    }
    let d = v.dim();
    if let Some(bad) = vertices.iter().find(|p| p.dim() != d) {
        return contract(format!(
            "dimension mismatch: query has {d} coordinates, vertex {bad:?} has {}",
            bad.dim()
        ));
    }
    if vertices.iter().any(|p| p == v) {
        return Ok(true);
    }
    for axis in 0..d {
        let below = vertices.iter().all(|p| p[axis] < v[axis]);
        let above = vertices.iter().all(|p| p[axis] > v[axis]);
        if below || above {
            return Ok(false);
        }
    }
    Ok(barycentric_feasible(v, vertices))
}

/// Phase-one simplex with Bland's rule on
/// `sum_j lambda_j * vertex_j = v`, `sum_j lambda_j = 1`, `lambda >= 0`.
fn barycentric_feasible(v: &Point, vertices: &[Point]) -> bool {
    let d = v.dim();
    let m = vertices.len();
    let rows = d + 1;
    let cols = m + rows + 1;
    let rhs = cols - 1;

    let mut tab: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row = vec![Rational::zero(); cols];
            for (j, p) in vertices.iter().enumerate() {
                row[j] = if r < d { p[r].clone() } else { Rational::one() };
            }
            row[m + r] = Rational::one();
            row[rhs] = if r < d { v[r].clone() } else { Rational::one() };
            if row[rhs].is_negative() {
                for (j, value) in row.iter_mut().enumerate() {
                    if j != m + r {
                        *value = -value.clone();
                    }
                }
            }
            row
        })
        .collect();

    // Reduced costs of the phase-one objective (sum of artificials); the last
    // entry holds minus the objective value.
    let mut cost = vec![Rational::zero(); cols];
    for row in &tab {
        for j in 0..m {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }
    let mut basis: Vec<usize> = (m..m + rows).collect();

    loop {
        let Some(enter) = (0..m + rows).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((best, best_ratio)) => {
                    ratio < *best_ratio || (ratio == *best_ratio && basis[r] < basis[*best])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let Some((pivot_row, _)) = leave else {
            unreachable!("phase-one simplex cannot be unbounded")
        };
        pivot(&mut tab, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }
    cost[rhs].is_zero()
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], pivot_row: usize, enter: usize) {
    let inv = tab[pivot_row][enter].recip();
    for value in tab[pivot_row].iter_mut() {
        *value *= &inv;
    }
    let pivot_values = tab[pivot_row].clone();
    let eliminate = |row: &mut [Rational]| {
        let factor = row[enter].clone();
        if factor.is_zero() {
            return;
        }
        for (value, p) in row.iter_mut().zip(&pivot_values) {
            if !p.is_zero() {
                *value -= &factor * p;
            }
        }
    };
    for (r, row) in tab.iter_mut().enumerate() {
        if r != pivot_row {
            eliminate(row);
        }
    }
    eliminate(cost);
}
