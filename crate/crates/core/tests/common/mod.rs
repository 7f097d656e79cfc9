#![allow(dead_code)]

use std::collections::BTreeSet;

use mwcp::geometry::{convex_hull_2d_indices, integer, point_in_hull, rational, Orientation, Point};
use mwcp::model::{canonicalize, evaluate_any, find_non_contributing};
use mwcp::reduction::Graph;
use mwcp::solver2d::{Extended, Prepared};
use mwcp::{Instance, Rational, Solution, WeightedPoint};
use rand::Rng;

/// Nonzero rational weight `a / b` with `|a| <= 5`, `1 <= b <= 3`.
pub fn mixed_weight(rng: &mut impl Rng) -> Rational {
    loop {
        let a = rng.gen_range(-5..=5);
        if a != 0 {
            return rational(a, rng.gen_range(1..=3));
        }
    }
}

pub fn integer_weight(rng: &mut impl Rng) -> Rational {
    loop {
        let a = rng.gen_range(-5..=5);
        if a != 0 {
            return integer(a);
        }
    }
}

/// Small planar instance on a coarse grid, so shared x-coordinates and
/// collinear triples are common. Half-integer coordinates appear at random.
pub fn random_planar(rng: &mut impl Rng, max_n: usize, rational_weights: bool) -> Instance {
    let n = rng.gen_range(1..=max_n);
    let grid = [3, 4, 6, 10][rng.gen_range(0..4)];
    let halves = rng.gen_bool(0.3);
    let points = (0..n)
        .map(|_| {
            let mut c = || {
                let v = rng.gen_range(0..grid);
                if halves {
                    rational(v, 2)
                } else {
                    integer(v)
                }
            };
            let p = Point::xy(c(), c());
            let w = if rational_weights { mixed_weight(rng) } else { integer_weight(rng) };
            WeightedPoint::new(p, w)
        })
        .collect();
    canonicalize(&Instance::new(2, points).unwrap())
}

pub fn random_line(rng: &mut impl Rng, max_n: usize) -> Instance {
    let n = rng.gen_range(1..=max_n);
    let grid = rng.gen_range(n as i64..=2 * n as i64 + 2);
    let points = (0..n)
        .map(|_| WeightedPoint::new(Point::new(vec![rational(rng.gen_range(0..grid), 1)]), mixed_weight(rng)))
        .collect();
    canonicalize(&Instance::new(1, points).unwrap())
}

/// Random simple graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Exhaustive independence number.
pub fn alpha(graph: &Graph) -> usize {
    let n = graph.n_vertices();
    (0u32..1 << n)
        .filter(|&mask| graph.edges().iter().all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let slot = |u: usize, v: usize| pairs.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    // relabelled bit position of every edge slot under every permutation
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| slot(p[u], p[v])).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canonical = images
            .iter()
            .map(|img| {
                (0..pairs.len())
                    .filter(|&b| mask & (1 << b) != 0)
                    .fold(0u64, |acc, b| acc | 1 << img[b])
            })
            .min()
            .unwrap();
        if seen.insert(canonical) {
            let edges = (0..pairs.len()).filter(|&b| canonical & (1 << b) != 0).map(|b| pairs[b]);
            reps.push(Graph::new(n, edges).unwrap());
        }
    }
    reps
}

/// The chain tables evaluated straight from their recurrences, `O(n^4)`.
pub struct NaiveTables {
    pub n: usize,
    pub c: Vec<Extended>,
    pub v: Vec<Extended>,
    pub m: Vec<Option<Rational>>,
}

impl NaiveTables {
    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (k * self.n + i) * self.n + j
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Extended {
        &self.c[self.at(i, j, k)]
    }

    pub fn v(&self, i: usize, j: usize, k: usize) -> &Extended {
        &self.v[self.at(i, j, k)]
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    let (ax, ay) = (a.x() - o.x(), a.y() - o.y());
    let (bx, by) = (b.x() - o.x(), b.y() - o.y());
    ax * by - ay * bx
}

pub fn naive_tables(prepared: &Prepared) -> NaiveTables {
    let instance = prepared.instance();
    let cand = prepared.candidates();
    let n = cand.len();
    let at = |i: usize| prepared.sheared_point(cand[i]);
    let zero = integer(0);

    // brute-force edge weights over every instance point
    let mut w_top = vec![integer(0); n * n];
    let mut w_bot = vec![integer(0); n * n];
    for i in 0..n {
        for j in i + 1..n {
            for q in 0..instance.len() {
                let pq = prepared.sheared_point(q);
                if !(at(i).x() < pq.x() && pq.x() < at(j).x()) {
                    continue;
                }
                let side = cross(at(i), at(j), pq);
                if side <= zero {
                    w_top[i * n + j] += instance.weight(q);
                }
                if side < zero {
                    w_bot[i * n + j] += instance.weight(q);
                }
            }
        }
    }
    let w = |i: usize| instance.weight(cand[i]).clone();
    // p_j on or above the line p_i -> p_l
    let concave = |i: usize, j: usize, l: usize| cross(at(i), at(l), at(j)) >= zero;
    let convex = |i: usize, j: usize, l: usize| cross(at(i), at(l), at(j)) <= zero;

    let idx = |i: usize, j: usize, k: usize| (k * n + i) * n + j;
    let mut c = vec![Extended::NegInfinity; n * n * n];
    let mut v = vec![Extended::PosInfinity; n * n * n];
    for k in 0..n {
        for i in 0..k {
            c[idx(i, k, k)] = Extended::Finite(&w_top[i * n + k] + w(i) + w(k));
            v[idx(i, k, k)] = Extended::Finite(w_bot[i * n + k].clone());
        }
        for j in (1..k).rev() {
            for i in 0..j {
                let best_c = (j + 1..=k)
                    .filter(|&l| concave(i, j, l))
                    .filter_map(|l| c[idx(j, l, k)].finite().cloned())
                    .max();
                if let Some(b) = best_c {
                    c[idx(i, j, k)] = Extended::Finite(&w_top[i * n + j] + w(i) + b);
                }
                let best_v = (j + 1..=k)
                    .filter(|&l| convex(i, j, l))
                    .filter_map(|l| v[idx(j, l, k)].finite().cloned())
                    .min();
                if let Some(b) = best_v {
                    v[idx(i, j, k)] = Extended::Finite(&w_bot[i * n + j] + b);
                }
            }
        }
    }
    let mut m = vec![None; n * n];
    for k in 0..n {
        m[k * n + k] = Some(w(k));
        for i in 0..k {
            let top = (i + 1..=k).filter_map(|j| c[idx(i, j, k)].finite().cloned()).max();
            let bot = (i + 1..=k).filter_map(|j| v[idx(i, j, k)].finite().cloned()).min();
            m[i * n + k] = Some(top.unwrap() - bot.unwrap());
        }
    }
    NaiveTables { n, c, v, m }
}

/// Compares every entry; returns the first mismatch.
pub fn compare_tables(prepared: &Prepared) -> Result<(), String> {
    let naive = naive_tables(prepared);
    let fast = prepared.tables();
    let n = naive.n;
    if fast.len() != n {
        return Err(format!("table sizes {} vs {n}", fast.len()));
    }
    for k in 0..n {
        if fast.m(k, k) != naive.m[k * n + k].as_ref().unwrap() {
            return Err(format!("M[{k},{k}]"));
        }
        for i in 0..k {
            if fast.m(i, k) != naive.m[i * n + k].as_ref().unwrap() {
                return Err(format!("M[{i},{k}]: {} vs {:?}", fast.m(i, k), naive.m[i * n + k]));
            }
            for j in i + 1..=k {
                if fast.c(i, j, k) != naive.c(i, j, k) {
                    return Err(format!("C[{i},{j},{k}]: {:?} vs {:?}", fast.c(i, j, k), naive.c(i, j, k)));
                }
                if fast.v(i, j, k) != naive.v(i, j, k) {
                    return Err(format!("V[{i},{j},{k}]: {:?} vs {:?}", fast.v(i, j, k), naive.v(i, j, k)));
                }
            }
        }
    }
    Ok(())
}

/// Hull convexity, weight reproduction and maximality of a reported witness.
///
/// Maximality is only demanded of positive-weight witnesses; a forced
/// nonempty answer below zero loses nothing by dropping its point.
pub fn check_witness(instance: &Instance, solution: &Solution) -> Result<(), String> {
    let again = evaluate_any(instance, &solution.chosen).map_err(|e| e.to_string())?;
    if again.weight != solution.weight {
        return Err(format!("evaluate gives {} but {} was reported", again.weight, solution.weight));
    }
    if again.contained != solution.contained || again.hull != solution.hull {
        return Err("reported hull or contained set differs from evaluate".into());
    }
    match instance.dimension() {
        2 => {
            let h = &solution.hull;
            if h.len() >= 3 {
                for t in 0..h.len() {
                    let (a, b, c) = (h[t], h[(t + 1) % h.len()], h[(t + 2) % h.len()]);
                    if Orientation::of(instance.point(a), instance.point(b), instance.point(c))
                        != Orientation::CounterClockwise
                    {
                        return Err(format!("hull turn at {b} is not counterclockwise"));
                    }
                }
            }
            let pts: Vec<Point> = solution.chosen.iter().map(|&i| instance.point(i).clone()).collect();
            if convex_hull_2d_indices(&pts).len() != solution.hull.len() {
                return Err("hull is not the convex hull of the chosen points".into());
            }
        }
        d if d >= 3 => {
            for (k, &v) in solution.chosen.iter().enumerate() {
                let others: Vec<Point> = solution
                    .chosen
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != k)
                    .map(|(_, &i)| instance.point(i).clone())
                    .collect();
                if !others.is_empty() && point_in_hull(instance.point(v), &others).unwrap() {
                    return Err(format!("chosen point {v} is not a vertex"));
                }
            }
        }
        _ => {}
    }
    if solution.weight > integer(0) {
        if let Some(v) = find_non_contributing(instance, solution).map_err(|e| e.to_string())? {
            return Err(format!("not maximal: {v} does not contribute"));
        }
    }
    Ok(())
}
