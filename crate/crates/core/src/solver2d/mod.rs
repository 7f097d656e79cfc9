//! Exact planar solver in `O(n^3)` time.
//!
//! An optimal polygon (all of whose vertices can be taken positive) splits at
//! its leftmost vertex `p_i` and rightmost vertex `p_k` into a top chain that
//! bends downwards and a bottom chain that bends upwards. With candidates
//! sorted by x:
//!
//! * `C[i, j, k]`: best weight (edges and vertices) of a concave chain
//!   `p_i -> p_j -> ... -> p_k`,
//! * `V[i, j, k]`: least sub-weight (edges only) of a convex chain with first
//!   edge `p_i -> p_j`,
//! * `M[i, k] = max_j C[i, j, k] - min_j V[i, j, k]`, `M[i, i] = w(p_i)`.
//!
//! Each `C[i, j, k]` would take a linear scan over successors. Instead the
//! successors of `p_j` are kept in clockwise order, where the compatible ones
//! form a suffix that starts at a pointer moving monotonically as `p_i`
//! sweeps its own clockwise list. A running maximum over that suffix fills all
//! `C[·, j, k]` in linear time for each pair `(j, k)`.
//!
//! Edge weights come in two flavours so that points on an edge are counted
//! exactly once: the top chain counts points on or below its edges, the
//! bottom chain subtracts points strictly below.

mod engine;
mod scalar;

use num_traits::Signed;

use crate::error::{contract, Error, Result};
use crate::geometry::{shear_factor, Point, Rational, Shear};
use crate::model::{best_singleton, prune_to_maximal, EmptyPolicy, Instance, Solution};

use engine::{Chain, Engine, Slab};
use scalar::{integer_axis, integer_weights, Scalar};

/// A table entry: finite, or one of the two sentinels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extended {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(v) => Some(v),
            _ => None,
        }
    }
}

/// Edge weights between x-sorted candidates `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeights {
    n: usize,
    top: Vec<Rational>,
    bottom: Vec<Rational>,
}

impl EdgeWeights {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Weight strictly between in x and on or below the segment.
    pub fn top(&self, i: usize, j: usize) -> &Rational {
        assert!(i < j && j < self.n, "edge ({i}, {j}) out of range");
        &self.top[i * self.n + j]
    }

    /// Weight strictly between in x and strictly below the segment.
    pub fn bottom(&self, i: usize, j: usize) -> &Rational {
        assert!(i < j && j < self.n, "edge ({i}, {j}) out of range");
        &self.bottom[i * self.n + j]
    }
}

/// Clockwise neighbour orders about each candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngularLists {
    /// Candidates to the left of `j`, clockwise about `j`.
    pub left: Vec<Vec<usize>>,
    /// Candidates to the right of `j`, clockwise about `j`.
    pub right: Vec<Vec<usize>>,
    /// `first_compatible[j][t]`: position in `right[j]` of the first successor
    /// forming a concave turn with `left[j][t] -> j`.
    pub first_compatible: Vec<Vec<usize>>,
}

/// Full `C`, `V` and `M` tables. Storage is cubic; meant for inspection on
/// small inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpTables {
    n: usize,
    c: Vec<Extended>,
    v: Vec<Extended>,
    m: Vec<Option<Rational>>,
}

impl DpTables {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        assert!(i < j && j <= k && k < self.n, "entry ({i}, {j}, {k}) out of range");
        (k * self.n + i) * self.n + j
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Extended {
        &self.c[self.at(i, j, k)]
    }

    pub fn v(&self, i: usize, j: usize, k: usize) -> &Extended {
        &self.v[self.at(i, j, k)]
    }

    /// Best polygon weight with leftmost `i` and rightmost `k` (`i <= k`).
    pub fn m(&self, i: usize, k: usize) -> &Rational {
        assert!(i <= k && k < self.n);
        self.m[i * self.n + k].as_ref().expect("filled for i <= k")
    }
}

enum AnyEngine {
    IntInt(Engine<i128, i128>),
    IntRat(Engine<i128, Rational>),
    RatInt(Engine<Rational, i128>),
    RatRat(Engine<Rational, Rational>),
}

macro_rules! dispatch {
    ($engine:expr, $e:ident => $body:expr) => {
        match $engine {
            AnyEngine::IntInt($e) => $body,
            AnyEngine::IntRat($e) => $body,
            AnyEngine::RatInt($e) => $body,
            AnyEngine::RatRat($e) => $body,
        }
    };
}

/// A canonical planar instance after shearing and sorting, with edge weights
/// and angular lists computed.
pub struct Prepared {
    instance: Instance,
    shear: Shear,
    sheared: Vec<Point>,
    candidates: Vec<usize>,
    engine: AnyEngine,
}

impl Prepared {
    pub fn new(instance: &Instance) -> Result<Prepared> {
        Prepared::build(instance, false)
    }

    /// Like [`Prepared::new`] but always computes in rationals, even when the
    /// input fits machine integers.
    pub fn new_rational(instance: &Instance) -> Result<Prepared> {
        Prepared::build(instance, true)
    }

    fn build(instance: &Instance, force_rational: bool) -> Result<Prepared> {
        if instance.dimension() != 2 {
            return contract(format!(
                "solve_2d needs a 2-dimensional instance, got dimension {}",
                instance.dimension()
            ));
        }
        if !instance.is_canonical() {
            return contract("solve_2d needs a canonical instance (distinct points, nonzero weights)");
        }
        let points: Vec<Point> = instance.points().iter().map(|wp| wp.point.clone()).collect();
        let shear = shear_factor(&points)?;
        let sheared: Vec<Point> = points.iter().map(|p| shear.apply(p)).collect();
        let mut order: Vec<usize> = (0..instance.len()).collect();
        order.sort_by(|&a, &b| sheared[a].x().cmp(sheared[b].x()));
        debug_assert!(order.windows(2).all(|w| sheared[w[0]].x() < sheared[w[1]].x()));

        let xs: Vec<&Rational> = order.iter().map(|&a| sheared[a].x()).collect();
        let ys: Vec<&Rational> = order.iter().map(|&a| sheared[a].y()).collect();
        let ws: Vec<&Rational> = order.iter().map(|&a| instance.weight(a)).collect();
        let is_candidate: Vec<bool> = ws.iter().map(|w| w.is_positive()).collect();
        let candidates: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&a| instance.weight(a).is_positive())
            .collect();

        let (int_coords, int_weights) = if force_rational {
            (None, None)
        } else {
            (integer_axis(&xs).zip(integer_axis(&ys)), integer_weights(&ws))
        };
        let rat = |v: &[&Rational]| v.iter().map(|r| (*r).clone()).collect::<Vec<_>>();
        let engine = match (int_coords, int_weights) {
            (Some((x, y)), Some(w)) => AnyEngine::IntInt(Engine::build(&x, &y, &w, &is_candidate)),
            (Some((x, y)), None) => AnyEngine::IntRat(Engine::build(&x, &y, &rat(&ws), &is_candidate)),
            (None, Some(w)) => AnyEngine::RatInt(Engine::build(&rat(&xs), &rat(&ys), &w, &is_candidate)),
            (None, None) => AnyEngine::RatRat(Engine::build(&rat(&xs), &rat(&ys), &rat(&ws), &is_candidate)),
        };
        Ok(Prepared {
            instance: instance.clone(),
            shear,
            sheared,
            candidates,
            engine,
        })
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn shear(&self) -> &Shear {
        &self.shear
    }

    /// Instance indices of the positive points, sorted by sheared x.
    pub fn candidates(&self) -> &[usize] {
        &self.candidates
    }

    /// Sheared location of an instance point.
    pub fn sheared_point(&self, index: usize) -> &Point {
        &self.sheared[index]
    }

    /// Whether the fast machine-integer path is in use.
    pub fn uses_machine_integers(&self) -> bool {
        matches!(self.engine, AnyEngine::IntInt(_))
    }

    pub fn edge_weights(&self) -> EdgeWeights {
        dispatch!(&self.engine, e => EdgeWeights {
            n: e.n,
            top: e.w_top.iter().map(Scalar::to_rational).collect(),
            bottom: e.w_bot.iter().map(Scalar::to_rational).collect(),
        })
    }

    /// Angular lists of the top chain.
    pub fn angular_lists(&self) -> AngularLists {
        dispatch!(&self.engine, e => {
            let lists = &e.top.lists;
            let n = e.n;
            AngularLists {
                left: lists.left.clone(),
                right: lists.right.clone(),
                first_compatible: (0..n)
                    .map(|j| lists.left[j].iter().map(|&i| lists.fc[i * n + j]).collect())
                    .collect(),
            }
        })
    }

    /// Materializes every `C`, `V` and `M` entry (cubic memory).
    pub fn tables(&self) -> DpTables {
        dispatch!(&self.engine, e => full_tables(e))
    }

    fn solve(&self, policy: EmptyPolicy) -> Result<Report> {
        let found = dispatch!(&self.engine, e => e.optimum().map(|opt| {
            let (top, bottom) = e.reconstruct(&opt);
            (opt.i, opt.k, opt.weight.to_rational(), top, bottom)
        }));
        let to_instance = |path: Vec<usize>| path.into_iter().map(|c| self.candidates[c]).collect::<Vec<_>>();
        match found {
            Some((i, k, weight, top, bottom)) if weight.is_positive() => {
                let top = to_instance(top);
                let bottom = to_instance(bottom);
                let mut chosen: Vec<usize> = top.iter().chain(&bottom).copied().collect();
                chosen.sort_unstable();
                chosen.dedup();
                let solution = prune_to_maximal(&self.instance, &chosen)?;
                if solution.weight != weight {
                    return Err(Error::Verification(format!(
                        "reconstructed polygon weighs {} but the tables report {weight}",
                        solution.weight
                    )));
                }
                Ok(Report {
                    solution,
                    table_weight: weight,
                    leftmost: Some(self.candidates[i]),
                    rightmost: Some(self.candidates[k]),
                    top_chain: top,
                    bottom_chain: bottom,
                })
            }
            _ => {
                let solution = match policy {
                    EmptyPolicy::Allow => Solution::empty(),
                    EmptyPolicy::Forbid => best_singleton(&self.instance)?,
                };
                Ok(Report {
                    table_weight: solution.weight.clone(),
                    solution,
                    leftmost: None,
                    rightmost: None,
                    top_chain: Vec::new(),
                    bottom_chain: Vec::new(),
                })
            }
        }
    }
}

fn full_tables<P: Scalar, W: Scalar>(e: &Engine<P, W>) -> DpTables {
    let n = e.n;
    let mut c = vec![Extended::NegInfinity; n * n * n];
    let mut v = vec![Extended::PosInfinity; n * n * n];
    let mut m = vec![None; n * n];
    for i in 0..n {
        m[i * n + i] = Some(e.weight[i].to_rational());
    }
    let mut top = Slab::new(n);
    let mut bottom = Slab::new(n);
    let fill = |chain: &Chain<W>, slab: &mut Slab<W>, k: usize| chain.fill_slab(k, slab);
    for k in 1..n {
        fill(&e.top, &mut top, k);
        fill(&e.bottom, &mut bottom, k);
        for i in 0..k {
            for j in i + 1..=k {
                let at = (k * n + i) * n + j;
                if let Some(val) = top.get(i, j) {
                    c[at] = Extended::Finite(val.to_rational());
                }
                if let Some(val) = bottom.get(i, j) {
                    v[at] = Extended::Finite(-val.to_rational());
                }
            }
            let (best_c, _) = e.top.best_first_edge(&top, i, k);
            let (neg_v, _) = e.bottom.best_first_edge(&bottom, i, k);
            m[i * n + k] = Some((best_c + neg_v).to_rational());
        }
    }
    DpTables { n, c, v, m }
}

/// A planar solution together with the chains the tables reconstructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub solution: Solution,
    /// Optimum read off the `M` table (equals `solution.weight`).
    pub table_weight: Rational,
    /// Instance index of the leftmost vertex, `None` for the empty polygon.
    pub leftmost: Option<usize>,
    pub rightmost: Option<usize>,
    /// Top chain from leftmost to rightmost vertex, instance indices.
    pub top_chain: Vec<usize>,
    /// Bottom chain from leftmost to rightmost vertex, instance indices.
    pub bottom_chain: Vec<usize>,
}

/// Solves a canonical planar instance and returns the reconstructed chains.
pub fn solve_2d_report(instance: &Instance, policy: EmptyPolicy) -> Result<Report> {
    Prepared::new(instance)?.solve(policy)
}

/// Exact planar solver.
///
/// The returned witness is pruned to a maximal vertex set, and its weight is
/// re-evaluated against the instance before returning.
pub fn solve_2d(instance: &Instance, policy: EmptyPolicy) -> Result<Solution> {
    Ok(solve_2d_report(instance, policy)?.solution)
}
