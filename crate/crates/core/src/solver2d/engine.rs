//! The chain dynamic program over x-sorted positive candidates.
//!
//! Both chains are evaluated by one routine that maximizes over concave
//! chains. The bottom convex chain is obtained by reflecting `y -> -y`, which
//! turns convex into concave, and by negating its edge weights, which turns the
//! minimum sub-weight into a maximum.

use std::cmp::Ordering;

use super::scalar::Scalar;

fn cross<P: Scalar>(ax: &P, ay: &P, bx: &P, by: &P) -> P {
    ax.clone() * by.clone() - ay.clone() * bx.clone()
}

/// Clockwise-sorted neighbour lists and first-compatible pointers of one chain.
#[derive(Clone, Debug)]
pub(crate) struct ChainLists {
    /// `left[j]`: candidates `i < j`, clockwise about `j`.
    pub left: Vec<Vec<usize>>,
    /// `right[j]`: candidates `k > j`, clockwise about `j`.
    pub right: Vec<Vec<usize>>,
    /// `fc[i * n + j]`: position in `right[j]` of the first `k` such that
    /// `i -> j -> k` bends downwards; `right[j].len()` when there is none.
    pub fc: Vec<usize>,
}

fn concave<P: Scalar>(xs: &[P], ys: &[P], i: usize, j: usize, k: usize) -> bool {
    // (p_k - p_i) x (p_j - p_i) >= 0, collinear counted as concave
    let v = cross(
        &(xs[k].clone() - xs[i].clone()),
        &(ys[k].clone() - ys[i].clone()),
        &(xs[j].clone() - xs[i].clone()),
        &(ys[j].clone() - ys[i].clone()),
    );
    v >= P::zero()
}

impl ChainLists {
    pub fn build<P: Scalar>(xs: &[P], ys: &[P]) -> ChainLists {
        let n = xs.len();
        // Sort by the offset vectors from j; b is clockwise of a iff a x b < 0.
        let sort_about = |j: usize, ids: std::ops::Range<usize>| -> Vec<usize> {
            let mut keyed: Vec<(usize, P, P)> = ids
                .map(|a| (a, xs[a].clone() - xs[j].clone(), ys[a].clone() - ys[j].clone()))
                .collect();
            keyed.sort_unstable_by(|(a, ax, ay), (b, bx, by)| {
                cross(ax, ay, bx, by).cmp(&P::zero()).then(a.cmp(b))
            });
            keyed.into_iter().map(|(a, _, _)| a).collect()
        };
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for j in 0..n {
            left.push(sort_about(j, 0..j));
            right.push(sort_about(j, j + 1..n));
        }

        let mut fc = vec![0usize; n * n];
        for j in 0..n {
            let r = &right[j];
            let mut ptr = 0usize;
            for &i in &left[j] {
                // The compatible part of right[j] is a suffix that shrinks as i
                // advances through left[j], so the pointer only moves forward.
                while ptr < r.len() && !concave(xs, ys, i, j, r[ptr]) {
                    ptr += 1;
                }
                fc[i * n + j] = ptr;
                if cfg!(debug_assertions) {
                    for (q, &k) in r.iter().enumerate() {
                        assert_eq!(
                            concave(xs, ys, i, j, k),
                            q >= ptr,
                            "first-compatible pointer broken at i={i} j={j} k={k}"
                        );
                    }
                }
            }
        }
        ChainLists { left, right, fc }
    }
}

/// One chain family: its lists, edge weights and per-vertex weights.
#[derive(Clone, Debug)]
pub(crate) struct Chain<W> {
    pub n: usize,
    pub lists: ChainLists,
    /// `edge[i * n + j]` for `i < j`.
    pub edge: Vec<W>,
    pub vertex: Vec<W>,
}

/// Table entries `T[i, j, k]` for one fixed `k`; `None` is minus infinity.
pub(crate) struct Slab<W> {
    n: usize,
    pub value: Vec<Option<W>>,
    /// Successor of `j` on the chain realizing `T[i, j, k]`.
    pub next: Vec<usize>,
    dmax: Vec<Option<W>>,
    darg: Vec<usize>,
}

impl<W: Scalar> Slab<W> {
    pub fn new(n: usize) -> Self {
        Slab {
            n,
            value: vec![None; n * n],
            next: vec![usize::MAX; n * n],
            dmax: Vec::with_capacity(n + 1),
            darg: Vec::with_capacity(n + 1),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&W> {
        self.value[i * self.n + j].as_ref()
    }
}

impl<W: Scalar> Chain<W> {
    /// Fills `T[i, j, k]` for all `i < j <= k` in `O(n^2)`.
    pub fn fill_slab(&self, k: usize, slab: &mut Slab<W>) {
        let n = self.n;
        for i in 0..k {
            slab.value[i * n + k] =
                Some(self.edge[i * n + k].clone() + self.vertex[i].clone() + self.vertex[k].clone());
            slab.next[i * n + k] = k;
        }
        for j in (1..k).rev() {
            // D over right[j]: running maximum of T[j, j'', k] from the end,
            // ignoring successors past k. Earlier positions win ties.
            let r = &self.lists.right[j];
            slab.dmax.clear();
            slab.darg.clear();
            slab.dmax.resize(r.len() + 1, None);
            slab.darg.resize(r.len() + 1, usize::MAX);
            for q in (0..r.len()).rev() {
                let succ = r[q];
                let here = if succ <= k { slab.value[j * n + succ].as_ref() } else { None };
                let keep_later = match (here, slab.dmax[q + 1].as_ref()) {
                    (None, _) => true,
                    (Some(_), None) => false,
                    (Some(h), Some(later)) => later > h,
                };
                if keep_later {
                    slab.dmax[q] = slab.dmax[q + 1].clone();
                    slab.darg[q] = slab.darg[q + 1];
                } else {
                    slab.dmax[q] = here.cloned();
                    slab.darg[q] = succ;
                }
            }
            for &i in &self.lists.left[j] {
                let f = self.lists.fc[i * n + j];
                slab.value[i * n + j] = slab.dmax[f]
                    .as_ref()
                    .map(|d| self.edge[i * n + j].clone() + self.vertex[i].clone() + d.clone());
                slab.next[i * n + j] = slab.darg[f];
            }
        }
    }

    /// Best entry over `j` in `(i, k]` for the given slab; smallest `j` on ties.
    pub fn best_first_edge(&self, slab: &Slab<W>, i: usize, k: usize) -> (W, usize) {
        let mut best: Option<(&W, usize)> = None;
        for j in i + 1..=k {
            if let Some(v) = slab.get(i, j) {
                if best.map_or(true, |(b, _)| v > b) {
                    best = Some((v, j));
                }
            }
        }
        let (v, j) = best.expect("the direct edge i -> k is always finite");
        (v.clone(), j)
    }

    /// Vertex sequence of the chain realizing `T[i, j, k]`.
    pub fn walk(&self, slab: &Slab<W>, i: usize, j: usize, k: usize) -> Vec<usize> {
        let n = self.n;
        let mut path = vec![i];
        let (mut a, mut b) = (i, j);
        while b != k {
            path.push(b);
            let c = slab.next[a * n + b];
            debug_assert!(c != usize::MAX && c > b && c <= k);
            (a, b) = (b, c);
        }
        path.push(k);
        path
    }
}

/// Candidate data in x-sorted order plus everything the sweep needs.
pub(crate) struct Engine<P, W> {
    _coords: std::marker::PhantomData<P>,
    pub n: usize,
    pub weight: Vec<W>,
    pub w_top: Vec<W>,
    pub w_bot: Vec<W>,
    pub top: Chain<W>,
    pub bottom: Chain<W>,
}

/// Optimal `(i, k, top first vertex, bottom first vertex, weight)`; `i == k`
/// for a single point.
pub(crate) struct Optimum<W> {
    pub i: usize,
    pub k: usize,
    pub top_j: usize,
    pub bottom_j: usize,
    pub weight: W,
}

impl<P: Scalar, W: Scalar> Engine<P, W> {
    /// `all_*` are every canonical point in strictly increasing x; `is_candidate`
    /// marks the positive ones.
    pub fn build(all_x: &[P], all_y: &[P], all_w: &[W], is_candidate: &[bool]) -> Self {
        let cand: Vec<usize> = (0..all_x.len()).filter(|&a| is_candidate[a]).collect();
        let n = cand.len();
        let xs: Vec<P> = cand.iter().map(|&a| all_x[a].clone()).collect();
        let ys: Vec<P> = cand.iter().map(|&a| all_y[a].clone()).collect();
        let weight: Vec<W> = cand.iter().map(|&a| all_w[a].clone()).collect();

        // Points strictly between two candidates in x, on-or-below (top) and
        // strictly below (bottom) their segment.
        let mut w_top = vec![W::zero(); n * n];
        let mut w_bot = vec![W::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (cand[i], cand[j]);
                let dx = all_x[b].clone() - all_x[a].clone();
                let dy = all_y[b].clone() - all_y[a].clone();
                let mut top = W::zero();
                let mut bot = W::zero();
                for q in a + 1..b {
                    let side = cross(
                        &dx,
                        &dy,
                        &(all_x[q].clone() - all_x[a].clone()),
                        &(all_y[q].clone() - all_y[a].clone()),
                    );
                    match side.cmp(&P::zero()) {
                        Ordering::Less => {
                            top = top + all_w[q].clone();
                            bot = bot + all_w[q].clone();
                        }
                        Ordering::Equal => top = top + all_w[q].clone(),
                        Ordering::Greater => {}
                    }
                }
                w_top[i * n + j] = top;
                w_bot[i * n + j] = bot;
            }
        }

        let top = Chain {
            n,
            lists: ChainLists::build(&xs, &ys),
            edge: w_top.clone(),
            vertex: weight.clone(),
        };
        let flipped: Vec<P> = ys.iter().map(|y| -y.clone()).collect();
        let bottom = Chain {
            n,
            lists: ChainLists::build(&xs, &flipped),
            edge: w_bot.iter().map(|w| -w.clone()).collect(),
            vertex: vec![W::zero(); n],
        };
        Engine {
            _coords: std::marker::PhantomData,
            n,
            weight,
            w_top,
            w_bot,
            top,
            bottom,
        }
    }

    /// Runs the full sweep and returns the best polygon, smallest `(i, k)` on ties.
    pub fn optimum(&self) -> Option<Optimum<W>> {
        let n = self.n;
        let mut best: Option<Optimum<W>> = None;
        let consider = |best: &mut Option<Optimum<W>>, cand: Optimum<W>| {
            let better = match best {
                None => true,
                Some(b) => cand.weight > b.weight || (cand.weight == b.weight && (cand.i, cand.k) < (b.i, b.k)),
            };
            if better {
                *best = Some(cand);
            }
        };
        for i in 0..n {
            consider(
                &mut best,
                Optimum {
                    i,
                    k: i,
                    top_j: i,
                    bottom_j: i,
                    weight: self.weight[i].clone(),
                },
            );
        }
        let mut top_slab = Slab::new(n);
        let mut bottom_slab = Slab::new(n);
        for k in 1..n {
            self.top.fill_slab(k, &mut top_slab);
            self.bottom.fill_slab(k, &mut bottom_slab);
            for i in 0..k {
                let (c, top_j) = self.top.best_first_edge(&top_slab, i, k);
                // min V = -(max of the negated sub-weights)
                let (neg_v, bottom_j) = self.bottom.best_first_edge(&bottom_slab, i, k);
                consider(
                    &mut best,
                    Optimum {
                        i,
                        k,
                        top_j,
                        bottom_j,
                        weight: c + neg_v,
                    },
                );
            }
        }
        best
    }

    /// Top and bottom vertex chains (candidate positions) of an optimum.
    pub fn reconstruct(&self, opt: &Optimum<W>) -> (Vec<usize>, Vec<usize>) {
        if opt.i == opt.k {
            return (vec![opt.i], vec![opt.i]);
        }
        let mut slab = Slab::new(self.n);
        self.top.fill_slab(opt.k, &mut slab);
        let top = self.top.walk(&slab, opt.i, opt.top_j, opt.k);
        self.bottom.fill_slab(opt.k, &mut slab);
        let bottom = self.bottom.walk(&slab, opt.i, opt.bottom_j, opt.k);
        (top, bottom)
    }
}
