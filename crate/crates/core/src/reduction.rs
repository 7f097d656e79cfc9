//! Maximum independent set to 4D instances.
//!
//! Graph vertices go to the moment curve `(i, i^2, i^3, i^4)`, whose convex
//! hull has every vertex pair as an edge, and get weight `+1`. Every graph edge
//! receives two `-1` points at one and two thirds of its segment. A polytope
//! spanned by positive points then swallows a negative point exactly when it
//! uses both endpoints of that point's edge, so maximal solutions correspond to
//! independent sets of the same size.
//!
//! Graph files: header `n m`, then `m` lines `u v` with 0-indexed vertices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{contract, Error, Result};
use crate::geometry::{integer, point_in_hull, rational, Point};
use crate::model::{find_non_contributing, Instance, Solution, WeightedPoint};

/// A simple undirected graph; edges are stored once as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph, dropping duplicate edges. Self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return contract(format!("self-loop on vertex {u}"));
            }
            if u >= n || v >= n {
                return contract(format!("edge ({u}, {v}) out of range for {n} vertices"));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|u| (u, (u + 1) % n))).expect("valid for n >= 3")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|u| (u - 1, u))).expect("valid")
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        !self.edges.iter().any(|(u, v)| set.contains(u) && set.contains(v))
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::Parse {
                line,
                message: format!("expected two integers, got {} tokens", tokens.len()),
            });
        };
        let num = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("`{t}` is not a non-negative integer"),
            })
        };
        Ok((num(a)?, num(b)?))
    };
    let Some((line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        });
    };
    let (n, m) = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = line;
    for (line, l) in lines {
        last = line;
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, l)?;
        if u == v || u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("edge ({u}, {v}) is a self-loop or out of range for {n} vertices"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last + 1,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.n, graph.edges.len());
    for (u, v) in &graph.edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Size and one witness of a maximum independent set, by exhaustive search.
pub fn independence_number(graph: &Graph) -> (usize, Vec<usize>) {
    let n = graph.n;
    assert!(n <= 30, "exhaustive independent-set search is limited to 30 vertices");
    let neighbours: Vec<u32> = (0..n)
        .map(|u| {
            graph
                .edges
                .iter()
                .filter_map(|&(a, b)| match (a == u, b == u) {
                    (true, _) => Some(1u32 << b),
                    (_, true) => Some(1u32 << a),
                    _ => None,
                })
                .fold(0, |acc, bit| acc | bit)
        })
        .collect();
    let mut best = 0u32;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() <= best.count_ones() {
            continue;
        }
        let independent = (0..n).all(|u| mask & (1 << u) == 0 || mask & neighbours[u] == 0);
        if independent {
            best = mask;
        }
    }
    let witness: Vec<usize> = (0..n).filter(|&u| best & (1 << u) != 0).collect();
    (witness.len(), witness)
}

/// Points `(i, i^2, i^3, i^4)` for `i = 1..=n`.
pub fn cyclic_embedding(n: usize) -> Vec<Point> {
    (1..=n as i64)
        .map(|i| Point::from_integers(&[i, i * i, i * i * i, i * i * i * i]))
        .collect()
}

/// Positions of the two negative points along each edge segment.
pub fn gadget_positions() -> [crate::Rational; 2] {
    [rational(1, 3), rational(2, 3)]
}

/// Index bookkeeping of a reduced instance, recoverable from its metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMap {
    pub graph: Graph,
    /// Instance index of each graph vertex.
    pub vertex_point: Vec<usize>,
    /// Instance indices of the two negative points on each edge, in
    /// `graph.edges()` order.
    pub gadget_points: Vec<[usize; 2]>,
}

const META_GRAPH: &str = "graph";
const META_VERTEX_POINTS: &str = "vertex_points";
const META_GADGET_POINTS: &str = "gadget_points";

impl ReductionMap {
    fn write_meta(&self, instance: Instance) -> Instance {
        let graph = format!(
            "{}:{}",
            self.graph.n,
            self.graph.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
        );
        let vertices = self.vertex_point.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let gadgets = self
            .gadget_points
            .iter()
            .map(|[a, b]| format!("{a}+{b}"))
            .collect::<Vec<_>>()
            .join(",");
        instance
            .with_meta("family", "reduction")
            .with_meta(META_GRAPH, graph)
            .with_meta(META_VERTEX_POINTS, vertices)
            .with_meta(META_GADGET_POINTS, gadgets)
    }

    /// Reads the maps back from an instance's metadata and checks them
    /// against its points.
    pub fn from_instance(instance: &Instance) -> Result<ReductionMap> {
        let get = |key: &str| {
            instance
                .meta
                .get(key)
                .ok_or_else(|| Error::Contract(format!("instance metadata lacks `{key}`")))
        };
        let bad = |what: &str| Error::Contract(format!("malformed `{what}` metadata"));
        let list = |s: &str| -> Vec<String> {
            if s.is_empty() {
                Vec::new()
            } else {
                s.split(',').map(|t| t.trim().to_string()).collect()
            }
        };

        let (n, edges) = get(META_GRAPH)?.split_once(':').ok_or_else(|| bad(META_GRAPH))?;
        let n: usize = n.trim().parse().map_err(|_| bad(META_GRAPH))?;
        let edges = list(edges)
            .iter()
            .map(|e| {
                let (u, v) = e.split_once('-')?;
                Some((u.parse().ok()?, v.parse().ok()?))
            })
            .collect::<Option<Vec<(usize, usize)>>>()
            .ok_or_else(|| bad(META_GRAPH))?;
        let graph = Graph::new(n, edges)?;
        let vertex_point = list(get(META_VERTEX_POINTS)?)
            .iter()
            .map(|t| t.parse().ok())
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| bad(META_VERTEX_POINTS))?;
        let gadget_points = list(get(META_GADGET_POINTS)?)
            .iter()
            .map(|t| {
                let (a, b) = t.split_once('+')?;
                Some([a.parse().ok()?, b.parse().ok()?])
            })
            .collect::<Option<Vec<[usize; 2]>>>()
            .ok_or_else(|| bad(META_GADGET_POINTS))?;

        if vertex_point.len() != graph.n || gadget_points.len() != graph.edges.len() {
            return contract("reduction metadata does not match the graph size");
        }
        let in_range = vertex_point
            .iter()
            .chain(gadget_points.iter().flatten())
            .all(|&i| i < instance.len());
        if !in_range {
            return contract("reduction metadata refers to points outside the instance");
        }
        Ok(ReductionMap {
            graph,
            vertex_point,
            gadget_points,
        })
    }

    /// Graph vertex behind an instance point, if it is a vertex point.
    pub fn vertex_of(&self, point: usize) -> Option<usize> {
        self.vertex_point.iter().position(|&p| p == point)
    }
}

/// Builds the 4D `+1/-1` instance for `graph`: `n + 2|E|` points.
pub fn reduce_is_to_mwcp(graph: &Graph) -> Instance {
    let vertices = cyclic_embedding(graph.n);
    let mut points: Vec<WeightedPoint> = vertices
        .iter()
        .map(|p| WeightedPoint::new(p.clone(), integer(1)))
        .collect();
    let mut gadget_points = Vec::with_capacity(graph.edges.len());
    for &(u, v) in &graph.edges {
        let [t1, t2] = gadget_positions();
        let first = points.len();
        points.push(WeightedPoint::new(vertices[u].lerp(&vertices[v], &t1), integer(-1)));
        points.push(WeightedPoint::new(vertices[u].lerp(&vertices[v], &t2), integer(-1)));
        gadget_points.push([first, first + 1]);
    }
    let map = ReductionMap {
        graph: graph.clone(),
        vertex_point: (0..graph.n).collect(),
        gadget_points,
    };
    let instance = Instance::new(4, points).expect("all points are 4-dimensional");
    map.write_meta(instance)
}

/// Maps a maximal solution of a reduced instance back to an independent set.
///
/// Refuses solutions with a non-contributing chosen point, since only maximal
/// ones are guaranteed to avoid every edge gadget.
pub fn decode_solution(instance: &Instance, solution: &Solution) -> Result<Vec<usize>> {
    let map = ReductionMap::from_instance(instance)?;
    if let Some(index) = find_non_contributing(instance, solution)? {
        return Err(Error::NotMaximal { index });
    }
    let mut vertices = solution
        .chosen
        .iter()
        .map(|&p| {
            map.vertex_of(p)
                .ok_or_else(|| Error::Contract(format!("chosen point {p} is not a graph vertex")))
        })
        .collect::<Result<Vec<usize>>>()?;
    vertices.sort_unstable();
    if !map.graph.is_independent(&vertices) {
        return Err(Error::Verification(format!("decoded vertices {vertices:?} are not independent")));
    }
    if crate::Rational::from_integer(vertices.len().into()) != solution.weight {
        return Err(Error::Verification(format!(
            "decoded {} vertices but the solution weighs {}",
            vertices.len(),
            solution.weight
        )));
    }
    Ok(vertices)
}

/// A subset of graph vertices for which membership of a negative point
/// disagrees with "both endpoints of its edge are chosen".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetViolation {
    pub vertices: Vec<usize>,
    pub negative_point: usize,
    pub inside: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GadgetReport {
    pub subsets: usize,
    pub membership_tests: usize,
    pub violations: Vec<GadgetViolation>,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const DEFAULT_GADGET_VERTEX_LIMIT: usize = 8;

/// Checks, for every subset of vertex points and every negative point, that the
/// point lies in the subset's hull exactly when both endpoints of its edge are
/// in the subset.
pub fn verify_edge_gadget(instance: &Instance, vertex_limit: usize) -> Result<GadgetReport> {
    let map = ReductionMap::from_instance(instance)?;
    let n = map.graph.n;
    if n > vertex_limit {
        return contract(format!("{n} vertices exceed the enumeration limit of {vertex_limit}"));
    }
    let mut report = GadgetReport::default();
    for mask in 0u64..(1u64 << n) {
        report.subsets += 1;
        let chosen: Vec<usize> = (0..n).filter(|&u| mask & (1 << u) != 0).collect();
        let hull: Vec<Point> = chosen.iter().map(|&u| instance.point(map.vertex_point[u]).clone()).collect();
        for (e, &(u, v)) in map.graph.edges.iter().enumerate() {
            let expected = mask & (1 << u) != 0 && mask & (1 << v) != 0;
            for &neg in &map.gadget_points[e] {
                let inside = !hull.is_empty() && point_in_hull(instance.point(neg), &hull)?;
                report.membership_tests += 1;
                if inside != expected {
                    report.violations.push(GadgetViolation {
                        vertices: chosen.clone(),
                        negative_point: neg,
                        inside,
                    });
                }
            }
        }
    }
    Ok(report)
}
