//! Instances, solutions, preprocessing, the polytope weight evaluator and the
//! on-disk formats.
//!
//! Instance files are plain text:
//!
//! ```text
//! #@ family ngon
//! # free comments are ignored
//! 2 3
//! 0 0 1
//! 1/2 0 1
//! 0 1 -1
//! ```
//!
//! `#@ key value` lines carry provenance metadata, the header is `d n`, then
//! `n` lines of `d` coordinates followed by the weight, all exact rationals.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::geometry::{convex_hull_2d, convex_hull_2d_indices, point_in_convex_polygon, point_in_hull, Point, Rational};

/// Metadata key holding the original indices behind each canonical point.
pub const META_SOURCE_INDICES: &str = "source_indices";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPoint {
    pub point: Point,
    pub weight: Rational,
}

impl WeightedPoint {
    pub fn new(point: Point, weight: Rational) -> Self {
        WeightedPoint { point, weight }
    }
}

/// Whether the empty polytope (weight zero) may be reported.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EmptyPolicy {
    #[default]
    Allow,
    /// Report the best polytope containing at least one input point.
    Forbid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    dimension: usize,
    points: Vec<WeightedPoint>,
    pub meta: BTreeMap<String, String>,
}

impl Instance {
    pub fn new(dimension: usize, points: Vec<WeightedPoint>) -> Result<Self> {
        if dimension == 0 {
            return contract("instance dimension must be positive");
        }
        if let Some((i, bad)) = points.iter().enumerate().find(|(_, p)| p.point.dim() != dimension) {
            return contract(format!(
                "point {i} has {} coordinates, instance dimension is {dimension}",
                bad.point.dim()
            ));
        }
        Ok(Instance {
            dimension,
            points,
            meta: BTreeMap::new(),
        })
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.meta.insert(key.into(), value.into());
        self
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn points(&self) -> &[WeightedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, index: usize) -> &Point {
        &self.points[index].point
    }

    pub fn weight(&self, index: usize) -> &Rational {
        &self.points[index].weight
    }

    /// Indices of the strictly positive points, in input order.
    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.weight(i).is_positive()).collect()
    }

    pub fn is_canonical(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.points
            .iter()
            .all(|p| !p.weight.is_zero() && seen.insert(&p.point))
    }
}

/// Merges duplicate coordinates (summing weights) and drops zero weights.
///
/// Surviving points keep the position of their first occurrence. When anything
/// changes, `meta["source_indices"]` maps each output point to the `+`-joined
/// indices it came from, composed with any mapping already present.
pub fn canonicalize(instance: &Instance) -> Instance {
    if instance.is_canonical() {
        return instance.clone();
    }
    let mut slot_of: HashMap<&Point, usize> = HashMap::new();
    let mut merged: Vec<(WeightedPoint, Vec<usize>)> = Vec::new();
    for (i, wp) in instance.points.iter().enumerate() {
        match slot_of.get(&wp.point) {
            Some(&slot) => {
                merged[slot].0.weight += &wp.weight;
                merged[slot].1.push(i);
            }
            None => {
                slot_of.insert(&wp.point, merged.len());
                merged.push((wp.clone(), vec![i]));
            }
        }
    }
    let previous = instance
        .meta
        .get(META_SOURCE_INDICES)
        .and_then(|s| parse_source_indices(s));
    let mut points = Vec::new();
    let mut groups = Vec::new();
    for (wp, sources) in merged {
        if wp.weight.is_zero() {
            continue;
        }
        let mut group: Vec<usize> = match &previous {
            Some(prev) if prev.len() == instance.len() => {
                sources.iter().flat_map(|&s| prev[s].iter().copied()).collect()
            }
            _ => sources,
        };
        group.sort_unstable();
        points.push(wp);
        groups.push(group);
    }
    let mut meta = instance.meta.clone();
    meta.insert(META_SOURCE_INDICES.to_string(), format_source_indices(&groups));
    Instance {
        dimension: instance.dimension,
        points,
        meta,
    }
}

/// Maps a solution of `canonicalize(original)` back to indices of `original`.
///
/// Each chosen point becomes the first source index of its group, and the
/// polytope is re-evaluated on `original`, so merged duplicates and dropped
/// zero-weight points reappear in `contained`.
pub fn lift_solution(original: &Instance, solution: &Solution) -> Result<Solution> {
    if original.is_canonical() {
        return Ok(solution.clone());
    }
    let mut fresh = original.clone();
    fresh.meta.remove(META_SOURCE_INDICES);
    let groups = parse_source_indices(&canonicalize(&fresh).meta[META_SOURCE_INDICES]).expect("written above");
    let chosen = solution
        .chosen
        .iter()
        .map(|&c| groups.get(c).and_then(|g| g.first().copied()))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| Error::Contract("solution index outside the canonical instance".into()))?;
    let lifted = evaluate_any(original, &chosen)?;
    if lifted.weight != solution.weight {
        return Err(Error::Verification(format!(
            "lifted weight {} differs from {}",
            lifted.weight, solution.weight
        )));
    }
    Ok(lifted)
}

fn format_source_indices(groups: &[Vec<usize>]) -> String {
    groups
        .iter()
        .map(|g| g.iter().map(usize::to_string).collect::<Vec<_>>().join("+"))
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_source_indices(text: &str) -> Option<Vec<Vec<usize>>> {
    if text.trim().is_empty() {
        return Some(Vec::new());
    }
    text.split(',')
        .map(|g| g.split('+').map(|i| i.trim().parse().ok()).collect())
        .collect()
}

/// A polytope given by its chosen vertex set, with everything it encloses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Sorted indices of the points spanning the polytope.
    pub chosen: Vec<usize>,
    /// Boundary cycle (counterclockwise in 2D, the two endpoints in 1D, empty above).
    pub hull: Vec<usize>,
    /// Sorted indices of every instance point inside the closed polytope.
    pub contained: Vec<usize>,
    pub weight: Rational,
}

impl Solution {
    pub fn empty() -> Self {
        Solution {
            chosen: Vec::new(),
            hull: Vec::new(),
            contained: Vec::new(),
            weight: Rational::zero(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }
}

/// Weight of `conv(chosen)`; every chosen point must have positive weight.
pub fn evaluate(instance: &Instance, chosen: &[usize]) -> Result<Solution> {
    if let Some(&i) = chosen
        .iter()
        .find(|&&i| i < instance.len() && !instance.weight(i).is_positive())
    {
        return contract(format!("chosen point {i} does not have positive weight"));
    }
    evaluate_any(instance, chosen)
}

/// [`evaluate`] without the positivity check, for verifiers probing arbitrary sets.
pub fn evaluate_any(instance: &Instance, chosen: &[usize]) -> Result<Solution> {
    evaluate_among(instance, chosen, None)
}

/// Like [`evaluate_any`], but only tests the points in `among` for membership.
/// Callers pass a superset of the answer, e.g. the contents of a polytope
/// containing `conv(chosen)`.
fn evaluate_among(instance: &Instance, chosen: &[usize], among: Option<&[usize]>) -> Result<Solution> {
    let all: Vec<usize>;
    let among = match among {
        Some(a) => a,
        None => {
            all = (0..instance.len()).collect();
            &all
        }
    };
    let mut chosen = chosen.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if let Some(&bad) = chosen.iter().find(|&&i| i >= instance.len()) {
        return contract(format!("index {bad} out of range for {} points", instance.len()));
    }
    if chosen.is_empty() {
        return Ok(Solution::empty());
    }
    let vertices: Vec<Point> = chosen.iter().map(|&i| instance.point(i).clone()).collect();
    let (hull, contained) = match instance.dimension() {
        1 => {
            let lo = chosen.iter().copied().min_by(|&a, &b| instance.point(a).cmp(instance.point(b))).unwrap();
            let hi = chosen.iter().copied().max_by(|&a, &b| instance.point(a).cmp(instance.point(b))).unwrap();
            let (lo_x, hi_x) = (instance.point(lo).x(), instance.point(hi).x());
            let contained = among
                .iter()
                .copied()
                .filter(|&i| {
                    let x = instance.point(i).x();
                    lo_x <= x && x <= hi_x
                })
                .collect();
            let hull = if lo == hi { vec![lo] } else { vec![lo, hi] };
            (hull, contained)
        }
        2 => {
            let hull: Vec<usize> = convex_hull_2d_indices(&vertices)
                .into_iter()
                .map(|k| chosen[k])
                .collect();
            let polygon = convex_hull_2d(&vertices);
            let contained = among
                .iter()
                .copied()
                .filter(|&i| point_in_convex_polygon(instance.point(i), &polygon))
                .collect();
            (hull, contained)
        }
        _ => {
            let mut contained = Vec::new();
            for &i in among {
                if point_in_hull(instance.point(i), &vertices)? {
                    contained.push(i);
                }
            }
            (Vec::new(), contained)
        }
    };
    let weight = contained.iter().map(|&i| instance.weight(i)).sum();
    Ok(Solution {
        chosen,
        hull,
        contained,
        weight,
    })
}

/// Weight of the polytope spanned by `current.chosen` without its `k`-th point.
///
/// Only points of `current.contained` can remain inside. In the plane, a hull
/// vertex `v` with hull neighbours `a` and `b` can only lose points lying in
/// the triangle `a v b`, so the rest are counted without a membership test.
fn weight_without(instance: &Instance, current: &Solution, k: usize) -> Result<Rational> {
    let mut reduced = current.chosen.clone();
    let v = reduced.remove(k);
    if instance.dimension() != 2 || current.hull.len() < 3 {
        return Ok(evaluate_among(instance, &reduced, Some(&current.contained))?.weight);
    }
    let Some(pos) = current.hull.iter().position(|&h| h == v) else {
        // not a vertex, so the polygon does not change
        return Ok(current.weight.clone());
    };
    let h = current.hull.len();
    let a = instance.point(current.hull[(pos + h - 1) % h]);
    let b = instance.point(current.hull[(pos + 1) % h]);
    let triangle = [a.clone(), instance.point(v).clone(), b.clone()];
    let polygon = convex_hull_2d(&reduced.iter().map(|&i| instance.point(i).clone()).collect::<Vec<_>>());
    let mut weight = Rational::zero();
    for &i in &current.contained {
        let p = instance.point(i);
        if !point_in_convex_polygon(p, &triangle) || point_in_convex_polygon(p, &polygon) {
            weight += instance.weight(i);
        }
    }
    Ok(weight)
}

/// Repeatedly drops the first chosen point whose removal does not lower the
/// weight, until every remaining point strictly contributes.
pub fn prune_to_maximal(instance: &Instance, chosen: &[usize]) -> Result<Solution> {
    let mut current = evaluate_any(instance, chosen)?;
    'outer: loop {
        for k in 0..current.chosen.len() {
            if weight_without(instance, &current, k)? >= current.weight {
                let mut reduced = current.chosen.clone();
                reduced.remove(k);
                current = evaluate_among(instance, &reduced, Some(&current.contained))?;
                continue 'outer;
            }
        }
        return Ok(current);
    }
}

/// First chosen point whose removal does not lower the weight, if any.
pub fn find_non_contributing(instance: &Instance, solution: &Solution) -> Result<Option<usize>> {
    let current = evaluate_any(instance, &solution.chosen)?;
    for k in 0..current.chosen.len() {
        if weight_without(instance, &current, k)? >= solution.weight {
            return Ok(Some(current.chosen[k]));
        }
    }
    Ok(None)
}

/// The single heaviest point, used when the empty polytope is not admissible
/// and no point has positive weight.
pub(crate) fn best_singleton(instance: &Instance) -> Result<Solution> {
    match (0..instance.len()).max_by(|&a, &b| instance.weight(a).cmp(instance.weight(b)).then(b.cmp(&a))) {
        Some(best) => evaluate_any(instance, &[best]),
        None => Ok(Solution::empty()),
    }
}

fn parse_rational(token: &str, line: usize) -> Result<Rational> {
    Rational::from_str(token).map_err(|_| Error::Parse {
        line,
        message: format!("`{token}` is not an exact rational"),
    })
}

/// Reads the instance text format described in the module docs.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut meta = BTreeMap::new();
    let mut header: Option<(usize, usize)> = None;
    let mut points = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if let Some(rest) = trimmed.strip_prefix("#@") {
            let rest = rest.trim();
            let (key, value) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            if key.is_empty() {
                return Err(Error::Parse {
                    line,
                    message: "metadata line without a key".into(),
                });
            }
            meta.insert(key.to_string(), value.trim().to_string());
            continue;
        }
        let data = trimmed.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = data.split_whitespace().collect();
        match header {
            None => {
                let [d, n] = tokens[..] else {
                    return Err(Error::Parse {
                        line,
                        message: format!("header must be `d n`, got {} tokens", tokens.len()),
                    });
                };
                let parse_count = |t: &str| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("`{t}` is not a non-negative integer"),
                    })
                };
                let (d, n) = (parse_count(d)?, parse_count(n)?);
                if d == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "dimension must be positive".into(),
                    });
                }
                header = Some((d, n));
            }
            Some((d, n)) => {
                if points.len() == n {
                    return Err(Error::Parse {
                        line,
                        message: format!("more than the declared {n} points"),
                    });
                }
                if tokens.len() != d + 1 {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected {} tokens (d = {d} coordinates and a weight), got {}", d + 1, tokens.len()),
                    });
                }
                let coords = tokens[..d]
                    .iter()
                    .map(|t| parse_rational(t, line))
                    .collect::<Result<Vec<_>>>()?;
                let weight = parse_rational(tokens[d], line)?;
                points.push(WeightedPoint::new(Point::new(coords), weight));
            }
        }
    }
    let Some((d, n)) = header else {
        return Err(Error::Parse {
            line: last_line + 1,
            message: "missing `d n` header".into(),
        });
    };
    if points.len() != n {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!("declared {n} points, found {}", points.len()),
        });
    }
    let mut instance = Instance::new(d, points)?;
    instance.meta = meta;
    Ok(instance)
}

/// Writes the canonical text form: metadata, header, then one line per point.
pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    for (key, value) in &instance.meta {
        if value.is_empty() {
            let _ = writeln!(out, "#@ {key}");
        } else {
            let _ = writeln!(out, "#@ {key} {value}");
        }
    }
    let _ = writeln!(out, "{} {}", instance.dimension, instance.len());
    for wp in &instance.points {
        let mut fields: Vec<String> = wp.point.coords().iter().map(Rational::to_string).collect();
        fields.push(wp.weight.to_string());
        let _ = writeln!(out, "{}", fields.join(" "));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct SolutionRecord {
    weight: String,
    chosen: Vec<usize>,
    hull: Vec<usize>,
    contained: Vec<usize>,
}

impl Solution {
    pub fn to_json(&self) -> String {
        let record = SolutionRecord {
            weight: self.weight.to_string(),
            chosen: self.chosen.clone(),
            hull: self.hull.clone(),
            contained: self.contained.clone(),
        };
        serde_json::to_string_pretty(&record).expect("solution record serializes")
    }

    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        format!(
            "weight: {}\nchosen: {}\nhull: {}\ncontained: {}\n",
            self.weight,
            join(&self.chosen),
            join(&self.hull),
            join(&self.contained)
        )
    }

    /// Parses either the JSON or the text rendering.
    pub fn parse(text: &str) -> Result<Solution> {
        if text.trim_start().starts_with('{') {
            let record: SolutionRecord = serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                message: e.to_string(),
            })?;
            return Ok(Solution {
                weight: parse_rational(&record.weight, 1)?,
                chosen: record.chosen,
                hull: record.hull,
                contained: record.contained,
            });
        }
        let mut fields: HashMap<&str, (usize, &str)> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let Some((key, value)) = raw.split_once(':') else {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "expected `key: value`".into(),
                });
            };
            fields.insert(key.trim(), (idx + 1, value.trim()));
        }
        let field = |key: &str| {
            fields.get(key).copied().ok_or_else(|| Error::Parse {
                line: text.lines().count() + 1,
                message: format!("missing `{key}` field"),
            })
        };
        let indices = |key: &str| -> Result<Vec<usize>> {
            let (line, value) = field(key)?;
            value
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("`{t}` is not an index"),
                    })
                })
                .collect()
        };
        let (line, weight) = field("weight")?;
        Ok(Solution {
            weight: parse_rational(weight, line)?,
            chosen: indices("chosen")?,
            hull: indices("hull")?,
            contained: indices("contained")?,
        })
    }
}
