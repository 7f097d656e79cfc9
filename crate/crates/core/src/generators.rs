//! Seeded instance families.

use std::collections::HashSet;
use std::f64::consts::PI;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{integer, point_in_convex_polygon, rational, segments_properly_cross, Orientation, Point, Rational};
use crate::model::{Instance, WeightedPoint};

/// Inclusive integer weight range; zero is never drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightRange {
    pub lo: i64,
    pub hi: i64,
}

impl WeightRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Contract(format!("empty weight range [{lo}, {hi}]")));
        }
        if lo == 0 && hi == 0 {
            return Err(Error::Contract("weight range [0, 0] has no nonzero weight".into()));
        }
        Ok(WeightRange { lo, hi })
    }

    fn sample(&self, rng: &mut impl Rng) -> i64 {
        loop {
            let w = rng.gen_range(self.lo..=self.hi);
            if w != 0 {
                return w;
            }
        }
    }
}

impl Default for WeightRange {
    fn default() -> Self {
        WeightRange { lo: -5, hi: 5 }
    }
}

/// `n` distinct points on an integer grid of side `max(16, 4 n^2)` with
/// uniform nonzero integer weights. Identical seeds give identical instances.
pub fn gen_uniform(n: usize, dimension: usize, seed: u64, weights: WeightRange) -> Result<Instance> {
    if n == 0 {
        return Err(Error::Contract("gen_uniform needs n >= 1".into()));
    }
    if dimension == 0 {
        return Err(Error::Contract("gen_uniform needs a positive dimension".into()));
    }
    let weights = WeightRange::new(weights.lo, weights.hi)?;
    let grid = (4 * n as i64 * n as i64).max(16);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<i64>> = HashSet::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let coords: Vec<i64> = (0..dimension).map(|_| rng.gen_range(0..grid)).collect();
        if !seen.insert(coords.clone()) {
            continue;
        }
        let w = weights.sample(&mut rng);
        points.push(WeightedPoint::new(Point::from_integers(&coords), integer(w)));
    }
    Ok(Instance::new(dimension, points)?
        .with_meta("family", "uniform")
        .with_meta("n", n.to_string())
        .with_meta("dimension", dimension.to_string())
        .with_meta("seed", seed.to_string())
        .with_meta("weights", format!("{}..{}", weights.lo, weights.hi)))
}

const NGON_MAX_HALVINGS: usize = 64;

/// Rational point on the unit circle, `((q^2 - a^2), 2 a q) / (q^2 + a^2)`,
/// i.e. the tangent half-angle parameterization at `t = a / q`.
fn circle_point(a: i64, q: i64) -> Point {
    let (a, q) = (BigInt::from(a), BigInt::from(q));
    let den = &q * &q + &a * &a;
    Point::xy(
        Rational::new(&q * &q - &a * &a, den.clone()),
        Rational::new(BigInt::from(2) * &a * &q, den),
    )
}

/// Counterclockwise rational points on the unit circle at angles close to
/// `2 pi (i + 1/4) / n`. Points on a circle are always in strictly convex
/// position.
pub fn rational_ngon(n: usize) -> Result<Vec<Point>> {
    if n < 3 {
        return Err(Error::Contract("a polygon needs n >= 3".into()));
    }
    let q = 64 * n as i64;
    let mut params: Vec<i64> = Vec::with_capacity(n);
    for i in 0..n {
        let theta = 2.0 * PI * (i as f64 + 0.25) / n as f64;
        let t = (theta / 2.0).tan();
        params.push((t * q as f64).round() as i64);
    }
    let distinct: HashSet<i64> = params.iter().copied().collect();
    if distinct.len() != n {
        return Err(Error::Construction(format!("rounded circle parameters collide for n = {n}")));
    }
    Ok(params.into_iter().map(|a| circle_point(a, q)).collect())
}

/// The negative point placed outside edge `i` of `polygon`, along the
/// perpendicular bisector at relative offset `delta`.
fn outer_point(polygon: &[Point], i: usize, delta: &Rational) -> Point {
    let a = &polygon[i];
    let b = &polygon[(i + 1) % polygon.len()];
    let half = rational(1, 2);
    let mid = a.lerp(b, &half);
    // The bisector of a chord runs through the circle's centre (the origin),
    // so scaling the midpoint moves along it.
    let scale = integer(1) + delta;
    Point::new(mid.coords().iter().map(|c| c * &scale).collect())
}

/// Checks the two properties the polygon family relies on: each negative
/// point is strictly outside the polygon, and each segment joining consecutive
/// negative points crosses into it.
pub fn ngon_properties_hold(polygon: &[Point], outer: &[Point]) -> bool {
    let n = polygon.len();
    (0..n).all(|i| {
        let a = &polygon[i];
        let b = &polygon[(i + 1) % n];
        let outside = Orientation::of(a, b, &outer[i]) == Orientation::Clockwise
            && !point_in_convex_polygon(&outer[i], polygon);
        let u = &outer[i];
        let v = &outer[(i + 1) % n];
        let crosses = (0..n).any(|e| segments_properly_cross(u, v, &polygon[e], &polygon[(e + 1) % n]));
        outside && crosses
    })
}

/// The polygon family: `n` points of weight `+1` on a near-regular rational
/// polygon and `n` points of weight `-1` just outside the middle of each edge.
///
/// The offset starts at 1 and is halved until [`ngon_properties_hold`].
pub fn gen_ngon_family(n: usize) -> Result<Instance> {
    let polygon = rational_ngon(n)?;
    let mut delta = integer(1);
    for _ in 0..NGON_MAX_HALVINGS {
        let outer: Vec<Point> = (0..n).map(|i| outer_point(&polygon, i, &delta)).collect();
        if ngon_properties_hold(&polygon, &outer) {
            let points = polygon
                .iter()
                .map(|p| WeightedPoint::new(p.clone(), integer(1)))
                .chain(outer.into_iter().map(|p| WeightedPoint::new(p, integer(-1))))
                .collect();
            return Ok(Instance::new(2, points)?
                .with_meta("family", "ngon")
                .with_meta("n", n.to_string())
                .with_meta("delta", delta.to_string()));
        }
        delta /= integer(2);
    }
    Err(Error::Construction(format!(
        "no offset found for the {n}-gon after {NGON_MAX_HALVINGS} halvings"
    )))
}
