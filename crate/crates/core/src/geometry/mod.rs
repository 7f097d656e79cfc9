//! Exact planar predicates, convex hulls and convex-hull membership.
//!
//! Every scalar is a [`Rational`]; nothing here rounds.

mod hull;
mod membership;

use std::fmt;
use std::ops::{Index, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{contract, Result};

pub use hull::{convex_hull_2d, convex_hull_2d_indices, point_in_convex_polygon};
pub use membership::point_in_hull;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// A point (or vector) with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| integer(c)).collect())
    }

    pub fn xy(x: Rational, y: Rational) -> Self {
        Point(vec![x, y])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn x(&self) -> &Rational {
        &self.0[0]
    }

    pub fn y(&self) -> &Rational {
        &self.0[1]
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }
}

impl Index<usize> for Point {
    type Output = Rational;

    fn index(&self, axis: usize) -> &Rational {
        &self.0[axis]
    }
}

impl Sub for &Point {
    type Output = Point;

    fn sub(self, rhs: &Point) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (axis, c) in self.0.iter().enumerate() {
            if axis > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Turn direction of an ordered point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    /// Orientation of `r` relative to the directed line `p -> q`.
    pub fn of(p: &Point, q: &Point, r: &Point) -> Orientation {
        if let Some(sign) = small_integer_turn(p, q, r) {
            return match sign {
                std::cmp::Ordering::Greater => Orientation::CounterClockwise,
                std::cmp::Ordering::Less => Orientation::Clockwise,
                std::cmp::Ordering::Equal => Orientation::Collinear,
            };
        }
        Orientation::from_sign(&cross2_unchecked(&(q - p), &(r - p)))
    }

    pub fn from_sign(value: &Rational) -> Orientation {
        if value.is_positive() {
            Orientation::CounterClockwise
        } else if value.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

/// Sign of the turn `p -> q -> r` in `i128` when all six coordinates are
/// integers below `2^62` in magnitude, so no intermediate overflows.
fn small_integer_turn(p: &Point, q: &Point, r: &Point) -> Option<std::cmp::Ordering> {
    const BOUND: i64 = 1 << 62;
    let small = |c: &Rational| -> Option<i128> {
        if !c.is_integer() {
            return None;
        }
        let v = c.numer().to_i64()?;
        (v.abs() < BOUND).then_some(v as i128)
    };
    let (px, py) = (small(&p.0[0])?, small(&p.0[1])?);
    let (qx, qy) = (small(&q.0[0])?, small(&q.0[1])?);
    let (rx, ry) = (small(&r.0[0])?, small(&r.0[1])?);
    Some(((qx - px) * (ry - py) - (qy - py) * (rx - px)).cmp(&0))
}

fn require_planar(p: &Point) -> Result<()> {
    if p.dim() != 2 {
        return contract(format!("expected a 2D vector, got dimension {}", p.dim()));
    }
    Ok(())
}

/// Planar cross product `u.x * v.y - u.y * v.x`.
pub fn cross2(u: &Point, v: &Point) -> Result<Rational> {
    require_planar(u)?;
    require_planar(v)?;
    Ok(cross2_unchecked(u, v))
}

pub(crate) fn cross2_unchecked(u: &Point, v: &Point) -> Rational {
    &u.0[0] * &v.0[1] - &u.0[1] * &v.0[0]
}

/// Whether the x-monotone path `p -> q -> r` bends downwards (or is straight).
///
/// Collinear triples are treated as concave; the middle point then sits on an
/// edge and is dropped when the hull is canonicalized.
pub fn is_concave_turn(p: &Point, q: &Point, r: &Point) -> Result<bool> {
    for point in [p, q, r] {
        require_planar(point)?;
    }
    if !(p.x() < q.x() && q.x() < r.x()) {
        return contract(format!(
            "concavity test needs strictly increasing x, got {p:?}, {q:?}, {r:?}"
        ));
    }
    Ok(!cross2_unchecked(&(r - p), &(q - p)).is_negative())
}

/// The affine map applied by [`shear_normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shear {
    /// x-coordinates were already pairwise distinct.
    Identity,
    /// `(x, y) -> (x + y / k, y)` with the stored `k > 0`.
    Factor(Rational),
}

impl Shear {
    pub fn apply(&self, p: &Point) -> Point {
        match self {
            Shear::Identity => p.clone(),
            Shear::Factor(k) => Point::xy(p.x() + p.y() / k, p.y().clone()),
        }
    }

    pub fn invert(&self, p: &Point) -> Point {
        match self {
            Shear::Identity => p.clone(),
            Shear::Factor(k) => Point::xy(p.x() - p.y() / k, p.y().clone()),
        }
    }

    pub fn factor(&self) -> Option<&Rational> {
        match self {
            Shear::Identity => None,
            Shear::Factor(k) => Some(k),
        }
    }
}

/// Chooses a shear making x-coordinates of distinct points pairwise distinct.
///
/// `k = floor(span_y / min_gap_x) + 1` exceeds every slope `|dy / dx|` between
/// two points, so no pair can collapse onto the same sheared x. The shear has
/// unit determinant and preserves orientation, convexity and hull membership.
pub fn shear_factor(points: &[Point]) -> Result<Shear> {
    for p in points {
        require_planar(p)?;
    }
    let mut xs: Vec<&Rational> = points.iter().map(Point::x).collect();
    xs.sort();
    let has_tie = xs.windows(2).any(|w| w[0] == w[1]);
    if !has_tie {
        return Ok(Shear::Identity);
    }
    let min_gap = xs
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|gap| !gap.is_zero())
        .min();
    let (min_y, max_y) = points
        .iter()
        .map(Point::y)
        .fold((None::<&Rational>, None::<&Rational>), |(lo, hi), y| {
            (
                Some(lo.map_or(y, |lo| lo.min(y))),
                Some(hi.map_or(y, |hi| hi.max(y))),
            )
        });
    let span_y = match (min_y, max_y) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => Rational::zero(),
    };
    let k = match min_gap {
        Some(gap) => (span_y / gap).floor() + integer(1),
        None => integer(1),
    };
    Ok(Shear::Factor(k))
}

/// Shears a planar point set so that distinct points get distinct x.
pub fn shear_normalize(points: &[Point]) -> Result<(Vec<Point>, Shear)> {
    let shear = shear_factor(points)?;
    let moved = points.iter().map(|p| shear.apply(p)).collect();
    Ok((moved, shear))
}

/// Whether the closed segments `a-b` and `c-d` cross at a single point interior
/// to both.
pub fn segments_properly_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    use Orientation::*;
    let opposite = |s: Orientation, t: Orientation| matches!((s, t), (Clockwise, CounterClockwise) | (CounterClockwise, Clockwise));
    opposite(Orientation::of(a, b, c), Orientation::of(a, b, d))
        && opposite(Orientation::of(c, d, a), Orientation::of(c, d, b))
}
