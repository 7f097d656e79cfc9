use super::{Orientation, Point};

fn turn(o: &Point, a: &Point, b: &Point) -> Orientation {
    Orientation::of(o, a, b)
}

/// Indices of the convex hull vertices of a planar point set, counterclockwise,
/// starting from the lexicographically smallest point.
///
/// Points in the interior of hull edges are dropped. Duplicates collapse onto
/// their first occurrence. A collinear input yields its two extreme points.
pub fn convex_hull_2d_indices(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
    order.dedup_by(|b, a| points[*a] == points[*b]);
    if order.len() <= 2 {
        return order;
    }

    // Andrew's monotone chain; strict turns only.
    let mut lower: Vec<usize> = Vec::with_capacity(order.len());
    for &i in &order {
        while lower.len() >= 2
            && turn(&points[lower[lower.len() - 2]], &points[lower[lower.len() - 1]], &points[i])
                != Orientation::CounterClockwise
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::with_capacity(order.len());
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && turn(&points[upper[upper.len() - 2]], &points[upper[upper.len() - 1]], &points[i])
                != Orientation::CounterClockwise
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Convex hull vertices in counterclockwise order.
pub fn convex_hull_2d(points: &[Point]) -> Vec<Point> {
    convex_hull_2d_indices(points)
        .into_iter()
        .map(|i| points[i].clone())
        .collect()
}

/// Closed membership test against a hull produced by [`convex_hull_2d`].
pub fn point_in_convex_polygon(v: &Point, hull: &[Point]) -> bool {
    match hull {
        [] => false,
        [a] => v == a,
        [a, b] => {
            turn(a, b, v) == Orientation::Collinear
                && (a.x().min(b.x())..=a.x().max(b.x())).contains(&v.x())
                && (a.y().min(b.y())..=a.y().max(b.y())).contains(&v.y())
        }
        _ => (0..hull.len()).all(|e| {
            let a = &hull[e];
            let b = &hull[(e + 1) % hull.len()];
            turn(a, b, v) != Orientation::Clockwise
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_integers(&[x, y])
    }

    #[test]
    fn single_point() {
        assert_eq!(convex_hull_2d(&[p(0, 0)]), vec![p(0, 0)]);
    }

    #[test]
    fn collinear_midpoint_dropped() {
        assert_eq!(convex_hull_2d(&[p(0, 0), p(2, 0), p(1, 0)]), vec![p(0, 0), p(2, 0)]);
    }

    #[test]
    fn square_with_center() {
        let pts = [p(0, 0), p(1, 0), p(1, 1), p(0, 1), p(0, 0)];
        let mut with_center = pts.to_vec();
        with_center.push(Point::xy(crate::geometry::rational(1, 2), crate::geometry::rational(1, 2)));
        assert_eq!(
            convex_hull_2d(&with_center),
            vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]
        );
    }

    #[test]
    fn duplicates_collapse() {
        assert_eq!(convex_hull_2d_indices(&[p(3, 3), p(3, 3)]), vec![0]);
        assert!(convex_hull_2d(&[]).is_empty());
    }

    #[test]
    fn polygon_membership_closed() {
        let hull = convex_hull_2d(&[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]);
        assert!(point_in_convex_polygon(&p(1, 1), &hull));
        assert!(point_in_convex_polygon(&p(2, 1), &hull));
        assert!(point_in_convex_polygon(&p(0, 0), &hull));
        assert!(!point_in_convex_polygon(&p(3, 0), &hull));
        let seg = convex_hull_2d(&[p(0, 0), p(2, 2)]);
        assert!(point_in_convex_polygon(&p(1, 1), &seg));
        assert!(!point_in_convex_polygon(&p(3, 3), &seg));
        assert!(!point_in_convex_polygon(&p(1, 0), &seg));
    }
}
