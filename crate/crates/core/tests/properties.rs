mod common;

use mwcp::geometry::{
    convex_hull_2d, cross2, integer, point_in_convex_polygon, point_in_hull, rational, shear_normalize, Orientation,
    Point, Shear,
};
use mwcp::model::{canonicalize, evaluate, parse_instance, write_instance};
use mwcp::oracle::solve_bruteforce;
use mwcp::solver1d::solve_1d;
use mwcp::solver2d::{solve_2d, solve_2d_report, Prepared};
use mwcp::{EmptyPolicy, Instance, WeightedPoint};
use proptest::prelude::*;

fn pt(x: i64, y: i64) -> Point {
    Point::from_integers(&[x, y])
}

fn planar(raw: &[(i64, i64, i64)]) -> Instance {
    let points = raw
        .iter()
        .map(|&(x, y, w)| WeightedPoint::new(pt(x, y), integer(if w == 0 { 1 } else { w })))
        .collect();
    canonicalize(&Instance::new(2, points).unwrap())
}

fn planar_points(max: usize) -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((0i64..6, 0i64..6, -4i64..=4), 1..=max)
}

fn sheared(instance: &Instance, shear: &Shear) -> Instance {
    let points = instance
        .points()
        .iter()
        .map(|wp| WeightedPoint::new(shear.apply(&wp.point), wp.weight.clone()))
        .collect();
    Instance::new(2, points).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cross2_is_antisymmetric(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
        let (u, v) = (pt(a, b), pt(c, d));
        prop_assert_eq!(cross2(&u, &v).unwrap(), -cross2(&v, &u).unwrap());
    }

    #[test]
    fn shear_preserves_orientation(raw in prop::collection::vec((-20i64..20, -20i64..20), 3), k in 1i64..9, den in 1i64..4) {
        let p: Vec<Point> = raw.iter().map(|&(x, y)| pt(x, y)).collect();
        let s = Shear::Factor(rational(k, den));
        let q: Vec<Point> = p.iter().map(|v| s.apply(v)).collect();
        prop_assert_eq!(Orientation::of(&p[0], &p[1], &p[2]), Orientation::of(&q[0], &q[1], &q[2]));
        prop_assert_eq!(&s.invert(&q[0]), &p[0]);
    }

    #[test]
    fn normalized_x_are_distinct(raw in prop::collection::vec((0i64..5, 0i64..5), 1..12)) {
        let mut pts: Vec<Point> = raw.iter().map(|&(x, y)| pt(x, y)).collect();
        pts.sort();
        pts.dedup();
        let (moved, _) = shear_normalize(&pts).unwrap();
        let mut xs: Vec<_> = moved.iter().map(|p| p.x().clone()).collect();
        xs.sort();
        xs.dedup();
        prop_assert_eq!(xs.len(), pts.len());
    }

    #[test]
    fn canonicalize_is_idempotent(raw in prop::collection::vec((0i64..3, 0i64..3, -2i64..=2), 0..10)) {
        let points = raw.iter().map(|&(x, y, w)| WeightedPoint::new(pt(x, y), integer(w))).collect();
        let once = canonicalize(&Instance::new(2, points).unwrap());
        prop_assert!(once.is_canonical());
        prop_assert_eq!(canonicalize(&once), once);
    }

    #[test]
    fn evaluate_is_shear_invariant(raw in planar_points(10), k in 1i64..7) {
        let inst = planar(&raw);
        let chosen = inst.positive_indices();
        let moved = sheared(&inst, &Shear::Factor(integer(k)));
        prop_assert_eq!(evaluate(&inst, &chosen).unwrap().weight, evaluate(&moved, &chosen).unwrap().weight);
    }

    #[test]
    fn dp2d_matches_oracle(raw in planar_points(10)) {
        let inst = planar(&raw);
        for policy in [EmptyPolicy::Allow, EmptyPolicy::Forbid] {
            let fast = solve_2d(&inst, policy).unwrap();
            let slow = solve_bruteforce(&inst, policy, 20).unwrap();
            prop_assert_eq!(fast.weight, slow.weight);
        }
    }

    #[test]
    fn dp1d_matches_oracle(raw in prop::collection::vec((0i64..20, -5i64..=5), 1..15)) {
        let points = raw.iter().map(|&(x, w)| WeightedPoint::new(Point::from_integers(&[x]), integer(w))).collect();
        let inst = canonicalize(&Instance::new(1, points).unwrap());
        let fast = solve_1d(&inst, EmptyPolicy::Allow).unwrap();
        let slow = solve_bruteforce(&inst, EmptyPolicy::Allow, 20).unwrap();
        prop_assert_eq!(fast.weight, slow.weight);
    }

    #[test]
    fn optimum_is_shear_invariant(raw in planar_points(12), k in 1i64..7, den in 1i64..4) {
        let inst = planar(&raw);
        let moved = sheared(&inst, &Shear::Factor(rational(k, den)));
        prop_assert_eq!(
            solve_2d(&inst, EmptyPolicy::Allow).unwrap().weight,
            solve_2d(&moved, EmptyPolicy::Allow).unwrap().weight
        );
    }

    #[test]
    fn oracle_is_monotone(raw in planar_points(8), x in 0i64..6, y in 0i64..6, w in 1i64..4) {
        let inst = planar(&raw);
        let base = solve_bruteforce(&inst, EmptyPolicy::Allow, 20).unwrap().weight;
        for sign in [1, -1] {
            let mut points = inst.points().to_vec();
            points.push(WeightedPoint::new(pt(x, y), integer(sign * w)));
            let grown = canonicalize(&Instance::new(2, points).unwrap());
            let after = solve_bruteforce(&grown, EmptyPolicy::Allow, 20).unwrap().weight;
            if sign > 0 {
                prop_assert!(after >= base);
            } else {
                prop_assert!(after <= base);
            }
        }
    }

    #[test]
    fn oracle_ignores_point_order(raw in planar_points(9), rot in 0usize..9) {
        let inst = planar(&raw);
        let mut points = inst.points().to_vec();
        let len = points.len().max(1);
        points.rotate_left(rot % len);
        points.reverse();
        let shuffled = Instance::new(2, points).unwrap();
        prop_assert_eq!(
            solve_bruteforce(&inst, EmptyPolicy::Allow, 20).unwrap().weight,
            solve_bruteforce(&shuffled, EmptyPolicy::Allow, 20).unwrap().weight
        );
    }

    #[test]
    fn angular_lists_are_clockwise(raw in planar_points(12)) {
        let prepared = Prepared::new(&planar(&raw)).unwrap();
        let cand = prepared.candidates();
        let lists = prepared.angular_lists();
        for j in 0..cand.len() {
            let origin = prepared.sheared_point(cand[j]);
            for list in [&lists.left[j], &lists.right[j]] {
                for (s, &a) in list.iter().enumerate() {
                    for &b in &list[s + 1..] {
                        let pa = prepared.sheared_point(cand[a]);
                        let pb = prepared.sheared_point(cand[b]);
                        let turn = cross2(&(pa - origin), &(pb - origin)).unwrap();
                        // a precedes b: b is clockwise of a, or collinear with a smaller index first
                        prop_assert!(turn < integer(0) || (turn == integer(0) && a < b));
                    }
                }
            }
            prop_assert_eq!(lists.left[j].len(), j);
            prop_assert_eq!(lists.right[j].len(), cand.len() - j - 1);
            prop_assert!(lists.first_compatible[j].windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn witness_chains_are_concave_and_convex(raw in planar_points(12)) {
        let inst = planar(&raw);
        let report = solve_2d_report(&inst, EmptyPolicy::Allow).unwrap();
        let (Some(left), Some(right)) = (report.leftmost, report.rightmost) else {
            return Ok(());
        };
        let p = |i: usize| inst.point(i);
        for w in report.top_chain.windows(3) {
            prop_assert_ne!(Orientation::of(p(w[0]), p(w[1]), p(w[2])), Orientation::CounterClockwise);
        }
        for w in report.bottom_chain.windows(3) {
            prop_assert_ne!(Orientation::of(p(w[0]), p(w[1]), p(w[2])), Orientation::Clockwise);
        }
        for &v in &report.top_chain {
            prop_assert_ne!(Orientation::of(p(left), p(right), p(v)), Orientation::Clockwise);
        }
        for &v in &report.bottom_chain {
            prop_assert_ne!(Orientation::of(p(left), p(right), p(v)), Orientation::CounterClockwise);
        }
        prop_assert_eq!(report.table_weight, report.solution.weight.clone());
        prop_assert!(common::check_witness(&inst, &report.solution).is_ok());
    }

    #[test]
    fn machine_and_rational_paths_agree(raw in planar_points(9)) {
        let inst = planar(&raw);
        let fast = Prepared::new(&inst).unwrap();
        let exact = Prepared::new_rational(&inst).unwrap();
        prop_assert_eq!(fast.edge_weights(), exact.edge_weights());
        prop_assert_eq!(fast.tables(), exact.tables());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn instance_text_round_trips(
        raw in prop::collection::vec((-9i64..9, 1i64..4, -9i64..9, 1i64..4, -5i64..5), 0..8),
        dim in 1usize..4,
    ) {
        let points = raw
            .iter()
            .map(|&(a, b, c, d, w)| {
                let coords = (0..dim).map(|axis| if axis % 2 == 0 { rational(a, b) } else { rational(c, d) }).collect();
                WeightedPoint::new(Point::new(coords), rational(w, b))
            })
            .collect();
        let inst = Instance::new(dim, points).unwrap().with_meta("family", "round trip");
        prop_assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn hull_membership_agrees_with_polygon_test(
        raw in prop::collection::vec((-6i64..6, -6i64..6), 1..7),
        qx in -7i64..7,
        qy in -7i64..7,
    ) {
        let vertices: Vec<Point> = raw.iter().map(|&(x, y)| pt(x, y)).collect();
        let q = pt(qx, qy);
        let polygon = convex_hull_2d(&vertices);
        prop_assert_eq!(point_in_hull(&q, &vertices).unwrap(), point_in_convex_polygon(&q, &polygon));
    }
}
