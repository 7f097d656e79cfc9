//! Exact orientation, shear normalization and hull membership.

use mwcp::geometry::{
    convex_hull_2d, cross2, is_concave_turn, point_in_hull, rational, shear_normalize, Orientation, Point,
};

fn main() -> mwcp::Result<()> {
    let u = Point::xy(rational(1, 2), rational(1, 1));
    let v = Point::xy(rational(3, 1), rational(1, 3));
    println!("cross2({u:?}, {v:?}) = {}", cross2(&u, &v)?);

    let (a, b, c) = (
        Point::from_integers(&[0, 0]),
        Point::from_integers(&[1, 1]),
        Point::from_integers(&[2, 0]),
    );
    println!("orientation of a, b, c: {:?}", Orientation::of(&a, &b, &c));
    println!("a -> b -> c bends down: {}", is_concave_turn(&a, &b, &c)?);

    // Two points share x = 0; the shear separates them without changing any turn.
    let square = [[0, 0], [0, 2], [1, 0], [1, 2]].map(|p| Point::from_integers(&p));
    let (moved, shear) = shear_normalize(&square)?;
    match shear.factor() {
        Some(k) => println!("shear (x, y) -> (x + y / {k}, y): {moved:?}"),
        None => println!("no shear needed"),
    }

    let hull = convex_hull_2d(&square);
    println!("hull of the square: {hull:?}");

    let simplex = [[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 4]].map(|p| Point::from_integers(&p));
    for q in [[1, 1, 1], [2, 2, 1]] {
        let q = Point::from_integers(&q);
        println!("{q:?} in tetrahedron: {}", point_in_hull(&q, &simplex)?);
    }
    Ok(())
}
