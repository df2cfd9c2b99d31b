use super::{cross, orient, Point, Triangle};
use crate::exactnum::{Ring, Scalar, Sign};

/// Some edge line of counterclockwise `a` has all of `b` on its closed outer side.
fn separated_by_edge_of<T: Ring>(a: &Triangle<T>, b: &Triangle<T>) -> bool {
    a.edges().iter().any(|(p, q)| {
        b.vertices
            .iter()
            .all(|v| orient(p, q, v) != Sign::Positive)
    })
}

/// Whether two nondegenerate counterclockwise triangles have disjoint interiors.
///
/// Two convex polygons with disjoint interiors are always separated by the
/// supporting line of one of their edges, so this test is exact.
pub fn triangles_separated<T: Ring>(a: &Triangle<T>, b: &Triangle<T>) -> bool {
    separated_by_edge_of(a, b) || separated_by_edge_of(b, a)
}

/// Intersection of `subject` with the closed left half-planes of the edges
/// of counterclockwise `clip` (Sutherland–Hodgman).
pub fn clip_triangle<T: Scalar>(subject: &[Point<T>], clip: &Triangle<T>) -> Vec<Point<T>> {
    let mut poly = subject.to_vec();
    for (p, q) in clip.edges() {
        if poly.is_empty() {
            break;
        }
        let sides: Vec<T> = poly.iter().map(|v| cross(p, q, v)).collect();
        let n = poly.len();
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..n {
            let j = (i + 1) % n;
            let (si, sj) = (sides[i].sign(), sides[j].sign());
            if si != Sign::Negative {
                out.push(poly[i].clone());
            }
            if si * sj == Sign::Negative {
                let lambda = sides[i].div_ref(&sides[i].sub_ref(&sides[j]));
                out.push(poly[i].lerp(&poly[j], &lambda));
            }
        }
        poly = out;
    }
    poly
}

fn polygon_area<T: Scalar>(vertices: &[Point<T>]) -> T {
    if vertices.len() < 3 {
        return T::zero();
    }
    let origin = &vertices[0];
    vertices
        .windows(2)
        .skip(1)
        .fold(T::zero(), |acc, w| acc + cross(origin, &w[0], &w[1]))
        .div_ref(&T::from_integer(2))
}

/// Exact area of `t1 ∩ t2`; zero iff the interiors are disjoint.
pub fn tri_overlap_area<T: Scalar>(t1: &Triangle<T>, t2: &Triangle<T>) -> T {
    if t1.is_degenerate() || t2.is_degenerate() {
        return T::zero();
    }
    let a = t1.counterclockwise();
    let b = t2.counterclockwise();
    if triangles_separated(&a, &b) {
        return T::zero();
    }
    polygon_area(&clip_triangle(&a.vertices, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_make, Rational};
    use num_traits::Zero;

    fn r(n: i64, d: i64) -> Rational {
        rat_make(n, d).unwrap()
    }

    fn ip(x: i64, y: i64) -> Point<Rational> {
        Point::from_integers(x, y)
    }

    #[test]
    fn self_overlap_is_full_area() {
        let t = Triangle::new(ip(0, 0), ip(4, 0), ip(0, 3));
        assert_eq!(tri_overlap_area(&t, &t), r(6, 1));
        // winding does not matter
        let rev = Triangle::new(ip(0, 0), ip(0, 3), ip(4, 0));
        assert_eq!(tri_overlap_area(&t, &rev), r(6, 1));
    }

    #[test]
    fn shared_edge_and_vertex_have_zero_overlap() {
        let a = Triangle::new(ip(0, 0), ip(1, 0), ip(0, 1));
        let b = Triangle::new(ip(1, 0), ip(1, 1), ip(0, 1));
        assert!(tri_overlap_area(&a, &b).is_zero());
        let c = Triangle::new(ip(1, 0), ip(2, 0), ip(2, 1));
        assert!(tri_overlap_area(&a, &c).is_zero());
    }

    #[test]
    fn partial_overlap() {
        // Star of David style: two unit-ish triangles, overlap computed by hand.
        let a = Triangle::new(ip(0, 0), ip(2, 0), ip(0, 2));
        let b = Triangle::new(ip(1, 0), ip(3, 0), ip(1, 2));
        // intersection is the triangle (1,0),(2,0),(1,1): area 1/2
        assert_eq!(tri_overlap_area(&a, &b), r(1, 2));
        assert_eq!(tri_overlap_area(&b, &a), r(1, 2));
        let inner = Triangle::new(
            Point::new(r(1, 4), r(1, 4)),
            Point::new(r(1, 2), r(1, 4)),
            Point::new(r(1, 4), r(1, 2)),
        );
        assert_eq!(tri_overlap_area(&a, &inner), inner.area());
    }

    #[test]
    fn degenerate_operand() {
        let a = Triangle::new(ip(0, 0), ip(2, 0), ip(0, 2));
        let flat = Triangle::new(ip(0, 0), ip(1, 1), ip(2, 2));
        assert!(tri_overlap_area(&a, &flat).is_zero());
    }
}
