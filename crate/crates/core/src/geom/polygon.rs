use serde::{Deserialize, Serialize};

use super::{
    cross, orient, point_on_segment, segments_intersect, segments_properly_cross, GeomError,
    Point, Triangle,
};
use crate::exactnum::{common_radicand, Ring, Scalar, Sign};

/// A counterclockwise simple polygon, validated on construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point<T>>", into = "Vec<Point<T>>")]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct SimplePolygon<T: Scalar> {
    vertices: Vec<Point<T>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

impl<T: Scalar> SimplePolygon<T> {
    pub fn new(vertices: Vec<Point<T>>) -> Result<Self, GeomError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::TooFewVertices(n));
        }
        common_radicand(vertices.iter().flat_map(|p| [&p.x, &p.y]))?;
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(GeomError::RepeatedVertex(i, j));
                }
            }
        }
        // Edge i runs from vertex i to vertex i+1.
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
                let (c, d) = (&vertices[j], &vertices[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let bad = if adjacent {
                    // Adjacent edges may only share their common vertex.
                    let (shared, far_a, far_b) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    orient(far_a, shared, far_b) == Sign::Zero
                        && (point_on_segment(far_a, shared, far_b)
                            || point_on_segment(far_b, shared, far_a))
                } else {
                    segments_intersect(a, b, c, d)
                };
                if bad {
                    return Err(GeomError::NotSimple(i, j));
                }
            }
        }
        let poly = SimplePolygon { vertices };
        match shoelace(&poly.vertices).sign() {
            Sign::Positive => Ok(poly),
            Sign::Zero => Err(GeomError::Degenerate),
            Sign::Negative => Err(GeomError::NotCounterClockwise),
        }
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point<T>, &Point<T>)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> T {
        poly_area(self)
    }

    pub fn radicand(&self) -> u64 {
        common_radicand(self.vertices.iter().flat_map(|p| [&p.x, &p.y]))
            .expect("checked at construction")
    }

    /// Applies `f` to every coordinate and revalidates.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Result<SimplePolygon<U>, GeomError> {
        SimplePolygon::new(self.vertices.iter().map(|p| p.map(&f)).collect())
    }
}

impl<T: Scalar> TryFrom<Vec<Point<T>>> for SimplePolygon<T> {
    type Error = GeomError;

    fn try_from(vertices: Vec<Point<T>>) -> Result<Self, Self::Error> {
        SimplePolygon::new(vertices)
    }
}

impl<T: Scalar> From<SimplePolygon<T>> for Vec<Point<T>> {
    fn from(p: SimplePolygon<T>) -> Self {
        p.vertices
    }
}

fn shoelace<T: Scalar>(vertices: &[Point<T>]) -> T {
    let origin = &vertices[0];
    let twice = vertices
        .windows(2)
        .skip(1)
        .fold(T::zero(), |acc, w| acc + cross(origin, &w[0], &w[1]));
    twice.div_ref(&T::from_integer(2))
}

pub fn poly_area<T: Scalar>(p: &SimplePolygon<T>) -> T {
    shoelace(&p.vertices)
}

/// Ray directions tried in order until a ray misses every vertex.
fn ray_direction<T: Ring>(attempt: i64) -> Point<T> {
    match attempt {
        0 => Point { x: T::from_integer(1), y: T::from_integer(0) },
        n => Point { x: T::from_integer(n), y: T::from_integer(1) },
    }
}

fn ring_edges<T>(vertices: &[Point<T>]) -> impl Iterator<Item = (&Point<T>, &Point<T>)> {
    vertices.iter().zip(vertices.iter().cycle().skip(1))
}

pub(crate) fn locate<T: Ring>(p: &Point<T>, vertices: &[Point<T>]) -> Location {
    if ring_edges(vertices).any(|(a, b)| point_on_segment(p, a, b)) {
        return Location::Boundary;
    }
    let ahead = |dir: &Point<T>| Point { x: p.x.add_ref(&dir.x), y: p.y.add_ref(&dir.y) };
    let mut attempt = 0;
    let dir = loop {
        let dir = ray_direction::<T>(attempt);
        let far = ahead(&dir);
        let hits_vertex = vertices.iter().any(|v| {
            orient(p, &far, v) == Sign::Zero
                && v.x.sub_ref(&p.x)
                    .mul_ref(&dir.x)
                    .add_ref(&v.y.sub_ref(&p.y).mul_ref(&dir.y))
                    .sign()
                    == Sign::Positive
        });
        if !hits_vertex {
            break dir;
        }
        attempt += 1;
    };
    let far = ahead(&dir);
    let origin = Point { x: T::from_integer(0), y: T::from_integer(0) };
    let crossings = ring_edges(vertices)
        .filter(|(u, w)| {
            let su = orient(p, &far, u);
            let sw = orient(p, &far, w);
            if su * sw != Sign::Negative {
                return false;
            }
            // The line crosses the edge; count it if the hit is ahead of p.
            let edge = Point { x: w.x.sub_ref(&u.x), y: w.y.sub_ref(&u.y) };
            let to_u = Point { x: u.x.sub_ref(&p.x), y: u.y.sub_ref(&p.y) };
            orient(&origin, &to_u, &edge) == orient(&origin, &dir, &edge)
        })
        .count();
    if crossings % 2 == 1 {
        Location::Inside
    } else {
        Location::Outside
    }
}

pub fn point_in_polygon<T: Scalar>(p: &Point<T>, poly: &SimplePolygon<T>) -> Location {
    locate(p, &poly.vertices)
}

/// Containment test with the triangle's centroid supplied by the caller.
pub(crate) fn contains_triangle<T: Ring>(
    t: &Triangle<T>,
    centroid: &Point<T>,
    vertices: &[Point<T>],
) -> bool {
    t.vertices
        .iter()
        .all(|v| locate(v, vertices) != Location::Outside)
        && !t.edges().iter().any(|(a, b)| {
            ring_edges(vertices).any(|(c, d)| segments_properly_cross(*a, *b, c, d))
        })
        && locate(centroid, vertices) == Location::Inside
}

/// Containment of a nondegenerate triangle in a simple polygon.
pub fn tri_in_polygon<T: Scalar>(t: &Triangle<T>, poly: &SimplePolygon<T>) -> bool {
    contains_triangle(t, &t.centroid(), &poly.vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_make, Rational};
    use num_traits::One;

    fn r(n: i64, d: i64) -> Rational {
        rat_make(n, d).unwrap()
    }

    fn ip(x: i64, y: i64) -> Point<Rational> {
        Point::from_integers(x, y)
    }

    fn dart(a: Rational) -> SimplePolygon<Rational> {
        SimplePolygon::new(vec![ip(0, 1), ip(1, 1), ip(1, 0), Point::diagonal(&a)]).unwrap()
    }

    #[test]
    fn polygon_validation() {
        assert_eq!(
            SimplePolygon::new(vec![ip(0, 0), ip(1, 0)]),
            Err(GeomError::TooFewVertices(2))
        );
        assert_eq!(
            SimplePolygon::new(vec![ip(0, 0), ip(0, 1), ip(1, 0)]),
            Err(GeomError::NotCounterClockwise)
        );
        assert!(SimplePolygon::new(vec![ip(0, 0), ip(1, 1), ip(2, 2)]).is_err());
        // bow tie
        assert!(matches!(
            SimplePolygon::new(vec![ip(0, 0), ip(1, 0), ip(0, 1), ip(1, 1)]),
            Err(GeomError::NotSimple(..))
        ));
        assert!(matches!(
            SimplePolygon::new(vec![ip(0, 0), ip(1, 0), ip(0, 0), ip(0, 1)]),
            Err(GeomError::RepeatedVertex(0, 2))
        ));
        // a spike doubling back along its own edge
        assert!(matches!(
            SimplePolygon::new(vec![ip(0, 0), ip(2, 0), ip(1, 0), ip(0, 1)]),
            Err(GeomError::NotSimple(..))
        ));
    }

    #[test]
    fn area_examples() {
        assert_eq!(poly_area(&dart(r(7, 4))), r(3, 4));
        let square = SimplePolygon::new(vec![ip(0, 0), ip(1, 0), ip(1, 1), ip(0, 1)]).unwrap();
        assert_eq!(poly_area(&square), Rational::one());
    }

    #[test]
    fn point_in_dart() {
        let d = dart(r(7, 4));
        assert_eq!(point_in_polygon(&Point::diagonal(&r(21, 20)), &d), Location::Inside);
        assert_eq!(point_in_polygon(&ip(1, 1), &d), Location::Boundary);
        assert_eq!(point_in_polygon(&ip(0, 0), &d), Location::Outside);
        assert_eq!(point_in_polygon(&Point::new(r(1, 2), r(1, 1)), &d), Location::Boundary);
        assert_eq!(point_in_polygon(&ip(-1, 1), &d), Location::Outside);
        // the (1,0) ray from here passes through the vertex (1,1)
        assert_eq!(point_in_polygon(&Point::new(r(-1, 1), r(1, 1)), &d), Location::Outside);
        assert_eq!(point_in_polygon(&Point::new(r(1, 2), r(11, 10)), &d), Location::Inside);
    }

    #[test]
    fn triangle_containment() {
        let d = dart(r(7, 4));
        let t1 = Triangle::new(ip(0, 1), ip(1, 1), Point::new(r(5, 3), r(14, 9)));
        assert!(tri_in_polygon(&t1, &d));
        let outside = Triangle::new(ip(0, 0), ip(1, 0), ip(0, 1));
        assert!(!tri_in_polygon(&outside, &d));
        // vertices on the boundary but the triangle spans the notch
        let notch = Triangle::new(ip(0, 1), ip(1, 0), Point::diagonal(&r(7, 4)));
        assert!(!tri_in_polygon(&notch, &d));
    }
}
