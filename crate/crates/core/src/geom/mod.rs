//! Exact planar predicates and measures.

pub(crate) mod lattice;
mod overlap;
mod polygon;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{common_radicand, NumError, Rational, Ring, Scalar, Sign};

pub use overlap::{clip_triangle, tri_overlap_area, triangles_separated};
pub(crate) use polygon::contains_triangle;
pub use polygon::{point_in_polygon, poly_area, tri_in_polygon, Location, SimplePolygon};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error(transparent)]
    FieldMismatch(#[from] NumError),
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("polygon has zero area")]
    Degenerate,
    #[error("polygon is not counterclockwise")]
    NotCounterClockwise,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        Point::new(T::from_integer(x), T::from_integer(y))
    }

    pub fn from_rationals(x: Rational, y: Rational) -> Self {
        Point::new(T::from_rational(x), T::from_rational(y))
    }

    /// Point `(a, a)` on the main diagonal.
    pub fn diagonal(a: &T) -> Self {
        Point::new(a.clone(), a.clone())
    }

    pub fn radicand(&self) -> Result<u64, NumError> {
        common_radicand([&self.x, &self.y])
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Point<U> {
        Point { x: f(&self.x), y: f(&self.y) }
    }

    /// `self + (to − self)·λ`.
    pub fn lerp(&self, to: &Self, lambda: &T) -> Self {
        Point::new(
            self.x.add_ref(&to.x.sub_ref(&self.x).mul_ref(lambda)),
            self.y.add_ref(&to.y.sub_ref(&self.y).mul_ref(lambda)),
        )
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<T: fmt::Debug> fmt::Debug for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl<T: Serialize> Serialize for Point<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.x, &self.y).serialize(serializer)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Point<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (x, y) = <(T, T)>::deserialize(deserializer)?;
        Ok(Point { x, y })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct Triangle<T> {
    pub vertices: [Point<T>; 3],
}

impl<T: Ring> Triangle<T> {
    pub fn edges(&self) -> [(&Point<T>, &Point<T>); 3] {
        let [a, b, c] = &self.vertices;
        [(a, b), (b, c), (c, a)]
    }

    pub fn is_degenerate(&self) -> bool {
        let [a, b, c] = &self.vertices;
        orient(a, b, c) == Sign::Zero
    }

    /// Same triangle with counterclockwise winding.
    pub fn counterclockwise(&self) -> Self {
        let [a, b, c] = &self.vertices;
        if orient(a, b, c) == Sign::Negative {
            Triangle { vertices: [a.clone(), c.clone(), b.clone()] }
        } else {
            self.clone()
        }
    }
}

impl<T: Scalar> Triangle<T> {
    pub fn new(a: Point<T>, b: Point<T>, c: Point<T>) -> Self {
        Triangle { vertices: [a, b, c] }
    }

    pub fn signed_area(&self) -> T {
        tri_signed_area(self)
    }

    pub fn area(&self) -> T {
        self.signed_area().abs()
    }

    pub fn centroid(&self) -> Point<T> {
        let [a, b, c] = &self.vertices;
        let three = T::from_integer(3);
        Point::new(
            a.x.add_ref(&b.x).add_ref(&c.x).div_ref(&three),
            a.y.add_ref(&b.y).add_ref(&c.y).div_ref(&three),
        )
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Triangle<U> {
        let [a, b, c] = &self.vertices;
        Triangle { vertices: [a.map(&f), b.map(&f), c.map(&f)] }
    }

    pub fn radicand(&self) -> Result<u64, NumError> {
        common_radicand(self.vertices.iter().flat_map(|p| [&p.x, &p.y]))
    }
}

/// `(a − o) × (b − o)`.
pub fn cross<T: Ring>(o: &Point<T>, a: &Point<T>, b: &Point<T>) -> T {
    let lhs = a.x.sub_ref(&o.x).mul_ref(&b.y.sub_ref(&o.y));
    let rhs = a.y.sub_ref(&o.y).mul_ref(&b.x.sub_ref(&o.x));
    lhs.sub_ref(&rhs)
}

/// Orientation of the turn `p → q → r`; positive is counterclockwise.
///
/// Panics if the points live in incompatible fields; see [`try_orient`].
pub fn orient<T: Ring>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Sign {
    cross(p, q, r).sign()
}

pub fn try_orient<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Result<Sign, GeomError> {
    common_radicand([&p.x, &p.y, &q.x, &q.y, &r.x, &r.y])?;
    Ok(orient(p, q, r))
}

pub fn tri_signed_area<T: Scalar>(t: &Triangle<T>) -> T {
    let [a, b, c] = &t.vertices;
    cross(a, b, c).div_ref(&T::from_integer(2))
}

fn between<T: Ring>(v: &T, a: &T, b: &T) -> bool {
    let (lo, hi) = if a.exact_cmp(b).is_le() { (a, b) } else { (b, a) };
    lo.exact_cmp(v).is_le() && v.exact_cmp(hi).is_le()
}

/// Whether `p` lies on the closed segment `a`–`b`.
pub fn point_on_segment<T: Ring>(p: &Point<T>, a: &Point<T>, b: &Point<T>) -> bool {
    orient(a, b, p) == Sign::Zero && between(&p.x, &a.x, &b.x) && between(&p.y, &a.y, &b.y)
}

/// The open segments cross at a single point interior to both.
pub fn segments_properly_cross<T: Ring>(
    a: &Point<T>,
    b: &Point<T>,
    c: &Point<T>,
    d: &Point<T>,
) -> bool {
    orient(a, b, c) * orient(a, b, d) == Sign::Negative
        && orient(c, d, a) * orient(c, d, b) == Sign::Negative
}

/// Closed segments `a`–`b` and `c`–`d` share at least one point.
pub fn segments_intersect<T: Ring>(
    a: &Point<T>,
    b: &Point<T>,
    c: &Point<T>,
    d: &Point<T>,
) -> bool {
    segments_properly_cross(a, b, c, d)
        || point_on_segment(c, a, b)
        || point_on_segment(d, a, b)
        || point_on_segment(a, c, d)
        || point_on_segment(b, c, d)
}
