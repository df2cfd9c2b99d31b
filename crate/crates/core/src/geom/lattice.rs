use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::{Point, Triangle};
use crate::exactnum::Scalar;

/// Keeps every orientation product below `2^127`.
const COORD_LIMIT: i64 = 1 << 60;

/// Integer copy of a polygon and its faces under one positive scaling.
///
/// Scaling keeps every orientation, so integer predicates on the copy agree
/// with exact ones on the original.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Lattice {
    pub polygon: Vec<Point<i128>>,
    pub faces: Vec<Triangle<i128>>,
}

impl Lattice {
    /// Exact: the scale carries a factor of 3.
    pub fn centroid(&self, face: usize) -> Point<i128> {
        let [a, b, c] = &self.faces[face].vertices;
        Point { x: (a.x + b.x + c.x) / 3, y: (a.y + b.y + c.y) / 3 }
    }
}

/// Scales by three times the lcm of all coordinate denominators. `None` when
/// a coordinate is irrational or a scaled value gets too large.
pub(crate) fn to_lattice<T: Scalar>(polygon: &[Point<T>], faces: &[Triangle<T>]) -> Option<Lattice> {
    let points = polygon.iter().chain(faces.iter().flat_map(|f| f.vertices.iter()));
    let mut rationals = Vec::new();
    for p in points {
        rationals.push(p.x.to_rational()?);
        rationals.push(p.y.to_rational()?);
    }
    let scale: BigInt = rationals.iter().fold(BigInt::from(1), |acc, r| acc.lcm(r.denom())) * 3;
    let limit = BigInt::from(COORD_LIMIT);
    let mut coords = Vec::with_capacity(rationals.len());
    for r in &rationals {
        let v = r.numer() * (&scale / r.denom());
        if v.abs() >= limit {
            return None;
        }
        coords.push(v.to_i128()?);
    }
    let mut pts = coords.chunks(2).map(|c| Point { x: c[0], y: c[1] });
    let polygon: Vec<_> = pts.by_ref().take(polygon.len()).collect();
    let mut faces_out = Vec::with_capacity(faces.len());
    while let (Some(a), Some(b), Some(c)) = (pts.next(), pts.next(), pts.next()) {
        faces_out.push(Triangle { vertices: [a, b, c] });
    }
    Some(Lattice { polygon, faces: faces_out })
}
