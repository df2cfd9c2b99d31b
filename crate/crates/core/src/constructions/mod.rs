//! Dart and kite polygons, the weighted partitions, and their refinement
//! into equidissections.

mod dart;
mod document;
mod kite;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{common_radicand, join_radicands, NumError, QuadValue, Rational, Scalar};
use crate::geom::{GeomError, Point, SimplePolygon, Triangle};

pub use dart::{
    dart_diagonal_dissection, thm1_partition, thm1_partition_with, thm2_partition,
    thm3_partition, DartParams, Thm1Variant,
};
pub use document::DissectionDocument;
pub use kite::{thm4_partition, thm4_points, thm5_partition, ZigzagPoints};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("hypotheses violated: {0}")]
    BadHypotheses(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("dissection polygon is not the dart D({0})")]
    PolygonMismatch(String),
    #[error("area of face {0} is not a rational multiple of the area of face 0")]
    NotCommensurable(usize),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    /// The two-triangle split of a dart along its diagonal.
    Diagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Built from the uncorrected Theorem 1 formula for `q`.
    #[serde(rename = "erratum-variant")]
    ErratumVariant,
}

/// Parameters a construction was built from; unused entries are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<u64>,
    /// Parameter of the dart this dissection was carried over from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dart_a: Option<QuadValue>,
}

/// Triangles tiling a polygon with areas in the proportion of `weights`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDissection<T: Scalar> {
    pub polygon: SimplePolygon<T>,
    pub faces: Vec<Triangle<T>>,
    pub weights: Vec<u64>,
    pub field: u64,
    pub provenance: Provenance,
    pub params: ConstructionParams,
    pub variant: Option<Variant>,
}

/// Triangles of equal area tiling a polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct Dissection<T: Scalar> {
    pub polygon: SimplePolygon<T>,
    pub faces: Vec<Triangle<T>>,
    pub field: u64,
    pub provenance: Provenance,
    pub params: ConstructionParams,
    pub variant: Option<Variant>,
}

fn field_of<T: Scalar>(polygon: &SimplePolygon<T>, faces: &[Triangle<T>]) -> Result<u64, NumError> {
    let faces_field = common_radicand(
        faces
            .iter()
            .flat_map(|f| f.vertices.iter())
            .flat_map(|p| [&p.x, &p.y]),
    )?;
    join_radicands(polygon.radicand(), faces_field)
}

impl<T: Scalar> WeightedDissection<T> {
    /// Checks the cheap structural invariants: matching lengths, positive
    /// weights, nondegenerate faces, one shared field.
    pub fn new(
        polygon: SimplePolygon<T>,
        faces: Vec<Triangle<T>>,
        weights: Vec<u64>,
        provenance: Provenance,
        params: ConstructionParams,
    ) -> Result<Self, ConstructionError> {
        if faces.len() != weights.len() {
            return Err(ConstructionError::BadHypotheses(format!(
                "{} faces but {} weights",
                faces.len(),
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(ConstructionError::BadHypotheses(format!("weight {i} is zero")));
        }
        let field = field_of(&polygon, &faces)?;
        if let Some(i) = faces.iter().position(Triangle::is_degenerate) {
            return Err(ConstructionError::BadHypotheses(format!("face {i} is degenerate")));
        }
        Ok(WeightedDissection { polygon, faces, weights, field, provenance, params, variant: None })
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }
}

impl<T: Scalar> Dissection<T> {
    pub fn new(
        polygon: SimplePolygon<T>,
        faces: Vec<Triangle<T>>,
        provenance: Provenance,
        params: ConstructionParams,
    ) -> Result<Self, ConstructionError> {
        let field = field_of(&polygon, &faces)?;
        Ok(Dissection { polygon, faces, field, provenance, params, variant: None })
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Re-expresses every coordinate through `f` (e.g. lifting rationals into ℚ(√m)).
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Result<Dissection<U>, ConstructionError> {
        let polygon = self.polygon.map(&f)?;
        let faces: Vec<_> = self.faces.iter().map(|t| t.map(&f)).collect();
        let mut d = Dissection::new(polygon, faces, self.provenance, self.params.clone())?;
        d.variant = self.variant;
        Ok(d)
    }
}

fn out_of_range(what: impl Into<String>) -> ConstructionError {
    ConstructionError::ParamOutOfRange(what.into())
}

/// The dart `D(a)`: `(0,1), (1,1), (1,0), (a,a)`, reflex at `(1,1)`.
pub fn dart_polygon<T: Scalar>(a: &T) -> Result<SimplePolygon<T>, ConstructionError> {
    if a.exact_cmp(&T::one()).is_le() {
        return Err(out_of_range(format!("dart needs a > 1, got {a}")));
    }
    Ok(SimplePolygon::new(vec![
        Point::from_integers(0, 1),
        Point::from_integers(1, 1),
        Point::from_integers(1, 0),
        Point::diagonal(a),
    ])?)
}

/// The quadrilateral `Q(a)` with boundary `(0,0), (1,0), (a,a), (0,1)`.
///
/// Convex for `a > 1/2`, reflex at `(a,a)` for `a < 1/2`.
pub fn kite_polygon<T: Scalar>(a: &T) -> Result<SimplePolygon<T>, ConstructionError> {
    let half = T::from_rational(Rational::new(1, 2)?);
    if a.sign() != crate::Sign::Positive || a == &half {
        return Err(out_of_range(format!("kite needs a > 0 and a != 1/2, got {a}")));
    }
    Ok(SimplePolygon::new(vec![
        Point::from_integers(0, 0),
        Point::from_integers(1, 0),
        Point::diagonal(a),
        Point::from_integers(0, 1),
    ])?)
}

/// `a′ = (a − 1)/(2a − 1)`, the kite parameter the dart `D(a)` maps to.
pub fn kite_parameter<T: Scalar>(a: &T) -> Result<T, ConstructionError> {
    if a.exact_cmp(&T::one()).is_le() {
        return Err(out_of_range(format!("dart needs a > 1, got {a}")));
    }
    let one = T::one();
    Ok(a.sub_ref(&one).div_ref(&(a.clone() + a).sub_ref(&one)))
}

/// Affine map taking `D(a)` onto `Q(a′)`.
///
/// Fixes `(0,1)` and `(1,0)`, sends `(a,a)` to the origin and the reflex
/// vertex `(1,1)` to `(a′,a′)`. Reverses orientation; areas scale by `1/(2a−1)`.
pub fn dart_to_kite_point<T: Scalar>(p: &Point<T>, a: &T) -> Result<Point<T>, ConstructionError> {
    if a.exact_cmp(&T::one()).is_le() {
        return Err(out_of_range(format!("dart needs a > 1, got {a}")));
    }
    let one = T::one();
    let a_minus_1 = a.sub_ref(&one);
    let denom = (a.clone() + a).sub_ref(&one);
    let x = a_minus_1.mul_ref(&p.x) + a.mul_ref(&one.sub_ref(&p.y));
    let y = a_minus_1.mul_ref(&p.y) + a.mul_ref(&one.sub_ref(&p.x));
    Ok(Point::new(x.div_ref(&denom), y.div_ref(&denom)))
}

/// Carries a dissection of `D(a)` onto `Q(a′)`, rewinding every face.
pub fn map_dissection<T: Scalar>(d: &Dissection<T>, a: &T) -> Result<Dissection<T>, ConstructionError> {
    if d.polygon != dart_polygon(a)? {
        return Err(ConstructionError::PolygonMismatch(a.to_string()));
    }
    let faces = d
        .faces
        .iter()
        .map(|f| {
            let [p0, p1, p2] = &f.vertices;
            Ok(Triangle::new(
                dart_to_kite_point(p0, a)?,
                dart_to_kite_point(p2, a)?,
                dart_to_kite_point(p1, a)?,
            ))
        })
        .collect::<Result<Vec<_>, ConstructionError>>()?;
    let polygon = kite_polygon(&kite_parameter(a)?)?;
    let mut params = d.params.clone();
    params.dart_a = Some(a.to_quad());
    let mut out = Dissection::new(polygon, faces, d.provenance, params)?;
    out.variant = d.variant;
    Ok(out)
}

/// Splits `t` into `w` equal-area triangles fanned from its first vertex.
pub fn fan_split<T: Scalar>(t: &Triangle<T>, w: u64) -> Vec<Triangle<T>> {
    let [apex, from, to] = &t.vertices;
    let steps = T::from_integer(w as i64);
    let cut = |j: u64| {
        if j == 0 {
            from.clone()
        } else if j == w {
            to.clone()
        } else {
            from.lerp(to, &T::from_integer(j as i64).div_ref(&steps))
        }
    };
    let cuts: Vec<_> = (0..=w).map(cut).collect();
    cuts.windows(2)
        .map(|c| Triangle::new(apex.clone(), c[0].clone(), c[1].clone()))
        .collect()
}

/// Refines each face into as many equal-area triangles as its weight.
pub fn lemma1_refine<T: Scalar>(wd: &WeightedDissection<T>) -> Dissection<T> {
    let faces = wd
        .faces
        .iter()
        .zip(&wd.weights)
        .flat_map(|(f, &w)| fan_split(f, w))
        .collect();
    Dissection {
        polygon: wd.polygon.clone(),
        faces,
        field: wd.field,
        provenance: wd.provenance,
        params: wd.params.clone(),
        variant: wd.variant,
    }
}

/// The primitive integer vector proportional to the face areas.
pub fn proportion_vector<T: Scalar>(faces: &[Triangle<T>]) -> Result<Vec<u64>, ConstructionError> {
    let first = faces
        .first()
        .ok_or_else(|| ConstructionError::BadHypotheses("no faces".into()))?;
    let base = first.area();
    if base.is_zero() {
        return Err(ConstructionError::BadHypotheses("face 0 is degenerate".into()));
    }
    let mut ratios = Vec::with_capacity(faces.len());
    for (i, f) in faces.iter().enumerate() {
        let area = f.area();
        if area.is_zero() {
            return Err(ConstructionError::BadHypotheses(format!("face {i} is degenerate")));
        }
        let ratio = area
            .div_ref(&base)
            .to_rational()
            .ok_or(ConstructionError::NotCommensurable(i))?;
        ratios.push(ratio);
    }
    let lcm = ratios
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let scaled: Vec<BigInt> = ratios
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let gcd = scaled.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    scaled
        .iter()
        .map(|n| {
            u64::try_from(n / &gcd).map_err(|_| out_of_range("proportion entry exceeds u64"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{quad_make, rat_make};

    fn r(n: i64, d: i64) -> Rational {
        rat_make(n, d).unwrap()
    }

    fn ip(x: i64, y: i64) -> Point<Rational> {
        Point::from_integers(x, y)
    }

    #[test]
    fn dart_polygon_examples() {
        assert_eq!(dart_polygon(&r(7, 4)).unwrap().area(), r(3, 4));
        assert_eq!(dart_polygon(&r(3, 2)).unwrap().area(), r(1, 2));
        assert!(matches!(
            dart_polygon(&Rational::one()),
            Err(ConstructionError::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn kite_polygon_examples() {
        let a = quad_make(r(0, 1), r(1, 6), 3).unwrap();
        assert_eq!(kite_polygon(&a).unwrap().area(), a);
        let big = quad_make(r(0, 1), r(1, 2), 3).unwrap();
        assert_eq!(kite_polygon(&big).unwrap().area(), big);
        assert!(kite_polygon(&r(1, 2)).is_err());
        assert!(kite_polygon(&r(0, 1)).is_err());
        assert!(kite_polygon(&r(-1, 3)).is_err());
    }

    #[test]
    fn affine_map_examples() {
        let a = r(7, 4);
        assert_eq!(dart_to_kite_point(&Point::diagonal(&a), &a).unwrap(), ip(0, 0));
        assert_eq!(dart_to_kite_point(&ip(0, 1), &a).unwrap(), ip(0, 1));
        assert_eq!(dart_to_kite_point(&ip(1, 0), &a).unwrap(), ip(1, 0));
        assert_eq!(
            dart_to_kite_point(&ip(1, 1), &a).unwrap(),
            Point::diagonal(&r(3, 10))
        );
        assert_eq!(kite_parameter(&a).unwrap(), r(3, 10));
        assert!(dart_to_kite_point(&ip(0, 0), &r(1, 2)).is_err());
    }

    #[test]
    fn map_dissection_rejects_foreign_polygon() {
        let d = dart_diagonal_dissection(&r(7, 4)).unwrap();
        assert!(matches!(
            map_dissection(&d, &r(9, 4)),
            Err(ConstructionError::PolygonMismatch(_))
        ));
        let mapped = map_dissection(&d, &r(7, 4)).unwrap();
        assert_eq!(mapped.polygon, kite_polygon(&r(3, 10)).unwrap());
        assert_eq!(mapped.face_count(), 2);
        for f in &mapped.faces {
            assert_eq!(f.signed_area(), r(3, 20));
        }
    }

    #[test]
    fn fan_split_single_triangle() {
        let t = Triangle::new(ip(0, 0), ip(3, 0), ip(0, 3));
        let parts = fan_split(&t, 3);
        assert_eq!(parts.len(), 3);
        for p in &parts {
            assert_eq!(p.area(), r(3, 2));
            assert_eq!(p.vertices[0], ip(0, 0));
        }
        assert_eq!(fan_split(&t, 1), vec![t]);
    }

    #[test]
    fn proportion_vector_examples() {
        let a = Triangle::new(ip(0, 0), ip(2, 0), ip(0, 1));
        let b = Triangle::new(ip(0, 0), ip(0, 2), ip(3, 0));
        assert_eq!(proportion_vector(&[a.clone(), b]).unwrap(), vec![1, 3]);
        assert_eq!(proportion_vector(std::slice::from_ref(&a)).unwrap(), vec![1]);
        let s3 = QuadValue::sqrt(3);
        let unit = Triangle::<QuadValue>::new(
            Point::from_integers(0, 0),
            Point::from_integers(1, 0),
            Point::from_integers(0, 1),
        );
        let tall = Triangle::new(
            Point::from_integers(0, 0),
            Point::from_integers(1, 0),
            Point::new(QuadValue::zero(), s3),
        );
        assert_eq!(
            proportion_vector(&[unit, tall]),
            Err(ConstructionError::NotCommensurable(1))
        );
        assert!(proportion_vector::<Rational>(&[]).is_err());
    }

    #[test]
    fn weighted_dissection_structural_checks() {
        let poly = dart_polygon(&r(7, 4)).unwrap();
        let face = Triangle::new(ip(0, 1), ip(1, 1), Point::diagonal(&r(7, 4)));
        let flat = Triangle::new(ip(0, 1), ip(1, 1), ip(2, 1));
        let p = ConstructionParams::default();
        assert!(WeightedDissection::new(poly.clone(), vec![face.clone()], vec![], Provenance::Thm1, p.clone()).is_err());
        assert!(WeightedDissection::new(poly.clone(), vec![face.clone()], vec![0], Provenance::Thm1, p.clone()).is_err());
        assert!(WeightedDissection::new(poly.clone(), vec![flat], vec![1], Provenance::Thm1, p.clone()).is_err());
        assert!(WeightedDissection::new(poly, vec![face], vec![2], Provenance::Thm1, p).is_ok());
    }
}
