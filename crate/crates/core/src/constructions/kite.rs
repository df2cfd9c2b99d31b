use num_traits::One;

use super::{
    fan_split, kite_polygon, lemma1_refine, ConstructionError, ConstructionParams, Dissection,
    Provenance, WeightedDissection,
};
use crate::exactnum::{quad_make, QuadValue, Rational};
use crate::geom::{Point, Triangle};

/// Coordinates of the zig-zag partition of `Q(a)`, `a = √m/(2m)`, `m = 2k+1`.
///
/// The path `(1,0) → (0,b) → (d,e) → (0,c) → (a,a)` cuts the dart into five
/// triangles; `(d, e)` lies on the edge from `(1,0)` to `(a,a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZigzagPoints {
    pub m: u64,
    pub a: QuadValue,
    pub b: QuadValue,
    pub c: QuadValue,
    pub d: QuadValue,
    pub e: QuadValue,
}

fn q(rat: Rational, coef: Rational, m: u64) -> Result<QuadValue, ConstructionError> {
    Ok(quad_make(rat, coef, m as i64)?)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

pub fn thm4_points(k: u64) -> Result<ZigzagPoints, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::BadHypotheses(format!("need k >= 1, got {k}")));
    }
    let m = 2 * k + 1;
    let mi = m as i64;
    let zero = Rational::from_integer(0);
    let a = q(zero.clone(), frac(1, 2 * mi), m)?;
    let b = q(zero, frac(1, mi * mi), m)?;
    let c = QuadValue::from(frac(1, mi));
    let d_scale = frac(mi, (mi - 1) * (2 * mi - 1));
    let d = q(d_scale.clone(), d_scale, m)?;
    let one = QuadValue::one();
    let e = &a * &(&one - &d) / (&one - &a);
    let checks = [
        (c > b, "c > b"),
        (a < d, "a < d"),
        (d < one, "d < 1"),
        (c < &a / &(&one - &a), "c < a/(1-a)"),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(ConstructionError::BadHypotheses(format!("zig-zag check {what} fails")));
    }
    Ok(ZigzagPoints { m, a, b, c, d, e })
}

/// Five-triangle zig-zag partition of `Q(√m/(2m))` with weights
/// `(2m−1, m²−3m+1, m, k, k(2m−1))`, summing to `m(2m−1) = 8k²+6k+1`.
pub fn thm4_partition(k: u64) -> Result<WeightedDissection<QuadValue>, ConstructionError> {
    let ZigzagPoints { m, a, b, c, d, e } = thm4_points(k)?;
    let zero = QuadValue::from_integer(0);
    let origin = Point::from_integers(0, 0);
    let right = Point::from_integers(1, 0);
    let top = Point::from_integers(0, 1);
    let tip = Point::diagonal(&a);
    let low = Point::new(zero.clone(), b);
    let high = Point::new(zero, c);
    let mid = Point::new(d, e);
    let faces = vec![
        Triangle::new(origin, right.clone(), low.clone()),
        Triangle::new(right, mid.clone(), low.clone()),
        Triangle::new(low, mid.clone(), high.clone()),
        Triangle::new(mid, tip.clone(), high.clone()),
        Triangle::new(high, tip, top),
    ];
    let weights = vec![2 * m - 1, m * m - 3 * m + 1, m, k, k * (2 * m - 1)];
    let params = ConstructionParams { k: Some(k), m: Some(m), ..Default::default() };
    WeightedDissection::new(kite_polygon(&a)?, faces, weights, Provenance::Thm4, params)
}

/// Equidissection of the kite `Q(√m/2)` into `u·m` triangles, where
/// `u = 8k²+6k+1` is the face count of the refined zig-zag dart `Q(a)`.
///
/// The kite is the dart plus two triangles of area `(m−1)a/2`, each fanned
/// into `u(m−1)/2` pieces of area `a/u`.
pub fn thm5_partition(k: u64) -> Result<Dissection<QuadValue>, ConstructionError> {
    let dart = lemma1_refine(&thm4_partition(k)?);
    let m = 2 * k + 1;
    let u = dart.face_count() as u64;
    let a = thm4_points(k)?.a;
    let ma = &a * &QuadValue::from_integer(m as i64);
    let tip = Point::diagonal(&a);
    let far = Point::diagonal(&ma);
    let side_a = Triangle::new(Point::from_integers(1, 0), far.clone(), tip.clone());
    let side_b = Triangle::new(Point::from_integers(0, 1), tip, far);
    let w = u * (m - 1) / 2;
    let mut faces = dart.faces;
    faces.extend(fan_split(&side_a, w));
    faces.extend(fan_split(&side_b, w));
    let params = ConstructionParams { k: Some(k), m: Some(m), u: Some(u), ..Default::default() };
    Dissection::new(kite_polygon(&ma)?, faces, Provenance::Thm5, params)
}
