use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{
    dart_polygon, ConstructionError, ConstructionParams, Dissection, Provenance, Variant,
    WeightedDissection,
};
use crate::exactnum::{Rational, Scalar};
use crate::geom::{Point, Triangle};

/// Dart parameter `a = r/(2s)` with `gcd(r, s) = 1`, `r` odd and `r > 2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDartParams")]
pub struct DartParams {
    r: u64,
    s: u64,
}

#[derive(Deserialize)]
struct RawDartParams {
    r: u64,
    s: u64,
}

impl TryFrom<RawDartParams> for DartParams {
    type Error = ConstructionError;

    fn try_from(raw: RawDartParams) -> Result<Self, Self::Error> {
        DartParams::new(raw.r, raw.s)
    }
}

fn bad(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::BadHypotheses(msg.into())
}

impl DartParams {
    pub fn new(r: u64, s: u64) -> Result<Self, ConstructionError> {
        if s == 0 {
            return Err(bad("s must be positive"));
        }
        if r.is_multiple_of(2) {
            return Err(bad(format!("r = {r} must be odd")));
        }
        if r <= 2 * s {
            return Err(bad(format!("need r > 2s, got r = {r}, s = {s}")));
        }
        if r.gcd(&s) != 1 {
            return Err(bad(format!("r = {r} and s = {s} are not coprime")));
        }
        Ok(DartParams { r, s })
    }

    /// Every admissible pair with `r ≤ r_max`, ordered by `r` then `s`.
    pub fn all_up_to(r_max: u64) -> Vec<DartParams> {
        (3..=r_max)
            .step_by(2)
            .flat_map(|r| (1..=(r - 1) / 2).map(move |s| (r, s)))
            .filter_map(|(r, s)| DartParams::new(r, s).ok())
            .collect()
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn a(&self) -> Rational {
        frac(self.r as i64, 2 * self.s as i64)
    }

    fn params(&self, t: Option<u64>) -> ConstructionParams {
        ConstructionParams { r: Some(self.r), s: Some(self.s), t, ..Default::default() }
    }
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn pt(x: Rational, y: Rational) -> Point<Rational> {
    Point::new(x, y)
}

/// Which formula for `q` to use in the Theorem 1 partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Thm1Variant {
    /// `q = r(t − r + 2s)/(2st)`, which puts `(p, q)` on the edge `(1,0)–(a,a)`.
    #[default]
    Corrected,
    /// `q = r(t − r − 2s)/(2st)`, the erratum; does not tile the dart.
    PaperLiteral,
}

pub fn thm1_partition(params: &DartParams, t: u64) -> Result<WeightedDissection<Rational>, ConstructionError> {
    thm1_partition_with(params, t, Thm1Variant::Corrected)
}

/// Three triangles meeting at `(p, q)` on the edge `(1,0)–(a,a)`, weighted
/// `((t−r)/2, (t−r+2s)/2, r−s)`. At `t = r` the first face has zero weight
/// and is dropped.
pub fn thm1_partition_with(
    params: &DartParams,
    t: u64,
    variant: Thm1Variant,
) -> Result<WeightedDissection<Rational>, ConstructionError> {
    let (r, s) = (params.r as i64, params.s as i64);
    if t.is_multiple_of(2) {
        return Err(bad(format!("t = {t} must be odd")));
    }
    if t < params.r {
        return Err(bad(format!("need t >= r, got t = {t}, r = {r}")));
    }
    let t = t as i64;
    let a = params.a();
    let shift = match variant {
        Thm1Variant::Corrected => 2 * s,
        Thm1Variant::PaperLiteral => -2 * s,
    };
    let q = frac(r * (t - r + shift), 2 * s * t);
    let p = &q + &frac(r - 2 * s, t);
    let pq = pt(p, q);
    let top_left = Point::from_integers(0, 1);
    let reflex = Point::from_integers(1, 1);
    let faces = [
        Triangle::new(top_left.clone(), reflex.clone(), pq.clone()),
        Triangle::new(reflex, Point::from_integers(1, 0), pq.clone()),
        Triangle::new(top_left, pq, Point::diagonal(&a)),
    ];
    let weights = [((t - r) / 2) as u64, ((t - r + 2 * s) / 2) as u64, (r - s) as u64];
    let (faces, weights): (Vec<_>, Vec<_>) = faces
        .into_iter()
        .zip(weights)
        .filter(|(_, w)| *w > 0)
        .unzip();
    let mut wd = WeightedDissection::new(
        dart_polygon(&a)?,
        faces,
        weights,
        Provenance::Thm1,
        params.params(Some(t as u64)),
    )?;
    if variant == Thm1Variant::PaperLiteral {
        wd.variant = Some(Variant::ErratumVariant);
    }
    Ok(wd)
}

/// Chord along `x + y = 2` through the reflex vertex; weights `(s/2, s/2, r−2s)`.
pub fn thm2_partition(params: &DartParams) -> Result<WeightedDissection<Rational>, ConstructionError> {
    let (r, s) = (params.r as i64, params.s as i64);
    if s % 2 != 0 {
        return Err(bad(format!("s = {s} must be even")));
    }
    let a = params.a();
    let p = frac(3 * r - 4 * s, 2 * r - 2 * s);
    let q = frac(r, 2 * r - 2 * s);
    let lower = pt(p.clone(), q.clone());
    let upper = pt(q, p);
    let reflex = Point::from_integers(1, 1);
    let faces = vec![
        Triangle::new(Point::from_integers(1, 0), reflex.clone(), lower.clone()),
        Triangle::new(Point::from_integers(0, 1), reflex, upper.clone()),
        Triangle::new(lower, Point::diagonal(&a), upper),
    ];
    let weights = vec![(s / 2) as u64, (s / 2) as u64, (r - 2 * s) as u64];
    WeightedDissection::new(dart_polygon(&a)?, faces, weights, Provenance::Thm2, params.params(None))
}

/// Asymmetric chord through the reflex vertex, for `t` an odd divisor of
/// `r − s` with `r − 2s < t < 2r − 2s`. Weights
/// `((3r−4s−t)/2 − c(r−2s), (r−t)/2, c(r−2s))` with `c = (r−s)/t`, summing
/// to `2(r−s) − t`.
pub fn thm3_partition(params: &DartParams, t: u64) -> Result<WeightedDissection<Rational>, ConstructionError> {
    let (r, s) = (params.r as i64, params.s as i64);
    if s % 2 == 0 {
        return Err(bad(format!("s = {s} must be odd")));
    }
    if t.is_multiple_of(2) {
        return Err(bad(format!("t = {t} must be odd")));
    }
    let t = t as i64;
    if (r - s) % t != 0 {
        return Err(bad(format!("t = {t} must divide r - s = {}", r - s)));
    }
    if t <= r - 2 * s {
        return Err(bad(format!("need t > r - 2s = {}, got t = {t}", r - 2 * s)));
    }
    if t >= 2 * r - 2 * s {
        return Err(bad(format!("need t < 2r - 2s = {}, got t = {t}", 2 * r - 2 * s)));
    }
    let c = (r - s) / t;
    let weights = [
        (3 * r - 4 * s - t) / 2 - c * (r - 2 * s),
        (r - t) / 2,
        c * (r - 2 * s),
    ];
    if let Some(i) = weights.iter().position(|&w| w <= 0) {
        return Err(bad(format!("weight {i} is not positive: {}", weights[i])));
    }
    let a = params.a();
    let q = frac(r * (t - r + 2 * s), 2 * s * t);
    let p = &q + &frac(r - 2 * s, t);
    let p2 = frac(r * (r - t), 2 * s * (2 * r - 2 * s - t));
    let q2 = &p2 + &frac(r - 2 * s, 2 * r - 2 * s - t);
    let lower = pt(p, q);
    let upper = pt(p2, q2);
    let reflex = Point::from_integers(1, 1);
    let faces = vec![
        Triangle::new(Point::from_integers(1, 0), reflex.clone(), lower.clone()),
        Triangle::new(Point::from_integers(0, 1), reflex, upper.clone()),
        Triangle::new(lower, Point::diagonal(&a), upper),
    ];
    WeightedDissection::new(
        dart_polygon(&a)?,
        faces,
        weights.iter().map(|&w| w as u64).collect(),
        Provenance::Thm3,
        params.params(Some(t as u64)),
    )
}

/// The two halves of `D(a)` on either side of the diagonal `(1,1)–(a,a)`.
pub fn dart_diagonal_dissection<T: Scalar>(a: &T) -> Result<Dissection<T>, ConstructionError> {
    let polygon = dart_polygon(a)?;
    let reflex = Point::from_integers(1, 1);
    let tip = Point::diagonal(a);
    let faces = vec![
        Triangle::new(Point::from_integers(0, 1), reflex.clone(), tip.clone()),
        Triangle::new(reflex, Point::from_integers(1, 0), tip),
    ];
    Dissection::new(polygon, faces, Provenance::Diagonal, ConstructionParams::default())
}
