//! Zero-tolerance tiling and equal-area certificates.
//!
//! A face set tiles a simple polygon exactly when every face is nondegenerate
//! and contained in the polygon, no two faces overlap in positive area, and
//! the face areas add up to the polygon area. Each check is exact; failures
//! are collected rather than short-circuited.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::exactnum::{join_radicands, Ring, Scalar};
use crate::geom::lattice::to_lattice;
use crate::geom::{
    clip_triangle, contains_triangle, poly_area, tri_in_polygon, triangles_separated,
    SimplePolygon, Triangle,
};

pub const CERTIFICATE: &str = "every face nondegenerate and contained in the polygon, \
every pair of faces with zero overlap area, and face areas summing to the polygon area: \
together these prove an exact tiling of a simple polygon";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FailureCode {
    FieldMismatch,
    Degenerate,
    NotContained,
    Overlap,
    AreaSum,
    UnequalArea,
}

impl FailureCode {
    /// The code as written in report JSON.
    pub fn as_str(self) -> &'static str {
        match self {
            FailureCode::FieldMismatch => "FIELD_MISMATCH",
            FailureCode::Degenerate => "DEGENERATE",
            FailureCode::NotContained => "NOT_CONTAINED",
            FailureCode::Overlap => "OVERLAP",
            FailureCode::AreaSum => "AREA_SUM",
            FailureCode::UnequalArea => "UNEQUAL_AREA",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub code: FailureCode,
    pub faces: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct VerificationReport<T: Scalar> {
    pub is_tiling: bool,
    pub is_equidissection: bool,
    pub face_count: usize,
    pub common_area: Option<T>,
    pub failures: Vec<Failure>,
    pub certificate: String,
}

impl<T: Scalar> VerificationReport<T> {
    /// CLI exit status: 0 equidissection, 2 not a tiling, 3 tiling with unequal areas.
    pub fn exit_code(&self) -> i32 {
        if self.is_equidissection {
            0
        } else if !self.is_tiling {
            2
        } else {
            3
        }
    }

    pub fn has_failure(&self, code: FailureCode) -> bool {
        self.failures.iter().any(|f| f.code == code)
    }

    /// Adds a failure and recomputes the verdict.
    pub fn with_failure(self, extra: Failure) -> Self {
        let mut failures = self.failures;
        failures.push(extra);
        finish(failures, self.face_count, self.common_area)
    }

    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> VerificationReport<U> {
        VerificationReport {
            is_tiling: self.is_tiling,
            is_equidissection: self.is_equidissection,
            face_count: self.face_count,
            common_area: self.common_area.as_ref().map(f),
            failures: self.failures.clone(),
            certificate: self.certificate.clone(),
        }
    }
}

impl Failure {
    pub fn new(code: FailureCode, faces: Vec<usize>, detail: impl Into<String>) -> Self {
        Failure { code, faces, detail: detail.into() }
    }
}

fn failure(code: FailureCode, faces: Vec<usize>, detail: impl Into<String>) -> Failure {
    Failure::new(code, faces, detail)
}

struct Bounds<K> {
    min_x: K,
    max_x: K,
    min_y: K,
    max_y: K,
}

fn bounds<'a, K: 'a>(
    xs: impl Iterator<Item = (&'a K, &'a K)> + Clone,
    cmp: impl Fn(&K, &K) -> Ordering,
) -> Bounds<&'a K> {
    let pick = |axis: fn((&'a K, &'a K)) -> &'a K, want: Ordering| {
        xs.clone()
            .map(axis)
            .reduce(|best, v| if cmp(v, best) == want { v } else { best })
            .expect("three vertices")
    };
    Bounds {
        min_x: pick(|p| p.0, Ordering::Less),
        max_x: pick(|p| p.0, Ordering::Greater),
        min_y: pick(|p| p.1, Ordering::Less),
        max_y: pick(|p| p.1, Ordering::Greater),
    }
}

/// Index pairs whose bounding boxes share interior points.
///
/// Boxes meeting in at most a line are separated by an axis parallel line,
/// so the faces inside them cannot overlap.
fn candidate_pairs<K>(boxes: &[Bounds<&K>], cmp: impl Fn(&K, &K) -> Ordering) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&i, &j| cmp(boxes[i].min_x, boxes[j].min_x));
    let mut out = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if cmp(boxes[j].min_x, boxes[i].max_x).is_ge() {
                break;
            }
            if cmp(boxes[j].min_y, boxes[i].max_y).is_lt() && cmp(boxes[i].min_y, boxes[j].max_y).is_lt() {
                out.push((i, j));
            }
        }
    }
    out
}

fn overlap_area<T: Scalar>(a: &Triangle<T>, b: &Triangle<T>) -> T {
    let clipped = clip_triangle(&a.vertices, b);
    if clipped.len() < 3 {
        return T::zero();
    }
    let origin = &clipped[0];
    clipped
        .windows(2)
        .skip(1)
        .fold(T::zero(), |acc, w| acc + crate::geom::cross(origin, &w[0], &w[1]))
        .div_ref(&T::from_integer(2))
}

/// Pairs of faces overlapping in positive area, with that area.
///
/// `screen` holds counterclockwise copies of `exact` in any ring with the
/// same orientations; only pairs it cannot separate reach exact clipping.
fn overlapping_pairs<T: Scalar, K: Ring>(
    exact: &[(usize, Triangle<T>)],
    screen: &[Triangle<K>],
) -> Vec<(usize, usize, T)> {
    let boxes: Vec<_> = screen
        .iter()
        .map(|t| bounds(t.vertices.iter().map(|p| (&p.x, &p.y)), K::exact_cmp))
        .collect();
    candidate_pairs(&boxes, K::exact_cmp)
        .into_iter()
        .filter(|&(i, j)| !triangles_separated(&screen[i], &screen[j]))
        .map(|(i, j)| {
            let area = overlap_area(&exact[i].1, &exact[j].1);
            let (fi, fj) = (exact[i].0.min(exact[j].0), exact[i].0.max(exact[j].0));
            (fi, fj, area)
        })
        .collect()
}

fn field_failures<T: Scalar>(polygon: &SimplePolygon<T>, faces: &[Triangle<T>]) -> Vec<Failure> {
    let field = polygon.radicand();
    faces
        .iter()
        .enumerate()
        .filter_map(|(i, f)| {
            let ok = f.radicand().and_then(|m| join_radicands(field, m));
            ok.err().map(|e| failure(FailureCode::FieldMismatch, vec![i], e.to_string()))
        })
        .collect()
}

fn finish<T: Scalar>(
    mut failures: Vec<Failure>,
    face_count: usize,
    common_area: Option<T>,
) -> VerificationReport<T> {
    failures.sort_by(|a, b| a.faces.cmp(&b.faces).then(a.code.cmp(&b.code)));
    let is_tiling = !failures.iter().any(|f| f.code != FailureCode::UnequalArea);
    let is_equidissection = is_tiling && failures.is_empty();
    VerificationReport {
        is_tiling,
        is_equidissection,
        face_count,
        common_area: if is_equidissection { common_area } else { None },
        failures,
        certificate: CERTIFICATE.to_string(),
    }
}

fn tiling_failures<T: Scalar>(polygon: &SimplePolygon<T>, faces: &[Triangle<T>]) -> Vec<Failure> {
    let mut failures = field_failures(polygon, faces);
    if !failures.is_empty() {
        return failures;
    }
    let lattice = to_lattice(polygon.vertices(), faces);
    let mut live = Vec::with_capacity(faces.len());
    let mut total = T::zero();
    for (i, f) in faces.iter().enumerate() {
        let area = f.area();
        if area.is_zero() {
            failures.push(failure(FailureCode::Degenerate, vec![i], "face has zero area"));
            continue;
        }
        let contained = match &lattice {
            Some(l) => contains_triangle(&l.faces[i], &l.centroid(i), &l.polygon),
            None => tri_in_polygon(f, polygon),
        };
        if !contained {
            failures.push(failure(
                FailureCode::NotContained,
                vec![i],
                "face is not contained in the polygon",
            ));
        }
        total = total + &area;
        live.push((i, f.counterclockwise()));
    }
    let overlaps = match &lattice {
        Some(l) => {
            let screen: Vec<_> = live.iter().map(|(i, _)| l.faces[*i].counterclockwise()).collect();
            overlapping_pairs(&live, &screen)
        }
        None => {
            let screen: Vec<_> = live.iter().map(|(_, t)| t.clone()).collect();
            overlapping_pairs(&live, &screen)
        }
    };
    for (i, j, area) in overlaps {
        failures.push(failure(
            FailureCode::Overlap,
            vec![i, j],
            format!("faces overlap in area {}", area.to_decimal(12)),
        ));
    }
    let target = poly_area(polygon);
    if total != target {
        failures.push(failure(
            FailureCode::AreaSum,
            vec![],
            format!(
                "face areas sum to {} but the polygon has area {}",
                total.to_decimal(12),
                target.to_decimal(12)
            ),
        ));
    }
    failures
}

pub fn verify_tiling<T: Scalar>(polygon: &SimplePolygon<T>, faces: &[Triangle<T>]) -> VerificationReport<T> {
    finish(tiling_failures(polygon, faces), faces.len(), None)
}

/// [`verify_tiling`] plus exact equality of all face areas.
pub fn verify_equidissection<T: Scalar>(
    polygon: &SimplePolygon<T>,
    faces: &[Triangle<T>],
) -> VerificationReport<T> {
    let mut failures = tiling_failures(polygon, faces);
    if failures.iter().any(|f| f.code == FailureCode::FieldMismatch) {
        return finish(failures, faces.len(), None);
    }
    let areas: Vec<T> = faces.iter().map(Triangle::area).collect();
    if let Some(first) = areas.first() {
        for (i, area) in areas.iter().enumerate().skip(1) {
            if area != first {
                failures.push(failure(
                    FailureCode::UnequalArea,
                    vec![0, i],
                    format!(
                        "face {i} has area {} but face 0 has area {}",
                        area.to_decimal(12),
                        first.to_decimal(12)
                    ),
                ));
            }
        }
    }
    let common = (!faces.is_empty())
        .then(|| poly_area(polygon).div_ref(&T::from_integer(faces.len() as i64)));
    finish(failures, faces.len(), common)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        lemma1_refine, thm1_partition, thm1_partition_with, thm2_partition, DartParams,
        Thm1Variant,
    };
    use crate::exactnum::{QuadValue, Rational};
    use crate::geom::Point;

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn thm2_faces_tile_but_are_unequal() {
        let wd = thm2_partition(&DartParams::new(7, 2).unwrap()).unwrap();
        let report = verify_tiling(&wd.polygon, &wd.faces);
        assert!(report.is_tiling, "{:?}", report.failures);
        assert_eq!(report.face_count, 3);
        let report = verify_equidissection(&wd.polygon, &wd.faces);
        assert!(report.is_tiling);
        assert!(!report.is_equidissection);
        assert!(report.common_area.is_none());
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn perturbed_vertex_breaks_the_tiling() {
        let mut wd = thm2_partition(&DartParams::new(7, 2).unwrap()).unwrap();
        assert_eq!(wd.faces[0].vertices[2], Point::new(frac(13, 10), frac(7, 10)));
        // sliding along the vertical base keeps the area but overlaps a neighbour
        wd.faces[0].vertices[2] = Point::new(frac(13, 10), frac(8, 10));
        let report = verify_tiling(&wd.polygon, &wd.faces);
        assert!(!report.is_tiling);
        assert!(report.has_failure(FailureCode::Overlap));
        assert!(!report.has_failure(FailureCode::AreaSum));
        // pulling towards the base opens a gap
        wd.faces[0].vertices[2] = Point::new(frac(12, 10), frac(7, 10));
        let report = verify_tiling(&wd.polygon, &wd.faces);
        assert!(report.has_failure(FailureCode::AreaSum), "{:?}", report.failures);
        assert_eq!(report.exit_code(), 2);
    }

    #[test]
    fn refined_thm1_is_an_equidissection() {
        let d = lemma1_refine(&thm1_partition(&DartParams::new(7, 2).unwrap(), 27).unwrap());
        let report = verify_equidissection(&d.polygon, &d.faces);
        assert!(report.is_equidissection, "{:?}", report.failures);
        assert_eq!(report.face_count, 27);
        assert_eq!(report.common_area, Some(frac(1, 36)));
    }

    #[test]
    fn paper_literal_thm1_fails() {
        let wd = thm1_partition_with(&DartParams::new(7, 2).unwrap(), 27, Thm1Variant::PaperLiteral)
            .unwrap();
        let report = verify_tiling(&wd.polygon, &wd.faces);
        assert!(!report.is_tiling);
        assert!(report.has_failure(FailureCode::AreaSum), "{:?} {:?}", wd.faces[0], report.failures);
    }

    #[test]
    fn mixed_fields_are_reported_not_panicked() {
        let poly = crate::constructions::dart_polygon(&QuadValue::from(frac(7, 4))).unwrap();
        let bad = Triangle::new(
            Point::new(QuadValue::sqrt(2), QuadValue::from_integer(1)),
            Point::new(QuadValue::sqrt(3), QuadValue::from_integer(1)),
            Point::from_integers(1, 1),
        );
        let report = verify_equidissection(&poly, &[bad]);
        assert!(!report.is_tiling);
        assert_eq!(report.failures[0].code, FailureCode::FieldMismatch);
    }

    #[test]
    fn empty_face_list_is_not_a_tiling() {
        let poly = crate::constructions::dart_polygon(&frac(7, 4)).unwrap();
        let report = verify_equidissection(&poly, &[]);
        assert!(!report.is_tiling);
        assert_eq!(report.failures[0].code, FailureCode::AreaSum);
    }

    #[test]
    fn failures_sorted_by_face_index() {
        let poly = crate::constructions::dart_polygon(&frac(7, 4)).unwrap();
        let t = Triangle::new(Point::from_integers(0, 1), Point::from_integers(1, 1), Point::diagonal(&frac(7, 4)));
        let faces = vec![t.clone(), Triangle::new(Point::from_integers(0, 0), Point::from_integers(1, 0), Point::from_integers(0, 1)), t];
        let report = verify_equidissection(&poly, &faces);
        let keys: Vec<_> = report.failures.iter().map(|f| f.faces.clone()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(report.has_failure(FailureCode::Overlap));
        assert!(report.has_failure(FailureCode::NotContained));
    }

    #[test]
    fn code_names_match_json() {
        use FailureCode::*;
        for code in [FieldMismatch, Degenerate, NotContained, Overlap, AreaSum, UnequalArea] {
            assert_eq!(serde_json::to_value(code).unwrap(), code.as_str());
        }
    }

    mod lattice_screen {
        use super::*;
        use crate::constructions::dart_polygon;
        use proptest::prelude::*;

        fn rat() -> impl Strategy<Value = Rational> {
            (-8i64..=24, 1i64..=9).prop_map(|(n, d)| frac(n, d))
        }

        fn tri() -> impl Strategy<Value = Triangle<Rational>> {
            prop::array::uniform6(rat()).prop_map(|c| {
                Triangle::new(
                    Point::new(c[0].clone() / frac(8, 1), c[1].clone() / frac(8, 1)),
                    Point::new(c[2].clone() / frac(8, 1), c[3].clone() / frac(8, 1)),
                    Point::new(c[4].clone() / frac(8, 1), c[5].clone() / frac(8, 1)),
                )
            })
        }

        proptest! {
            #[test]
            fn integer_screen_agrees_with_exact(faces in prop::collection::vec(tri(), 1..8)) {
                let faces: Vec<_> = faces.into_iter().filter(|f| !f.is_degenerate()).collect();
                let polygon = dart_polygon(&frac(7, 4)).unwrap();
                let lattice = to_lattice(polygon.vertices(), &faces).unwrap();
                for (i, f) in faces.iter().enumerate() {
                    prop_assert_eq!(
                        contains_triangle(&lattice.faces[i], &lattice.centroid(i), &lattice.polygon),
                        tri_in_polygon(f, &polygon)
                    );
                }
                let live: Vec<_> = faces.iter().map(|f| f.counterclockwise()).enumerate().collect();
                let exact: Vec<_> = live.iter().map(|(_, t)| t.clone()).collect();
                let screen: Vec<_> = lattice.faces.iter().map(|t| t.counterclockwise()).collect();
                prop_assert_eq!(overlapping_pairs(&live, &screen), overlapping_pairs(&live, &exact));
            }
        }
    }
}
