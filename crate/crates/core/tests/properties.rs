use std::cmp::Ordering;

use equidissect::constructions::{
    dart_polygon, fan_split, kite_polygon, lemma1_refine, map_dissection, proportion_vector,
    thm1_partition, DartParams,
};
use equidissect::exactnum::{quad_compare, quad_make, rat_make};
use equidissect::geom::{
    orient, point_in_polygon, point_on_segment, poly_area, tri_overlap_area, tri_signed_area,
    Location, Point, SimplePolygon, Triangle,
};
use equidissect::spectrum::guaranteed_odd_members;
use equidissect::{QuadValue, Rational, Ring, Scalar, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| rat_make(n, d).unwrap())
}


fn radicand() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![2i64, 3, 5, 6, 7, 13, 17])
}

/// Three values of one quadratic field.
fn quad_triple() -> impl Strategy<Value = [QuadValue; 3]> {
    (radicand(), prop::array::uniform6(rational())).prop_map(|(m, r)| {
        let q = |a: &Rational, b: &Rational| quad_make(a.clone(), b.clone(), m).unwrap();
        [q(&r[0], &r[1]), q(&r[2], &r[3]), q(&r[4], &r[5])]
    })
}

fn point() -> impl Strategy<Value = Point<Rational>> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn triangle() -> impl Strategy<Value = Triangle<Rational>> {
    (point(), point(), point()).prop_map(|(a, b, c)| Triangle::new(a, b, c))
}

fn frac(n: i64, d: i64) -> Rational {
    rat_make(n, d).unwrap()
}

/// Winding number by summing signed turning angles; the point must not lie
/// on the boundary.
fn winding(p: (f64, f64), vertices: &[(f64, f64)]) -> i32 {
    let n = vertices.len();
    let total: f64 = (0..n)
        .map(|i| {
            let (ax, ay) = (vertices[i].0 - p.0, vertices[i].1 - p.1);
            let (bx, by) = (vertices[(i + 1) % n].0 - p.0, vertices[(i + 1) % n].1 - p.1);
            (ax * by - ay * bx).atan2(ax * bx + ay * by)
        })
        .sum();
    (total / std::f64::consts::TAU).round() as i32
}

fn to_f64(r: &Rational) -> f64 {
    r.to_quad().to_f64()
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
    ((p.0 - a.0 - t * dx).powi(2) + (p.1 - a.1 - t * dy).powi(2)).sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Rational::zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn rational_string_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn quad_field_axioms([a, b, c] in quad_triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert_eq!(&b / &b, QuadValue::one());
        }
    }

    #[test]
    fn quad_sign_is_multiplicative([a, b, _c] in quad_triple()) {
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
        prop_assert_eq!((-&a).sign(), a.sign().flip());
    }

    #[test]
    fn quad_compare_matches_floating_point([a, b, _c] in quad_triple()) {
        let (x, y) = (a.to_f64(), b.to_f64());
        let ord = quad_compare(&a, &b).unwrap();
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(ord, x.partial_cmp(&y).unwrap());
        }
        prop_assert_eq!(ord == Ordering::Equal, a == b);
    }

    #[test]
    fn quad_compare_matches_long_decimals([a, b, _c] in quad_triple()) {
        // 50 digits separate any two distinct values of this size
        let scale = QuadValue::from(Rational::from_integer(num_bigint::BigInt::from(10u32).pow(50)));
        let (fa, fb) = ((&a * &scale).floor(), (&b * &scale).floor());
        let ord = quad_compare(&a, &b).unwrap();
        if fa != fb {
            prop_assert_eq!(ord, fa.cmp(&fb));
        } else {
            prop_assert_eq!(ord, Ordering::Equal);
        }
    }

    #[test]
    fn quad_make_extracts_squares(r in rational(), c in rational(), m in radicand(), k in 1i64..6) {
        let direct = quad_make(r.clone(), &c * &Rational::from_integer(k), m).unwrap();
        prop_assert_eq!(quad_make(r.clone(), c.clone(), k * k * m).unwrap(), direct);
        prop_assert_eq!(quad_make(r.clone(), c, k * k).unwrap().radicand(), 1);
        prop_assert_eq!(quad_make(r.clone(), frac(7, 1), 0).unwrap(), QuadValue::from(r));
    }

    #[test]
    fn quad_json_round_trip([a, _b, _c] in quad_triple()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuadValue>(&json).unwrap(), a);
    }

    #[test]
    fn orient_permutations(p in point(), q in point(), r in point()) {
        let s = orient(&p, &q, &r);
        prop_assert_eq!(orient(&q, &r, &p), s);
        prop_assert_eq!(orient(&r, &p, &q), s);
        prop_assert_eq!(orient(&q, &p, &r), s.flip());
        prop_assert_eq!(orient(&p, &p, &r), Sign::Zero);
    }

    #[test]
    fn signed_area_rotation_and_swap(t in triangle()) {
        let [a, b, c] = t.vertices.clone();
        let area = tri_signed_area(&t);
        prop_assert_eq!(tri_signed_area(&Triangle::new(b.clone(), c.clone(), a.clone())), area.clone());
        prop_assert_eq!(tri_signed_area(&Triangle::new(b, a, c)), -area.clone());
        prop_assert_eq!(t.area(), area.abs());
    }

    #[test]
    fn dart_and_kite_areas(n in 1i64..200, d in 1i64..40) {
        let a = frac(n, d);
        if a > Rational::one() {
            prop_assert_eq!(poly_area(&dart_polygon(&a).unwrap()), &a - &Rational::one());
        }
        if a != frac(1, 2) {
            prop_assert_eq!(poly_area(&kite_polygon(&a).unwrap()), a);
        }
    }

    #[test]
    fn overlap_is_bounded_and_symmetric(s in triangle(), t in triangle()) {
        let st = tri_overlap_area(&s, &t);
        prop_assert_eq!(&st, &tri_overlap_area(&t, &s));
        prop_assert!(st.sign() != Sign::Negative);
        prop_assert!(st <= s.area() && st <= t.area());
        prop_assert_eq!(tri_overlap_area(&s, &s), s.area());
    }

    #[test]
    fn point_location_matches_winding(p in point(), n in 11i64..120, d in 2i64..10) {
        let a = frac(n, d);
        prop_assume!(a > Rational::one());
        let dart = dart_polygon(&a).unwrap();
        let p = Point::new(&p.x / &frac(10, 1) + frac(1, 2), &p.y / &frac(10, 1) + frac(1, 2));
        let loc = point_in_polygon(&p, &dart);
        let on_edge = dart.edges().any(|(u, w)| point_on_segment(&p, u, w));
        prop_assert_eq!(loc == Location::Boundary, on_edge);
        let fp = (to_f64(&p.x), to_f64(&p.y));
        let fv: Vec<_> = dart.vertices().iter().map(|v| (to_f64(&v.x), to_f64(&v.y))).collect();
        let near = (0..fv.len()).any(|i| segment_distance(fp, fv[i], fv[(i + 1) % fv.len()]) < 1e-9);
        if !near {
            let expected = if winding(fp, &fv) != 0 { Location::Inside } else { Location::Outside };
            prop_assert_eq!(loc, expected);
        }
    }

    #[test]
    fn fan_split_pieces_are_equal(t in triangle(), w in 1u64..12) {
        prop_assume!(!t.is_degenerate());
        let pieces = fan_split(&t, w);
        prop_assert_eq!(pieces.len() as u64, w);
        let each = &t.area() / &Rational::from_integer(w as i64);
        prop_assert!(pieces.iter().all(|p| p.area() == each));
    }

    #[test]
    fn refinement_follows_weights(r_half in 1u64..15, s in 1u64..8, extra in 0u64..10) {
        let r = 2 * r_half + 1;
        let Ok(dart) = DartParams::new(r, s) else { return Ok(()) };
        let t = r + 2 * extra;
        let wd = thm1_partition(&dart, t).unwrap();
        prop_assert_eq!(lemma1_refine(&wd).face_count() as u64, wd.total_weight());
        let g = wd.weights.iter().fold(0u64, |g, &w| g.gcd(&w));
        let reduced: Vec<u64> = wd.weights.iter().map(|w| w / g).collect();
        prop_assert_eq!(proportion_vector(&wd.faces).unwrap(), reduced);
    }

    #[test]
    fn affine_map_scales_areas(r_half in 1u64..12, s in 1u64..6, extra in 0u64..6) {
        let r = 2 * r_half + 1;
        let Ok(dart) = DartParams::new(r, s) else { return Ok(()) };
        let a = dart.a();
        let d = lemma1_refine(&thm1_partition(&dart, r + 2 * extra).unwrap());
        let mapped = map_dissection(&d, &a).unwrap();
        let factor = &(&a + &a) - &Rational::one();
        for (before, after) in d.faces.iter().zip(&mapped.faces) {
            prop_assert_eq!(&after.area() * &factor, before.area());
            prop_assert_eq!(after.signed_area().sign(), before.signed_area().sign());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spectrum_grows_with_limit(r_half in 2u64..10, s in 1u64..6, lo in 1u64..30, span in 0u64..20) {
        let r = 2 * r_half + 1;
        let Ok(dart) = DartParams::new(r, s) else { return Ok(()) };
        let small = guaranteed_odd_members(&dart, lo);
        let large = guaranteed_odd_members(&dart, lo + span);
        prop_assert!(small.iter().all(|e| e.value % 2 == 1 && e.value <= lo));
        prop_assert!(small.iter().all(|e| large.contains(e)));
        let values: Vec<u64> = large.iter().map(|e| e.value).collect();
        prop_assert!(values.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn polygon_json_round_trip() {
    let dart = dart_polygon(&frac(7, 4)).unwrap();
    let json = serde_json::to_string(&dart).unwrap();
    assert_eq!(json, r#"[["0/1","1/1"],["1/1","1/1"],["1/1","0/1"],["7/4","7/4"]]"#);
    assert_eq!(serde_json::from_str::<SimplePolygon<Rational>>(&json).unwrap(), dart);
    assert!(serde_json::from_str::<SimplePolygon<Rational>>(r#"[["0","0"],["1","0"]]"#).is_err());
}
