//! Exact equal-area triangle dissections of darts and kites.
//!
//! All geometry is generic over [`Scalar`], implemented by [`Rational`] and
//! by [`QuadValue`] (elements of a real quadratic field). Every predicate is
//! evaluated exactly; decimal output exists only for display.

pub mod constructions;
pub mod exactnum;
pub mod geom;
pub mod spectrum;
pub mod verify;

pub use exactnum::{NumError, QuadValue, Rational, Ring, Scalar, Sign};

pub type RatPoint = geom::Point<Rational>;
pub type QuadPoint = geom::Point<QuadValue>;
pub type RatTriangle = geom::Triangle<Rational>;
pub type QuadTriangle = geom::Triangle<QuadValue>;
pub type RatPolygon = geom::SimplePolygon<Rational>;
pub type QuadPolygon = geom::SimplePolygon<QuadValue>;
pub type RatWeightedDissection = constructions::WeightedDissection<Rational>;
pub type QuadWeightedDissection = constructions::WeightedDissection<QuadValue>;
pub type RatDissection = constructions::Dissection<Rational>;
pub type QuadDissection = constructions::Dissection<QuadValue>;
pub type RatReport = verify::VerificationReport<Rational>;
pub type QuadReport = verify::VerificationReport<QuadValue>;
