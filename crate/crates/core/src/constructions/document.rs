use serde::{Deserialize, Serialize};

use super::{field_of, ConstructionParams, Dissection, Provenance, Variant, WeightedDissection};
use crate::exactnum::{Rational, Scalar};
use crate::geom::{GeomError, SimplePolygon, Triangle};
use crate::verify::{verify_equidissection, Failure, FailureCode, VerificationReport};

/// JSON form shared by weighted and plain dissections.
///
/// Parsing only validates the polygon; faces are checked by the verifier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct DissectionDocument<T: Scalar> {
    pub field: u64,
    pub polygon: SimplePolygon<T>,
    pub faces: Vec<Triangle<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default)]
    pub params: ConstructionParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<Variant>,
}

impl<T: Scalar> From<&WeightedDissection<T>> for DissectionDocument<T> {
    fn from(wd: &WeightedDissection<T>) -> Self {
        DissectionDocument {
            field: wd.field,
            polygon: wd.polygon.clone(),
            faces: wd.faces.clone(),
            weights: Some(wd.weights.clone()),
            provenance: Some(wd.provenance),
            params: wd.params.clone(),
            variant: wd.variant,
        }
    }
}

impl<T: Scalar> From<&Dissection<T>> for DissectionDocument<T> {
    fn from(d: &Dissection<T>) -> Self {
        DissectionDocument {
            field: d.field,
            polygon: d.polygon.clone(),
            faces: d.faces.clone(),
            weights: None,
            provenance: Some(d.provenance),
            params: d.params.clone(),
            variant: d.variant,
        }
    }
}

impl<T: Scalar> DissectionDocument<T> {
    /// Verifies the faces as an equidissection of the polygon and checks the
    /// declared `field` against the coordinates.
    pub fn verify(&self) -> VerificationReport<T> {
        let report = verify_equidissection(&self.polygon, &self.faces);
        match field_of(&self.polygon, &self.faces) {
            Ok(actual) if actual != self.field => report.with_failure(Failure::new(
                FailureCode::FieldMismatch,
                vec![],
                format!("document declares field {} but coordinates lie in field {actual}", self.field),
            )),
            _ => report,
        }
    }

    /// The same document with every coordinate rational, if possible.
    pub fn to_rational(&self) -> Option<DissectionDocument<Rational>> {
        let all_rational = self
            .polygon
            .vertices()
            .iter()
            .chain(self.faces.iter().flat_map(|f| f.vertices.iter()))
            .all(|p| p.x.to_rational().is_some() && p.y.to_rational().is_some());
        if !all_rational {
            return None;
        }
        let to_rat = |v: &T| v.to_rational().expect("checked rational");
        let polygon: Result<_, GeomError> = self.polygon.map(to_rat);
        Some(DissectionDocument {
            field: self.field,
            polygon: polygon.ok()?,
            faces: self.faces.iter().map(|f| f.map(to_rat)).collect(),
            weights: self.weights.clone(),
            provenance: self.provenance,
            params: self.params.clone(),
            variant: self.variant,
        })
    }
}
