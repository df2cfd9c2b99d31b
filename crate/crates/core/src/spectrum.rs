//! Odd members of the spectrum of a rational dart `D(r/(2s))`, each backed by
//! a verified construction.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    lemma1_refine, thm1_partition, thm2_partition, thm3_partition, ConstructionError,
    ConstructionParams, DartParams, WeightedDissection,
};
use crate::exactnum::Rational;
use crate::verify::verify_equidissection;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Source {
    Thm1,
    Thm2,
    Thm3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: u64,
    pub source: Source,
    pub params: ConstructionParams,
}

impl SpectrumEntry {
    /// Rebuilds the weighted partition whose refinement witnesses `value`.
    pub fn witness(&self) -> Result<WeightedDissection<Rational>, ConstructionError> {
        let missing = || ConstructionError::BadHypotheses("incomplete witness parameters".into());
        let dart = DartParams::new(
            self.params.r.ok_or_else(missing)?,
            self.params.s.ok_or_else(missing)?,
        )?;
        match self.source {
            Source::Thm1 => thm1_partition(&dart, self.params.t.ok_or_else(missing)?),
            Source::Thm2 => thm2_partition(&dart),
            Source::Thm3 => thm3_partition(&dart, self.params.t.ok_or_else(missing)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub a: Rational,
    pub odd_members: Vec<SpectrumEntry>,
    pub even_members: String,
    /// Odd values proven absent: only 1, since a nonconvex quadrilateral is not a triangle.
    pub known_non_members: Vec<u64>,
    pub limit: u64,
}

fn odd_divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).step_by(2).filter(move |d| n.is_multiple_of(*d))
}

/// Odd `t | r − s` with `r − 2s < t < 2(r − s)`, for `s` odd.
fn thm3_divisors(params: &DartParams) -> Vec<u64> {
    let (r, s) = (params.r(), params.s());
    odd_divisors(r - s).filter(|&t| t > r - 2 * s).collect()
}

fn is_verified(wd: &WeightedDissection<Rational>, value: u64) -> bool {
    let d = lemma1_refine(wd);
    let report = verify_equidissection(&d.polygon, &d.faces);
    report.is_equidissection && report.face_count as u64 == value
}

/// Odd values up to `limit` that Theorems 1–3 place in the spectrum, each
/// constructed, refined and verified before it is reported.
pub fn guaranteed_odd_members(params: &DartParams, limit: u64) -> Vec<SpectrumEntry> {
    let (r, s) = (params.r(), params.s());
    let mut candidates: BTreeMap<u64, (Source, Option<u64>)> = BTreeMap::new();
    for value in (r..=limit).step_by(2) {
        candidates.entry(value).or_insert((Source::Thm1, Some(value)));
    }
    if s % 2 == 0 {
        candidates.entry(r - s).or_insert((Source::Thm2, None));
    } else {
        for t in thm3_divisors(params) {
            candidates.entry(2 * (r - s) - t).or_insert((Source::Thm3, Some(t)));
        }
    }
    candidates
        .into_iter()
        .filter(|(value, _)| *value <= limit)
        .map(|(value, (source, t))| SpectrumEntry {
            value,
            source,
            params: ConstructionParams { r: Some(r), s: Some(s), t, ..Default::default() },
        })
        .filter(|entry| {
            entry
                .witness()
                .map(|wd| is_verified(&wd, entry.value))
                .unwrap_or(false)
        })
        .collect()
}

pub fn spectrum_report(params: &DartParams, limit: u64) -> SpectrumReport {
    SpectrumReport {
        a: params.a(),
        odd_members: guaranteed_odd_members(params, limit),
        even_members: "all even >= 2".to_string(),
        known_non_members: vec![1],
        limit,
    }
}

/// Smallest odd divisor `t` of `r − s` exceeding `r − 2s`, if any.
///
/// When `2s < r < 3s` and `r ≢ s (mod 4)`, `(r − s)/2` always qualifies.
pub fn corollary_witness(r: u64, s: u64) -> Result<Option<u64>, ConstructionError> {
    let params = DartParams::new(r, s)?;
    if s.is_multiple_of(2) {
        return Err(ConstructionError::BadHypotheses(format!("s = {s} must be odd")));
    }
    Ok(thm3_divisors(&params).into_iter().next())
}
