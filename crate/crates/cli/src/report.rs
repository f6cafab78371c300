//! Serializable report types. Every decimal is a string so JSON reports
//! round-trip exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    /// UTC, RFC 3339.
    pub generated_at: String,
    pub artifact_version: String,
    pub truncation_policy: String,
    pub results: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    SeqTable(TableDto),
    Enclosures(EnclosureList),
    Verification(VerificationDto),
    Integral(IntegralDto),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDto {
    pub name: String,
    pub digits: u32,
    pub rows: Vec<RowDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowDto {
    pub n: u64,
    pub exact: String,
    pub decimal: String,
    pub target: Option<String>,
    pub abs_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnclosureList {
    pub enclosures: Vec<EnclosureDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnclosureDto {
    pub target: String,
    pub method: String,
    /// `enclosure` for proven bounds, `estimate` for a point value.
    pub kind: String,
    pub n: Option<u64>,
    pub lo_exact: String,
    pub hi_exact: String,
    pub width_exact: String,
    pub lo: String,
    pub hi: String,
    pub width: String,
    /// Whether the interval contains an independent Machin enclosure of the target.
    pub contains_reference: Option<bool>,
    /// Certified bound on the distance of an estimate from the target.
    pub abs_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDto {
    pub name: String,
    pub n: u64,
    pub grade: String,
    pub verdict: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConservationDto {
    pub t: String,
    pub f: String,
    pub f_uncertainty: String,
    pub f_evaluations: u64,
    pub g: String,
    pub g_uncertainty: String,
    pub g_evaluations: u64,
    pub sum_deviation: String,
    pub allowed: String,
    pub pi_quarter_ref: String,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryDto {
    pub holds: u64,
    pub fails: u64,
    pub undecided: u64,
    pub total: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationDto {
    pub suite: String,
    pub outcomes: Vec<OutcomeDto>,
    pub conservation: Vec<ConservationDto>,
    pub enclosures: Vec<EnclosureDto>,
    pub summary: SummaryDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegralDto {
    pub t: String,
    pub method: String,
    pub value: String,
    pub uncertainty: String,
    pub discretization_error: String,
    pub tail_bound: String,
    pub evaluations: u64,
    /// Certified decimal of `√π/2` when `t` is infinite.
    pub reference: Option<String>,
}
