//! JSON documents emitted by the CLI. Big integers travel as decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use takahashi::claims::ClaimReport;
use takahashi::exactalg::AbelianGroup;
use takahashi::knotkit::TwoBridge;

fn decimal(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(BigInt::to_string).collect()
}

fn order_string(g: &AbelianGroup) -> String {
    g.order().map_or_else(|| "infinite".to_string(), |o| o.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct H1Report {
    pub n: usize,
    pub pq: String,
    pub rs: String,
    pub torsion: Vec<String>,
    pub free_rank: usize,
    pub order: String,
}

impl H1Report {
    pub fn new(n: usize, pq: String, rs: String, g: &AbelianGroup) -> Self {
        Self { n, pq, rs, torsion: decimal(g.torsion()), free_rank: g.free_rank(), order: order_string(g) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PresentationReport {
    pub n: usize,
    pub pq: String,
    pub rs: String,
    pub route: String,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub alpha: i64,
    pub beta: i64,
}

impl From<TwoBridge> for KnotReport {
    fn from(k: TwoBridge) -> Self {
        Self { alpha: k.alpha(), beta: k.beta() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BranchKnotReport {
    pub q: i64,
    pub s: i64,
    pub knot: KnotReport,
    pub conway_form: Vec<i64>,
    pub conway_fraction: String,
    pub conway_class: KnotReport,
    pub alternate: KnotReport,
    pub alternate_equivalent: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverReport {
    pub alpha: i64,
    pub beta: i64,
    pub n: usize,
    pub alexander: String,
    pub torsion: Vec<String>,
    pub free_rank: usize,
    pub order: String,
    pub resultant: String,
}

impl CoverReport {
    pub fn new(k: TwoBridge, n: usize, alexander: String, g: &AbelianGroup, resultant: &BigInt) -> Self {
        Self {
            alpha: k.alpha(),
            beta: k.beta(),
            n,
            alexander,
            torsion: decimal(g.torsion()),
            free_rank: g.free_rank(),
            order: order_string(g),
            resultant: resultant.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EquivalenceReport {
    pub first: KnotReport,
    pub second: KnotReport,
    pub allow_mirror: bool,
    pub equivalent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BraidAlexanderReport {
    pub word: String,
    pub alexander: String,
    /// Lowest degree first.
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub all_pass: bool,
    pub claims: Vec<ClaimReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub grid_max: i64,
    pub max_n: usize,
    pub rows: Vec<H1Report>,
}
