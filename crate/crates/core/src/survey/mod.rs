//! Enumeration of the five- and seven-torsion families by naive height, and
//! the counting experiments built on the closed-form classification.

mod enumerate;
mod experiments;
mod output;

use serde::{Deserialize, Serialize};

pub use enumerate::{
    admitted_pairs, enumerate_representatives, FifthPowers, SurveyResult, family_c4_c6, key_degree, sum_bound, tilde_survey,
    tilde_stats, CurveRecord, Representative, SurveyOptions, TildeCount,
};
pub use experiments::{
    fifth_power_experiment, fifth_power_experiment_oracle, intro_count, x7_prime_count,
};
pub use output::{read_checkpoint, write_csv, write_summary_json, CheckpointBlock};

use crate::{Error, Result};

/// One line of the statistics table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub ell: u32,
    #[serde(rename = "X")]
    pub x: f64,
    /// Curves whose quotient has global Tamagawa number divisible by `l`.
    #[serde(rename = "N")]
    pub n: u64,
    /// All curves counted.
    #[serde(rename = "G")]
    pub g: u64,
    pub percent: f64,
}

impl SurveyRow {
    pub fn new(ell: u32, x: f64, n: u64, g: u64) -> Self {
        let percent = if g == 0 { 0.0 } else { 100.0 * n as f64 / g as f64 };
        SurveyRow { ell, x, n, g, percent }
    }
}

/// Quotients of consecutive rows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    /// Cutoff of the earlier row.
    pub x: f64,
    pub g_ratio: f64,
    pub n_ratio: f64,
}

/// `G` and `N` of each row divided by those of the row before it; rows are
/// sorted by cutoff first.
pub fn ratio_table(rows: &[SurveyRow]) -> Result<Vec<RatioRow>> {
    let mut rows = rows.to_vec();
    rows.sort_by(|a, b| a.x.total_cmp(&b.x));
    rows.windows(2)
        .map(|w| {
            if w[0].g == 0 || w[0].n == 0 {
                return Err(Error::InvalidArgument(format!(
                    "row at X = {} has a zero count",
                    w[0].x
                )));
            }
            Ok(RatioRow {
                x: w[0].x,
                g_ratio: w[1].g as f64 / w[0].g as f64,
                n_ratio: w[1].n as f64 / w[0].n as f64,
            })
        })
        .collect()
}
