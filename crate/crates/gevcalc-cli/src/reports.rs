//! Machine-readable report documents.
//!
//! JSON reports are single top-level objects with snake_case keys and no
//! timestamps, so identical run specifications produce byte-identical
//! output. CSV is UTF-8, comma-separated, `.` decimal, floats printed with
//! 17 significant digits.

use gevcalc_core::gevrey::{EquivalenceReport, GevreyFit};
use serde::{Deserialize, Serialize};

/// 17-significant-digit float form used in CSV bodies.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleDoc {
    pub index: f64,
    pub norm: f64,
}

/// Norm sweep over the dual (both groups).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub command: String,
    pub word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trunc: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_max: Option<f64>,
    pub samples: Vec<SampleDoc>,
    pub sup_norm: f64,
    pub growth_slope: f64,
    pub stabilization_ratio: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<[usize; 2]>,
}

impl SweepDoc {
    /// `index,norm` rows with `sup`/`slope`/`stab_ratio` footer rows.
    pub fn to_csv(&self, index_name: &str) -> String {
        let mut out = format!("{index_name},norm\n");
        for s in &self.samples {
            out.push_str(&format!("{},{}\n", fmt_float(s.index), fmt_float(s.norm)));
        }
        out.push_str(&format!("sup,{}\n", fmt_float(self.sup_norm)));
        out.push_str(&format!("slope,{}\n", fmt_float(self.growth_slope)));
        out.push_str(&format!("stab_ratio,{}\n", fmt_float(self.stabilization_ratio)));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorSampleDoc {
    pub l: f64,
    pub t1: f64,
    pub t2: Vec<f64>,
    pub t3: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub command: String,
    pub word: String,
    pub l_min: f64,
    pub l_max: f64,
    pub samples: Vec<FactorSampleDoc>,
    /// Fitted log-log slopes over the sweep range.
    pub t1_slope: f64,
    pub t2_slopes: Vec<f64>,
    pub t3_slope: f64,
}

impl FactorDoc {
    pub fn to_csv(&self) -> String {
        let width = self.samples.first().map_or(0, |s| s.t2.len());
        let mut header = String::from("l,t1");
        for j in 0..width {
            header.push_str(&format!(",t2_{}", j + 1));
        }
        header.push_str(",t3\n");
        let mut out = header;
        for s in &self.samples {
            out.push_str(&fmt_float(s.l));
            out.push(',');
            out.push_str(&fmt_float(s.t1));
            for v in &s.t2 {
                out.push(',');
                out.push_str(&fmt_float(*v));
            }
            out.push(',');
            out.push_str(&fmt_float(s.t3));
            out.push('\n');
        }
        out.push_str(&format!("t1_slope,{}\n", fmt_float(self.t1_slope)));
        for (j, v) in self.t2_slopes.iter().enumerate() {
            out.push_str(&format!("t2_{}_slope,{}\n", j + 1, fmt_float(*v)));
        }
        out.push_str(&format!("t3_slope,{}\n", fmt_float(self.t3_slope)));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitDoc {
    pub command: String,
    pub profile: String,
    pub band: f64,
    pub k_max: usize,
    /// `ln ‖L^k φ‖` for `k = 0 … k_max`.
    pub log_seminorms: Vec<f64>,
    pub fit: GevreyFit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatteryDoc {
    pub command: String,
    pub profile: String,
    pub band: f64,
    pub k_max: usize,
    pub max_word_len: usize,
    pub report: EquivalenceReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupDoc {
    pub command: String,
    pub k: f64,
    pub d: f64,
    pub s: f64,
    pub lam_star: f64,
    pub sup_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BesselRowDoc {
    pub l: f64,
    pub partial_sum: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BesselDoc {
    pub command: String,
    pub n: u32,
    pub l_max: f64,
    pub rows: Vec<BesselRowDoc>,
}

impl BesselDoc {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,partial_sum\n");
        for r in &self.rows {
            out.push_str(&format!("{},{}\n", fmt_float(r.l), fmt_float(r.partial_sum)));
        }
        out
    }
}

/// Pretty single-object JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serialization");
    s.push('\n');
    s
}
