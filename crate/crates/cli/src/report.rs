//! Report payloads and their JSON/CSV renderings.
//!
//! JSON uses serde's shortest-roundtrip float text with fixed struct field
//! order, so identical inputs produce byte-identical output. CSV prints
//! floats in 17-significant-digit scientific notation.

use serde::Serialize;

use qstar_core::{PhasePoint, Variant, WignerFunction};

/// 17 significant digits, scientific; enough to roundtrip any f64.
pub fn csv_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Serialize)]
pub struct WignerValues {
    #[serde(rename = "00")]
    pub p00: f64,
    #[serde(rename = "01")]
    pub p01: f64,
    #[serde(rename = "10")]
    pub p10: f64,
    #[serde(rename = "11")]
    pub p11: f64,
}

impl From<&WignerFunction> for WignerValues {
    fn from(w: &WignerFunction) -> Self {
        let v = w.values();
        Self {
            p00: v[0],
            p01: v[1],
            p10: v[2],
            p11: v[3],
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WignerEntry {
    pub variant: String,
    pub values: WignerValues,
}

impl From<&WignerFunction> for WignerEntry {
    fn from(w: &WignerFunction) -> Self {
        Self {
            variant: w.variant().to_string(),
            values: WignerValues::from(w),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WignerReport {
    pub command: String,
    pub state: String,
    pub wigner: Vec<WignerEntry>,
}

impl WignerReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("variant,j,k,value\n");
        for entry in &self.wigner {
            let values = [
                entry.values.p00,
                entry.values.p01,
                entry.values.p10,
                entry.values.p11,
            ];
            for (p, v) in PhasePoint::ALL.iter().zip(values.iter()) {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    entry.variant,
                    p.j(),
                    p.k(),
                    csv_f64(*v)
                ));
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct TomogramRow {
    pub m: f64,
    pub theta: f64,
    pub psi: f64,
    pub w: f64,
}

#[derive(Debug, Serialize)]
pub struct TomogramReport {
    pub command: String,
    pub state: String,
    pub ntheta: usize,
    pub npsi: usize,
    pub rows: Vec<TomogramRow>,
}

impl TomogramReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,theta,psi,w\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.m,
                csv_f64(row.theta),
                csv_f64(row.psi),
                csv_f64(row.w)
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct KernelRow {
    pub variant: String,
    pub dual: u8,
    pub m: f64,
    pub theta: f64,
    pub psi: f64,
    pub j: u8,
    pub k: u8,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct KernelsReport {
    pub command: String,
    pub ntheta: usize,
    pub npsi: usize,
    pub rows: Vec<KernelRow>,
}

impl KernelsReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("variant,dual,m,theta,psi,j,k,value\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                row.variant,
                row.dual,
                row.m,
                csv_f64(row.theta),
                csv_f64(row.psi),
                row.j,
                row.k,
                csv_f64(row.value)
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct RoundtripReport {
    pub command: String,
    pub state: String,
    pub variant: String,
    pub ntheta: usize,
    pub npsi: usize,
    pub wigner: WignerEntry,
    pub reconstructed: crate::state::MatrixJson,
    pub max_residual: f64,
}

impl RoundtripReport {
    pub fn to_csv(&self) -> String {
        format!(
            "state,variant,ntheta,npsi,max_residual\n{},{},{},{},{}\n",
            self.state,
            self.variant,
            self.ntheta,
            self.npsi,
            csv_f64(self.max_residual)
        )
    }
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub labels: Vec<String>,
    pub passed: bool,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub command: String,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

impl VerifyReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,labels,passed,residual\n");
        for check in &self.checks {
            out.push_str(&format!(
                "{},{},{},{}\n",
                check.name,
                check.labels.join(" "),
                check.passed,
                csv_f64(check.residual)
            ));
        }
        out
    }
}

/// Variant list selected by an optional flag: one variant or both.
pub fn selected_variants(choice: Option<Variant>) -> Vec<Variant> {
    match choice {
        Some(v) => vec![v],
        None => vec![Variant::A, Variant::B],
    }
}
