//! Machine-readable spectrum reports. Output is deterministic: ordered
//! containers only, no timestamps, and a fixed float format of 17
//! significant digits with a lowercase exponent.

use num_complex::Complex64;
use serde::Serialize;

/// 17 significant digits, lowercase `e`; round-trips every f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// One eigenvalue with provenance.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub index: usize,
    pub re: f64,
    pub im: f64,
    /// truncation or Newton residual, engine dependent.
    pub residual: f64,
}

/// Spectrum of one boundary condition, as computed by one engine or by the
/// cross-validated pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub engine: String,
    pub engine_version: String,
    pub bc_label: String,
    pub rows: Vec<SpectrumRow>,
    /// per-row disagreement between engines, when both ran.
    pub cross_agreement: Option<Vec<f64>>,
    pub notes: Vec<String>,
}

impl SpectrumReport {
    pub fn from_eigenvalues(
        engine: &str,
        bc_label: &str,
        ev: &[Complex64],
        residuals: &[f64],
    ) -> SpectrumReport {
        let rows = ev
            .iter()
            .enumerate()
            .map(|(index, z)| SpectrumRow {
                index,
                re: z.re,
                im: z.im,
                residual: residuals.get(index).copied().unwrap_or(f64::NAN),
            })
            .collect();
        SpectrumReport {
            engine: engine.into(),
            engine_version: crate::ENGINE_VERSION.into(),
            bc_label: bc_label.into(),
            rows,
            cross_agreement: None,
            notes: Vec::new(),
        }
    }

    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.rows.iter().map(|r| Complex64::new(r.re, r.im)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,re,im,residual\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.index,
                fmt_f64(r.re),
                fmt_f64(r.im),
                fmt_f64(r.residual)
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_roundtrips() {
        for &x in &[0.25, 1.0 / 3.0, -1.7e-200, 3.0e200, f64::MIN_POSITIVE, -0.0] {
            let s = fmt_f64(x);
            assert!(s.contains('e'));
            assert!(!s.contains('E'));
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn csv_shape() {
        let rep = SpectrumReport::from_eigenvalues(
            "test",
            "per+",
            &[Complex64::new(1.0, 0.0)],
            &[1e-12],
        );
        let csv = rep.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "index,re,im,residual");
        assert!(lines.next().unwrap().starts_with("0,1.0000000000000000e0,"));
    }

    #[test]
    fn json_deterministic() {
        let rep = SpectrumReport::from_eigenvalues(
            "test",
            "dir",
            &[Complex64::new(2.0, -1.0), Complex64::new(3.0, 0.5)],
            &[0.0, 0.0],
        );
        assert_eq!(rep.to_json(), rep.to_json());
    }
}
