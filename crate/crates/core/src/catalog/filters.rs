//! Orthogonal two-channel filter pairs and their structural validation.

use crate::error::{Error, Result};

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Low-pass/high-pass tap pair of an orthogonal multiresolution filter bank.
///
/// Taps absorb the sqrt(2) of the two-scale relation, so the squared low-pass
/// taps form a probability vector. The high-pass is the quadrature mirror
/// `g_k = (-1)^k h_{L-1-k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalFilterPair {
    name: String,
    h: Vec<f64>,
    g: Vec<f64>,
}

/// Residuals of every structural invariant, with an overall verdict at 1e-10.
#[derive(Debug, Clone)]
pub struct FilterValidation {
    pub name: String,
    pub energy_h_residual: f64,
    pub energy_g_residual: f64,
    pub sum_h_residual: f64,
    pub sum_g_residual: f64,
    pub double_shift_residual: f64,
    pub qmf_residual: f64,
    pub pass: bool,
}

pub const VALIDATION_TOLERANCE: f64 = 1e-10;

impl OrthogonalFilterPair {
    /// Build a pair from low-pass taps, deriving the high-pass by QMF.
    pub fn from_lowpass(name: impl Into<String>, h: Vec<f64>) -> Result<Self> {
        let name = name.into();
        if h.is_empty() || !h.len().is_multiple_of(2) {
            return Err(Error::InvalidFilter(format!(
                "{name}: tap count must be even and positive, got {}",
                h.len()
            )));
        }
        let len = h.len();
        let g: Vec<f64> = (0..len)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * h[len - 1 - k]
            })
            .collect();
        Ok(OrthogonalFilterPair { name, h, g })
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn len(&self) -> usize {
        self.h.len()
    }
    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }
    pub fn lowpass(&self) -> &[f64] {
        &self.h
    }
    pub fn highpass(&self) -> &[f64] {
        &self.g
    }

    /// Evaluate every invariant and report residuals.
    pub fn validate(&self) -> FilterValidation {
        let l = self.h.len();
        let energy_h: f64 = self.h.iter().map(|x| x * x).sum();
        let energy_g: f64 = self.g.iter().map(|x| x * x).sum();
        let sum_h: f64 = self.h.iter().sum();
        let sum_g: f64 = self.g.iter().sum();

        let mut dso = 0.0f64;
        for m in 1..l / 2 {
            let r: f64 = (0..l - 2 * m).map(|k| self.h[k] * self.h[k + 2 * m]).sum();
            dso = dso.max(r.abs());
        }

        let mut qmf = 0.0f64;
        for k in 0..l {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            qmf = qmf.max((self.g[k] - sign * self.h[l - 1 - k]).abs());
        }

        let report = FilterValidation {
            name: self.name.clone(),
            energy_h_residual: (energy_h - 1.0).abs(),
            energy_g_residual: (energy_g - 1.0).abs(),
            sum_h_residual: (sum_h - SQRT2).abs(),
            sum_g_residual: sum_g.abs(),
            double_shift_residual: dso,
            qmf_residual: qmf,
            pass: false,
        };
        let pass = report.energy_h_residual < VALIDATION_TOLERANCE
            && report.energy_g_residual < VALIDATION_TOLERANCE
            && report.sum_h_residual < VALIDATION_TOLERANCE
            && report.sum_g_residual < VALIDATION_TOLERANCE
            && report.double_shift_residual < VALIDATION_TOLERANCE
            && report.qmf_residual < VALIDATION_TOLERANCE;
        FilterValidation { pass, ..report }
    }
}

/// Parse the plain-text tap format: one tap per line, `#` comments.
pub fn parse_taps(name: &str, text: &str) -> Result<Vec<f64>> {
    let mut taps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value: f64 = line.parse().map_err(|_| Error::Parse {
            path: name.to_string(),
            line: idx + 1,
            message: format!("not a number: '{line}'"),
        })?;
        if !value.is_finite() {
            return Err(Error::Parse {
                path: name.to_string(),
                line: idx + 1,
                message: "non-finite tap".to_string(),
            });
        }
        taps.push(value);
    }
    if taps.is_empty() {
        return Err(Error::Parse {
            path: name.to_string(),
            line: 0,
            message: "no taps found".to_string(),
        });
    }
    Ok(taps)
}

macro_rules! builtin {
    ($($name:literal),+ $(,)?) => {
        pub const BUILTIN_FILTERS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../data/filters/", $name, ".txt")))),+
        ];
    };
}

builtin!("db1", "db2", "db3", "db4", "db5", "sym1", "sym2", "coif2", "coif3");

/// Built-in filter names in catalog order.
pub fn builtin_filter_names() -> Vec<&'static str> {
    BUILTIN_FILTERS.iter().map(|(n, _)| *n).collect()
}

/// Load a built-in filter pair by name.
pub fn load_filter(name: &str) -> Result<OrthogonalFilterPair> {
    for (n, text) in BUILTIN_FILTERS {
        if *n == name {
            let taps = parse_taps(n, text)?;
            return OrthogonalFilterPair::from_lowpass(*n, taps);
        }
    }
    Err(Error::UnknownName {
        name: name.to_string(),
        available: builtin_filter_names().join(", "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db1_taps_and_qmf() {
        let p = load_filter("db1").unwrap();
        let r = 0.5f64.sqrt();
        assert!((p.lowpass()[0] - r).abs() < 1e-15);
        assert!((p.lowpass()[1] - r).abs() < 1e-15);
        assert!((p.highpass()[0] - r).abs() < 1e-15);
        assert!((p.highpass()[1] + r).abs() < 1e-15);
    }

    #[test]
    fn db1_residuals_tiny() {
        let report = load_filter("db1").unwrap().validate();
        assert!(report.pass);
        assert!(report.energy_h_residual < 1e-15);
        assert!(report.sum_h_residual < 1e-15);
        assert!(report.double_shift_residual < 1e-15);
    }

    #[test]
    fn db2_energy_at_machine_precision() {
        let p = load_filter("db2").unwrap();
        let e: f64 = p.lowpass().iter().map(|x| x * x).sum();
        assert!((e - 1.0).abs() < 1e-12);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn db3_passes_validation() {
        let report = load_filter("db3").unwrap().validate();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn scaled_taps_fail_with_expected_residual() {
        let p = load_filter("db1").unwrap();
        let scaled: Vec<f64> = p.lowpass().iter().map(|x| 1.01 * x).collect();
        let bad = OrthogonalFilterPair::from_lowpass("bad", scaled).unwrap();
        let report = bad.validate();
        assert!(!report.pass);
        assert!((report.energy_h_residual - 0.0201).abs() < 1e-6);
    }

    #[test]
    fn squared_tap_multisets_match_between_h_and_g() {
        for name in builtin_filter_names() {
            let p = load_filter(name).unwrap();
            let mut hs: Vec<f64> = p.lowpass().iter().map(|x| x * x).collect();
            let mut gs: Vec<f64> = p.highpass().iter().map(|x| x * x).collect();
            hs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            gs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in hs.iter().zip(gs.iter()) {
                assert!((a - b).abs() < 1e-12, "{name}");
            }
        }
    }

    #[test]
    fn odd_tap_count_rejected() {
        assert!(OrthogonalFilterPair::from_lowpass("odd", vec![1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn parse_rejects_garbage_with_line_number() {
        let err = parse_taps("x", "0.5\n# ok\nabc\n").unwrap_err();
        assert!(err.to_string().contains(":3:"), "{err}");
    }
}
