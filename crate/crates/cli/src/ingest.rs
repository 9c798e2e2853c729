//! Signal file ingestion: CSV (one real per line, `#` comments) and JSON
//! (flat numeric array). Non-finite samples are rejected.

use std::path::Path;
use waveinfo::transform::SampledSignal;
use waveinfo::Error;

pub fn ingest_signal(path: &Path) -> Result<SampledSignal, Error> {
    let text = std::fs::read_to_string(path)?;
    let display = path.display().to_string();
    let is_json = path
        .extension()
        .map(|e| e.eq_ignore_ascii_case("json"))
        .unwrap_or(false)
        || text.trim_start().starts_with('[');
    let samples = if is_json {
        parse_json(&display, &text)?
    } else {
        parse_csv(&display, &text)?
    };
    if samples.is_empty() {
        return Err(Error::Parse {
            path: display,
            line: 0,
            message: "empty signal".to_string(),
        });
    }
    SampledSignal::new(samples)
}

fn parse_csv(path: &str, text: &str) -> Result<Vec<f64>, Error> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|_| Error::Parse {
            path: path.to_string(),
            line: idx + 1,
            message: format!("not a number: '{line}'"),
        })?;
        if !v.is_finite() {
            return Err(Error::Parse {
                path: path.to_string(),
                line: idx + 1,
                message: "non-finite sample".to_string(),
            });
        }
        out.push(v);
    }
    Ok(out)
}

fn parse_json(path: &str, text: &str) -> Result<Vec<f64>, Error> {
    let values: Vec<serde_json::Value> =
        serde_json::from_str(text).map_err(|e| Error::Parse {
            path: path.to_string(),
            line: e.line(),
            message: e.to_string(),
        })?;
    let mut out = Vec::with_capacity(values.len());
    for (i, v) in values.iter().enumerate() {
        let x = v.as_f64().ok_or_else(|| Error::Parse {
            path: path.to_string(),
            line: 1,
            message: format!("element {i} is not a number"),
        })?;
        if !x.is_finite() {
            return Err(Error::Parse {
                path: path.to_string(),
                line: 1,
                message: format!("element {i} is non-finite"),
            });
        }
        out.push(x);
    }
    Ok(out)
}
