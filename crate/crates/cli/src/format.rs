//! Deterministic number formatting for table and CSV output.

/// Fixed 6-significant-digit rendering; full precision belongs to JSON.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..9).contains(&mag) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - mag).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

/// Percentage with one decimal, mirroring the table layout.
pub fn pct(x: f64) -> String {
    format!("{x:.1}")
}

/// Bits to four decimals for the subband tables.
pub fn bits4(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    format!("{x:.4}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(3.0942038), "3.09420");
        assert_eq!(sig6(0.0351360), "0.0351360");
        assert_eq!(sig6(1616.0), "1616.00");
        assert_eq!(sig6(0.0), "0.00000");
        assert_eq!(sig6(-1.5), "-1.50000");
        assert_eq!(sig6(1.0e-7), "1.00000e-7");
    }

    #[test]
    fn table_cells() {
        assert_eq!(bits4(0.00709), "0.0071");
        assert_eq!(pct(79.84), "79.8");
        assert_eq!(bits4(f64::INFINITY), "inf");
    }
}
