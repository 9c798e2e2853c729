//! Joint signal-wavelet densities and the mutual information they carry.
//!
//! The primary multiresolution joint is over (position, subband): each
//! coefficient of the pyramid contributes its normalized squared magnitude
//! `|c|^2 / E` as the mass of the outcome `(k, s)` with `s` one of
//! `{A, D_J, ..., D_1}`. Subbands with fewer coefficients contribute zero
//! mass at large positions. Under this reading the total mass is exactly the
//! energy partition, a dc signal carries zero information, and a signal
//! shaped like the analysis wavelet leaves an exactly separable joint.
//!
//! A second, literal variant spreads the approximation mass uniformly over
//! the detail levels, `(|v_k|^2 / J + |w_{k,j}|^2) / E` on outcomes `(k, j)`,
//! and evaluates its log-ratio against the marginal factors in which the
//! approximation mass is *not* divided by `J`. It is kept behind a flag for
//! comparison; at one level its mutual information is identically zero.

use crate::catalog::OrthogonalFilterPair;
use crate::error::{Error, Result};
use crate::transform::{dwt_periodized, CoefficientPyramid, Scalogram};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointKind {
    CwtGrid,
    DyadicGrid,
    MraSubband,
}

/// Variant selector for the multiresolution joint density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MraVariant {
    SubbandPrimary,
    Eq27Literal,
}

/// A discrete or gridded joint probability density with cached marginals.
#[derive(Debug, Clone)]
pub struct JointDensity {
    pub kind: JointKind,
    rows: usize,
    cols: usize,
    mass: Vec<f64>,
    pub row_marginals: Vec<f64>,
    pub col_marginals: Vec<f64>,
    /// Total mass captured by the grid before any renormalization;
    /// 1 for the exact (dyadic/subband) kinds, <= 1 for truncated CWT grids.
    pub coverage: f64,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl JointDensity {
    fn from_mass(
        kind: JointKind,
        rows: usize,
        cols: usize,
        mass: Vec<f64>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Self {
        debug_assert_eq!(mass.len(), rows * cols);
        let mut row_marginals = vec![0.0; rows];
        let mut col_marginals = vec![0.0; cols];
        for r in 0..rows {
            for c in 0..cols {
                let m = mass[r * cols + c];
                row_marginals[r] += m;
                col_marginals[c] += m;
            }
        }
        let coverage = row_marginals.iter().sum();
        JointDensity {
            kind,
            rows,
            cols,
            mass,
            row_marginals,
            col_marginals,
            coverage,
            row_labels,
            col_labels,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn mass_at(&self, r: usize, c: usize) -> f64 {
        self.mass[r * self.cols + c]
    }
    pub fn total_mass(&self) -> f64 {
        self.coverage
    }

    /// Mutual information of the (unrenormalized) joint, in bits.
    pub fn mutual_information(&self) -> f64 {
        let mut acc = 0.0;
        for r in 0..self.rows {
            let pr = self.row_marginals[r];
            if pr <= 0.0 {
                continue;
            }
            for c in 0..self.cols {
                let m = self.mass[r * self.cols + c];
                if m > 0.0 {
                    acc += m * (m / (pr * self.col_marginals[c])).log2();
                }
            }
        }
        acc
    }

    /// Per-column partial sums of the signed mutual-information terms.
    pub fn column_information(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.cols];
        for r in 0..self.rows {
            let pr = self.row_marginals[r];
            if pr <= 0.0 {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                let m = self.mass[r * self.cols + c];
                if m > 0.0 {
                    *slot += m * (m / (pr * self.col_marginals[c])).log2();
                }
            }
        }
        out
    }
}

/// Joint density over the scalogram grid; the cell at `(a_i, b_j)` carries
/// `2 |CWT|^2 w_i db / (E c_psi)` with `w_i` the exact `da/a^2` integral over
/// the log-grid cell. The factor 2 accounts for analysing a real signal over
/// positive scales only; coverage approaches 1 on wide grids and the
/// truncated remainder is reported, never silently rescaled.
pub fn joint_density_cwt(s: &Scalogram) -> Result<JointDensity> {
    if s.energy <= 0.0 {
        return Err(Error::ZeroEnergy);
    }
    let rows = s.scales.len();
    let cols = s.translations.len();
    let db = if cols > 1 {
        (s.translations[cols - 1] - s.translations[0]) / (cols - 1) as f64
    } else {
        1.0
    };
    let norm = 2.0 / (s.energy * s.c_psi);
    let mut mass = vec![0.0; rows * cols];
    for si in 0..rows {
        let cell = norm * crate::transform::scale_cell_weight(&s.scales, si) * db;
        for bi in 0..cols {
            mass[si * cols + bi] = s.value(si, bi).norm_sqr() * cell;
        }
    }
    Ok(JointDensity::from_mass(
        JointKind::CwtGrid,
        rows,
        cols,
        mass,
        s.scales.iter().map(|a| format!("{a}")).collect(),
        s.translations.iter().map(|b| format!("{b}")).collect(),
    ))
}

/// Mutual information of a CWT joint after renormalizing the truncated mass.
/// Errors when the captured coverage is below `min_coverage`.
pub fn mutual_info_cwt(d: &JointDensity, min_coverage: f64) -> Result<f64> {
    let cov = d.coverage;
    if cov < min_coverage {
        return Err(Error::CoverageTooLow {
            coverage: cov,
            minimum: min_coverage,
        });
    }
    let mut acc = 0.0;
    for r in 0..d.rows {
        let pr = d.row_marginals[r] / cov;
        if pr <= 0.0 {
            continue;
        }
        for c in 0..d.cols {
            let m = d.mass_at(r, c) / cov;
            if m > 0.0 {
                acc += m * (m / (pr * d.col_marginals[c] / cov)).log2();
            }
        }
    }
    Ok(acc)
}

/// Mutual information of a homogeneous dyadic coefficient field:
/// `p(n, m) = |w_{n,m}|^2 / E` with `E` the total squared magnitude.
pub fn mutual_info_dyadic(entries: &[((i64, i64), f64)]) -> Result<f64> {
    if entries.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let energy: f64 = entries.iter().map(|(_, w)| w * w).sum();
    if energy <= 0.0 {
        return Err(Error::ZeroEnergy);
    }
    use std::collections::BTreeMap;
    let mut rows: BTreeMap<i64, f64> = BTreeMap::new();
    let mut cols: BTreeMap<i64, f64> = BTreeMap::new();
    for ((n, m), w) in entries {
        let p = w * w / energy;
        *rows.entry(*n).or_insert(0.0) += p;
        *cols.entry(*m).or_insert(0.0) += p;
    }
    let mut acc = 0.0;
    for ((n, m), w) in entries {
        let p = w * w / energy;
        if p > 0.0 {
            acc += p * (p / (rows[n] * cols[m])).log2();
        }
    }
    Ok(acc)
}

const SUBBAND_APPROX: usize = 0;

/// Multiresolution joint density of a pyramid under either variant.
/// Columns are ordered `A, D_J, ..., D_1` for the subband variant and
/// `j = 1..J` for the literal one.
pub fn mra_joint_density(c: &CoefficientPyramid, variant: MraVariant) -> Result<JointDensity> {
    let energy = c.total_energy();
    if energy <= 0.0 {
        return Err(Error::ZeroEnergy);
    }
    let j = c.levels as usize;
    match variant {
        MraVariant::SubbandPrimary => {
            let rows = c.details.first().map(|d| d.len()).unwrap_or(0).max(c.approx.len());
            let cols = j + 1;
            let mut mass = vec![0.0; rows * cols];
            for (k, &v) in c.approx.iter().enumerate() {
                mass[k * cols + SUBBAND_APPROX] = v * v / energy;
            }
            // column 1 holds D_J, descending to D_1 last
            for (level_idx, detail) in c.details.iter().enumerate() {
                let col = cols - 1 - level_idx;
                for (k, &w) in detail.iter().enumerate() {
                    mass[k * cols + col] = w * w / energy;
                }
            }
            let mut col_labels = vec!["A".to_string()];
            for level in (1..=j).rev() {
                col_labels.push(format!("D{level}"));
            }
            Ok(JointDensity::from_mass(
                JointKind::MraSubband,
                rows,
                cols,
                mass,
                (0..rows).map(|k| k.to_string()).collect(),
                col_labels,
            ))
        }
        MraVariant::Eq27Literal => {
            let rows = c.details.first().map(|d| d.len()).unwrap_or(0);
            let cols = j;
            let jf = j as f64;
            let mut mass = vec![0.0; rows * cols];
            for (level_idx, detail) in c.details.iter().enumerate() {
                for k in 0..rows {
                    let v2 = c.approx.get(k).map(|v| v * v).unwrap_or(0.0);
                    let w2 = detail.get(k).map(|w| w * w).unwrap_or(0.0);
                    mass[k * cols + level_idx] = (v2 / jf + w2) / energy;
                }
            }
            Ok(JointDensity::from_mass(
                JointKind::MraSubband,
                rows,
                cols,
                mass,
                (0..rows).map(|k| k.to_string()).collect(),
                (1..=j).map(|l| format!("j{l}")).collect(),
            ))
        }
    }
}

/// Per-subband information report in the layout of the tabulated results:
/// approximation bits, detail bits per level (deepest first in display
/// order), percentages, and the total.
#[derive(Debug, Clone)]
pub struct InfoReport {
    pub wavelet: String,
    pub levels: u32,
    pub variant: MraVariant,
    pub approx_bits: f64,
    /// `detail_bits[j - 1]` is level j.
    pub detail_bits: Vec<f64>,
    pub total_bits: f64,
}

impl InfoReport {
    /// Percentage shares of the total; zero when the total is negligible.
    pub fn percentages(&self) -> (f64, Vec<f64>) {
        if self.total_bits.abs() < 1e-12 {
            return (0.0, vec![0.0; self.detail_bits.len()]);
        }
        (
            100.0 * self.approx_bits / self.total_bits,
            self.detail_bits
                .iter()
                .map(|d| 100.0 * d / self.total_bits)
                .collect(),
        )
    }
}

/// Information amounts of a pyramid decomposition.
pub fn mra_info_report(c: &CoefficientPyramid, variant: MraVariant) -> Result<InfoReport> {
    let j = c.levels as usize;
    match variant {
        MraVariant::SubbandPrimary => {
            let joint = mra_joint_density(c, variant)?;
            let per_col = joint.column_information();
            let approx_bits = per_col[SUBBAND_APPROX];
            // columns after A run D_J .. D_1
            let mut detail_bits = vec![0.0; j];
            for (idx, &bits) in per_col[1..].iter().enumerate() {
                let level = j - idx;
                detail_bits[level - 1] = bits;
            }
            let total_bits = per_col.iter().sum();
            Ok(InfoReport {
                wavelet: c.filter_name.clone(),
                levels: c.levels,
                variant,
                approx_bits,
                detail_bits,
                total_bits,
            })
        }
        MraVariant::Eq27Literal => {
            // The literal log-ratio uses the printed marginal factors: the
            // level factor keeps the full approximation mass (no /J), the
            // position factor is the true row marginal.
            let energy = c.total_energy();
            if energy <= 0.0 {
                return Err(Error::ZeroEnergy);
            }
            let jf = j as f64;
            let rows = c.details.first().map(|d| d.len()).unwrap_or(0);
            let approx2 = |k: usize| c.approx.get(k).map(|v| v * v).unwrap_or(0.0);

            let mut col_factor = vec![0.0; j];
            for (level_idx, detail) in c.details.iter().enumerate() {
                let mut acc = 0.0;
                for k in 0..rows {
                    acc += approx2(k) + detail.get(k).map(|w| w * w).unwrap_or(0.0);
                }
                col_factor[level_idx] = acc / energy;
            }
            let mut row_factor = vec![0.0; rows];
            for (k, rf) in row_factor.iter_mut().enumerate() {
                let details_sum: f64 = c
                    .details
                    .iter()
                    .map(|d| d.get(k).map(|w| w * w).unwrap_or(0.0))
                    .sum();
                *rf = (approx2(k) + details_sum) / energy;
            }

            let mut approx_bits = 0.0;
            let mut detail_bits = vec![0.0; j];
            for (level_idx, detail) in c.details.iter().enumerate() {
                for (k, rf) in row_factor.iter().enumerate() {
                    let va = approx2(k) / jf / energy;
                    let wd = detail.get(k).map(|w| w * w).unwrap_or(0.0) / energy;
                    let m = va + wd;
                    if m <= 0.0 {
                        continue;
                    }
                    let denom = col_factor[level_idx] * rf;
                    if denom <= 0.0 {
                        continue;
                    }
                    let term = (m / denom).log2();
                    approx_bits += va * term;
                    detail_bits[level_idx] += wd * term;
                }
            }
            let total_bits = approx_bits + detail_bits.iter().sum::<f64>();
            Ok(InfoReport {
                wavelet: c.filter_name.clone(),
                levels: c.levels,
                variant,
                approx_bits,
                detail_bits,
                total_bits,
            })
        }
    }
}

/// Evaluate every filter on the signal and order by descending total
/// information; ties keep the given (catalog) order.
pub fn rank_wavelets(
    f: &crate::transform::SampledSignal,
    filters: &[OrthogonalFilterPair],
    levels: u32,
) -> Result<Vec<(String, f64)>> {
    let mut out = Vec::with_capacity(filters.len());
    for p in filters {
        let c = dwt_periodized(f, p, levels)?;
        let report = mra_info_report(&c, MraVariant::SubbandPrimary)?;
        // totals below numerical zero are ties, not an ordering signal
        let total = if report.total_bits.abs() < 1e-12 {
            0.0
        } else {
            report.total_bits
        };
        out.push((p.name().to_string(), total));
    }
    out.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    Ok(out)
}
