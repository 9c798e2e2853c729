//! Kullback-Leibler distances between wavelet densities.
//!
//! The support-ratio form compares `psi1^2(t)` against `psi2^2(lambda t)`
//! where `lambda` maps the (effective) support of the first wavelet onto the
//! second after translating both supports to start at zero. Two readings are
//! provided: the literal one without a Jacobian, under which a wavelet keeps
//! a nonzero distance to its own dilates (one bit per octave), and a
//! normalized one comparing against the true rescaled density
//! `lambda psi2^2(lambda t)`, under which dilates are at distance zero.

use crate::catalog::{freq_density, panels_for, time_density, WaveletEval};
use crate::entropy::QuadratureConfig;
use crate::error::Result;

/// Fraction of energy used when replacing an unbounded support by an
/// effective one.
pub const DEFAULT_SUPPORT_FRACTION: f64 = 1.0 - 1e-4;

/// Density floor below which a point counts as a support violation.
const DENSITY_FLOOR: f64 = 1e-280;
/// Mass of `psi1^2` allowed to sit on violations before the distance is
/// declared infinite. Isolated zeros stay far below this.
const VIOLATION_MASS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceVariant {
    D1Time,
    NormalizedD1,
    D2TimeFrequency,
}

#[derive(Debug, Clone, Copy)]
pub struct DistanceResult {
    /// Bits, or +inf on an absolute-continuity violation.
    pub value: f64,
    pub variant: DistanceVariant,
    /// Time support ratio |Supp2| / |Supp1|.
    pub lambda: f64,
    /// Frequency support ratio, present for the two-domain distance.
    pub mu: Option<f64>,
}

/// Exact support for compact wavelets, else the smallest
/// centroid-symmetric interval holding `fraction` of the energy.
fn time_support(w: &dyn WaveletEval, fraction: f64) -> Result<(f64, f64)> {
    if let Some(supp) = w.time_profile().compact {
        return Ok(supp);
    }
    let ((t0, t1), _) = crate::catalog::effective_support(w, fraction)?;
    Ok((t0, t1))
}

fn freq_support(w: &dyn WaveletEval, fraction: f64) -> Result<(f64, f64)> {
    let (_, f) = crate::catalog::effective_support(w, fraction)?;
    Ok(f)
}

/// Shared KL kernel over aligned supports.
///
/// Integrates `d1(t) log2(d1(t) / (scale * d2(map(t))))` over the first
/// support with a fixed fine grid, tracking how much `d1` mass falls where
/// `d2` vanishes.
fn kl_aligned(
    d1: &dyn Fn(f64) -> f64,
    d2: &dyn Fn(f64) -> f64,
    supp1: (f64, f64),
    supp2: (f64, f64),
    scale: f64,
    panels: usize,
) -> f64 {
    let (a1, b1) = supp1;
    let (a2, _b2) = supp2;
    let lambda = (supp2.1 - supp2.0) / (b1 - a1);
    let h = (b1 - a1) / panels as f64;
    let mut acc = 0.0;
    let mut violating_mass = 0.0;
    for i in 0..panels {
        let t = a1 + (i as f64 + 0.5) * h;
        let p = d1(t);
        if p <= 0.0 {
            continue;
        }
        let u = a2 + lambda * (t - a1);
        let qv = scale * d2(u);
        if qv < DENSITY_FLOOR {
            violating_mass += p * h;
            // contributes as if the floor were the density; dominated by the
            // violation check when the set has positive measure
            acc += p * (p.log2() - DENSITY_FLOOR.log2()) * h;
        } else {
            acc += p * (p.log2() - qv.log2()) * h;
        }
    }
    if violating_mass > VIOLATION_MASS {
        f64::INFINITY
    } else {
        acc
    }
}

fn kl_time_with(
    w1: &dyn WaveletEval,
    w2: &dyn WaveletEval,
    q: &QuadratureConfig,
    fraction: f64,
    normalized: bool,
) -> Result<DistanceResult> {
    let s1 = time_support(w1, fraction)?;
    let s2 = time_support(w2, fraction)?;
    let lambda = (s2.1 - s2.0) / (s1.1 - s1.0);
    let hint1 = w1.time_profile().resolution_hint;
    let hint2 = w2.time_profile().resolution_hint.map(|h| h / lambda);
    let hint = match (hint1, hint2) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let panels = panels_for(s1.1 - s1.0, hint, q.points.max(1 << 16));
    let scale = if normalized { lambda } else { 1.0 };
    let value = kl_aligned(
        &|t| time_density(w1, t),
        &|u| time_density(w2, u),
        s1,
        s2,
        scale,
        panels,
    );
    Ok(DistanceResult {
        value,
        variant: if normalized {
            DistanceVariant::NormalizedD1
        } else {
            DistanceVariant::D1Time
        },
        lambda,
        mu: None,
    })
}

/// Literal support-ratio distance (no Jacobian): a wavelet and its dilate by
/// `a` are `log2 a` bits apart.
pub fn kl_distance_time(
    w1: &dyn WaveletEval,
    w2: &dyn WaveletEval,
    q: &QuadratureConfig,
) -> Result<DistanceResult> {
    kl_time_with(w1, w2, q, DEFAULT_SUPPORT_FRACTION, false)
}

/// Jacobian-corrected variant comparing against the true rescaled density;
/// zero between a wavelet and any of its dilates.
pub fn kl_distance_normalized(
    w1: &dyn WaveletEval,
    w2: &dyn WaveletEval,
    q: &QuadratureConfig,
) -> Result<DistanceResult> {
    kl_time_with(w1, w2, q, DEFAULT_SUPPORT_FRACTION, true)
}

/// Two-domain distance: the time term over the effective support of the
/// first wavelet plus the matching frequency term with ratio `mu`.
pub fn kl_distance_full(
    w1: &dyn WaveletEval,
    w2: &dyn WaveletEval,
    q: &QuadratureConfig,
) -> Result<DistanceResult> {
    kl_distance_full_with_fraction(w1, w2, q, DEFAULT_SUPPORT_FRACTION)
}

pub fn kl_distance_full_with_fraction(
    w1: &dyn WaveletEval,
    w2: &dyn WaveletEval,
    q: &QuadratureConfig,
    fraction: f64,
) -> Result<DistanceResult> {
    let time = kl_time_with(w1, w2, q, fraction, false)?;

    let f1 = freq_support(w1, fraction)?;
    let f2 = freq_support(w2, fraction)?;
    let mu = (f2.1 - f2.0) / (f1.1 - f1.0);
    let hint = w1.freq_profile().resolution_hint;
    let panels = panels_for(f1.1 - f1.0, hint, q.points.max(1 << 16));
    let freq_term = kl_aligned(
        &|x| freq_density(w1, x),
        &|u| freq_density(w2, u),
        f1,
        f2,
        1.0,
        panels,
    );

    Ok(DistanceResult {
        value: time.value + freq_term,
        variant: DistanceVariant::D2TimeFrequency,
        lambda: time.lambda,
        mu: Some(mu),
    })
}

/// Distance from the flat density: the normalized distance to the Haar
/// wavelet, zero exactly when `|psi|` is flat over its support.
pub fn divergence_from_equiprobability(
    w: &dyn WaveletEval,
    q: &QuadratureConfig,
) -> Result<f64> {
    let reference = crate::catalog::haar();
    Ok(kl_distance_normalized(w, &reference, q)?.value)
}

/// Support fraction for the cross-entropy integral, tighter than the
/// distance default because no support-ratio mapping is involved and the
/// truncated entropy mass shows up directly in the value.
const GIBBS_SUPPORT_FRACTION: f64 = 1.0 - 1e-6;

/// Cross entropy `-int psi1^2 log2 psi2^2` over the support of the first
/// wavelet; at least the time entropy of `psi1`, with equality when the
/// moduli agree almost everywhere.
pub fn gibbs_cross_entropy(
    w1: &dyn WaveletEval,
    w2: &dyn WaveletEval,
    q: &QuadratureConfig,
) -> Result<f64> {
    let (a, b) = time_support(w1, GIBBS_SUPPORT_FRACTION)?;
    let hint = w1.time_profile().resolution_hint;
    let panels = panels_for(b - a, hint, q.points.max(1 << 16));
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    let mut violating_mass = 0.0;
    for i in 0..panels {
        let t = a + (i as f64 + 0.5) * h;
        let p = time_density(w1, t);
        if p <= 0.0 {
            continue;
        }
        let qv = time_density(w2, t);
        if qv < DENSITY_FLOOR {
            violating_mass += p * h;
            acc -= p * DENSITY_FLOOR.log2() * h;
        } else {
            acc -= p * qv.log2() * h;
        }
    }
    if violating_mass > VIOLATION_MASS {
        Ok(f64::INFINITY)
    } else {
        Ok(acc)
    }
}

/// Discrete Kullback-Leibler divergence in bits, `0 log 0 = 0`, infinite on
/// absolute-continuity violations. The discrete twin of the support-ratio
/// machinery, also used as a test oracle.
pub fn kl_discrete(p: &[f64], q: &[f64]) -> f64 {
    assert_eq!(p.len(), q.len(), "distributions must have equal length");
    let mut acc = 0.0;
    for (&pi, &qi) in p.iter().zip(q.iter()) {
        if pi > 0.0 {
            if qi <= 0.0 {
                return f64::INFINITY;
            }
            acc += pi * (pi / qi).log2();
        }
    }
    acc
}
