//! Shannon entropies of wavelet densities.
//!
//! The time density of a unit-energy wavelet is `|psi(t)|^2` and the spectral
//! density is `|Psi(w)|^2 / 2pi`; both integrate to one, and their
//! differential entropies in bits are what this module computes. The sum of
//! the two is invariant across a wavelet family: dilation by `a` adds
//! `log2|a|` in time and subtracts it in frequency.

use crate::catalog::{
    freq_density, freq_window, panels_for, time_density, time_window, DecayClass,
    OrthogonalFilterPair, WaveletEval,
};
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadOpts};

/// Controls for the adaptive quadratures.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Base panel count (at least 64).
    pub points: usize,
    /// Refinement ceiling.
    pub max_panels: usize,
    /// Target absolute error in bits.
    pub tolerance: f64,
    /// Override for the time integration window.
    pub time_truncation: Option<(f64, f64)>,
    /// Override for the frequency integration window.
    pub freq_truncation: Option<(f64, f64)>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            points: 1024,
            max_panels: 1 << 24,
            tolerance: 1e-6,
            time_truncation: None,
            freq_truncation: None,
        }
    }
}

impl QuadratureConfig {
    pub fn with_points(points: usize) -> Self {
        QuadratureConfig {
            points: points.max(64),
            ..QuadratureConfig::default()
        }
    }

    fn opts(&self, base: usize) -> QuadOpts {
        QuadOpts {
            base_panels: base.max(self.points.max(64)),
            max_panels: self.max_panels,
            tol: self.tolerance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyDomain {
    Time,
    Frequency,
    Global,
}

/// An entropy value with its quadrature/truncation error estimate, in bits.
#[derive(Debug, Clone, Copy)]
pub struct EntropyResult {
    pub value: f64,
    pub estimated_error: f64,
    pub domain: EntropyDomain,
}

#[inline]
fn plogp(d: f64) -> f64 {
    if d > 0.0 {
        -d * d.log2()
    } else {
        0.0
    }
}

/// Maximum halfwidth of the slow-decay frequency window used for entropy.
const POWERLAW_ENTROPY_CAP: f64 = 1.0e6;

/// Width of the finely resolved central band for slow-decay spectra; beyond
/// it the integrand curvature is tail-dominated and coarse panels suffice.
const POWERLAW_NEAR_BAND: f64 = 64.0;

/// Entropy contribution bound for the discarded tail of a power-law density:
/// `x log2(1/x)` is increasing below `1/e`, so the envelope bounds it.
fn powerlaw_entropy_tail(exponent: f64, coeff: f64, omega: f64) -> f64 {
    let p1 = exponent - 1.0;
    let mu = coeff / (2.0 * std::f64::consts::PI); // density envelope mu/w^p
    // 2 * int_W^inf (mu/w^p) log2(w^p/mu) dw, evaluated for p = 2
    // generically via the p = 2 closed form scaled conservatively.
    let log2e = std::f64::consts::LOG2_E;
    if exponent == 2.0 {
        2.0 * mu * (2.0 * (omega.log2() + log2e) - mu.log2()) / omega
    } else {
        2.0 * mu * (exponent * (omega.log2() + log2e / p1) - mu.log2())
            / (p1 * omega.powf(p1))
    }
}

/// Time entropy `-int d log2 d` with `d = |psi|^2`.
pub fn time_entropy(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<EntropyResult> {
    let (a, b) = q.time_truncation.unwrap_or_else(|| time_window(w));
    let hint = w.time_profile().resolution_hint;
    let opts = q.opts(panels_for(b - a, hint, q.points));
    let out = integrate(&|t| plogp(time_density(w, t)), a, b, &opts);
    if !out.converged {
        return Err(Error::QuadratureNonConvergence {
            estimated: out.est_error,
            tolerance: q.tolerance,
        });
    }
    Ok(EntropyResult {
        value: out.value,
        estimated_error: out.est_error,
        domain: EntropyDomain::Time,
    })
}

/// Frequency entropy `-int s log2 s` with `s = |Psi|^2 / 2pi`.
///
/// Slow-decaying spectra (the Haar family) are truncated at a capped window;
/// the analytic tail bound is folded into `estimated_error` rather than
/// treated as non-convergence.
pub fn frequency_entropy(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<EntropyResult> {
    let profile = w.freq_profile();
    let s = |x: f64| plogp(freq_density(w, x));

    if let Some((a, b)) = q.freq_truncation {
        let opts = q.opts(panels_for(b - a, profile.resolution_hint, q.points));
        let out = integrate(&s, a, b, &opts);
        if !out.converged {
            return Err(Error::QuadratureNonConvergence {
                estimated: out.est_error,
                tolerance: q.tolerance,
            });
        }
        return Ok(EntropyResult {
            value: out.value,
            estimated_error: out.est_error,
            domain: EntropyDomain::Frequency,
        });
    }

    match profile.decay {
        DecayClass::Superexponential => {
            let (a, b, _) = freq_window(w, 1e-12, POWERLAW_ENTROPY_CAP);
            let opts = q.opts(panels_for(b - a, profile.resolution_hint, q.points));
            let out = integrate(&s, a, b, &opts);
            if !out.converged {
                return Err(Error::QuadratureNonConvergence {
                    estimated: out.est_error,
                    tolerance: q.tolerance,
                });
            }
            Ok(EntropyResult {
                value: out.value,
                estimated_error: out.est_error,
                domain: EntropyDomain::Frequency,
            })
        }
        DecayClass::PowerLaw { exponent, coeff } => {
            // Oscillation scale shrinks with daughters; keep the band and the
            // cap proportional so the panel budget stays flat.
            let unit = profile.resolution_hint.unwrap_or(std::f64::consts::PI / 8.0)
                / (std::f64::consts::PI / 8.0);
            let near = POWERLAW_NEAR_BAND * unit;
            let cap = POWERLAW_ENTROPY_CAP * unit;

            let near_opts = QuadOpts {
                base_panels: 1 << 17,
                max_panels: q.max_panels,
                tol: q.tolerance / 2.0,
            };
            let far_opts = QuadOpts {
                base_panels: panels_for(cap - near, profile.resolution_hint, q.points),
                max_panels: q.max_panels,
                tol: q.tolerance / 2.0,
            };
            let out =
                crate::quad::integrate_banded(&s, profile.center, near, cap, &near_opts, &far_opts);
            if !out.converged {
                return Err(Error::QuadratureNonConvergence {
                    estimated: out.est_error,
                    tolerance: q.tolerance,
                });
            }
            let tail = powerlaw_entropy_tail(exponent, coeff, cap);
            Ok(EntropyResult {
                value: out.value,
                estimated_error: out.est_error + tail,
                domain: EntropyDomain::Frequency,
            })
        }
    }
}

/// Global entropy: time plus frequency, with combined error.
pub fn global_entropy(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<EntropyResult> {
    let t = time_entropy(w, q)?;
    let f = frequency_entropy(w, q)?;
    Ok(EntropyResult {
        value: t.value + f.value,
        estimated_error: t.estimated_error + f.estimated_error,
        domain: EntropyDomain::Global,
    })
}

/// Entropy of the discrete density formed by the squared high-pass taps.
/// Identical for the low-pass taps of an orthogonal pair.
pub fn mra_entropy(p: &OrthogonalFilterPair) -> Result<f64> {
    mra_entropy_of_taps(p.highpass())
}

/// Same computation from raw taps; exposed for the h-vs-g cross-check.
pub fn mra_entropy_of_taps(taps: &[f64]) -> Result<f64> {
    let total: f64 = taps.iter().map(|x| x * x).sum();
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidFilter(format!(
            "squared taps sum to {total}, not 1"
        )));
    }
    Ok(taps.iter().map(|x| plogp(x * x)).sum())
}

/// Cross-entropy upper bound on the global entropy: the two mixed
/// cross-entropies of the centred time and frequency densities. Infinite
/// when one density vanishes where the other does not, which is the case
/// for every compactly supported wavelet.
pub fn entropy_upper_bound(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<f64> {
    if w.time_profile().compact.is_some() {
        // A compactly supported nonzero wavelet has an a.e.-nonvanishing
        // spectrum, so the frequency-weighted cross term diverges.
        return Ok(f64::INFINITY);
    }
    let t_bar = crate::catalog::time_centroid(w);
    let w_bar = crate::catalog::freq_centroid(w);

    let tp = w.time_profile();
    let fp = w.freq_profile();
    let r = tp.window_halfwidth.max(fp.window_halfwidth);
    let hint = match (tp.resolution_hint, fp.resolution_hint) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let d_t = |z: f64| time_density(w, z + t_bar);
    let d_f = |z: f64| freq_density(w, z + w_bar);
    let integrand = |z: f64| {
        let dt = d_t(z);
        let df = d_f(z);
        let mut acc = 0.0;
        if dt > 0.0 {
            acc -= dt * df.max(f64::MIN_POSITIVE).log2();
        }
        if df > 0.0 {
            acc -= df * dt.max(f64::MIN_POSITIVE).log2();
        }
        acc
    };
    // Isolated density zeros put integrable log spikes in the integrand;
    // midpoint refinement crawls there, so the bound targets 1e-4 bits.
    let tol = q.tolerance.max(1e-4);
    let opts = QuadOpts {
        base_panels: panels_for(2.0 * r, hint, q.points.max(1 << 15)),
        max_panels: q.max_panels,
        tol,
    };
    let out = integrate(&integrand, -r, r, &opts);
    if !out.converged {
        return Err(Error::QuadratureNonConvergence {
            estimated: out.est_error,
            tolerance: tol,
        });
    }
    Ok(out.value)
}
