//! Mixed time-frequency overlap of a wavelet with its own spectrum.
//!
//! The overlap compares the time-domain energy profile `|psi|` with the
//! spectral profile `|Psi|/sqrt(2pi)` after each is translated so its energy
//! centroid sits at the origin. Centring removes the trivial modulation
//! offset (the complex Morlet lives at baseband in time but around its centre
//! frequency in spectrum) and the modulus removes the unitary phase that the
//! Fourier transform attaches to its eigenfunctions; what is left is exactly
//! the Cauchy-Schwarz overlap, which reaches 1 precisely when the two energy
//! profiles coincide. A signed, uncentred variant is kept for experiments.

use crate::catalog::{
    freq_centroid, freq_window, panels_for, time_centroid, time_window, WaveletEval,
    POWERLAW_SUPPORT_CAP,
};
use crate::entropy::QuadratureConfig;
use crate::error::{Error, Result};
use crate::quad::{integrate, MassTable, QuadOpts};

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Cross overlap, the mixed-signal inner product, and the absolute bound.
#[derive(Debug, Clone, Copy)]
pub struct CrossDensityResult {
    /// Centred overlap `(1/sqrt(2pi)) int |psi_c| |Psi_c|`, in [0, 1].
    pub cross_term: f64,
    /// `2 + 2 * cross_term`: squared norm of the mixed-domain signal.
    pub mixed_inner_product: f64,
    /// `(1/sqrt(2pi)) (int |psi|)^2`, finite for absolutely integrable wavelets.
    pub abs_bound: f64,
}

fn quad_opts(q: &QuadratureConfig, base: usize) -> QuadOpts {
    QuadOpts {
        base_panels: base.max(q.points.max(64)),
        max_panels: q.max_panels,
        tol: q.tolerance,
    }
}

/// Halfwidths of the centred effective supports (fraction 1 - 1e-9).
fn centred_halfwidths(w: &dyn WaveletEval, t_bar: f64, w_bar: f64) -> (f64, f64) {
    let (ta, tb) = time_window(w);
    let tp = w.time_profile();
    let tn = panels_for(tb - ta, tp.resolution_hint, 8192);
    let time_table = MassTable::build(&|t| crate::catalog::time_density(w, t), ta, tb, tn);
    let rt = time_table
        .symmetric_halfwidth(t_bar, (1.0 - 1e-9) * time_table.total())
        .unwrap_or(tb - ta);

    let (fa, fb, _) = freq_window(w, 1e-9, POWERLAW_SUPPORT_CAP);
    let fp = w.freq_profile();
    let fn_ = panels_for(fb - fa, fp.resolution_hint, 8192);
    let freq_table = MassTable::build(&|x| crate::catalog::freq_density(w, x), fa, fb, fn_);
    let rf = freq_table
        .symmetric_halfwidth(w_bar, (1.0 - 1e-9) * freq_table.total())
        .unwrap_or(fb - fa);
    (rt, rf)
}

/// Centred modulus overlap of the wavelet with its spectrum.
pub fn cross_term(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<f64> {
    let t_bar = time_centroid(w);
    let w_bar = freq_centroid(w);
    let (rt, rf) = centred_halfwidths(w, t_bar, w_bar);
    // The product vanishes (or is negligible) outside the smaller support.
    let r = rt.min(rf);
    let integrand = |z: f64| {
        w.eval_time(z + t_bar).norm() * w.eval_spectrum(z + w_bar).norm() / TWO_PI.sqrt()
    };
    let tp = w.time_profile();
    let fp = w.freq_profile();
    let hint = match (tp.resolution_hint, fp.resolution_hint) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let out = integrate(&integrand, -r, r, &quad_opts(q, panels_for(2.0 * r, hint, 8192)));
    if !out.converged {
        return Err(Error::QuadratureNonConvergence {
            estimated: out.est_error,
            tolerance: q.tolerance,
        });
    }
    Ok(out.value)
}

/// Signed, uncentred variant: `(1/sqrt(2pi)) Re int psi(z) conj(Psi(z)) dz`.
/// For real wavelets this equals the reflected-spectrum reading since
/// `Psi(-z) = conj(Psi(z))`.
pub fn cross_term_raw(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<f64> {
    let (ta, tb) = time_window(w);
    let (fa, fb, _) = freq_window(w, 1e-9, POWERLAW_SUPPORT_CAP);
    let (a, b) = (ta.min(fa), tb.max(fb));
    let integrand =
        |z: f64| (w.eval_time(z) * w.eval_spectrum(z).conj()).re / TWO_PI.sqrt();
    let tp = w.time_profile();
    let fp = w.freq_profile();
    let hint = match (tp.resolution_hint, fp.resolution_hint) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let out = integrate(&integrand, a, b, &quad_opts(q, panels_for(b - a, hint, 8192)));
    if !out.converged {
        return Err(Error::QuadratureNonConvergence {
            estimated: out.est_error,
            tolerance: q.tolerance,
        });
    }
    Ok(out.value)
}

/// Squared norm of the mixed-domain signal: `2 + 2 * cross_term` for a
/// unit-energy wavelet.
pub fn mixed_inner_product(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<f64> {
    Ok(2.0 + 2.0 * cross_term(w, q)?)
}

/// `(1/sqrt(2pi)) (int |psi|)^2`; dominates the cross term pointwise since
/// `|Psi(w)| <= int |psi|` everywhere.
pub fn absolute_bound(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<f64> {
    let (a, b) = time_window(w);
    let hint = w.time_profile().resolution_hint;
    let out = integrate(
        &|t| w.eval_time(t).norm(),
        a,
        b,
        &quad_opts(q, panels_for(b - a, hint, 8192)),
    );
    if !out.converged {
        return Err(Error::QuadratureNonConvergence {
            estimated: out.est_error,
            tolerance: q.tolerance,
        });
    }
    Ok(out.value * out.value / TWO_PI.sqrt())
}

/// True when the overlap is within `tol` of its Cauchy-Schwarz maximum.
pub fn is_invariant_wavelet(w: &dyn WaveletEval, tol: f64, q: &QuadratureConfig) -> Result<bool> {
    if tol <= 0.0 {
        return Err(Error::InvalidFraction(tol));
    }
    Ok(cross_term(w, q)?.abs() >= 1.0 - tol)
}

/// All three quantities in one pass.
pub fn cross_density(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<CrossDensityResult> {
    let ct = cross_term(w, q)?;
    Ok(CrossDensityResult {
        cross_term: ct,
        mixed_inner_product: 2.0 + 2.0 * ct,
        abs_bound: absolute_bound(w, q)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complex_morlet, gauss1, haar, load_wavelet, DaughterWavelet, ANALYTIC_NAMES};

    fn q() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn cmor_overlap_is_one() {
        let c = cross_term(&complex_morlet(), &q()).unwrap();
        assert!((c - 1.0).abs() < 1e-3, "{c}");
    }

    #[test]
    fn gauss1_overlap_is_one() {
        let c = cross_term(&gauss1(), &q()).unwrap();
        assert!((c - 1.0).abs() < 1e-3, "{c}");
    }

    #[test]
    fn haar_overlap_strictly_inside_unit_interval() {
        // Independent oracle: dense Simpson quadrature of the centred
        // profiles. The time factor is compact, so the domain is [-1, 1].
        let w = haar();
        let c = cross_term(&w, &q()).unwrap();
        assert!(c > -1.0 + 1e-2 && c < 1.0 - 1e-2, "{c}");

        let n = 200_001usize; // odd for Simpson
        let h = 2.0 / (n - 1) as f64;
        let f = |z: f64| {
            w.eval_time(z + 1.0).norm() * w.eval_spectrum(z).norm()
                / (2.0 * std::f64::consts::PI).sqrt()
        };
        let mut acc = f(-1.0) + f(1.0);
        for i in 1..n - 1 {
            let x = -1.0 + i as f64 * h;
            acc += f(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let oracle = acc * h / 3.0;
        assert!((c - oracle).abs() < 1e-4, "impl {c} vs oracle {oracle}");
    }

    #[test]
    fn mixed_inner_product_structure() {
        let w = complex_morlet();
        let i = mixed_inner_product(&w, &q()).unwrap();
        assert!((i - 4.0).abs() < 4e-3, "{i}");
        let c = cross_term(&haar(), &q()).unwrap();
        let ih = mixed_inner_product(&haar(), &q()).unwrap();
        assert!((ih - (2.0 + 2.0 * c)).abs() < 1e-9);
    }

    #[test]
    fn haar_absolute_bound_matches_arithmetic() {
        // int |haar| = 2 / sqrt(2) = sqrt(2), bound = 2 / sqrt(2 pi)
        let b = absolute_bound(&haar(), &q()).unwrap();
        let expect = 2.0 / (2.0 * std::f64::consts::PI).sqrt();
        assert!((b - expect).abs() < 1e-6, "{b} vs {expect}");
    }

    #[test]
    fn daughter_l1_scaling() {
        // L1 norm scales by sqrt(a): daughter(haar, 4, 0) has int|psi| = 2 sqrt(2)
        let d = DaughterWavelet::new(haar(), 4.0, 0.0).unwrap();
        let b = absolute_bound(&d, &q()).unwrap();
        let expect = 8.0 / (2.0 * std::f64::consts::PI).sqrt();
        assert!((b - expect).abs() < 1e-6, "{b} vs {expect}");
    }

    #[test]
    fn invariance_classification() {
        assert!(is_invariant_wavelet(&complex_morlet(), 1e-2, &q()).unwrap());
        assert!(is_invariant_wavelet(&gauss1(), 1e-2, &q()).unwrap());
        assert!(!is_invariant_wavelet(&haar(), 1e-2, &q()).unwrap());
        assert!(!is_invariant_wavelet(&load_wavelet("morl").unwrap(), 1e-2, &q()).unwrap());
        assert!(is_invariant_wavelet(&haar(), -1.0, &q()).is_err());
    }

    #[test]
    fn cauchy_and_absolute_bounds_hold_for_catalog() {
        for name in ANALYTIC_NAMES {
            let w = load_wavelet(name).unwrap();
            let r = cross_density(&w, &q()).unwrap();
            assert!(r.cross_term.abs() <= 1.0 + 1e-9, "{name}: {}", r.cross_term);
            assert!(
                r.cross_term.abs() <= r.abs_bound + 1e-9,
                "{name}: {} > {}",
                r.cross_term,
                r.abs_bound
            );
            assert!((r.mixed_inner_product - 2.0 - 2.0 * r.cross_term).abs() < 1e-9);
        }
    }

    #[test]
    fn raw_variant_matches_reflected_reading_for_real_wavelets() {
        // For a real wavelet Psi(-z) = conj(Psi(z)), so the raw signed value
        // equals the reflected-spectrum integral. Check on the Mexican hat,
        // whose spectrum is real and positive: raw = int psi(z) Psi(z)/sqrt(2pi).
        let w = load_wavelet("mexh").unwrap();
        let raw = cross_term_raw(&w, &q()).unwrap();
        let refl = {
            let f = |z: f64| (w.eval_time(z) * w.eval_spectrum(-z)).re
                / (2.0 * std::f64::consts::PI).sqrt();
            let n = 1 << 18;
            let (a, b) = (-30.0, 30.0);
            let h = (b - a) / n as f64;
            (0..n).map(|i| f(a + (i as f64 + 0.5) * h)).sum::<f64>() * h
        };
        assert!((raw - refl).abs() < 1e-6, "{raw} vs {refl}");
    }
}
