//! Wavelet and filter-bank registry.
//!
//! Everything downstream consumes wavelets through the [`WaveletEval`] trait:
//! a time evaluator, a spectrum evaluator (non-unitary convention
//! `Psi(w) = integral psi(t) exp(-jwt) dt`, so Parseval carries a `1/2pi`),
//! and coarse localisation metadata used to pick quadrature windows.

mod analytic;
mod cascade;
mod filters;

pub use analytic::{
    complex_morlet, gauss1, haar, mexican_hat, morlet, AnalyticWavelet, DaughterWavelet,
};
pub use cascade::{CascadeWavelet, DEFAULT_CASCADE_ITERATIONS};
pub use filters::{builtin_filter_names, load_filter, FilterValidation, OrthogonalFilterPair};

use crate::error::{Error, Result};
use crate::quad::MassTable;
use num_complex::Complex64;

/// Spectral tail behaviour, used to bound truncation errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayClass {
    /// Tails die at least as fast as a Gaussian; truncation at the stated
    /// window is exact for practical purposes.
    Superexponential,
    /// `|Psi(w)|^2 <= coeff / |w|^exponent` for large `|w|`.
    PowerLaw { exponent: f64, coeff: f64 },
}

/// Time-domain localisation metadata.
#[derive(Debug, Clone, Copy)]
pub struct TimeProfile {
    /// Rough centre of the energy density.
    pub center: f64,
    /// Halfwidth of a window outside which the density is negligible
    /// (ignored when `compact` is set).
    pub window_halfwidth: f64,
    /// Exact support for compactly supported wavelets.
    pub compact: Option<(f64, f64)>,
    /// Maximum quadrature panel width needed to resolve structure.
    pub resolution_hint: Option<f64>,
}

/// Frequency-domain localisation metadata.
#[derive(Debug, Clone, Copy)]
pub struct FreqProfile {
    pub center: f64,
    pub window_halfwidth: f64,
    pub decay: DecayClass,
    pub resolution_hint: Option<f64>,
}

/// Common evaluation interface for analytic, daughter, and cascade wavelets.
pub trait WaveletEval: Send + Sync {
    fn name(&self) -> &str;
    fn eval_time(&self, t: f64) -> Complex64;
    fn eval_spectrum(&self, w: f64) -> Complex64;
    fn is_complex(&self) -> bool;
    fn time_profile(&self) -> TimeProfile;
    fn freq_profile(&self) -> FreqProfile;
}

/// Squared-modulus time density at `t`.
pub fn time_density(w: &dyn WaveletEval, t: f64) -> f64 {
    w.eval_time(t).norm_sqr()
}

/// Spectral energy density `|Psi(w)|^2 / 2pi` at `w`.
pub fn freq_density(w: &dyn WaveletEval, omega: f64) -> f64 {
    w.eval_spectrum(omega).norm_sqr() / (2.0 * std::f64::consts::PI)
}

/// Descriptor kinds returned by [`list_catalog`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogKind {
    AnalyticWavelet,
    FilterPair { taps: usize },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: CatalogKind,
    pub note: Option<String>,
}

/// Built-in analytic wavelet names, in catalog order.
pub const ANALYTIC_NAMES: [&str; 5] = ["haar", "morl", "cmor", "gauss1", "mexh"];

/// Look up a built-in analytic wavelet by name.
pub fn load_wavelet(name: &str) -> Result<AnalyticWavelet> {
    match name {
        "haar" => Ok(haar()),
        "morl" => Ok(morlet()),
        "cmor" => Ok(complex_morlet()),
        "gauss1" => Ok(gauss1()),
        "mexh" => Ok(mexican_hat()),
        _ => Err(Error::UnknownName {
            name: name.to_string(),
            available: ANALYTIC_NAMES.join(", "),
        }),
    }
}

/// Enumerate every built-in wavelet and filter pair.
pub fn list_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for name in ANALYTIC_NAMES {
        let note = match name {
            "morl" => Some("real Morlet, centre frequency 5".to_string()),
            "cmor" => Some("complex Morlet, centre frequency 5".to_string()),
            "gauss1" => Some("first derivative of a Gaussian".to_string()),
            _ => None,
        };
        out.push(CatalogEntry {
            name: name.to_string(),
            kind: CatalogKind::AnalyticWavelet,
            note,
        });
    }
    for name in builtin_filter_names() {
        let pair = load_filter(name).expect("builtin filter loads");
        let note = match name {
            "sym1" => Some("taps identical to db1".to_string()),
            "sym2" => Some("taps identical to db2".to_string()),
            _ => None,
        };
        out.push(CatalogEntry {
            name: name.to_string(),
            kind: CatalogKind::FilterPair { taps: pair.len() },
            note,
        });
    }
    out
}

// Internal window/centroid helpers shared by entropy, crossdensity and
// divergence. Windows are deterministic functions of the profiles.

pub(crate) fn time_window(w: &dyn WaveletEval) -> (f64, f64) {
    let p = w.time_profile();
    match p.compact {
        Some((a, b)) => (a, b),
        None => (p.center - p.window_halfwidth, p.center + p.window_halfwidth),
    }
}

/// Frequency window adequate for capturing all but `eps_mass` of the spectral
/// energy. Returns the window and an upper bound on the mass left outside.
pub(crate) fn freq_window(w: &dyn WaveletEval, eps_mass: f64, cap: f64) -> (f64, f64, f64) {
    let p = w.freq_profile();
    match p.decay {
        DecayClass::Superexponential => (
            p.center - p.window_halfwidth,
            p.center + p.window_halfwidth,
            0.0,
        ),
        DecayClass::PowerLaw { exponent, coeff } => {
            // two-sided tail mass of the density envelope beyond W:
            //   2 * (1/2pi) * coeff * W^(1-p) / (p-1)
            let p1 = exponent - 1.0;
            let want = (coeff / (std::f64::consts::PI * p1 * eps_mass)).powf(1.0 / p1);
            let hw = want.min(cap).max(p.window_halfwidth.min(cap));
            let tail = coeff / (std::f64::consts::PI * p1 * hw.powf(p1));
            (p.center - hw, p.center + hw, tail)
        }
    }
}

pub(crate) fn panels_for(width: f64, hint: Option<f64>, base: usize) -> usize {
    let needed = match hint {
        Some(h) if h > 0.0 => (width / h).ceil() as usize,
        _ => 0,
    };
    base.max(needed).max(64)
}

pub(crate) struct DomainTables {
    pub time: MassTable,
    pub freq: MassTable,
}

/// Build cumulative-mass tables for both densities of a wavelet.
pub(crate) fn domain_tables(w: &dyn WaveletEval, base_panels: usize) -> DomainTables {
    let (ta, tb) = time_window(w);
    let tp = w.time_profile();
    let tn = panels_for(tb - ta, tp.resolution_hint, base_panels.max(4096));
    let time = MassTable::build(&|t| time_density(w, t), ta, tb, tn);

    let (fa, fb, _) = freq_window(w, 1e-9, POWERLAW_SUPPORT_CAP);
    let fp = w.freq_profile();
    let fn_ = panels_for(fb - fa, fp.resolution_hint, base_panels.max(4096));
    let freq = MassTable::build(&|x| freq_density(w, x), fa, fb, fn_);
    DomainTables { time, freq }
}

/// Hard cap on slow-decay frequency windows used in support searches.
pub(crate) const POWERLAW_SUPPORT_CAP: f64 = 4.0e6;

fn centroid_of(table: &MassTable) -> f64 {
    // First moment of the tabulated density via its panel masses.
    let n = table.cum.len() - 1;
    let mut m = 0.0;
    for i in 0..n {
        let x = table.a + (i as f64 + 0.5) * table.h;
        m += x * (table.cum[i + 1] - table.cum[i]);
    }
    let total = table.total();
    if total > 0.0 {
        m / total
    } else {
        0.0
    }
}

/// Smallest symmetric-about-centroid time and frequency intervals holding at
/// least `fraction` of the wavelet energy in each domain.
pub fn effective_support(
    w: &dyn WaveletEval,
    fraction: f64,
) -> Result<((f64, f64), (f64, f64))> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidFraction(fraction));
    }
    let tables = domain_tables(w, 4096);

    let tc = centroid_of(&tables.time);
    let tr = tables
        .time
        .symmetric_halfwidth(tc, fraction)
        .ok_or(Error::SupportSearchFailed {
            fraction,
            window: 0.5 * (tables.time.cum.len() - 1) as f64 * tables.time.h,
        })?;

    let fc = centroid_of(&tables.freq);
    // The tabulated window may genuinely not contain the requested fraction
    // for slow-decaying spectra; that is a deterministic failure.
    let fr = tables
        .freq
        .symmetric_halfwidth(fc, fraction)
        .ok_or(Error::SupportSearchFailed {
            fraction,
            window: 0.5 * (tables.freq.cum.len() - 1) as f64 * tables.freq.h,
        })?;

    Ok(((tc - tr, tc + tr), (fc - fr, fc + fr)))
}

/// Energy centroid of the time density.
pub fn time_centroid(w: &dyn WaveletEval) -> f64 {
    let (a, b) = time_window(w);
    let p = w.time_profile();
    let n = panels_for(b - a, p.resolution_hint, 8192);
    centroid_of(&MassTable::build(&|t| time_density(w, t), a, b, n))
}

/// Energy centroid of the frequency density.
pub fn freq_centroid(w: &dyn WaveletEval) -> f64 {
    let (a, b, _) = freq_window(w, 1e-9, POWERLAW_SUPPORT_CAP);
    let p = w.freq_profile();
    let n = panels_for(b - a, p.resolution_hint, 8192);
    centroid_of(&MassTable::build(&|x| freq_density(w, x), a, b, n))
}
