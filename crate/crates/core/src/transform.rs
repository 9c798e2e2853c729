//! Sampled-signal machinery: periodized pyramid DWT/IDWT, direct-evaluation
//! CWT, and the admissibility constant.
//!
//! Boundary handling is periodization (circular convolution) throughout: it
//! is the one mode under which the analysis operator is exactly orthogonal,
//! so coefficient energy equals signal energy to roundoff and the squared
//! coefficients normalize into a probability density.
//!
//! Alignment convention: analysis takes inner products with the taps as
//! given, `approx[k] = sum_n h[n] x[(2k + n) mod N]`, keeping even phases.

use crate::catalog::{freq_window, panels_for, DecayClass, OrthogonalFilterPair, WaveletEval};
use crate::entropy::QuadratureConfig;
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadOpts};
use num_complex::Complex64;

/// Finite real signal with positive length; energy is the plain sum of
/// squared samples (unit sample step).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    samples: Vec<f64>,
}

impl SampledSignal {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::SignalTooShort {
                need: 2,
                got: samples.len(),
            });
        }
        Ok(SampledSignal { samples })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|x| x * x).sum()
    }

    pub fn scaled(&self, factor: f64) -> SampledSignal {
        SampledSignal {
            samples: self.samples.iter().map(|x| factor * x).collect(),
        }
    }
}

/// Approximation plus per-level detail coefficients of a J-level pyramid.
#[derive(Debug, Clone)]
pub struct CoefficientPyramid {
    pub filter_name: String,
    pub levels: u32,
    /// Length N / 2^J.
    pub approx: Vec<f64>,
    /// `details[j - 1]` holds level j, length N / 2^j.
    pub details: Vec<Vec<f64>>,
    /// Levels at which the periodized window became shorter than the filter;
    /// coefficients remain exact but their spatial interpretation blurs.
    pub wrapped_levels: Vec<u32>,
}

impl CoefficientPyramid {
    pub fn signal_len(&self) -> usize {
        self.approx.len() << self.levels
    }

    pub fn total_energy(&self) -> f64 {
        let a: f64 = self.approx.iter().map(|x| x * x).sum();
        let d: f64 = self
            .details
            .iter()
            .map(|lev| lev.iter().map(|x| x * x).sum::<f64>())
            .sum();
        a + d
    }
}

fn analysis_step(x: &[f64], taps: &[f64]) -> Vec<f64> {
    let n = x.len();
    let half = n / 2;
    let mut out = vec![0.0; half];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (i, &t) in taps.iter().enumerate() {
            acc += t * x[(2 * k + i) % n];
        }
        *slot = acc;
    }
    out
}

/// Multilevel periodized analysis.
pub fn dwt_periodized(
    f: &SampledSignal,
    p: &OrthogonalFilterPair,
    levels: u32,
) -> Result<CoefficientPyramid> {
    if levels == 0 {
        return Err(Error::ZeroLevels);
    }
    let n = f.len();
    if !n.is_multiple_of(1usize << levels) {
        return Err(Error::NotDivisible { len: n, levels });
    }
    let mut current = f.samples().to_vec();
    let mut details = Vec::with_capacity(levels as usize);
    let mut wrapped = Vec::new();
    for level in 1..=levels {
        if current.len() < p.len() {
            wrapped.push(level);
        }
        let approx = analysis_step(&current, p.lowpass());
        let detail = analysis_step(&current, p.highpass());
        details.push(detail);
        current = approx;
    }
    Ok(CoefficientPyramid {
        filter_name: p.name().to_string(),
        levels,
        approx: current,
        details,
        wrapped_levels: wrapped,
    })
}

fn synthesis_step(approx: &[f64], detail: &[f64], p: &OrthogonalFilterPair) -> Vec<f64> {
    let half = approx.len();
    let n = 2 * half;
    let mut out = vec![0.0; n];
    for k in 0..half {
        for (i, (&hl, &gl)) in p.lowpass().iter().zip(p.highpass()).enumerate() {
            let idx = (2 * k + i) % n;
            out[idx] += approx[k] * hl + detail[k] * gl;
        }
    }
    out
}

/// Multilevel periodized synthesis; exact inverse of [`dwt_periodized`].
pub fn idwt_periodized(c: &CoefficientPyramid, p: &OrthogonalFilterPair) -> Result<SampledSignal> {
    if c.details.len() != c.levels as usize {
        return Err(Error::ShapeMismatch(format!(
            "{} detail levels for levels = {}",
            c.details.len(),
            c.levels
        )));
    }
    let mut current = c.approx.clone();
    for level in (1..=c.levels).rev() {
        let detail = &c.details[level as usize - 1];
        if detail.len() != current.len() {
            return Err(Error::ShapeMismatch(format!(
                "level {level}: approx len {} vs detail len {}",
                current.len(),
                detail.len()
            )));
        }
        current = synthesis_step(&current, detail, p);
    }
    SampledSignal::new(current)
}

/// Scalogram of a signal: CWT values on a scale-translation grid.
#[derive(Debug, Clone)]
pub struct Scalogram {
    pub wavelet: String,
    pub scales: Vec<f64>,
    pub translations: Vec<f64>,
    /// Row-major `scales.len() x translations.len()`.
    pub values: Vec<Complex64>,
    pub c_psi: f64,
    pub energy: f64,
}

impl Scalogram {
    pub fn value(&self, si: usize, bi: usize) -> Complex64 {
        self.values[si * self.translations.len() + bi]
    }
}

/// Direct-evaluation CWT at unit sample step:
/// `CWT(a,b) = sum_n f[n] conj(psi((n - b)/a)) / sqrt(a)`.
pub fn cwt(
    f: &SampledSignal,
    w: &dyn WaveletEval,
    scales: &[f64],
    translations: &[f64],
) -> Result<Scalogram> {
    if scales.is_empty() || translations.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if scales.windows(2).any(|p| p[1] <= p[0]) || scales[0] <= 0.0 {
        return Err(Error::BadScales);
    }
    let energy = f.energy();
    if energy <= 0.0 {
        return Err(Error::ZeroEnergy);
    }
    let c_psi = admissibility_constant(w, &QuadratureConfig::default())?;

    let mut values = Vec::with_capacity(scales.len() * translations.len());
    for &a in scales {
        let inv_sqrt_a = a.sqrt().recip();
        for &b in translations {
            let mut acc = Complex64::new(0.0, 0.0);
            for (n, &x) in f.samples().iter().enumerate() {
                let arg = (n as f64 - b) / a;
                acc += x * w.eval_time(arg).conj();
            }
            values.push(acc * inv_sqrt_a);
        }
    }
    Ok(Scalogram {
        wavelet: w.name().to_string(),
        scales: scales.to_vec(),
        translations: translations.to_vec(),
        values,
        c_psi,
        energy,
    })
}

/// `c_psi = int |Psi(w)|^2 / |w| dw` over the whole line. Errors when the
/// spectrum does not vanish at the origin.
pub fn admissibility_constant(w: &dyn WaveletEval, q: &QuadratureConfig) -> Result<f64> {
    let at_zero = w.eval_spectrum(0.0).norm();
    if at_zero > 1e-6 {
        return Err(Error::NotAdmissible { magnitude: at_zero });
    }
    let integrand = |x: f64| {
        if x == 0.0 {
            0.0
        } else {
            w.eval_spectrum(x).norm_sqr() / x.abs()
        }
    };
    let profile = w.freq_profile();
    match profile.decay {
        DecayClass::Superexponential => {
            let (a, b, _) = freq_window(w, 1e-10, 1.0e6);
            let opts = QuadOpts {
                base_panels: panels_for(b - a, profile.resolution_hint, q.points.max(1 << 14)),
                max_panels: q.max_panels,
                tol: q.tolerance,
            };
            let out = integrate(&integrand, a, b, &opts);
            if !out.converged {
                return Err(Error::QuadratureNonConvergence {
                    estimated: out.est_error,
                    tolerance: q.tolerance,
                });
            }
            Ok(out.value)
        }
        DecayClass::PowerLaw { exponent, coeff } => {
            let unit = profile.resolution_hint.unwrap_or(std::f64::consts::PI / 8.0)
                / (std::f64::consts::PI / 8.0);
            let near = 64.0 * unit;
            let cap = 2.0e4 * unit;
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
            let out = crate::quad::integrate_banded(
                &integrand,
                profile.center,
                near,
                cap,
                &near_opts,
                &far_opts,
            );
            if !out.converged {
                return Err(Error::QuadratureNonConvergence {
                    estimated: out.est_error,
                    tolerance: q.tolerance,
                });
            }
            // The discarded tail is below 2 coeff / (p cap^p) two-sided,
            // around 1e-8 for the Haar family; negligible at our tolerances.
            debug_assert!(2.0 * coeff / (exponent * cap.powf(exponent)) < 1e-6);
            Ok(out.value)
        }
    }
}

/// Scale/translation grid on which truncation losses stay small for short
/// signals: log-spaced scales from 2 to 32N and unit-step translations padded
/// by twice the largest scale on both sides. The smallest scale stays at 2 so
/// that spectral replicas of the sampled signal fall outside the analysis
/// band of an oscillatory wavelet at centre frequency 5.
pub fn recommended_cwt_grid(signal_len: usize) -> (Vec<f64>, Vec<f64>) {
    recommended_cwt_grid_densified(signal_len, 1)
}

/// Same grid densified by an integer factor in both axes (used for
/// convergence checks).
pub fn recommended_cwt_grid_densified(signal_len: usize, factor: usize) -> (Vec<f64>, Vec<f64>) {
    let n = signal_len as f64;
    let a_min = 2.0;
    let a_max = 32.0 * n;
    let per_octave = 4 * factor;
    let octaves = ((a_max / a_min).log2()).ceil() as usize;
    let count = octaves * per_octave + 1;
    let scales: Vec<f64> = (0..count)
        .map(|i| a_min * 2f64.powf(i as f64 / per_octave as f64))
        .filter(|&a| a <= a_max * 1.0001)
        .collect();
    let pad = (2.0 * a_max).ceil();
    let step = 1.0 / factor as f64;
    let mut translations = Vec::new();
    let mut b = -pad;
    while b <= n - 1.0 + pad {
        translations.push(b);
        b += step;
    }
    (scales, translations)
}

/// Truncated resolution-of-identity mass:
/// `(2 / (E c_psi)) sum_i sum_j |CWT(a_i, b_j)|^2 w_i db` with `w_i` the
/// exact integral of `da/a^2` over the log-grid cell of scale `a_i`.
/// Converges to 1 as the grid widens; the factor 2 accounts for analysing a
/// real signal over positive scales only.
pub fn energy_coverage(s: &Scalogram) -> f64 {
    let mut total = 0.0;
    let nb = s.translations.len();
    let db = if nb > 1 {
        (s.translations[nb - 1] - s.translations[0]) / (nb - 1) as f64
    } else {
        1.0
    };
    for si in 0..s.scales.len() {
        let w = scale_cell_weight(&s.scales, si);
        for bi in 0..nb {
            total += s.value(si, bi).norm_sqr() * w * db;
        }
    }
    2.0 * total / (s.energy * s.c_psi)
}

/// Exact `int da / a^2` over the cell of scale index `i`, with cell edges at
/// the geometric midpoints between neighbouring scales.
pub(crate) fn scale_cell_weight(scales: &[f64], i: usize) -> f64 {
    let n = scales.len();
    if n == 1 {
        let r = 2f64.powf(0.125);
        return (r - 1.0 / r) / scales[0];
    }
    let lo = if i == 0 {
        scales[0] * (scales[0] / scales[1]).sqrt()
    } else {
        (scales[i - 1] * scales[i]).sqrt()
    };
    let hi = if i + 1 == n {
        scales[n - 1] * (scales[n - 1] / scales[n - 2]).sqrt()
    } else {
        (scales[i] * scales[i + 1]).sqrt()
    };
    1.0 / lo - 1.0 / hi
}
