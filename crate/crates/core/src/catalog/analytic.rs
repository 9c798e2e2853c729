//! Closed-form wavelets and scaled/translated daughters.

use super::{DecayClass, FreqProfile, TimeProfile, WaveletEval};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

type EvalFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// A continuous wavelet given by closed-form time and spectrum evaluators.
///
/// The spectrum convention is `Psi(w) = integral psi(t) exp(-jwt) dt`.
#[derive(Clone)]
pub struct AnalyticWavelet {
    name: String,
    time_fn: EvalFn,
    spectrum_fn: EvalFn,
    is_complex: bool,
    time_profile: TimeProfile,
    freq_profile: FreqProfile,
    admissibility_hint: Option<f64>,
}

impl std::fmt::Debug for AnalyticWavelet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AnalyticWavelet")
            .field("name", &self.name)
            .field("is_complex", &self.is_complex)
            .finish()
    }
}

impl AnalyticWavelet {
    /// Assemble a wavelet from evaluators and localisation metadata.
    /// Callers are responsible for unit energy and zero mean.
    pub fn from_parts(
        name: impl Into<String>,
        time_fn: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        spectrum_fn: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
        is_complex: bool,
        time_profile: TimeProfile,
        freq_profile: FreqProfile,
        admissibility_hint: Option<f64>,
    ) -> Self {
        AnalyticWavelet {
            name: name.into(),
            time_fn: Arc::new(time_fn),
            spectrum_fn: Arc::new(spectrum_fn),
            is_complex,
            time_profile,
            freq_profile,
            admissibility_hint,
        }
    }

    pub fn admissibility_hint(&self) -> Option<f64> {
        self.admissibility_hint
    }
}

impl WaveletEval for AnalyticWavelet {
    fn name(&self) -> &str {
        &self.name
    }
    fn eval_time(&self, t: f64) -> Complex64 {
        (self.time_fn)(t)
    }
    fn eval_spectrum(&self, w: f64) -> Complex64 {
        (self.spectrum_fn)(w)
    }
    fn is_complex(&self) -> bool {
        self.is_complex
    }
    fn time_profile(&self) -> TimeProfile {
        self.time_profile
    }
    fn freq_profile(&self) -> FreqProfile {
        self.freq_profile
    }
}

/// `psi_{a,b}(t) = psi((t-b)/a) / sqrt(|a|)` for a mother wavelet.
#[derive(Debug, Clone)]
pub struct DaughterWavelet {
    mother: AnalyticWavelet,
    scale: f64,
    shift: f64,
    name: String,
}

impl DaughterWavelet {
    pub fn new(mother: AnalyticWavelet, scale: f64, shift: f64) -> Result<Self> {
        if scale == 0.0 || !scale.is_finite() || !shift.is_finite() {
            return Err(Error::BadScales);
        }
        // no commas: the name may land in a CSV cell
        let name = format!("{}[a={scale};b={shift}]", mother.name);
        Ok(DaughterWavelet {
            mother,
            scale,
            shift,
            name,
        })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
    pub fn shift(&self) -> f64 {
        self.shift
    }
    pub fn mother(&self) -> &AnalyticWavelet {
        &self.mother
    }
}

impl WaveletEval for DaughterWavelet {
    fn name(&self) -> &str {
        &self.name
    }

    fn eval_time(&self, t: f64) -> Complex64 {
        self.mother.eval_time((t - self.shift) / self.scale) / self.scale.abs().sqrt()
    }

    fn eval_spectrum(&self, w: f64) -> Complex64 {
        // sign(a) sqrt(|a|) exp(-jwb) Psi(aw)
        let phase = Complex64::new(0.0, -w * self.shift).exp();
        let base = self.mother.eval_spectrum(self.scale * w);
        base * phase * (self.scale.signum() * self.scale.abs().sqrt())
    }

    fn is_complex(&self) -> bool {
        self.mother.is_complex
    }

    fn time_profile(&self) -> TimeProfile {
        let m = self.mother.time_profile;
        let a = self.scale;
        let compact = m.compact.map(|(lo, hi)| {
            let (x, y) = (a * lo + self.shift, a * hi + self.shift);
            (x.min(y), x.max(y))
        });
        TimeProfile {
            center: a * m.center + self.shift,
            window_halfwidth: a.abs() * m.window_halfwidth,
            compact,
            resolution_hint: m.resolution_hint.map(|h| h * a.abs()),
        }
    }

    fn freq_profile(&self) -> FreqProfile {
        let m = self.mother.freq_profile;
        let a = self.scale;
        let decay = match m.decay {
            DecayClass::Superexponential => DecayClass::Superexponential,
            // |Psi_d(w)|^2 = |a| |Psi(aw)|^2 <= coeff |a|^(1-p) / |w|^p
            DecayClass::PowerLaw { exponent, coeff } => DecayClass::PowerLaw {
                exponent,
                coeff: coeff * a.abs().powf(1.0 - exponent),
            },
        };
        FreqProfile {
            center: m.center / a,
            window_halfwidth: m.window_halfwidth / a.abs(),
            decay,
            resolution_hint: m.resolution_hint.map(|h| h / a.abs()),
        }
    }
}

const OMEGA0: f64 = 5.0;

/// Haar wavelet: `+1/sqrt(2)` on [0,1), `-1/sqrt(2)` on [1,2).
///
/// This scaling puts the time density uniform over a length-2 interval, so
/// the time entropy is exactly one bit.
pub fn haar() -> AnalyticWavelet {
    let amp = 0.5f64.sqrt();
    AnalyticWavelet::from_parts(
        "haar",
        move |t| {
            let v = if (0.0..1.0).contains(&t) {
                amp
            } else if (1.0..2.0).contains(&t) {
                -amp
            } else {
                0.0
            };
            Complex64::new(v, 0.0)
        },
        haar_spectrum,
        false,
        TimeProfile {
            center: 1.0,
            window_halfwidth: 1.0,
            compact: Some((0.0, 2.0)),
            resolution_hint: Some(1.0 / 128.0),
        },
        FreqProfile {
            center: 0.0,
            window_halfwidth: 64.0,
            decay: DecayClass::PowerLaw {
                exponent: 2.0,
                coeff: 8.0,
            },
            resolution_hint: Some(PI / 8.0),
        },
        None,
    )
}

/// `(1/sqrt 2) (1 - e^{-jw})^2 / (jw)`, with a series fallback near w = 0.
fn haar_spectrum(w: f64) -> Complex64 {
    let amp = 0.5f64.sqrt();
    if w.abs() < 1e-4 {
        // E(w) = (1 - e^{-jw})/(jw) = 1 - jw/2 - w^2/6 + jw^3/24 + w^4/120
        let e = Complex64::new(
            1.0 - w * w / 6.0 + w.powi(4) / 120.0,
            -w / 2.0 + w.powi(3) / 24.0,
        );
        Complex64::new(0.0, w) * e * e * amp
    } else {
        let num = (Complex64::new(1.0, 0.0) - Complex64::new(0.0, -w).exp()).powi(2);
        amp * num / Complex64::new(0.0, w)
    }
}

/// Real Morlet: cosine-modulated Gaussian with the zero-mean correction term,
/// amplitude-normalised to unit energy.
pub fn morlet() -> AnalyticWavelet {
    let kappa = (-OMEGA0 * OMEGA0 / 2.0).exp();
    let energy = PI.sqrt()
        * (0.5 + 1.5 * (-OMEGA0 * OMEGA0).exp() - 2.0 * (-0.75 * OMEGA0 * OMEGA0).exp());
    let c = energy.sqrt().recip();
    let spec = (2.0 * PI).sqrt() * c;
    AnalyticWavelet::from_parts(
        "morl",
        move |t| Complex64::new(c * ((OMEGA0 * t).cos() - kappa) * (-t * t / 2.0).exp(), 0.0),
        move |w| {
            let bumps = 0.5
                * ((-(w - OMEGA0) * (w - OMEGA0) / 2.0).exp()
                    + (-(w + OMEGA0) * (w + OMEGA0) / 2.0).exp());
            Complex64::new(spec * (bumps - kappa * (-w * w / 2.0).exp()), 0.0)
        },
        false,
        TimeProfile {
            center: 0.0,
            window_halfwidth: 26.0,
            compact: None,
            resolution_hint: Some(0.05),
        },
        FreqProfile {
            center: 0.0,
            window_halfwidth: OMEGA0 + 26.0,
            decay: DecayClass::Superexponential,
            resolution_hint: Some(0.05),
        },
        None,
    )
}

/// Complex Morlet: `C (e^{j w0 t} - kappa) e^{-t^2/2}` with `w0 = 5`.
pub fn complex_morlet() -> AnalyticWavelet {
    let kappa = (-OMEGA0 * OMEGA0 / 2.0).exp();
    let energy = PI.sqrt()
        * (1.0 - 2.0 * (-0.75 * OMEGA0 * OMEGA0).exp() + (-OMEGA0 * OMEGA0).exp());
    let c = energy.sqrt().recip();
    let spec = (2.0 * PI).sqrt() * c;
    AnalyticWavelet::from_parts(
        "cmor",
        move |t| {
            let env = (-t * t / 2.0).exp();
            (Complex64::new(0.0, OMEGA0 * t).exp() - kappa) * (c * env)
        },
        move |w| {
            Complex64::new(
                spec * ((-(w - OMEGA0) * (w - OMEGA0) / 2.0).exp()
                    - kappa * (-w * w / 2.0).exp()),
                0.0,
            )
        },
        true,
        TimeProfile {
            center: 0.0,
            window_halfwidth: 26.0,
            compact: None,
            resolution_hint: Some(0.05),
        },
        FreqProfile {
            center: OMEGA0,
            window_halfwidth: 26.0,
            decay: DecayClass::Superexponential,
            resolution_hint: Some(0.05),
        },
        None,
    )
}

/// First derivative of a Gaussian, unit energy. `c_psi = 4 sqrt(pi)` exactly.
pub fn gauss1() -> AnalyticWavelet {
    let c = 2.0f64.sqrt() / PI.powf(0.25);
    let spec = c * (2.0 * PI).sqrt();
    AnalyticWavelet::from_parts(
        "gauss1",
        move |t| Complex64::new(-c * t * (-t * t / 2.0).exp(), 0.0),
        move |w| Complex64::new(0.0, spec * w * (-w * w / 2.0).exp()),
        false,
        TimeProfile {
            center: 0.0,
            window_halfwidth: 26.0,
            compact: None,
            resolution_hint: Some(0.05),
        },
        FreqProfile {
            center: 0.0,
            window_halfwidth: 26.0,
            decay: DecayClass::Superexponential,
            resolution_hint: Some(0.05),
        },
        Some(4.0 * PI.sqrt()),
    )
}

/// Mexican hat (second derivative of a Gaussian), unit energy.
pub fn mexican_hat() -> AnalyticWavelet {
    let c = 2.0 / (3.0f64.sqrt() * PI.powf(0.25));
    let spec = c * (2.0 * PI).sqrt();
    AnalyticWavelet::from_parts(
        "mexh",
        move |t| Complex64::new(c * (1.0 - t * t) * (-t * t / 2.0).exp(), 0.0),
        move |w| Complex64::new(spec * w * w * (-w * w / 2.0).exp(), 0.0),
        false,
        TimeProfile {
            center: 0.0,
            window_halfwidth: 26.0,
            compact: None,
            resolution_hint: Some(0.05),
        },
        FreqProfile {
            center: 0.0,
            window_halfwidth: 26.0,
            decay: DecayClass::Superexponential,
            resolution_hint: Some(0.05),
        },
        None,
    )
}
