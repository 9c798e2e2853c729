//! Information-theoretic analysis of wavelets and wavelet decompositions.
//!
//! The library covers four layers:
//!
//! * [`catalog`] — closed-form wavelets (Haar, real/complex Morlet, Gaussian
//!   derivatives) and orthogonal filter pairs (Daubechies, Symmlets,
//!   Coiflets) with structural validation;
//! * [`entropy`] / [`crossdensity`] / [`divergence`] — Shannon entropies of
//!   wavelet densities, the mixed time-frequency overlap, and
//!   Kullback-Leibler distances between wavelets;
//! * [`transform`] — periodized multilevel DWT/IDWT, a direct-evaluation CWT,
//!   and the admissibility constant;
//! * [`infotheory`] — joint signal-wavelet densities and the mutual
//!   information they carry, per subband or over a scalogram grid.
//!
//! All computations are pure and deterministic; values in bits.

pub mod catalog;
pub mod crossdensity;
pub mod divergence;
pub mod entropy;
mod error;
pub mod infotheory;
pub mod quad;
pub mod transform;

pub use error::{Error, Result};
