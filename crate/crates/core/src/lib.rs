//! Desk-scale simulation laboratory for diffusion-based watermark removal.
//!
//! The lab models a spread-spectrum watermark embedded additively in a
//! low-dimensional latent space, an exactly tractable Gaussian-mixture
//! "content" prior whose time-t score is available in closed form, and a
//! DDPM-style forward/reverse diffusion pair. On top of those it implements
//! the attacks (unguided regeneration, decoder-guided regeneration, and
//! classical noise/blur/crop baselines) together with the measurement
//! machinery needed to verify the information-theoretic story numerically:
//! watermark SNR decay, per-bit mutual information, Fano decoding bounds,
//! and data-processing-inequality checks.
//!
//! Everything is deterministic given a master seed; trial records, sweep
//! tables, and plots can be reproduced byte for byte.

pub mod attack;
pub mod codec;
pub mod diffusion;
pub mod error;
pub mod harness;
pub mod infotheory;
pub mod linalg;
pub mod metrics;
pub mod prior;
pub mod rng;
pub mod schedule;
pub mod watermark;

pub use error::{Error, Result};
