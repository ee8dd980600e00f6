//! Exact scattering operators for affine Hecke algebras.
//!
//! Root systems and alcove walks ([`rootsys`], [`affine`]) produce words
//! for the commuting scattering operators `S_ξ`; [`heckerep`] evaluates them
//! in the polynomial representation over exact (q, t) coefficients
//! ([`param`], [`laurent`]). The remaining modules verify the Yang–Baxter
//! relations, compute type-A spectra and eigenfunctions, and pair them with
//! the constant-term inner product.

pub mod affine;
pub mod cli;
pub mod error;
pub mod half;
pub mod innerprod;
pub mod heckerep;
pub mod laurent;
pub mod param;
pub mod rootsys;
pub mod spectrum;
pub mod verify;
pub mod yangbaxter;

pub use error::{Error, Result};
