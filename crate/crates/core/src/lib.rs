//! Gray isometries between residue rings and the block codes they carry.
//!
//! The crate is organised bottom-up:
//!
//! - [`rings`]: words over ℤ_{2^k}, their arithmetic, 2-adic expansions and the
//!   Hamming, Lee and homogeneous weights.
//! - [`graymaps`]: the Gray map φ: ℤ₄ → 𝔽₂², its inverse, Carlet's generalized
//!   map ψ: ℤ_{2^k} → 𝔽₂^{2^{k-1}}, the composition φ⁻¹ψ: ℤ_{2^k} → ℤ₄^{2^{k-2}}
//!   and first-order Reed-Muller codewords.
//! - [`codes`]: linear codes from generator matrices, weight spectra, minimum
//!   distances, image codes and linearity decisions with witnesses.
//!
//! ```
//! use grayiso::{codes, GeneratorMatrix, MapKind, Metric, Modulus};
//!
//! let z8 = Modulus::from_exponent(3).unwrap();
//! let g = GeneratorMatrix::from_rows(z8, &[vec![1, 2, 7], vec![0, 2, 4]]).unwrap();
//! let code = codes::enumerate_code(&g).unwrap();
//! assert_eq!(code.len(), 32);
//! assert_eq!(codes::min_distance(&code, Metric::Homogeneous).unwrap(), 4);
//!
//! let image = codes::image_code(&code, MapKind::ComposedPhiInvPsi(3)).unwrap();
//! assert_eq!(image.length(), 6);
//! assert_eq!(codes::min_distance(&image, Metric::Lee).unwrap(), 4);
//! assert!(!codes::check_linearity(&image).is_linear());
//! ```

pub mod codes;
mod error;
pub mod graymaps;
pub mod rings;

pub use codes::{
    BlockCode, EnumerationLimits, GeneratorMatrix, Linearity, LinearityVerdict, Provenance,
    WeightSpectrum, Witness,
};
pub use error::{Error, Result};
pub use graymaps::{BooleanFunctionListing, MapKind};
pub use rings::{BinaryWord, BitExpansion, Metric, Modulus, RingWord};

/// Largest supported 2-adic exponent: residues live in ℤ_{2^k} with k ≤ 16.
pub const MAX_EXPONENT: u32 = 16;
