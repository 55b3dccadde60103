//! Gray maps between ℤ_{2^k}, 𝔽₂ and ℤ₄.
//!
//! Every map is defined on single symbols and extended to words by
//! concatenating the per-symbol images in input order. Binary words are
//! carried as [`RingWord`]s over ℤ₂ whenever a map has to act on a code.
//!
//! Boolean functions on 𝔽₂^{k-1} are listed with `y₁` varying fastest: input
//! number `j` is the point whose coordinate `y_i` is bit `i - 1` of `j`. For
//! k = 3 that is the order (0,0), (1,0), (0,1), (1,1), under which ψ(u) reads
//! `(u₃, u₃+u₁, u₃+u₂, u₃+u₁+u₂)`.

use std::fmt;

use serde::Serialize;

use crate::rings::{two_adic_expansion, BinaryWord, Metric, Modulus, RingWord};
use crate::{Error, Result, MAX_EXPONENT};

/// φ on ℤ₄: 0 ↦ 00, 1 ↦ 01, 2 ↦ 11, 3 ↦ 10.
const PHI_PAIRS: [[u8; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];

/// Gray map φ of a single residue of ℤ₄.
pub fn phi(x: u32) -> Result<BinaryWord> {
    let x = Modulus::Z4.check(u64::from(x))?;
    Ok(BinaryWord::new(PHI_PAIRS[x as usize].to_vec()).expect("table holds bits"))
}

/// φ extended to ℤ₄ⁿ → 𝔽₂^{2n}.
pub fn phi_word(word: &RingWord) -> Result<BinaryWord> {
    ensure_modulus(word, Modulus::Z4)?;
    let bits = word
        .values()
        .iter()
        .flat_map(|&x| PHI_PAIRS[x as usize])
        .collect();
    Ok(BinaryWord::new(bits).expect("table holds bits"))
}

fn phi_inverse_pair(hi: u8, lo: u8) -> u32 {
    match (hi, lo) {
        (0, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        _ => 3,
    }
}

/// Inverse of φ on all of 𝔽₂^{2n}, one ℤ₄ symbol per consecutive bit pair.
pub fn phi_inverse(word: &BinaryWord) -> Result<RingWord> {
    if !word.len().is_multiple_of(2) {
        return Err(Error::OddLength(word.len()));
    }
    let values = word
        .bits()
        .chunks_exact(2)
        .map(|pair| phi_inverse_pair(pair[0], pair[1]))
        .collect();
    Ok(RingWord::from_reduced(Modulus::Z4, values))
}

/// Value listing of the affine boolean function `y ↦ c + Σ aᵢyᵢ` on 𝔽₂^{k-1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanFunctionListing {
    exponent: u32,
    values: BinaryWord,
}

impl BooleanFunctionListing {
    /// Carlet's function for `u ∈ ℤ_{2^k}`: constant `u_k`, linear coefficients `u₁ … u_{k-1}`.
    pub fn from_residue(u: u64, k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidMap(format!("psi needs k >= 2, got k = {k}")));
        }
        let digits = two_adic_expansion(u, k)?;
        let constant = digits.digit(k as usize);
        let coefficients = &digits.bits()[..k as usize - 1];
        let values = (0u64..1 << (k - 1)).map(|j| {
            let dot = coefficients
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &a)| acc ^ (a & ((j >> i) & 1) as u8));
            constant ^ dot == 1
        });
        Ok(BooleanFunctionListing {
            exponent: k,
            values: BinaryWord::from_bools(values),
        })
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn variables(&self) -> u32 {
        self.exponent - 1
    }

    pub fn values(&self) -> &BinaryWord {
        &self.values
    }

    pub fn into_word(self) -> BinaryWord {
        self.values
    }
}

/// Carlet's generalized Gray map ψ: ℤ_{2^k} → 𝔽₂^{2^{k-1}}.
pub fn psi(u: u64, k: u32) -> Result<BinaryWord> {
    BooleanFunctionListing::from_residue(u, k).map(BooleanFunctionListing::into_word)
}

/// ψ extended to words; `k` is the exponent of the word's modulus.
pub fn psi_word(word: &RingWord) -> Result<BinaryWord> {
    let k = word.modulus().exponent();
    let mut bits = Vec::with_capacity(word.len() << (k.max(2) - 1));
    for &u in word.values() {
        bits.extend_from_slice(psi(u64::from(u), k)?.bits());
    }
    Ok(BinaryWord::new(bits).expect("listing holds bits"))
}

/// φ⁻¹ψ: ℤ₈ → ℤ₄² through `(u₁ + 2u₃, u₁ + 2u₃ + 2u₂)`.
pub fn composed_map(u: u32) -> Result<RingWord> {
    let digits = two_adic_expansion(u64::from(u), 3)?;
    let (u1, u2, u3) = (
        i64::from(digits.digit(1)),
        i64::from(digits.digit(2)),
        i64::from(digits.digit(3)),
    );
    Ok(RingWord::reduced(
        Modulus::Z4,
        [u1 + 2 * u3, u1 + 2 * u3 + 2 * u2],
    ))
}

/// [`composed_map`] extended to ℤ₈ⁿ → ℤ₄^{2n}.
pub fn composed_map_word(word: &RingWord) -> Result<RingWord> {
    ensure_modulus(word, Modulus::Z8)?;
    let mut values = Vec::with_capacity(2 * word.len());
    for &u in word.values() {
        values.extend(composed_map(u)?.into_values());
    }
    Ok(RingWord::from_reduced(Modulus::Z4, values))
}

/// φ⁻¹ ∘ ψ on ℤ_{2^k} for k ≥ 3, landing in ℤ₄^{2^{k-2}}.
pub fn composed_map_general(u: u64, k: u32) -> Result<RingWord> {
    if k < 3 {
        return Err(Error::InvalidMap(format!(
            "the composed map needs k >= 3, got k = {k}"
        )));
    }
    phi_inverse(&psi(u, k)?)
}

/// All `2^{m+1}` codewords of RM(1, m): value listings of the affine functions
/// `y ↦ c + a·y` on 𝔽₂^m, ordered by `(c, a)` with `a` read as an integer
/// whose bit `i` is the coefficient of `y_{i+1}`.
pub fn rm1_codewords(m: u32) -> Result<Vec<BinaryWord>> {
    if m == 0 || m >= MAX_EXPONENT {
        return Err(Error::Domain(format!(
            "RM(1, m) is supported for 1 <= m < {MAX_EXPONENT}, got m = {m}"
        )));
    }
    let points = 1u64 << m;
    let mut words = Vec::with_capacity(2 << m);
    for constant in [false, true] {
        for a in 0..points {
            words.push(BinaryWord::from_bools(
                (0..points).map(|y| constant ^ ((a & y).count_ones() % 2 == 1)),
            ));
        }
    }
    Ok(words)
}

fn ensure_modulus(word: &RingWord, expected: Modulus) -> Result<()> {
    if word.modulus() == expected {
        Ok(())
    } else {
        Err(Error::ModulusMismatch {
            left: word.modulus().value(),
            right: expected.value(),
        })
    }
}

/// The maps that can act on codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "map", content = "k", rename_all = "kebab-case")]
pub enum MapKind {
    /// φ: ℤ₄ → 𝔽₂².
    Phi,
    /// φ⁻¹: 𝔽₂² → ℤ₄, consuming bit pairs.
    PhiInverse,
    /// ψ: ℤ_{2^k} → 𝔽₂^{2^{k-1}}, k ≥ 2.
    Psi(u32),
    /// φ⁻¹ψ: ℤ_{2^k} → ℤ₄^{2^{k-2}}, k ≥ 3.
    #[serde(rename = "composed")]
    ComposedPhiInvPsi(u32),
}

impl MapKind {
    /// Looks up a map by its CLI name; `k` is ignored for φ and φ⁻¹ and defaults to 3.
    pub fn from_name(name: &str, k: Option<u32>) -> Result<Self> {
        let map = match name {
            "phi" => MapKind::Phi,
            "phi-inv" | "phi-inverse" => MapKind::PhiInverse,
            "psi" => MapKind::Psi(k.unwrap_or(3)),
            "composed" => MapKind::ComposedPhiInvPsi(k.unwrap_or(3)),
            other => {
                return Err(Error::InvalidMap(format!(
                    "unknown map `{other}` (expected phi, phi-inv, psi or composed)"
                )))
            }
        };
        map.validate()
    }

    pub fn validate(self) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidMap(msg));
        match self {
            MapKind::Psi(k) if !(2..=MAX_EXPONENT).contains(&k) => {
                bad(format!("psi needs 2 <= k <= {MAX_EXPONENT}, got k = {k}"))
            }
            MapKind::ComposedPhiInvPsi(k) if !(3..=MAX_EXPONENT).contains(&k) => bad(format!(
                "the composed map needs 3 <= k <= {MAX_EXPONENT}, got k = {k}"
            )),
            _ => Ok(self),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Phi => "phi",
            MapKind::PhiInverse => "phi-inv",
            MapKind::Psi(_) => "psi",
            MapKind::ComposedPhiInvPsi(_) => "composed",
        }
    }

    pub fn exponent(self) -> Option<u32> {
        match self {
            MapKind::Psi(k) | MapKind::ComposedPhiInvPsi(k) => Some(k),
            MapKind::Phi | MapKind::PhiInverse => None,
        }
    }

    pub fn domain(self) -> Result<Modulus> {
        match self.validate()? {
            MapKind::Phi => Ok(Modulus::Z4),
            MapKind::PhiInverse => Ok(Modulus::Z2),
            MapKind::Psi(k) | MapKind::ComposedPhiInvPsi(k) => Modulus::from_exponent(k),
        }
    }

    pub fn codomain(self) -> Modulus {
        match self {
            MapKind::Phi | MapKind::Psi(_) => Modulus::Z2,
            MapKind::PhiInverse | MapKind::ComposedPhiInvPsi(_) => Modulus::Z4,
        }
    }

    /// `(input symbols, output symbols)` consumed and produced per application.
    pub fn block_shape(self) -> (usize, usize) {
        match self {
            MapKind::Phi => (1, 2),
            MapKind::PhiInverse => (2, 1),
            MapKind::Psi(k) => (1, 1 << (k - 1)),
            MapKind::ComposedPhiInvPsi(k) => (1, 1 << (k - 2)),
        }
    }

    /// Image length of a word of length `n`, if `n` is a whole number of input blocks.
    pub fn image_length(self, n: usize) -> Option<usize> {
        let (input, output) = self.block_shape();
        n.is_multiple_of(input).then_some(n / input * output)
    }

    /// Weight the map is meant to preserve on its domain.
    pub fn source_metric(self) -> Metric {
        match self {
            MapKind::Phi => Metric::Lee,
            MapKind::PhiInverse => Metric::Hamming,
            MapKind::Psi(_) | MapKind::ComposedPhiInvPsi(_) => Metric::Homogeneous,
        }
    }

    /// Natural weight on the codomain: Hamming over 𝔽₂, Lee over ℤ₄.
    pub fn target_metric(self) -> Metric {
        match self.codomain() {
            Modulus::Z4 => Metric::Lee,
            _ => Metric::Hamming,
        }
    }

    /// Applies the map to a whole word, block by block.
    pub fn apply(self, word: &RingWord) -> Result<RingWord> {
        let domain = self.domain()?;
        ensure_modulus(word, domain)?;
        match self {
            MapKind::Phi => phi_word(word).map(|b| b.to_ring_word()),
            MapKind::PhiInverse => phi_inverse(&BinaryWord::from_ring_word(word)?),
            MapKind::Psi(_) => psi_word(word).map(|b| b.to_ring_word()),
            MapKind::ComposedPhiInvPsi(k) => {
                let mut values = Vec::with_capacity(word.len() << (k - 2));
                for &u in word.values() {
                    values.extend(composed_map_general(u64::from(u), k)?.into_values());
                }
                Ok(RingWord::from_reduced(Modulus::Z4, values))
            }
        }
    }

    /// Every single input block of the map, in increasing order.
    pub fn domain_symbols(self) -> Result<Vec<RingWord>> {
        let domain = self.domain()?;
        let (input, _) = self.block_shape();
        let m = domain.value();
        let count = (m as usize).pow(input as u32);
        Ok((0..count)
            .map(|index| {
                let values = (0..input)
                    .rev()
                    .map(|i| ((index / (m as usize).pow(i as u32)) % m as usize) as u32)
                    .collect();
                RingWord::from_reduced(domain, values)
            })
            .collect())
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent() {
            Some(k) => write!(f, "{}(k={k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}
