//! Words over ℤ_{2^k} and the weights defined on them.
//!
//! Residues are always stored reduced into `[0, m)`, so structural equality of
//! two words is ring equality. Because `m` is a power of two every reduction is
//! a mask with `m - 1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result, MAX_EXPONENT};

/// A modulus `m = 2^k` with `1 ≤ k ≤ 16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "u32")]
pub struct Modulus {
    exponent: u32,
}

impl Modulus {
    pub const Z2: Modulus = Modulus { exponent: 1 };
    pub const Z4: Modulus = Modulus { exponent: 2 };
    pub const Z8: Modulus = Modulus { exponent: 3 };

    /// Builds the modulus `m`, rejecting anything that is not `2^k` for a supported `k`.
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 || !m.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(m));
        }
        Self::from_exponent(m.trailing_zeros())
    }

    pub fn from_exponent(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_EXPONENT {
            return Err(Error::ExponentOutOfRange(k));
        }
        Ok(Modulus { exponent: k })
    }

    pub fn value(self) -> u32 {
        1 << self.exponent
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    fn mask(self) -> u64 {
        u64::from(self.value()) - 1
    }

    /// Reduces an arbitrary integer into `[0, m)`.
    pub fn reduce(self, x: i64) -> u32 {
        // Two's complement masking is exact reduction modulo a power of two.
        (x as u64 & self.mask()) as u32
    }

    /// Accepts `x` only if it already lies in `[0, m)`.
    pub fn check(self, x: u64) -> Result<u32> {
        if x < u64::from(self.value()) {
            Ok(x as u32)
        } else {
            Err(Error::ResidueOutOfRange {
                value: x,
                modulus: self.value(),
            })
        }
    }

    /// All residues `0, 1, …, m - 1` in increasing order.
    pub fn residues(self) -> impl Iterator<Item = u32> {
        0..self.value()
    }
}

impl From<Modulus> for u32 {
    fn from(m: Modulus) -> u32 {
        m.value()
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The three weights used on codewords.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// Number of nonzero components; defined over every ℤ_m.
    Hamming,
    /// `min(x, 4 - x)` per symbol; defined over ℤ₄ only.
    Lee,
    /// Homogeneous weight of the chain ring ℤ_{2^k}; over ℤ₈ it is 0, 4 at x = 4, 2 elsewhere.
    Homogeneous,
}

impl Metric {
    pub const ALL: [Metric; 3] = [Metric::Hamming, Metric::Lee, Metric::Homogeneous];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Lee => "lee",
            Metric::Homogeneous => "homogeneous",
        }
    }

    pub fn supports(self, modulus: Modulus) -> bool {
        match self {
            Metric::Lee => modulus == Modulus::Z4,
            Metric::Hamming | Metric::Homogeneous => true,
        }
    }

    fn ensure_supports(self, modulus: Modulus) -> Result<()> {
        if self.supports(modulus) {
            Ok(())
        } else {
            Err(Error::MetricUnsupported {
                metric: self,
                modulus: modulus.value(),
            })
        }
    }

    /// Weight of the single residue `x` of ℤ_m.
    pub fn symbol_weight(self, modulus: Modulus, x: u32) -> Result<u32> {
        let x = modulus.check(u64::from(x))?;
        self.ensure_supports(modulus)?;
        Ok(match self {
            Metric::Hamming => u32::from(x != 0),
            Metric::Lee => x.min(4 - x),
            Metric::Homogeneous => homogeneous_unchecked(modulus, x),
        })
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hamming" | "ham" => Ok(Metric::Hamming),
            "lee" => Ok(Metric::Lee),
            "homogeneous" | "hom" => Ok(Metric::Homogeneous),
            other => Err(Error::Parse {
                what: "metric",
                detail: format!("unknown metric `{other}` (expected hamming, lee or homogeneous)"),
            }),
        }
    }
}

// 0 at zero, 2^{k-1} on the generator 2^{k-1} of the minimal ideal, 2^{k-2} elsewhere.
fn homogeneous_unchecked(modulus: Modulus, x: u32) -> u32 {
    let k = modulus.exponent();
    let half = 1u32 << (k - 1);
    if x == 0 {
        0
    } else if x == half {
        half
    } else {
        // Only reachable for k ≥ 2: over ℤ₂ the single nonzero residue is `half`.
        1 << (k - 2)
    }
}

/// Lee weight of a residue of ℤ₄.
pub fn lee_weight(x: u32) -> Result<u32> {
    Metric::Lee.symbol_weight(Modulus::Z4, x)
}

/// Homogeneous weight of a residue of ℤ_{2^k}.
pub fn hom_weight(modulus: Modulus, x: u32) -> Result<u32> {
    Metric::Homogeneous.symbol_weight(modulus, x)
}

/// The 2-adic digits `u₁, …, u_k` of a residue, least significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitExpansion {
    bits: Vec<u8>,
}

impl BitExpansion {
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn exponent(&self) -> u32 {
        self.bits.len() as u32
    }

    /// Digit `u_i` with the 1-based index used in `u = Σ 2^{i-1} u_i`.
    pub fn digit(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn reconstruct(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .map(|(i, &b)| u64::from(b) << i)
            .sum()
    }
}

/// Expands `u ∈ ℤ_{2^k}` into exactly `k` bits.
pub fn two_adic_expansion(u: u64, k: u32) -> Result<BitExpansion> {
    let modulus = Modulus::from_exponent(k)?;
    let u = modulus.check(u)?;
    let bits = (0..k).map(|i| ((u >> i) & 1) as u8).collect();
    Ok(BitExpansion { bits })
}

/// An n-tuple of residues modulo a power of two.
///
/// Ordering is by modulus, then lexicographic on the residues, which is the
/// codeword order used everywhere output is produced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingWord {
    modulus: Modulus,
    values: Vec<u32>,
}

impl RingWord {
    pub fn new(modulus: Modulus, values: Vec<u32>) -> Result<Self> {
        for &v in &values {
            modulus.check(u64::from(v))?;
        }
        Ok(RingWord { modulus, values })
    }

    /// Builds a word from arbitrary integers, reducing each one modulo `m`.
    pub fn reduced<I: IntoIterator<Item = i64>>(modulus: Modulus, values: I) -> Self {
        RingWord {
            modulus,
            values: values.into_iter().map(|v| modulus.reduce(v)).collect(),
        }
    }

    pub(crate) fn from_reduced(modulus: Modulus, values: Vec<u32>) -> Self {
        debug_assert!(values.iter().all(|&v| v < modulus.value()));
        RingWord { modulus, values }
    }

    pub fn zero(modulus: Modulus, len: usize) -> Self {
        RingWord {
            modulus,
            values: vec![0; len],
        }
    }

    /// The length-0 word, the identity for [`RingWord::concat`].
    pub fn empty(modulus: Modulus) -> Self {
        Self::zero(modulus, 0)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn ensure_compatible(&self, other: &RingWord) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.value(),
                right: other.modulus.value(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &RingWord, op: impl Fn(u32, u32) -> i64) -> Result<RingWord> {
        self.ensure_compatible(other)?;
        Ok(RingWord::reduced(
            self.modulus,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| op(a, b)),
        ))
    }

    pub fn add(&self, other: &RingWord) -> Result<RingWord> {
        self.zip_with(other, |a, b| i64::from(a) + i64::from(b))
    }

    pub fn sub(&self, other: &RingWord) -> Result<RingWord> {
        self.zip_with(other, |a, b| i64::from(a) - i64::from(b))
    }

    pub fn neg(&self) -> RingWord {
        RingWord::reduced(self.modulus, self.values.iter().map(|&a| -i64::from(a)))
    }

    /// Multiplies every component by `scalar`, reduced modulo `m` first.
    pub fn scalar_mul(&self, scalar: u64) -> RingWord {
        let s = scalar & (u64::from(self.modulus.value()) - 1);
        RingWord::reduced(
            self.modulus,
            self.values.iter().map(|&a| (s * u64::from(a)) as i64),
        )
    }

    pub fn concat(&self, other: &RingWord) -> Result<RingWord> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.value(),
                right: other.modulus.value(),
            });
        }
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend_from_slice(&self.values);
        values.extend_from_slice(&other.values);
        Ok(RingWord {
            modulus: self.modulus,
            values,
        })
    }

    pub fn hamming_weight(&self) -> u64 {
        self.values.iter().filter(|&&v| v != 0).count() as u64
    }

    /// Sum of the per-symbol weights under `metric`.
    pub fn weight(&self, metric: Metric) -> Result<u64> {
        metric.ensure_supports(self.modulus)?;
        Ok(self
            .values
            .iter()
            .map(|&v| match metric {
                Metric::Hamming => u64::from(v != 0),
                Metric::Lee => u64::from(v.min(4 - v)),
                Metric::Homogeneous => u64::from(homogeneous_unchecked(self.modulus, v)),
            })
            .sum())
    }

    /// `d(x, y) = weight(x - y)`.
    pub fn distance(&self, other: &RingWord, metric: Metric) -> Result<u64> {
        self.sub(other)?.weight(metric)
    }

    /// Parses the comma-separated text form (`6,6,6`) over the given modulus.
    pub fn parse(text: &str, modulus: Modulus) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                what: "word",
                detail: "empty input".into(),
            });
        }
        let values = text
            .split(',')
            .map(|field| {
                let field = field.trim();
                let v: u64 = field.parse().map_err(|_| Error::Parse {
                    what: "word",
                    detail: format!("`{field}` is not a nonnegative integer"),
                })?;
                modulus.check(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RingWord { modulus, values })
    }
}

impl fmt::Display for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// An n-tuple over 𝔽₂.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidBit(u32::from(b)));
        }
        Ok(BinaryWord { bits })
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        BinaryWord {
            bits: bits.into_iter().map(u8::from).collect(),
        }
    }

    pub fn zeros(len: usize) -> Self {
        BinaryWord { bits: vec![0; len] }
    }

    /// All `2^len` words of the given length, in increasing order of their bit strings.
    pub fn all(len: usize) -> impl Iterator<Item = BinaryWord> {
        (0u64..1 << len).map(move |index| {
            BinaryWord::from_bools((0..len).map(|i| (index >> (len - 1 - i)) & 1 == 1))
        })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn hamming_weight(&self) -> u64 {
        self.bits.iter().filter(|&&b| b == 1).count() as u64
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BinaryWord { bits }
    }

    pub fn to_ring_word(&self) -> RingWord {
        RingWord::from_reduced(
            Modulus::Z2,
            self.bits.iter().map(|&b| u32::from(b)).collect(),
        )
    }

    pub fn from_ring_word(word: &RingWord) -> Result<Self> {
        if word.modulus() != Modulus::Z2 {
            return Err(Error::ModulusMismatch {
                left: word.modulus().value(),
                right: 2,
            });
        }
        Ok(BinaryWord {
            bits: word.values().iter().map(|&v| v as u8).collect(),
        })
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    /// Parses a contiguous bit string such as `0110`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                what: "binary word",
                detail: "empty input".into(),
            });
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse {
                    what: "binary word",
                    detail: format!("unexpected character `{other}`"),
                }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|bits| BinaryWord { bits })
    }
}
