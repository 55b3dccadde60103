//! Block codes over ℤ_{2^k}: enumeration from generator matrices, weight
//! spectra, minimum distances, images under Gray maps and linearity checks.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::graymaps::MapKind;
use crate::rings::{Metric, Modulus, RingWord};
use crate::{Error, Result};

/// A `k × n` matrix over ℤ_m whose row span is a linear code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorMatrix {
    modulus: Modulus,
    rows: Vec<RingWord>,
}

impl GeneratorMatrix {
    pub fn new(modulus: Modulus, rows: Vec<RingWord>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::Domain(
                "generator matrix needs at least one row".into(),
            ));
        };
        let n = first.len();
        if n == 0 {
            return Err(Error::Domain(
                "generator matrix needs at least one column".into(),
            ));
        }
        for row in &rows {
            if row.modulus() != modulus {
                return Err(Error::ModulusMismatch {
                    left: row.modulus().value(),
                    right: modulus.value(),
                });
            }
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: n,
                });
            }
        }
        Ok(GeneratorMatrix { modulus, rows })
    }

    pub fn from_rows(modulus: Modulus, rows: &[Vec<u32>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| RingWord::new(modulus, r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(modulus, rows)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn rows(&self) -> &[RingWord] {
        &self.rows
    }

    /// Number of rows `k`.
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns `n`.
    pub fn length(&self) -> usize {
        self.rows[0].len()
    }

    /// The codeword `xG` for the information word `x ∈ ℤ_m^k`.
    pub fn encode(&self, information: &[u32]) -> Result<RingWord> {
        if information.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                left: information.len(),
                right: self.dimension(),
            });
        }
        let mut acc = vec![0u64; self.length()];
        for (&x, row) in information.iter().zip(&self.rows) {
            let x = u64::from(self.modulus.check(u64::from(x))?);
            for (a, &g) in acc.iter_mut().zip(row.values()) {
                *a = (*a + x * u64::from(g)) & (u64::from(self.modulus.value()) - 1);
            }
        }
        Ok(RingWord::from_reduced(
            self.modulus,
            acc.into_iter().map(|a| a as u32).collect(),
        ))
    }

    /// Number of information words `m^k`, saturating at `u128::MAX`.
    pub fn information_word_count(&self) -> u128 {
        let bits = u64::from(self.modulus.exponent()) * self.dimension() as u64;
        if bits >= 128 {
            u128::MAX
        } else {
            1u128 << bits
        }
    }
}

/// Guards against runaway enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_information_words: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_information_words: 1 << 24,
        }
    }
}

/// Where a code's words came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    FromGenerator(GeneratorMatrix),
    ImageUnder(MapKind, Arc<Provenance>),
    /// An explicitly listed set of words.
    Listed,
}

/// Pair or scalar multiple of codewords whose combination is not a codeword.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Sum {
        #[serde(serialize_with = "as_text")]
        left: RingWord,
        #[serde(serialize_with = "as_text")]
        right: RingWord,
        #[serde(serialize_with = "as_text")]
        result: RingWord,
    },
    ScalarMultiple {
        scalar: u32,
        #[serde(serialize_with = "as_text")]
        word: RingWord,
        #[serde(serialize_with = "as_text")]
        result: RingWord,
    },
}

fn as_text<S: serde::Serializer>(word: &RingWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(word)
}

impl Witness {
    pub fn result(&self) -> &RingWord {
        match self {
            Witness::Sum { result, .. } | Witness::ScalarMultiple { result, .. } => result,
        }
    }

    /// Recomputes the combination and confirms its operands are in `code` and
    /// the result is not.
    pub fn verify(&self, code: &BlockCode) -> bool {
        match self {
            Witness::Sum {
                left,
                right,
                result,
            } => {
                code.contains(left)
                    && code.contains(right)
                    && left.add(right).as_ref() == Ok(result)
                    && !code.contains(result)
            }
            Witness::ScalarMultiple {
                scalar,
                word,
                result,
            } => {
                code.contains(word)
                    && &word.scalar_mul(u64::from(*scalar)) == result
                    && !code.contains(result)
            }
        }
    }
}

/// Outcome of [`check_linearity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "lowercase")]
pub enum LinearityVerdict {
    Linear,
    Nonlinear(Witness),
}

impl LinearityVerdict {
    pub fn is_linear(&self) -> bool {
        matches!(self, LinearityVerdict::Linear)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            LinearityVerdict::Linear => None,
            LinearityVerdict::Nonlinear(w) => Some(w),
        }
    }
}

/// What is currently known about a code's linearity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    Nonlinear(Witness),
    Unknown,
}

/// A nonempty set of words of common length and modulus.
///
/// Codewords are kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCode {
    modulus: Modulus,
    length: usize,
    codewords: BTreeSet<RingWord>,
    provenance: Provenance,
    linearity: Linearity,
}

impl BlockCode {
    /// Builds a code from an explicit list; duplicates collapse.
    pub fn from_words<I: IntoIterator<Item = RingWord>>(words: I) -> Result<Self> {
        let codewords: BTreeSet<RingWord> = words.into_iter().collect();
        let Some(first) = codewords.first() else {
            return Err(Error::Domain("a block code must be nonempty".into()));
        };
        let (modulus, length) = (first.modulus(), first.len());
        for w in &codewords {
            if w.modulus() != modulus {
                return Err(Error::ModulusMismatch {
                    left: w.modulus().value(),
                    right: modulus.value(),
                });
            }
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    left: w.len(),
                    right: length,
                });
            }
        }
        Ok(BlockCode {
            modulus,
            length,
            codewords,
            provenance: Provenance::Listed,
            linearity: Linearity::Unknown,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codewords(&self) -> impl ExactSizeIterator<Item = &RingWord> {
        self.codewords.iter()
    }

    pub fn contains(&self, word: &RingWord) -> bool {
        self.codewords.contains(word)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn linearity(&self) -> &Linearity {
        &self.linearity
    }

    /// True when the code is known to be a submodule without scanning it.
    pub fn is_known_linear(&self) -> bool {
        matches!(self.linearity, Linearity::Linear)
    }

    /// Runs [`check_linearity`] and records the verdict on the code.
    pub fn classified(mut self) -> Self {
        self.linearity = match check_linearity(&self) {
            LinearityVerdict::Linear => Linearity::Linear,
            LinearityVerdict::Nonlinear(w) => Linearity::Nonlinear(w),
        };
        self
    }

    /// `k / n` for generator-matrix codes.
    pub fn nominal_rate(&self) -> Option<f64> {
        match &self.provenance {
            Provenance::FromGenerator(g) => Some(g.dimension() as f64 / g.length() as f64),
            _ => None,
        }
    }

    /// `log_m |C| / n`.
    pub fn effective_rate(&self) -> f64 {
        (self.len() as f64).log2() / f64::from(self.modulus.exponent()) / self.length as f64
    }
}

/// Enumerates `{ xG : x ∈ ℤ_m^k }` under the default cap of 2^24 information words.
pub fn enumerate_code(generator: &GeneratorMatrix) -> Result<BlockCode> {
    enumerate_code_with(generator, EnumerationLimits::default())
}

pub fn enumerate_code_with(
    generator: &GeneratorMatrix,
    limits: EnumerationLimits,
) -> Result<BlockCode> {
    let total = generator.information_word_count();
    if total > u128::from(limits.max_information_words) {
        return Err(Error::Capacity {
            requested: total,
            cap: limits.max_information_words,
        });
    }
    let total = total as u64;
    let m = u64::from(generator.modulus().value());
    let k = generator.dimension();

    let codewords = (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut set, index| {
            let information: Vec<u32> = (0..k)
                .map(|i| ((index / m.pow((k - 1 - i) as u32)) % m) as u32)
                .collect();
            set.insert(generator.encode(&information).expect("digits are residues"));
            set
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.append(&mut b);
            a
        });

    Ok(BlockCode {
        modulus: generator.modulus(),
        length: generator.length(),
        codewords,
        provenance: Provenance::FromGenerator(generator.clone()),
        linearity: Linearity::Linear,
    })
}

/// Histogram of codeword weights under one metric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSpectrum {
    pub metric: Metric,
    pub histogram: BTreeMap<u64, u64>,
}

impl WeightSpectrum {
    pub fn total(&self) -> u64 {
        self.histogram.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.histogram.keys().copied().find(|&w| w > 0)
    }

    pub fn count(&self, weight: u64) -> u64 {
        self.histogram.get(&weight).copied().unwrap_or(0)
    }

    pub fn all_even(&self) -> bool {
        self.histogram.keys().all(|w| w % 2 == 0)
    }
}

pub fn weight_spectrum(code: &BlockCode, metric: Metric) -> Result<WeightSpectrum> {
    ensure_metric(code, metric)?;
    let mut histogram = BTreeMap::new();
    for w in code.codewords() {
        *histogram.entry(w.weight(metric)?).or_insert(0) += 1;
    }
    Ok(WeightSpectrum { metric, histogram })
}

fn ensure_metric(code: &BlockCode, metric: Metric) -> Result<()> {
    if metric.supports(code.modulus()) {
        Ok(())
    } else {
        Err(Error::MetricUnsupported {
            metric,
            modulus: code.modulus().value(),
        })
    }
}

fn ensure_pair(code: &BlockCode) -> Result<()> {
    if code.len() < 2 {
        Err(Error::Domain(format!(
            "minimum distance needs at least two codewords, code has {}",
            code.len()
        )))
    } else {
        Ok(())
    }
}

/// Minimum distance `min d(x, y) = weight(x - y)` over distinct codewords.
///
/// Codes known to be linear take the minimum nonzero weight; anything else
/// falls back to the pairwise scan.
pub fn min_distance(code: &BlockCode, metric: Metric) -> Result<u64> {
    if code.is_known_linear() {
        min_nonzero_weight(code, metric)
    } else {
        min_distance_pairwise(code, metric)
    }
}

/// Minimum weight of a nonzero codeword.
pub fn min_nonzero_weight(code: &BlockCode, metric: Metric) -> Result<u64> {
    ensure_metric(code, metric)?;
    ensure_pair(code)?;
    let spectrum = weight_spectrum(code, metric)?;
    spectrum
        .min_nonzero_weight()
        .ok_or_else(|| Error::Domain("code has no nonzero codeword".into()))
}

/// `O(|C|²)` scan over all unordered pairs of distinct codewords.
pub fn min_distance_pairwise(code: &BlockCode, metric: Metric) -> Result<u64> {
    ensure_metric(code, metric)?;
    ensure_pair(code)?;
    let words: Vec<&RingWord> = code.codewords().collect();
    let best = (0..words.len())
        .into_par_iter()
        .map(|i| {
            words[i + 1..]
                .iter()
                .map(|other| {
                    words[i]
                        .distance(other, metric)
                        .expect("codewords share modulus and length")
                })
                .min()
                .unwrap_or(u64::MAX)
        })
        .min()
        .unwrap_or(u64::MAX);
    Ok(best)
}

/// Image of every codeword under `map`.
pub fn image_code(code: &BlockCode, map: MapKind) -> Result<BlockCode> {
    let domain = map.domain()?;
    if domain != code.modulus() {
        return Err(Error::ModulusMismatch {
            left: code.modulus().value(),
            right: domain.value(),
        });
    }
    let length = map.image_length(code.length()).ok_or_else(|| {
        Error::Domain(format!(
            "length {} is not a whole number of {} input blocks",
            code.length(),
            map
        ))
    })?;
    let codewords = code
        .codewords()
        .map(|w| map.apply(w))
        .collect::<Result<BTreeSet<_>>>()?;
    Ok(BlockCode {
        modulus: map.codomain(),
        length,
        codewords,
        provenance: Provenance::ImageUnder(map, Arc::new(code.provenance.clone())),
        linearity: Linearity::Unknown,
    })
}

/// Decides whether the codeword set is a submodule of ℤ_m^n.
///
/// Pairs are scanned in lexicographic order (including a word with itself),
/// then every scalar multiple; the first escape becomes the witness.
pub fn check_linearity(code: &BlockCode) -> LinearityVerdict {
    let words: Vec<&RingWord> = code.codewords().collect();
    let sum_escape = (0..words.len()).into_par_iter().find_map_first(|i| {
        words[i..].iter().find_map(|&other| {
            let sum = words[i]
                .add(other)
                .expect("codewords share modulus and length");
            (!code.contains(&sum)).then(|| Witness::Sum {
                left: words[i].clone(),
                right: other.clone(),
                result: sum,
            })
        })
    });
    if let Some(w) = sum_escape {
        return LinearityVerdict::Nonlinear(w);
    }
    for scalar in code.modulus().residues() {
        for &word in &words {
            let result = word.scalar_mul(u64::from(scalar));
            if !code.contains(&result) {
                return LinearityVerdict::Nonlinear(Witness::ScalarMultiple {
                    scalar,
                    word: word.clone(),
                    result,
                });
            }
        }
    }
    LinearityVerdict::Linear
}

/// Returns the witness if `left + right` leaves the code.
pub fn sum_escapes(code: &BlockCode, left: &RingWord, right: &RingWord) -> Result<Option<Witness>> {
    let result = left.add(right)?;
    Ok((!code.contains(&result)).then(|| Witness::Sum {
        left: left.clone(),
        right: right.clone(),
        result,
    }))
}

/// One symbol whose weight is not preserved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometryViolation {
    #[serde(serialize_with = "as_text")]
    pub symbol: RingWord,
    #[serde(serialize_with = "as_text")]
    pub image: RingWord,
    pub source_weight: u64,
    pub target_weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometryReport {
    pub map: MapKind,
    pub source_metric: Metric,
    pub target_metric: Metric,
    pub symbols_checked: usize,
    pub violations: Vec<IsometryViolation>,
}

impl IsometryReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `source(u) = target(map(u))` for every input block `u` of the map.
pub fn verify_isometry(map: MapKind, source: Metric, target: Metric) -> Result<IsometryReport> {
    let symbols = map.domain_symbols()?;
    let mut violations = Vec::new();
    for symbol in &symbols {
        let image = map.apply(symbol)?;
        let source_weight = symbol.weight(source)?;
        let target_weight = image.weight(target)?;
        if source_weight != target_weight {
            violations.push(IsometryViolation {
                symbol: symbol.clone(),
                image,
                source_weight,
                target_weight,
            });
        }
    }
    Ok(IsometryReport {
        map,
        source_metric: source,
        target_metric: target,
        symbols_checked: symbols.len(),
        violations,
    })
}
