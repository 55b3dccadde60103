//! `analyze`: enumerate the code of a matrix file and report its spectra and distances.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Map, Value};

use grayiso::codes::{self, WeightSpectrum};
use grayiso::{BlockCode, EnumerationLimits, GeneratorMatrix, MapKind, Metric};

use crate::report::{Outcome, Report};
use crate::{matrix_file, CliError};

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub matrix: PathBuf,
    pub image: Option<MapKind>,
    /// Empty means every metric defined over the code's modulus.
    pub metrics: Vec<Metric>,
    pub cap: Option<u64>,
}

/// Distance and spectrum of one code under one metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSummary {
    pub metric: Metric,
    /// `None` when the code has fewer than two words.
    pub min_distance: Option<u64>,
    pub spectrum: WeightSpectrum,
}

fn summarize(code: &BlockCode, metric: Metric) -> Result<MetricSummary, CliError> {
    let spectrum = codes::weight_spectrum(code, metric)?;
    let min_distance = if code.len() < 2 {
        None
    } else {
        Some(codes::min_distance(code, metric)?)
    };
    Ok(MetricSummary {
        metric,
        min_distance,
        spectrum,
    })
}

#[derive(Clone, Debug)]
pub struct ImageSummary {
    pub map: MapKind,
    pub code: BlockCode,
    pub distance: MetricSummary,
    pub verdict: codes::LinearityVerdict,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub generator: GeneratorMatrix,
    pub code: BlockCode,
    pub metrics: Vec<MetricSummary>,
    pub image: Option<ImageSummary>,
}

pub fn analyze_matrix(
    generator: &GeneratorMatrix,
    image: Option<MapKind>,
    metrics: &[Metric],
    cap: Option<u64>,
) -> Result<Analysis, CliError> {
    let limits = cap.map_or_else(EnumerationLimits::default, |max_information_words| {
        EnumerationLimits {
            max_information_words,
        }
    });
    let code = codes::enumerate_code_with(generator, limits)?;
    let metrics: Vec<Metric> = if metrics.is_empty() {
        Metric::ALL
            .into_iter()
            .filter(|m| m.supports(code.modulus()))
            .collect()
    } else {
        metrics.to_vec()
    };
    let metrics = metrics
        .iter()
        .map(|&m| summarize(&code, m))
        .collect::<Result<Vec<_>, _>>()?;

    let image = image
        .map(|map| -> Result<ImageSummary, CliError> {
            let image = codes::image_code(&code, map)?;
            Ok(ImageSummary {
                map,
                distance: summarize(&image, map.target_metric())?,
                verdict: codes::check_linearity(&image),
                code: image,
            })
        })
        .transpose()?;

    Ok(Analysis {
        generator: generator.clone(),
        code,
        metrics,
        image,
    })
}

fn spectrum_json(spectrum: &WeightSpectrum) -> Value {
    Value::Object(
        spectrum
            .histogram
            .iter()
            .map(|(w, c)| (w.to_string(), json!(c)))
            .collect(),
    )
}

fn spectrum_text(spectrum: &WeightSpectrum) -> String {
    spectrum
        .histogram
        .iter()
        .map(|(w, c)| format!("{w}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn distance_text(d: Option<u64>) -> String {
    d.map_or_else(|| "undefined".to_string(), |d| d.to_string())
}

fn metric_json(summary: &MetricSummary) -> Value {
    json!({
        "min_distance": summary.min_distance,
        "spectrum": spectrum_json(&summary.spectrum),
    })
}

impl Analysis {
    pub fn to_results(&self) -> Value {
        let g = &self.generator;
        let mut metrics = Map::new();
        for s in &self.metrics {
            metrics.insert(s.metric.name().into(), metric_json(s));
        }
        let mut results = Map::new();
        results.insert(
            "code".into(),
            json!({
                "modulus": g.modulus().value(),
                "length": g.length(),
                "dimension": g.dimension(),
                "size": self.code.len(),
                "nominal_rate": self.code.nominal_rate(),
                "effective_rate": self.code.effective_rate(),
            }),
        );
        results.insert("metrics".into(), Value::Object(metrics));
        if let Some(image) = &self.image {
            results.insert(
                "image".into(),
                json!({
                    "map": image.map.name(),
                    "k": image.map.exponent(),
                    "modulus": image.code.modulus().value(),
                    "length": image.code.length(),
                    "size": image.code.len(),
                    "metric": image.distance.metric,
                    "min_distance": image.distance.min_distance,
                    "spectrum": spectrum_json(&image.distance.spectrum),
                    "all_even": image.distance.spectrum.all_even(),
                    "linearity": serde_json::to_value(&image.verdict).expect("verdict serializes"),
                }),
            );
        }
        Value::Object(results)
    }

    pub fn to_text(&self) -> String {
        let g = &self.generator;
        let mut out = String::new();
        writeln!(
            out,
            "code: Z_{} length {} with {} generator rows",
            g.modulus(),
            g.length(),
            g.dimension()
        )
        .unwrap();
        writeln!(out, "size: {}", self.code.len()).unwrap();
        writeln!(
            out,
            "rate: nominal {:.6}, effective {:.6}",
            self.code.nominal_rate().unwrap_or(f64::NAN),
            self.code.effective_rate()
        )
        .unwrap();
        for s in &self.metrics {
            writeln!(
                out,
                "{} distance: {}",
                s.metric,
                distance_text(s.min_distance)
            )
            .unwrap();
            writeln!(out, "{} spectrum: {}", s.metric, spectrum_text(&s.spectrum)).unwrap();
        }
        if let Some(image) = &self.image {
            let metric = image.distance.metric;
            writeln!(
                out,
                "image under {}: Z_{} length {}, size {}",
                image.map,
                image.code.modulus(),
                image.code.length(),
                image.code.len()
            )
            .unwrap();
            writeln!(
                out,
                "image {metric} distance: {}",
                distance_text(image.distance.min_distance)
            )
            .unwrap();
            writeln!(
                out,
                "image {metric} spectrum: {}",
                spectrum_text(&image.distance.spectrum)
            )
            .unwrap();
            writeln!(
                out,
                "image {metric} weights all even: {}",
                if image.distance.spectrum.all_even() {
                    "yes"
                } else {
                    "no"
                }
            )
            .unwrap();
            match image.verdict.witness() {
                None => writeln!(out, "image linearity: linear").unwrap(),
                Some(codes::Witness::Sum {
                    left,
                    right,
                    result,
                }) => writeln!(
                    out,
                    "image linearity: nonlinear ({left}) + ({right}) = ({result}) is not a codeword"
                )
                .unwrap(),
                Some(codes::Witness::ScalarMultiple {
                    scalar,
                    word,
                    result,
                }) => writeln!(
                    out,
                    "image linearity: nonlinear {scalar}·({word}) = ({result}) is not a codeword"
                )
                .unwrap(),
            }
        }
        out
    }
}

pub fn run(options: &AnalyzeOptions) -> Result<Outcome, CliError> {
    let generator = matrix_file::read(&options.matrix)?;
    let analysis = analyze_matrix(&generator, options.image, &options.metrics, options.cap)?;

    let mut inputs = Map::new();
    inputs.insert("matrix".into(), json!(options.matrix.display().to_string()));
    inputs.insert("image".into(), json!(options.image.map(|m| m.name())));
    inputs.insert("k".into(), json!(options.image.and_then(|m| m.exponent())));
    inputs.insert(
        "metrics".into(),
        json!(analysis
            .metrics
            .iter()
            .map(|s| s.metric.name())
            .collect::<Vec<_>>()),
    );
    inputs.insert("cap".into(), json!(options.cap));

    Ok(Outcome {
        report: Report {
            command: "analyze".into(),
            inputs,
            results: analysis.to_results(),
        },
        text: analysis.to_text(),
        exit_code: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use grayiso::Modulus;

    fn example() -> GeneratorMatrix {
        GeneratorMatrix::from_rows(Modulus::Z8, &[vec![1, 2, 7], vec![0, 2, 4]]).unwrap()
    }

    #[test]
    fn example_with_image() {
        let a = analyze_matrix(&example(), Some(MapKind::ComposedPhiInvPsi(3)), &[], None).unwrap();
        assert_eq!(a.code.len(), 32);
        let d: Vec<_> = a
            .metrics
            .iter()
            .map(|s| (s.metric, s.min_distance))
            .collect();
        assert_eq!(
            d,
            [(Metric::Hamming, Some(1)), (Metric::Homogeneous, Some(4))]
        );
        let image = a.image.as_ref().unwrap();
        assert_eq!(image.code.len(), 32);
        assert_eq!(image.distance.metric, Metric::Lee);
        assert_eq!(image.distance.min_distance, Some(4));
        assert!(!image.verdict.is_linear());
        assert!(image.verdict.witness().unwrap().verify(&image.code));
        let results = a.to_results();
        assert_eq!(results["image"]["linearity"]["verdict"], "nonlinear");
        assert_eq!(results["code"]["nominal_rate"], json!(2.0 / 3.0));
    }

    #[test]
    fn zero_and_identity_matrices() {
        let zero = GeneratorMatrix::from_rows(Modulus::Z8, &[vec![0]]).unwrap();
        let a = analyze_matrix(&zero, None, &[], None).unwrap();
        assert_eq!(a.code.len(), 1);
        assert!(a.metrics.iter().all(|s| s.min_distance.is_none()));
        assert!(a.to_text().contains("hamming distance: undefined"));
        assert_eq!(
            a.to_results()["metrics"]["hamming"]["min_distance"],
            Value::Null
        );

        let id = GeneratorMatrix::from_rows(Modulus::Z8, &[vec![1]]).unwrap();
        let a = analyze_matrix(&id, None, &[Metric::Homogeneous], None).unwrap();
        assert_eq!(a.code.len(), 8);
        assert_eq!(a.metrics[0].min_distance, Some(2));
    }

    #[test]
    fn rejects_bad_metric_and_cap() {
        assert!(matches!(
            analyze_matrix(&example(), None, &[Metric::Lee], None),
            Err(CliError::Core(grayiso::Error::MetricUnsupported { .. }))
        ));
        let err = analyze_matrix(&example(), None, &[], Some(10)).unwrap_err();
        assert_eq!(err.exit_code(), crate::EXIT_FAILURE);
        assert!(analyze_matrix(&example(), Some(MapKind::Phi), &[], None).is_err());
    }
}
