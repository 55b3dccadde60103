//! `map`: evaluate a Gray map on one word or on its whole single-symbol domain.

use serde_json::{json, Map, Value};

use grayiso::graymaps::rm1_codewords;
use grayiso::{BinaryWord, MapKind, Modulus, RingWord};

use crate::report::{table, weight_label, word_text, Outcome, Report};
use crate::CliError;

/// One line of a map table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapRow {
    pub input: RingWord,
    pub source_weight: u64,
    pub image: RingWord,
    pub target_weight: u64,
}

pub fn evaluate(map: MapKind, input: &RingWord) -> Result<MapRow, CliError> {
    let image = map.apply(input)?;
    Ok(MapRow {
        input: input.clone(),
        source_weight: input.weight(map.source_metric())?,
        target_weight: image.weight(map.target_metric())?,
        image,
    })
}

/// Inputs listed by `--all`.
///
/// φ runs over ℤ₄², φ⁻¹ over RM(1,2), ψ and φ⁻¹ψ over the single symbols of ℤ_{2^k}.
pub fn table_inputs(map: MapKind) -> Result<Vec<RingWord>, CliError> {
    Ok(match map {
        MapKind::Phi => (0..16)
            .map(|i| RingWord::new(Modulus::Z4, vec![i / 4, i % 4]))
            .collect::<Result<_, _>>()?,
        MapKind::PhiInverse => rm1_codewords(2)?
            .iter()
            .map(BinaryWord::to_ring_word)
            .collect(),
        MapKind::Psi(_) | MapKind::ComposedPhiInvPsi(_) => map.domain_symbols()?,
    })
}

pub fn table_rows(map: MapKind) -> Result<Vec<MapRow>, CliError> {
    table_inputs(map)?
        .iter()
        .map(|w| evaluate(map, w))
        .collect()
}

/// Parses a word from the map's domain: bit strings for φ⁻¹, residues otherwise.
pub fn parse_input(map: MapKind, text: &str) -> Result<RingWord, CliError> {
    let domain = map.domain()?;
    let word = if domain == Modulus::Z2 {
        text.parse::<BinaryWord>()?.to_ring_word()
    } else {
        RingWord::parse(text, domain)?
    };
    if map.image_length(word.len()).is_none() {
        return Err(CliError::Usage(format!(
            "{map} needs an even number of bits, got {}",
            word.len()
        )));
    }
    Ok(word)
}

pub fn run(map: MapKind, word: Option<&str>, all: bool) -> Result<Outcome, CliError> {
    let rows = match (word, all) {
        (Some(_), true) => {
            return Err(CliError::Usage(
                "give either a word or --all, not both".into(),
            ))
        }
        (None, false) => return Err(CliError::Usage("give a word or --all".into())),
        (Some(text), false) => vec![evaluate(map, &parse_input(map, text)?)?],
        (None, true) => table_rows(map)?,
    };

    let source = weight_label(map.source_metric());
    let target = weight_label(map.target_metric());
    let text = table(
        &["input", source, "image", target],
        &rows
            .iter()
            .map(|r| {
                vec![
                    word_text(&r.input),
                    r.source_weight.to_string(),
                    word_text(&r.image),
                    r.target_weight.to_string(),
                ]
            })
            .collect::<Vec<_>>(),
    );

    let mut inputs = Map::new();
    inputs.insert("map".into(), json!(map.name()));
    inputs.insert("k".into(), json!(map.exponent()));
    inputs.insert("all".into(), json!(all));
    inputs.insert("word".into(), json!(word));
    let results = json!({
        "source_metric": map.source_metric(),
        "target_metric": map.target_metric(),
        "rows": rows.iter().map(|r| json!({
            "input": word_text(&r.input),
            "source_weight": r.source_weight,
            "image": word_text(&r.image),
            "target_weight": r.target_weight,
        })).collect::<Vec<Value>>(),
    });

    Ok(Outcome {
        report: Report {
            command: "map".into(),
            inputs,
            results,
        },
        text,
        exit_code: 0,
    })
}
