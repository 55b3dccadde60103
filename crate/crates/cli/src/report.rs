//! Machine (JSON) and human (aligned text) forms of command output.

use serde_json::{Map, Value};

use grayiso::{Metric, Modulus, RingWord};

/// JSON report `{ "command", "inputs", "results" }`.
///
/// `serde_json` maps are ordered, so keys always serialize sorted.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
}

impl Report {
    pub fn to_value(&self) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        root.insert("inputs".into(), Value::Object(self.inputs.clone()));
        root.insert("results".into(), self.results.clone());
        Value::Object(root)
    }

    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(&self.to_value()).expect("report is valid JSON");
        text.push('\n');
        text
    }
}

/// What a command produced: the report, its human rendering and the exit status.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    pub fn render(&self, json: bool) -> String {
        if json {
            self.report.to_json()
        } else {
            self.text.clone()
        }
    }
}

/// Bit strings for binary words, comma-separated residues otherwise.
pub fn word_text(word: &RingWord) -> String {
    if word.modulus() == Modulus::Z2 {
        word.values().iter().map(|v| v.to_string()).collect()
    } else {
        word.to_string()
    }
}

pub fn weight_label(metric: Metric) -> &'static str {
    match metric {
        Metric::Hamming => "w_H",
        Metric::Lee => "w_L",
        Metric::Homogeneous => "w_hom",
    }
}

/// Left-aligned columns separated by two spaces, no trailing whitespace.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, (cell, width)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                out.push_str(cell);
            } else {
                out.push_str(cell);
                out.push_str(&" ".repeat(width - cell.chars().count() + 2));
            }
        }
        out.push('\n');
        out
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
