//! `verify`: exhaustive replay of the map tables, isometry and structure checks,
//! and the properties of the worked ℤ₈ example.

use std::collections::BTreeSet;

use serde_json::{json, Map};

use grayiso::codes::{self, verify_isometry};
use grayiso::graymaps::{composed_map, phi, phi_inverse, phi_word, psi, rm1_codewords};
use grayiso::{BinaryWord, BlockCode, GeneratorMatrix, MapKind, Metric, Modulus, RingWord};

use crate::commands::map::table_rows;
use crate::report::{table, word_text, Outcome, Report};
use crate::{tables, EXIT_FAILURE};

/// The rate-2/3 example over ℤ₈.
pub const EXAMPLE_ROWS: [[u32; 3]; 2] = [[1, 2, 7], [0, 2, 4]];

pub fn example_generator() -> GeneratorMatrix {
    GeneratorMatrix::from_rows(Modulus::Z8, &EXAMPLE_ROWS.map(|r| r.to_vec()))
        .expect("valid matrix")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckResult = Result<String, String>;

fn ensure(cond: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(failure())
    }
}

fn core<T>(r: grayiso::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn replay(map: MapKind, expected: &[(&str, u64, &str, u64)]) -> CheckResult {
    let rows = table_rows(map).map_err(|e| e.to_string())?;
    ensure(rows.len() == expected.len(), || {
        format!("{} rows, expected {}", rows.len(), expected.len())
    })?;
    for (row, &(input, sw, image, tw)) in rows.iter().zip(expected) {
        let got = (
            word_text(&row.input),
            row.source_weight,
            word_text(&row.image),
            row.target_weight,
        );
        ensure(
            got == (input.to_string(), sw, image.to_string(), tw),
            || format!("row {input}: got {got:?}"),
        )?;
    }
    Ok(format!("{} rows match", rows.len()))
}

fn replay_phi_inverse() -> CheckResult {
    let rows = table_rows(MapKind::PhiInverse).map_err(|e| e.to_string())?;
    ensure(rows.len() == tables::PHI_INVERSE_RM12.len(), || {
        format!("{} rows", rows.len())
    })?;
    for (row, &(input, image)) in rows.iter().zip(&tables::PHI_INVERSE_RM12) {
        let got = (word_text(&row.input), word_text(&row.image));
        ensure(got == (input.to_string(), image.to_string()), || {
            format!("row {input}: got {got:?}")
        })?;
        ensure(row.source_weight == row.target_weight, || {
            format!(
                "row {input}: weights {} vs {}",
                row.source_weight, row.target_weight
            )
        })?;
    }
    Ok(format!("{} rows match", rows.len()))
}

fn phi_bijective() -> CheckResult {
    let mut checked = 0;
    for len in 1..=4u32 {
        for i in 0..4u32.pow(len) {
            let w = core(RingWord::new(
                Modulus::Z4,
                (0..len).map(|j| (i >> (2 * j)) & 3).collect(),
            ))?;
            let back = core(phi_inverse(&core(phi_word(&w))?))?;
            ensure(back == w, || format!("phi-inverse(phi({w})) = {back}"))?;
            checked += 1;
        }
        for b in BinaryWord::all(2 * len as usize) {
            let back = core(phi_word(&core(phi_inverse(&b))?))?;
            ensure(back == b, || format!("phi(phi-inverse({b})) = {back}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} round trips"))
}

fn psi_k2_is_phi() -> CheckResult {
    for x in 0..4u32 {
        let (a, b) = (core(psi(u64::from(x), 2))?, core(phi(x))?);
        ensure(a == b, || format!("psi({x}, 2) = {a}, phi({x}) = {b}"))?;
    }
    Ok("4 symbols agree".into())
}

fn composed_closed_form() -> CheckResult {
    for u in 0..8u32 {
        let closed = core(composed_map(u))?;
        let routed = core(phi_inverse(&core(psi(u64::from(u), 3))?))?;
        ensure(closed == routed, || {
            format!("u = {u}: {closed} vs {routed}")
        })?;
    }
    Ok("8 symbols agree".into())
}

fn rm1_image(k: u32) -> CheckResult {
    let modulus = core(Modulus::from_exponent(k))?;
    let image = modulus
        .residues()
        .map(|u| psi(u64::from(u), k))
        .collect::<grayiso::Result<BTreeSet<_>>>()
        .map_err(|e| e.to_string())?;
    let rm: BTreeSet<_> = core(rm1_codewords(k - 1))?.into_iter().collect();
    ensure(image == rm, || {
        format!("psi image differs from RM(1,{})", k - 1)
    })?;
    if k == 3 {
        let even: BTreeSet<_> = BinaryWord::all(4)
            .filter(|w| w.hamming_weight() % 2 == 0)
            .collect();
        ensure(image == even, || {
            "psi image is not the even-weight words of length 4".into()
        })?;
        return Ok("8 words, equal to RM(1,2) and to the even-weight words of length 4".into());
    }
    Ok(format!("{} words, equal to RM(1,{})", image.len(), k - 1))
}

fn isometry(map: MapKind, source: Metric, target: Metric) -> CheckResult {
    let report = core(verify_isometry(map, source, target))?;
    ensure(report.holds(), || {
        format!("{} violations", report.violations.len())
    })?;
    Ok(format!("{} symbols, 0 violations", report.symbols_checked))
}

struct Example {
    code: BlockCode,
    image: BlockCode,
}

fn example() -> Result<Example, String> {
    let code = core(codes::enumerate_code(&example_generator()))?;
    let image = core(codes::image_code(&code, MapKind::ComposedPhiInvPsi(3)))?;
    Ok(Example { code, image })
}

fn example_parameters(ex: &Example) -> CheckResult {
    let d_h = core(codes::min_distance(&ex.code, Metric::Hamming))?;
    let d_hom = core(codes::min_distance(&ex.code, Metric::Homogeneous))?;
    ensure((ex.code.len(), d_h, d_hom) == (32, 1, 4), || {
        format!("size {}, d_H {d_h}, d_hom {d_hom}", ex.code.len())
    })?;
    Ok("32 codewords, d_H = 1, d_hom = 4".into())
}

fn proposition_i(ex: &Example) -> CheckResult {
    ensure(ex.image.length() == 2 * ex.code.length(), || {
        format!("image length {}", ex.image.length())
    })?;
    ensure(ex.image.len() == ex.code.len(), || {
        format!("image size {}", ex.image.len())
    })?;
    Ok(format!(
        "length {}, {} codewords",
        ex.image.length(),
        ex.image.len()
    ))
}

fn proposition_ii(ex: &Example) -> CheckResult {
    let d_lee = core(codes::min_distance_pairwise(&ex.image, Metric::Lee))?;
    let d_hom = core(codes::min_distance(&ex.code, Metric::Homogeneous))?;
    ensure(d_lee == d_hom, || format!("d_Lee {d_lee} vs d_hom {d_hom}"))?;
    Ok(format!(
        "pairwise Lee distance {d_lee} = homogeneous distance"
    ))
}

fn proposition_iii(ex: &Example) -> CheckResult {
    for w in ex.image.codewords() {
        let lee = core(w.weight(Metric::Lee))?;
        ensure(lee % 2 == 0, || format!("{w} has Lee weight {lee}"))?;
    }
    Ok(format!(
        "{} image words, all of even Lee weight",
        ex.image.len()
    ))
}

fn nonlinearity_witness(ex: &Example) -> CheckResult {
    let map = MapKind::ComposedPhiInvPsi(3);
    let a = core(map.apply(&core(RingWord::new(Modulus::Z8, vec![6, 6, 6]))?))?;
    let b = core(map.apply(&core(RingWord::new(Modulus::Z8, vec![7, 6, 1]))?))?;
    let witness = core(codes::sum_escapes(&ex.image, &a, &b))?
        .ok_or_else(|| format!("({a}) + ({b}) is a codeword"))?;
    ensure(witness.verify(&ex.image), || {
        "witness does not verify".into()
    })?;
    let verdict = codes::check_linearity(&ex.image);
    let found = verdict.witness().ok_or("image reported linear")?;
    ensure(found.verify(&ex.image), || {
        "linearity witness does not verify".into()
    })?;
    Ok(format!(
        "({a}) + ({b}) = ({}) is not in the image",
        witness.result()
    ))
}

/// Runs every check in a fixed order.
pub fn run_checks() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut record = |name: &'static str, result: CheckResult| {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        out.push(CheckOutcome {
            name,
            passed,
            detail,
        });
    };

    record("table1-phi", replay(MapKind::Phi, &tables::PHI_Z4_SQUARED));
    record("table2-phi-inverse", replay_phi_inverse());
    record("table3-psi", replay(MapKind::Psi(3), &tables::PSI_Z8));
    record(
        "table4-composed",
        replay(MapKind::ComposedPhiInvPsi(3), &tables::COMPOSED_Z8),
    );
    record("phi-bijective", phi_bijective());
    record("psi-k2-equals-phi", psi_k2_is_phi());
    record("composed-closed-form", composed_closed_form());
    for (name, k) in [
        ("rm1-image-k2", 2),
        ("rm1-image-k3", 3),
        ("rm1-image-k4", 4),
    ] {
        record(name, rm1_image(k));
    }
    record(
        "phi-isometry",
        isometry(MapKind::Phi, Metric::Lee, Metric::Hamming),
    );
    record(
        "phi-inverse-isometry",
        isometry(MapKind::PhiInverse, Metric::Hamming, Metric::Lee),
    );
    for (name, k) in [
        ("psi-isometry-k2", 2),
        ("psi-isometry-k3", 3),
        ("psi-isometry-k4", 4),
    ] {
        record(
            name,
            isometry(MapKind::Psi(k), Metric::Homogeneous, Metric::Hamming),
        );
    }
    for (name, k) in [("composed-isometry-k3", 3), ("composed-isometry-k4", 4)] {
        record(
            name,
            isometry(
                MapKind::ComposedPhiInvPsi(k),
                Metric::Homogeneous,
                Metric::Lee,
            ),
        );
    }

    match example() {
        Ok(ex) => {
            record("example-code", example_parameters(&ex));
            record("proposition-i", proposition_i(&ex));
            record("proposition-ii", proposition_ii(&ex));
            record("proposition-iii", proposition_iii(&ex));
            record("nonlinearity-witness", nonlinearity_witness(&ex));
        }
        Err(e) => record("example-code", Err(e)),
    }
    out
}

pub fn run() -> Outcome {
    let checks = run_checks();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.name.to_string(),
                if c.passed { "pass" } else { "FAIL" }.to_string(),
                c.detail.clone(),
            ]
        })
        .collect();
    let mut text = table(&["check", "result", "detail"], &rows);
    text.push_str(&format!(
        "{} of {} checks passed\n",
        checks.len() - failed,
        checks.len()
    ));

    let results = json!({
        "passed": failed == 0,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    Outcome {
        report: Report {
            command: "verify".into(),
            inputs: Map::new(),
            results,
        },
        text,
        exit_code: if failed == 0 { 0 } else { EXIT_FAILURE },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let checks = run_checks();
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        let names: Vec<_> = checks.iter().map(|c| c.name).collect();
        assert!(names.contains(&"rm1-image-k3"));
        assert!(names.contains(&"proposition-iii"));
        assert_eq!(run().exit_code, 0);
    }

    #[test]
    fn replay_detects_a_wrong_row() {
        let mut wrong = tables::COMPOSED_Z8;
        wrong[6].2 = "0,2";
        assert!(replay(MapKind::ComposedPhiInvPsi(3), &wrong).is_err());
        assert!(replay(MapKind::ComposedPhiInvPsi(3), &wrong[..7]).is_err());
    }
}
