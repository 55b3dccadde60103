//! Plain-text generator matrices.
//!
//! ```text
//! # optional comments and blank lines are ignored
//! mod 8 rows 2 cols 3
//! 1,2,7
//! 0,2,4
//! ```

use std::fmt::Write as _;

use grayiso::{GeneratorMatrix, Modulus, RingWord};

use crate::CliError;

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: usize, text: &str) -> Result<(Modulus, usize, usize), CliError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let [kw_mod, m, kw_rows, k, kw_cols, n] = fields.as_slice() else {
        return Err(parse_error(
            line,
            format!("expected header `mod <m> rows <k> cols <n>`, found `{text}`"),
        ));
    };
    if (*kw_mod, *kw_rows, *kw_cols) != ("mod", "rows", "cols") {
        return Err(parse_error(
            line,
            format!("expected header `mod <m> rows <k> cols <n>`, found `{text}`"),
        ));
    }
    let number = |s: &str, what: &str| {
        s.parse::<u64>()
            .map_err(|_| parse_error(line, format!("{what} `{s}` is not a nonnegative integer")))
    };
    let modulus =
        Modulus::new(number(m, "modulus")?).map_err(|e| parse_error(line, e.to_string()))?;
    let rows = number(k, "row count")? as usize;
    let cols = number(n, "column count")? as usize;
    if rows == 0 || cols == 0 {
        return Err(parse_error(
            line,
            "row and column counts must be at least 1",
        ));
    }
    Ok((modulus, rows, cols))
}

pub fn parse(text: &str) -> Result<GeneratorMatrix, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing header `mod <m> rows <k> cols <n>`"))?;
    let (modulus, k, n) = parse_header(header_line, header)?;

    let mut rows = Vec::with_capacity(k);
    let mut last_line = header_line;
    for (line, row_text) in lines {
        if rows.len() == k {
            return Err(parse_error(
                line,
                format!("header declares {k} rows, found more"),
            ));
        }
        let row =
            RingWord::parse(row_text, modulus).map_err(|e| parse_error(line, e.to_string()))?;
        if row.len() != n {
            return Err(parse_error(
                line,
                format!("header declares {n} columns, row has {}", row.len()),
            ));
        }
        rows.push(row);
        last_line = line;
    }
    if rows.len() != k {
        return Err(parse_error(
            last_line,
            format!("header declares {k} rows, found {}", rows.len()),
        ));
    }
    Ok(GeneratorMatrix::new(modulus, rows)?)
}

pub fn read(path: &std::path::Path) -> Result<GeneratorMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn format(matrix: &GeneratorMatrix) -> String {
    let mut out = format!(
        "mod {} rows {} cols {}\n",
        matrix.modulus(),
        matrix.dimension(),
        matrix.length()
    );
    for row in matrix.rows() {
        writeln!(out, "{row}").unwrap();
    }
    out
}
