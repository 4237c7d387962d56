//! Generator matrix files: one row per line, whitespace-separated element
//! literals, `#` starts a comment.

use frobcode_core::ring::{Elem, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("line {line}: {message}")]
    Entry { line: usize, message: String },
    #[error("line {line}: row has {found} entries, expected {expected}")]
    Ragged { line: usize, found: usize, expected: usize },
    #[error("generator matrix has no rows")]
    Empty,
}

pub fn parse_generator(ring: &Ring, text: &str) -> Result<Vec<Vec<Elem>>, GenError> {
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let row = fields
            .iter()
            .map(|f| ring.parse_elem(f))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| GenError::Entry { line: i + 1, message: e.to_string() })?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(GenError::Ragged { line: i + 1, found: row.len(), expected: first.len() });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(GenError::Empty);
    }
    Ok(rows)
}

pub fn format_generator(ring: &Ring, rows: &[Vec<Elem>], comment: &str) -> String {
    let mut out = format!("# {comment}\n");
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&x| ring.format_elem(x)).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobcode_core::ring::{build_ring, RingSpec};

    #[test]
    fn parses_rows_and_comments() {
        let z4 = build_ring(&RingSpec::zm(4)).unwrap();
        let rows = parse_generator(&z4, "# header\n1 2 3  # trailing\n\n 0 -1 2\n").unwrap();
        assert_eq!(rows, vec![vec![Elem(1), Elem(2), Elem(3)], vec![Elem(0), Elem(3), Elem(2)]]);
    }

    #[test]
    fn errors_name_the_line() {
        let z4 = build_ring(&RingSpec::zm(4)).unwrap();
        assert!(matches!(parse_generator(&z4, "1 2\n1 x\n"), Err(GenError::Entry { line: 2, .. })));
        assert!(matches!(parse_generator(&z4, "1 2\n\n1\n"), Err(GenError::Ragged { line: 3, found: 1, expected: 2 })));
        assert_eq!(parse_generator(&z4, "# nothing\n"), Err(GenError::Empty));
    }

    #[test]
    fn format_round_trips() {
        let m2 = build_ring(&RingSpec::mat(2, RingSpec::gf(2, 1))).unwrap();
        let rows = vec![m2.elements().take(5).collect::<Vec<_>>(), m2.elements().skip(7).take(5).collect()];
        let text = format_generator(&m2, &rows, "sample");
        assert!(text.starts_with("# sample\n"));
        assert_eq!(parse_generator(&m2, &text).unwrap(), rows);
    }
}
