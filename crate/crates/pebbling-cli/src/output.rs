//! Rendering for the three output formats.
//!
//! Every subcommand produces a sequence of [`Block`]s — tables, key/value
//! reports, and free-form note lines — which render as aligned human tables,
//! tab-separated rows, or `key=value` records.

use clap::ValueEnum;

/// Output format selector, shared by all subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned, human-readable tables.
    Human,
    /// Tab-separated values with a header row per table.
    Tsv,
    /// One `key=value` record per row, records separated by blank lines.
    Records,
}

/// A rectangular table. `kind` names the record type in `records` output.
pub struct Table {
    pub kind: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(kind: &'static str, columns: Vec<&'static str>) -> Table {
        Table {
            kind,
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// An ordered key/value report (one record).
pub struct KeyValues {
    pub kind: &'static str,
    pub pairs: Vec<(&'static str, String)>,
}

/// Free-form note lines (decision logs, violation messages).
pub struct Notes {
    pub kind: &'static str,
    pub lines: Vec<String>,
}

/// One unit of subcommand output.
pub enum Block {
    Table(Table),
    KeyValues(KeyValues),
    Notes(Notes),
}

/// Cells made of digits and rational punctuation read as numbers and are
/// right-aligned in human output.
fn is_numeric(cell: &str) -> bool {
    !cell.is_empty()
        && cell.contains(|c: char| c.is_ascii_digit())
        && cell
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '/' | '-' | '+'))
}

fn render_human(block: &Block, out: &mut String) {
    match block {
        Block::Table(t) => {
            let mut widths: Vec<usize> = t.columns.iter().map(|c| c.len()).collect();
            for row in &t.rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            for (i, col) in t.columns.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(&format!("{:<width$}", col, width = widths[i]));
            }
            out.push('\n');
            for (i, _) in t.columns.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(&"-".repeat(widths[i]));
            }
            out.push('\n');
            for row in &t.rows {
                for (i, cell) in row.iter().enumerate() {
                    if i > 0 {
                        out.push_str("  ");
                    }
                    if is_numeric(cell) {
                        out.push_str(&format!("{:>width$}", cell, width = widths[i]));
                    } else {
                        out.push_str(&format!("{:<width$}", cell, width = widths[i]));
                    }
                }
                // Trailing spaces from a short last cell are unwanted.
                while out.ends_with(' ') {
                    out.pop();
                }
                out.push('\n');
            }
        }
        Block::KeyValues(kv) => {
            for (key, value) in &kv.pairs {
                out.push_str(&format!("{key}: {value}\n"));
            }
        }
        Block::Notes(n) => {
            for line in &n.lines {
                out.push_str(line);
                out.push('\n');
            }
        }
    }
}

fn render_tsv(block: &Block, out: &mut String) {
    match block {
        Block::Table(t) => {
            out.push_str(&t.columns.join("\t"));
            out.push('\n');
            for row in &t.rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        Block::KeyValues(kv) => {
            for (key, value) in &kv.pairs {
                out.push_str(&format!("{key}\t{value}\n"));
            }
        }
        Block::Notes(n) => {
            for line in &n.lines {
                out.push_str(&format!("{}\t{line}\n", n.kind));
            }
        }
    }
}

fn render_records(block: &Block, out: &mut String) {
    let mut record = |kind: &str, pairs: &[(&str, &str)]| {
        out.push_str(&format!("record={kind}\n"));
        for (key, value) in pairs {
            out.push_str(&format!("{key}={value}\n"));
        }
        out.push('\n');
    };
    match block {
        Block::Table(t) => {
            for row in &t.rows {
                let pairs: Vec<(&str, &str)> = t
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (*c, v.as_str()))
                    .collect();
                record(t.kind, &pairs);
            }
        }
        Block::KeyValues(kv) => {
            let pairs: Vec<(&str, &str)> =
                kv.pairs.iter().map(|(k, v)| (*k, v.as_str())).collect();
            record(kv.kind, &pairs);
        }
        Block::Notes(n) => {
            for line in &n.lines {
                record(n.kind, &[("text", line.as_str())]);
            }
        }
    }
}

/// Renders the blocks in the requested format.
pub fn render(blocks: &[Block], format: Format) -> String {
    let mut out = String::new();
    for (i, block) in blocks.iter().enumerate() {
        if i > 0 && format != Format::Records {
            out.push('\n');
        }
        match format {
            Format::Human => render_human(block, &mut out),
            Format::Tsv => render_tsv(block, &mut out),
            Format::Records => render_records(block, &mut out),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Block> {
        let mut t = Table::new("row", vec!["target", "lambda"]);
        t.push(vec!["a_0".into(), "29.25".into()]);
        t.push(vec!["b_0".into(), "236/7".into()]);
        vec![
            Block::KeyValues(KeyValues {
                kind: "graph",
                pairs: vec![("graph", "petersen".into()), ("vertices", "10".into())],
            }),
            Block::Table(t),
        ]
    }

    #[test]
    fn human_aligns_columns() {
        let text = render(&sample(), Format::Human);
        assert!(text.contains("graph: petersen\n"));
        assert!(text.contains("target  lambda\n"));
        assert!(text.contains("a_0      29.25\n"));
        assert!(text.contains("b_0      236/7\n"));
    }

    #[test]
    fn tsv_is_tab_separated() {
        let text = render(&sample(), Format::Tsv);
        assert!(text.contains("target\tlambda\n"));
        assert!(text.contains("a_0\t29.25\n"));
    }

    #[test]
    fn records_emit_one_block_per_row() {
        let text = render(&sample(), Format::Records);
        let records: Vec<&str> = text.split("\n\n").filter(|r| !r.is_empty()).collect();
        assert_eq!(records.len(), 3);
        assert!(records[0].starts_with("record=graph\n"));
        assert!(records[1].contains("lambda=29.25"));
    }

    #[test]
    fn numeric_cells_detected() {
        assert!(is_numeric("29.25"));
        assert!(is_numeric("236/7"));
        assert!(is_numeric("-1"));
        assert!(!is_numeric("-"));
        assert!(!is_numeric("a_0"));
        assert!(!is_numeric("1,2,3"));
    }
}
