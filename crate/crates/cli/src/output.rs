//! Rendering of command results as TSV or aligned text.

use std::fmt::Write;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Pretty,
}

#[derive(Clone, Debug)]
enum Block {
    Field(String, String),
    Table(Vec<String>, Vec<Vec<String>>),
    /// Diagrams; shown only in pretty output.
    Picture(String),
    /// Shown verbatim in both formats.
    Raw(String),
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    blocks: Vec<Block>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn field(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.blocks.push(Block::Field(key.to_string(), value.to_string()));
        self
    }

    pub fn table(&mut self, headers: &[&str], rows: Vec<Vec<String>>) -> &mut Self {
        self.blocks
            .push(Block::Table(headers.iter().map(|h| h.to_string()).collect(), rows));
        self
    }

    pub fn picture(&mut self, text: impl Into<String>) -> &mut Self {
        self.blocks.push(Block::Picture(text.into()));
        self
    }

    pub fn raw(&mut self, text: impl Into<String>) -> &mut Self {
        self.blocks.push(Block::Raw(text.into()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            match (b, format) {
                (Block::Field(k, v), Format::Tsv) => writeln!(out, "{k}\t{v}").unwrap(),
                (Block::Field(k, v), Format::Pretty) => writeln!(out, "{k}: {v}").unwrap(),
                (Block::Table(h, rows), Format::Tsv) => {
                    writeln!(out, "{}", h.join("\t")).unwrap();
                    for r in rows {
                        writeln!(out, "{}", r.join("\t")).unwrap();
                    }
                }
                (Block::Table(h, rows), Format::Pretty) => pretty_table(&mut out, h, rows),
                (Block::Picture(_), Format::Tsv) => {}
                (Block::Picture(p), Format::Pretty) | (Block::Raw(p), _) => {
                    out.push_str(p);
                    if !p.ends_with('\n') {
                        out.push('\n');
                    }
                }
            }
        }
        out
    }
}

fn pretty_table(out: &mut String, headers: &[String], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        parts.join("  ")
    };
    writeln!(out, "{}", line(headers)).unwrap();
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(out, "{}", rule.join("  ")).unwrap();
    for r in rows {
        writeln!(out, "{}", line(r)).unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_formats() {
        let mut r = Report::new();
        r.field("alpha", 7)
            .table(&["t", "H"], vec![vec!["0".into(), "1".into()], vec!["10".into(), "3".into()]])
            .picture("* *");
        assert_eq!(r.render(Format::Tsv), "alpha\t7\nt\tH\n0\t1\n10\t3\n");
        assert_eq!(
            r.render(Format::Pretty),
            "alpha: 7\n t  H\n--  -\n 0  1\n10  3\n* *\n"
        );
    }
}
