use std::fs;
use std::io::{self, IsTerminal, Read};
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, ValueEnum};
use wienerlab::Proportion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Table,
    JsonLines,
}

/// `--json` / `--table`; without either, tables go to terminals and JSON to pipes.
#[derive(Args, Debug, Clone, Copy)]
pub struct ModeArgs {
    /// Emit JSON lines
    #[arg(long, conflicts_with = "table", global = true)]
    pub json: bool,
    /// Emit a human-readable table, even when stdout is not a terminal
    #[arg(long, global = true)]
    pub table: bool,
}

impl ModeArgs {
    pub fn mode(self) -> OutputMode {
        if self.json {
            OutputMode::JsonLines
        } else if self.table || io::stdout().is_terminal() {
            OutputMode::Table
        } else {
            OutputMode::JsonLines
        }
    }
}

/// Input text plus the name used in diagnostics.
pub struct Input {
    pub name: String,
    pub text: String,
}

pub fn is_stdin(path: Option<&Path>) -> bool {
    path.is_none_or(|p| p.as_os_str() == "-")
}

pub fn read_input(path: Option<&PathBuf>) -> anyhow::Result<Input> {
    match path {
        Some(p) if !is_stdin(Some(p)) => {
            let text = fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            Ok(Input { name: p.display().to_string(), text })
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("cannot read standard input")?;
            Ok(Input { name: "<stdin>".into(), text })
        }
    }
}

/// Always `p/q`, including `1/1` and `0/1`.
pub fn ratio(p: Proportion) -> String {
    format!("{}/{}", p.numer(), p.denom())
}

pub fn parse_ratio(s: &str) -> Result<Proportion, String> {
    s.trim().parse::<Proportion>().map_err(|e| format!("expected a rational p/q, got {s:?} ({e})"))
}

/// Right-aligned columns except the ones listed in `left`.
pub fn render_table(header: &[&str], rows: &[Vec<String>], left: &[usize]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            if left.contains(&i) {
                out.push_str(&format!("{cell:<w$}"));
            } else {
                out.push_str(&format!("{cell:>w$}"));
            }
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        out
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
