use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::anyhow;
use clap::Args;
use wienerlab::{analyze, parse_edge_list, parse_graph6, Deletion, Graph, Report};

use crate::output::{ratio, read_input, render_table, Format, ModeArgs, OutputMode};
use crate::{CmdResult, Failure, EXIT_DISCONNECTED, EXIT_USAGE};

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Input file (standard input when absent or `-`). graph6 input may hold one record per line.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6", env = "WIENERLAB_FORMAT")]
    pub format: Format,
    #[command(flatten)]
    pub mode: ModeArgs,
}

pub fn run(args: AnalyzeArgs) -> CmdResult {
    let input = read_input(args.input.as_ref())?;
    let graphs: Vec<(String, Result<Graph, String>)> = match args.format {
        Format::Graph6 => input
            .text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let at = format!("{}:{}", input.name, i + 1);
                (at, parse_graph6(l.trim().as_bytes()).map_err(|e| e.to_string()))
            })
            .collect(),
        Format::Edgelist => {
            vec![(input.name.clone(), parse_edge_list(&input.text).map_err(|e| e.to_string()))]
        }
    };
    if graphs.is_empty() {
        return Err(anyhow!("{}: no graph in input", input.name).into());
    }

    let mode = args.mode.mode();
    let mut out = BufWriter::new(io::stdout().lock());
    for (index, (at, parsed)) in graphs.into_iter().enumerate() {
        let g = parsed.map_err(|e| Failure::new(EXIT_USAGE, anyhow!("{at}: {e}")))?;
        if g.order() == 0 {
            return Err(anyhow!("{at}: graph has no vertices").into());
        }
        if !g.is_connected() {
            return Err(Failure::new(
                EXIT_DISCONNECTED,
                anyhow!(
                    "{at}: graph on {} vertices is disconnected, so its Wiener index is undefined",
                    g.order()
                ),
            ));
        }
        let report: Report = analyze(&g).map_err(|e| anyhow!("{at}: {e}"))?;
        match mode {
            OutputMode::JsonLines => {
                serde_json::to_writer(&mut out, &report)?;
                writeln!(out)?;
            }
            OutputMode::Table => {
                if index > 0 {
                    writeln!(out)?;
                }
                out.write_all(render_report(&report).as_bytes())?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

pub fn render_report(report: &Report) -> String {
    let rows: Vec<Vec<String>> = report
        .vertices
        .iter()
        .map(|v| {
            let (delta, note) = match v.deletion {
                Deletion::Delta(0) => ("0".to_owned(), "good"),
                Deletion::Delta(z) => (z.to_string(), ""),
                Deletion::Disconnects => ("-".to_owned(), "cut vertex"),
            };
            vec![
                v.vertex.to_string(),
                v.label.clone().unwrap_or_else(|| "-".into()),
                v.transmission.to_string(),
                delta,
                note.to_owned(),
            ]
        })
        .collect();
    format!(
        "n = {}, W = {}, good = {} ({})\n{}",
        report.order,
        report.wiener,
        report.good_count,
        ratio(report.good_proportion),
        render_table(&["vertex", "label", "t(v)", "delta", ""], &rows, &[1, 4])
    )
}
