use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Subcommand};
use serde::ser::{Serialize, SerializeMap, Serializer};
use wienerlab::{
    build_bunch, build_chorded_cycle_12, build_cycle, build_lily_general, build_path, emit_edge_list,
    emit_graph6, BunchParams, Graph, LilyParams,
};

use crate::output::Format;
use crate::CmdResult;

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub family: Family,
    #[arg(long, value_enum, default_value = "graph6", env = "WIENERLAB_FORMAT", global = true)]
    pub format: Format,
    /// Write the vertex label map as JSON to this file
    #[arg(long, value_name = "PATH", global = true)]
    pub labels: Option<PathBuf>,
    /// Print the vertex label map as a JSON line after the graph
    #[arg(long, conflicts_with = "labels", global = true)]
    pub inline_labels: bool,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// B(k): six hub vertices and k spokes of length five; requires k >= 2
    Bunch {
        #[arg(long)]
        k: usize,
    },
    /// L'(k, m, z): m blocks of 2k + 1 vertices and a tail tuned so first-layer vertices have Δ = z
    Lily {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        z: i64,
    },
    /// The 12-cycle with four chords
    Chorded12,
    /// Cycle C_n; requires n >= 3
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Path P_n; requires n >= 1
    Path {
        #[arg(long)]
        n: usize,
    },
}

/// `{"labels": {"0": "u0", ...}}` with keys in vertex order.
struct LabelMap<'a>(&'a Graph);

struct Labels<'a>(&'a Graph);

impl Serialize for LabelMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry("labels", &Labels(self.0))?;
        map.end()
    }
}

impl Serialize for Labels<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let g = self.0;
        let mut map = s.serialize_map(Some(g.order()))?;
        for v in g.vertices() {
            if let Some(label) = g.label(v) {
                map.serialize_entry(&v.index().to_string(), label)?;
            }
        }
        map.end()
    }
}

pub fn build(family: &Family) -> anyhow::Result<Graph> {
    Ok(match *family {
        Family::Bunch { k } => build_bunch(BunchParams::new(k)?),
        Family::Lily { k, m, z } => build_lily_general(LilyParams::new(k, m, z)?)?,
        Family::Chorded12 => build_chorded_cycle_12(),
        Family::Cycle { n } => build_cycle(n)?,
        Family::Path { n } => build_path(n)?,
    })
}

pub fn run(args: ConstructArgs) -> CmdResult {
    let g = build(&args.family)?;
    let mut text = match args.format {
        Format::Graph6 => emit_graph6(&g) + "\n",
        Format::Edgelist => emit_edge_list(&g),
    };
    if args.inline_labels {
        text.push_str(&serde_json::to_string(&LabelMap(&g))?);
        text.push('\n');
    }
    if let Some(path) = &args.labels {
        let json = serde_json::to_string_pretty(&LabelMap(&g))? + "\n";
        fs::write(path, json).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}
