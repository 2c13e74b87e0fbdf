use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, ValueEnum};
use wienerlab::{
    enumerate_connected_records, rank_stream, scan_stream, DeltaTarget, MalformedPolicy, Proportion,
    ScanOptions, SearchError, SearchFilter, SearchSummary,
};

use crate::output::{is_stdin, parse_ratio};
use crate::{CmdResult, Failure, EXIT_INTERRUPTED, EXIT_USAGE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OnMalformed {
    Skip,
    Abort,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// graph6 file, one record per line (standard input when absent or `-`)
    #[arg(conflicts_with = "enumerate")]
    pub input: Option<PathBuf>,
    /// Search every connected labeled graph on 1..=N vertices instead of reading input (N <= 7)
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,

    /// Keep graphs in which every vertex is good
    #[arg(long)]
    pub all_good: bool,
    /// Keep graphs with at least this many good vertices
    #[arg(long, value_name = "C")]
    pub min_good_count: Option<usize>,
    /// Keep graphs whose good proportion is at least p/q
    #[arg(long, value_name = "P/Q", value_parser = parse_ratio)]
    pub min_proportion: Option<Proportion>,
    /// Keep graphs with at least --min-count vertices of Δ_v = Z
    #[arg(long, value_name = "Z", allow_hyphen_values = true)]
    pub delta: Option<i64>,
    #[arg(long, value_name = "C", requires = "delta", default_value_t = 1)]
    pub min_count: usize,
    /// Skip graphs with more than this many vertices
    #[arg(long, value_name = "N")]
    pub max_order: Option<usize>,
    /// Print only the N best matches by good proportion (ties: smaller n, then input order)
    #[arg(long, value_name = "N")]
    pub top: Option<usize>,

    /// Worker threads (default: available parallelism)
    #[arg(long, value_name = "N", env = "WIENERLAB_THREADS")]
    pub threads: Option<usize>,
    /// Write the run summary here instead of standard error
    #[arg(long, value_name = "PATH", env = "WIENERLAB_SUMMARY_FILE")]
    pub summary_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "skip", env = "WIENERLAB_ON_MALFORMED")]
    pub on_malformed: OnMalformed,
}

impl SearchArgs {
    fn filter(&self) -> SearchFilter {
        SearchFilter {
            min_good_count: self.min_good_count,
            min_good_proportion: self.min_proportion,
            require_all_good: self.all_good,
            delta_target: self.delta.map(|z| DeltaTarget { z, min_count: self.min_count }),
            max_order: self.max_order,
        }
    }
}

type Lines = Box<dyn Iterator<Item = io::Result<String>>>;

fn open_lines(args: &SearchArgs) -> Result<Lines, Failure> {
    if let Some(n) = args.enumerate {
        let _ = enumerate_connected_records(n)?;
        let records = (1..=n).flat_map(|k| enumerate_connected_records(k).expect("order checked above"));
        return Ok(Box::new(records.map(Ok)));
    }
    match &args.input {
        Some(p) if !is_stdin(Some(p)) => {
            let file = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
            Ok(Box::new(BufReader::new(file).lines()))
        }
        _ => Ok(Box::new(io::stdin().lock().lines())),
    }
}

fn search_failure(e: SearchError, source: &str) -> Failure {
    match e {
        SearchError::MalformedRecord { line, source: err } => {
            Failure::new(EXIT_USAGE, anyhow!("{source}:{line}: malformed graph6 record: {err}"))
        }
        SearchError::Analysis { line, source: err } => {
            Failure::new(EXIT_USAGE, anyhow!("{source}:{line}: {err}"))
        }
        SearchError::Io(err) => Failure::new(EXIT_USAGE, err),
        e => Failure::new(EXIT_USAGE, e),
    }
}

fn write_summary(summary: &SearchSummary, path: Option<&PathBuf>) -> anyhow::Result<()> {
    let json = serde_json::to_string(summary)? + "\n";
    match path {
        Some(p) => fs::write(p, json).with_context(|| format!("cannot write {}", p.display())),
        None => io::stderr().write_all(json.as_bytes()).context("cannot write summary"),
    }
}

pub fn run(args: SearchArgs) -> CmdResult {
    let filter = args.filter();
    if args.top.is_none() {
        filter.validate()?;
    }
    if args.threads == Some(0) {
        return Err(anyhow!("--threads must be at least 1").into());
    }
    let source = match (&args.enumerate, &args.input) {
        (Some(n), _) => format!("<enumerate {n}>"),
        (None, Some(p)) if !is_stdin(Some(p)) => p.display().to_string(),
        _ => "<stdin>".into(),
    };

    let cancel = Arc::new(AtomicBool::new(false));
    {
        let cancel = Arc::clone(&cancel);
        // a second ^C falls through to the default behaviour
        let _ = ctrlc::set_handler(move || {
            if cancel.swap(true, Ordering::Relaxed) {
                std::process::exit(i32::from(EXIT_INTERRUPTED));
            }
        });
    }
    let mut options = match args.threads {
        Some(n) => ScanOptions::with_workers(n),
        None => ScanOptions::default(),
    };
    options.on_malformed = match args.on_malformed {
        OnMalformed::Skip => MalformedPolicy::Skip,
        OnMalformed::Abort => MalformedPolicy::Abort,
    };
    options.cancel = Some(cancel);

    let lines = open_lines(&args)?;
    let mut out = BufWriter::new(io::stdout().lock());
    let summary = match args.top {
        Some(top) => {
            let (best, summary) =
                rank_stream(lines, &filter, top, &options).map_err(|e| search_failure(e, &source))?;
            for r in &best {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
            summary
        }
        None => scan_stream(lines, &filter, &options, |r| {
            serde_json::to_writer(&mut out, r)?;
            writeln!(out)
        })
        .map_err(|e| search_failure(e, &source))?,
    };
    out.flush()?;
    write_summary(&summary, args.summary_file.as_ref())?;
    if summary.cancelled {
        return Err(Failure::new(
            EXIT_INTERRUPTED,
            anyhow!("interrupted; summary covers the records read so far"),
        ));
    }
    Ok(())
}
