use std::io::{self, BufWriter, Write};

use anyhow::anyhow;
use clap::{Args, Subcommand};
use serde_json::json;
use wienerlab::constructions::{Failure as CheckFailure, Verification};
use wienerlab::{verify_bunch_theorem, verify_lily_theorem, Proportion};

use crate::output::{ratio, render_table, ModeArgs, OutputMode};
use crate::{CmdResult, Failure, EXIT_VERIFY_FAILED};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub family: VerifyFamily,
    #[command(flatten)]
    pub mode: ModeArgs,
}

#[derive(Subcommand, Debug)]
pub enum VerifyFamily {
    /// Bunch graphs B(k): good set, t(v_1_1) and proportion
    Bunch {
        /// Values of k: comma-separated numbers or inclusive ranges, e.g. `2..20` or `2,5,8..10`
        #[arg(long, value_parser = parse_ranges)]
        k: Ranges,
    },
    /// Lily graphs L'(k, m, z): order, hub degree, Δ = z set and proportion
    Lily {
        /// Semicolon-separated `k,m,z` triples (`k,m` means z = 0), e.g. `4,7,0;3,8,0`
        #[arg(long, value_parser = parse_cases, allow_hyphen_values = true)]
        cases: Cases,
    },
}

#[derive(Clone, Debug)]
pub struct Ranges(pub Vec<usize>);

#[derive(Clone, Debug)]
pub struct Cases(pub Vec<(usize, usize, i64)>);

pub fn parse_ranges(s: &str) -> Result<Ranges, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        let bad = |why: &str| format!("bad range item {item:?}: {why}");
        let bound = |x: &str| x.trim().parse::<usize>().map_err(|e| bad(&e.to_string()));
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (bound(lo)?, bound(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(bad("empty range"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(bound(item)?),
        }
    }
    Ok(Ranges(out))
}

pub fn parse_cases(s: &str) -> Result<Cases, String> {
    let mut out = Vec::new();
    for case in s.split(';').map(str::trim).filter(|c| !c.is_empty()) {
        let bad = |why: String| format!("bad case {case:?}: {why}");
        let parts: Vec<&str> = case.split(',').map(str::trim).collect();
        let (k, m, z) = match parts.as_slice() {
            [k, m] => (*k, *m, "0"),
            [k, m, z] => (*k, *m, *z),
            _ => return Err(bad("expected k,m or k,m,z".into())),
        };
        out.push((
            k.parse().map_err(|e| bad(format!("k: {e}")))?,
            m.parse().map_err(|e| bad(format!("m: {e}")))?,
            z.parse().map_err(|e| bad(format!("z: {e}")))?,
        ));
    }
    if out.is_empty() {
        return Err("no cases given".into());
    }
    Ok(Cases(out))
}

/// One verified case, flattened for printing.
#[derive(Debug)]
pub struct CaseOutcome {
    pub case: String,
    pub n: usize,
    pub hits: usize,
    pub graph6: String,
    pub failures: Vec<CheckFailure>,
}

impl CaseOutcome {
    fn of<P>(case: String, v: Verification<P>, hits: impl FnOnce(&wienerlab::Report) -> usize) -> Self {
        let (n, hits) = v.report.as_ref().map_or((0, 0), |r| (r.order, hits(r)));
        CaseOutcome { case, n, hits, graph6: v.graph6, failures: v.failures }
    }

    fn proportion(&self) -> String {
        if self.n == 0 {
            "-".into()
        } else {
            ratio(Proportion::new(self.hits as u64, self.n as u64))
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run(args: VerifyArgs) -> CmdResult {
    let (column, outcomes) = match args.family {
        VerifyFamily::Bunch { k } => {
            let runs = verify_bunch_theorem(&k.0)?;
            let rows = runs
                .into_iter()
                .map(|v| CaseOutcome::of(format!("k={}", v.params.k()), v, |r| r.good_count))
                .collect::<Vec<_>>();
            ("good", rows)
        }
        VerifyFamily::Lily { cases } => {
            let runs = verify_lily_theorem(&cases.0)?;
            let rows = runs
                .into_iter()
                .map(|v| {
                    let z = v.params.z();
                    CaseOutcome::of(v.params.to_string(), v, |r| r.vertices_with_delta(z).len())
                })
                .collect::<Vec<_>>();
            ("delta=z", rows)
        }
    };
    if outcomes.is_empty() {
        return Err(anyhow!("nothing to verify").into());
    }

    let mut out = BufWriter::new(io::stdout().lock());
    match args.mode.mode() {
        OutputMode::Table => out.write_all(render_outcomes(column, &outcomes).as_bytes())?,
        OutputMode::JsonLines => {
            for o in &outcomes {
                let record = json!({
                    "case": o.case,
                    "passed": o.passed(),
                    "n": o.n,
                    "hits": o.hits,
                    "proportion": o.proportion(),
                    "graph6": o.graph6,
                    "failures": o.failures,
                });
                serde_json::to_writer(&mut out, &record)?;
                writeln!(out)?;
            }
        }
    }
    out.flush()?;

    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    if failed > 0 {
        return Err(Failure::new(EXIT_VERIFY_FAILED, anyhow!("{failed} of {} cases failed", outcomes.len())));
    }
    Ok(())
}

/// Table plus one certificate block per failed case.
pub fn render_outcomes(column: &str, outcomes: &[CaseOutcome]) -> String {
    let rows: Vec<Vec<String>> = outcomes
        .iter()
        .map(|o| {
            let verdict = if o.passed() { "pass" } else { "FAIL" };
            vec![o.case.clone(), o.n.to_string(), o.hits.to_string(), o.proportion(), verdict.into()]
        })
        .collect();
    let mut text = render_table(&["case", "n", column, "proportion", "result"], &rows, &[0, 4]);
    for o in outcomes.iter().filter(|o| !o.passed()) {
        text.push_str(&format!("\ncounterexample for {}\n  graph6: {}\n", o.case, o.graph6));
        for f in &o.failures {
            text.push_str(&format!("  {f}\n"));
        }
    }
    text
}
