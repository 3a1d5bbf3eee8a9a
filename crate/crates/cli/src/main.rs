use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde::Serialize;
use turnreach_cli::{report, svg, sweep};
use turnreach_core::bounds::{bounds_report, Bound};
use turnreach_core::construct::{axis_witness, box_draw, lr_draw, twobox_draw, Constructor};
use turnreach_core::oracle::{OracleConfig, BUDGET_ENV};
use turnreach_core::{Chain, Dir, Error, Point, TurnSequence};

/// Print to stdout, exiting quietly when the reader has gone away.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! put {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if write!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "turnreach", version, about = "Reachable endpoints of rectilinear chains with prescribed turns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prefix numbers, hooks, bounds and the reachable set of a sequence.
    Analyze {
        sequence: String,
        #[arg(long)]
        json: bool,
        /// Also compute exact closest points by enumeration.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        lmax: Option<u32>,
    },
    /// Draw a realization.
    Draw {
        sequence: String,
        /// box, twobox[:SPLIT], lr, witness:AXIS or closest:AXIS.
        #[arg(long, default_value = "box")]
        algo: String,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Bound table for every axis.
    Bounds {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Check every sequence up to a length against the oracle and the bounds.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        lmax: Option<u32>,
        /// Clauses like `delta>=5` joined by `,`.
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Timeout => Fail(TIMEOUT, e.to_string()),
            Error::InvalidCharacter { .. } => Fail(USAGE, e.to_string()),
            _ => Fail(FAILED, e.to_string()),
        }
    }
}

fn parse_seq(text: &str) -> Result<TurnSequence, Fail> {
    TurnSequence::parse(text).map_err(|e| Fail(USAGE, format!("cannot parse '{text}': {e}")))
}

fn budget() -> Option<Duration> {
    OracleConfig::for_len(0).budget_from_env().budget
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn analyze(text: &str, json: bool, oracle: bool, lmax: Option<u32>) -> Result<(), Fail> {
    let seq = parse_seq(text)?;
    let cfg = oracle.then(|| {
        let n = seq.len();
        let base = match lmax {
            Some(l) => OracleConfig::fixed(n, l),
            None => OracleConfig::for_len(n),
        };
        base.with_budget(budget())
    });
    let r = report::build(&seq, cfg.as_ref())?;
    if json {
        out!("{}", to_json(&r));
    } else {
        put!("{}", report::render_text(&r));
    }
    Ok(())
}

fn parse_axis(t: &str) -> Result<Dir, Fail> {
    t.parse().map_err(|_| Fail(USAGE, format!("unknown axis '{t}' (use +x, -x, +y or -y)")))
}

fn draw_chain(seq: &TurnSequence, algo: &str) -> Result<Chain, Fail> {
    let (name, arg) = match algo.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (algo, None),
    };
    let chain = match (name, arg) {
        ("box", None) => box_draw(seq).chain,
        ("lr", None) => lr_draw(seq)?.chain,
        ("twobox", split) => {
            let k = match split {
                Some(v) => v.parse().map_err(|_| Fail(USAGE, format!("bad split '{v}'")))?,
                None => (seq.len() / 2).max(1),
            };
            twobox_draw(seq, k)?
        }
        ("witness", Some(a)) => axis_witness(seq, parse_axis(a)?)?,
        ("closest", Some(a)) => Constructor::new().closest(seq, parse_axis(a)?)?,
        _ => return Err(Fail(USAGE, format!("unknown algorithm '{algo}'"))),
    };
    if !chain.realizes(seq) {
        return Err(Fail(FAILED, format!("{algo} produced an invalid chain {chain}")));
    }
    Ok(chain)
}

#[derive(Serialize)]
struct Drawing<'a> {
    sequence: &'a TurnSequence,
    algo: &'a str,
    end: Point,
    bends: &'a [Point],
}

fn draw(text: &str, algo: &str, svg_path: Option<PathBuf>, json: bool) -> Result<(), Fail> {
    let seq = parse_seq(text)?;
    let chain = draw_chain(&seq, algo)?;
    if let Some(path) = svg_path {
        std::fs::write(&path, svg::render(&chain, &seq.to_string()))
            .map_err(|e| Fail(FAILED, format!("cannot write {}: {e}", path.display())))?;
    }
    if json {
        out!("{}", to_json(&Drawing { sequence: &seq, algo, end: chain.end(), bends: &chain.bends }));
    } else {
        out!("{chain}");
        out!("end ({}, {})", chain.end().x, chain.end().y);
    }
    Ok(())
}

fn fmt_bound(b: &Bound) -> String {
    format!("{} [{}]", b.value, b.formula)
}

fn bounds(text: &str, json: bool) -> Result<(), Fail> {
    let seq = parse_seq(text)?;
    let r = bounds_report(&seq);
    if json {
        out!("{}", to_json(&r));
        return Ok(());
    }
    if seq.is_empty() {
        out!("no turns: A = {{(a,0) | a >= 1}}; no axis rows");
        return Ok(());
    }
    out!("{:<5} {:<9} {:<40} upper", "axis", "reachable", "lower");
    for a in &r.axes {
        match &a.bounds {
            Some(b) => out!("{:<5} {:<9} {:<40} {}", a.axis.as_str(), "yes", fmt_bound(&b.lower), fmt_bound(&b.upper)),
            None => out!("{:<5} {:<9} {:<40} -", a.axis.as_str(), "no", "-"),
        }
    }
    Ok(())
}

fn verify(max_n: usize, lmax: Option<u32>, filter: &str, jobs: usize, json: bool) -> Result<(), Fail> {
    let filter = sweep::Filter::parse(filter).map_err(|e| Fail(USAGE, format!("bad filter: {e}")))?;
    let deadline = budget().map(|b| Instant::now() + b);
    let opts = sweep::SweepOptions { max_n, lmax, filter, jobs, deadline };
    let summary = sweep::run(&opts)?;
    if json {
        out!("{}", to_json(&summary));
    } else {
        for f in &summary.failures {
            for c in f.failures() {
                out!("FAIL {} [{}]: {}", f.sequence, c.name, c.detail);
            }
            let cap = if f.lmax > 0 { format!(" --lmax {}", f.lmax) } else { String::new() };
            out!("  replay: turnreach analyze {} --oracle{cap}", f.sequence);
        }
        let skipped = summary.sequences - summary.oracle_sequences;
        let mut line = if summary.failures.is_empty() {
            format!("{} sequences, all checks pass", summary.sequences)
        } else {
            format!("{} sequences, {} failing", summary.sequences, summary.failures.len())
        };
        if summary.flagged > 0 {
            line.push_str(&format!(" ({} flagged at the length cap)", summary.flagged));
        }
        if skipped > 0 {
            line.push_str(&format!("; {skipped} checked by bounds only"));
        }
        if !summary.sampled_lengths.is_empty() {
            line.push_str(&format!("; lengths {:?} sampled", summary.sampled_lengths));
        }
        out!("{line}");
    }
    if summary.failures.is_empty() {
        Ok(())
    } else {
        Err(Fail(FAILED, String::new()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { sequence, json, oracle, lmax } => analyze(&sequence, json, oracle, lmax),
        Command::Draw { sequence, algo, svg, json } => draw(&sequence, &algo, svg, json),
        Command::Bounds { sequence, json } => bounds(&sequence, json),
        Command::Verify { max_n, lmax, filter, jobs, json } => verify(max_n, lmax, &filter, jobs, json),
    };
    match result {
        Ok(()) => ExitCode::from(OK),
        Err(Fail(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("turnreach: {msg}");
            }
            if code == TIMEOUT {
                eprintln!("turnreach: raise {BUDGET_ENV} or lower --lmax");
            }
            ExitCode::from(code)
        }
    }
}
