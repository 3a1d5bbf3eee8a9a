//! Verification sweeps over many sequences.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use turnreach_core::oracle::{verify_bounds_only, verify_sequence, OracleConfig, Status, VerificationReport};
use turnreach_core::{Error, Turn, TurnSequence};

/// Sequences up to this length are swept exhaustively; longer ones are sampled.
const EXHAUSTIVE_MAX_N: usize = 16;
const SAMPLES_PER_LENGTH: usize = 1 << 16;
/// Oracle work limit, in candidate length vectors.
const ORACLE_MAX_WORK: f64 = 2e8;
const ORACLE_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Key {
    N,
    Delta,
    Lefts,
    Rights,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Ge,
    Le,
    Gt,
    Lt,
    Eq,
    Ne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    clauses: Vec<(Key, Op, i64)>,
}

impl Filter {
    /// Parses `key op value` clauses joined by `,` or `&&`; keys are
    /// `n`, `delta`, `l`, `r`.
    pub fn parse(text: &str) -> Result<Filter, String> {
        let mut clauses = Vec::new();
        for part in text.split("&&").flat_map(|p| p.split(',')) {
            let part: String = part.chars().filter(|c| !c.is_whitespace()).collect();
            if part.is_empty() {
                continue;
            }
            let ops = [(">=", Op::Ge), ("<=", Op::Le), ("==", Op::Eq), ("!=", Op::Ne), (">", Op::Gt), ("<", Op::Lt), ("=", Op::Eq)];
            let (pos, sym, op) = ops
                .iter()
                .filter_map(|&(sym, op)| part.find(sym).map(|i| (i, sym, op)))
                .min_by_key(|&(i, sym, _)| (i, usize::MAX - sym.len()))
                .ok_or_else(|| format!("no comparison in '{part}'"))?;
            let key = match &part[..pos] {
                "n" => Key::N,
                "delta" | "excess" => Key::Delta,
                "l" => Key::Lefts,
                "r" => Key::Rights,
                k => return Err(format!("unknown filter key '{k}'")),
            };
            let value: i64 = part[pos + sym.len()..].parse().map_err(|_| format!("bad number in '{part}'"))?;
            clauses.push((key, op, value));
        }
        Ok(Filter { clauses })
    }

    pub fn matches(&self, seq: &TurnSequence) -> bool {
        self.clauses.iter().all(|&(key, op, v)| {
            let x = match key {
                Key::N => seq.len() as i64,
                Key::Delta => seq.excess(),
                Key::Lefts => seq.lefts() as i64,
                Key::Rights => seq.rights() as i64,
            };
            match op {
                Op::Ge => x >= v,
                Op::Le => x <= v,
                Op::Gt => x > v,
                Op::Lt => x < v,
                Op::Eq => x == v,
                Op::Ne => x != v,
            }
        })
    }
}

fn from_bits(n: usize, bits: u64) -> TurnSequence {
    TurnSequence::new((0..n).map(|i| if bits >> i & 1 == 1 { Turn::R } else { Turn::L }).collect())
}

/// Sequences of length `n`, exhaustive or a seeded sample.
fn sequences(n: usize) -> (Vec<TurnSequence>, bool) {
    if n <= EXHAUSTIVE_MAX_N {
        ((0..1u64 << n).map(|b| from_bits(n, b)).collect(), false)
    } else {
        let mut rng = StdRng::seed_from_u64(n as u64);
        let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        ((0..SAMPLES_PER_LENGTH).map(|_| from_bits(n, rng.gen::<u64>() & mask)).collect(), true)
    }
}

pub struct SweepOptions {
    pub max_n: usize,
    pub lmax: Option<u32>,
    pub filter: Filter,
    pub jobs: usize,
    pub deadline: Option<Instant>,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub sequences: usize,
    pub oracle_sequences: usize,
    pub sampled_lengths: Vec<usize>,
    pub failures: Vec<VerificationReport>,
    pub flagged: usize,
}

fn oracle_feasible(n: usize, lmax: u32) -> bool {
    n <= ORACLE_MAX_N && (lmax as f64).powi(n as i32 + 1) <= ORACLE_MAX_WORK
}

fn one(seq: &TurnSequence, lmax: Option<u32>, deadline: Option<Instant>) -> Result<(VerificationReport, bool), Error> {
    let n = seq.len();
    let cap = lmax.unwrap_or(n as u32 + 2);
    if !oracle_feasible(n, cap) {
        return Ok((verify_bounds_only(seq), false));
    }
    let budget = match deadline {
        Some(d) => Some(d.checked_duration_since(Instant::now()).ok_or(Error::Timeout)?),
        None => None,
    };
    let cfg = OracleConfig::fixed(n, cap).with_budget(budget);
    Ok((verify_sequence(seq, &cfg)?, true))
}

pub fn run(opts: &SweepOptions) -> Result<Summary, Error> {
    let mut all = Vec::new();
    let mut sampled_lengths = Vec::new();
    for n in 0..=opts.max_n {
        let (seqs, sampled) = sequences(n);
        if sampled {
            sampled_lengths.push(n);
        }
        all.extend(seqs.into_iter().filter(|s| opts.filter.matches(s)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Construction(e.to_string()))?;
    let results: Vec<Result<(VerificationReport, bool), Error>> =
        pool.install(|| all.par_iter().map(|s| one(s, opts.lmax, opts.deadline)).collect());
    let mut summary = Summary { sequences: all.len(), oracle_sequences: 0, sampled_lengths, failures: Vec::new(), flagged: 0 };
    for r in results {
        let (report, used_oracle) = r?;
        summary.oracle_sequences += used_oracle as usize;
        if report.checks.iter().any(|c| c.status == Status::Flag) || !report.converged {
            summary.flagged += 1;
        }
        if !report.passed() {
            summary.failures.push(report);
        }
    }
    Ok(summary)
}
