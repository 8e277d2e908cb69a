//! Size sweeps over one solver, optionally fanned out across threads.

use std::path::PathBuf;
use std::time::Instant;

use avoidmatch::exec::map_slice;
use avoidmatch::{
    build_lm_table, lcs_av_counted, longest_av_subsequence, matches_bivincular_counted,
    matches_both_avoiding_counted, parse_bivincular, random_av_with, BivincularPattern, Execution,
    Permutation,
};
use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{millis, BenchRow, RunReport};
use crate::{parse_perm, random_any, CliResult};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Algo {
    /// Avoiding pattern in avoiding text.
    Linear,
    /// Avoiding pattern in arbitrary text.
    Factor,
    /// Bivincular pattern in arbitrary text.
    Bivincular,
    /// Longest avoiding subsequence.
    Longest,
    /// Longest common avoiding pattern of text pairs.
    Lcs,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(value_enum)]
    algo: Algo,
    /// Text lengths to sweep, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "100,200,400")]
    sizes: Vec<usize>,
    /// Length of the random pattern when --pattern is not given.
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Fixed pattern (permutation or bivincular grammar).
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances per size.
    #[arg(long, default_value_t = 8)]
    count: usize,
    /// Read texts from a file, one permutation per line, instead of sampling.
    #[arg(long)]
    batch: Option<PathBuf>,
    /// Spread instances over worker threads.
    #[arg(long)]
    parallel: bool,
}

enum Pattern {
    None,
    Plain(Permutation),
    Bivincular(BivincularPattern),
}

struct Outcome {
    matched: bool,
    steps: Option<u64>,
}

pub fn run(args: &BenchArgs, timing: bool) -> CliResult<(RunReport, u8)> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let pattern = pattern_for(args, &mut rng)?;
    let groups = match &args.batch {
        Some(path) => read_batch(path)?,
        None => sample(args, &mut rng)?,
    };
    let exec = if args.parallel {
        Execution::Parallel
    } else {
        Execution::Sequential
    };

    let mut report = RunReport::new("bench", algo_name(args.algo))
        .input("seed", args.seed)
        .input("parallel", exec.is_parallel());
    if let Some(p) = &args.pattern {
        report = report.input("pattern", p.trim());
    } else if let Pattern::Plain(p) = &pattern {
        report = report.input("pattern", p);
    }
    let mut total = 0;
    for (n, texts) in groups {
        let jobs: Vec<Vec<&Permutation>> = match args.algo {
            Algo::Lcs => texts.chunks_exact(2).map(|c| vec![&c[0], &c[1]]).collect(),
            _ => texts.iter().map(|t| vec![t]).collect(),
        };
        let start = Instant::now();
        let outcomes = map_slice(exec, &jobs, |job| solve(args.algo, &pattern, job));
        let elapsed = start.elapsed();
        let outcomes = outcomes.into_iter().collect::<CliResult<Vec<_>>>()?;
        let steps = outcomes.iter().map(|o| o.steps).sum::<Option<u64>>();
        total += steps.unwrap_or(0);
        report.rows.push(BenchRow {
            n,
            instances: outcomes.len(),
            matches: outcomes.iter().filter(|o| o.matched).count(),
            steps,
            elapsed_ms: timing.then(|| millis(elapsed)),
        });
    }
    report.steps = Some(total);
    Ok((report, 0))
}

fn algo_name(a: Algo) -> &'static str {
    match a {
        Algo::Linear => "linear",
        Algo::Factor => "factor-dp",
        Algo::Bivincular => "bivincular",
        Algo::Longest => "pivot-tables",
        Algo::Lcs => "window-dp",
    }
}

fn pattern_for(args: &BenchArgs, rng: &mut ChaCha8Rng) -> CliResult<Pattern> {
    let err = |e: avoidmatch::Error| e.to_string();
    Ok(match (args.algo, &args.pattern) {
        (Algo::Longest | Algo::Lcs, _) => Pattern::None,
        (Algo::Bivincular, Some(s)) => Pattern::Bivincular(parse_bivincular(s).map_err(err)?),
        (_, Some(s)) => Pattern::Plain(parse_perm(s, false)?),
        (Algo::Bivincular, None) => {
            let p = random_av_with(args.k, rng).map_err(err)?;
            Pattern::Bivincular(BivincularPattern::plain(p).map_err(err)?)
        }
        (_, None) => Pattern::Plain(random_av_with(args.k, rng).map_err(err)?),
    })
}

fn sample(args: &BenchArgs, rng: &mut ChaCha8Rng) -> CliResult<Vec<(usize, Vec<Permutation>)>> {
    let per = match args.algo {
        Algo::Lcs => 2 * args.count,
        _ => args.count,
    };
    let mut groups = Vec::new();
    for &n in &args.sizes {
        if n == 0 {
            return Err("sizes must be at least 1".into());
        }
        let texts = (0..per)
            .map(|_| match args.algo {
                Algo::Linear => random_av_with(n, rng).map_err(|e| e.to_string()),
                _ => Ok(random_any(n, rng)),
            })
            .collect::<CliResult<Vec<_>>>()?;
        groups.push((n, texts));
    }
    Ok(groups)
}

/// Texts grouped by length, groups in order of first appearance.
fn read_batch(path: &PathBuf) -> CliResult<Vec<(usize, Vec<Permutation>)>> {
    let body = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut groups: Vec<(usize, Vec<Permutation>)> = Vec::new();
    for (line_no, line) in body.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let p = parse_perm(line, false).map_err(|e| format!("line {}: {e}", line_no + 1))?;
        match groups.iter_mut().find(|(n, _)| *n == p.len()) {
            Some((_, v)) => v.push(p),
            None => groups.push((p.len(), vec![p])),
        }
    }
    Ok(groups)
}

fn solve(algo: Algo, pattern: &Pattern, job: &[&Permutation]) -> CliResult<Outcome> {
    let err = |e: avoidmatch::Error| e.to_string();
    let text = job[0];
    Ok(match (algo, pattern) {
        (Algo::Linear, Pattern::Plain(p)) => {
            let (e, s) = matches_both_avoiding_counted(p, text).map_err(err)?;
            Outcome {
                matched: e.is_some(),
                steps: Some(s),
            }
        }
        (Algo::Factor, Pattern::Plain(p)) => {
            let table = build_lm_table(p, text).map_err(err)?;
            Outcome {
                matched: table.first_start().is_some(),
                steps: Some(table.steps()),
            }
        }
        (Algo::Bivincular, Pattern::Bivincular(p)) => {
            let (e, s) = matches_bivincular_counted(p, text).map_err(err)?;
            Outcome {
                matched: e.is_some(),
                steps: Some(s),
            }
        }
        (Algo::Longest, _) => Outcome {
            matched: !longest_av_subsequence(text).is_empty(),
            steps: None,
        },
        (Algo::Lcs, _) => {
            let (_, s) = lcs_av_counted(job[0], job[1]);
            Outcome {
                matched: true,
                steps: Some(s),
            }
        }
        _ => unreachable!("pattern kind is chosen from the algorithm"),
    })
}
