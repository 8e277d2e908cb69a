//! `avoidmatch` command-line front end.
//!
//! Exit codes: 0 match found (or command succeeded), 1 no match,
//! 2 usage or validation error.

mod bench;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use avoidmatch::oracle::{brute_match, brute_match_bivincular};
use avoidmatch::perm::parse_values;
use avoidmatch::{
    ascent_descent_word, build_lm_table_with, enumerate_av, is_av_213_231, lcs_av_counted,
    longest_av_subsequence, matches_bivincular_counted, matches_both_avoiding_counted,
    parse_bivincular, parse_bivincular_general, random_av_with, Embedding, Execution, Permutation,
};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bench::BenchArgs;
use crate::report::{millis, RunReport};

#[derive(Parser)]
#[command(
    name = "avoidmatch",
    version,
    about = "Pattern matching with (213,231)-avoiding patterns"
)]
struct Cli {
    #[command(flatten)]
    out: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct OutputArgs {
    /// Print the report as one JSON object.
    #[arg(long, global = true)]
    json: bool,
    /// Leave wall-clock timings out of the report.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a pattern occurs in a text.
    Match(MatchArgs),
    /// Longest subsequence of a text that avoids 213 and 231.
    Longest {
        text: String,
        #[arg(long)]
        flatten: bool,
    },
    /// Longest avoiding pattern common to two texts.
    Lcs {
        first: String,
        second: String,
        #[arg(long)]
        flatten: bool,
    },
    /// Sample avoiding permutations (or arbitrary ones with --any).
    Gen {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        any: bool,
    },
    /// Count the avoiding permutations of length n.
    Enum {
        n: usize,
        /// Also list every member.
        #[arg(long)]
        list: bool,
    },
    /// Time a solver over a sweep of text sizes.
    Bench(BenchArgs),
    /// Draw the permutation's dot grid.
    Show {
        perm: String,
        #[arg(long)]
        flatten: bool,
    },
}

#[derive(Args)]
struct MatchArgs {
    /// A permutation such as "1 3 2", or a bivincular pattern such as
    /// "bottom=1 3 2; first; pos_adj=1".
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    text: String,
    /// Use the brute-force search instead of the polynomial algorithms.
    #[arg(long)]
    oracle: bool,
    /// Accept any distinct integers and replace them by their ranks.
    #[arg(long)]
    flatten: bool,
    /// Compute table rows in parallel.
    #[arg(long)]
    parallel: bool,
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out;
    let start = Instant::now();
    let result = match cli.command {
        Command::Match(args) => cmd_match(&args),
        Command::Longest { text, flatten } => cmd_longest(&text, flatten),
        Command::Lcs {
            first,
            second,
            flatten,
        } => cmd_lcs(&first, &second, flatten),
        Command::Gen {
            n,
            seed,
            count,
            any,
        } => cmd_gen(n, seed, count, any),
        Command::Enum { n, list } => cmd_enum(n, list),
        Command::Bench(args) => bench::run(&args, !out.no_timing),
        Command::Show { perm, flatten } => cmd_show(&perm, flatten),
    };
    match result {
        Ok((mut report, code)) => {
            if !out.no_timing {
                report.elapsed_ms = Some(millis(start.elapsed()));
            }
            if out.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

pub(crate) fn parse_perm(s: &str, flatten: bool) -> CliResult<Permutation> {
    let p = if flatten {
        Permutation::flatten(&parse_values(s).map_err(|e| e.to_string())?)
    } else {
        s.parse()
    };
    p.map_err(|e| format!("{s:?}: {e}"))
}

fn is_bivincular(pattern: &str) -> bool {
    pattern.contains('=') || pattern.contains(';')
}

fn cmd_match(args: &MatchArgs) -> CliResult<(RunReport, u8)> {
    let text = parse_perm(&args.text, args.flatten)?;
    let exec = if args.parallel {
        Execution::Parallel
    } else {
        Execution::Sequential
    };
    let err = |e: avoidmatch::Error| e.to_string();
    let (algorithm, found, steps): (_, Option<Embedding>, Option<u64>) = if is_bivincular(
        &args.pattern,
    ) {
        if args.oracle {
            let p = parse_bivincular_general(&args.pattern).map_err(err)?;
            (
                "oracle",
                brute_match_bivincular(&p, &text).map_err(err)?,
                None,
            )
        } else {
            let p = parse_bivincular(&args.pattern).map_err(err)?;
            let (e, s) = matches_bivincular_counted(&p, &text).map_err(err)?;
            ("bivincular", e, Some(s))
        }
    } else {
        let pattern = parse_perm(&args.pattern, args.flatten)?;
        if args.oracle {
            ("oracle", brute_match(&pattern, &text).map_err(err)?, None)
        } else if !is_av_213_231(&pattern) {
            return Err(format!(
                    "pattern {pattern} does not avoid 213 and 231 (use --oracle for arbitrary patterns)"
                ));
        } else if is_av_213_231(&text) {
            let (e, s) = matches_both_avoiding_counted(&pattern, &text).map_err(err)?;
            ("linear", e, Some(s))
        } else {
            let table = build_lm_table_with(&pattern, &text, exec).map_err(err)?;
            ("factor-dp", table.embedding(&text), Some(table.steps()))
        }
    };
    let mut report = RunReport::new("match", algorithm)
        .input("pattern", args.pattern.trim())
        .input("text", &text);
    report.decision = Some(found.is_some());
    report.steps = steps;
    let code = match found {
        Some(e) => {
            report.values = Some(e.values(&text));
            report.embedding = Some(e.one_based());
            0
        }
        None => 1,
    };
    Ok((report, code))
}

fn cmd_longest(text: &str, flatten: bool) -> CliResult<(RunReport, u8)> {
    let text = parse_perm(text, flatten)?;
    let e = longest_av_subsequence(&text);
    let mut report = RunReport::new("longest", "pivot-tables").input("text", &text);
    report.length = Some(e.len());
    report.values = Some(e.values(&text));
    report.embedding = Some(e.one_based());
    Ok((report, 0))
}

fn cmd_lcs(first: &str, second: &str, flatten: bool) -> CliResult<(RunReport, u8)> {
    let a = parse_perm(first, flatten)?;
    let b = parse_perm(second, flatten)?;
    let (c, steps) = lcs_av_counted(&a, &b);
    let mut report = RunReport::new("lcs", "window-dp")
        .input("first", &a)
        .input("second", &b);
    report.length = Some(c.length);
    report.pattern = Some(c.pattern.to_string());
    report.embedding = Some(c.first.one_based());
    report.second_embedding = Some(c.second.one_based());
    report.steps = Some(steps);
    Ok((report, 0))
}

pub(crate) fn random_any(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    use rand::seq::SliceRandom;
    let mut v: Vec<u32> = (1..=n as u32).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle of 1..=n")
}

fn cmd_gen(n: usize, seed: u64, count: usize, any: bool) -> CliResult<(RunReport, u8)> {
    if n == 0 {
        return Err("length must be at least 1".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = RunReport::new("gen", if any { "uniform-sn" } else { "uniform-av" })
        .input("n", n)
        .input("seed", seed)
        .input("count", count);
    for _ in 0..count {
        let p = if any {
            random_any(n, &mut rng)
        } else {
            random_av_with(n, &mut rng).map_err(|e| e.to_string())?
        };
        report.members.push(p.to_string());
    }
    Ok((report, 0))
}

fn cmd_enum(n: usize, list: bool) -> CliResult<(RunReport, u8)> {
    let it = enumerate_av(n).map_err(|e| e.to_string())?;
    let mut report = RunReport::new("enum", "word-bijection").input("n", n);
    report.count = Some(it.len() as u64);
    if list {
        report.members = it.map(|p| p.to_string()).collect();
    }
    Ok((report, 0))
}

fn cmd_show(perm: &str, flatten: bool) -> CliResult<(RunReport, u8)> {
    let p = parse_perm(perm, flatten)?;
    let n = p.len();
    let mut report = RunReport::new("show", "grid").input("perm", &p);
    for v in (1..=n as u32).rev() {
        let row: String = p
            .values()
            .iter()
            .map(|&x| if x == v { " o" } else { " ." })
            .collect();
        report.members.push(format!("{v:>3} |{row}"));
    }
    report.members.push(format!("    +{}", "--".repeat(n)));
    if is_av_213_231(&p) {
        report.word = Some(ascent_descent_word(&p).to_string());
    }
    Ok((report, 0))
}
