//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs with its own harness so every criterion reports even when an
//! earlier one fails. Set `AVOIDMATCH_BLESS=1` to rewrite the golden CLI
//! outputs under `tests/golden/`.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use avoidmatch::longest_av_subsequence;
use avoidmatch::oracle::{
    avoids_213_231_brute, brute_lcs_av, brute_lm, brute_longest_av, brute_match,
    brute_match_bivincular, satisfies_bivincular,
};
use avoidmatch::{
    ascent_descent_word, build_lm_table, enumerate_av, factor_decompose, is_av_213_231, lcs_av,
    matches_bivincular, matches_both_avoiding, matches_both_avoiding_counted,
    matches_pattern_avoiding, parse_bivincular_general, random_av, word_to_permutation,
    AscDescWord, BivincularPattern, Constraints, Letter, Permutation, PivotTables,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

// Pinned limits.
const ENUM_BUDGET: Duration = Duration::from_secs(5);
const BIJECTION_BUDGET: Duration = Duration::from_secs(10);
const LINEAR_EXPONENT_MAX: f64 = 1.1;
const LINEAR_MILLION_BUDGET: Duration = Duration::from_secs(1);
const FACTOR_EXPONENT_MAX: f64 = 2.4;
const FACTOR_BUDGET: Duration = Duration::from_secs(60);
const BIVINCULAR_BUDGET: Duration = Duration::from_secs(120);
const LONGEST_BUDGET: Duration = Duration::from_secs(30);
const LCS_BUDGET: Duration = Duration::from_secs(120);
const CLI_BUDGET: Duration = Duration::from_secs(5);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 enumeration", enumeration),
        ("2 bijection round trip", bijection),
        ("3 linear matcher", linear),
        ("4 factor dp matcher", factor_dp),
        ("5 bivincular matcher", bivincular),
        ("6 longest subsequence", longest),
        ("7 longest common pattern", lcs),
        ("8 cli contract", cli),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {}", panic_message(&e))));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

fn panic_message(e: &Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_default()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation::new(v.clone()).unwrap()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(Permutation::new(v.clone()).unwrap());
    }
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

/// Least-squares slope of `ln y` against `ln x`.
fn fitted_exponent(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took > budget {
        Err(format!("took {took:.2?}, budget {budget:?}"))
    } else {
        Ok(())
    }
}

fn enumeration() -> Outcome {
    let start = Instant::now();
    for n in 1..=15 {
        let all: Vec<Permutation> = enumerate_av(n).unwrap().collect();
        ensure!(all.len() == 1 << (n - 1), "n = {n}: {} members", all.len());
        let distinct: HashSet<&Permutation> = all.iter().collect();
        ensure!(distinct.len() == all.len(), "n = {n}: duplicates");
        let bad = all
            .par_iter()
            .find_any(|p| !avoids_213_231_brute(p.values()));
        ensure!(bad.is_none(), "n = {n}: {:?} contains 213 or 231", bad);
    }
    within(start, ENUM_BUDGET)?;
    Ok("|Av_n| = 2^(n-1) for n = 1..15, members distinct and avoiding".into())
}

fn bijection() -> Outcome {
    let start = Instant::now();
    for n in 1..=12 {
        for p in enumerate_av(n).unwrap() {
            ensure!(word_to_permutation(&ascent_descent_word(&p)) == p, "{p}");
        }
    }
    for len in 0..=11 {
        for bits in 0..1u64 << len {
            let w = AscDescWord::from_bits(bits, len);
            ensure!(ascent_descent_word(&word_to_permutation(&w)) == w, "{w}");
        }
    }
    within(start, BIJECTION_BUDGET)?;
    Ok("identity on Av_n for n <= 12 and on all words of length <= 11".into())
}

fn linear() -> Outcome {
    let mut cases = 0;
    for k in 2..=5 {
        for sigma in enumerate_av(k).unwrap() {
            for n in 2..=8 {
                for pi in enumerate_av(n).unwrap() {
                    let fast = matches_both_avoiding(&sigma, &pi).unwrap();
                    let slow = brute_match(&sigma, &pi).unwrap();
                    ensure!(fast.is_some() == slow.is_some(), "{sigma} in {pi}");
                    if let Some(e) = fast {
                        ensure!(e.witnesses(&sigma, &pi), "{sigma} in {pi}: {e:?}");
                    }
                    cases += 1;
                }
            }
        }
    }

    // Worst case scans the whole text: the pattern's word is the text's word
    // with one more letter, so it never matches.
    let mut points = Vec::new();
    let mut million = Duration::ZERO;
    for n in [1_000, 10_000, 100_000, 1_000_000] {
        let pi = random_av(n, n as u64).unwrap();
        let mut letters = ascent_descent_word(&pi).letters().to_vec();
        letters.push(Letter::Ascent);
        let never = word_to_permutation(&AscDescWord::new(letters));
        let typical = random_av(12, n as u64 + 1).unwrap();
        let mut worst = 0;
        for sigma in [&never, &typical] {
            let start = Instant::now();
            let (found, steps) = matches_both_avoiding_counted(sigma, &pi).unwrap();
            if n == 1_000_000 {
                million = million.max(start.elapsed());
            }
            if std::ptr::eq(sigma, &never) {
                ensure!(found.is_none(), "n = {n}: longer pattern matched");
            }
            worst = worst.max(steps);
        }
        points.push((n as f64, worst as f64));
    }
    let exp = fitted_exponent(&points);
    let fits = exp <= LINEAR_EXPONENT_MAX;
    ensure!(fits, "step exponent {exp:.3} > {LINEAR_EXPONENT_MAX}");
    ensure!(
        million <= LINEAR_MILLION_BUDGET,
        "n = 10^6 took {million:.2?}, budget {LINEAR_MILLION_BUDGET:?}"
    );
    Ok(format!(
        "{cases} exhaustive cases agree; step exponent {exp:.3} (<= {LINEAR_EXPONENT_MAX}); n = 10^6 in {million:.2?}"
    ))
}

fn factor_dp() -> Outcome {
    let start = Instant::now();
    let patterns: Vec<Permutation> = (2..=5).flat_map(|k| enumerate_av(k).unwrap()).collect();
    let texts: Vec<Permutation> = (2..=7).flat_map(all_perms).collect();
    let cells: usize = patterns
        .par_iter()
        .map(|sigma| -> Result<usize, String> {
            let labels = factor_decompose(sigma).count();
            let mut cells = 0;
            for pi in &texts {
                let fast = matches_pattern_avoiding(sigma, pi).unwrap();
                let slow = brute_match(sigma, pi).unwrap();
                ensure!(fast.is_some() == slow.is_some(), "{sigma} in {pi}");
                if let Some(e) = fast {
                    ensure!(e.witnesses(sigma, pi), "{sigma} in {pi}: {e:?}");
                }
                let table = build_lm_table(sigma, pi).unwrap();
                for label in 1..=labels {
                    for j in 0..pi.len() {
                        let want = brute_lm(sigma, pi, label, j).unwrap();
                        ensure!(
                            table.get(label, j) == want,
                            "lm({label},{j}) {sigma} in {pi}"
                        );
                        cells += 1;
                    }
                }
            }
            Ok(cells)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let instances: Vec<(Permutation, Permutation)> = (0..1000)
        .map(|_| {
            let k = rng.gen_range(1..=8);
            let n = rng.gen_range(1..=40);
            (random_av(k, rng.gen()).unwrap(), shuffled(n, &mut rng))
        })
        .collect();
    let disagreement = instances.par_iter().find_any(|(sigma, pi)| {
        matches_pattern_avoiding(sigma, pi).unwrap().is_some()
            != brute_match(sigma, pi).unwrap().is_some()
    });
    ensure!(
        disagreement.is_none(),
        "random disagreement: {disagreement:?}"
    );

    let sigma = perm("1 2 6 5 3 4");
    let mut points = Vec::new();
    for n in [200, 400, 800, 1600] {
        let pi = shuffled(n, &mut rng);
        let best = (0..3)
            .map(|_| {
                let t = Instant::now();
                std::hint::black_box(build_lm_table(&sigma, &pi).unwrap());
                t.elapsed()
            })
            .min()
            .unwrap();
        points.push((n as f64, best.as_secs_f64()));
    }
    let exp = fitted_exponent(&points);
    let fits = exp <= FACTOR_EXPONENT_MAX;
    ensure!(fits, "time exponent {exp:.3} > {FACTOR_EXPONENT_MAX}");
    within(start, FACTOR_BUDGET)?;
    Ok(format!(
        "{cells} lm cells and 1000 random instances agree; time exponent {exp:.3} (<= {FACTOR_EXPONENT_MAX})"
    ))
}

fn subset<T: Ord + Copy>(items: &[T], mask: u32) -> std::collections::BTreeSet<T> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &x)| x)
        .collect()
}

fn constraints(k: usize, pos: u32, val: u32, flags: u32) -> Constraints {
    let gaps: Vec<usize> = (1..k).collect();
    let vals: Vec<u32> = (1..k as u32).collect();
    Constraints {
        pos_adjacent: subset(&gaps, pos),
        val_adjacent: subset(&vals, val),
        first_anchor: flags & 1 != 0,
        last_anchor: flags & 2 != 0,
        min_anchor: flags & 4 != 0,
        max_anchor: flags & 8 != 0,
    }
}

fn bivincular() -> Outcome {
    let start = Instant::now();
    let mut patterns = Vec::new();
    for k in 1..=4 {
        for bottom in enumerate_av(k).unwrap() {
            for pos in 0..1 << (k - 1) {
                for val in 0..1 << (k - 1) {
                    for flags in 0..16 {
                        let c = constraints(k, pos, val, flags);
                        if let Ok(p) = BivincularPattern::new(bottom.clone(), c) {
                            patterns.push(p);
                        }
                    }
                }
            }
        }
    }
    let texts: Vec<Permutation> = (1..=6).flat_map(all_perms).collect();
    let check = |p: &BivincularPattern, pi: &Permutation| -> Result<(), String> {
        let fast = matches_bivincular(p, pi).unwrap();
        let slow = brute_match_bivincular(p, pi).unwrap();
        ensure!(fast.is_some() == slow.is_some(), "{p} in {pi}");
        if let Some(e) = fast {
            ensure!(
                satisfies_bivincular(p, pi, e.indices()),
                "{p} in {pi}: {e:?}"
            );
        }
        Ok(())
    };
    patterns
        .par_iter()
        .try_for_each(|p| texts.iter().try_for_each(|pi| check(p, pi)))?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut random = 0;
    while random < 500 {
        let k = rng.gen_range(1..=5);
        let c = constraints(k, rng.gen(), rng.gen(), rng.gen_range(0..16));
        let Ok(p) = BivincularPattern::new(random_av(k, rng.gen()).unwrap(), c) else {
            continue;
        };
        let n = rng.gen_range(1..=12);
        check(&p, &shuffled(n, &mut rng))?;
        random += 1;
    }

    let grammar = "bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor";
    let p = parse_bivincular_general(grammar).unwrap();
    let gapped = Permutation::flatten(&[3, 2, 1, 7, 8, 4, 5]).unwrap();
    let drawn = perm("3 2 1 6 7 4 5");
    for text in [&gapped, &drawn] {
        let e = brute_match_bivincular(&p, text).unwrap();
        ensure!(
            e.as_ref().map(|e| e.one_based()) == Some(vec![1, 2, 5, 6]),
            "{grammar} in {text}: {e:?}"
        );
        ensure!(
            e.unwrap().values(text) == vec![3, 2, 7, 4],
            "values in {text}"
        );
    }
    ensure!(
        !satisfies_bivincular(&p, &drawn, &[1, 2, 3, 5]),
        "displaced subsequence accepted"
    );
    within(start, BIVINCULAR_BUDGET)?;
    Ok(format!(
        "{} patterns x {} texts and 500 random instances agree; worked examples reproduce",
        patterns.len(),
        texts.len()
    ))
}

fn check_longest(pi: &Permutation) -> Result<usize, String> {
    let e = longest_av_subsequence(pi);
    let t = PivotTables::new(pi);
    let best = (0..pi.len())
        .map(|f| t.lis_end[f] + t.lds_end[f] - 1)
        .max()
        .unwrap();
    ensure!(e.len() == best, "{pi}: {} vs pivot formula {best}", e.len());
    let sub = Permutation::flatten(&e.values(pi)).unwrap();
    ensure!(is_av_213_231(&sub), "{pi}: returned {sub} is not avoiding");
    ensure!(
        e.len() == brute_longest_av(pi).unwrap(),
        "{pi}: oracle disagrees"
    );
    Ok(e.len())
}

fn longest() -> Outcome {
    let start = Instant::now();
    let texts: Vec<Permutation> = (1..=8).flat_map(all_perms).collect();
    texts
        .par_iter()
        .try_for_each(|pi| check_longest(pi).map(|_| ()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        check_longest(&shuffled(12, &mut rng))?;
    }
    let known = longest_av_subsequence(&perm("3 9 1 8 6 7 4 5 2")).len();
    ensure!(known == 6, "longest(391867452) = {known}");
    within(start, LONGEST_BUDGET)?;
    Ok(format!(
        "{} exhaustive + 200 random texts agree; longest(391867452) = 6",
        texts.len()
    ))
}

fn check_lcs(a: &Permutation, b: &Permutation) -> Result<(), String> {
    let c = lcs_av(a, b);
    ensure!(
        c.length == brute_lcs_av(a, b).unwrap(),
        "{a} / {b}: {}",
        c.length
    );
    ensure!(
        is_av_213_231(&c.pattern)
            && c.first.witnesses(&c.pattern, a)
            && c.second.witnesses(&c.pattern, b),
        "{a} / {b}: bad witness {c:?}"
    );
    Ok(())
}

fn lcs() -> Outcome {
    let start = Instant::now();
    let texts: Vec<Permutation> = (1..=6).flat_map(all_perms).collect();
    texts
        .par_iter()
        .try_for_each(|a| texts.iter().try_for_each(|b| check_lcs(a, b)))?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let (n1, n2) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        check_lcs(&shuffled(n1, &mut rng), &shuffled(n2, &mut rng))?;
    }
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let pi = shuffled(n, &mut rng);
        let (l, s) = (lcs_av(&pi, &pi).length, longest_av_subsequence(&pi).len());
        ensure!(l == s, "{pi}: lcs with itself {l}, longest {s}");
    }
    let trivial = lcs_av(&perm("1 2 3"), &perm("3 2 1")).length;
    ensure!(trivial == 1, "lcs(123, 321) = {trivial}");
    within(start, LCS_BUDGET)?;
    Ok(format!(
        "{} exhaustive pairs + 200 random pairs agree; lcs(pi, pi) = longest(pi); lcs(123, 321) = 1",
        texts.len() * texts.len()
    ))
}

const FOUR_ENTRY: &str = "bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor";

/// (name, arguments, expected exit code, whether stdout is a golden JSON report)
fn golden_script() -> Vec<(&'static str, Vec<&'static str>, i32, bool)> {
    vec![
        (
            "match_factor_dp",
            vec!["match", "--pattern", "1 3 2", "--text", "2 4 1 5 3"],
            0,
            true,
        ),
        (
            "match_none",
            vec!["match", "--pattern", "1 2", "--text", "2 1"],
            1,
            true,
        ),
        (
            "match_linear",
            vec!["match", "--pattern", "4 3 1 2", "--text", "5 4 3 1 2"],
            0,
            true,
        ),
        (
            "match_bivincular",
            vec![
                "match",
                "--pattern",
                "bottom=1 3 2; val_adj=2",
                "--text",
                "1 4 2 3",
            ],
            0,
            true,
        ),
        (
            "match_bivincular_none",
            vec![
                "match",
                "--pattern",
                "bottom=1 3 2; val_adj=2",
                "--text",
                "3 1 4 2",
            ],
            1,
            true,
        ),
        (
            "match_oracle_flatten",
            vec![
                "match",
                "--oracle",
                "--flatten",
                "--pattern",
                FOUR_ENTRY,
                "--text",
                "3 2 1 7 8 4 5",
            ],
            0,
            true,
        ),
        ("enum", vec!["enum", "10"], 0, true),
        ("longest", vec!["longest", "3 9 1 8 6 7 4 5 2"], 0, true),
        ("lcs", vec!["lcs", "1 2 3", "3 2 1"], 0, true),
        (
            "gen",
            vec!["gen", "6", "--seed", "11", "--count", "4"],
            0,
            true,
        ),
        (
            "reject_gapped_text",
            vec!["match", "--pattern", FOUR_ENTRY, "--text", "3 2 1 7 8 4 5"],
            2,
            false,
        ),
        (
            "reject_pattern_outside_class",
            vec!["match", "--pattern", "2 1 3", "--text", "1 2 3"],
            2,
            false,
        ),
    ]
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_avoidmatch"))
        .args(args)
        .args(["--json", "--no-timing"])
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn cli() -> Outcome {
    let start = Instant::now();
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("AVOIDMATCH_BLESS").is_some();
    let script = golden_script();
    for (name, args, code, golden) in &script {
        let (got, stdout) = run_cli(args);
        ensure!(got == *code, "{name}: exit {got}, expected {code}");
        if !golden {
            ensure!(stdout.is_empty(), "{name}: unexpected output {stdout:?}");
            continue;
        }
        let (_, again) = run_cli(args);
        ensure!(stdout == again, "{name}: output differs between runs");
        let path = dir.join(format!("{name}.json"));
        if bless {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &stdout).unwrap();
        }
        let want =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure!(
            stdout == want,
            "{name}: output differs from {}",
            path.display()
        );
    }
    within(start, CLI_BUDGET)?;
    Ok(format!(
        "{} cases: exit codes and byte-stable JSON reports",
        script.len()
    ))
}
