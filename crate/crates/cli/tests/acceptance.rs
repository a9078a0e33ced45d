//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run
//! with `cargo test -p consample-cli --test acceptance -- --nocapture` to
//! see them.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use consample::analysis::{self, EXPECTED_G_ATTEMPTS, PUBLISHED_G_ATTEMPTS};
use consample::oracle::oracle_sample;
use consample::{sample, Population};

fn verdict(criterion: &str, ok: bool, detail: String) {
    println!(
        "[{}] {criterion}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{criterion} failed: {detail}");
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/golden")
        .join(name);
    fs::read_to_string(path).unwrap()
}

fn run_cli(args: &[&str], input: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_consample"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn ac1_golden_determinism() {
    let start = Instant::now();
    let input = "A\nB\nC\nD\nE\n";
    let cases = [
        (
            vec![
                "draw",
                "--seed",
                "sample-seed",
                "--size",
                "5",
                "--format",
                "json",
                "--show-tickets",
            ],
            "draw_size5.json",
        ),
        (
            vec!["draw", "--seed", "sample-seed", "--size", "5"],
            "draw_size5.lines",
        ),
        (
            vec![
                "draw",
                "--seed",
                "sample-seed",
                "--size",
                "8",
                "--with-replacement",
                "--format",
                "json",
                "--show-tickets",
            ],
            "draw_size8_replace.json",
        ),
        (
            vec![
                "draw",
                "--seed",
                "sample-seed",
                "--size",
                "8",
                "--with-replacement",
            ],
            "draw_size8_replace.lines",
        ),
    ];
    let mut mismatches = Vec::new();
    for (args, file) in &cases {
        let (code, out) = run_cli(args, input);
        if code != 0 || out != golden(file) {
            mismatches.push(*file);
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "AC1 golden determinism",
        mismatches.is_empty() && within(elapsed, Duration::from_secs(1)),
        format!(
            "{} fixtures, mismatches {mismatches:?}, {elapsed:.2?} (limit 1s)",
            cases.len()
        ),
    );
}

#[test]
fn ac2_log_gap_mean_law() {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for k in [1u32, 5, 10] {
        let r = analysis::log_gap_mean(k, 10_000).unwrap();
        let tol = 4.0 * (f64::from(k) / 10_000.0).sqrt();
        let hit = (r.estimate + f64::from(k)).abs() <= tol;
        ok &= hit;
        parts.push(format!(
            "k={k}: {:.4} vs {} ±{tol:.3}",
            r.estimate,
            -f64::from(k)
        ));
    }
    let elapsed = start.elapsed();
    verdict(
        "AC2 E[ln y_k] = -k",
        ok && within(elapsed, Duration::from_secs(120)),
        format!("{} ({elapsed:.2?}, limit 120s)", parts.join("; ")),
    );
}

#[test]
fn ac3_replacement_loop_bound() {
    let start = Instant::now();
    let r = analysis::g_attempt_stats(100_000).unwrap();
    let max = r.detail("max_attempts").unwrap();
    let elapsed = start.elapsed();
    let ok = r.estimate < 10.0
        && max < 500.0
        && (r.estimate - EXPECTED_G_ATTEMPTS).abs() <= 0.05
        && within(elapsed, Duration::from_secs(60));
    verdict(
        "AC3 replacement attempts",
        ok,
        format!(
            "mean {:.4} (pinned {EXPECTED_G_ATTEMPTS} ±0.05, published {PUBLISHED_G_ATTEMPTS}), max {max} (< 500), {elapsed:.2?} (limit 60s)",
            r.estimate
        ),
    );
}

fn alphabet(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("item{i:02}")).collect()
}

#[test]
fn ac4_consistency_properties() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let ids = alphabet(12);
    let mut prefix_violations = 0;
    for case in 0..200 {
        let repl = case % 2 == 0;
        let n = rng.gen_range(1..=12);
        let pop: Vec<&String> = ids.choose_multiple(&mut rng, n).collect();
        let p = Population::new(&pop).unwrap();
        let seed = format!("prefix-{}", rng.gen::<u32>());
        let cap = if repl { 20 } else { n.min(20) };
        let a = rng.gen_range(0..=cap);
        let b = rng.gen_range(0..=cap);
        let (s, s2) = (a.min(b), a.max(b));
        let small = sample(&p, &seed, s, repl).unwrap();
        let large = sample(&p, &seed, s2, repl).unwrap();
        if large[..s] != small[..] {
            prefix_violations += 1;
        }
    }
    let mut subset_violations = 0;
    for case in 0..200 {
        let repl = case % 2 == 0;
        let n = rng.gen_range(1..=12);
        let k: Vec<&String> = ids.choose_multiple(&mut rng, n).collect();
        let m = rng.gen_range(1..=n);
        let j: Vec<&String> = k.choose_multiple(&mut rng, m).copied().collect();
        let (kp, jp) = (Population::new(&k).unwrap(), Population::new(&j).unwrap());
        let seed = format!("subset-{}", rng.gen::<u32>());
        let len = if repl { 3 * n } else { n };
        let restricted: Vec<(String, u64)> = sample(&kp, &seed, len, repl)
            .unwrap()
            .into_iter()
            .filter(|r| jp.contains(&r.id))
            .map(|r| (r.id, r.generation))
            .collect();
        let direct: Vec<(String, u64)> = sample(&jp, &seed, restricted.len(), repl)
            .unwrap()
            .into_iter()
            .map(|r| (r.id, r.generation))
            .collect();
        if direct != restricted {
            subset_violations += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "AC4 consistency",
        prefix_violations == 0 && subset_violations == 0 && within(elapsed, Duration::from_secs(30)),
        format!("prefix violations {prefix_violations}/200, subset violations {subset_violations}/200, {elapsed:.2?} (limit 30s)"),
    );
}

#[test]
fn ac5_first_draw_uniformity() {
    let start = Instant::now();
    let r = analysis::chi_square_first_draw(10, 50_000).unwrap();
    let elapsed = start.elapsed();
    verdict(
        "AC5 chi-square uniformity",
        r.estimate < 27.88 && within(elapsed, Duration::from_secs(60)),
        format!(
            "statistic {:.3} (< 27.88), {elapsed:.2?} (limit 60s)",
            r.estimate
        ),
    );
}

#[test]
fn ac6_oracle_equivalence() {
    let start = Instant::now();
    let ids = alphabet(8);
    let subsets: Vec<Vec<&String>> = (1u32..256)
        .filter(|m| (1..=6).contains(&m.count_ones()))
        .map(|m| {
            ids.iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, id)| id)
                .collect()
        })
        .collect();
    let results: Vec<(u64, u64)> = subsets
        .par_iter()
        .map(|subset| {
            let p = Population::new(subset).unwrap();
            let mut checked = 0;
            let mut mismatched = 0;
            for seed in 0..50 {
                let seed = format!("sweep-{seed}");
                for size in 0..=12usize {
                    for repl in [false, true] {
                        if !repl && size > p.len() {
                            continue;
                        }
                        checked += 1;
                        if sample(&p, &seed, size, repl).unwrap()
                            != oracle_sample(&p, &seed, size, repl).unwrap()
                        {
                            mismatched += 1;
                        }
                    }
                }
            }
            (checked, mismatched)
        })
        .collect();
    let checked: u64 = results.iter().map(|r| r.0).sum();
    let mismatched: u64 = results.iter().map(|r| r.1).sum();
    let elapsed = start.elapsed();
    verdict(
        "AC6 oracle equivalence",
        mismatched == 0 && subsets.len() == 246 && within(elapsed, Duration::from_secs(300)),
        format!(
            "{} subsets, {checked} cases, {mismatched} mismatches, {elapsed:.2?} (limit 300s)",
            subsets.len()
        ),
    );
}

#[test]
fn ac7_linear_nine_run_growth() {
    let start = Instant::now();
    let curve = analysis::nine_run_growth(20, 2_000).unwrap();
    let points: Vec<(f64, f64)> = curve.iter().map(|&(k, m)| (f64::from(k), m)).collect();
    let (slope, _, r2) = analysis::linear_fit(&points);
    let expected = 1.0 / std::f64::consts::LN_10;
    let elapsed = start.elapsed();
    verdict(
        "AC7 linear precision growth",
        (slope - expected).abs() <= 0.1 * expected
            && r2 > 0.99
            && within(elapsed, Duration::from_secs(120)),
        format!("slope {slope:.4} (0.434 ±10%), R² {r2:.5} (> 0.99), {elapsed:.2?} (limit 120s)"),
    );
}
