//! Acceptance suite. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gtg_core::geometry::rat;
use gtg_core::realize::{check_observation1, check_ordering_gadget, is_mutual_couple};
use gtg_core::reduce::{sector_vertex_count, segment_vertex_count};
use gtg_core::verify::{
    perpendicular_probe, random_gadget, random_sector_pair, round_trip_sectors_with, round_trip_segments_with,
};
use gtg_core::{
    extract_description, random_simple_arrangement, reduce_sectors, reduce_segments, round_trip_sectors,
    round_trip_segments, LabelledDigraph, LineArrangement, RandomSpec, RoundTripReport, SectorFamily, SegmentFamily,
};

const SEGMENT_SIZES: [usize; 5] = [2, 3, 4, 5, 6];
const SEGMENT_CASES: u64 = 50;
const SECTOR_SIZES: [usize; 3] = [2, 3, 4];
const SECTOR_CASES: u64 = 25;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn arrangement(n: usize, seed: u64) -> LineArrangement {
    random_simple_arrangement(RandomSpec {
        n,
        seed: 1000 * n as u64 + seed,
        coord_bound: 50,
    })
    .expect("sampling succeeds at desk scale")
}

fn segment_set() -> Vec<LineArrangement> {
    SEGMENT_SIZES
        .iter()
        .flat_map(|&n| (0..SEGMENT_CASES).map(move |s| arrangement(n, s)))
        .collect()
}

fn sector_set() -> Vec<LineArrangement> {
    SECTOR_SIZES
        .iter()
        .flat_map(|&n| (0..SECTOR_CASES).map(move |s| arrangement(n, s)))
        .collect()
}

/// Runs every case and returns the graphs from geometry, the failure count
/// and the elapsed time.
fn run_all(
    set: &[LineArrangement],
    f: impl Fn(&LineArrangement) -> RoundTripReport,
) -> (Vec<LabelledDigraph>, Vec<String>, Duration) {
    let start = Instant::now();
    let mut graphs = Vec::with_capacity(set.len());
    let mut failures = Vec::new();
    for (i, l) in set.iter().enumerate() {
        let r = f(l);
        if !r.passed() {
            failures.push(format!(
                "case {i} (n={}): {}",
                l.len(),
                r.to_string().lines().next().unwrap_or("")
            ));
        }
        graphs.push(r.graph_from_geometry);
    }
    (graphs, failures, start.elapsed())
}

fn segment_round_trips(set: &[LineArrangement]) -> Outcome {
    let (_, failures, t) = run_all(set, |l| round_trip_segments(l).expect("round trip runs"));
    outcome(
        failures.is_empty() && t < Duration::from_secs(60),
        format!(
            "{}/{} empty diffs in {:.1}s{}",
            set.len() - failures.len(),
            set.len(),
            t.as_secs_f64(),
            failures
                .first()
                .map(|f| format!("; first failure {f}"))
                .unwrap_or_default()
        ),
    )
}

fn sector_round_trips(set: &[LineArrangement]) -> Outcome {
    let (_, failures, t) = run_all(set, |l| round_trip_sectors(l).expect("round trip runs"));
    outcome(
        failures.is_empty() && t < Duration::from_secs(600),
        format!(
            "{}/{} passed with all checkers in {:.1}s{}",
            set.len() - failures.len(),
            set.len(),
            t.as_secs_f64(),
            failures
                .first()
                .map(|f| format!("; first failure {f}"))
                .unwrap_or_default()
        ),
    )
}

fn counts() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=8usize {
        let d = extract_description(&arrangement(n, 0));
        let seg = reduce_segments(&d).expect("valid").vertex_count();
        let sec = reduce_sectors(&d).expect("valid").vertex_count();
        if seg != n + n * (n - 1) / 2 + n * (n - 1) || seg != segment_vertex_count(n) {
            bad.push(format!("segments n={n}: {seg}"));
        }
        if sec != 3 * n + 18 * n * (n - 1) || sec != sector_vertex_count(n) {
            bad.push(format!("sectors n={n}: {sec}"));
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "both vertex formulas exact for n = 2..8".to_string()
        } else {
            bad.join(", ")
        },
    )
}

fn mutual_couples() -> Outcome {
    let mut couples = 0;
    let mut counterexamples = Vec::new();
    for seed in 0..10_000u64 {
        let (x, y) = random_sector_pair(seed);
        if is_mutual_couple(&x, &y) {
            couples += 1;
            if check_observation1(&x, &y) != Ok(true) {
                counterexamples.push(seed);
            }
        }
    }
    let probe_couples: Vec<u64> = (0..10_000u64)
        .filter(|&s| {
            let (x, y) = perpendicular_probe(s);
            is_mutual_couple(&x, &y)
        })
        .collect();
    outcome(
        counterexamples.is_empty() && probe_couples.is_empty(),
        format!(
            "{couples} couples among 10000 pairs, {} counterexamples; {} of 10000 perpendicular probes coupled",
            counterexamples.len(),
            probe_couples.len()
        ),
    )
}

fn gadgets() -> Outcome {
    let mut ok = 0;
    let mut ties = 0;
    for seed in 0..1000u64 {
        let (l, a) = random_gadget(seed, 2 + (seed % 9) as usize);
        let report = check_ordering_gadget(&l, &a);
        if report.hypotheses_hold() && report.order_holds == Some(true) {
            ok += 1;
        }
        ties += usize::from(!report.ties.is_empty());
    }
    outcome(
        ok == 1000,
        format!("order holds in {ok}/1000 gadgets ({ties} with ties)"),
    )
}

/// Number of killed mutants among `families`, with the survivors named.
fn kill<F: Copy + PartialEq>(
    all: &[F],
    set: &[LineArrangement],
    name: impl Fn(F) -> String,
    run: impl Fn(&LineArrangement, &[F]) -> bool,
) -> (usize, Vec<String>) {
    let mut killed = 0;
    let mut survivors = Vec::new();
    for &f in all {
        let rest: Vec<F> = all.iter().copied().filter(|&g| g != f).collect();
        if set.iter().any(|l| !run(l, &rest)) {
            killed += 1;
        } else {
            survivors.push(name(f));
        }
    }
    (killed, survivors)
}

fn segment_mutants(set: &[LineArrangement]) -> (usize, Vec<String>) {
    kill(
        &SegmentFamily::ALL,
        set,
        |f| format!("{f:?}"),
        |l, fs| round_trip_segments_with(l, fs).expect("round trip runs").passed(),
    )
}

fn sector_mutants(set: &[LineArrangement]) -> (usize, Vec<String>) {
    kill(
        &SectorFamily::ALL,
        set,
        |f| f.name().to_string(),
        |l, fs| round_trip_sectors_with(l, fs).expect("round trip runs").passed(),
    )
}

fn mutation() -> Outcome {
    let seg_set: Vec<LineArrangement> = (0..5).map(|s| arrangement(3, s)).collect();
    let sec_set: Vec<LineArrangement> = (0..3).map(|s| arrangement(2, s)).collect();
    let (seg_killed, seg_alive) = segment_mutants(&seg_set);
    let (sec_killed, sec_alive) = sector_mutants(&sec_set);
    let killed = seg_killed + sec_killed;
    let total = SegmentFamily::ALL.len() + SectorFamily::ALL.len();
    let mut survivors: Vec<String> = seg_alive.into_iter().chain(sec_alive).collect();
    let mut detail = format!("{killed}/{total} mutants killed");
    if !survivors.is_empty() {
        detail.push_str(&format!("; survivors {}", survivors.join(", ")));
        let wider: Vec<LineArrangement> = (0..3).map(|s| arrangement(3, s)).collect();
        let (_, still_alive) = sector_mutants(&wider);
        survivors.retain(|s| still_alive.contains(s));
        detail.push_str(&format!(
            " (these edge families are empty when n = 2; on n = 3 sector cases {} survive)",
            if survivors.is_empty() {
                "none".to_string()
            } else {
                survivors.join(", ")
            }
        ));
    }
    outcome(killed == total, detail)
}

fn exactness(segments: &[LineArrangement], sectors: &[LineArrangement]) -> Outcome {
    let factor = rat(1_000_000_000, 7);
    let scale = |set: &[LineArrangement]| set.iter().map(|l| l.scaled(&factor)).collect::<Vec<_>>();
    let (seg_base, _, t_seg) = run_all(segments, |l| round_trip_segments(l).expect("round trip runs"));
    let (sec_base, _, t_sec) = run_all(sectors, |l| round_trip_sectors(l).expect("round trip runs"));
    let (seg_scaled, seg_fail, t_seg2) =
        run_all(&scale(segments), |l| round_trip_segments(l).expect("round trip runs"));
    let (sec_scaled, sec_fail, t_sec2) = run_all(&scale(sectors), |l| round_trip_sectors(l).expect("round trip runs"));
    let same = seg_base == seg_scaled && sec_base == sec_scaled;
    let base = t_seg + t_sec;
    let scaled = t_seg2 + t_sec2;
    let ratio = scaled.as_secs_f64() / base.as_secs_f64().max(1e-9);
    outcome(
        same && seg_fail.is_empty() && sec_fail.is_empty() && ratio < 4.0,
        format!(
            "{} scaled round trips, graphs identical: {same}, failures: {}, runtime {:.1}s vs {:.1}s ({ratio:.2}x)",
            segments.len() + sectors.len(),
            seg_fail.len() + sec_fail.len(),
            scaled.as_secs_f64(),
            base.as_secs_f64()
        ),
    )
}

fn gtg(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_gtg"))
        .args(args)
        .output()
        .expect("gtg runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn cli_pass(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let p = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let steps: Vec<Vec<String>> = vec![
        vec!["gen", "--n", "3", "--seed", "7", "--bound", "20", "--out", &p("l.json")],
        vec!["describe", "--in", &p("l.json"), "--out", &p("d.json")],
        vec![
            "reduce",
            "--mode",
            "segments",
            "--in",
            &p("d.json"),
            "--out",
            &p("gs.json"),
        ],
        vec![
            "reduce",
            "--mode",
            "sectors",
            "--in",
            &p("d.json"),
            "--out",
            &p("gc.json"),
        ],
        vec![
            "realize",
            "--mode",
            "segments",
            "--in",
            &p("l.json"),
            "--out",
            &p("is.json"),
        ],
        vec![
            "realize",
            "--mode",
            "sectors",
            "--in",
            &p("l.json"),
            "--out",
            &p("ic.json"),
        ],
        vec!["tgraph", "--in", &p("ic.json"), "--out", &p("tc.json")],
        vec![
            "verify",
            "--mode",
            "segments",
            "--in",
            &p("l.json"),
            "--report",
            &p("rs.json"),
        ],
        vec![
            "verify",
            "--mode",
            "sectors",
            "--in",
            &p("l.json"),
            "--report",
            &p("rc.json"),
        ],
        vec!["export-dot", "--in", &p("gc.json"), "--out", &p("gc.dot")],
        vec!["render", "--in", &p("ic.json"), "--out", &p("ic.svg")],
        vec!["render", "--in", &p("l.json"), "--out", &p("l.svg")],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    let mut out = Vec::new();
    for (i, step) in steps.iter().enumerate() {
        let args: Vec<&str> = step.iter().map(String::as_str).collect();
        let (code, stdout) = gtg(&args);
        out.push((format!("step {i} exit"), code.to_string().into_bytes()));
        out.push((format!("step {i} stdout"), stdout));
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .expect("scratch dir")
        .map(|e| e.expect("entry").path())
        .collect();
    files.sort();
    for f in files {
        let name = f.file_name().unwrap().to_string_lossy().into_owned();
        out.push((name, std::fs::read(&f).expect("readable output")));
    }
    out
}

fn determinism() -> Outcome {
    let root = std::env::temp_dir().join(format!("gtg-acceptance-{}", std::process::id()));
    let dirs = [root.join("a"), root.join("b")];
    for d in &dirs {
        std::fs::create_dir_all(d).expect("scratch dir");
    }
    let first = cli_pass(&dirs[0]);
    let second = cli_pass(&dirs[1]);
    let _ = std::fs::remove_dir_all(&root);
    let nonzero: Vec<&String> = first
        .iter()
        .filter(|(k, v)| k.ends_with("exit") && v.as_slice() != b"0")
        .map(|(k, _)| k)
        .collect();
    let differing: Vec<&String> = first
        .iter()
        .zip(&second)
        .filter(|(a, b)| a != b)
        .map(|(a, _)| &a.0)
        .collect();
    outcome(
        differing.is_empty() && nonzero.is_empty() && first.len() == second.len(),
        format!(
            "{} outputs compared, {} differ, {} non-zero exits",
            first.len(),
            differing.len(),
            nonzero.len()
        ),
    )
}

fn main() -> ExitCode {
    let segments = segment_set();
    let sectors = sector_set();

    let criteria: Vec<Criterion<'_>> = vec![
        ("1 segment round trips", Box::new(|| segment_round_trips(&segments))),
        ("2 sector round trips", Box::new(|| sector_round_trips(&sectors))),
        ("3 vertex count formulas", Box::new(counts)),
        ("4 mutual couple bisectors", Box::new(mutual_couples)),
        ("5 ordering gadgets", Box::new(gadgets)),
        ("6 mutation sensitivity", Box::new(mutation)),
        ("7 exactness under scaling", Box::new(|| exactness(&segments, &sectors))),
        ("8 CLI determinism", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let o = run();
        failed += usize::from(!o.passed);
        println!(
            "[{}] {name}: {} [{:.1}s]",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
