//! Acceptance suite: one line per criterion, exact comparisons, and the
//! stated runtime budget for each. Runs without the libtest harness so the
//! summary is always printed.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use mexstat::cli::run;
use mexstat::identities::{verify, IdentityReport};
use mexstat::mexfun::{p_mex_enum, p_mex_recurrence, p_mex_series, pbar_mex_enum, pbar_mex_series};
use mexstat::partitions::p_count;
use mexstat::statistics::{crank_count, crank_moment, rank_moment, CountMethod, MexParams};

const GOLDEN: [(&str, &str); 3] = [
    ("1", include_str!("golden/table1.csv")),
    ("2", include_str!("golden/table2.csv")),
    ("3", include_str!("golden/table3.csv")),
];

fn pass(id: &str, n_max: i64) {
    let r: IdentityReport = verify(id, n_max).unwrap_or_else(|e| panic!("{id}: {e}"));
    assert!(
        r.passed(),
        "{id} failed up to {n_max}: first failures {:?}",
        &r.failures[..r.failures.len().min(3)]
    );
}

fn criterion_1() {
    for (id, golden) in GOLDEN {
        let out = run(["mexstat", "table", id, "--format", "csv"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, golden, "table {id} differs from its golden csv");
    }
    let t1 = run(["mexstat", "table", "1", "--format", "csv"]).stdout;
    assert!(t1.ends_with("total,,8,3\n"));
    let t3 = run(["mexstat", "table", "3", "--format", "csv"]).stdout;
    let spt: Vec<&str> = t3
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(spt, ["1", "3", "5", "10", "14"]);
    assert!(t3.contains("\n4,3,3,4,3,4,4,5,4,5,5,10\n"));
}

fn criterion_2() {
    const N: usize = 50;
    for step in 1..=10 {
        for base in 1..=15 {
            let pm = MexParams::new(step, base).unwrap();
            let series = p_mex_series(pm, N);
            let series_bar = pbar_mex_series(pm, N);
            for n in 0..=N {
                let ni = n as i64;
                let e = p_mex_enum(pm, ni).unwrap();
                assert_eq!(e, series[n], "series A={step} a={base} n={n}");
                assert_eq!(
                    e,
                    p_mex_recurrence(pm, ni),
                    "recurrence A={step} a={base} n={n}"
                );
                let eb = pbar_mex_enum(pm, ni).unwrap();
                assert_eq!(eb, series_bar[n], "barred series A={step} a={base} n={n}");
                assert_eq!(e + eb, p_count(ni), "complement A={step} a={base} n={n}");
            }
        }
    }
}

fn criterion_3() {
    for id in [
        "thm-3.3", "cor-3.4", "cor-3.5", "thm-3.6", "cor-3.7", "thm-1.1", "thm-1.2",
    ] {
        pass(id, 50);
    }
}

fn criterion_4() {
    for id in [
        "thm-3.8-rank",
        "thm-3.8-crank",
        "cor-3.9",
        "thm-2.4",
        "thm-2.5",
        "thm-2.6",
    ] {
        pass(id, 40);
    }
    assert_eq!(rank_moment(2, 4).unwrap(), BigInt::from(20));
    assert_eq!(
        crank_moment(2, 4, CountMethod::Combinatorial).unwrap(),
        BigInt::from(40)
    );
    assert_eq!(
        crank_moment(2, 4, CountMethod::Series).unwrap(),
        BigInt::from(40)
    );
}

fn criterion_5() {
    for id in ["thm-3.10-even", "thm-3.10-odd", "psi-minus-q"] {
        pass(id, 50);
    }
}

fn criterion_6() {
    for id in ["thm-3.11", "thm-3.12", "thm-3.13"] {
        pass(id, 50);
        pass(&format!("{id}-series"), 500);
    }
}

fn criterion_7() {
    pass("thm-2.1", 500);
    for id in [
        "thm-2.8",
        "lemma-jtp-even",
        "thm-2.10a",
        "thm-2.10b",
        "thm-2.11",
        "thm-2.9",
        "gf-parity",
    ] {
        pass(id, 200);
    }
}

fn criterion_8() {
    for id in ["thm-5.1", "cor-5.2", "lemma-a-gt-n"] {
        pass(id, 50);
    }
    for id in ["thm-5.3", "thm-5.4"] {
        let r = verify(id, 60).unwrap();
        assert!(r.passed(), "{id}: {:?}", r.failures);
        assert_eq!(r.range.to, 60);
    }
}

fn criterion_9() {
    for n in 2..=40usize {
        let bound = n as i64 + 1;
        for m in -bound..=bound {
            assert_eq!(
                crank_count(m, n, CountMethod::Combinatorial).unwrap(),
                crank_count(m, n, CountMethod::Series).unwrap(),
                "M({m}, {n})"
            );
        }
    }
    let series: Vec<BigInt> = (-1..=1)
        .map(|m| crank_count(m, 1, CountMethod::Series).unwrap())
        .collect();
    let direct: Vec<BigInt> = (-1..=1)
        .map(|m| crank_count(m, 1, CountMethod::Combinatorial).unwrap())
        .collect();
    assert_eq!(series, [1, -1, 1].map(BigInt::from));
    assert_eq!(direct, [1, 0, 0].map(BigInt::from));
}

fn main() {
    let criteria: [(&str, fn(), Duration); 9] = [
        ("1 table reproduction", criterion_1, Duration::from_secs(1)),
        (
            "2 three-method agreement",
            criterion_2,
            Duration::from_secs(120),
        ),
        (
            "3 rank/crank relations",
            criterion_3,
            Duration::from_secs(60),
        ),
        ("4 moments and spt", criterion_4, Duration::from_secs(60)),
        (
            "5 congruence families",
            criterion_5,
            Duration::from_secs(60),
        ),
        ("6 shifted identities", criterion_6, Duration::from_secs(60)),
        (
            "7 series-engine identities",
            criterion_7,
            Duration::from_secs(120),
        ),
        ("8 auxiliary results", criterion_8, Duration::from_secs(60)),
        (
            "9 crank anomaly at n = 1",
            criterion_9,
            Duration::from_secs(10),
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, f, budget) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f));
        let elapsed = start.elapsed();
        let (status, note) = match outcome {
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                ("FAIL", msg)
            }
            Ok(()) if elapsed > budget => ("FAIL", format!("over the {budget:?} budget")),
            Ok(()) => ("PASS", String::new()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {name:<28} {status}  {:>8.3}s  {note}",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
