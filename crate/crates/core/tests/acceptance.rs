//! Runs the full suite over the registry and prints one line per criterion.

use std::time::Instant;

use entwine_core::suite::{self, Grid, SuiteResult, ROWS};
use entwine_core::{registry, Field};

fn criterion_line(n: u8, rows: &[&suite::RowResult]) -> (bool, String) {
    let passed = !rows.is_empty() && rows.iter().all(|r| r.report.passed);
    let ids: Vec<&str> = rows.iter().map(|r| r.id.as_str()).collect();
    (passed, format!("{} criterion {n:>2}: {}", if passed { "PASS" } else { "FAIL" }, ids.join(", ")))
}

fn rows_of(res: &SuiteResult, n: u8) -> Vec<&suite::RowResult> {
    res.rows.iter().filter(|r| r.criterion == n).collect()
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let grid = Grid::default();
    let q = suite::run(&registry::load(Field::Rational).unwrap(), &grid).unwrap();
    let f7 = suite::run(&registry::load(Field::prime(7).unwrap()).unwrap(), &grid).unwrap();
    let elapsed = start.elapsed();

    let mut all = true;
    let last = ROWS.iter().map(|r| r.criterion).max().unwrap();
    for n in 1..=last {
        let rows = rows_of(&q, n);
        let (passed, line) = criterion_line(n, &rows);
        println!("{line}");
        if !passed {
            for r in rows.iter().filter(|r| !r.report.passed) {
                print!("{}", r.report);
            }
        }
        all &= passed;
    }
    let cross = suite::field_independence(&q, &f7);
    let fp_ok = f7.passed();
    let passed = cross.passed && fp_ok;
    println!(
        "{} criterion 10: {}",
        if passed { "PASS" } else { "FAIL" },
        cross.verdicts[0].detail.as_deref().unwrap_or_default()
    );
    if !passed {
        print!("{cross}");
    }
    all &= passed;
    println!("suite over q and fp:7 took {:.1}s", elapsed.as_secs_f64());
    assert!(all, "acceptance suite has failing criteria");
}
