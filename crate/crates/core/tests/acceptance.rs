//! One line per acceptance criterion, with pinned time allowances. The
//! criteria run one after another so the timings are not inflated by
//! sibling tests.

use cliffkit::verify::{self, CRITERIA};

const SEED: u64 = 0;

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for &(id, _, _) in CRITERIA.iter() {
        let report = verify::run(id, SEED);
        let budget = report.budget.map_or("none".to_string(), |b| format!("{}s", b.as_secs()));
        let ok = report.passed && report.within_budget();
        println!(
            "[{}] criterion {:>2} {}: {} | {:.2}s (allowance {budget})",
            if ok { "PASS" } else { "FAIL" },
            report.id,
            report.title,
            report.detail,
            report.elapsed.as_secs_f64(),
        );
        if id == 10 {
            for line in verify::even_subring_log() {
                println!("      {line}");
            }
        }
        if !ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn criteria_table_is_complete() {
    let ids: Vec<u8> = CRITERIA.iter().map(|c| c.0).collect();
    assert_eq!(ids, (1..=11).collect::<Vec<_>>());
    let budgets: Vec<(u8, u64)> = CRITERIA.iter().filter_map(|c| c.2.map(|b| (c.0, b))).collect();
    assert_eq!(budgets, vec![(1, 30), (2, 10), (5, 20), (11, 5)]);
}
