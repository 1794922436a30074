use qwalled_core::acceptance::{run_criterion, CRITERIA};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let report = run_criterion(c, false);
        let tag = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "{tag} criterion {}: {} ({} ms)",
            c.id, c.title, report.timing_ms
        );
        if !report.passed() {
            print!("{report}");
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
