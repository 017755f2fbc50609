use graphflag::acceptance::{run_all, AcceptanceConfig, CRITERION_COUNT};

#[test]
fn all_criteria_pass() {
    let results = run_all(&AcceptanceConfig::default());
    assert_eq!(results.len(), CRITERION_COUNT);
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
