use std::process::ExitCode;

use merolib::suite::{acceptance_criterion, run_suite, CriterionResult};

const SEED: u64 = 0;
const OTHER_SEED: u64 = 0x5eed;

fn report(c: &CriterionResult) -> bool {
    let verdict = if c.passed { "PASS" } else { "FAIL" };
    println!("criterion {} {verdict}: {}", &c.id[1..], c.title);
    if !c.passed {
        println!("  measured: {}", c.measured);
    }
    c.passed
}

fn main() -> ExitCode {
    let first = run_suite("acceptance", SEED).expect("known suite");
    let mut ok = first.criteria.iter().map(report).fold(first.criteria.len() == 8, |a, b| a & b);

    let second = run_suite("acceptance", SEED).expect("known suite");
    if first.to_json() != second.to_json() {
        println!("acceptance report differs between runs");
        ok = false;
    }
    for id in [2, 3, 6, 7] {
        let c = acceptance_criterion(id, OTHER_SEED);
        if !c.passed {
            println!("criterion {id} FAIL with seed {OTHER_SEED:#x}: {}", c.measured);
            ok = false;
        }
    }
    println!("acceptance: {}", if ok { "all criteria pass" } else { "FAILED" });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
