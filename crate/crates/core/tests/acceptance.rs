//! Acceptance run: every criterion at its stated tolerance and time budget, one
//! PASS/FAIL line each. Pass criterion numbers as arguments to run a subset.

use std::process::ExitCode;
use std::time::Instant;

use stacksphere::verify::{claim_criteria, Report, Status, VerifyOptions};

/// The claimed bounds each criterion must be checked against, fixed here so a change
/// in the library's claims cannot weaken the run.
fn expected_claims(id: u32) -> Vec<&'static str> {
    match id {
        1 => vec!["tau>=6"],
        2 => vec!["tau>=7", "tau>=9", "tau>=11"],
        3 => vec!["tau>=6", "tau>=6", "tau>=6"],
        5 => vec!["tau>=12 and tau/n = 3/7"],
        10 => vec!["cover size = ceil(3n/7) = tau = 6", "cover size = ceil(3n/7) = tau = 12"],
        _ => Vec::new(),
    }
}

fn main() -> ExitCode {
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let options = VerifyOptions::default();
    let mut all_pass = true;

    for c in claim_criteria() {
        if !only.is_empty() && !only.contains(&c.id) {
            continue;
        }
        let start = Instant::now();
        let reports: Vec<Report> = (c.run)(&options);
        let elapsed = start.elapsed();

        let mut problems = Vec::new();
        for r in &reports {
            let status_ok = match r.status {
                Status::Certified => true,
                Status::Skipped => c.skip_ok,
                Status::Violated => false,
            };
            if !status_ok {
                problems.push(format!("{}: {} ({})", r.instance, r.status, r.computed));
            }
            if c.per_report && r.wall_time > c.budget {
                problems.push(format!("{} took {:.1?}, budget {:.0?}", r.instance, r.wall_time, c.budget));
            }
        }
        if !c.per_report && elapsed > c.budget {
            problems.push(format!("took {elapsed:.1?}, budget {:.0?}", c.budget));
        }
        let claims = expected_claims(c.id);
        if !claims.is_empty() {
            let got: Vec<&str> = reports.iter().map(|r| r.claimed.as_str()).collect();
            if got != claims {
                problems.push(format!("checked claims {got:?}, expected {claims:?}"));
            }
        }
        if reports.is_empty() {
            problems.push("no reports".into());
        }

        for r in &reports {
            println!("    {}", r.key_values());
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {:>2}: {} [{:.1}s]",
            c.id,
            c.title,
            elapsed.as_secs_f64()
        );
        for p in &problems {
            println!("    - {p}");
        }
        all_pass &= problems.is_empty();
    }

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
