//! Runs a verification suite and prints per-id tallies.
//!
//! `cargo run --release --example sweep -- omega 5`

use kschur::verify::{sweep, SUITES};

fn main() -> kschur::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite = args.next().unwrap_or_else(|| "appendix".into());
    let degree: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    if !SUITES.contains(&suite.as_str()) {
        eprintln!("suites: {SUITES:?}");
        std::process::exit(2);
    }
    let res = sweep(&suite, degree, true)?;
    println!(
        "{suite} up to degree {degree}: {}/{} passed",
        res.passed, res.total
    );
    for (id, t) in &res.by_id {
        println!("  {id:<16} {}/{}", t.passed, t.total);
    }
    let slowest = res.reports.iter().max_by_key(|r| r.millis);
    if let Some(r) = slowest {
        println!("slowest: {} {} ({} ms)", r.id, r.params, r.millis.unwrap_or(0));
    }
    for r in res.failures().take(5) {
        println!("FAIL {} {} {:?}", r.id, r.params, r.notes);
    }
    Ok(())
}
