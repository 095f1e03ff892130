// Usage: cargo run --release --example verify

use iclneg::verify::{run_suites, VerifyOptions};
use iclneg::SearchBound;

fn main() {
    // A wider bound than the default: five worlds, any height.
    let opts = VerifyOptions {
        max_len: 5,
        bound: SearchBound::new(5, None),
        ..VerifyOptions::default()
    };
    let reports = run_suites(opts);
    for r in &reports {
        println!("{r}");
        println!("    uses {}", r.ops.join(", "));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{failed} of {} suites failed", reports.len());
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
