//! Runs every acceptance criterion and prints one line per criterion.

use saff::acceptance::run_criterion;
use saff::cli::RunConfig;

fn main() {
    let run = RunConfig::default();
    let mut failed = 0;
    for k in 1..=10 {
        let r = run_criterion(k, &run).expect("criteria are numbered 1-10");
        println!("{r}");
        if !r.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
