//! The randomized suites behind `kervaire check`, run from code.

use kervaire::harness::{run_suite, Suite, SuiteConfig};

fn main() {
    for (suite, dim) in [
        (Suite::Clifford, 4),
        (Suite::Lemma1, 4),
        (Suite::EulerLes, 3),
    ] {
        let cfg = SuiteConfig {
            trials: 50,
            seed: 7,
            dim,
        };
        let r = run_suite(suite, cfg).unwrap();
        println!(
            "{:<9} dim {dim}: {} trials, {} checks, {} failures",
            suite.name(),
            r.trials,
            r.checks,
            r.failures
        );
        if let Some(f) = r.first_failure {
            println!(
                "  reproduce with --seed {} (trial {}): {}",
                f.seed, f.trial, f.detail
            );
        }
    }
}
