//! Seeded verification suites over random parameters.

use lfac::verify::{run_suite, Suite};

fn main() {
    let trials = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    for suite in [Suite::ProductIdentities, Suite::SteinbergTensor, Suite::PrincipalSeries, Suite::ThetaLift] {
        let report = run_suite(suite, trials, 2024);
        println!("{report}");
    }
}
