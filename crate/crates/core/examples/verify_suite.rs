//! Verifies every certificate of the built-in suite and prints one line per
//! certificate.

use locopt::catalog::verify_suite;
use locopt::verify::{verify_all, Budget, Outcome};

fn main() {
    let certs = verify_suite();
    let results = verify_all(&certs, Budget::default());
    for (cert, r) in certs.iter().zip(&results) {
        let outcomes: Vec<String> = r.contracts.iter().map(|c| format!("{:?}", c.outcome)).collect();
        println!(
            "{:<24} {:<40} {:?} [{}] {:?}",
            cert.reduction.name(),
            cert.source.describe(),
            r.result,
            outcomes.join(", "),
            r.elapsed
        );
    }
    let failed = results.iter().filter(|r| r.result == Outcome::Fail).count();
    println!("{} certificates, {failed} failed", results.len());
}
