//! Samples the weighted sphere moment map and checks every image point
//! against the polytope.

use toric_contact::sphere::{convexity_sample_check, WeightVector};

fn main() {
    let a = WeightVector::new(vec![1, 2, 3]).unwrap();
    let report = convexity_sample_check(&a, 100_000, 7, 1e-9).unwrap();
    println!(
        "{} samples: worst facet violation {:e}, worst hyperplane residual {:e}, {} violations",
        report.count,
        report.max_facet_violation,
        report.max_hyperplane_residual,
        report.violations.len()
    );
}
