//! Builds the moment polytope of a weighted Reeb vector on an odd sphere and
//! classifies the resulting contact structure.
//!
//! Run with `cargo run --example weighted_sphere -- 1 2 3`.

use toric_contact::lattice::format_rat;
use toric_contact::sphere::{weighted_simplex, WeightVector};

fn main() {
    let weights: Vec<u64> = std::env::args().skip(1).map(|s| s.parse().expect("weights are positive integers")).collect();
    let weights = if weights.is_empty() { vec![1, 2] } else { weights };
    let a = WeightVector::new(weights).expect("valid weight vector");
    let d = weighted_simplex(&a).expect("weights with gcd 1");

    println!("weights {:?} on S^{}", a.as_slice(), 2 * a.len() - 1);
    for (i, f) in d.polytope().facets().iter().enumerate() {
        println!("  facet {i}: normal {:?}, label {}", f.normal(), f.label());
    }
    for v in d.vertices() {
        let coords: Vec<String> = v.coords.iter().map(format_rat).collect();
        println!("  vertex ({})", coords.join(", "));
    }

    let report = d.classify().expect("rational datum");
    println!("{:?}", report.regularity);
    for face in report.nontrivial_faces() {
        println!("  face {:?} has holonomy {}", face.face, face.holonomy);
    }
}
