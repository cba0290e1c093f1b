//! Realizes a labeled cube as a torus quotient of a sphere and checks the
//! presentation against the original polytope.

use num_bigint::BigInt;
use toric_contact::lattice::{format_rat, rat};
use toric_contact::polytope::{LabeledFacet, LabeledPolytope};
use toric_contact::{synthesize, verify_presentation, ToricContactDatum};

fn main() {
    let facet = |n: [i64; 4], label: u64| LabeledFacet::from_i64(&n, label, rat(0)).unwrap();
    let cube = LabeledPolytope::new(
        4,
        vec![
            facet([0, -1, 0, 0], 1),
            facet([0, 0, -1, 0], 1),
            facet([0, 0, 0, -1], 1),
            facet([-1, 1, 0, 0], 1),
            facet([-1, 0, 1, 0], 1),
            facet([-1, 0, 0, 1], 2),
        ],
    )
    .unwrap();
    let reeb: Vec<BigInt> = [1, 0, 0, 0].map(BigInt::from).to_vec();
    let d = ToricContactDatum::new(cube, &reeb).unwrap();

    let p = synthesize(&d).unwrap();
    println!("S^{} in C^{}", 2 * p.n() - 1, p.n());
    println!("beta =\n{}", p.beta);
    println!("torus weights =\n{}", p.weights);
    println!("deformation = ({})", p.deformation.iter().map(format_rat).collect::<Vec<_>>().join(", "));

    let report = verify_presentation(&p, &d).unwrap();
    println!("holds: {}, smooth: {}", report.holds(), report.smooth);
    for s in &report.local_freeness {
        let coords: Vec<String> = d.vertices()[s.vertex].coords.iter().map(format_rat).collect();
        println!("  stabilizer at ({}) is {}", coords.join(", "), s.group);
    }
}
