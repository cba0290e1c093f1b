//! Cones over a polytope, slices by a new characteristic vector, and
//! rescaling of the contact form.

use num_bigint::BigInt;
use toric_contact::lattice::{format_rat, ratio};
use toric_contact::sphere::{weighted_simplex, WeightVector};

fn show(title: &str, d: &toric_contact::ToricContactDatum) {
    let vs: Vec<String> = d
        .vertices()
        .iter()
        .map(|v| format!("({})", v.coords.iter().map(format_rat).collect::<Vec<_>>().join(", ")))
        .collect();
    println!("{title}: {}", vs.join(" "));
}

fn main() {
    let d = weighted_simplex(&WeightVector::new(vec![1, 1, 1]).unwrap()).unwrap();
    show("standard triangle", &d);

    let cone = d.polytope().cone_over(&d.integral_reeb().unwrap()).unwrap();
    println!("cone rays: {:?}", cone.extreme_rays());

    let reeb: Vec<BigInt> = [1, 1, 2].map(BigInt::from).to_vec();
    let moved = d.perturb_reeb(&reeb).unwrap();
    show("after moving the Reeb vector to (1,1,2)", &moved);
    println!("now {:?}", moved.classify().unwrap().regularity);

    let scaled = d.rescale(&ratio(3, 2)).unwrap();
    show("contact form scaled by 3/2", &scaled);
}
