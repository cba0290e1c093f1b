//! Compares holonomy groups computed from lattice quotients with a direct
//! count of how often the Reeb circle returns to a point.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use toric_contact::sphere::{reeb_orbit_order, weighted_simplex, WeightVector};

fn main() {
    let a = WeightVector::new(vec![2, 3, 4]).unwrap();
    let d = weighted_simplex(&a).unwrap();
    println!("{:<12} {:<10} {:>5}", "face", "holonomy", "orbit");
    for (face, _) in d.faces() {
        let support: BTreeSet<usize> = (0..a.len()).filter(|i| !face.contains(i)).collect();
        let group = d.holonomy(&face).unwrap();
        let order = reeb_orbit_order(&a, &support).unwrap();
        assert_eq!(group.order(), Some(BigInt::from(order)));
        println!("{:<12} {:<10} {:>5}", format!("{face:?}"), group.to_string(), order);
    }
}
