//! Hermite and Smith normal forms, integer kernels and finite quotients.
//!
//! Run with `cargo run --example lattice_normal_forms`.

use toric_contact::lattice::{hnf, kernel_lattice_basis, quotient_group, saturate, snf, IntMat};

fn main() {
    let m = IntMat::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    println!("M =\n{m}");

    let h = hnf(&m);
    println!("column HNF (rank {}):\n{}", h.rank, h.hnf);
    assert_eq!(m.mul(&h.transform), h.hnf);

    let s = snf(&m);
    println!("Smith diagonal:\n{}", s.diagonal);
    println!("invariant factors: {:?}", s.invariant_factors());

    let beta = IntMat::from_i64(&[&[1, 0, 1, 2], &[0, 1, 1, -1]]);
    let w = kernel_lattice_basis(&beta);
    println!("integer kernel of\n{beta}is spanned by the rows of\n{w}");

    let doubled = IntMat::from_i64(&[&[2, 2, 0], &[0, 3, 3]]);
    println!("saturation of\n{doubled}is\n{}", saturate(&doubled));

    let group = quotient_group(&IntMat::identity(2), &IntMat::from_i64(&[&[2, 0], &[0, 6]])).unwrap();
    println!("Z^2 modulo 2Z + 6Z is {group}");
}
