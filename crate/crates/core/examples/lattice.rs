//! Integer linear algebra behind reductions: Smith form, kernels, primitivity.

use toric_rigidity::lattice::{integral_kernel, is_primitive, is_surjective_onto_lattice, smith_normal_form};
use toric_rigidity::{IntMat, IntVec};

fn main() -> anyhow::Result<()> {
    // The slice that cuts the hexagon out of the cube, and its transpose.
    let a = IntMat::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
    let at = a.transpose();
    let s = smith_normal_form(&at);
    println!("Aᵀ = {at}");
    println!("invariant factors {:?}", s.factors());
    println!("U·Aᵀ·V = {}", s.u.mul(&at).mul(&s.v));
    println!("Aᵀ surjective onto Z²: {}", is_surjective_onto_lattice(&a));

    let kernel = integral_kernel(&at);
    for k in &kernel {
        println!("kernel vector {k} (the collapsed circle)");
    }

    let doubled = IntMat::from_i64(&[&[2, 0, 0], &[0, 1, 1]]);
    println!("invariant factors of {doubled}: {:?}", smith_normal_form(&doubled).factors());

    for v in [[1, 1, 1], [2, 0, 4], [-3, 6, 10]] {
        let v = IntVec::from_i64(&v);
        println!("{v} primitive: {}", is_primitive(&v)?);
    }
    Ok(())
}
