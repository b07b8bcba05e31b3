//! The combinatorial Floer number of a few polytopes.

use toric_rigidity::floer::{hf_detailed, BoundaryOp, CFVector};
use toric_rigidity::polytope::product;
use toric_rigidity::reduction::models::{cube, simplex};
use toric_rigidity::{int, Polytope};

fn show(name: &str, p: &Polytope) -> anyhow::Result<()> {
    let r = hf_detailed(p)?;
    match (r.direct, r.square) {
        (Some(d), _) => println!("{name:<10} d = {:<2} HF = {} ({} − {})", p.facet_count(), r.value, d.nullity, d.rank),
        (None, Some(sq)) => println!(
            "{name:<10} d = {:<2} HF = {} (√({} − {}) via P×P)",
            p.facet_count(),
            r.value,
            sq.nullity,
            sq.rank
        ),
        (None, None) => unreachable!("one of the two counts is always present"),
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    let triangle = simplex(2, &int(1))?;
    let op = BoundaryOp::new(&triangle)?;
    println!("{op}");
    let e = CFVector::basis(2, 0);
    println!("∂{e} = {}", op.apply(&e));
    println!("∂²{e} = {}", op.apply(&op.apply(&e)));
    println!();

    show("segment", &simplex(1, &int(1))?)?;
    show("Δ²", &triangle)?;
    show("Δ²×Δ²", &product(&triangle, &triangle))?;
    show("Δ³", &simplex(3, &int(1))?)?;
    show("square", &cube(2, &int(1))?)?;
    show("cube", &cube(3, &int(1))?)?;
    Ok(())
}
