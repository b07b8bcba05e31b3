//! Reducing the cube to the hexagon, and CP⁵ to CP² in two stages.

use toric_rigidity::reduction::models::{cube, simplex};
use toric_rigidity::reduction::{reduce, reduce_detailed, AffineReduction};
use toric_rigidity::{int, rat, IntMat};

fn main() -> anyhow::Result<()> {
    let c = cube(3, &int(1))?;
    let slice = AffineReduction::linear(IntMat::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]))?;
    let hexagon = reduce(&c, &slice)?;
    println!("cube along {slice}:\n  {hexagon}");
    for (k, level) in slice.subtorus().iter().zip(slice.levels()) {
        println!("  collapsed circle {k} at level {level}");
    }

    // Moving the level off center changes the quotient.
    let off = AffineReduction::new(
        IntMat::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]),
        vec![int(0), int(0), rat(1, 2)],
    )?;
    println!("off-center level:\n  {}", reduce(&c, &off)?);

    let cp5 = simplex(5, &int(1))?;
    let first = AffineReduction::linear(IntMat::from_i64(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
        &[-1, -1, -1, -1],
    ]))?;
    let second = AffineReduction::linear(IntMat::from_i64(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]))?;
    let cp4 = reduce(&cp5, &first)?;
    println!("CP⁵ → {cp4}");
    let composed = first.then(&second)?;
    let r = reduce_detailed(&cp5, &composed)?;
    println!("CP⁵ along {composed} (codim {}) → {}", composed.codim(), r.polytope);
    println!("  regular level: {}", r.is_regular());
    Ok(())
}
