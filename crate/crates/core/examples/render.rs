//! Writes an SVG of the blown-up plane with its centered fiber.
//!
//! `cargo run --example render -- out.svg`

use toric_rigidity::io::render_svg;
use toric_rigidity::polytope::equidistant_point;
use toric_rigidity::Polytope;

fn main() -> anyhow::Result<()> {
    let p = Polytope::from_literals(
        2,
        &[(&[1, 0], (1, 1)), (&[0, 1], (1, 1)), (&[-1, -1], (1, 1)), (&[0, -1], (1, 1)), (&[-1, 0], (1, 1))],
    )?;
    let center = equidistant_point(&p).map(|e| vec![e.point]).unwrap_or_default();
    let svg = render_svg(&p, "CP² blown up twice", &center)?;
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &svg)?;
            println!("wrote {path} ({} bytes)", svg.len());
        }
        None => print!("{svg}"),
    }
    Ok(())
}
