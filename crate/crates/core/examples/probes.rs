//! Probe scans on the triangle: the center survives, other points do not.

use toric_rigidity::probes::probe_scan;
use toric_rigidity::reduction::models::simplex;
use toric_rigidity::{int, rat};

fn main() -> anyhow::Result<()> {
    let triangle = simplex(2, &int(1))?;
    let points = [
        [int(0), int(0)],
        [rat(-1, 2), int(0)],
        [rat(1, 4), rat(1, 4)],
        [rat(-1, 8), rat(1, 16)],
    ];
    for u in points {
        let label = format!("({}, {})", u[0], u[1]);
        match probe_scan(&triangle, &u, 3) {
            Some(hit) => println!("{label:<12} displaced by {hit}"),
            None => println!("{label:<12} no probe with |wᵢ| ≤ 3"),
        }
    }
    Ok(())
}
