//! Weight vectors of monotone polytopes and the certificates built from them.

use toric_rigidity::certificate::{auto_certify_monotone, verify, CertNode};
use toric_rigidity::reduction::monotone_weights;
use toric_rigidity::Polytope;

fn main() -> anyhow::Result<()> {
    let blowup = Polytope::from_literals(2, &[(&[1, 0], (1, 1)), (&[0, 1], (1, 1)), (&[-1, -1], (1, 1)), (&[0, -1], (1, 1))])?;
    let w = monotone_weights(&blowup)?;
    let terms: Vec<String> = w
        .m
        .iter()
        .enumerate()
        .map(|(j, m)| if *m == 1 { format!("ν{}", j + 1) } else { format!("{m}ν{}", j + 1) })
        .collect();
    println!("{} = 0, pivot ν{}", terms.join(" + "), w.pivot + 1);

    let cert = auto_certify_monotone(&blowup)?;
    if let CertNode::Reduce { slice, child } = &cert.tree {
        if let CertNode::Leaf(leaf) = child.as_ref() {
            println!("base: {} in dimension {}", leaf.kind.name(), leaf.instance.dim());
        }
        println!("slice: {slice}");
    }
    print!("{}", verify(&cert)?);
    Ok(())
}
