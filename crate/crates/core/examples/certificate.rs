//! A hand-built certificate: the real part of the hexagon surface against its
//! centered fiber, from three copies of the equator of CP¹.

use toric_rigidity::certificate::{verify, BaseFact, BaseKind, CertNode, Certificate, ClaimKind};
use toric_rigidity::io::CertificateDocument;
use toric_rigidity::reduction::{models::cp1, AffineReduction};
use toric_rigidity::{int, rat, IntMat};

fn main() -> anyhow::Result<()> {
    let equator = || -> anyhow::Result<CertNode> {
        Ok(CertNode::Leaf(BaseFact {
            kind: BaseKind::Cp1,
            instance: cp1(&int(1), &int(1))?,
            basis_change: None,
        }))
    };
    let slice = AffineReduction::linear(IntMat::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]))?;
    let cert = Certificate {
        kind: ClaimKind::TR,
        target: None,
        marked_point: Some(vec![int(0), int(0)]),
        tree: CertNode::Reduce {
            slice,
            child: Box::new(CertNode::Product(vec![equator()?, equator()?, equator()?])),
        },
    };
    print!("{}", verify(&cert)?);

    println!("\nas a document:\n{}", CertificateDocument::from_certificate("hexagon", &cert).to_json());

    let mut wrong = cert.clone();
    wrong.marked_point = Some(vec![rat(1, 3), int(0)]);
    println!("claiming a different fiber: {}", verify(&wrong).unwrap_err());
    Ok(())
}
