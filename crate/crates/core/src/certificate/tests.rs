use super::*;
use crate::lattice::{int, rat, IntVec};
use crate::polytope::{product_all, Facet};
use crate::reduction::models::*;

fn leaf(kind: BaseKind, instance: Polytope) -> CertNode {
    CertNode::Leaf(BaseFact {
        kind,
        instance,
        basis_change: None,
    })
}

fn reduce_node(rows: &[&[i64]], child: CertNode) -> CertNode {
    CertNode::Reduce {
        slice: AffineReduction::linear(IntMat::from_i64(rows)).unwrap(),
        child: Box::new(child),
    }
}

fn poly(dim: usize, facets: Vec<(&[i64], Rational)>) -> Polytope {
    Polytope::new(
        dim,
        facets.into_iter().map(|(n, a)| Facet::new(IntVec::from_i64(n), a)).collect(),
    )
    .unwrap()
}

fn unit_cp1() -> Polytope {
    cp1(&int(1), &int(1)).unwrap()
}

fn hexagon() -> Polytope {
    reduction_of_cube()
}

fn reduction_of_cube() -> Polytope {
    poly(
        2,
        vec![
            (&[1, 0], int(1)),
            (&[-1, 0], int(1)),
            (&[0, 1], int(1)),
            (&[0, -1], int(1)),
            (&[1, 1], int(1)),
            (&[-1, -1], int(1)),
        ],
    )
}

fn blowup() -> Polytope {
    poly(
        2,
        vec![(&[1, 0], int(1)), (&[0, 1], int(1)), (&[-1, -1], int(1)), (&[1, 1], int(1))],
    )
}

fn hexagon_tr() -> Certificate {
    Certificate {
        kind: ClaimKind::TR,
        target: Some(hexagon()),
        marked_point: Some(vec![int(0), int(0)]),
        tree: reduce_node(
            &[&[1, 0], &[0, 1], &[1, 1]],
            CertNode::Product(vec![
                leaf(BaseKind::Cp1, unit_cp1()),
                leaf(BaseKind::Cp1, unit_cp1()),
                leaf(BaseKind::Cp1, unit_cp1()),
            ]),
        ),
    }
}

fn blowup_continuum(alpha: &Rational, lambda: &Rational) -> Certificate {
    let target = poly(
        2,
        vec![
            (&[1, 0], int(1)),
            (&[0, 1], int(1)),
            (&[-1, -1], int(1)),
            (&[1, 1], int(1) + alpha),
            (&[0, -1], int(1) - int(2) * alpha),
        ],
    );
    Certificate {
        kind: ClaimKind::TT,
        target: Some(target),
        marked_point: None,
        tree: reduce_node(
            &[&[1, 0], &[0, 1], &[0, 1], &[1, 1]],
            CertNode::Product(vec![
                leaf(
                    BaseKind::OMinusOne,
                    o_minus_one(&int(1), &(int(1) + lambda), &(int(1) + alpha)).unwrap(),
                ),
                leaf(BaseKind::Cp1, cp1(&int(1), &(int(1) - int(2) * alpha)).unwrap()),
                leaf(
                    BaseKind::Cp1,
                    cp1(&(int(1) + int(4) * alpha - int(2) * lambda), &int(1)).unwrap(),
                ),
            ]),
        ),
    }
}

fn non_fano(lambda: &Rational) -> Certificate {
    let target = poly(
        2,
        vec![
            (&[1, 0], int(1)),
            (&[0, 1], int(1)),
            (&[0, -1], int(1)),
            (&[-1, -3], int(3)),
            (&[-1, -2], int(3)),
        ],
    );
    let cp112 = poly(
        2,
        vec![
            (&[1, 0], int(1)),
            (&[0, 1], int(1) + lambda),
            (&[-1, -2], int(1) + int(2) * lambda),
        ],
    );
    Certificate {
        kind: ClaimKind::TT,
        target: Some(target),
        marked_point: Some(vec![lambda.clone(), int(0)]),
        tree: reduce_node(
            &[&[1, 0], &[0, 1], &[0, 1], &[-1, -2], &[0, -1]],
            CertNode::Product(vec![
                leaf(BaseKind::WeightedProjectiveOneM(vec![1, 1, 2]), cp112),
                leaf(BaseKind::Cp1, unit_cp1()),
                leaf(
                    BaseKind::OMinusOne,
                    o_minus_one(&int(3), &(int(3) - lambda), &int(3)).unwrap(),
                ),
            ]),
        ),
    }
}

#[test]
fn hexagon_real_part_bound() {
    let c = verify(&hexagon_tr()).unwrap();
    assert_eq!(c.bound, 4);
    assert_eq!(c.kind, ClaimKind::TR);
    assert_eq!(c.marked_point, vec![int(0), int(0)]);
    assert_eq!(c.citations.len(), 3);
    assert_eq!(c.hypotheses, vec![PRODUCT_HYPOTHESIS.to_string()]);
}

#[test]
fn cp4_from_cp5() {
    let cert = Certificate {
        kind: ClaimKind::TR,
        target: Some(simplex(4, &int(1)).unwrap()),
        marked_point: None,
        tree: reduce_node(
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, -1, -1, -1]],
            leaf(BaseKind::CliffordTorus, simplex(5, &int(1)).unwrap()),
        ),
    };
    let c = verify(&cert).unwrap();
    assert_eq!(c.bound, 4);
    assert!(c.hypotheses.is_empty());
}

#[test]
fn even_dimensional_projective_space_has_no_tr_fact() {
    let cert = Certificate {
        kind: ClaimKind::TR,
        target: None,
        marked_point: None,
        tree: leaf(BaseKind::CliffordTorus, simplex(4, &int(1)).unwrap()),
    };
    assert!(matches!(verify(&cert), Err(CertificateError::UnsupportedClaim { n: 4, .. })));
}

#[test]
fn blowup_from_cp1112() {
    let cert = Certificate {
        kind: ClaimKind::TT,
        target: Some(blowup()),
        marked_point: Some(vec![int(0), int(0)]),
        tree: reduce_node(
            &[&[1, 0], &[0, 1], &[-1, -1]],
            leaf(
                BaseKind::WeightedProjectiveOneM(vec![1, 1, 1, 2]),
                weighted_projective(&[1, 1, 1, 2], &int(1)).unwrap(),
            ),
        ),
    };
    assert_eq!(verify(&cert).unwrap().bound, 4);
}

#[test]
fn continuum_bound_and_point() {
    let (alpha, lambda) = (rat(1, 4), rat(1, 4));
    let c = verify(&blowup_continuum(&alpha, &lambda)).unwrap();
    assert_eq!(c.bound, 4);
    assert_eq!(c.marked_point, vec![-&alpha + &lambda, -alpha]);
}

#[test]
fn continuum_interval() {
    let alpha = rat(1, 4);
    for (p, q) in [(1, 8), (1, 4), (5, 16)] {
        assert!(verify(&blowup_continuum(&alpha, &rat(p, q))).is_ok(), "λ = {p}/{q}");
    }
    for (p, q) in [(3, 8), (1, 2)] {
        assert!(
            matches!(
                verify(&blowup_continuum(&alpha, &rat(p, q))),
                Err(CertificateError::ReducedPolytopeMismatch(_))
            ),
            "λ = {p}/{q}"
        );
    }
}

#[test]
fn non_fano_interval() {
    for (p, q) in [(5, 4), (3, 2), (7, 4)] {
        let c = verify(&non_fano(&rat(p, q))).unwrap();
        assert_eq!(c.bound, 4);
    }
    assert!(matches!(
        verify(&non_fano(&rat(5, 2))),
        Err(CertificateError::ReducedPolytopeMismatch(_))
    ));
}

#[test]
fn hirzebruch() {
    let ambient_wp = weighted_projective(&[1, 1, 2], &int(1)).unwrap();
    let cert = Certificate {
        kind: ClaimKind::TT,
        target: Some(poly(
            2,
            vec![(&[1, 0], int(1)), (&[0, 1], rat(1, 2)), (&[-1, -2], int(1)), (&[0, -1], rat(1, 2))],
        )),
        marked_point: Some(vec![int(0), int(0)]),
        tree: reduce_node(
            &[&[1, 0], &[0, 1], &[0, 1]],
            CertNode::Product(vec![
                leaf(BaseKind::WeightedProjectiveOneM(vec![1, 1, 2]), ambient_wp),
                leaf(BaseKind::Cp1, cp1(&rat(1, 2), &rat(1, 2)).unwrap()),
            ]),
        ),
    };
    assert_eq!(verify(&cert).unwrap().bound, 4);
}

#[test]
fn leaf_failures() {
    // A rectangle is not a dilate of the unit CP¹ × ... model: wrong kind.
    let cert = Certificate {
        kind: ClaimKind::TT,
        target: None,
        marked_point: None,
        tree: leaf(BaseKind::CliffordTorus, cube(2, &int(1)).unwrap()),
    };
    assert!(matches!(verify(&cert), Err(CertificateError::ModelMismatch { .. })));

    let cert = Certificate {
        kind: ClaimKind::TT,
        target: None,
        marked_point: None,
        tree: leaf(
            BaseKind::WeightedProjectiveOneM(vec![2, 1, 1]),
            weighted_projective(&[1, 1, 1], &int(1)).unwrap(),
        ),
    };
    assert_eq!(verify(&cert), Err(CertificateError::UnsupportedWeights(vec![2, 1, 1])));

    let cert = Certificate {
        kind: ClaimKind::TR,
        target: None,
        marked_point: None,
        tree: leaf(BaseKind::OMinusOne, o_minus_one(&int(1), &int(1), &int(1)).unwrap()),
    };
    assert!(matches!(verify(&cert), Err(CertificateError::UnsupportedClaim { .. })));
}

#[test]
fn basis_change_matches_rotated_instance() {
    // CP² with normals (−1,0), (0,−1), (1,1): the model after ν ↦ −ν.
    let rotated = poly(2, vec![(&[-1, 0], int(1)), (&[0, -1], int(1)), (&[1, 1], int(1))]);
    let fact = |b: Option<IntMat>| Certificate {
        kind: ClaimKind::TT,
        target: None,
        marked_point: None,
        tree: CertNode::Leaf(BaseFact {
            kind: BaseKind::CliffordTorus,
            instance: rotated.clone(),
            basis_change: b,
        }),
    };
    assert!(matches!(verify(&fact(None)), Err(CertificateError::ModelMismatch { .. })));
    let minus = IntMat::from_i64(&[&[-1, 0], &[0, -1]]);
    assert_eq!(verify(&fact(Some(minus))).unwrap().bound, 4);
    let bad = IntMat::from_i64(&[&[2, 0], &[0, 1]]);
    assert_eq!(verify(&fact(Some(bad))), Err(CertificateError::BadBasisChange(2)));
}

#[test]
fn off_center_slice_is_rejected() {
    // x₃ = x₁ + x₂ + 1/2 misses the marked point (0,0,0) of the cube.
    let slice = AffineReduction::new(
        IntMat::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]),
        vec![int(0), int(0), rat(1, 2)],
    )
    .unwrap();
    let cert = Certificate {
        kind: ClaimKind::TR,
        target: None,
        marked_point: None,
        tree: CertNode::Reduce {
            slice,
            child: Box::new(CertNode::Product(vec![
                leaf(BaseKind::Cp1, unit_cp1()),
                leaf(BaseKind::Cp1, unit_cp1()),
                leaf(BaseKind::Cp1, unit_cp1()),
            ])),
        },
    };
    assert!(matches!(verify(&cert), Err(CertificateError::MarkedPointMismatch(_))));
}

#[test]
fn bounds_divide_through_stages() {
    // CP⁵ → CP⁴ → CP³: 2⁵ / 2 / 2 = 2³.
    let cert = Certificate {
        kind: ClaimKind::TT,
        target: Some(simplex(3, &int(1)).unwrap()),
        marked_point: None,
        tree: reduce_node(
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]],
            reduce_node(
                &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, -1, -1, -1]],
                leaf(BaseKind::CliffordTorus, simplex(5, &int(1)).unwrap()),
            ),
        ),
    };
    assert_eq!(verify(&cert).unwrap().bound, 8);
}

#[test]
fn bound_not_integral() {
    // CP⁵ cut down to a segment: the real-part bound 8 is not divisible by 2⁴.
    let cert = Certificate {
        kind: ClaimKind::TR,
        target: Some(unit_cp1()),
        marked_point: None,
        tree: reduce_node(
            &[&[1], &[-1], &[0], &[0], &[0]],
            leaf(BaseKind::CliffordTorus, simplex(5, &int(1)).unwrap()),
        ),
    };
    assert_eq!(verify(&cert), Err(CertificateError::BoundNotIntegral { bound: 8, codim: 4 }));
}

#[test]
fn slice_through_a_corner_is_degenerate() {
    // The diagonal of the cube passes through two of its corners.
    let cert = Certificate {
        kind: ClaimKind::TT,
        target: None,
        marked_point: None,
        tree: reduce_node(
            &[&[1], &[1], &[1]],
            CertNode::Product(vec![
                leaf(BaseKind::Cp1, unit_cp1()),
                leaf(BaseKind::Cp1, unit_cp1()),
                leaf(BaseKind::Cp1, unit_cp1()),
            ]),
        ),
    };
    assert!(matches!(verify(&cert), Err(CertificateError::ReducedPolytopeMismatch(_))));
}

#[test]
fn non_primitive_image_is_reported() {
    let cert = Certificate {
        kind: ClaimKind::TT,
        target: None,
        marked_point: None,
        tree: reduce_node(
            &[&[1], &[1], &[1]],
            leaf(BaseKind::CliffordTorus, simplex(3, &int(1)).unwrap()),
        ),
    };
    // The slanted facet of CP³ becomes −3y + 1.
    assert!(matches!(
        verify(&cert),
        Err(CertificateError::Reduction(ReductionError::NonPrimitiveImage { facet: 3, .. }))
    ));
}

#[test]
fn auto_certificates() {
    let blow = auto_certify_monotone(&blowup()).unwrap();
    match &blow.tree {
        CertNode::Reduce { child, .. } => match child.as_ref() {
            CertNode::Leaf(f) => assert_eq!(f.kind, BaseKind::WeightedProjectiveOneM(vec![1, 1, 1, 2])),
            _ => panic!("expected a leaf"),
        },
        _ => panic!("expected a reduction"),
    }
    for (p, n) in [
        (blowup(), 2),
        (hexagon(), 2),
        (simplex(2, &int(1)).unwrap(), 2),
        (simplex(4, &int(1)).unwrap(), 4),
        (cube(3, &int(1)).unwrap(), 3),
        (product_all([&simplex(2, &int(1)).unwrap(), &unit_cp1()]), 3),
        (simplex(2, &rat(1, 3)).unwrap(), 2),
    ] {
        let cert = auto_certify_monotone(&p).unwrap();
        let c = verify(&cert).unwrap();
        assert_eq!(c.bound, 1 << n, "{p}");
        assert!(c.polytope.same_as(&p));
        assert!(c.hypotheses.is_empty());
    }
}

#[test]
fn auto_certify_errors() {
    let p_alpha = verify(&blowup_continuum(&rat(1, 4), &rat(1, 4))).unwrap().polytope;
    assert_eq!(auto_certify_monotone(&p_alpha), Err(CertificateError::NotMonotone));
    let o = o_minus_one(&int(1), &int(1), &int(1)).unwrap();
    assert_eq!(
        auto_certify_monotone(&o),
        Err(CertificateError::Reduction(ReductionError::NotCompact))
    );
    let cp112 = weighted_projective(&[1, 1, 2], &int(1)).unwrap();
    assert_eq!(
        auto_certify_monotone(&cp112),
        Err(CertificateError::Reduction(ReductionError::NotDelzant))
    );
}

#[test]
fn tr_lower_bounds() {
    let seg = unit_cp1();
    for (p, b) in [(hexagon(), 4), (simplex(2, &int(1)).unwrap(), 2), (seg, 2)] {
        let r = hf_lower_bound_tr(&p).unwrap();
        assert_eq!(r.bound, b);
        assert_eq!(r.caveat, TR_CAVEAT);
    }
}

#[test]
fn verification_is_deterministic() {
    let c = blowup_continuum(&rat(1, 4), &rat(1, 8));
    assert_eq!(verify(&c), verify(&c.clone()));
}
