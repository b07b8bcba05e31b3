use proptest::prelude::*;

use super::*;
use crate::lattice::{int, IntVec};
use crate::polytope::{product_all, Facet};

fn lit(dim: usize, facets: &[&[i64]]) -> Polytope {
    Polytope::new(
        dim,
        facets.iter().map(|n| Facet::new(IntVec::from_i64(n), int(1))).collect(),
    )
    .unwrap()
}

fn segment() -> Polytope {
    lit(1, &[&[1], &[-1]])
}

fn simplex2() -> Polytope {
    lit(2, &[&[1, 0], &[0, 1], &[-1, -1]])
}

fn hexagon() -> Polytope {
    lit(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, 1], &[-1, -1]])
}

/// Dense elimination over `bool`, independent of the packed code path.
fn dense_rank(op: &BoundaryOp) -> usize {
    let size = 1usize << op.n();
    let mut rows: Vec<Vec<bool>> = (0..size)
        .map(|e| {
            let mut r = vec![false; size];
            for &t in op.translations() {
                r[e ^ t as usize] ^= true;
            }
            r
        })
        .collect();
    let mut rank = 0;
    for c in 0..size {
        let Some(p) = (rank..size).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn segment_operator_vanishes() {
    let op = BoundaryOp::new(&segment()).unwrap();
    assert_eq!(op.translations(), &[1, 1]);
    assert!(op.is_zero());
    assert_eq!(hf_even(&segment()), Ok(2));
    assert_eq!(hf(&segment()), Ok(2));
}

#[test]
fn simplex_translations_and_hf() {
    let op = BoundaryOp::new(&simplex2()).unwrap();
    assert_eq!(op.translations(), &[0b01, 0b10, 0b11]);
    assert_eq!(hf_even(&simplex2()), Err(FloerError::OddPolytope(3)));
    let r = hf_detailed(&simplex2()).unwrap();
    assert_eq!(r.value, 2);
    assert_eq!(r.square, Some(RankNullity { rank: 6, nullity: 10 }));
}

#[test]
fn simplex_square_is_ten_minus_six() {
    let p = product(&simplex2(), &simplex2());
    assert_eq!(
        hf_even_detailed(&p),
        Ok(RankNullity { rank: 6, nullity: 10 })
    );
    assert_eq!(hf_even(&p), Ok(4));
}

#[test]
fn symmetric_even_polytopes() {
    let square = product(&segment(), &segment());
    let cube = product_all([&segment(), &segment(), &segment()]);
    for (p, expected) in [(square, 4), (cube, 8), (hexagon(), 4)] {
        assert!(BoundaryOp::new(&p).unwrap().is_zero());
        assert_eq!(hf(&p), Ok(expected));
    }
}

#[test]
fn dimension_limit() {
    let cube = |n: usize| product_all(std::iter::repeat_n(&segment(), n).collect::<Vec<_>>());
    let op = BoundaryOp::new(&cube(4)).unwrap();
    assert_eq!(
        rank_gf2_with_limit(&op, 3),
        Err(FloerError::DimensionLimit { n: 4, limit: 3 })
    );
    let big = BoundaryOp::new(&cube(14)).unwrap();
    assert!(matches!(rank_gf2(&big), Err(FloerError::DimensionLimit { n: 14, .. })));
}

#[test]
fn point_polytope() {
    assert_eq!(hf(&Polytope::point()), Ok(1));
}

#[test]
fn display_sign_vectors() {
    let v = CFVector::basis(3, 0b010);
    assert_eq!(v.to_string(), "(+−+)");
    assert_eq!(CFVector::zero(2).to_string(), "0");
}

fn arb_op(max_n: usize, max_d: usize) -> impl Strategy<Value = BoundaryOp> {
    (0..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0u64..(1u64 << n), 0..=max_d)
            .prop_map(move |ts| BoundaryOp::from_translations(n, ts))
    })
}

/// Random valid polytope with offsets 1 and distinct primitive normals.
fn arb_polytope(max_n: usize, max_extra: usize) -> impl Strategy<Value = Polytope> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), n + 1..=n + 1 + max_extra)
            .prop_filter_map("invalid", move |raw| {
                let mut facets: Vec<Facet> = Vec::new();
                for v in raw {
                    let v = IntVec::from_i64(&v);
                    if v.is_zero() || !crate::lattice::is_primitive(&v).unwrap() || facets.iter().any(|f| f.normal == v) {
                        continue;
                    }
                    facets.push(Facet::new(v, int(1)));
                }
                Polytope::new(n, facets).ok()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn packed_rank_matches_dense(op in arb_op(6, 12)) {
        let r = rank_gf2(&op).unwrap();
        prop_assert_eq!(r.rank, dense_rank(&op));
        prop_assert_eq!(r.rank + r.nullity, 1 << op.n());
    }

    #[test]
    fn square_is_zero_or_identity(op in arb_op(5, 10)) {
        let d = op.translations().len();
        for eps in 0..(1usize << op.n()) {
            let e = CFVector::basis(op.n(), eps);
            let twice = op.apply(&op.apply(&e));
            if d % 2 == 0 {
                prop_assert!(twice.is_zero());
            } else {
                prop_assert_eq!(twice, e);
            }
        }
    }

    #[test]
    fn kunneth(a in arb_polytope(4, 4), b in arb_polytope(4, 4)) {
        prop_assume!(a.is_even() && b.is_even() && a.dim() + b.dim() <= 8);
        let p = product(&a, &b);
        prop_assert_eq!(hf_even(&p).unwrap(), hf_even(&a).unwrap() * hf_even(&b).unwrap());
    }

    #[test]
    fn even_shifts_and_permutations_do_not_matter(p in arb_polytope(4, 4), k in 0usize..16) {
        let op = BoundaryOp::new(&p).unwrap();
        let mut shifted: Vec<u64> = op.translations().to_vec();
        let len = shifted.len().max(1);
        shifted.rotate_left(k % len);
        let permuted = BoundaryOp::from_translations(op.n(), shifted);
        prop_assert_eq!(rank_gf2(&op), rank_gf2(&permuted));
        // Adding 2·e₀ to the first normal keeps its parity.
        let facets: Vec<Facet> = p.facets().iter().enumerate().map(|(i, f)| {
            if i == 0 {
                let mut e = vec![0i64; p.dim()];
                e[0] = 2;
                Facet::new(f.normal.add(&IntVec::from_i64(&e)), f.offset.clone())
            } else {
                f.clone()
            }
        }).collect();
        if let Ok(q) = Polytope::new(p.dim(), facets) {
            prop_assert_eq!(BoundaryOp::new(&q).unwrap(), op);
        }
    }

    #[test]
    fn hf_of_even_matches_hf_even(p in arb_polytope(3, 4)) {
        prop_assume!(p.is_even());
        prop_assert_eq!(hf(&p).unwrap() as i64, hf_even(&p).unwrap());
        let sq = hf_even(&product(&p, &p)).unwrap();
        prop_assert_eq!(sq, hf_even(&p).unwrap().pow(2));
    }
}
