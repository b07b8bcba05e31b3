use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMat;

/// `u · m · v = d` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    /// Nonzero diagonal entries of `d`, in order.
    pub fn factors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k)
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

/// Nonzero invariant factors of `m`.
pub fn invariant_factors(m: &IntMat) -> Vec<BigInt> {
    smith_normal_form(m).factors()
}

struct Reducer {
    d: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap(a, b);
        self.u.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in self.d.iter_mut() {
            row.swap(a, b);
        }
        for row in self.v.iter_mut() {
            row.swap(a, b);
        }
    }

    /// row[dst] += k · row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let t = &self.d[src][j] * k;
            self.d[dst][j] += t;
        }
        for j in 0..self.rows {
            let t = &self.u[src][j] * k;
            self.u[dst][j] += t;
        }
    }

    /// col[dst] += k · col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let t = &self.d[i][src] * k;
            self.d[i][dst] += t;
        }
        for i in 0..self.cols {
            let t = &self.v[i][src] * k;
            self.v[i][dst] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for x in self.d[r].iter_mut() {
            *x = -&*x;
        }
        for x in self.u[r].iter_mut() {
            *x = -&*x;
        }
    }

    /// Position of the entry of least absolute value in the trailing block,
    /// first in row-major order among ties.
    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.d[i][j];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d[bi][bj].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let k = self.rows.min(self.cols);
        for t in 0..k {
            loop {
                let Some((pi, pj)) = self.smallest_entry(t) else {
                    return;
                };
                if pi != t {
                    self.swap_rows(t, pi);
                }
                if pj != t {
                    self.swap_cols(t, pj);
                }

                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.d[i][t].is_zero() {
                        continue;
                    }
                    let q = self.d[i][t].div_floor(&self.d[t][t]);
                    self.add_row(i, t, &-q);
                    dirty |= !self.d[i][t].is_zero();
                }
                for j in t + 1..self.cols {
                    if self.d[t][j].is_zero() {
                        continue;
                    }
                    let q = self.d[t][j].div_floor(&self.d[t][t]);
                    self.add_col(j, t, &-q);
                    dirty |= !self.d[t][j].is_zero();
                }
                if dirty {
                    continue;
                }

                // Pivot must divide the whole trailing block.
                let bad_row = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !self.d[i][j].is_multiple_of(&self.d[t][t]))
                });
                match bad_row {
                    Some(i) => {
                        let one = BigInt::from(1);
                        self.add_row(t, i, &one);
                    }
                    None => break,
                }
            }
            if self.d[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn to_rows(m: &IntMat) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).entries().to_vec()).collect()
}

fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMat {
    let mut m = IntMat::zeros(rows.len(), cols);
    for (i, r) in rows.into_iter().enumerate() {
        for (j, x) in r.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

/// Smith normal form by repeated gcd pivoting.
///
/// Deterministic: the pivot is always the smallest-magnitude entry of the
/// trailing block, ties broken in row-major order. Diagonal entries are
/// nonnegative and each divides the next.
pub fn smith_normal_form(m: &IntMat) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        d: to_rows(m),
        u: to_rows(&IntMat::identity(rows)),
        v: to_rows(&IntMat::identity(cols)),
        rows,
        cols,
    };
    r.run();
    SmithForm {
        u: from_rows(r.u, rows),
        d: from_rows(r.d, cols),
        v: from_rows(r.v, cols),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn check(m: &IntMat) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "U·M·V ≠ D for {m}");
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        assert!(s.d.is_diagonal());
        let f = s.factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(f.iter().all(|x| x > &BigInt::zero()));
        s
    }

    #[test]
    fn diag_2_3() {
        let s = check(&IntMat::diag(&[2, 3]));
        assert_eq!(s.d, IntMat::diag(&[1, 6]));
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMat::identity(3));
        assert_eq!(s.d, IntMat::identity(3));
    }

    #[test]
    fn rank_one_block() {
        let s = check(&IntMat::from_i64(&[&[2, 4], &[4, 8]]));
        assert_eq!(s.d, IntMat::diag(&[2, 0]));
    }

    #[test]
    fn rectangular_and_empty() {
        check(&IntMat::from_i64(&[&[1, 0, 0, 1], &[0, 1, 1, 1]]));
        check(&IntMat::from_i64(&[&[6], &[4], &[10]]));
        check(&IntMat::zeros(2, 3));
        check(&IntMat::zeros(0, 2));
    }

    // Gcd of all k×k minors, computed by brute force.
    fn minor_gcd(m: &IntMat, k: usize) -> BigInt {
        use itertools::Itertools;
        let mut g = BigInt::zero();
        for rs in (0..m.rows()).combinations(k) {
            for cs in (0..m.cols()).combinations(k) {
                let mut sub = IntMat::zeros(k, k);
                for (a, &i) in rs.iter().enumerate() {
                    for (b, &j) in cs.iter().enumerate() {
                        sub.set(a, b, m.get(i, j).clone());
                    }
                }
                g = g.gcd(&sub.det());
            }
        }
        g
    }

    proptest! {
        #[test]
        fn smith_matches_minor_ladder(
            rows in 1usize..=4,
            cols in 1usize..=4,
            seed in proptest::collection::vec(-9i64..=9, 16),
        ) {
            let lits: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 4..i * 4 + cols].to_vec()).collect();
            let refs: Vec<&[i64]> = lits.iter().map(|r| r.as_slice()).collect();
            let m = IntMat::from_i64(&refs);
            let s = check(&m);
            let f = s.factors();
            let mut prod = BigInt::one();
            for k in 1..=rows.min(cols) {
                let g = minor_gcd(&m, k);
                if k <= f.len() {
                    prod *= &f[k - 1];
                    prop_assert_eq!(&prod, &g);
                } else {
                    prop_assert!(g.is_zero());
                }
            }
        }

        #[test]
        fn primitive_iff_first_factor_one(v in proptest::collection::vec(-12i64..=12, 1..5)) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let iv = super::super::IntVec::from_i64(&v);
            let col = IntMat::from_rows(1, &v.iter().map(|&x| super::super::IntVec::from_i64(&[x])).collect::<Vec<_>>()).unwrap();
            let f = invariant_factors(&col);
            prop_assert_eq!(super::super::is_primitive(&iv).unwrap(), f[0].is_one());
        }
    }
}
