use num_traits::Zero;

use super::{Rational, RationalVec};

/// Outcome of solving a rational linear system `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(RationalVec),
    /// Consistent, but with free variables. Carries one particular solution
    /// (free variables set to zero).
    Underdetermined(RationalVec),
    Inconsistent,
}

impl Solution {
    pub fn unique(self) -> Option<RationalVec> {
        match self {
            Solution::Unique(x) => Some(x),
            _ => None,
        }
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [RationalVec], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..m[i].len() {
                let t = &m[r][j] * &f;
                m[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A x = b` exactly. `a` is given as rows; every row has the same
/// length (the number of unknowns), which may be zero.
pub fn solve_rational(a: &[RationalVec], b: &[Rational], unknowns: usize) -> Solution {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let mut m: Vec<RationalVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), unknowns, "ragged system");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, unknowns);
    // A row of zeros with nonzero right-hand side means no solution.
    if m[pivots.len()..].iter().any(|row| !row[unknowns].is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][unknowns].clone();
    }
    if pivots.len() == unknowns {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined(x)
    }
}

/// Rank of a rational matrix given as rows.
pub fn rank_rational(rows: &[RationalVec]) -> usize {
    let Some(cols) = rows.first().map(|r| r.len()) else {
        return 0;
    };
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

#[cfg(test)]
fn identity(n: usize) -> Vec<RationalVec> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { crate::lattice::int(1) } else { Rational::zero() })
                .collect()
        })
        .collect()
}
